#include "quandle/report.hpp"

namespace quandle {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json to_json(const AbelianInvariants& g) {
  Json torsion = Json::array();
  for (const Integer& t : g.torsion) torsion.push_back(to_json(t));
  return Json{{"rank", g.rank}, {"torsion", torsion}};
}

Json to_json(const PackedElement& x) { return Json{{"v", x.v}, {"a", x.a}}; }

Json to_json(const KernelVector& k) { return Json(k.v); }

Json to_json(const AxiomViolation& v) { return Json{{"axiom", v.axiom_name()}, {"witness", v.witness}}; }

Json to_json(const RewriteStep& step) {
  Json j{{"rule", std::string(rule_name(step.rule))}, {"word", format_word(step.word)}};
  if (!step.detail.empty()) j["detail"] = step.detail;
  return j;
}

Json to_json(const std::vector<std::vector<std::int64_t>>& partition) { return Json(partition); }

Json Report::to_json() const {
  Json j{{"command", command}, {"context", context}, {"result", result}, {"status", status}};
  if (error) j["error"] = *error;
  return j;
}

void Report::fail(const std::string& kind, const std::string& message) {
  status = "error";
  error = Json{{"kind", kind}, {"message", message}};
}

}  // namespace quandle
