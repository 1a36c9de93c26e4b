#pragma once

// JSON encodings used by the command-line front end. Key order is fixed
// (ordered_json) and output is compact, so dumps are byte-stable.

#include <optional>
#include <string>

#include <json.hpp>

#include "quandle/cocycle.hpp"
#include "quandle/integer_linalg.hpp"
#include "quandle/quandle_core.hpp"
#include "quandle/structure_group.hpp"

namespace quandle {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& x);
Json to_json(const AbelianInvariants& g);
Json to_json(const PackedElement& x);
Json to_json(const KernelVector& k);
Json to_json(const AxiomViolation& v);
Json to_json(const RewriteStep& step);
Json to_json(const std::vector<std::vector<std::int64_t>>& partition);

struct Report {
  std::string command;
  Json context = Json::object();
  Json result = Json::object();
  std::string status = "ok";
  std::optional<Json> error;

  Json to_json() const;
  std::string dump() const { return to_json().dump(); }

  void fail(const std::string& kind, const std::string& message);
};

}  // namespace quandle
