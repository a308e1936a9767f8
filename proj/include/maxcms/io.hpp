#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxcms/approx2.hpp"
#include "maxcms/core.hpp"
#include "maxcms/rational.hpp"

namespace maxcms {

// Instance document (JSON):
//
// {
//   "objects": [{"id": "a", "weight": "3/2", "label": "low"}, ...],
//   "labels": ["low", "high"],                        optional, see below
//   "object_order": {"kind": "pairs", "pairs": [["a", "b"], ...]}    a <= b, closed transitively
//                 | {"kind": "vectors", "vectors": {"a": ["1", "0.5"], ...}}   componentwise
//   "label_order": {"kind": "total", "chain": ["low", "high"]}       least first
//                | {"kind": "realizer2", "chains": [[...], [...]]}   intersection of two chains
//                | {"kind": "pairs", "labels": [...], "pairs": [["low", "high"], ...]}
// }
//
// Label indices follow "labels" when present, else the first chain (or the
// "labels" list of the pairs kind). Weights and coordinates are decimal or
// "p/q" strings (plain JSON integers are accepted too) and are parsed exactly.

/// Throws ParseError on any schema violation, including relations that do not
/// close into the required order.
Instance parse_instance(const nlohmann::json& doc);
Instance parse_instance_text(const std::string& text);
Instance read_instance_file(const std::string& path);

/// Writes "pairs" for the object order (its cover pairs) and "total",
/// "realizer2" or "pairs" for the label order depending on the realizer.
nlohmann::json instance_to_json(const Instance& inst);

/// Two-space indented, keys sorted, trailing newline.
std::string dump_document(const nlohmann::json& doc);

struct SolutionFile {
  std::string algorithm;
  std::vector<std::string> kept;
  std::vector<std::string> removed;
  Rational kept_weight;
  Rational removed_weight;
  Rational total_weight;
  std::optional<ApproxReport> approx;
};

/// Builds the solution record for a kept index set. Throws NotAcceptable if
/// the kept set fails the acceptability re-check.
SolutionFile make_solution(const Instance& inst, std::string algorithm,
                           const std::vector<std::size_t>& kept,
                           std::optional<ApproxReport> approx = std::nullopt);

nlohmann::json solution_to_json(const SolutionFile& s);
SolutionFile parse_solution(const nlohmann::json& doc);

}  // namespace maxcms
