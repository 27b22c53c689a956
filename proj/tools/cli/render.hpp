#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "eval.hpp"

namespace jhall::cli {

/// Requested output basis; each applies only to values of its kind.
struct OutputBasis {
  std::optional<DerivedBasis> derived;
  std::optional<SymBasis> sym;
};

/// Parses natural|normal|m|e|p|P. Throws std::invalid_argument.
OutputBasis parse_basis(const std::string& name);

Value to_output_basis(const Value& v, const OutputBasis& basis, const SymRing& ring);

/// Human-readable form, terms by decreasing total weight and then decreasing
/// lexicographic key. Zero renders as "0".
std::string render_text(const Value& v);

/// One record per term; coefficients as v-coefficient lists, lowest degree
/// first. A scalar is a single record.
std::vector<nlohmann::json> render_json(const Value& v);

/// {"num": [...], "den": [...]}
nlohmann::json scalar_json(const Scalar& s);
nlohmann::json partition_json(const Partition& p);

}  // namespace jhall::cli
