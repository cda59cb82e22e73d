#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "staircase/decomposition.hpp"
#include "staircase/hilbert.hpp"
#include "staircase/ideal.hpp"
#include "staircase/matrix.hpp"
#include "staircase/posetlab.hpp"

namespace staircase::io {

using nlohmann::json;

/// Malformed input. The message starts with a JSON path such as
/// "ideal.json:$.gens[2][1]".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_file(const std::filesystem::path& file);

/// {"vars": n, "gens": [[e1, ..., en], ...]}; minimalized on load.
MonomialIdeal ideal_from_json(const json& j, const std::string& path = "$");
json to_json(const MonomialIdeal& ideal);

/// [ideal, ideal, ...] over a common ring.
std::vector<MonomialIdeal> ideals_from_json(const json& j, const std::string& path = "$");

/// {"rows": d, "cols": n, "entries": [[...], ...]}
FiberMatrix matrix_from_json(const json& j, const std::string& path = "$");
json to_json(const FiberMatrix& a);

/// {"vars": n, "points": [[...], ...]}
FiniteOrderIdeal order_ideal_from_json(const json& j, const std::string& path = "$");
json to_json(const FiniteOrderIdeal& o);

ExponentVector vector_from_json(const json& j, const std::string& path, std::size_t expected_len);
json to_json(const ExponentVector& u);

/// [{"tau": [...], "gens": [[...], ...]}, ...]
json to_json(const std::vector<PrimaryComponent>& comps);
/// Sorted [[exponent tuple, coefficient], ...]
json to_json(const HilbertNumerator& num);

/// Comma separated nonnegative integers, e.g. "1,3,5,2".
ExponentVector parse_vector(const std::string& text, const std::string& what);

}  // namespace staircase::io
