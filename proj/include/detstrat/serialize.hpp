#pragma once

#include "detstrat/laurent_poly.hpp"
#include "detstrat/partition.hpp"
#include "detstrat/space.hpp"
#include "detstrat/strata_matrix.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace detstrat {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json to_json(const Integer& v);
Integer integer_from_json(const Json& j);

// [5,3,3,2]
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json to_json(const std::vector<Partition>& ps);

// {"min_exp": e0, "coeffs": [c0, c1, ...]}
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

// {"family": "general", "m": 3, "n": 2} or {"family": "symm", "n": 4}
Json params_json(const SpaceSpec& space);

// {"family": ..., "params": ..., "kind": ..., "order": N+1, "rows": [[...], ...]}
Json table_json(const SpaceSpec& space, std::string_view kind, const StrataMatrix& m);
StrataMatrix matrix_from_table_json(const Json& j);

// {"family": ..., "params": ..., "kind": "ic", "polys": [{"p": 0, "min_exp": .., "coeffs": [..]}, ...]}
Json ic_table_json(const SpaceSpec& space, const std::vector<LaurentPoly>& polys);

// Right-aligned columns, one row per line.
std::string render_text(const StrataMatrix& m);
// Header row of stratum indices, then the rows.
std::string render_csv(const StrataMatrix& m);
// "exponent,coefficient" per nonzero term.
std::string render_csv(const LaurentPoly& p);

}  // namespace detstrat
