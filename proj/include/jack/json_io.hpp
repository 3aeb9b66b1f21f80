#pragma once

// JSON encodings of the library's value types.
//
// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings; readers accept both. Keys keep insertion order so equal
// values always serialize to identical bytes.

#include <json.hpp>

#include "jack/alpha.hpp"
#include "jack/hooks.hpp"
#include "jack/lattice.hpp"
#include "jack/lr.hpp"
#include "jack/partition.hpp"
#include "jack/symfunc.hpp"

namespace jack::json {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& z);
Integer integer_from_json(const Json& j);

// [num, den]
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// [[num, den], ...] in ascending powers of alpha.
Json coeffs_to_json(const AlphaPoly& p);
AlphaPoly poly_from_json(const Json& j);

// {"num": [...], "den": [...]}
Json to_json(const AlphaRat& f);
AlphaRat alpharat_from_json(const Json& j);

// {"constant": [num, den], "factors": [[x, y, mult], ...]}
Json to_json(const LinearFactorization& f);
LinearFactorization factorization_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(BoxCoord b);
BoxCoord box_from_json(const Json& j);

// {"basis": ..., "degree": n, "terms": [{"partition": [...], "coeff": ...}]}
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

// {"factors": [[x, y, order], ...]}, order > 0 for zeros.
Json to_json(const LatticeRational& t);
LatticeRational lattice_from_json(const Json& j);

// {"shape": [...], "choices": [[x, y, "U" | "L"], ...]}
Json to_json(const HookAssignment& a);
HookAssignment assignment_from_json(const Json& j);

// {"mu": ..., "nu": ..., "lambda": ..., "value": [...]}
Json to_json(const StanleyProduct& p);
StanleyProduct product_from_json(const Json& j);

// {"mu": [...], "nu": [...], "entries": [{"gamma", "g", "stanley"}]}
Json to_json(const LrTable& t);
LrTable lr_table_from_json(const Json& j);

}  // namespace jack::json
