#pragma once

#include <json.hpp>

#include "iwalab/algebra.hpp"
#include "iwalab/expansion.hpp"
#include "iwalab/graded.hpp"
#include "iwalab/module.hpp"

namespace iwalab::io {

using nlohmann::json;

// Field elements are written as their coordinate list on 1, a, ..., a^{f-1};
// a bare integer is read as an element of the prime field.
json field_to_json(const Fq& F, Fq::Elem x);
Fq::Elem field_from_json(const Fq& F, const json& j);

json config_to_json(const PrimeConfig& cfg);
/// Missing keys keep the defaults of `base`.
PrimeConfig config_from_json(const json& j, PrimeConfig base = {});

json uint_to_json(const UInt& x, int f);
UInt uint_from_json(const json& j, int f);

json digits_to_json(const DigitVector& d);
DigitVector digits_from_json(const json& j);

json element_to_json(const GroupElement& g, int f);
GroupElement element_from_json(const json& j, int f);

json algebra_to_json(const GroupAlgebra& alg, const AlgebraElement& x);
/// Accepts {"terms": [{"digits": [...], "coeff": c}]} or {"element": {...}}
/// for a single group element.
AlgebraElement algebra_from_json(const GroupAlgebra& alg, const json& j);

json expansion_to_json(const Fq& F, const MonomialExpansion& e);

/// {"name": ..., "f_gens": [[{"m": [...], "n": [...], "l": [...], "coeff": c}, ...], ...]}
json ideal_to_json(const Fq& F, const IdealSpec& J);
IdealSpec ideal_from_json(const Fq& F, const json& j, int f);

/// {"dim", "field": {"p", "f"}, "level", "case", "generators": [matrix, ...]}
/// with matrices as row lists.
json module_to_json(const Fq& F, const FiniteModule& m);
/// Checks shapes and the field; the group relations are checked separately.
FiniteModule module_from_json(const Fq& F, const json& j, const PrimeConfig& cfg);

json matrix_to_json(const Fq& F, const Matrix& a);
Matrix matrix_from_json(const Fq& F, const json& j);

}  // namespace iwalab::io
