#pragma once

#include "flexion/mould.hpp"
#include "flexion/ncpoly.hpp"

namespace flexion {

// The z-encoding: depth-r component sends x^{a0-1} y x^{a1-1} y ... x^{ar-1}
// to z_0^{a0-1} z_1^{a1-1} ... z_r^{ar-1}.
Mould vimo(const NCPolynomial& f);

// Criterion for membership in Q<C> read off vimo:
// vimo_f(z0..zr) = vimo_f(0, z1-z0, ..., zr-z0).
bool vimo_translation_invariant(const Mould& vf);

// ma_f(u) = vimo_f(0, u1, u1+u2, ..., u1+...+ur); requires f in Q<C>.
Mould ma(const NCPolynomial& f);
// mi_f(v) = vimo_f(0, v_r, ..., v_1).
Mould mi(const NCPolynomial& f);

// Independent route through the C-encoding: (-1)^{r+n} iota_C(f_C); f must
// be homogeneous.  Kept as the cross-check oracle for ma.
Mould ma_via_c_encoding(const NCPolynomial& f);

// Inverse of ma on polynomial-valued moulds; a nonnegative weight enforces
// homogeneity of degree weight - depth per component.
NCPolynomial mould_to_ncpoly(const Mould& m, int weight = -1);

// ma/mi of a weight-truncated series, depth limit = cap.
Mould ma_series(const NCSeries& f);

// iota_Y alone: y-word functional to the v-monomial mould
// (y_{k1}...y_{kr} -> v_1^{k1-1}...v_r^{kr-1}).
Mould iota_Y(const std::map<YWord, Rational>& words);

}  // namespace flexion
