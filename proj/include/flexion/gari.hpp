#pragma once

#include <utility>

#include "flexion/flexops.hpp"
#include "flexion/mould.hpp"

namespace flexion {

// Inverse for mu; requires nonzero constant term.
Mould invmu(const Mould& b);

// expari(A) = sum of left-iterated preari powers / i!; A constant term 0.
Mould expari(const Mould& a);
// Depth-by-depth inverse of expari; G constant term 1.
Mould logari(const Mould& g);

// gaxit_{B,C}.A: sum over decompositions w = a1 b1 c1 ... as bs cs with
// nonempty b_i and nonempty interior gaps c_i a_{i+1}.
Mould gaxit(const Mould& b, const Mould& c, const Mould& a);
Mould garit(const Mould& b, const Mould& a);  // gaxit(B, invmu B)
Mould ganit(const Mould& b, const Mould& a);  // gaxit(1, B)

// Group law gari(A, B) = mu(garit_B.A, B); linear in A, B constant term 1.
Mould gari(const Mould& a, const Mould& b);
Mould gari(const Mould& a, const Mould& b, const Mould& c);
Mould invgari(const Mould& b);

// gaxi law on pairs, (2.7.9)-style.
std::pair<Mould, Mould> gaxi(const std::pair<Mould, Mould>& ab,
                             const std::pair<Mould, Mould>& cd);
// Left component of the gaxi-inverse of (A, B).
Mould invgaxi_left(const Mould& a, const Mould& b);

// Inverse twistor for ganit: ganit(invgani B) o ganit(B) = id.
Mould invgani(const Mould& b);

// Adjoint action adari(A).B = gari(preari(A, B), invgari(A)).
Mould adari(const Mould& a, const Mould& b);
// Lie-series form, exp(ad_{logari A}); kept as a test oracle.
Mould adari_series(const Mould& a, const Mould& b);
Mould adgari(const Mould& a, const Mould& b);
Mould fragari(const Mould& a, const Mould& b);  // gari(A, invgari B)

// Swap transport operators.
Mould ras(const Mould& b);
Mould rash(const Mould& b);
Mould crash(const Mould& c);
Mould gira(const Mould& a, const Mould& b);

}  // namespace flexion
