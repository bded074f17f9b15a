#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace flexion {

// Exact rational scalar.  GMP keeps the canonical form (positive
// denominator, fully reduced, zero stored as 0/1) after every operation.
using Rational = mpq_class;

// rat(p, q) builds p/q in canonical form.
inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational rat_pow(const Rational& base, unsigned exp);
Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

std::string rat_to_string(const Rational& q);
// Accepts "p", "-p", "p/q".
Rational rat_from_string(const std::string& s);

}  // namespace flexion
