#include "flexion/rational.hpp"

#include <stdexcept>

namespace flexion {

Rational rat_pow(const Rational& base, unsigned exp) {
    Rational r(1);
    Rational b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

Rational factorial(unsigned n) {
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i) r *= static_cast<long>(i);
    return r;
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    if (k > n - k) k = n - k;
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= static_cast<long>(n - i);
        r /= static_cast<long>(i + 1);
    }
    return r;
}

std::string rat_to_string(const Rational& q) { return q.get_str(); }

Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace flexion
