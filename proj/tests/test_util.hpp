#pragma once

#include <random>

#include "flexion/mould.hpp"
#include "flexion/flexops.hpp"

namespace flexion::testutil {

// Seeded generators for randomized identity tests.  Polynomial-valued,
// bounded degree, small integer coefficients.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }

    Rational coeff(int span = 4) {
        int c = uniform(-span, span);
        return Rational(c);
    }

    Polynomial polynomial(const std::vector<Variable>& vars, int max_degree, int terms) {
        Polynomial p;
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            int deg = uniform(0, max_degree);
            for (int d = 0; d < deg; ++d) {
                auto v = vars[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))];
                m = *m.times(Monomial(v));
            }
            p.add_term(coeff(), m);
        }
        return p;
    }

    // Random polynomial-valued mould, zero constant term unless group_like.
    Mould mould(Flavor flavor, int depth, int max_degree = 2, bool group_like = false) {
        Mould m(flavor, depth);
        if (group_like) m.set_constant(Rational(1));
        for (int r = 1; r <= depth; ++r) {
            std::vector<Variable> vars;
            for (int i = 1; i <= r; ++i) {
                if (flavor == Flavor::U || flavor == Flavor::Bi)
                    vars.push_back(u_var(static_cast<std::uint32_t>(i)));
                if (flavor == Flavor::V || flavor == Flavor::Bi)
                    vars.push_back(v_var(static_cast<std::uint32_t>(i)));
            }
            m.at(r) = RationalFunction(polynomial(vars, max_degree, 3));
        }
        return m;
    }
    // Alternal mould built from lu-words of random depth-1 moulds.
    Mould alternal_mould(Flavor flavor, int depth, int max_degree = 2) {
        auto depth1 = [&](int deg) {
            Mould m(flavor, depth);
            std::vector<Variable> vars;
            if (flavor == Flavor::U || flavor == Flavor::Bi) vars.push_back(u_var(1));
            if (flavor == Flavor::V || flavor == Flavor::Bi) vars.push_back(v_var(1));
            m.at(1) = RationalFunction(polynomial(vars, deg, 2));
            return m;
        };
        Mould acc = depth1(max_degree);
        Mould word = acc;
        for (int k = 2; k <= depth; ++k) {
            word = lu(word, depth1(max_degree));
            acc = acc + word;
        }
        return acc;
    }

    // Symmetral mould via expari of an alternal one (needs gari.hpp linked
    // by the caller including it); provided in the gari tests instead.
};

// Depth-wise average over the push orbit; the result is push-invariant.
inline Mould push_symmetrized(const Mould& m) {
    Mould out(m.flavor(), m.depth_limit());
    for (int r = 1; r <= m.depth_limit(); ++r) {
        Mould conc(m.flavor(), m.depth_limit());
        conc.at(r) = m.at(r);
        RationalFunction acc = conc.at(r);
        Mould it = conc;
        for (int k = 0; k < r; ++k) {
            it = push(it);
            acc += it.at(r);
        }
        out.at(r) = acc.scaled(Rational(1) / (r + 1));
    }
    return out;
}

}  // namespace flexion::testutil
