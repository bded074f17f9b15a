#include "flexion/symmetry.hpp"

#include <stdexcept>

#include "flexion/words.hpp"

namespace flexion {

namespace {

FlexWord pattern_word(const Word& pattern) {
    FlexWord w;
    w.reserve(pattern.size());
    for (int idx : pattern) {
        FlexLetter letter;
        letter.u = LinearForm::variable(u_var(static_cast<std::uint32_t>(idx)));
        letter.v = LinearForm::variable(v_var(static_cast<std::uint32_t>(idx)));
        w.push_back(letter);
    }
    return w;
}

// Sum of M over the shuffle of argument blocks (1..s) and (s+1..t).
RationalFunction shuffle_sum(const Mould& m, int s, int t) {
    RationalFunction acc;
    for (const Word& p : shuffle_patterns(s, t - s)) acc += mould_eval(m, pattern_word(p));
    return acc;
}

RationalFunction block_product(const Mould& m, int s, int t) {
    FlexWord w = standard_word(t);
    RationalFunction left = mould_eval(m, FlexWord(w.begin(), w.begin() + s));
    RationalFunction right = mould_eval(m, FlexWord(w.begin() + s, w.end()));
    return left * right;
}

SymmetryReport shuffle_check(const Mould& m, bool symmetral, bool reduced_pairs) {
    SymmetryReport rep{symmetral ? SymmetryProperty::Symmetral : SymmetryProperty::Alternal,
                       true, std::nullopt};
    Rational want = symmetral ? Rational(1) : Rational(0);
    if (m.constant_term() != want) {
        rep.holds = false;
        rep.first_defect = SymmetryDefect{0, 0, RationalFunction(m.constant_term() - want)};
        return rep;
    }
    for (int t = 2; t <= m.depth_limit(); ++t) {
        int max_s = reduced_pairs ? t / 2 : t - 1;
        for (int s = 1; s <= max_s; ++s) {
            RationalFunction sum = shuffle_sum(m, s, t);
            if (symmetral) sum -= block_product(m, s, t);
            if (!sum.is_zero()) {
                rep.holds = false;
                rep.first_defect = SymmetryDefect{s, t - s, sum};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace

SymmetryReport check_alternal(const Mould& m, bool reduced_pairs) {
    return shuffle_check(m, false, reduced_pairs);
}

SymmetryReport check_symmetral(const Mould& m, bool reduced_pairs) {
    return shuffle_check(m, true, reduced_pairs);
}

std::vector<RationalFunction> alternility_terms(const Mould& m, int r, int s) {
    if (m.flavor() != Flavor::V && m.flavor() != Flavor::Bi)
        throw std::invalid_argument("alternility sums are defined for v-moulds");
    if (r + s > m.depth_limit()) throw std::invalid_argument("alternility pair beyond depth");
    std::vector<RationalFunction> terms;
    for (const auto& sj : stuffle_surjections(r, s)) {
        auto pairs = sj.collapsed_pairs(r);
        const int n = sj.target_size;
        // Fiber representatives per target slot; collapsed slots listed in
        // `pairs` with (k in first block, l in second).
        std::vector<int> singleton(static_cast<std::size_t>(n), -1);
        std::vector<int> pair_index(static_cast<std::size_t>(n), -1);
        for (int p = 0; p < r + s; ++p) {
            int tgt = sj.assignment[static_cast<std::size_t>(p)] - 1;
            if (singleton[static_cast<std::size_t>(tgt)] == -1 &&
                pair_index[static_cast<std::size_t>(tgt)] == -1)
                singleton[static_cast<std::size_t>(tgt)] = p;
        }
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            int tgt = sj.assignment[static_cast<std::size_t>(pairs[pi].first)] - 1;
            pair_index[static_cast<std::size_t>(tgt)] = static_cast<int>(pi);
            singleton[static_cast<std::size_t>(tgt)] = -1;
        }
        RationalFunction bracket;
        const std::size_t subsets = 1u << pairs.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            FlexWord w(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                int pos;
                auto iz = static_cast<std::size_t>(i);
                if (pair_index[iz] >= 0) {
                    auto& kl = pairs[static_cast<std::size_t>(pair_index[iz])];
                    bool in_j = (mask >> pair_index[iz]) & 1u;
                    pos = in_j ? kl.second : kl.first;
                } else {
                    pos = singleton[iz];
                }
                auto var = v_var(static_cast<std::uint32_t>(pos + 1));
                w[iz].v = LinearForm::variable(var);
                w[iz].u = LinearForm::variable(u_var(static_cast<std::uint32_t>(pos + 1)));
            }
            RationalFunction val = mould_eval(m, w);
            if (__builtin_popcountll(mask) % 2) val = -val;
            bracket += val;
        }
        for (auto& kl : pairs) {
            LinearForm d = LinearForm::variable(v_var(static_cast<std::uint32_t>(kl.first + 1))) -
                           LinearForm::variable(v_var(static_cast<std::uint32_t>(kl.second + 1)));
            bracket = bracket / RationalFunction(d.to_polynomial());
        }
        terms.push_back(bracket);
    }
    return terms;
}

RationalFunction alternility_sum(const Mould& m, int r, int s) {
    RationalFunction acc;
    for (auto& t : alternility_terms(m, r, s)) acc += t;
    return acc;
}

namespace {

bool polynomial_valued(const Mould& m) {
    for (int r = 0; r <= m.depth_limit(); ++r)
        if (!m.at(r).is_polynomial()) return false;
    return true;
}

SymmetryReport stuffle_check(const Mould& m, bool symmetril) {
    SymmetryReport rep{symmetril ? SymmetryProperty::Symmetril : SymmetryProperty::Alternil,
                       true, std::nullopt};
    Rational want = symmetril ? Rational(1) : Rational(0);
    if (m.constant_term() != want) {
        rep.holds = false;
        rep.first_defect = SymmetryDefect{0, 0, RationalFunction(m.constant_term() - want)};
        return rep;
    }
    bool poly = polynomial_valued(m);
    for (int t = 2; t <= m.depth_limit(); ++t) {
        for (int r = 1; 2 * r <= t; ++r) {
            int s = t - r;
            RationalFunction sum = alternility_sum(m, r, s);
            if (poly && !sum.is_polynomial())
                throw std::logic_error("alternility sum of a polynomial mould has a pole");
            if (symmetril) sum -= block_product(m, r, t);
            if (!sum.is_zero()) {
                rep.holds = false;
                rep.first_defect = SymmetryDefect{r, s, sum};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace

SymmetryReport check_alternil(const Mould& m) { return stuffle_check(m, false); }

SymmetryReport check_symmetril(const Mould& m) { return stuffle_check(m, true); }

SymmetryReport check_operator_invariance(const Mould& m, const std::string& op) {
    Mould image = op == "push"      ? push(m)
                  : op == "neg"     ? neg(m)
                  : op == "mantar"  ? mantar(m)
                  : op == "negpush" ? neg(push(m))
                                    : throw std::invalid_argument("unknown operator " + op);
    SymmetryProperty prop = op == "push"  ? SymmetryProperty::PushInvariant
                            : op == "neg" ? SymmetryProperty::NegInvariant
                                          : SymmetryProperty::MantarInvariant;
    SymmetryReport rep{prop, true, std::nullopt};
    int d = mould_first_diff(m, image);
    if (d >= 0) {
        rep.holds = false;
        rep.first_defect = SymmetryDefect{d, 0, m.at(d) - image.at(d)};
    }
    return rep;
}

namespace {

// Constant mould K (depths >= 2) with S + K alternal resp. alternil; the
// constant enters each depth-t relation linearly with coefficient C(t, r).
std::optional<Mould> solve_constant_correction(const Mould& s, bool alternility) {
    Mould k(s.flavor(), s.depth_limit());
    for (int t = 2; t <= s.depth_limit(); ++t) {
        std::optional<Rational> ct;
        Mould trial = s + k;
        for (int r = 1; 2 * r <= t; ++r) {
            RationalFunction sum = alternility ? alternility_sum(trial, r, t - r)
                                               : shuffle_sum(trial, r, t);
            if (!ct) {
                if (!sum.is_constant()) return std::nullopt;
                ct = -sum.constant_value() / binomial(static_cast<unsigned>(t),
                                                      static_cast<unsigned>(r));
                k.at(t) = RationalFunction(*ct);
                trial = s + k;
            } else {
                sum = alternility ? alternility_sum(trial, r, t - r) : shuffle_sum(trial, r, t);
                if (!sum.is_zero()) return std::nullopt;
            }
        }
    }
    // Re-run the full check so cross-depth interactions are covered.
    Mould corrected = s + k;
    bool ok = alternility ? check_alternil(corrected).holds : check_alternal(corrected).holds;
    if (!ok) return std::nullopt;
    return k;
}

}  // namespace

DimorphyResult classify_dimorphy(const Mould& m) {
    if (!flexion::is_zero(m.constant_term()))
        throw std::invalid_argument("classify_dimorphy expects constant term 0");
    DimorphyResult res;
    if (m.depth_limit() >= 1) {
        std::map<Variable, LinearForm> flip{{u_var(1), -LinearForm::variable(u_var(1))},
                                            {v_var(1), -LinearForm::variable(v_var(1))}};
        res.depth1_even = m.at(1) == m.at(1).substitute(flip);
    }
    if (!check_alternal(m).holds) return res;
    Mould s = swap(m);
    if (check_alternal(s).holds) {
        res.cls = DimorphyClass::AlAl;
        return res;
    }
    if (check_alternil(s).holds) {
        res.cls = DimorphyClass::AlIl;
        return res;
    }
    if (auto k = solve_constant_correction(s, false)) {
        res.cls = DimorphyClass::AlStarAl;
        res.correction = std::move(*k);
        return res;
    }
    if (auto k = solve_constant_correction(s, true)) {
        res.cls = DimorphyClass::AlStarIl;
        res.correction = std::move(*k);
        return res;
    }
    return res;
}

}  // namespace flexion
