#include "flexion/dictionary.hpp"

#include <algorithm>
#include <stdexcept>

namespace flexion {

Mould vimo(const NCPolynomial& f) {
    int depth = 0;
    for (auto& [w, c] : f.terms())
        depth = std::max(depth, static_cast<int>(std::count(w.begin(), w.end(), 'y')));
    Mould out(Flavor::Z, depth);
    std::vector<Polynomial> comp(static_cast<std::size_t>(depth) + 1);
    for (auto& [w, c] : f.terms()) {
        Monomial m;
        int slot = 0, run = 0;
        for (char ch : w) {
            if (ch == 'x') {
                ++run;
            } else {
                if (run) m = *m.times(Monomial(z_var(static_cast<std::uint32_t>(slot)), run));
                ++slot;
                run = 0;
            }
        }
        if (run) m = *m.times(Monomial(z_var(static_cast<std::uint32_t>(slot)), run));
        comp[static_cast<std::size_t>(slot)].add_term(c, m);
    }
    for (int r = 0; r <= depth; ++r)
        out.at(r) = RationalFunction(comp[static_cast<std::size_t>(r)]);
    return out;
}

bool vimo_translation_invariant(const Mould& vf) {
    for (int r = 1; r <= vf.depth_limit(); ++r) {
        std::map<Variable, LinearForm> sub;
        sub[z_var(0)] = LinearForm{};
        for (int i = 1; i <= r; ++i)
            sub[z_var(static_cast<std::uint32_t>(i))] =
                LinearForm::variable(z_var(static_cast<std::uint32_t>(i))) -
                LinearForm::variable(z_var(0));
        if (!(vf.at(r) == vf.at(r).substitute(sub))) return false;
    }
    return true;
}

Mould ma(const NCPolynomial& f) {
    Mould vf = vimo(f);
    if (!vimo_translation_invariant(vf))
        throw std::invalid_argument("ma: polynomial is not in Q<C>");
    Mould out(Flavor::U, vf.depth_limit());
    out.at(0) = vf.at(0);
    for (int r = 1; r <= vf.depth_limit(); ++r) {
        std::map<Variable, LinearForm> sub;
        sub[z_var(0)] = LinearForm{};
        for (int i = 1; i <= r; ++i) {
            LinearForm acc;
            for (int j = 1; j <= i; ++j)
                acc += LinearForm::variable(u_var(static_cast<std::uint32_t>(j)));
            sub[z_var(static_cast<std::uint32_t>(i))] = acc;
        }
        out.at(r) = vf.at(r).substitute(sub);
    }
    return out;
}

Mould mi(const NCPolynomial& f) {
    Mould vf = vimo(f);
    Mould out(Flavor::V, vf.depth_limit());
    out.at(0) = vf.at(0);
    for (int r = 1; r <= vf.depth_limit(); ++r) {
        std::map<Variable, LinearForm> sub;
        sub[z_var(0)] = LinearForm{};
        for (int i = 1; i <= r; ++i)
            sub[z_var(static_cast<std::uint32_t>(i))] =
                LinearForm::variable(v_var(static_cast<std::uint32_t>(r + 1 - i)));
        out.at(r) = vf.at(r).substitute(sub);
    }
    return out;
}

Mould ma_via_c_encoding(const NCPolynomial& f) {
    auto n_opt = f.homogeneous_weight();
    if (!n_opt) throw std::invalid_argument("ma_via_c_encoding needs homogeneous input");
    int n = *n_opt;
    auto enc = c_encode(f);
    int depth = 0;
    for (auto& [cw, c] : enc) depth = std::max(depth, static_cast<int>(cw.size()));
    Mould out(Flavor::U, depth);
    std::vector<Polynomial> comp(static_cast<std::size_t>(depth) + 1);
    for (auto& [cw, c] : enc) {
        int r = static_cast<int>(cw.size());
        Monomial m;
        for (int i = 0; i < r; ++i)
            if (cw[static_cast<std::size_t>(i)] > 1)
                m = *m.times(Monomial(u_var(static_cast<std::uint32_t>(i + 1)),
                                      cw[static_cast<std::size_t>(i)] - 1));
        Rational sign = (r + n) % 2 ? Rational(-1) : Rational(1);
        comp[static_cast<std::size_t>(r)].add_term(sign * c, m);
    }
    for (int r = 0; r <= depth; ++r)
        out.at(r) = RationalFunction(comp[static_cast<std::size_t>(r)]);
    return out;
}

NCPolynomial mould_to_ncpoly(const Mould& m, int weight) {
    // The sign (-1)^{r+n} with n = r + deg reduces to (-1)^{deg} monomial by
    // monomial, so non-homogeneous (e.g. group-like) moulds invert uniformly;
    // a nonnegative weight argument additionally enforces homogeneity.
    std::map<std::vector<int>, Rational> enc;
    for (int r = 0; r <= m.depth_limit(); ++r) {
        const auto& comp = m.at(r);
        if (comp.is_zero()) continue;
        auto poly = comp.as_polynomial();
        if (!poly) throw std::invalid_argument("mould_to_ncpoly needs polynomial components");
        if (r == 0) {
            if (!poly->is_constant())
                throw std::invalid_argument("depth-0 component must be constant");
            enc[{}] = poly->constant_term();
            continue;
        }
        if (weight >= 0) {
            int deg;
            if (!poly->is_homogeneous(&deg) || deg != weight - r)
                throw std::invalid_argument(
                    "component not homogeneous of degree weight - depth");
        }
        for (auto& [mon, c] : poly->terms()) {
            std::vector<int> cw(static_cast<std::size_t>(r), 1);
            for (auto& [v, e] : mon.factors()) {
                if (v.family != VarFamily::U || static_cast<int>(v.index) > r)
                    throw std::invalid_argument("mould_to_ncpoly expects a u-flavor mould");
                cw[v.index - 1] += e;
            }
            Rational sign = mon.degree() % 2 ? Rational(-1) : Rational(1);
            enc[cw] += sign * c;
        }
    }
    return c_expand(enc);
}

Mould iota_Y(const std::map<YWord, Rational>& words) {
    int depth = 0;
    for (auto& [w, c] : words) depth = std::max(depth, static_cast<int>(w.size()));
    Mould out(Flavor::V, depth);
    std::vector<Polynomial> comp(static_cast<std::size_t>(depth) + 1);
    for (auto& [w, c] : words) {
        Monomial m;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] > 1)
                m = *m.times(Monomial(v_var(static_cast<std::uint32_t>(i + 1)), w[i] - 1));
        comp[w.size()].add_term(c, m);
    }
    for (int r = 0; r <= depth; ++r)
        out.at(r) = RationalFunction(comp[static_cast<std::size_t>(r)]);
    return out;
}

Mould ma_series(const NCSeries& f) {
    Mould m = ma(f.poly());
    return extended_zero(m, std::max(m.depth_limit(), f.cap()));
}

}  // namespace flexion
