#include "flexion/named_moulds.hpp"

#include <stdexcept>

#include "flexion/flexops.hpp"

namespace flexion {

Rational bernoulli(unsigned n) {
    static std::vector<Rational> table{Rational(1)};
    while (table.size() <= n) {
        unsigned m = static_cast<unsigned>(table.size());
        // sum_{k=0}^{m} C(m+1,k) B_k = 0
        Rational acc(0);
        for (unsigned k = 0; k < m; ++k) acc += binomial(m + 1, k) * table[k];
        table.push_back(-acc / binomial(m + 1, m));
    }
    return table[n];
}

Mould mould_one(Flavor f, int depth) { return Mould::unit(f, depth); }

Mould mould_id(Flavor f, int depth) {
    Mould m(f, depth);
    if (depth >= 1) m.at(1) = RationalFunction(Rational(1));
    return m;
}

Mould mould_exp(Flavor f, int depth) {
    Mould m(f, depth);
    for (int r = 1; r <= depth; ++r) m.at(r) = RationalFunction(1 / factorial(static_cast<unsigned>(r)));
    return m;
}

Mould mould_log(Flavor f, int depth) {
    Mould m(f, depth);
    for (int r = 1; r <= depth; ++r)
        m.at(r) = RationalFunction(rat(r % 2 ? 1 : -1, r));
    return m;
}

Mould mould_I(Flavor f, int depth) {
    Mould m(f, depth);
    if (depth >= 1) m.at(1) = RationalFunction(Rational(1));
    return m;
}

Mould mould_Y(Flavor f, int depth) {
    Mould m = mould_I(f, depth);
    m.set_constant(Rational(1));
    return m;
}

Mould mould_Pa(int depth) {
    Mould m(Flavor::U, depth);
    if (depth >= 1)
        m.at(1) = RationalFunction::inverse_linear(LinearForm::variable(u_var(1)));
    return m;
}

static LinearForm var_sum(VarFamily fam, int from, int to) {
    LinearForm lf;
    for (int i = from; i <= to; ++i)
        lf += LinearForm::variable({fam, static_cast<std::uint32_t>(i)});
    return lf;
}

Mould mould_pac(int depth) {
    Mould m = Mould::unit(Flavor::U, depth);
    for (int r = 1; r <= depth; ++r) {
        std::vector<RationalFunction::DenFactor> den;
        for (int i = 1; i <= r; ++i)
            den.push_back({LinearForm::variable(u_var(static_cast<std::uint32_t>(i))), 1});
        m.at(r) = RationalFunction(Polynomial(Rational(1)), std::move(den));
    }
    return m;
}

Mould mould_pic(int depth) {
    Mould m = Mould::unit(Flavor::V, depth);
    for (int r = 1; r <= depth; ++r) {
        std::vector<RationalFunction::DenFactor> den;
        for (int i = 1; i <= r; ++i)
            den.push_back({LinearForm::variable(v_var(static_cast<std::uint32_t>(i))), 1});
        m.at(r) = RationalFunction(Polynomial(Rational(1)), std::move(den));
    }
    return m;
}

Mould mould_poc(int depth) {
    Mould m = Mould::unit(Flavor::V, depth);
    for (int r = 1; r <= depth; ++r) {
        std::vector<RationalFunction::DenFactor> den;
        den.push_back({LinearForm::variable(v_var(1)), 1});
        for (int i = 1; i < r; ++i)
            den.push_back({LinearForm::variable(v_var(static_cast<std::uint32_t>(i))) -
                               LinearForm::variable(v_var(static_cast<std::uint32_t>(i + 1))),
                           1});
        m.at(r) = RationalFunction(Polynomial(Rational(-1)), std::move(den));
    }
    return m;
}

Mould mould_paj(int depth) {
    Mould m = Mould::unit(Flavor::U, depth);
    for (int r = 1; r <= depth; ++r) {
        std::vector<RationalFunction::DenFactor> den;
        for (int i = 1; i <= r; ++i) den.push_back({var_sum(VarFamily::U, 1, i), 1});
        m.at(r) = RationalFunction(Polynomial(Rational(1)), std::move(den));
    }
    return m;
}

Mould named_mould(const std::string& name, int depth, Flavor flavor) {
    if (name == "one") return mould_one(flavor, depth);
    if (name == "Id") return mould_id(flavor, depth);
    if (name == "Exp") return mould_exp(flavor, depth);
    if (name == "Log") return mould_log(flavor, depth);
    if (name == "I") return mould_I(flavor, depth);
    if (name == "Y") return mould_Y(flavor, depth);
    if (name == "Pa") return mould_Pa(depth);
    if (name == "pac") return mould_pac(depth);
    if (name == "pic") return mould_pic(depth);
    if (name == "poc") return mould_poc(depth);
    if (name == "paj") return mould_paj(depth);
    if (name == "pal") return pal(depth);
    if (name == "pil") return pil(depth);
    if (name == "dupal") return dupal(depth);
    if (name == "dipil") return dipil(depth);
    if (name == "dapal") return dapal(depth);
    throw std::invalid_argument("unknown mould name: " + name);
}

Mould re(int r) {
    if (r < 1) throw std::invalid_argument("re(r) needs r >= 1");
    Mould m(Flavor::V, r);
    std::vector<RationalFunction::DenFactor> den;
    den.push_back({LinearForm::variable(v_var(1)), 1});
    for (int i = 1; i < r; ++i)
        den.push_back({LinearForm::variable(v_var(static_cast<std::uint32_t>(i))) -
                           LinearForm::variable(v_var(static_cast<std::uint32_t>(i + 1))),
                       1});
    den.push_back({LinearForm::variable(v_var(static_cast<std::uint32_t>(r))), 1});
    m.at(r) = RationalFunction(var_sum(VarFamily::V, 1, r).to_polynomial(), std::move(den));
    return m;
}

Mould gepar(const Mould& a) {
    Mould s = swap(a);
    return mu(anti(s), s);
}

// ------------------------------------------------------- univariate series

namespace {

// s[i] = coefficient of x^i, truncated length.
using Series = std::vector<Rational>;

Series mul(const Series& a, const Series& b, std::size_t order) {
    Series out(order + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (flexion::is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

Series div(const Series& a, const Series& b, std::size_t order) {
    if (b.empty() || flexion::is_zero(b[0])) throw std::domain_error("series division by x-multiple");
    Series out(order + 1, Rational(0));
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc = n < a.size() ? a[n] : Rational(0);
        for (std::size_t k = 0; k < n; ++k)
            if (n - k < b.size()) acc -= out[k] * b[n - k];
        out[n] = acc / b[0];
    }
    return out;
}

Series derivative(const Series& a) {
    Series out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<long>(i));
    return out;
}

}  // namespace

Diffeo Diffeo::one_minus_exp_neg(int order) {
    // 1 - e^{-x} = x - x^2/2 + x^3/6 - ... ; a_r = (-1)^r/(r+1)!.
    std::vector<Rational> a;
    for (int r = 1; r <= order; ++r)
        a.push_back((r % 2 ? Rational(-1) : Rational(1)) / factorial(static_cast<unsigned>(r) + 1));
    return Diffeo(std::move(a));
}

Rational Diffeo::a(int r) const {
    if (r < 1) throw std::invalid_argument("diffeo coefficient index");
    return r <= order() ? a_[static_cast<std::size_t>(r - 1)] : Rational(0);
}

static Series diffeo_series(const Diffeo& f, std::size_t order) {
    Series s(order + 1, Rational(0));
    if (order >= 1) s[1] = 1;
    for (int r = 1; r + 1 <= static_cast<int>(order); ++r) s[static_cast<std::size_t>(r + 1)] = f.a(r);
    return s;
}

Diffeo Diffeo::composed_with(const Diffeo& g, int order) const {
    std::size_t ord = static_cast<std::size_t>(order) + 1;
    Series gs = diffeo_series(g, ord);
    // f(g(x)) = sum c_k g^k with c_1 = 1, c_{r+1} = a_r.
    Series acc(ord + 1, Rational(0));
    Series gpow = gs;
    acc = gpow;  // c_1 g
    for (int k = 2; k <= static_cast<int>(ord); ++k) {
        gpow = mul(gpow, gs, ord);
        Rational ck = a(k - 1);
        if (flexion::is_zero(ck)) continue;
        for (std::size_t i = 0; i <= ord; ++i) acc[i] += ck * gpow[i];
    }
    std::vector<Rational> coeffs;
    for (int r = 1; r <= order; ++r) coeffs.push_back(acc[static_cast<std::size_t>(r + 1)]);
    return Diffeo(std::move(coeffs));
}

std::vector<Rational> Diffeo::dilator(int order) const {
    std::size_t ord = static_cast<std::size_t>(order) + 1;
    Series f = diffeo_series(*this, ord);
    Series fp = derivative(f);   // fp[i] = coefficient of x^i in f'
    Series q = div(f, fp, ord);  // f/f' ; f' has constant term 1
    std::vector<Rational> gamma;
    for (int r = 1; r <= order; ++r) {
        Rational g = -q[static_cast<std::size_t>(r + 1)];
        gamma.push_back(g);  // x - f/f' : the x cancels q's linear term
    }
    return gamma;
}

std::vector<Rational> Diffeo::generator(int order) const {
    // Solve exp(f_* d/dx) x = f order by order; eps_r enters at x^{r+1}
    // with unit coefficient.
    std::vector<Rational> eps(static_cast<std::size_t>(order), Rational(0));
    std::size_t ord = static_cast<std::size_t>(order) + 1;
    Series target = diffeo_series(*this, ord);
    for (int m = 1; m <= order; ++m) {
        // flow = x + fstar + 1/2 D(fstar) + ... with current eps
        Series fstar(ord + 1, Rational(0));
        for (int r = 1; r <= order; ++r)
            if (static_cast<std::size_t>(r + 1) <= ord)
                fstar[static_cast<std::size_t>(r + 1)] = eps[static_cast<std::size_t>(r - 1)];
        Series flow(ord + 1, Rational(0));
        flow[1] = 1;
        Series term = fstar;  // D(x)
        Rational fact(1);
        for (int k = 1; k <= order + 1; ++k) {
            fact /= k;
            for (std::size_t i = 0; i <= ord; ++i)
                if (i < term.size()) flow[i] += fact * term[i];
            // D(term) = fstar * term'
            term = mul(fstar, derivative(term), ord);
            bool dead = true;
            for (auto& c : term)
                if (!flexion::is_zero(c)) dead = false;
            if (dead) break;
        }
        eps[static_cast<std::size_t>(m - 1)] +=
            target[static_cast<std::size_t>(m + 1)] - flow[static_cast<std::size_t>(m + 1)];
    }
    return eps;
}

DiffeoMoulds diffeo_moulds(const Diffeo& f, int depth) {
    if (f.order() < depth)
        throw std::invalid_argument("diffeo truncation order below requested depth");
    auto gamma = f.dilator(depth);
    auto eps = f.generator(depth);
    DiffeoMoulds out{Mould(Flavor::V, depth), Mould(Flavor::V, depth),
                     Mould::unit(Flavor::V, depth)};
    for (int r = 1; r <= depth; ++r) {
        Mould rer = re(r);
        out.lop.at(r) = rer.at(r).scaled(eps[static_cast<std::size_t>(r - 1)]);
        out.dee.at(r) = rer.at(r).scaled(gamma[static_cast<std::size_t>(r - 1)]);
    }
    for (int r = 1; r <= depth; ++r) {
        Mould q = preari(out.p, out.dee);
        out.p.at(r) = q.at(r).scaled(rat(1, r));
    }
    return out;
}

Mould dipil(int depth) {
    Mould m(Flavor::V, depth);
    for (int r = 1; r <= depth; ++r)
        m.at(r) = re(r).at(r).scaled(-1 / factorial(static_cast<unsigned>(r) + 1));
    return m;
}

Mould pil(int depth) {
    Mould d = dipil(depth);
    Mould p = Mould::unit(Flavor::V, depth);
    for (int r = 1; r <= depth; ++r) {
        Mould q = preari(p, d);
        p.at(r) = q.at(r).scaled(rat(1, r));
    }
    return p;
}

Mould dapal(int depth) { return swap(dipil(depth)); }

Mould dupal(int depth) {
    Mould m(Flavor::U, depth);
    for (int r = 1; r <= depth; ++r) {
        Rational br = bernoulli(static_cast<unsigned>(r));
        if (flexion::is_zero(br)) continue;
        Polynomial num;
        for (int i = 0; i < r; ++i) {
            Rational c = binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(i));
            if (i % 2) c = -c;
            num.add_term(c, Monomial(u_var(static_cast<std::uint32_t>(i + 1))));
        }
        std::vector<RationalFunction::DenFactor> den;
        for (int i = 1; i <= r; ++i)
            den.push_back({LinearForm::variable(u_var(static_cast<std::uint32_t>(i))), 1});
        m.at(r) = RationalFunction(num, std::move(den)).scaled(br / factorial(static_cast<unsigned>(r)));
    }
    return m;
}

Mould pal(int depth) {
    Mould du = dupal(depth);
    Mould p = Mould::unit(Flavor::U, depth);
    for (int r = 1; r <= depth; ++r) {
        Mould q = mu(p, du);
        RationalFunction divided =
            q.at(r) / RationalFunction(var_sum(VarFamily::U, 1, r).to_polynomial());
        p.at(r) = divided;
    }
    return p;
}

}  // namespace flexion
