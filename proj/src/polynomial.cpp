#include "flexion/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace flexion {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Variable v, int exp) {
    if (exp != 0) factors_.push_back({v, exp});
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent(Variable v) const {
    for (auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

std::optional<Monomial> Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = other.factors_.begin(), be = other.factors_.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == ae || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.factors_.push_back({a->first, e});
            ++a;
            ++b;
        }
    }
    // Dual-number truncation: anything with Eps^2 or beyond vanishes.
    for (auto& [v, e] : out.factors_)
        if (v.family == VarFamily::Eps && e >= 2) return std::nullopt;
    return out;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    auto i = a.factors_.begin(), ie = a.factors_.end();
    auto j = b.factors_.begin(), je = b.factors_.end();
    while (i != ie && j != je) {
        if (i->first == j->first) {
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
            ++i;
            ++j;
        } else if (i->first < j->first) {
            return 1;  // a has positive exponent on the earlier variable
        } else {
            return -1;
        }
    }
    if (i != ie) return 1;
    if (j != je) return -1;
    return 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (!flexion::is_zero(c)) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(Variable v) {
    Polynomial p;
    p.terms_.emplace(Monomial(v), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
    Polynomial p;
    if (!flexion::is_zero(c)) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    // Leading term has maximal degree under graded lex.
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous(int* deg_out) const {
    if (terms_.empty()) {
        if (deg_out) *deg_out = -1;
        return true;
    }
    int d = terms_.begin()->first.degree();
    for (auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

std::set<Variable> Polynomial::variables() const {
    std::set<Variable> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors()) vs.insert(v);
    return vs;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Rational& c, const Monomial& m) {
    if (flexion::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (flexion::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_)
            if (auto m = ma.times(mb)) out.add_term(ca * cb, *m);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (flexion::is_zero(c)) return {};
    Polynomial p = *this;
    for (auto& [m, coeff] : p.terms_) coeff *= c;
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(Rational(1));
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        if (e >>= 1u) b = b * b;
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<Variable, LinearForm>& map) const {
    // Cache powers of each substituted form.
    std::map<Variable, std::vector<Polynomial>> powers;
    Polynomial out;
    for (auto& [m, c] : terms_) {
        Polynomial term(c);
        for (auto& [v, e] : m.factors()) {
            auto it = map.find(v);
            if (it == map.end()) {
                term = term * Polynomial::term(Rational(1), Monomial(v, e));
                continue;
            }
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(Polynomial(Rational(1)));
            while (static_cast<int>(pw.size()) <= e)
                pw.push_back(pw.back() * it->second.to_polynomial());
            term = term * pw[static_cast<std::size_t>(e)];
        }
        out += term;
    }
    return out;
}

Polynomial Polynomial::rename(const std::map<Variable, Variable>& map) const {
    Polynomial out;
    for (auto& [m, c] : terms_) {
        Monomial nm;
        for (auto& [v, e] : m.factors()) {
            auto it = map.find(v);
            auto r = nm.times(Monomial(it == map.end() ? v : it->second, e));
            assert(r);
            nm = *r;
        }
        out.add_term(c, nm);
    }
    return out;
}

std::optional<Polynomial> Polynomial::divide_by_linear(const LinearForm& lf) const {
    if (lf.is_constant()) throw std::invalid_argument("divide_by_linear: constant form");
    if (is_zero()) return Polynomial{};
    Variable x = lf.leading_variable();
    Rational c = lf.leading_coefficient();
    LinearForm rest = lf;
    rest.add_variable(x, -c);  // lf = c*x + rest
    Polynomial rest_poly = rest.to_polynomial();

    Polynomial rem = *this;
    Polynomial quot;
    while (!rem.is_zero()) {
        // Pull out the largest x-exponent slice.
        int dx = 0;
        for (auto& [m, co] : rem.terms()) dx = std::max(dx, m.exponent(x));
        if (dx == 0) return std::nullopt;  // nonzero remainder without x
        Polynomial slice;  // coefficient of x^dx
        for (auto& [m, co] : rem.terms()) {
            if (m.exponent(x) != dx) continue;
            auto mm = m.times(Monomial(x, -dx));
            assert(mm);
            slice.add_term(co, *mm);
        }
        Polynomial t = slice.scaled(1 / c) * Polynomial::term(Rational(1), Monomial(x, dx - 1));
        quot += t;
        rem -= t * (Polynomial::variable(x).scaled(c) + rest_poly);
    }
    return quot;
}

// a / b when b's exponents are dominated by a's, else empty.
static std::optional<Monomial> monomial_quotient(const Monomial& a, const Monomial& b) {
    Monomial q;
    auto bi = b.factors().begin(), be = b.factors().end();
    for (auto& [v, e] : a.factors()) {
        if (bi != be && bi->first < v) return std::nullopt;
        int need = (bi != be && bi->first == v) ? bi->second : 0;
        if (need > e) return std::nullopt;
        if (e > need) q = *q.times(Monomial(v, e - need));
        if (bi != be && bi->first == v) ++bi;
    }
    if (bi != be) return std::nullopt;
    return q;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    Polynomial rem = *this;
    Polynomial quot;
    const auto& dlt = *divisor.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms().begin();
        auto q = monomial_quotient(rlt.first, dlt.first);
        if (!q) return std::nullopt;
        Polynomial t = Polynomial::term(rlt.second / dlt.second, *q);
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class num_gcd(0), den_lcm(1);
    for (auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    return content;
}

// -------------------------------------------------------------- LinearForm

LinearForm LinearForm::variable(Variable v, const Rational& coeff) {
    LinearForm lf;
    lf.add_variable(v, coeff);
    return lf;
}

Rational LinearForm::coefficient(Variable v) const {
    auto it = coeffs_.find(v);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LinearForm::add_variable(Variable v, const Rational& coeff) {
    if (flexion::is_zero(coeff)) return;
    auto [it, inserted] = coeffs_.emplace(v, coeff);
    if (!inserted) {
        it->second += coeff;
        if (flexion::is_zero(it->second)) coeffs_.erase(it);
    }
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    for (auto& [v, c] : o.coeffs_) add_variable(v, c);
    constant_ += o.constant_;
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
    for (auto& [v, c] : o.coeffs_) add_variable(v, -c);
    constant_ -= o.constant_;
    return *this;
}

LinearForm LinearForm::operator-() const { return scaled(Rational(-1)); }

LinearForm LinearForm::scaled(const Rational& c) const {
    LinearForm out;
    if (flexion::is_zero(c)) return out;
    for (auto& [v, k] : coeffs_) out.coeffs_.emplace(v, k * c);
    out.constant_ = constant_ * c;
    return out;
}

LinearForm LinearForm::substitute(const std::map<Variable, LinearForm>& map) const {
    LinearForm out;
    out.constant_ = constant_;
    for (auto& [v, c] : coeffs_) {
        auto it = map.find(v);
        if (it == map.end())
            out.add_variable(v, c);
        else
            out += it->second.scaled(c);
    }
    return out;
}

LinearForm LinearForm::rename(const std::map<Variable, Variable>& map) const {
    LinearForm out;
    out.constant_ = constant_;
    for (auto& [v, c] : coeffs_) {
        auto it = map.find(v);
        out.add_variable(it == map.end() ? v : it->second, c);
    }
    return out;
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(constant_);
    for (auto& [v, c] : coeffs_) p.add_term(c, Monomial(v));
    return p;
}

Variable LinearForm::leading_variable() const {
    if (coeffs_.empty()) throw std::logic_error("leading_variable of constant form");
    return coeffs_.begin()->first;
}

Rational LinearForm::leading_coefficient() const {
    if (coeffs_.empty()) throw std::logic_error("leading_coefficient of constant form");
    return coeffs_.begin()->second;
}

int LinearForm::cmp(const LinearForm& a, const LinearForm& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
    auto i = a.coeffs_.begin();
    auto j = b.coeffs_.begin();
    for (; i != a.coeffs_.end(); ++i, ++j) {
        if (i->first != j->first) return i->first < j->first ? -1 : 1;
        if (i->second != j->second) return i->second < j->second ? -1 : 1;
    }
    if (a.constant_ != b.constant_) return a.constant_ < b.constant_ ? -1 : 1;
    return 0;
}

}  // namespace flexion
