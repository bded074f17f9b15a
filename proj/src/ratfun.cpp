#include "flexion/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace flexion {

RationalFunction::RationalFunction(Polynomial num, std::vector<DenFactor> den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize_();
}

RationalFunction RationalFunction::inverse_linear(const LinearForm& lf, const Rational& c) {
    return RationalFunction(Polynomial(c), {{lf, 1}});
}

void RationalFunction::normalize_() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    // Monic factors, scalar folded into the numerator.
    Rational scale(1);
    for (auto& [lf, mult] : den_) {
        if (mult < 0) throw std::logic_error("negative denominator multiplicity");
        if (lf.is_constant()) {
            if (lf.is_zero()) throw std::domain_error("zero denominator factor");
            scale *= rat_pow(lf.constant(), static_cast<unsigned>(mult));
            mult = 0;
            continue;
        }
        Rational lc = lf.leading_coefficient();
        if (lc != 1) {
            scale *= rat_pow(lc, static_cast<unsigned>(mult));
            lf = lf.scaled(1 / lc);
        }
    }
    if (scale != 1) num_ = num_.scaled(1 / scale);
    std::erase_if(den_, [](const DenFactor& f) { return f.second == 0; });
    std::sort(den_.begin(), den_.end(), [](const DenFactor& a, const DenFactor& b) {
        return LinearForm::cmp(a.first, b.first) < 0;
    });
    // Merge equal factors.
    std::vector<DenFactor> merged;
    for (auto& f : den_) {
        if (!merged.empty() && merged.back().first == f.first)
            merged.back().second += f.second;
        else
            merged.push_back(f);
    }
    den_ = std::move(merged);
    // Reduction pass: cancel factors dividing the numerator.
    for (auto& [lf, mult] : den_) {
        while (mult > 0) {
            auto q = num_.divide_by_linear(lf);
            if (!q) break;
            num_ = std::move(*q);
            --mult;
        }
    }
    std::erase_if(den_, [](const DenFactor& f) { return f.second == 0; });
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
    if (den_.empty()) return num_;
    return std::nullopt;  // normal form: no factor divides the numerator
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value of non-constant");
    return num_.constant_term();
}

// Least common multiple of two factor multisets.
static std::vector<RationalFunction::DenFactor> den_lcm(
    const std::vector<RationalFunction::DenFactor>& a,
    const std::vector<RationalFunction::DenFactor>& b,
    Polynomial& a_cofactor, Polynomial& b_cofactor) {
    std::vector<RationalFunction::DenFactor> out;
    a_cofactor = Polynomial(Rational(1));
    b_cofactor = Polynomial(Rational(1));
    std::size_t i = 0, j = 0;
    auto emit = [&](const LinearForm& lf, int ma, int mb) {
        int m = std::max(ma, mb);
        out.push_back({lf, m});
        for (int k = ma; k < m; ++k) a_cofactor = a_cofactor * lf.to_polynomial();
        for (int k = mb; k < m; ++k) b_cofactor = b_cofactor * lf.to_polynomial();
    };
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && LinearForm::cmp(a[i].first, b[j].first) < 0)) {
            emit(a[i].first, a[i].second, 0);
            ++i;
        } else if (i == a.size() || LinearForm::cmp(b[j].first, a[i].first) < 0) {
            emit(b[j].first, 0, b[j].second);
            ++j;
        } else {
            emit(a[i].first, a[i].second, b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    Polynomial ca, cb;
    auto den = den_lcm(den_, o.den_, ca, cb);
    num_ = num_ * ca + o.num_ * cb;
    den_ = std::move(den);
    normalize_();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RationalFunction out;
    out.num_ = a.num_ * b.num_;
    out.den_ = a.den_;
    out.den_.insert(out.den_.end(), b.den_.begin(), b.den_.end());
    out.normalize_();
    return out;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero function");
    if (a.is_zero()) return {};
    // a / b = (a.num * b.den) / (a.den * b.num); the divisor numerator must
    // either divide exactly or itself be a linear form.
    Polynomial num = a.num_;
    std::vector<RationalFunction::DenFactor> den = a.den_;
    for (auto& [lf, m] : b.den_)
        for (int k = 0; k < m; ++k) num = num * lf.to_polynomial();
    if (b.num_.is_constant()) {
        num = num.scaled(1 / b.num_.constant_term());
    } else if (auto q = num.divide_exact(b.num_)) {
        num = std::move(*q);
    } else if (b.num_.degree() == 1) {
        LinearForm lf;
        lf.add_constant(b.num_.constant_term());
        for (auto& [mon, c] : b.num_.terms())
            if (!mon.empty()) lf.add_variable(mon.factors().front().first, c);
        den.push_back({lf, 1});
    } else {
        throw std::domain_error("quotient leaves the linear-denominator class");
    }
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
    if (flexion::is_zero(c)) return {};
    RationalFunction out = *this;
    out.num_ = out.num_.scaled(c);
    return out;
}

RationalFunction RationalFunction::substitute(const std::map<Variable, LinearForm>& map) const {
    if (is_zero()) return {};
    RationalFunction out;
    out.num_ = num_.substitute(map);
    out.den_.reserve(den_.size());
    for (auto& [lf, m] : den_) {
        LinearForm s = lf.substitute(map);
        if (s.is_zero()) throw std::domain_error("substitution annihilates a denominator factor");
        out.den_.push_back({s, m});
    }
    out.normalize_();
    return out;
}

RationalFunction RationalFunction::rename(const std::map<Variable, Variable>& map) const {
    RationalFunction out;
    out.num_ = num_.rename(map);
    out.den_.reserve(den_.size());
    for (auto& [lf, m] : den_) out.den_.push_back({lf.rename(map), m});
    out.normalize_();
    return out;
}

std::set<Variable> RationalFunction::variables() const {
    std::set<Variable> vs = num_.variables();
    for (auto& [lf, m] : den_)
        for (auto& [v, c] : lf.coefficients()) vs.insert(v);
    return vs;
}

bool RationalFunction::equal_cross(const RationalFunction& a, const RationalFunction& b) {
    Polynomial lhs = a.num_;
    for (auto& [lf, m] : b.den_)
        for (int k = 0; k < m; ++k) lhs = lhs * lf.to_polynomial();
    Polynomial rhs = b.num_;
    for (auto& [lf, m] : a.den_)
        for (int k = 0; k < m; ++k) rhs = rhs * lf.to_polynomial();
    return lhs == rhs;
}

}  // namespace flexion
