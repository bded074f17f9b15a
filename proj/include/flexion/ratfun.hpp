#pragma once

#include <map>
#include <optional>
#include <vector>

#include "flexion/polynomial.hpp"

namespace flexion {

// Rational function whose denominator is a multiset of linear forms.
// Canonical form: every factor monic in its leading variable, factors
// sorted, and no factor divides the numerator; the zero function has an
// empty denominator.  With that normalization, structural equality is
// function equality.
class RationalFunction {
public:
    using DenFactor = std::pair<LinearForm, int>;

    RationalFunction() = default;  // zero
    explicit RationalFunction(const Rational& c) : num_(c) {}
    explicit RationalFunction(Polynomial num) : num_(std::move(num)) {}
    RationalFunction(Polynomial num, std::vector<DenFactor> den);

    static RationalFunction variable(Variable v) {
        return RationalFunction(Polynomial::variable(v));
    }
    // c / lf
    static RationalFunction inverse_linear(const LinearForm& lf,
                                           const Rational& c = Rational(1));

    const Polynomial& numerator() const { return num_; }
    const std::vector<DenFactor>& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    // Polynomial equal to the function; empty when a factor fails to divide.
    std::optional<Polynomial> as_polynomial() const;
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Rational constant_value() const;  // requires is_constant()

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
        return a -= b;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    // Exact; throws on division by zero or a quotient that leaves the
    // linear-denominator class.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;
    RationalFunction scaled(const Rational& c) const;

    // Substitute variables by linear forms; throws if a denominator factor
    // is annihilated (pole hit).
    RationalFunction substitute(const std::map<Variable, LinearForm>& map) const;
    RationalFunction rename(const std::map<Variable, Variable>& map) const;

    std::set<Variable> variables() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Equality by cross-multiplication, independent of canonicalization;
    // kept as a test oracle.
    static bool equal_cross(const RationalFunction& a, const RationalFunction& b);

private:
    void normalize_();
    Polynomial num_;
    std::vector<DenFactor> den_;
};

}  // namespace flexion
