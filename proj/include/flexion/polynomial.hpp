#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "flexion/rational.hpp"
#include "flexion/variables.hpp"

namespace flexion {

class LinearForm;

// Monomial: sorted exponent list, no zero exponents stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Variable v, int exp = 1);

    int degree() const;
    int exponent(Variable v) const;
    bool empty() const { return factors_.empty(); }
    const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }

    // Product; empty optional when the Eps-truncation (Eps^2 = 0) kills it.
    std::optional<Monomial> times(const Monomial& other) const;

    // Graded lexicographic over (family, index): higher total degree first,
    // ties broken by the exponent of the earliest variable.
    static int cmp(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }

private:
    std::vector<std::pair<Variable, int>> factors_;
    friend class Polynomial;
};

struct MonomialGrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms kept in descending graded-lex order, so begin() is the leading term.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    static Polynomial variable(Variable v);
    static Polynomial term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    // Constant term (0 if absent).
    Rational constant_term() const;

    int degree() const;
    bool is_homogeneous(int* deg_out = nullptr) const;
    std::set<Variable> variables() const;

    Rational coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Every variable present in the map is replaced; variables absent from
    // the map are kept as themselves.
    Polynomial substitute(const std::map<Variable, LinearForm>& map) const;
    // Pure renaming (no expansion).
    Polynomial rename(const std::map<Variable, Variable>& map) const;

    // Exact division by a linear form (at least one variable coefficient);
    // empty optional when not divisible.
    std::optional<Polynomial> divide_by_linear(const LinearForm& lf) const;
    // Exact division by an arbitrary nonzero polynomial; empty when not exact.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

    // Positive rational c with (*this)/c integer-primitive; 0 for the zero
    // polynomial.  Sign of the leading coefficient is kept in the cofactor.
    Rational content() const;

    void add_term(const Rational& c, const Monomial& m);

private:
    TermMap terms_;
};

// Affine-linear combination of variables; the denominator class of every
// rational function in the library.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(const Rational& c) : constant_(c) {}
    static LinearForm variable(Variable v, const Rational& coeff = Rational(1));

    const std::map<Variable, Rational>& coefficients() const { return coeffs_; }
    const Rational& constant() const { return constant_; }

    bool is_zero() const { return coeffs_.empty() && flexion::is_zero(constant_); }
    bool is_constant() const { return coeffs_.empty(); }
    Rational coefficient(Variable v) const;

    LinearForm& operator+=(const LinearForm& o);
    LinearForm& operator-=(const LinearForm& o);
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    LinearForm operator-() const;
    LinearForm scaled(const Rational& c) const;

    void add_variable(Variable v, const Rational& coeff);
    void add_constant(const Rational& c) { constant_ += c; }

    // Substitution of linear forms stays linear.
    LinearForm substitute(const std::map<Variable, LinearForm>& map) const;
    LinearForm rename(const std::map<Variable, Variable>& map) const;

    Polynomial to_polynomial() const;

    // First variable in (family, index) order; requires a variable term.
    Variable leading_variable() const;
    Rational leading_coefficient() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.constant_ == b.constant_ && a.coeffs_ == b.coeffs_;
    }
    // Deterministic total order used to sort denominator factors.
    static int cmp(const LinearForm& a, const LinearForm& b);
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        return cmp(a, b) < 0;
    }

private:
    std::map<Variable, Rational> coeffs_;
    Rational constant_;
};

}  // namespace flexion
