#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flexion/rational.hpp"
#include "flexion/words.hpp"

namespace flexion {

// Exact-coefficient noncommutative polynomial in the letters x, y.
// Words are strings over {'x','y'}; weight = length, depth = y-count.
class NCPolynomial {
public:
    using TermMap = std::map<std::string, Rational>;

    NCPolynomial() = default;
    explicit NCPolynomial(const Rational& c);
    static NCPolynomial x();
    static NCPolynomial y();
    static NCPolynomial word(const std::string& w, const Rational& c = Rational(1));

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const std::string& w) const;
    void add_term(const std::string& w, const Rational& c);

    int max_weight() const;
    // Weight when every word has the same length, else nullopt (the zero
    // polynomial reports weight -1).
    std::optional<int> homogeneous_weight() const;
    NCPolynomial weight_part(int n) const;
    NCPolynomial depth_part(int d) const;  // words with exactly d letters y
    int min_depth() const;

    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);
    NCPolynomial operator-() const;
    NCPolynomial scaled(const Rational& c) const;
    NCPolynomial truncated(int max_weight) const;

    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    TermMap terms_;
};

NCPolynomial nc_bracket(const NCPolynomial& a, const NCPolynomial& b);
// C_i = ad(x)^{i-1}(y)
const NCPolynomial& C_gen(int i);

// Word derivative: remove one occurrence of x, summed over occurrences.
NCPolynomial partial_x(const NCPolynomial& f);
// Derivation with D_f(x) = 0, D_f(y) = [y, f], applied word-wise.
NCPolynomial D_op(const NCPolynomial& f, const NCPolynomial& g);
// {f,g} = [f,g] + D_f(g) - D_g(f)
NCPolynomial poisson(const NCPolynomial& f, const NCPolynomial& g);
// p(f,g) = f g - D_g(f), the pre-Lie law of the twisted Magnus algebra
NCPolynomial prelie_p(const NCPolynomial& f, const NCPolynomial& g);

NCPolynomial pi_y(const NCPolynomial& f);   // words ending in y
NCPolynomial pi_Y(const NCPolynomial& f);   // words starting with y
NCPolynomial ret_X(const NCPolynomial& f);  // words written backwards
// sec(g) = sum (-1)^i/i! partial_x^i(g) x^i; g must end in y.
NCPolynomial sec(const NCPolynomial& g);

// Shuffle criterion for Lie membership: all shuffle sums of coefficients
// vanish.
bool is_lie(const NCPolynomial& f);

// ------------------------------------------------------------- y-words

// A word ending in y, written as indices: x^{k1-1}y...x^{kr-1}y = (k1..kr).
using YWord = std::vector<int>;
std::string yword_to_xy(const YWord& w);
// Requires a word ending in y.
YWord xy_to_yword(const std::string& w);
// The y_i-coefficient view of pi_y(f).
std::map<YWord, Rational> y_view(const NCPolynomial& f);

// ----------------------------------------------------------- C-encoding

// f written in the generators C_i by leading-term peeling; throws when f
// is not in Q<C>.
std::map<std::vector<int>, Rational> c_encode(const NCPolynomial& f);
NCPolynomial c_expand(const std::map<std::vector<int>, Rational>& words);
bool in_QC(const NCPolynomial& f);  // partial_x(f) == 0

// -------------------------------------------------------- regularization

// Shuffle regularization (every word as a combination of convergent words,
// i.e. starting with x and ending with y).
std::map<std::string, Rational> shuffle_reg(const std::string& word);

// ----------------------------------------------------- ds / ls membership

struct MembershipReport {
    bool member = false;
    std::string reason;  // empty when member
    std::optional<std::pair<YWord, YWord>> witness;  // first violated pair
};

MembershipReport ds_member(const NCPolynomial& f);
MembershipReport ls_member(const NCPolynomial& f);
// Stuffle correction coefficient of y^n: ((-1)^{n-1}/n)(f|x^{n-1}y).
Rational ds_correction(const NCPolynomial& f);

// -------------------------------------------------------- twisted Magnus

// Weight-truncated power series in x, y.
class NCSeries {
public:
    NCSeries(NCPolynomial p, int cap) : p_(p.truncated(cap)), cap_(cap) {}
    static NCSeries one(int cap) { return NCSeries(NCPolynomial(Rational(1)), cap); }

    const NCPolynomial& poly() const { return p_; }
    int cap() const { return cap_; }

    friend NCSeries operator*(const NCSeries& a, const NCSeries& b);
    friend NCSeries operator+(const NCSeries& a, const NCSeries& b);
    friend NCSeries operator-(const NCSeries& a, const NCSeries& b);
    friend bool operator==(const NCSeries& a, const NCSeries& b) {
        return a.p_ == b.p_ && a.cap_ == b.cap_;
    }

    NCSeries inverse() const;  // constant term 1

private:
    NCPolynomial p_;
    int cap_;
};

// f with every y replaced by the series s.
NCSeries subst_y(const NCSeries& f, const NCSeries& s);
// f . g = f(x, g y g^{-1}) g
NCSeries odot(const NCSeries& f, const NCSeries& g);
// exp for the pre-Lie law p.
NCSeries exp_odot(const NCPolynomial& f, int cap);
// Endomorphisms x -> x fixed, y -> image; applied to h.
NCSeries R_apply(const NCSeries& g, const NCSeries& h);   // y -> g y g^{-1}
NCSeries N_apply(const NCSeries& g, const NCSeries& h);   // y -> y g
NCSeries X_apply(const NCSeries& g, const NCSeries& gp, const NCSeries& h);  // y -> g y gp

// ------------------------------------------------------------------- io

std::string to_text(const NCPolynomial& f);
NCPolynomial ncpoly_from_text(const std::string& text);
std::string to_text_y(const NCPolynomial& f);  // y-word form, words ending in y
std::string to_text_c(const NCPolynomial& f);  // C-form; requires f in Q<C>

}  // namespace flexion
