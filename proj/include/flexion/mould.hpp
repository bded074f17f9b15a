#pragma once

#include <vector>

#include "flexion/ratfun.hpp"

namespace flexion {

// U: function of the u_i row only.  V: of the v_i row.  Bi: both rows.
// Z: the vimo encoding, depth r in z_0..z_r (no mould algebra defined).
enum class Flavor { U, V, Bi, Z };

// Depth-truncated mould: one rational function per depth 0..depth_limit,
// the depth-r component in variables of index <= r for its flavor.
class Mould {
public:
    Mould() : Mould(Flavor::U, 0) {}
    Mould(Flavor flavor, int depth_limit);

    Flavor flavor() const { return flavor_; }
    int depth_limit() const { return depth_; }

    RationalFunction& at(int r);
    const RationalFunction& at(int r) const;

    Rational constant_term() const { return comp_[0].is_zero() ? Rational(0)
                                                               : comp_[0].constant_value(); }
    void set_constant(const Rational& c) { comp_[0] = RationalFunction(c); }

    bool is_zero() const;

    // Common weight n with every nonzero depth-r component a homogeneous
    // polynomial of degree n - r; nullopt when none fits.
    std::optional<int> homogeneous_weight() const;

    // Constant mould with the given per-depth values (index 0 = depth 0).
    static Mould constant(Flavor f, int depth_limit, const std::vector<Rational>& values);
    static Mould zero(Flavor f, int depth_limit) { return Mould(f, depth_limit); }
    static Mould unit(Flavor f, int depth_limit);  // 1 at depth 0

    // Validates the variable discipline; throws std::logic_error on breach.
    void check() const;

private:
    Flavor flavor_;
    int depth_;
    std::vector<RationalFunction> comp_;
};

bool mould_eq(const Mould& a, const Mould& b, int through_depth = -1);
// Depth of the first differing component, -1 when equal.
int mould_first_diff(const Mould& a, const Mould& b, int through_depth = -1);

// Same components with the depth limit raised, new components zero; only
// sound for moulds known to vanish there (e.g. concentrated ones).
Mould extended_zero(const Mould& m, int depth);

Mould operator+(const Mould& a, const Mould& b);
Mould operator-(const Mould& a, const Mould& b);
Mould operator-(const Mould& a);
Mould mould_scale(const Mould& a, const Rational& c);

// --------------------------------------------------------------- flexions

// One letter of a word with values in the ambient depth-r variables.
struct FlexLetter {
    LinearForm u, v;
};
using FlexWord = std::vector<FlexLetter>;

// Letters (u_1, v_1), ..., (u_r, v_r).
FlexWord standard_word(int r);
LinearForm u_sum(const FlexWord& w, std::size_t from, std::size_t to);

// M evaluated on a generalized word: substitute letter values into the
// depth-|w| component.
RationalFunction mould_eval(const Mould& m, const FlexWord& w);

// Cut of the depth-r word into a|b|c with |a| = k, |b| = l.
struct WordCut {
    int r = 0, k = 0, l = 0;
};

enum class FlexKind { UpperC, AUpper, BLowerRight, LowerBLeft };

// The flexed piece for the cut: UpperC -> the c part with the first letter's
// u raised by b's u-sum; AUpper -> a with the last letter's u raised by b's
// u-sum; BLowerRight -> b with v's lowered by c's first v; LowerBLeft -> b
// with v's lowered by a's last v.  Degenerate cuts give the plain piece.
FlexWord flexed(const WordCut& cut, FlexKind kind);

// ------------------------------------------------------------ basic laws

Mould mu(const Mould& a, const Mould& b);
Mould lu(const Mould& a, const Mould& b);
// Requires n.constant_term() == 0.
Mould compose(const Mould& m, const Mould& n);

enum class UnaryOp { Push, Neg, Anti, Mantar, Pari, Der, Dur };
Mould unary(const Mould& m, UnaryOp op);

Mould push(const Mould& m);
Mould neg(const Mould& m);
Mould anti(const Mould& m);
Mould mantar(const Mould& m);
Mould pari(const Mould& m);
Mould der(const Mould& m);
Mould dur(const Mould& m);

// The u/v exchange; flavor U <-> V, Bi fixed.
Mould swap(const Mould& m);

}  // namespace flexion
