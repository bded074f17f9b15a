#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "flexion/mould.hpp"

namespace flexion {

// Exact Bernoulli numbers, B1 = -1/2 convention.
Rational bernoulli(unsigned n);

// Elementary named moulds.  Flavor applies to the constant-valued ones
// (one, Id, Exp, Log, I, Y); the others carry their natural flavor and the
// argument is ignored for them: Pa, pac, paj are u-moulds, pic, poc are
// v-moulds.
Mould named_mould(const std::string& name, int depth, Flavor flavor = Flavor::U);

Mould mould_one(Flavor f, int depth);
Mould mould_id(Flavor f, int depth);
Mould mould_exp(Flavor f, int depth);
Mould mould_log(Flavor f, int depth);
Mould mould_I(Flavor f, int depth);   // 1 concentrated in depth 1
Mould mould_Y(Flavor f, int depth);   // 1 in depths 0 and 1
Mould mould_Pa(int depth);            // 1/u1 in depth 1
Mould mould_pac(int depth);           // 1/(u1...ur)
Mould mould_pic(int depth);           // 1/(v1...vr)
Mould mould_poc(int depth);           // -1/(v1(v1-v2)...(v_{r-1}-v_r))
Mould mould_paj(int depth);           // 1/(u1(u1+u2)...(u1+...+ur))

// re_r concentrated in depth r, explicit form
// (v1+...+vr)/(v1(v1-v2)...(v_{r-1}-v_r)vr).
Mould re(int r);

// gepar(A) = mu(anti.swap A, swap A).
Mould gepar(const Mould& a);

// Formal diffeomorphism f(x) = x(1 + sum a_r x^r), exact coefficients.
class Diffeo {
public:
    Diffeo() = default;
    // coeffs[i] = a_{i+1}
    explicit Diffeo(std::vector<Rational> coeffs) : a_(std::move(coeffs)) {}

    // f(x) = 1 - e^{-x} truncated to a_1..a_order.
    static Diffeo one_minus_exp_neg(int order);

    int order() const { return static_cast<int>(a_.size()); }
    Rational a(int r) const;  // r >= 1

    Diffeo composed_with(const Diffeo& g, int order) const;  // f o g

    // Dilator coefficients gamma_r from x - f/f'.
    std::vector<Rational> dilator(int order) const;
    // Generator coefficients eps_r with exp(f_* d/dx) x = f.
    std::vector<Rational> generator(int order) const;

private:
    std::vector<Rational> a_;
};

struct DiffeoMoulds {
    Mould lop;  // eps_r re_r
    Mould dee;  // gamma_r re_r
    Mould p;    // group element, dilator recursion der.p = preari(p, dee)
};
DiffeoMoulds diffeo_moulds(const Diffeo& f, int depth);

// The fundamental pair and its drivers.
Mould dipil(int depth);   // -(1/(r+1)!) re_r
Mould pil(int depth);     // der.pil = preari(pil, dipil)
Mould dapal(int depth);   // swap(dipil)
Mould dupal(int depth);   // Bernoulli closed form
Mould pal(int depth);     // dur.pal = mu(pal, dupal)

}  // namespace flexion
