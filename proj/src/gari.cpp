#include "flexion/gari.hpp"

#include <stdexcept>

namespace flexion {

static void require_group(const Mould& b, const char* who) {
    if (flexion::is_zero(b.constant_term()))
        throw std::invalid_argument(std::string(who) + " requires nonzero constant term");
}

static FlexWord slice(const FlexWord& w, std::size_t from, std::size_t to) {
    return FlexWord(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

Mould invmu(const Mould& b) {
    require_group(b, "invmu");
    Rational b0 = b.constant_term();
    Mould x(b.flavor(), b.depth_limit());
    x.set_constant(1 / b0);
    for (int r = 1; r <= b.depth_limit(); ++r) {
        FlexWord w = standard_word(r);
        RationalFunction acc;
        for (int i = 0; i < r; ++i) {
            if (x.at(i).is_zero()) continue;
            RationalFunction tail =
                mould_eval(b, slice(w, static_cast<std::size_t>(i), static_cast<std::size_t>(r)));
            if (tail.is_zero()) continue;
            acc += x.at(i) * tail;
        }
        x.at(r) = acc.scaled(-1 / b0);
    }
    return x;
}

Mould expari(const Mould& a) {
    if (!flexion::is_zero(a.constant_term()))
        throw std::invalid_argument("expari requires constant term 0");
    Mould out = Mould::unit(a.flavor(), a.depth_limit());
    Mould power = a;  // left-iterated preari power
    Rational inv_fact(1);
    for (int i = 1; i <= a.depth_limit(); ++i) {
        inv_fact /= i;
        out = out + mould_scale(power, inv_fact);
        if (i < a.depth_limit()) power = preari(power, a);
    }
    return out;
}

Mould logari(const Mould& g) {
    if (g.constant_term() != 1)
        throw std::invalid_argument("logari requires constant term 1");
    Mould x(g.flavor(), g.depth_limit());
    for (int r = 1; r <= g.depth_limit(); ++r) {
        Mould e = expari(x);
        x.at(r) = g.at(r) - e.at(r);
    }
    return x;
}

// --------------------------------------------------------------- gaxit

namespace {

struct GaxitContext {
    const Mould *B, *C, *A;
    const FlexWord* w;
    std::size_t r;
    RationalFunction acc;

    // pos: next unread index; aword: A-argument so far; b_last: index in
    // aword of the last letter of the current b block; w_b_last: index in w
    // of that letter.
    void after_b(std::size_t pos, FlexWord aword, std::size_t b_last, std::size_t w_b_last,
                 RationalFunction prod) {
        // Close: trailing c = [pos, r), possibly empty.
        {
            RationalFunction cf = c_factor(pos, r, w_b_last);
            if (!cf.is_zero()) {
                FlexWord aw = aword;
                if (pos < r) aw[b_last].u += u_sum(*w, pos, r);
                RationalFunction fa = mould_eval(*A, aw);
                if (!fa.is_zero()) acc += fa * prod * cf;
            }
        }
        // Continue with c, a', b'; interior gap c a' nonempty.
        for (std::size_t clen = 0; pos + clen < r; ++clen) {
            RationalFunction cf = c_factor(pos, pos + clen, w_b_last);
            if (cf.is_zero()) continue;
            FlexWord aw_c = aword;
            if (clen > 0) aw_c[b_last].u += u_sum(*w, pos, pos + clen);
            std::size_t alo = pos + clen;
            for (std::size_t alen = (clen == 0 ? 1u : 0u); alo + alen < r; ++alen) {
                for (std::size_t blen = 1; alo + alen + blen <= r; ++blen) {
                    step_block(alo, alen, blen, aw_c, prod * cf);
                }
            }
        }
    }

    // One a-block [alo, alo+alen) followed by b-block; then recurse.
    void step_block(std::size_t alo, std::size_t alen, std::size_t blen, const FlexWord& aword,
                    RationalFunction prod) {
        std::size_t blo = alo + alen;
        RationalFunction bf = b_factor(alo, blo);
        if (bf.is_zero()) return;
        FlexWord aw = aword;
        std::size_t b_first = aw.size();
        for (std::size_t i = blo; i < blo + blen; ++i) aw.push_back((*w)[i]);
        if (alen > 0) aw[b_first].u += u_sum(*w, alo, blo);
        after_b(blo + blen, std::move(aw), b_first + blen - 1, blo + blen - 1, prod * bf);
    }

    // B(a_i with v's lowered by the first v of the following b).
    RationalFunction b_factor(std::size_t alo, std::size_t blo) {
        FlexWord part = slice(*w, alo, blo);
        for (auto& letter : part) letter.v -= (*w)[blo].v;
        return mould_eval(*B, part);
    }
    // C(c_i with v's lowered by the last v of the preceding b).
    RationalFunction c_factor(std::size_t clo, std::size_t chi, std::size_t w_b_last) {
        FlexWord part = slice(*w, clo, chi);
        for (auto& letter : part) letter.v -= (*w)[w_b_last].v;
        return mould_eval(*C, part);
    }
};

}  // namespace

Mould gaxit(const Mould& b, const Mould& c, const Mould& a) {
    int depth = std::min({a.depth_limit(), b.depth_limit(), c.depth_limit()});
    Mould out(a.flavor(), depth);
    out.at(0) = a.at(0);
    for (int r = 1; r <= depth; ++r) {
        FlexWord w = standard_word(r);
        GaxitContext ctx{&b, &c, &a, &w, static_cast<std::size_t>(r), {}};
        // Leading a_1 may be empty.
        for (std::size_t alen = 0; alen < ctx.r; ++alen)
            for (std::size_t blen = 1; alen + blen <= ctx.r; ++blen)
                ctx.step_block(0, alen, blen, {}, RationalFunction(Rational(1)));
        out.at(r) = ctx.acc;
    }
    return out;
}

Mould garit(const Mould& b, const Mould& a) {
    require_group(b, "garit");
    return gaxit(b, invmu(b), a);
}

Mould ganit(const Mould& b, const Mould& a) {
    return gaxit(Mould::unit(b.flavor(), b.depth_limit()), b, a);
}

Mould gari(const Mould& a, const Mould& b) {
    require_group(b, "gari");
    return mu(garit(b, a), b);
}

Mould gari(const Mould& a, const Mould& b, const Mould& c) { return gari(gari(a, b), c); }

Mould invgari(const Mould& b) {
    require_group(b, "invgari");
    Mould x(b.flavor(), b.depth_limit());
    x.set_constant(1 / b.constant_term());
    Mould target = Mould::unit(b.flavor(), b.depth_limit());
    for (int r = 1; r <= b.depth_limit(); ++r) {
        Mould g = gari(x, b);
        x.at(r) = (target.at(r) - g.at(r)).scaled(1 / b.constant_term());
    }
    return x;
}

std::pair<Mould, Mould> gaxi(const std::pair<Mould, Mould>& ab,
                             const std::pair<Mould, Mould>& cd) {
    const auto& [a, b] = ab;
    const auto& [c, d] = cd;
    return {mu(gaxit(c, d, a), c), mu(d, gaxit(c, d, b))};
}

Mould invgaxi_left(const Mould& a, const Mould& b) {
    require_group(a, "invgaxi");
    require_group(b, "invgaxi");
    // mu(gaxit_{A,B}(X), A) = 1, triangular: the depth-r equation carries X_r
    // with coefficient A0^2 B0.
    Rational coeff = a.constant_term() * a.constant_term() * b.constant_term();
    Mould x(a.flavor(), std::min(a.depth_limit(), b.depth_limit()));
    Mould target = Mould::unit(a.flavor(), x.depth_limit());
    for (int r = 0; r <= x.depth_limit(); ++r) {
        Mould g = mu(gaxit(a, b, x), a);
        x.at(r) = x.at(r) + (target.at(r) - g.at(r)).scaled(1 / coeff);
    }
    return x;
}

Mould invgani(const Mould& b) {
    require_group(b, "invgani");
    Mould x(b.flavor(), b.depth_limit());
    Mould target = Mould::unit(b.flavor(), b.depth_limit());
    for (int r = 0; r <= b.depth_limit(); ++r) {
        Mould f = mu(x, ganit(x, b));
        x.at(r) = x.at(r) + (target.at(r) - f.at(r)).scaled(1 / b.constant_term());
    }
    return x;
}

Mould adari(const Mould& a, const Mould& b) {
    return gari(preari(a, b), invgari(a));
}

Mould adari_series(const Mould& a, const Mould& b) {
    Mould l = logari(a);
    Mould out = b;
    Mould term = b;
    for (int k = 1; k <= b.depth_limit(); ++k) {
        term = mould_scale(ari(l, term), Rational(1) / k);
        if (term.is_zero()) break;
        out = out + term;
    }
    return out;
}

Mould adgari(const Mould& a, const Mould& b) { return gari(a, b, invgari(a)); }

Mould fragari(const Mould& a, const Mould& b) { return gari(a, invgari(b)); }

Mould ras(const Mould& b) { return invgari(swap(invgari(swap(b)))); }

Mould rash(const Mould& b) {
    return mu(push(swap(invmu(swap(b)))), b);
}

Mould crash(const Mould& c) { return rash(swap(invgari(swap(c)))); }

Mould gira(const Mould& a, const Mould& b) { return swap(gari(swap(a), swap(b))); }

}  // namespace flexion
