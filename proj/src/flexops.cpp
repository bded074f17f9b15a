#include "flexion/flexops.hpp"

#include <stdexcept>

namespace flexion {

static void require_ari(const Mould& b, const char* who) {
    if (!flexion::is_zero(b.constant_term()))
        throw std::invalid_argument(std::string(who) + " requires constant term 0");
}

// Shared sum over cuts w = a b c.  The amit term takes (a ^c, b_) with
// b, c nonempty; the anit term takes (a^ c, _b) with a, b nonempty.
enum class CutMode { Amit, Anit };

static Mould cut_sum(const Mould& b, const Mould& a, CutMode mode) {
    Mould out(a.flavor(), std::min(a.depth_limit(), b.depth_limit()));
    for (int r = 1; r <= out.depth_limit(); ++r) {
        FlexWord w = standard_word(r);
        RationalFunction acc;
        for (int k = 0; k <= r; ++k) {
            for (int l = 1; k + l <= r; ++l) {
                auto kz = static_cast<std::size_t>(k), lz = static_cast<std::size_t>(l);
                if (mode == CutMode::Amit) {
                    if (k + l == r) continue;  // c nonempty
                    // a ^c : first letter of c absorbs b's u-sum
                    FlexWord aw(w.begin(), w.begin() + static_cast<long>(kz));
                    FlexWord cw(w.begin() + static_cast<long>(kz + lz), w.end());
                    cw[0].u += u_sum(w, kz, kz + lz);
                    aw.insert(aw.end(), cw.begin(), cw.end());
                    // b_ : v's lowered by first v of c
                    FlexWord bw(w.begin() + static_cast<long>(kz),
                                w.begin() + static_cast<long>(kz + lz));
                    for (auto& letter : bw) letter.v -= w[kz + lz].v;
                    RationalFunction fb = mould_eval(b, bw);
                    if (fb.is_zero()) continue;
                    acc += mould_eval(a, aw) * fb;
                } else {
                    if (k == 0) continue;  // a nonempty
                    // a^ c : last letter of a absorbs b's u-sum
                    FlexWord aw(w.begin(), w.begin() + static_cast<long>(kz));
                    aw.back().u += u_sum(w, kz, kz + lz);
                    aw.insert(aw.end(), w.begin() + static_cast<long>(kz + lz), w.end());
                    // _b : v's lowered by last v of a
                    FlexWord bw(w.begin() + static_cast<long>(kz),
                                w.begin() + static_cast<long>(kz + lz));
                    for (auto& letter : bw) letter.v -= w[kz - 1].v;
                    RationalFunction fb = mould_eval(b, bw);
                    if (fb.is_zero()) continue;
                    acc += mould_eval(a, aw) * fb;
                }
            }
        }
        out.at(r) = acc;
    }
    return out;
}

Mould amit(const Mould& b, const Mould& a) {
    require_ari(b, "amit");
    return cut_sum(b, a, CutMode::Amit);
}

Mould anit(const Mould& b, const Mould& a) {
    require_ari(b, "anit");
    return cut_sum(b, a, CutMode::Anit);
}

Mould axit(const Mould& b, const Mould& c, const Mould& a) {
    return amit(b, a) + anit(c, a);
}

Mould arit(const Mould& b, const Mould& a) { return amit(b, a) - anit(b, a); }

Mould awit(const Mould& b, const Mould& a) { return axit(b, anti(neg(b)), a); }

Mould irat(const Mould& b, const Mould& a) { return axit(b, -push(b), a); }

Mould iwat(const Mould& b, const Mould& a) { return axit(b, anti(b), a); }

Mould preari(const Mould& a, const Mould& b) {
    require_ari(b, "preari");
    return arit(b, a) + mu(a, b);
}

Mould preawi(const Mould& a, const Mould& b) {
    require_ari(b, "preawi");
    return awit(b, a) + mu(a, b);
}

Mould preira(const Mould& a, const Mould& b) {
    require_ari(b, "preira");
    return irat(b, a) + mu(a, b);
}

Mould ari(const Mould& a, const Mould& b) {
    require_ari(a, "ari");
    require_ari(b, "ari");
    return preari(a, b) - preari(b, a);
}

Mould ira(const Mould& a, const Mould& b) {
    require_ari(a, "ira");
    require_ari(b, "ira");
    return preira(a, b) - preira(b, a);
}

Mould swamu(const Mould& a, const Mould& b) { return swap(mu(swap(a), swap(b))); }

}  // namespace flexion
