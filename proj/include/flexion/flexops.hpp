#pragma once

#include "flexion/mould.hpp"

namespace flexion {

// Flexion derivations attached to B in ARI (constant term 0), acting on A.
Mould amit(const Mould& b, const Mould& a);
Mould anit(const Mould& b, const Mould& a);
Mould axit(const Mould& b, const Mould& c, const Mould& a);
Mould arit(const Mould& b, const Mould& a);   // amit(B) - anit(B)
Mould awit(const Mould& b, const Mould& a);   // axit(B, anti.neg B)
Mould irat(const Mould& b, const Mould& a);   // axit(B, -push B)
Mould iwat(const Mould& b, const Mould& a);   // axit(B, anti B)

// Pre-Lie laws; the second argument needs constant term 0.
Mould preari(const Mould& a, const Mould& b);
Mould preawi(const Mould& a, const Mould& b);
Mould preira(const Mould& a, const Mould& b);

// Lie brackets; both constant terms 0.
Mould ari(const Mould& a, const Mould& b);
Mould ira(const Mould& a, const Mould& b);

// swap(mu(swap A, swap B))
Mould swamu(const Mould& a, const Mould& b);

}  // namespace flexion
