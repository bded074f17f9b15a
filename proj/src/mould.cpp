#include "flexion/mould.hpp"

#include <stdexcept>

namespace flexion {

Mould::Mould(Flavor flavor, int depth_limit) : flavor_(flavor), depth_(depth_limit) {
    if (depth_limit < 0) throw std::invalid_argument("negative depth limit");
    comp_.resize(static_cast<std::size_t>(depth_limit) + 1);
}

RationalFunction& Mould::at(int r) {
    if (r < 0 || r > depth_) throw std::out_of_range("mould depth out of range");
    return comp_[static_cast<std::size_t>(r)];
}

const RationalFunction& Mould::at(int r) const {
    if (r < 0 || r > depth_) throw std::out_of_range("mould depth out of range");
    return comp_[static_cast<std::size_t>(r)];
}

bool Mould::is_zero() const {
    for (auto& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<int> Mould::homogeneous_weight() const {
    std::optional<int> weight;
    for (int r = 0; r <= depth_; ++r) {
        const auto& c = at(r);
        if (c.is_zero()) continue;
        auto p = c.as_polynomial();
        if (!p) return std::nullopt;
        int d;
        if (!p->is_homogeneous(&d)) return std::nullopt;
        int n = d + r;
        if (weight && *weight != n) return std::nullopt;
        weight = n;
    }
    return weight;
}

Mould Mould::constant(Flavor f, int depth_limit, const std::vector<Rational>& values) {
    Mould m(f, depth_limit);
    for (std::size_t r = 0; r < values.size() && r <= static_cast<std::size_t>(depth_limit); ++r)
        m.comp_[r] = RationalFunction(values[r]);
    return m;
}

Mould Mould::unit(Flavor f, int depth_limit) {
    Mould m(f, depth_limit);
    m.set_constant(Rational(1));
    return m;
}

void Mould::check() const {
    for (int r = 0; r <= depth_; ++r) {
        for (Variable v : at(r).variables()) {
            bool ok = false;
            switch (flavor_) {
                case Flavor::U: ok = v.family == VarFamily::U && static_cast<int>(v.index) <= r; break;
                case Flavor::V: ok = v.family == VarFamily::V && static_cast<int>(v.index) <= r; break;
                case Flavor::Bi:
                    ok = (v.family == VarFamily::U || v.family == VarFamily::V) &&
                         static_cast<int>(v.index) <= r;
                    break;
                case Flavor::Z: ok = v.family == VarFamily::Z && static_cast<int>(v.index) <= r; break;
            }
            if (v.family == VarFamily::Eps) ok = true;
            if (!ok)
                throw std::logic_error("component " + std::to_string(r) +
                                       " uses out-of-range variable " + to_string(v));
        }
    }
}

static void require_compatible(const Mould& a, const Mould& b) {
    if (a.flavor() == Flavor::Z || b.flavor() == Flavor::Z)
        throw std::invalid_argument("no mould algebra on the vimo encoding");
    if (a.flavor() != b.flavor()) {
        // Constant-valued moulds combine with anything.
        auto constant_valued = [](const Mould& m) {
            for (int r = 0; r <= m.depth_limit(); ++r)
                if (!m.at(r).is_zero() && !m.at(r).is_constant()) return false;
            return true;
        };
        if (!constant_valued(a) && !constant_valued(b))
            throw std::invalid_argument("flavor mismatch");
    }
}

static Flavor merge_flavor(const Mould& a, const Mould& b) {
    if (a.flavor() == b.flavor()) return a.flavor();
    auto constant_valued = [](const Mould& m) {
        for (int r = 0; r <= m.depth_limit(); ++r)
            if (!m.at(r).is_zero() && !m.at(r).is_constant()) return false;
        return true;
    };
    return constant_valued(a) ? b.flavor() : a.flavor();
}

bool mould_eq(const Mould& a, const Mould& b, int through_depth) {
    return mould_first_diff(a, b, through_depth) < 0;
}

int mould_first_diff(const Mould& a, const Mould& b, int through_depth) {
    int d = std::min(a.depth_limit(), b.depth_limit());
    if (through_depth >= 0) d = std::min(d, through_depth);
    for (int r = 0; r <= d; ++r)
        if (!(a.at(r) == b.at(r))) return r;
    return -1;
}

Mould operator+(const Mould& a, const Mould& b) {
    require_compatible(a, b);
    Mould out(merge_flavor(a, b), std::min(a.depth_limit(), b.depth_limit()));
    for (int r = 0; r <= out.depth_limit(); ++r) out.at(r) = a.at(r) + b.at(r);
    return out;
}

Mould operator-(const Mould& a, const Mould& b) {
    require_compatible(a, b);
    Mould out(merge_flavor(a, b), std::min(a.depth_limit(), b.depth_limit()));
    for (int r = 0; r <= out.depth_limit(); ++r) out.at(r) = a.at(r) - b.at(r);
    return out;
}

Mould operator-(const Mould& a) {
    Mould out(a.flavor(), a.depth_limit());
    for (int r = 0; r <= out.depth_limit(); ++r) out.at(r) = -a.at(r);
    return out;
}

Mould extended_zero(const Mould& m, int depth) {
    if (depth <= m.depth_limit()) return m;
    Mould out(m.flavor(), depth);
    for (int r = 0; r <= m.depth_limit(); ++r) out.at(r) = m.at(r);
    return out;
}

Mould mould_scale(const Mould& a, const Rational& c) {
    Mould out(a.flavor(), a.depth_limit());
    for (int r = 0; r <= out.depth_limit(); ++r) out.at(r) = a.at(r).scaled(c);
    return out;
}

// --------------------------------------------------------------- flexions

FlexWord standard_word(int r) {
    FlexWord w(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        w[static_cast<std::size_t>(i)].u = LinearForm::variable(u_var(static_cast<std::uint32_t>(i + 1)));
        w[static_cast<std::size_t>(i)].v = LinearForm::variable(v_var(static_cast<std::uint32_t>(i + 1)));
    }
    return w;
}

LinearForm u_sum(const FlexWord& w, std::size_t from, std::size_t to) {
    LinearForm s;
    for (std::size_t i = from; i < to; ++i) s += w[i].u;
    return s;
}

RationalFunction mould_eval(const Mould& m, const FlexWord& w) {
    const int r = static_cast<int>(w.size());
    if (r > m.depth_limit()) throw std::logic_error("mould_eval beyond depth limit");
    const RationalFunction& comp = m.at(r);
    if (comp.is_zero() || comp.is_constant()) return comp;
    std::map<Variable, LinearForm> sub;
    for (int i = 0; i < r; ++i) {
        sub[u_var(static_cast<std::uint32_t>(i + 1))] = w[static_cast<std::size_t>(i)].u;
        sub[v_var(static_cast<std::uint32_t>(i + 1))] = w[static_cast<std::size_t>(i)].v;
    }
    return comp.substitute(sub);
}

FlexWord flexed(const WordCut& cut, FlexKind kind) {
    if (cut.k < 0 || cut.l < 0 || cut.k + cut.l > cut.r)
        throw std::invalid_argument("bad word cut");
    FlexWord w = standard_word(cut.r);
    auto k = static_cast<std::size_t>(cut.k);
    auto l = static_cast<std::size_t>(cut.l);
    auto r = static_cast<std::size_t>(cut.r);
    FlexWord out;
    switch (kind) {
        case FlexKind::UpperC: {
            out.assign(w.begin() + static_cast<long>(k + l), w.end());
            if (l > 0 && !out.empty()) out[0].u += u_sum(w, k, k + l);
            break;
        }
        case FlexKind::AUpper: {
            out.assign(w.begin(), w.begin() + static_cast<long>(k));
            if (l > 0 && !out.empty()) out.back().u += u_sum(w, k, k + l);
            break;
        }
        case FlexKind::BLowerRight: {
            out.assign(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k + l));
            if (k + l < r)
                for (auto& letter : out) letter.v -= w[k + l].v;
            break;
        }
        case FlexKind::LowerBLeft: {
            out.assign(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k + l));
            if (k > 0)
                for (auto& letter : out) letter.v -= w[k - 1].v;
            break;
        }
    }
    return out;
}

// ------------------------------------------------------------ basic laws

static FlexWord slice(const FlexWord& w, std::size_t from, std::size_t to) {
    return FlexWord(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

Mould mu(const Mould& a, const Mould& b) {
    require_compatible(a, b);
    Mould out(merge_flavor(a, b), std::min(a.depth_limit(), b.depth_limit()));
    for (int r = 0; r <= out.depth_limit(); ++r) {
        RationalFunction acc;
        FlexWord w = standard_word(r);
        for (int i = 0; i <= r; ++i) {
            const auto& ai = a.at(i);
            const auto& bj = b.at(r - i);
            if (ai.is_zero() || bj.is_zero()) continue;
            RationalFunction left = ai;  // prefix keeps its own variables
            RationalFunction right = mould_eval(b, slice(w, static_cast<std::size_t>(i),
                                                         static_cast<std::size_t>(r)));
            acc += left * right;
        }
        out.at(r) = acc;
    }
    return out;
}

Mould lu(const Mould& a, const Mould& b) { return mu(a, b) - mu(b, a); }

// Compositions of r into nonempty consecutive blocks.
static void block_decompositions(int r, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    struct Rec {
        int r;
        std::vector<std::vector<int>>& out;
        void go(int rest, std::vector<int>& cur) {
            if (rest == 0) {
                out.push_back(cur);
                return;
            }
            for (int len = 1; len <= rest; ++len) {
                cur.push_back(len);
                go(rest - len, cur);
                cur.pop_back();
            }
        }
    } rec{r, out};
    rec.go(r, cur);
}

Mould compose(const Mould& m, const Mould& n) {
    require_compatible(m, n);
    if (!flexion::is_zero(n.constant_term()))
        throw std::invalid_argument("compose requires N(empty) = 0");
    Mould out(merge_flavor(m, n), std::min(m.depth_limit(), n.depth_limit()));
    out.at(0) = m.at(0);
    for (int r = 1; r <= out.depth_limit(); ++r) {
        FlexWord w = standard_word(r);
        std::vector<std::vector<int>> decomps;
        block_decompositions(r, decomps);
        RationalFunction acc;
        for (auto& blocks : decomps) {
            FlexWord outer;
            RationalFunction prod(Rational(1));
            std::size_t pos = 0;
            bool dead = false;
            for (int len : blocks) {
                auto lz = static_cast<std::size_t>(len);
                FlexLetter sum;
                for (std::size_t i = pos; i < pos + lz; ++i) {
                    sum.u += w[i].u;
                    sum.v += w[i].v;
                }
                outer.push_back(sum);
                RationalFunction f = mould_eval(n, slice(w, pos, pos + lz));
                if (f.is_zero()) {
                    dead = true;
                    break;
                }
                prod = prod * f;
                pos += lz;
            }
            if (dead) continue;
            acc += mould_eval(m, outer) * prod;
        }
        out.at(r) = acc;
    }
    return out;
}

Mould unary(const Mould& m, UnaryOp op) {
    switch (op) {
        case UnaryOp::Push: return push(m);
        case UnaryOp::Neg: return neg(m);
        case UnaryOp::Anti: return anti(m);
        case UnaryOp::Mantar: return mantar(m);
        case UnaryOp::Pari: return pari(m);
        case UnaryOp::Der: return der(m);
        case UnaryOp::Dur: return dur(m);
    }
    throw std::logic_error("bad unary op");
}

Mould push(const Mould& m) {
    Mould out(m.flavor(), m.depth_limit());
    out.at(0) = m.at(0);
    for (int r = 1; r <= m.depth_limit(); ++r) {
        FlexWord w(static_cast<std::size_t>(r));
        // (u_1,...,u_r) -> (-u_1-...-u_r, u_1, ..., u_{r-1})
        // (v_1,...,v_r) -> (-v_r, v_1-v_r, ..., v_{r-1}-v_r)
        LinearForm usum, vr = LinearForm::variable(v_var(static_cast<std::uint32_t>(r)));
        for (int i = 1; i <= r; ++i) usum += LinearForm::variable(u_var(static_cast<std::uint32_t>(i)));
        w[0].u = -usum;
        w[0].v = -vr;
        for (int i = 2; i <= r; ++i) {
            w[static_cast<std::size_t>(i - 1)].u =
                LinearForm::variable(u_var(static_cast<std::uint32_t>(i - 1)));
            w[static_cast<std::size_t>(i - 1)].v =
                LinearForm::variable(v_var(static_cast<std::uint32_t>(i - 1))) - vr;
        }
        out.at(r) = mould_eval(m, w);
    }
    return out;
}

Mould neg(const Mould& m) {
    Mould out(m.flavor(), m.depth_limit());
    out.at(0) = m.at(0);
    for (int r = 1; r <= m.depth_limit(); ++r) {
        FlexWord w = standard_word(r);
        for (auto& letter : w) {
            letter.u = -letter.u;
            letter.v = -letter.v;
        }
        out.at(r) = mould_eval(m, w);
    }
    return out;
}

Mould anti(const Mould& m) {
    Mould out(m.flavor(), m.depth_limit());
    out.at(0) = m.at(0);
    for (int r = 1; r <= m.depth_limit(); ++r) {
        FlexWord w = standard_word(r);
        std::reverse(w.begin(), w.end());
        out.at(r) = mould_eval(m, w);
    }
    return out;
}

Mould mantar(const Mould& m) {
    Mould out = anti(m);
    for (int r = 0; r <= out.depth_limit(); ++r)
        if (r % 2 == 0 && r > 0) out.at(r) = -out.at(r);  // (-1)^{r-1}
    return out;
}

Mould pari(const Mould& m) {
    Mould out = m;
    for (int r = 1; r <= out.depth_limit(); r += 2) out.at(r) = -out.at(r);
    return out;
}

Mould der(const Mould& m) {
    Mould out(m.flavor(), m.depth_limit());
    for (int r = 1; r <= m.depth_limit(); ++r) out.at(r) = m.at(r).scaled(Rational(r));
    return out;
}

Mould dur(const Mould& m) {
    Mould out(m.flavor(), m.depth_limit());
    for (int r = 1; r <= m.depth_limit(); ++r) {
        LinearForm sum;
        for (int i = 1; i <= r; ++i)
            sum += LinearForm::variable(m.flavor() == Flavor::V
                                            ? v_var(static_cast<std::uint32_t>(i))
                                            : u_var(static_cast<std::uint32_t>(i)));
        out.at(r) = m.at(r) * RationalFunction(sum.to_polynomial());
    }
    return out;
}

Mould swap(const Mould& m) {
    Flavor out_flavor = m.flavor() == Flavor::U   ? Flavor::V
                        : m.flavor() == Flavor::V ? Flavor::U
                                                  : m.flavor();
    if (m.flavor() == Flavor::Z) throw std::invalid_argument("swap undefined on vimo flavor");
    Mould out(out_flavor, m.depth_limit());
    out.at(0) = m.at(0);
    for (int r = 1; r <= m.depth_limit(); ++r) {
        auto rz = static_cast<std::uint32_t>(r);
        FlexWord w(static_cast<std::size_t>(r));
        // swap(M)(u|v) = M(ubar|vbar), ubar_i = v_{r+1-i} - v_{r+2-i}
        // (v_{r+1} = 0), vbar_i = u_1 + ... + u_{r+1-i}.
        for (int i = 1; i <= r; ++i) {
            auto iz = static_cast<std::size_t>(i - 1);
            LinearForm ubar = LinearForm::variable(v_var(rz + 1 - static_cast<std::uint32_t>(i)));
            if (i > 1)
                ubar -= LinearForm::variable(v_var(rz + 2 - static_cast<std::uint32_t>(i)));
            LinearForm vbar;
            for (int j = 1; j <= r + 1 - i; ++j)
                vbar += LinearForm::variable(u_var(static_cast<std::uint32_t>(j)));
            w[iz].u = ubar;
            w[iz].v = vbar;
        }
        out.at(r) = mould_eval(m, w);
    }
    return out;
}

}  // namespace flexion
