#include "flexion/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace flexion {

NCPolynomial::NCPolynomial(const Rational& c) {
    if (!flexion::is_zero(c)) terms_.emplace("", c);
}

NCPolynomial NCPolynomial::x() { return word("x"); }
NCPolynomial NCPolynomial::y() { return word("y"); }

NCPolynomial NCPolynomial::word(const std::string& w, const Rational& c) {
    NCPolynomial p;
    p.add_term(w, c);
    return p;
}

Rational NCPolynomial::coefficient(const std::string& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCPolynomial::add_term(const std::string& w, const Rational& c) {
    if (flexion::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (flexion::is_zero(it->second)) terms_.erase(it);
    }
}

int NCPolynomial::max_weight() const {
    int w = -1;
    for (auto& [word, c] : terms_) w = std::max(w, static_cast<int>(word.size()));
    return w;
}

std::optional<int> NCPolynomial::homogeneous_weight() const {
    if (terms_.empty()) return -1;
    int n = static_cast<int>(terms_.begin()->first.size());
    for (auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) != n) return std::nullopt;
    return n;
}

NCPolynomial NCPolynomial::weight_part(int n) const {
    NCPolynomial out;
    for (auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == n) out.add_term(w, c);
    return out;
}

NCPolynomial NCPolynomial::depth_part(int d) const {
    NCPolynomial out;
    for (auto& [w, c] : terms_)
        if (std::count(w.begin(), w.end(), 'y') == d) out.add_term(w, c);
    return out;
}

int NCPolynomial::min_depth() const {
    int d = -1;
    for (auto& [w, c] : terms_) {
        int k = static_cast<int>(std::count(w.begin(), w.end(), 'y'));
        d = d < 0 ? k : std::min(d, k);
    }
    return d;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial out;
    for (auto& [wa, ca] : a.terms_)
        for (auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
    return out;
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial p = *this;
    for (auto& [w, c] : p.terms_) c = -c;
    return p;
}

NCPolynomial NCPolynomial::scaled(const Rational& c) const {
    NCPolynomial p;
    if (flexion::is_zero(c)) return p;
    p = *this;
    for (auto& [w, k] : p.terms_) k *= c;
    return p;
}

NCPolynomial NCPolynomial::truncated(int max_w) const {
    NCPolynomial out;
    for (auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) <= max_w) out.add_term(w, c);
    return out;
}

NCPolynomial nc_bracket(const NCPolynomial& a, const NCPolynomial& b) {
    return a * b - b * a;
}

const NCPolynomial& C_gen(int i) {
    static std::vector<NCPolynomial> table;
    if (i < 1) throw std::invalid_argument("C_i needs i >= 1");
    if (table.empty()) table.push_back(NCPolynomial::y());
    while (static_cast<int>(table.size()) < i)
        table.push_back(nc_bracket(NCPolynomial::x(), table.back()));
    return table[static_cast<std::size_t>(i - 1)];
}

NCPolynomial partial_x(const NCPolynomial& f) {
    NCPolynomial out;
    for (auto& [w, c] : f.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != 'x') continue;
            std::string d = w.substr(0, i) + w.substr(i + 1);
            out.add_term(d, c);
        }
    }
    return out;
}

NCPolynomial D_op(const NCPolynomial& f, const NCPolynomial& g) {
    NCPolynomial image = nc_bracket(NCPolynomial::y(), f);  // D_f(y)
    NCPolynomial out;
    for (auto& [w, c] : g.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] != 'y') continue;
            NCPolynomial piece = NCPolynomial::word(w.substr(0, i), c) * image *
                                 NCPolynomial::word(w.substr(i + 1));
            out += piece;
        }
    }
    return out;
}

NCPolynomial poisson(const NCPolynomial& f, const NCPolynomial& g) {
    return nc_bracket(f, g) + D_op(f, g) - D_op(g, f);
}

NCPolynomial prelie_p(const NCPolynomial& f, const NCPolynomial& g) {
    return f * g - D_op(g, f);
}

NCPolynomial pi_y(const NCPolynomial& f) {
    NCPolynomial out;
    for (auto& [w, c] : f.terms())
        if (!w.empty() && w.back() == 'y') out.add_term(w, c);
    return out;
}

NCPolynomial pi_Y(const NCPolynomial& f) {
    NCPolynomial out;
    for (auto& [w, c] : f.terms())
        if (!w.empty() && w.front() == 'y') out.add_term(w, c);
    return out;
}

NCPolynomial ret_X(const NCPolynomial& f) {
    NCPolynomial out;
    for (auto& [w, c] : f.terms()) {
        std::string r(w.rbegin(), w.rend());
        out.add_term(r, c);
    }
    return out;
}

NCPolynomial sec(const NCPolynomial& g) {
    for (auto& [w, c] : g.terms())
        if (w.empty() || w.back() != 'y')
            throw std::invalid_argument("sec needs every word to end in y");
    NCPolynomial out;
    NCPolynomial d = g;
    Rational coeff(1);
    std::string xs;
    for (int i = 0; !d.is_zero(); ++i) {
        if (i > 0) {
            coeff *= rat(-1, i);
            xs += 'x';
        }
        for (auto& [w, c] : d.terms()) out.add_term(w + xs, c * coeff);
        d = partial_x(d);
    }
    return out;
}

bool is_lie(const NCPolynomial& f) {
    if (f.is_zero()) return true;
    if (!flexion::is_zero(f.coefficient(""))) return false;
    int n = f.max_weight();
    // All shuffle sums over pairs of nonempty words vanish.
    for (int total = 2; total <= n; ++total) {
        if (f.weight_part(total).is_zero()) continue;
        for (int len_u = 1; 2 * len_u <= total; ++len_u) {
            int len_v = total - len_u;
            for (long mu = 0; mu < (1L << len_u); ++mu) {
                for (long mv = 0; mv < (1L << len_v); ++mv) {
                    Word u, v;
                    for (int i = 0; i < len_u; ++i) u.push_back((mu >> i) & 1);
                    for (int i = 0; i < len_v; ++i) v.push_back((mv >> i) & 1);
                    Rational acc(0);
                    for (auto& [w, mult] : shuffle_set(u, v)) {
                        std::string s;
                        for (int b : w) s += b ? 'y' : 'x';
                        acc += f.coefficient(s) * static_cast<long>(mult);
                    }
                    if (!flexion::is_zero(acc)) return false;
                }
            }
        }
    }
    return true;
}

// ------------------------------------------------------------- y-words

std::string yword_to_xy(const YWord& w) {
    std::string s;
    for (int k : w) {
        if (k < 1) throw std::invalid_argument("y-word index must be positive");
        s += std::string(static_cast<std::size_t>(k - 1), 'x') + "y";
    }
    return s;
}

YWord xy_to_yword(const std::string& w) {
    if (w.empty() || w.back() != 'y') throw std::invalid_argument("word does not end in y");
    YWord out;
    int run = 0;
    for (char ch : w) {
        if (ch == 'x') {
            ++run;
        } else {
            out.push_back(run + 1);
            run = 0;
        }
    }
    return out;
}

std::map<YWord, Rational> y_view(const NCPolynomial& f) {
    std::map<YWord, Rational> out;
    for (auto& [w, c] : pi_y(f).terms()) out[xy_to_yword(w)] = c;
    return out;
}

// ----------------------------------------------------------- C-encoding

namespace {

// Lex order with y > x; the leading word of C_{a1}...C_{ar} is
// y x^{a1-1} y x^{a2-1} ... with sign (-1)^{n-r}.
bool lex_y_less(const std::string& a, const std::string& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] == 'x';  // y beats x
    return a.size() < b.size();
}

}  // namespace

std::map<std::vector<int>, Rational> c_encode(const NCPolynomial& f) {
    std::map<std::vector<int>, Rational> out;
    NCPolynomial rest = f;
    Rational c0 = rest.coefficient("");
    if (!flexion::is_zero(c0)) {
        out[{}] = c0;
        rest.add_term("", -c0);
    }
    while (!rest.is_zero()) {
        auto lead = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
            if (lex_y_less(lead->first, it->first)) lead = it;
        const std::string& w = lead->first;
        if (w.front() != 'y') throw std::invalid_argument("polynomial is not in Q<C>");
        // w = y x^{a1-1} y x^{a2-1} ... x^{ar-1}
        std::vector<int> cw;
        std::size_t i = 1;
        for (;;) {
            int run = 0;
            while (i < w.size() && w[i] == 'x') {
                ++run;
                ++i;
            }
            cw.push_back(run + 1);
            if (i >= w.size()) break;
            ++i;  // skip the y
        }
        int n = static_cast<int>(w.size()), r = static_cast<int>(cw.size());
        Rational sign = (n - r) % 2 ? Rational(-1) : Rational(1);
        Rational coeff = lead->second * sign;
        NCPolynomial monom(Rational(1));
        for (int a : cw) monom = monom * C_gen(a);
        rest -= monom.scaled(coeff);
        auto [it, inserted] = out.emplace(cw, coeff);
        if (!inserted) throw std::logic_error("duplicate C-word in peeling");
    }
    return out;
}

NCPolynomial c_expand(const std::map<std::vector<int>, Rational>& words) {
    NCPolynomial out;
    for (auto& [cw, c] : words) {
        NCPolynomial monom(Rational(1));
        for (int a : cw) monom = monom * C_gen(a);
        out += monom.scaled(c);
    }
    return out;
}

bool in_QC(const NCPolynomial& f) { return partial_x(f).is_zero(); }

// -------------------------------------------------------- regularization

std::map<std::string, Rational> shuffle_reg(const std::string& word) {
    // word = y^r v x^s with v neither starting in y nor ending in x.  The
    // projection onto convergent words kills the word itself whenever it is
    // non-convergent, so the sum below is already fully regularized; for a
    // convergent word only the (a,b) = (0,0) term survives and returns the
    // word unchanged.
    std::size_t r = 0, s = 0;
    while (r < word.size() && word[r] == 'y') ++r;
    while (s < word.size() - r && word[word.size() - 1 - s] == 'x') ++s;
    std::string v = word.substr(r, word.size() - r - s);

    std::map<std::string, Rational> out;
    auto word_of = [](const Word& w) {
        std::string t;
        for (int b : w) t += b ? 'y' : 'x';
        return t;
    };
    for (std::size_t a = 0; a <= r; ++a) {
        for (std::size_t b = 0; b <= s; ++b) {
            Word ya(a, 1), xb(b, 0), mid;
            for (char ch : std::string(r - a, 'y') + v + std::string(s - b, 'x'))
                mid.push_back(ch == 'y');
            Rational sign = ((a + b) % 2) ? Rational(-1) : Rational(1);
            for (auto& [w1, m1] : shuffle_set(ya, mid)) {
                for (auto& [w2, m2] : shuffle_set(w1, xb)) {
                    std::string t = word_of(w2);
                    if (t.empty() || t.front() != 'x' || t.back() != 'y') continue;
                    Rational add = sign * static_cast<long>(m1) * static_cast<long>(m2);
                    auto [it, ins] = out.emplace(t, add);
                    if (!ins) it->second += add;
                }
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (flexion::is_zero(it->second))
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

// ----------------------------------------------------- ds / ls membership

Rational ds_correction(const NCPolynomial& f) {
    auto n_opt = f.homogeneous_weight();
    if (!n_opt || *n_opt < 1) throw std::invalid_argument("ds correction needs homogeneous f");
    int n = *n_opt;
    Rational c = f.coefficient(std::string(static_cast<std::size_t>(n - 1), 'x') + "y");
    Rational sign = (n - 1) % 2 ? Rational(-1) : Rational(1);
    return sign * c / n;
}

namespace {

// All y-words of total weight n (compositions of n).
std::vector<YWord> ywords_of_weight(int n) {
    std::vector<YWord> out;
    if (n == 0) return out;
    struct Rec {
        std::vector<YWord>& out;
        YWord cur;
        void go(int rest) {
            if (rest == 0) {
                out.push_back(cur);
                return;
            }
            for (int k = 1; k <= rest; ++k) {
                cur.push_back(k);
                go(rest - k);
                cur.pop_back();
            }
        }
    } rec{out, {}};
    rec.go(n);
    return out;
}

int yword_weight(const YWord& w) {
    int n = 0;
    for (int k : w) n += k;
    return n;
}

}  // namespace

MembershipReport ds_member(const NCPolynomial& f) {
    MembershipReport rep;
    auto n_opt = f.homogeneous_weight();
    if (!n_opt) {
        rep.reason = "not homogeneous";
        return rep;
    }
    int n = *n_opt;
    if (f.is_zero()) {
        rep.member = true;
        return rep;
    }
    if (n < 3) {
        rep.reason = "weight below 3";
        return rep;
    }
    if (!is_lie(f)) {
        rep.reason = "shuffle relations fail (not a Lie element)";
        return rep;
    }
    // f_* as a y-word functional
    std::map<YWord, Rational> fstar = y_view(f);
    fstar[YWord(static_cast<std::size_t>(n), 1)] += ds_correction(f);
    auto coeff = [&](const YWord& w) {
        auto it = fstar.find(w);
        return it == fstar.end() ? Rational(0) : it->second;
    };
    auto add_rule = [](int a, int b) { return a + b; };
    for (int wu = 1; 2 * wu <= n; ++wu) {
        for (auto& u : ywords_of_weight(wu)) {
            for (auto& v : ywords_of_weight(n - wu)) {
                Rational acc(0);
                for (auto& [w, m] : stuffle_set(u, v, add_rule))
                    acc += coeff(w) * static_cast<long>(m);
                if (!flexion::is_zero(acc)) {
                    rep.reason = "stuffle relation fails";
                    rep.witness = {u, v};
                    return rep;
                }
            }
        }
    }
    rep.member = true;
    return rep;
}

MembershipReport ls_member(const NCPolynomial& f) {
    MembershipReport rep;
    auto n_opt = f.homogeneous_weight();
    if (!n_opt) {
        rep.reason = "not homogeneous";
        return rep;
    }
    int n = *n_opt;
    if (f.is_zero()) {
        rep.member = true;
        return rep;
    }
    if (n < 3) {
        rep.reason = "weight below 3";
        return rep;
    }
    if (!is_lie(f)) {
        rep.reason = "shuffle relations fail (not a Lie element)";
        return rep;
    }
    if (n % 2 == 0 && !f.depth_part(1).is_zero()) {
        rep.reason = "depth-1 part in even weight is excluded";
        return rep;
    }
    auto fy = y_view(f);
    auto coeff = [&](const YWord& w) {
        auto it = fy.find(w);
        return it == fy.end() ? Rational(0) : it->second;
    };
    for (int wu = 1; 2 * wu <= n; ++wu) {
        for (auto& u : ywords_of_weight(wu)) {
            for (auto& v : ywords_of_weight(n - wu)) {
                Rational acc(0);
                for (auto& [w, m] : shuffle_set(u, v))
                    acc += coeff(w) * static_cast<long>(m);
                if (!flexion::is_zero(acc)) {
                    rep.reason = "y-shuffle relation fails";
                    rep.witness = {u, v};
                    return rep;
                }
            }
        }
    }
    rep.member = true;
    return rep;
}

// -------------------------------------------------------- twisted Magnus

NCSeries operator*(const NCSeries& a, const NCSeries& b) {
    int cap = std::min(a.cap(), b.cap());
    NCPolynomial out;
    for (auto& [wa, ca] : a.poly().terms()) {
        if (static_cast<int>(wa.size()) > cap) continue;
        for (auto& [wb, cb] : b.poly().terms()) {
            if (static_cast<int>(wa.size() + wb.size()) > cap) continue;
            out.add_term(wa + wb, ca * cb);
        }
    }
    return NCSeries(out, cap);
}

NCSeries operator+(const NCSeries& a, const NCSeries& b) {
    return NCSeries(a.poly() + b.poly(), std::min(a.cap(), b.cap()));
}

NCSeries operator-(const NCSeries& a, const NCSeries& b) {
    return NCSeries(a.poly() - b.poly(), std::min(a.cap(), b.cap()));
}

NCSeries NCSeries::inverse() const {
    if (p_.coefficient("") != 1)
        throw std::invalid_argument("series inverse needs constant term 1");
    NCSeries u = NCSeries::one(cap_);
    NCSeries h = u - *this;  // no constant term
    NCSeries acc = u;
    NCSeries power = u;
    for (int k = 1; k <= cap_; ++k) {
        power = power * h;
        if (power.poly().is_zero()) break;
        acc = acc + power;
    }
    return acc;
}

NCSeries subst_y(const NCSeries& f, const NCSeries& s) {
    int cap = std::min(f.cap(), s.cap());
    NCPolynomial out;
    for (auto& [w, c] : f.poly().terms()) {
        NCSeries acc(NCPolynomial(c), cap);
        for (char ch : w) {
            if (ch == 'x')
                acc = acc * NCSeries(NCPolynomial::x(), cap);
            else
                acc = acc * s;
            if (acc.poly().is_zero()) break;
        }
        out += acc.poly();
    }
    return NCSeries(out, cap);
}

NCSeries odot(const NCSeries& f, const NCSeries& g) {
    NCSeries conj = g * NCSeries(NCPolynomial::y(), g.cap()) * g.inverse();
    return subst_y(f, conj) * g;
}

NCSeries exp_odot(const NCPolynomial& f, int cap) {
    NCSeries acc = NCSeries::one(cap) + NCSeries(f, cap);
    NCPolynomial power = f;  // p(f^k), left-iterated
    Rational inv_fact(1);
    for (int k = 2; k <= cap; ++k) {
        power = prelie_p(power, f).truncated(cap);
        inv_fact /= k;
        if (power.is_zero()) break;
        acc = acc + NCSeries(power.scaled(inv_fact), cap);
    }
    return acc;
}

NCSeries R_apply(const NCSeries& g, const NCSeries& h) {
    NCSeries img = g * NCSeries(NCPolynomial::y(), g.cap()) * g.inverse();
    return subst_y(h, img);
}

NCSeries N_apply(const NCSeries& g, const NCSeries& h) {
    NCSeries img = NCSeries(NCPolynomial::y(), g.cap()) * g;
    return subst_y(h, img);
}

NCSeries X_apply(const NCSeries& g, const NCSeries& gp, const NCSeries& h) {
    NCSeries img = g * NCSeries(NCPolynomial::y(), g.cap()) * gp;
    return subst_y(h, img);
}

// ------------------------------------------------------------------- io

std::string to_text(const NCPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : f.terms()) {
        Rational a = c;
        if (!first || sgn(a) < 0) os << (sgn(a) < 0 ? "-" : (first ? "" : "+"));
        if (sgn(a) < 0) a = -a;
        first = false;
        // compress runs: x x y -> x^2*y
        std::string body;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!body.empty()) body += "*";
            body += w[i];
            if (j - i > 1) body += "^" + std::to_string(j - i);
            i = j;
        }
        if (w.empty()) {
            os << rat_to_string(a);
        } else if (a == 1) {
            os << body;
        } else {
            os << rat_to_string(a) << "*" << body;
        }
    }
    return os.str();
}

std::string to_text_y(const NCPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [yw, c0] : y_view(f)) {
        Rational a = c0;
        if (!first || sgn(a) < 0) os << (sgn(a) < 0 ? "-" : (first ? "" : "+"));
        if (sgn(a) < 0) a = -a;
        first = false;
        std::string body;
        for (int k : yw) {
            if (!body.empty()) body += "*";
            body += "y" + std::to_string(k);
        }
        if (a == 1)
            os << body;
        else
            os << rat_to_string(a) << "*" << body;
    }
    return os.str();
}

std::string to_text_c(const NCPolynomial& f) {
    auto enc = c_encode(f);
    if (enc.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [cw, c0] : enc) {
        Rational a = c0;
        if (!first || sgn(a) < 0) os << (sgn(a) < 0 ? "-" : (first ? "" : "+"));
        if (sgn(a) < 0) a = -a;
        first = false;
        std::string body;
        for (int k : cw) {
            if (!body.empty()) body += "*";
            body += "C" + std::to_string(k);
        }
        if (cw.empty())
            os << rat_to_string(a);
        else if (a == 1)
            os << body;
        else
            os << rat_to_string(a) << "*" << body;
    }
    return os.str();
}

// Grammar: sums of products of powers of atoms; atoms are x, y, y<k>, C<k>,
// [expr, expr], integer or integer/integer, parenthesized expressions.
namespace {

struct NCParser {
    const std::string& src;
    std::size_t pos = 0;
    explicit NCParser(const std::string& s) : src(s) {}

    void skip() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(pos));
    }

    NCPolynomial expr() {
        NCPolynomial acc = term();
        for (;;) {
            skip();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }
    NCPolynomial term() {
        NCPolynomial acc = factor();
        for (;;) {
            skip();
            if (eat('*'))
                acc = acc * factor();
            else if (pos < src.size() &&
                     (src[pos] == '[' || src[pos] == '(' ||
                      std::isalpha(static_cast<unsigned char>(src[pos]))))
                acc = acc * factor();  // juxtaposition
            else
                return acc;
        }
    }
    NCPolynomial factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        NCPolynomial base = atom();
        skip();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (start == pos) fail("expected exponent");
            unsigned e = static_cast<unsigned>(std::stoul(src.substr(start, pos - start)));
            NCPolynomial acc(Rational(1));
            for (unsigned i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }
    NCPolynomial atom() {
        skip();
        if (pos >= src.size()) fail("unexpected end of input");
        if (eat('(')) {
            NCPolynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (eat('[')) {
            NCPolynomial a = expr();
            if (!eat(',')) fail("expected ',' in bracket");
            NCPolynomial b = expr();
            if (!eat(']')) fail("expected ']'");
            return nc_bracket(a, b);
        }
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            Rational num = rat_from_string(src.substr(start, pos - start));
            skip();
            if (pos < src.size() && src[pos] == '/') {
                std::size_t save = pos;
                ++pos;
                skip();
                std::size_t dstart = pos;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                    ++pos;
                if (dstart == pos) {
                    pos = save;  // not a fraction
                } else {
                    num /= rat_from_string(src.substr(dstart, pos - dstart));
                }
            }
            return NCPolynomial(num);
        }
        if (c == 'x') {
            ++pos;
            return NCPolynomial::x();
        }
        if (c == 'y' || c == 'C') {
            ++pos;
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (start == pos) {
                if (c == 'y') return NCPolynomial::y();
                fail("C needs an index");
            }
            int k = std::stoi(src.substr(start, pos - start));
            if (k < 1) fail("index must be positive");
            if (c == 'C') return C_gen(k);
            return NCPolynomial::word(yword_to_xy({k}));
        }
        fail("unexpected character");
    }
};

}  // namespace

NCPolynomial ncpoly_from_text(const std::string& text) {
    NCParser p(text);
    NCPolynomial out = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace flexion
