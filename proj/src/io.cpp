#include "flexion/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>
#include <stdexcept>

#include <json.hpp>

#include "flexion/mould.hpp"

namespace flexion {

// ------------------------------------------------------------- rendering

static void render_monomial(std::ostream& os, const Monomial& m, bool leading_star) {
    bool first = !leading_star;
    for (auto& [v, e] : m.factors()) {
        if (!first) os << "*";
        first = false;
        os << to_string(v);
        if (e != 1) os << "^" << e;
    }
}

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? "-" : "+");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        if (m.empty()) {
            os << rat_to_string(a);
        } else {
            if (a != 1) {
                os << rat_to_string(a);
                render_monomial(os, m, true);
            } else {
                render_monomial(os, m, false);
            }
        }
    }
    return os.str();
}

std::string to_text(const LinearForm& lf) { return to_text(lf.to_polynomial()); }

std::string to_text(const RationalFunction& f) {
    if (f.is_zero()) return "0";
    // Pull the rational content out of the numerator so scalars print as
    // integer factors on both sides of the bar.
    Rational content = f.numerator().content();
    if (sgn(f.numerator().terms().begin()->second) < 0) content = -content;
    Polynomial prim = f.numerator().scaled(1 / content);
    mpz_class p = content.get_num(), q = content.get_den();
    bool neg = p < 0;
    if (neg) p = -p;

    bool has_den = q != 1 || !f.denominator().empty();

    std::string num;
    if (prim.is_constant() && p != 1) {
        num = p.get_str();  // prim == 1 when the numerator is a pure scalar
    } else {
        num = to_text(prim);
        if (prim.terms().size() > 1 && (has_den || p != 1 || neg)) num = "(" + num + ")";
        if (p != 1) num = p.get_str() + "*" + num;
    }
    if (!has_den) return (neg ? "-" : "") + num;

    std::vector<std::string> atoms;
    if (q != 1) atoms.push_back(q.get_str());
    for (auto& [lf, m] : f.denominator()) {
        std::string s = to_text(lf);
        bool wrap = lf.coefficients().size() > 1 || !flexion::is_zero(lf.constant());
        if (wrap) s = "(" + s + ")";
        for (int k = 0; k < m; ++k) atoms.push_back(s);
    }
    std::string den = atoms[0];
    for (std::size_t i = 1; i < atoms.size(); ++i) den += "*" + atoms[i];
    if (atoms.size() > 1) den = "(" + den + ")";
    return (neg ? "-" : "") + num + "/" + den;
}

std::string to_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Rational a = c;
        if (!first || sgn(a) < 0) os << (sgn(a) < 0 ? "-" : (first ? "" : "+"));
        if (sgn(a) < 0) a = -a;
        first = false;
        bool unit = (a == 1) && !m.empty();
        if (!unit) {
            if (a.get_den() == 1)
                os << a.get_num().get_str();
            else
                os << "\\frac{" << a.get_num().get_str() << "}{" << a.get_den().get_str() << "}";
        }
        for (auto& [v, e] : m.factors()) {
            os << (v.family == VarFamily::U ? "u" : v.family == VarFamily::V ? "v" : "z")
               << "_{" << v.index << "}";
            if (e != 1) os << "^{" << e << "}";
        }
    }
    return os.str();
}

std::string to_latex(const RationalFunction& f) {
    if (f.is_zero()) return "0";
    if (f.denominator().empty()) return to_latex(f.numerator());
    std::ostringstream den;
    for (auto& [lf, m] : f.denominator()) {
        std::string s = to_latex(lf.to_polynomial());
        bool wrap = lf.coefficients().size() > 1 || !flexion::is_zero(lf.constant());
        for (int k = 0; k < m; ++k) den << (wrap ? "(" + s + ")" : s);
    }
    return "\\frac{" + to_latex(f.numerator()) + "}{" + den.str() + "}";
}

// --------------------------------------------------------------- parsing

namespace {

// Small expression tree so that division can walk the divisor's factors
// one atom at a time (keeps products of linear forms inside the
// representable class).
struct Node {
    enum Kind { Number, Var, Sum, Product, Power, Negate } kind;
    Rational value;                 // Number
    Variable var;                   // Var
    std::vector<std::pair<Node, bool>> factors;  // Product: (node, is_division)
    std::vector<std::pair<Node, bool>> terms;    // Sum: (node, is_subtraction)
    std::vector<Node> child;        // Power base / Negate operand
    unsigned exponent = 0;          // Power
};

struct Parser {
    const std::string& src;
    std::size_t pos = 0;

    explicit Parser(const std::string& s) : src(s) {}

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

    Node expr() {
        Node n;
        n.kind = Node::Sum;
        n.terms.push_back({term(), false});
        for (;;) {
            skip();
            if (eat('+'))
                n.terms.push_back({term(), false});
            else if (eat('-'))
                n.terms.push_back({term(), true});
            else
                break;
        }
        return n;
    }
    Node term() {
        Node n;
        n.kind = Node::Product;
        n.factors.push_back({factor(), false});
        for (;;) {
            skip();
            if (eat('*'))
                n.factors.push_back({factor(), false});
            else if (eat('/'))
                n.factors.push_back({factor(), true});
            else
                break;
        }
        return n;
    }
    Node factor() {
        skip();
        if (eat('-')) {
            Node n;
            n.kind = Node::Negate;
            n.child.push_back(factor());
            return n;
        }
        if (eat('+')) return factor();
        Node base = atom();
        skip();
        if (eat('^')) {
            skip();
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (start == pos) fail("expected exponent");
            Node n;
            n.kind = Node::Power;
            n.exponent = static_cast<unsigned>(std::stoul(src.substr(start, pos - start)));
            n.child.push_back(std::move(base));
            return n;
        }
        return base;
    }
    Node atom() {
        skip();
        if (pos >= src.size()) fail("unexpected end of input");
        if (eat('(')) {
            Node n = expr();
            if (!eat(')')) fail("expected ')'");
            return n;
        }
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            Node n;
            n.kind = Node::Number;
            n.value = rat_from_string(src.substr(start, pos - start));
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos]))) ++pos;
            Node n;
            n.kind = Node::Var;
            if (!variable_from_string(src.substr(start, pos - start), n.var))
                fail("unknown identifier '" + src.substr(start, pos - start) + "'");
            return n;
        }
        fail("unexpected character");
    }
};

RationalFunction eval_node(const Node& n);

// acc *= node or acc /= node, descending into products and powers so each
// elementary division is by a single atom.
void apply_factor(RationalFunction& acc, const Node& n, bool divide) {
    switch (n.kind) {
        case Node::Product:
            for (auto& [sub, d] : n.factors) apply_factor(acc, sub, divide != d);
            return;
        case Node::Power: {
            for (unsigned i = 0; i < n.exponent; ++i) apply_factor(acc, n.child[0], divide);
            if (n.exponent == 0 && divide) {
                // x^0 = 1; nothing to do
            }
            return;
        }
        case Node::Negate:
            apply_factor(acc, n.child[0], divide);
            acc = -acc;
            return;
        case Node::Sum:
            if (n.terms.size() == 1 && !n.terms[0].second) {
                apply_factor(acc, n.terms[0].first, divide);
                return;
            }
            [[fallthrough]];
        default: {
            RationalFunction v = eval_node(n);
            acc = divide ? acc / v : acc * v;
            return;
        }
    }
}

RationalFunction eval_node(const Node& n) {
    switch (n.kind) {
        case Node::Number: return RationalFunction(n.value);
        case Node::Var: return RationalFunction::variable(n.var);
        case Node::Negate: return -eval_node(n.child[0]);
        case Node::Power: {
            RationalFunction acc(Rational(1));
            for (unsigned i = 0; i < n.exponent; ++i) apply_factor(acc, n.child[0], false);
            return acc;
        }
        case Node::Product: {
            RationalFunction acc(Rational(1));
            for (auto& [sub, d] : n.factors) apply_factor(acc, sub, d);
            return acc;
        }
        case Node::Sum: {
            RationalFunction acc;
            for (auto& [sub, d] : n.terms) acc += d ? -eval_node(sub) : eval_node(sub);
            return acc;
        }
    }
    throw std::logic_error("bad node");
}

}  // namespace

RationalFunction ratfun_from_text(const std::string& text) {
    Parser p(text);
    Node n = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return eval_node(n);
}

Polynomial polynomial_from_text(const std::string& text) {
    RationalFunction f = ratfun_from_text(text);
    auto p = f.as_polynomial();
    if (!p) throw std::invalid_argument("expression is not a polynomial: " + text);
    return *p;
}

// ------------------------------------------------------------------ JSON

using nlohmann::json;

static json poly_to_json_obj(const Polynomial& p) {
    json terms = json::array();
    for (auto& [m, c] : p.terms()) {
        json mon = json::object();
        for (auto& [v, e] : m.factors()) mon[to_string(v)] = e;
        terms.push_back({{"coeff", rat_to_string(c)}, {"monomial", mon}});
    }
    return terms;
}

static Polynomial poly_from_json_obj(const json& j) {
    Polynomial p;
    for (auto& t : j) {
        Monomial m;
        for (auto& [k, v] : t.at("monomial").items()) {
            Variable var;
            if (!variable_from_string(k, var)) throw std::invalid_argument("bad variable " + k);
            m = *m.times(Monomial(var, v.get<int>()));
        }
        p.add_term(rat_from_string(t.at("coeff").get<std::string>()), m);
    }
    return p;
}

static json linform_to_json_obj(const LinearForm& lf) {
    json coeffs = json::object();
    for (auto& [v, c] : lf.coefficients()) coeffs[to_string(v)] = rat_to_string(c);
    return {{"coeffs", coeffs}, {"constant", rat_to_string(lf.constant())}};
}

static LinearForm linform_from_json_obj(const json& j) {
    LinearForm lf;
    lf.add_constant(rat_from_string(j.at("constant").get<std::string>()));
    for (auto& [k, v] : j.at("coeffs").items()) {
        Variable var;
        if (!variable_from_string(k, var)) throw std::invalid_argument("bad variable " + k);
        lf.add_variable(var, rat_from_string(v.get<std::string>()));
    }
    return lf;
}

static json ratfun_to_json_obj(const RationalFunction& f) {
    json den = json::array();
    for (auto& [lf, m] : f.denominator())
        den.push_back({{"form", linform_to_json_obj(lf)}, {"mult", m}});
    return {{"numerator", poly_to_json_obj(f.numerator())}, {"denominator", den}};
}

static RationalFunction ratfun_from_json_obj(const json& j) {
    Polynomial num = poly_from_json_obj(j.at("numerator"));
    std::vector<RationalFunction::DenFactor> den;
    for (auto& f : j.at("denominator"))
        den.push_back({linform_from_json_obj(f.at("form")), f.at("mult").get<int>()});
    return RationalFunction(std::move(num), std::move(den));
}

std::string to_json(const RationalFunction& f) { return ratfun_to_json_obj(f).dump(); }

RationalFunction ratfun_from_json(const std::string& s) {
    return ratfun_from_json_obj(json::parse(s));
}

std::string to_json(const Mould& m) {
    json comps = json::array();
    for (int r = 0; r <= m.depth_limit(); ++r) comps.push_back(ratfun_to_json_obj(m.at(r)));
    const char* flav = m.flavor() == Flavor::U   ? "U"
                       : m.flavor() == Flavor::V ? "V"
                       : m.flavor() == Flavor::Bi ? "BI"
                                                   : "Z";
    return json{{"flavor", flav}, {"depthLimit", m.depth_limit()}, {"components", comps}}.dump();
}

Mould mould_from_json(const std::string& s) {
    json j = json::parse(s);
    std::string flav = j.at("flavor").get<std::string>();
    Flavor f = flav == "U"    ? Flavor::U
               : flav == "V"  ? Flavor::V
               : flav == "BI" ? Flavor::Bi
                              : Flavor::Z;
    Mould m(f, j.at("depthLimit").get<int>());
    auto& comps = j.at("components");
    for (int r = 0; r <= m.depth_limit(); ++r)
        m.at(r) = ratfun_from_json_obj(comps.at(static_cast<std::size_t>(r)));
    return m;
}

}  // namespace flexion
