#include <intdiff/errors.hpp>
#include <intdiff/syntax.hpp>

#include <algorithm>
#include <cctype>
#include <optional>

namespace intdiff {

namespace {

std::string describe(const std::set<std::string>& expected) {
    std::string s;
    for (const auto& e : expected) s += (s.empty() ? "" : ", ") + e;
    return s;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line_, std::size_t column_,
                       std::set<std::string> expected_)
    : Error(message + " at " + std::to_string(line_) + ":" + std::to_string(column_) +
            (expected_.empty() ? "" : " (expected " + describe(expected_) + ")")),
      line(line_),
      column(column_),
      expected(std::move(expected_)) {}

// ======================================================================
//                                parsing
// ======================================================================

namespace {

std::optional<ExpPoly> as_function(const IntDiffOperator& op) {
    if (!op.is_differential() || op.diff_order() != 0) return std::nullopt;
    return op.diff_coefficient(0);
}

std::optional<Scalar> as_constant(const IntDiffOperator& op) {
    auto f = as_function(op);
    if (!f || !f->is_constant()) return std::nullopt;
    return f->constant_value();
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    [[noreturn]] void fail(const std::string& msg, std::set<std::string> expected = {}) const { fail_at(pos_, msg, std::move(expected)); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& msg, std::set<std::string> expected = {}) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col, std::move(expected));
    }

    void ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool at_end() {
        ws();
        return pos_ >= src_.size();
    }
    char peek() {
        ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(at_end() ? "unexpected end of input" : "unexpected character", {std::string("'") + c + "'"});
    }
    void finish() {
        if (!at_end()) fail("trailing input", {"end of input"});
    }
    std::size_t pos() const { return pos_; }
    void reset(std::size_t p) { pos_ = p; }

    std::string peek_word() {
        ws();
        std::size_t e = pos_;
        while (e < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[e])) || src_[e] == '_')) ++e;
        return src_.substr(pos_, e - pos_);
    }

    Integer integer() {
        ws();
        std::size_t e = pos_;
        while (e < src_.size() && std::isdigit(static_cast<unsigned char>(src_[e]))) ++e;
        if (e == pos_) fail("expected a number", {"number"});
        Integer v(src_.substr(pos_, e - pos_));
        pos_ = e;
        return v;
    }

    unsigned small_integer() {
        const std::size_t at = pos_;
        Integer v = integer();
        if (v > 10000) fail_at(at, "exponent too large");
        return static_cast<unsigned>(v.get_ui());
    }

    // Signed rational literal p or p/q.
    Rational point() {
        bool neg = accept('-');
        if (!neg) accept('+');
        Rational r(integer());
        if (accept('/')) {
            const std::size_t at = pos_;
            Integer d = integer();
            if (d == 0) fail_at(at, "zero denominator");
            r /= Rational(d);
        }
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }

    // --------------------------------------------------------- expressions

    IntDiffOperator sum() {
        IntDiffOperator r;
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        IntDiffOperator t = product();
        r = neg ? -t : t;
        while (true) {
            if (accept('+')) r += product();
            else if (accept('-')) r -= product();
            else break;
        }
        return r;
    }

    bool starts_atom() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '(';
    }

    IntDiffOperator product() {
        IntDiffOperator r = power();
        while (true) {
            if (accept('*')) {
                r = r * power();
            } else if (peek() == '/') {
                ++pos_;
                const std::size_t at = pos_;
                IntDiffOperator d = power();
                auto c = as_constant(d);
                if (!c) fail_at(at, "division is only defined by constants");
                if (c->is_zero()) fail_at(at, "division by zero");
                r = c->inv() * r;
            } else if (starts_atom() && peek_word() != "inv") {
                r = r * power();
            } else {
                break;
            }
        }
        return r;
    }

    IntDiffOperator power() {
        IntDiffOperator base = atom();
        if (!accept('^')) return base;
        unsigned n = small_integer();
        IntDiffOperator r(1);
        for (unsigned i = 0; i < n; ++i) r = r * base;
        return r;
    }

    IntDiffOperator atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return IntDiffOperator(Scalar(Rational(integer())));
        if (c == '(') {
            ++pos_;
            IntDiffOperator r = sum();
            expect(')');
            return r;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        const std::size_t at = pos_;
        std::string w = peek_word();
        if (w.empty())
            fail(at_end() ? "unexpected end of input" : "unexpected character",
                 {"number", "x", "D", "A", "E[", "I[", "exp(", "("});
        pos_ += w.size();
        if (w == "x") return IntDiffOperator(ExpPoly::x(1));
        if (w == "D") return IntDiffOperator::D(1);
        if (w == "A") return IntDiffOperator::A();
        if (w == "E") {
            expect('[');
            Rational a = point();
            expect(']');
            return IntDiffOperator::E(a);
        }
        if (w == "I") {
            expect('[');
            Rational a = point();
            expect(',');
            Rational b = point();
            expect(']');
            return IntDiffOperator::E(b) * IntDiffOperator::A() - IntDiffOperator::E(a) * IntDiffOperator::A();
        }
        if (w == "exp") {
            expect('(');
            const std::size_t arg_at = pos_;
            IntDiffOperator arg = sum();
            expect(')');
            return IntDiffOperator(exponential(arg, arg_at));
        }
        fail_at(at, "unknown identifier '" + w + "'", {"x", "D", "A", "E", "I", "exp"});
    }

    // exp(q*x + c) = E(c) e^(q x) with rational q, c.
    ExpPoly exponential(const IntDiffOperator& arg, std::size_t at) {
        auto f = as_function(arg);
        if (!f) fail_at(at, "exp expects an expression in x");
        Rational q(0), c(0);
        for (const auto& [m, coef] : f->terms()) {
            if (m.freq != 0 || m.degree > 1 || !coef.is_rational())
                fail_at(at, "exp expects a rational linear argument q*x + c");
            (m.degree == 1 ? q : c) = coef.rational_value();
        }
        return ExpPoly::monomial(Monomial{q, 0}, Scalar::exp(c));
    }

    // ------------------------------------------------------------ problems

    DiffOperator diff_operator(const IntDiffOperator& op, std::size_t at) {
        if (!op.is_differential() || op.is_zero() || !(op.diff_coefficient(op.diff_order()) == ExpPoly(1)))
            fail_at(at, "expected a monic differential operator");
        return DiffOperator::from_operator(op);
    }

    StieltjesCondition condition() {
        const std::size_t at = pos_;
        IntDiffOperator op = sum();
        try {
            return StieltjesCondition::from_operator(op);
        } catch (const InvariantViolation&) {
            fail_at(at, "expected a boundary condition", {"E[a]*D^k", "I[a,b]*f"});
        }
    }

    std::vector<StieltjesCondition> condition_list() {
        std::vector<StieltjesCondition> bs;
        expect('[');
        if (accept(']')) return bs;
        do {
            bs.push_back(condition());
        } while (accept(','));
        expect(']');
        return bs;
    }

    // "(T, [...])" with the opening parenthesis still pending.
    BoundaryProblem problem() {
        expect('(');
        const std::size_t at = pos_;
        IntDiffOperator op = sum();
        expect(',');
        DiffOperator T = diff_operator(op, at);
        auto bs = condition_list();
        expect(')');
        return BoundaryProblem(T, bs);
    }

    Rational coefficient_prefix() {
        // [p[/q]] ['*']
        if (!std::isdigit(static_cast<unsigned char>(peek()))) return Rational(1);
        Rational r(integer());
        if (accept('/')) {
            const std::size_t at = pos_;
            Integer d = integer();
            if (d == 0) fail_at(at, "zero denominator");
            r /= Rational(d);
            r.canonicalize();
        }
        accept('*');
        return r;
    }

    ProblemCombination combination() {
        ProblemCombination r;
        if (peek() == '0') {
            const std::size_t save = pos_;
            ++pos_;
            if (at_end() || peek() == ')') return r;
            pos_ = save;
        }
        bool neg = accept('-');
        if (!neg) accept('+');
        while (true) {
            Rational l = coefficient_prefix();
            BoundaryProblem p = problem();
            r.add(neg ? Rational(-l) : l, p);
            if (accept('+')) neg = false;
            else if (accept('-')) neg = true;
            else break;
        }
        return r;
    }

    MethoriousOperator fraction() {
        if (peek_word() != "inv") return {BoundaryProblem(), combination()};
        pos_ += 3;
        BoundaryProblem den = problem();
        accept('*');
        if (peek() == '(') {
            const std::size_t save = pos_;
            try {
                ++pos_;
                ProblemCombination c = combination();
                expect(')');
                return {den, c};
            } catch (const ParseError&) {
                pos_ = save;
            }
        }
        return {den, combination()};
    }

    MethoriousFunction methorious() {
        MethoriousFunction m;
        bool neg = accept('-');
        if (!neg) accept('+');
        while (true) {
            const std::size_t at = pos_;
            IntDiffOperator t = product();
            auto f = as_function(t);
            if (!f) fail_at(at, "expected a function");
            ExpPoly v = neg ? -*f : *f;
            if (accept(':')) {
                const std::size_t pat = pos_;
                BoundaryProblem p = problem();
                try {
                    m.add_ideal(v, p);
                } catch (const InvariantViolation&) {
                    fail_at(pat, "ideal element function is not in the kernel of the operator");
                }
            } else {
                m += MethoriousFunction(v);
            }
            if (accept('+')) neg = false;
            else if (accept('-')) neg = true;
            else break;
        }
        return m;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
};

template <class F>
auto parse_all(const std::string& src, F f) {
    Parser p(src);
    auto r = f(p);
    p.finish();
    return r;
}

}  // namespace

IntDiffOperator parse_op(const std::string& src) {
    return parse_all(src, [](Parser& p) { return p.sum(); });
}

ExpPoly parse_expr(const std::string& src) {
    return parse_all(src, [](Parser& p) {
        IntDiffOperator op = p.sum();
        auto f = as_function(op);
        if (!f) p.fail_at(0, "expected an expression in x");
        return *f;
    });
}

Scalar parse_scalar(const std::string& src) {
    return parse_all(src, [](Parser& p) {
        IntDiffOperator op = p.sum();
        auto c = as_constant(op);
        if (!c) p.fail_at(0, "expected a constant");
        return *c;
    });
}

Rational parse_point(const std::string& src) {
    return parse_all(src, [](Parser& p) { return p.point(); });
}

DiffOperator parse_diff_op(const std::string& src) {
    return parse_all(src, [](Parser& p) { return p.diff_operator(p.sum(), 0); });
}

StieltjesCondition parse_condition(const std::string& src) {
    return parse_all(src, [](Parser& p) { return p.condition(); });
}

BoundaryProblem parse_problem(const std::string& src) {
    return parse_all(src, [](Parser& p) { return p.problem(); });
}

ProblemCombination parse_combination(const std::string& src) {
    return parse_all(src, [](Parser& p) { return p.combination(); });
}

MethoriousOperator parse_fraction(const std::string& src) {
    return parse_all(src, [](Parser& p) { return p.fraction(); });
}

MethoriousFunction parse_methorious(const std::string& src) {
    return parse_all(src, [](Parser& p) { return p.methorious(); });
}

BoundaryProblem parse_problem(const ProblemSpec& spec) {
    DiffOperator T = parse_diff_op(spec.T);
    std::vector<StieltjesCondition> bs;
    for (const auto& c : spec.conditions) bs.push_back(parse_condition(c));
    if (!spec.fundamental_system.empty()) {
        std::vector<ExpPoly> u;
        for (const auto& e : spec.fundamental_system) u.push_back(parse_expr(e));
        fundamental_system(T, u);  // validates
        T.attach_kernel_basis(u);
    }
    return BoundaryProblem(T, bs);
}

// ======================================================================
//                               rendering
// ======================================================================

namespace {

bool latex(Style s) { return s == Style::Latex; }

// Sum of signed parts: first part keeps its sign, later ones are joined by " + " / " - ".
std::string join_signed(const std::vector<std::pair<bool, std::string>>& parts, const std::string& zero = "0") {
    if (parts.empty()) return zero;
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& [neg, text] = parts[i];
        if (i == 0) out += neg ? "-" + text : text;
        else out += (neg ? " - " : " + ") + text;
    }
    return out;
}

std::string render_exp_arg(const Rational& mu, Style s, bool with_x) {
    // exponent text for e^(mu) or e^(mu x)
    if (!with_x) return render(mu, s);
    if (mu == 1) return "x";
    if (mu == -1) return "-x";
    if (latex(s)) return render(mu, s) + " x";
    return render(mu, s) + "*x";
}

std::string render_exp(const Rational& mu, Style s, bool with_x) {
    if (latex(s)) return "e^{" + render_exp_arg(mu, s, with_x) + "}";
    return "exp(" + render_exp_arg(mu, s, with_x) + ")";
}

std::string render_body(const Monomial& m, Style s) {
    std::vector<std::string> f;
    if (m.degree == 1) f.push_back("x");
    else if (m.degree > 1) f.push_back(latex(s) ? "x^{" + std::to_string(m.degree) + "}" : "x^" + std::to_string(m.degree));
    if (m.freq != 0) f.push_back(render_exp(m.freq, s, true));
    std::string out;
    for (const auto& x : f) out += (out.empty() ? "" : (latex(s) ? " " : "*")) + x;
    return out;
}

bool needs_parens(const std::string& t) {
    int depth = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (c == '(' || c == '{' || c == '[') ++depth;
        else if (c == ')' || c == '}' || c == ']') --depth;
        else if (depth == 0 && i > 0 && (c == '+' || c == '-' || c == '/')) return true;
    }
    return false;
}

std::string wrap(const std::string& t, Style s) {
    if (!needs_parens(t) && (t.empty() || t[0] != '-')) return t;
    return latex(s) ? "\\left(" + t + "\\right)" : "(" + t + ")";
}

std::string render_const(const ExpConstant& c, Style s) {
    std::vector<std::pair<bool, std::string>> parts;
    const auto& t = c.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        const Rational& mu = it->first;
        Rational q = it->second;
        bool neg = q < 0;
        if (neg) q = -q;
        if (mu == 0) {
            parts.emplace_back(neg, render(q, s));
            continue;
        }
        std::string e = render_exp(mu, s, false);
        if (q == 1) parts.emplace_back(neg, e);
        else if (latex(s)) parts.emplace_back(neg, render(q, s) + " " + e);
        else parts.emplace_back(neg, render(q, s) + "*" + e);
    }
    return join_signed(parts);
}

// Coefficient times body, returned as (negative, magnitude text).
std::pair<bool, std::string> render_product(const Scalar& c, const std::string& body, Style s) {
    const std::string sep = latex(s) ? " " : "*";
    if (c.is_rational()) {
        Rational q = c.rational_value();
        bool neg = q < 0;
        if (neg) q = -q;
        const Integer num = q.get_num(), den = q.get_den();
        if (body.empty()) return {neg, render(q, s)};
        if (latex(s)) {
            std::string core = num == 1 ? body : num.get_str() + " " + body;
            if (den != 1) core = "\\frac{" + core + "}{" + den.get_str() + "}";
            return {neg, core};
        }
        std::string out = num == 1 ? body : num.get_str() + "*" + body;
        if (den != 1) out += "/" + den.get_str();
        return {neg, out};
    }
    std::string cs = render(c, s);
    if (body.empty()) return {false, wrap(cs, s)};
    return {false, wrap(cs, s) + sep + body};
}

std::string point_text(const Rational& a, Style s) { return render(a, s); }

std::string local_text(const Rational& a, unsigned order, Style s) {
    std::string e = latex(s) ? "\\mathrm{e}_{" + point_text(a, s) + "}" : "E[" + point_text(a, s) + "]";
    if (order == 0) return e;
    std::string d = latex(s) ? "\\partial" : "D";
    if (order > 1) d += latex(s) ? "^{" + std::to_string(order) + "}" : "^" + std::to_string(order);
    return e + (latex(s) ? " " : "*") + d;
}

std::string global_text(const Rational& a, Style s) {
    return latex(s) ? "\\int_0^{" + point_text(a, s) + "}" : "I[0," + point_text(a, s) + "]";
}

std::string term_body(const TermKey& k, Style s) {
    const std::string sep = latex(s) ? " " : "*";
    std::vector<std::string> f;
    std::string left = render_body(k.left, s);
    if (!left.empty()) f.push_back(left);
    switch (k.kind) {
    case TermKind::Diff:
        if (k.order > 0) {
            std::string d = latex(s) ? "\\partial" : "D";
            if (k.order > 1) d += latex(s) ? "^{" + std::to_string(k.order) + "}" : "^" + std::to_string(k.order);
            f.push_back(d);
        }
        break;
    case TermKind::Integral:
        f.push_back(latex(s) ? "\\int" : "A");
        break;
    case TermKind::Local:
        f.push_back(local_text(k.point, k.order, s));
        break;
    case TermKind::Global:
        f.push_back(global_text(k.point, s));
        break;
    }
    if (k.kind == TermKind::Integral || k.kind == TermKind::Global) {
        std::string right = render_body(k.right, s);
        if (!right.empty()) f.push_back(right);
    }
    std::string out;
    for (const auto& x : f) out += (out.empty() ? "" : sep) + x;
    return out;
}

}  // namespace

std::string render(const Rational& q, Style s) {
    if (q.get_den() == 1) return q.get_num().get_str();
    if (latex(s)) {
        std::string sign = q < 0 ? "-" : "";
        Integer n = q.get_num();
        if (n < 0) n = -n;
        return sign + "\\frac{" + n.get_str() + "}{" + q.get_den().get_str() + "}";
    }
    return q.get_str();
}

std::string render(const Scalar& c, Style s) {
    std::string num = render_const(c.num(), s);
    if (c.den().is_rational() && c.den().rational_value() == 1) return num;
    std::string den = render_const(c.den(), s);
    if (latex(s)) return "\\frac{" + num + "}{" + den + "}";
    return wrap(num, s) + "/" + (needs_parens(den) || c.den().terms().size() > 1 ? "(" + den + ")" : den);
}

std::string render(const ExpPoly& f, Style s) {
    std::vector<std::pair<bool, std::string>> parts;
    const auto& t = f.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) parts.push_back(render_product(it->second, render_body(it->first, s), s));
    return join_signed(parts);
}

std::string render(const IntDiffOperator& op, Style s) {
    std::vector<std::pair<TermKey, Scalar>> terms(op.terms().begin(), op.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const TermKey &x = a.first, &y = b.first;
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.kind == TermKind::Diff && x.order != y.order) return x.order > y.order;
        return y < x;
    });
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [k, c] : terms) parts.push_back(render_product(c, term_body(k, s), s));
    return join_signed(parts);
}

std::string render(const DiffOperator& T, Style s) { return render(T.to_operator(), s); }

std::string render(const StieltjesCondition& b, Style s) { return render(b.to_operator(), s); }

std::string render(const BoundaryProblem& p, Style s) {
    std::string out = "(" + render(p.T(), s) + ", [";
    for (std::size_t i = 0; i < p.B().size(); ++i) out += (i ? ", " : "") + render(p.B()[i], s);
    return out + "])";
}

std::string render(const ProblemCombination& r, Style s) {
    std::vector<std::pair<bool, std::string>> parts;
    for (const auto& [l, p] : r.terms()) {
        Rational q = l;
        bool neg = q < 0;
        if (neg) q = -q;
        std::string t = render(p, s);
        if (q != 1) t = render(q, s) + (latex(s) ? " " : "*") + t;
        parts.emplace_back(neg, t);
    }
    return join_signed(parts);
}

std::string render(const MethoriousOperator& f, Style s) {
    if (latex(s)) return render(f.den, s) + "^{-1} \\left(" + render(f.num, s) + "\\right)";
    return "inv" + render(f.den, s) + " * (" + render(f.num, s) + ")";
}

std::string render(const MethoriousFunction& m, Style s) {
    std::vector<std::pair<bool, std::string>> parts;
    const auto& t = m.smooth().terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) parts.push_back(render_product(it->second, render_body(it->first, s), s));
    for (const auto& e : m.ideal()) {
        std::string g = e.g == ExpPoly(1) ? "" : render(e.g, s);
        if (e.g.terms().size() > 1) g = latex(s) ? "\\left(" + g + "\\right)" : "(" + g + ")";
        auto [neg, text] = render_product(e.coefficient, g, s);
        parts.emplace_back(neg, text + (latex(s) ? " \\otimes " : ":") + render(e.problem, s));
    }
    return join_signed(parts);
}

std::string render(const MethoriousHyperfunction& h, Style s) {
    if (h.den.order() == 0 && h.den.dim() == 0) return render(h.value, s);
    if (latex(s)) return render(h.den, s) + "^{-1} \\left(" + render(h.value, s) + "\\right)";
    return "inv" + render(h.den, s) + " * (" + render(h.value, s) + ")";
}

}  // namespace intdiff
