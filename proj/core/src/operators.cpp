#include <intdiff/errors.hpp>
#include <intdiff/operators.hpp>

#include <algorithm>
#include <set>
#include <tuple>

namespace intdiff {

// -------------------------------------------------------------------- TermKey

TermKey TermKey::diff(const Monomial& f, unsigned i) {
    TermKey k;
    k.kind = TermKind::Diff;
    k.left = f;
    k.order = i;
    return k;
}

TermKey TermKey::integral(const Monomial& f, const Monomial& g) {
    TermKey k;
    k.kind = TermKind::Integral;
    k.left = f;
    k.right = g;
    return k;
}

TermKey TermKey::local(const Monomial& f, const Character& a, unsigned i) {
    TermKey k;
    k.kind = TermKind::Local;
    k.left = f;
    k.point = a;
    k.order = i;
    return k;
}

TermKey TermKey::global(const Monomial& f, const Character& a, const Monomial& g) {
    TermKey k;
    k.kind = TermKind::Global;
    k.left = f;
    k.point = a;
    k.right = g;
    return k;
}

bool operator<(const TermKey& a, const TermKey& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (!(a.left == b.left)) return a.left < b.left;
    if (int c = cmp(a.point, b.point); c != 0) return c < 0;
    if (a.order != b.order) return a.order < b.order;
    return a.right < b.right;
}

bool operator==(const TermKey& a, const TermKey& b) {
    return a.kind == b.kind && a.left == b.left && a.point == b.point && a.order == b.order &&
           a.right == b.right;
}

// ------------------------------------------------------------ IntDiffOperator

IntDiffOperator::IntDiffOperator(const ExpPoly& f) {
    for (const auto& [m, c] : f.terms()) add_term(TermKey::diff(m, 0), c);
}

IntDiffOperator IntDiffOperator::D(unsigned order) { return diff(ExpPoly(1), order); }

IntDiffOperator IntDiffOperator::A() { return integral(ExpPoly(1), ExpPoly(1)); }

IntDiffOperator IntDiffOperator::E(const Character& a) { return local(ExpPoly(1), a, 0); }

IntDiffOperator IntDiffOperator::diff(const ExpPoly& f, unsigned i) {
    IntDiffOperator r;
    for (const auto& [m, c] : f.terms()) r.add_term(TermKey::diff(m, i), c);
    return r;
}

IntDiffOperator IntDiffOperator::integral(const ExpPoly& f, const ExpPoly& g) {
    IntDiffOperator r;
    for (const auto& [m1, c1] : f.terms())
        for (const auto& [m2, c2] : g.terms()) r.add_term(TermKey::integral(m1, m2), c1 * c2);
    return r;
}

IntDiffOperator IntDiffOperator::local(const ExpPoly& f, const Character& a, unsigned i) {
    IntDiffOperator r;
    for (const auto& [m, c] : f.terms()) r.add_term(TermKey::local(m, a, i), c);
    return r;
}

IntDiffOperator IntDiffOperator::global(const ExpPoly& f, const Character& a, const ExpPoly& g) {
    IntDiffOperator r;
    for (const auto& [m1, c1] : f.terms())
        for (const auto& [m2, c2] : g.terms()) r.add_term(TermKey::global(m1, a, m2), c1 * c2);
    return r;
}

void IntDiffOperator::add_term(const TermKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    if (k.kind == TermKind::Global && k.point == 0) return;  // E[0] A = 0
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool IntDiffOperator::is_differential() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.kind == TermKind::Diff; });
}

bool IntDiffOperator::is_boundary() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
        return t.first.kind == TermKind::Local || t.first.kind == TermKind::Global;
    });
}

unsigned IntDiffOperator::diff_order() const {
    unsigned n = 0;
    for (const auto& [k, c] : terms_)
        if (k.kind == TermKind::Diff) n = std::max(n, k.order);
    return n;
}

ExpPoly IntDiffOperator::diff_coefficient(unsigned i) const {
    ExpPoly f;
    for (const auto& [k, c] : terms_)
        if (k.kind == TermKind::Diff && k.order == i) f.add_term(k.left, c);
    return f;
}

IntDiffOperator IntDiffOperator::operator-() const {
    IntDiffOperator r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

IntDiffOperator& IntDiffOperator::operator+=(const IntDiffOperator& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

IntDiffOperator& IntDiffOperator::operator-=(const IntDiffOperator& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

IntDiffOperator operator*(const Scalar& c, const IntDiffOperator& a) {
    if (c.is_zero()) return IntDiffOperator();
    IntDiffOperator r(a);
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
}

// ------------------------------------------------------------ multiplication

IntDiffOperator left_mul_function(const ExpPoly& f, const IntDiffOperator& p) {
    IntDiffOperator r;
    for (const auto& [k, c] : p.terms())
        for (const auto& [m, cf] : f.terms()) {
            TermKey nk = k;
            nk.left = Monomial{k.left.freq + m.freq, k.left.degree + m.degree};
            r.add_term(nk, c * cf);
        }
    return r;
}

IntDiffOperator left_mul_D(const IntDiffOperator& p) {
    // D u D^j = u' D^j + u D^(j+1);  D u A h = u' A h + u h;  D u E = u' E
    IntDiffOperator r;
    for (const auto& [k, c] : p.terms()) {
        const ExpPoly du = derive(k.left);
        for (const auto& [m, cm] : du.terms()) {
            TermKey nk = k;
            nk.left = m;
            r.add_term(nk, c * cm);
        }
        if (k.kind == TermKind::Diff) {
            r.add_term(TermKey::diff(k.left, k.order + 1), c);
        } else if (k.kind == TermKind::Integral) {
            r.add_term(TermKey::diff(Monomial{k.left.freq + k.right.freq, k.left.degree + k.right.degree}, 0), c);
        }
    }
    return r;
}

namespace {

void integrate_term(const TermKey& k, const Scalar& c, IntDiffOperator& out) {
    switch (k.kind) {
    case TermKind::Diff: {
        if (k.order == 0) {
            out.add_term(TermKey::integral(Monomial::one(), k.left), c);
            return;
        }
        // A u D = u - A u' - u(0) E[0]
        const unsigned j = k.order - 1;
        out.add_term(TermKey::diff(k.left, j), c);
        out.add_term(TermKey::local(Monomial::one(), Rational(0), j), -(c * evaluate(k.left, Rational(0))));
        const ExpPoly du = derive(k.left);
        for (const auto& [m, cm] : du.terms()) integrate_term(TermKey::diff(m, j), -(c * cm), out);
        return;
    }
    case TermKind::Integral: {
        // A u A h = (A u) A h - A ((A u) h)
        ExpPoly U = integrate(k.left);
        for (const auto& [m, cu] : U.terms()) {
            out.add_term(TermKey::integral(m, k.right), c * cu);
            out.add_term(TermKey::integral(Monomial::one(), Monomial{m.freq + k.right.freq, m.degree + k.right.degree}),
                         -(c * cu));
        }
        return;
    }
    case TermKind::Local:
    case TermKind::Global: {
        // A u E = (A u) E
        const ExpPoly U = integrate(k.left);
        for (const auto& [m, cu] : U.terms()) {
            TermKey nk = k;
            nk.left = m;
            out.add_term(nk, c * cu);
        }
        return;
    }
    }
}

}  // namespace

IntDiffOperator left_mul_A(const IntDiffOperator& p) {
    IntDiffOperator r;
    for (const auto& [k, c] : p.terms()) integrate_term(k, c, r);
    return r;
}

IntDiffOperator left_mul_E(const Character& a, const IntDiffOperator& p) {
    // E u = u(a) E;  E E[b] = E[b]
    IntDiffOperator r;
    for (const auto& [k, c] : p.terms()) {
        Scalar v = c * evaluate(k.left, a);
        if (v.is_zero()) continue;
        switch (k.kind) {
        case TermKind::Diff: r.add_term(TermKey::local(Monomial::one(), a, k.order), v); break;
        case TermKind::Integral: r.add_term(TermKey::global(Monomial::one(), a, k.right), v); break;
        case TermKind::Local: r.add_term(TermKey::local(Monomial::one(), k.point, k.order), v); break;
        case TermKind::Global: r.add_term(TermKey::global(Monomial::one(), k.point, k.right), v); break;
        }
    }
    return r;
}

IntDiffOperator operator*(const IntDiffOperator& a, const IntDiffOperator& b) {
    std::vector<IntDiffOperator> dpow{b};
    auto D_pow = [&](unsigned i) -> const IntDiffOperator& {
        while (dpow.size() <= i) dpow.push_back(left_mul_D(dpow.back()));
        return dpow[i];
    };
    std::map<Monomial, IntDiffOperator> a_cache;  // A g b for monomial g
    auto A_of = [&](const Monomial& g) -> const IntDiffOperator& {
        auto it = a_cache.find(g);
        if (it == a_cache.end())
            it = a_cache.emplace(g, left_mul_A(left_mul_function(ExpPoly::monomial(g), b))).first;
        return it->second;
    };
    IntDiffOperator r;
    for (const auto& [k, c] : a.terms_) {
        const ExpPoly f = ExpPoly::monomial(k.left, c);
        switch (k.kind) {
        case TermKind::Diff: r += left_mul_function(f, D_pow(k.order)); break;
        case TermKind::Integral: r += left_mul_function(f, A_of(k.right)); break;
        case TermKind::Local: r += left_mul_function(f, left_mul_E(k.point, D_pow(k.order))); break;
        case TermKind::Global: r += left_mul_function(f, left_mul_E(k.point, A_of(k.right))); break;
        }
    }
    return r;
}

IntDiffOperator op_add(const IntDiffOperator& p, const IntDiffOperator& q) { return p + q; }

IntDiffOperator op_mul(const IntDiffOperator& p, const IntDiffOperator& q) { return p * q; }

ExpPoly op_apply(const IntDiffOperator& p, const ExpPoly& f) {
    ExpPoly r;
    std::map<unsigned, ExpPoly> derivs;
    auto deriv = [&](unsigned i) -> const ExpPoly& {
        auto it = derivs.find(i);
        if (it == derivs.end()) it = derivs.emplace(i, derive(f, i)).first;
        return it->second;
    };
    for (const auto& [k, c] : p.terms()) {
        const ExpPoly left = ExpPoly::monomial(k.left, c);
        switch (k.kind) {
        case TermKind::Diff: r += left * deriv(k.order); break;
        case TermKind::Integral: r += left * integrate(ExpPoly::monomial(k.right) * f); break;
        case TermKind::Local: r += evaluate(deriv(k.order), k.point) * left; break;
        case TermKind::Global: r += evaluate(integrate(ExpPoly::monomial(k.right) * f), k.point) * left; break;
        }
    }
    return r;
}

// --------------------------------------------------------- StieltjesCondition

StieltjesCondition StieltjesCondition::eval(const Character& a, unsigned order) {
    StieltjesCondition s;
    s.add_local(a, order, Scalar(1));
    return s;
}

StieltjesCondition StieltjesCondition::integral(const Character& a, const ExpPoly& f) {
    StieltjesCondition s;
    s.add_global(a, f);
    return s;
}

StieltjesCondition StieltjesCondition::definite(const Character& a, const Character& b, const ExpPoly& f) {
    return integral(b, f) - integral(a, f);
}

StieltjesCondition StieltjesCondition::from_operator(const IntDiffOperator& op) {
    StieltjesCondition s;
    for (const auto& [k, c] : op.terms()) {
        if (!k.left.is_one() || !(k.kind == TermKind::Local || k.kind == TermKind::Global))
            throw InvariantViolation("operator is not a Stieltjes condition");
        if (k.kind == TermKind::Local)
            s.add_local(k.point, k.order, c);
        else
            s.add_global(k.point, ExpPoly::monomial(k.right, c));
    }
    return s;
}

void StieltjesCondition::add_local(const Rational& a, unsigned i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = local_.try_emplace(LocalKey{a, i}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) local_.erase(it);
    }
}

void StieltjesCondition::add_global(const Rational& a, const ExpPoly& f) {
    if (a == 0 || f.is_zero()) return;
    auto [it, fresh] = global_.try_emplace(a, f);
    if (!fresh) {
        it->second += f;
        if (it->second.is_zero()) global_.erase(it);
    }
}

std::optional<unsigned> StieltjesCondition::order() const {
    std::optional<unsigned> r;
    for (const auto& [k, c] : local_) r = std::max(r.value_or(0), k.second);
    return r;
}

std::vector<Rational> StieltjesCondition::points() const {
    std::set<Rational> s;
    for (const auto& [k, c] : local_) s.insert(k.first);
    for (const auto& [a, f] : global_) s.insert(a);
    return {s.begin(), s.end()};
}

IntDiffOperator StieltjesCondition::to_operator() const {
    IntDiffOperator op;
    for (const auto& [k, c] : local_) op.add_term(TermKey::local(Monomial::one(), k.first, k.second), c);
    for (const auto& [a, f] : global_)
        for (const auto& [m, c] : f.terms()) op.add_term(TermKey::global(Monomial::one(), a, m), c);
    return op;
}

StieltjesCondition StieltjesCondition::operator-() const { return Scalar(-1) * *this; }

StieltjesCondition& StieltjesCondition::operator+=(const StieltjesCondition& o) {
    for (const auto& [k, c] : o.local_) add_local(k.first, k.second, c);
    for (const auto& [a, f] : o.global_) add_global(a, f);
    return *this;
}

StieltjesCondition& StieltjesCondition::operator-=(const StieltjesCondition& o) { return *this += -o; }

StieltjesCondition operator*(const Scalar& c, const StieltjesCondition& b) {
    StieltjesCondition r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : b.local_) r.add_local(k.first, k.second, c * v);
    for (const auto& [a, f] : b.global_) r.add_global(a, c * f);
    return r;
}

Scalar cond_apply(const StieltjesCondition& beta, const ExpPoly& f) {
    Scalar r;
    for (const auto& [k, c] : beta.local()) r += c * evaluate(derive(f, k.second), k.first);
    for (const auto& [a, g] : beta.global()) r += evaluate(integrate(g * f), a);
    return r;
}

StieltjesCondition cond_compose(const StieltjesCondition& beta, const IntDiffOperator& p) {
    return StieltjesCondition::from_operator(beta.to_operator() * p);
}

// ------------------------------------------------------- span computations

namespace {

// Coordinates of a condition in the basis of functionals E[a]D^i, E[a]A m.
using Coord = std::tuple<int, Rational, unsigned, Monomial>;

struct CoordLess {
    bool operator()(const Coord& a, const Coord& b) const {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        if (int c = cmp(std::get<1>(a), std::get<1>(b)); c != 0) return c < 0;
        if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) < std::get<2>(b);
        return std::get<3>(a) < std::get<3>(b);
    }
};

using Vec = std::map<Coord, Scalar, CoordLess>;

Vec coordinates(const StieltjesCondition& b) {
    Vec v;
    for (const auto& [k, c] : b.local()) v.emplace(Coord{0, k.first, k.second, Monomial::one()}, c);
    for (const auto& [a, f] : b.global())
        for (const auto& [m, c] : f.terms()) v.emplace(Coord{1, a, 0, m}, c);
    return v;
}

void axpy(Vec& v, const Scalar& f, const Vec& w) {  // v -= f w
    for (const auto& [k, c] : w) {
        auto [it, fresh] = v.try_emplace(k, -(f * c));
        if (!fresh) {
            it->second -= f * c;
            if (it->second.is_zero()) v.erase(it);
        }
    }
}

class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t inputs) : inputs_(inputs) {}

    // Reduces v; combo tracks v as a combination of inputs.
    void reduce(Vec& v, std::vector<Scalar>& combo) const {
        for (const auto& row : rows_) {
            auto it = v.find(row.pivot);
            if (it == v.end()) continue;
            Scalar f = it->second;
            axpy(v, f, row.v);
            for (std::size_t j = 0; j < inputs_; ++j) combo[j] -= f * row.combo[j];
        }
    }

    bool add(const StieltjesCondition& b, std::size_t index) {
        Vec v = coordinates(b);
        std::vector<Scalar> combo(inputs_);
        combo[index] = Scalar(1);
        reduce(v, combo);
        if (v.empty()) return false;
        Coord pivot = v.begin()->first;
        Scalar inv = v.begin()->second.inv();
        for (auto& [k, c] : v) c *= inv;
        for (auto& c : combo) c *= inv;
        rows_.push_back(Row{std::move(v), std::move(combo), pivot});
        return true;
    }

    // Returns the expression of b in inputs when b is in the span.
    std::optional<std::vector<Scalar>> express(const StieltjesCondition& b) const {
        Vec v = coordinates(b);
        std::vector<Scalar> combo(inputs_);
        reduce(v, combo);
        if (!v.empty()) return std::nullopt;
        for (auto& c : combo) c = -c;
        return combo;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    struct Row {
        Vec v;
        std::vector<Scalar> combo;
        Coord pivot;
    };
    std::size_t inputs_;
    std::vector<Row> rows_;
};

}  // namespace

std::size_t cond_rank(const std::vector<StieltjesCondition>& bs) {
    SpanBuilder sb(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) sb.add(bs[i], i);
    return sb.rank();
}

bool cond_independent(const std::vector<StieltjesCondition>& bs) { return cond_rank(bs) == bs.size(); }

std::vector<StieltjesCondition> cond_basis(const std::vector<StieltjesCondition>& bs) {
    SpanBuilder sb(bs.size());
    std::vector<StieltjesCondition> out;
    for (std::size_t i = 0; i < bs.size(); ++i)
        if (sb.add(bs[i], i)) out.push_back(bs[i]);
    return out;
}

bool cond_in_span(const std::vector<StieltjesCondition>& bs, const StieltjesCondition& beta) {
    SpanBuilder sb(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i) sb.add(bs[i], i);
    return sb.express(beta).has_value();
}

bool cond_space_contains(const std::vector<StieltjesCondition>& big, const std::vector<StieltjesCondition>& small) {
    SpanBuilder sb(big.size());
    for (std::size_t i = 0; i < big.size(); ++i) sb.add(big[i], i);
    return std::all_of(small.begin(), small.end(), [&](const auto& b) { return sb.express(b).has_value(); });
}

bool cond_space_equal(const std::vector<StieltjesCondition>& a, const std::vector<StieltjesCondition>& b) {
    return cond_rank(a) == cond_rank(b) && cond_space_contains(a, b);
}

std::optional<std::vector<Scalar>> cond_coordinates(const std::vector<StieltjesCondition>& bs,
                                                    const StieltjesCondition& beta) {
    SpanBuilder sb(bs.size());
    for (std::size_t i = 0; i < bs.size(); ++i)
        if (!sb.add(bs[i], i)) throw InvariantViolation("cond_coordinates needs an independent list");
    return sb.express(beta);
}

}  // namespace intdiff
