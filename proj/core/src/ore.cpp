#include <intdiff/errors.hpp>
#include <intdiff/ore.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace intdiff {

// --------------------------------------------------------- ProblemCombination

ProblemCombination ProblemCombination::single(const BoundaryProblem& p, const Rational& lambda) {
    ProblemCombination c;
    c.add(lambda, p);
    return c;
}

void ProblemCombination::add(const Rational& lambda, const BoundaryProblem& p) {
    if (lambda == 0) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (it->second == p) {
            it->first += lambda;
            if (it->first == 0) terms_.erase(it);
            return;
        }
    }
    terms_.emplace_back(lambda, p);
}

ProblemCombination ProblemCombination::operator-() const { return Rational(-1) * *this; }

ProblemCombination operator+(ProblemCombination a, const ProblemCombination& b) {
    for (const auto& [l, p] : b.terms_) a.add(l, p);
    return a;
}

ProblemCombination operator-(const ProblemCombination& a, const ProblemCombination& b) { return a + (-b); }

ProblemCombination operator*(const Rational& c, const ProblemCombination& a) {
    ProblemCombination r;
    for (const auto& [l, p] : a.terms_) r.add(c * l, p);
    return r;
}

ProblemCombination operator*(const ProblemCombination& a, const ProblemCombination& b) {
    ProblemCombination r;
    for (const auto& [la, pa] : a.terms_)
        for (const auto& [lb, pb] : b.terms_) r.add(la * lb, bp_mul(pa, pb));
    return r;
}

ProblemCombination operator*(const BoundaryProblem& s, const ProblemCombination& a) {
    return ProblemCombination::single(s) * a;
}

ProblemCombination operator*(const ProblemCombination& a, const BoundaryProblem& s) {
    return a * ProblemCombination::single(s);
}

bool operator==(const ProblemCombination& a, const ProblemCombination& b) { return (a - b).is_zero(); }

MethoriousOperator MethoriousOperator::from_problem(const BoundaryProblem& p) {
    return {BoundaryProblem(), ProblemCombination::single(p)};
}

MethoriousOperator MethoriousOperator::inverse_of(const BoundaryProblem& p) {
    if (!is_regular(p)) throw SingularProblem("only regular problems are invertible");
    return {p, ProblemCombination::single(BoundaryProblem())};
}

// ------------------------------------------------------ common left multiples

namespace {

using Poly = std::vector<Rational>;  // low to high

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// (quotient, remainder)
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

}  // namespace

CommonLeftMultiple common_left_multiple(const DiffOperator& T1, const DiffOperator& T2) {
    if (!T1.is_constant_coefficient() || !T2.is_constant_coefficient())
        throw UnsupportedOperator("common left multiples are only computed for constant coefficients");
    Poly p1 = T1.char_poly(), p2 = T2.char_poly();
    Poly l = poly_divmod(poly_mul(p1, p2), poly_gcd(p1, p2)).first;
    DiffOperator T = DiffOperator::from_char_poly(l);
    return {T, *right_quotient(T, T1), *right_quotient(T, T2)};
}

// -------------------------------------------------------------- Ore quadruple

std::pair<BoundaryProblem, BoundaryProblem> ore_quadruple(const BoundaryProblem& p1, const BoundaryProblem& p2,
                                                          unsigned bound) {
    if (!is_regular(p1) || !is_regular(p2)) throw SingularProblem("Ore quadruples need regular problems");
    CommonLeftMultiple clm = common_left_multiple(p1.T(), p2.T());
    std::vector<StieltjesCondition> merged = p1.B();
    merged.insert(merged.end(), p2.B().begin(), p2.B().end());
    BoundaryProblem big = regularize(BoundaryProblem(clm.T, merged), bound);
    auto s1 = right_quotient(big.T(), p1.T());
    auto s2 = right_quotient(big.T(), p2.T());
    if (!s1 || !s2) throw InvariantViolation("regularized operator lost a right factor");
    return {divide_left(*s1, p1, big), divide_left(*s2, p2, big)};
}

std::pair<BoundaryProblem, ProblemCombination> ore_linear(const ProblemCombination& r, const BoundaryProblem& s,
                                                          unsigned bound) {
    // Cascade: L_i = q1_i L_(i-1) where q1_i (L_(i-1) r_i) = q2_i s; then
    // r~_i = q1_n ... q1_(i+1) q2_i.
    std::vector<BoundaryProblem> q1s, q2s;
    BoundaryProblem L;
    for (const auto& [lambda, ri] : r.terms()) {
        auto [q1, q2] = ore_quadruple(bp_mul(L, ri), s, bound);
        q1s.push_back(q1);
        q2s.push_back(q2);
        L = bp_mul(q1, L);
    }
    ProblemCombination rt;
    const std::size_t n = q1s.size();
    for (std::size_t i = 0; i < n; ++i) {
        BoundaryProblem left;
        for (std::size_t j = n; j-- > i + 1;) left = bp_mul(left, q1s[j]);
        rt.add(r.terms()[i].first, bp_mul(left, q2s[i]));
    }
    return {L, rt};
}

MethoriousOperator frac_mul(const MethoriousOperator& a, const MethoriousOperator& b, unsigned bound) {
    // a.num b.den^-1 = s~^-1 r~
    auto [st, rt] = ore_linear(a.num, b.den, bound);
    return {bp_mul(st, a.den), rt * b.num};
}

MethoriousOperator frac_add(const MethoriousOperator& a, const MethoriousOperator& b, unsigned bound) {
    auto [q1, q2] = ore_quadruple(a.den, b.den, bound);
    return {bp_mul(q1, a.den), q1 * a.num + q2 * b.num};
}

MethoriousOperator frac_neg(const MethoriousOperator& a) { return {a.den, -a.num}; }

// ----------------------------------------------------------- kernel witnesses

std::vector<StieltjesCondition> condition_dictionary(const std::vector<Rational>& points, unsigned max_monomial) {
    std::vector<StieltjesCondition> d;
    for (const auto& a : points) d.push_back(StieltjesCondition::eval(a, 0));
    for (const auto& a : points) d.push_back(StieltjesCondition::eval(a, 1));
    for (unsigned n = 0; n <= max_monomial; ++n)
        for (const auto& a : points)
            if (a != 0) d.push_back(StieltjesCondition::integral(a, ExpPoly::x(n)));
    return d;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        if (!f(idx)) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Monic operators prod (D - r_i) with roots drawn (with repetition) from roots, by order.
std::vector<DiffOperator> operators_of_order(const std::vector<Rational>& roots, unsigned order) {
    std::vector<DiffOperator> out;
    std::vector<std::size_t> pick(order, 0);
    std::function<void(unsigned, std::size_t)> rec = [&](unsigned pos, std::size_t from) {
        if (pos == order) {
            std::vector<Rational> rs;
            for (auto i : pick) rs.push_back(roots[i]);
            out.push_back(DiffOperator::from_roots(rs));
            return;
        }
        for (std::size_t i = from; i < roots.size(); ++i) {
            pick[pos] = i;
            rec(pos + 1, i);
        }
    };
    rec(0, 0);
    return out;
}

bool annihilates(const BoundaryProblem& s, const ProblemCombination& r) { return (s * r).is_zero(); }

}  // namespace

std::optional<BoundaryProblem> kernel_witness(const ProblemCombination& r, const KernelSearchOptions& opt) {
    if (r.is_zero()) return BoundaryProblem();
    const auto& t = r.terms();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            auto [q1, q2] = ore_quadruple(t[i].second, t[j].second, opt.bound);
            if (annihilates(q1, r)) return q1;
            if (annihilates(q2, r)) return q2;
        }

    std::set<Rational> pts{Rational(0)}, roots{Rational(0)};
    unsigned max_order = 0;
    for (const auto& [l, p] : t) {
        max_order = std::max(max_order, p.order());
        for (const auto& b : p.B())
            for (const auto& a : b.points()) pts.insert(a);
        if (p.T().is_constant_coefficient())
            if (auto rr = rational_roots(p.T().char_poly()))
                for (const auto& [root, m] : *rr) roots.insert(root);
    }
    const std::vector<Rational> points(pts.begin(), pts.end()), rts(roots.begin(), roots.end());
    const auto dict = condition_dictionary(points, opt.max_monomial);
    for (unsigned n = 1; n <= max_order + opt.extra_order; ++n) {
        for (const auto& S : operators_of_order(rts, n)) {
            std::optional<BoundaryProblem> found;
            for_each_subset(dict.size(), n, [&](const std::vector<std::size_t>& idx) {
                std::vector<StieltjesCondition> c;
                for (auto i : idx) c.push_back(dict[i]);
                BoundaryProblem s(S, c);
                if (s.dim() == n && is_regular(s) && annihilates(s, r)) {
                    found = s;
                    return false;
                }
                return true;
            });
            if (found) return found;
        }
    }
    return std::nullopt;
}

IntDiffOperator greens_combination(const ProblemCombination& r) {
    IntDiffOperator g;
    for (const auto& [l, p] : r.terms()) g += Scalar(l) * greens_operator(p);
    return g;
}

bool kernel_conjecture_holds(const ProblemCombination& r) { return greens_combination(r).is_boundary(); }

// ------------------------------------------------- right multiples (negative)

RightMultipleSearch search_common_right_multiples(const BoundaryProblem& p1, const BoundaryProblem& p2,
                                                  unsigned max_order) {
    RightMultipleSearch res;
    std::set<Rational> pts{Rational(0)};
    for (const auto* p : {&p1, &p2})
        for (const auto& b : p->B())
            for (const auto& a : b.points()) pts.insert(a);
    std::set<Rational> roots{Rational(0)};
    for (const auto* p : {&p1, &p2})
        if (p->T().is_constant_coefficient())
            if (auto rr = rational_roots(p->T().char_poly()))
                for (const auto& [root, m] : *rr) roots.insert(root);
    const std::vector<Rational> points(pts.begin(), pts.end()), rts(roots.begin(), roots.end());
    const auto dict = condition_dictionary(points, 1);

    for (unsigned n = 0; n <= max_order; ++n) {
        for (const auto& S : operators_of_order(rts, n)) {
            // Right factors (S, C) with dim C <= ord S + 1, so singular factors are reachable too.
            std::vector<BoundaryProblem> factors;
            for (std::size_t k = 0; k <= n + 1; ++k)
                for_each_subset(dict.size(), k, [&](const std::vector<std::size_t>& idx) {
                    std::vector<StieltjesCondition> c;
                    for (auto i : idx) c.push_back(dict[i]);
                    BoundaryProblem f(S, c);
                    if (f.dim() == k) factors.push_back(f);
                    return true;
                });
            std::vector<BoundaryProblem> left1, left2;
            for (const auto& f : factors) {
                left1.push_back(bp_mul(p1, f));
                left2.push_back(bp_mul(p2, f));
            }
            for (std::size_t i = 0; i < factors.size(); ++i)
                for (std::size_t j = 0; j < factors.size(); ++j) {
                    ++res.candidates;
                    if (!(left1[i] == left2[j])) continue;
                    ++res.solutions;
                    if (is_regular(factors[i]) && is_regular(factors[j])) ++res.solutions_with_both_regular;
                    if (res.examples.size() < 5) res.examples.emplace_back(S, factors[i].B(), factors[j].B());
                }
        }
    }
    return res;
}

}  // namespace intdiff
