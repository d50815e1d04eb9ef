#include <intdiff/errors.hpp>
#include <intdiff/methfun.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace intdiff {

// --------------------------------------------------------- MethoriousFunction

MethoriousFunction::MethoriousFunction(const ExpPoly& smooth) : smooth_(smooth) {}

MethoriousFunction MethoriousFunction::ideal_element(const ExpPoly& g, const BoundaryProblem& p,
                                                     const Scalar& coefficient) {
    MethoriousFunction m;
    m.add_ideal(coefficient * g, p);
    return m;
}

void MethoriousFunction::add_ideal(const ExpPoly& h, const BoundaryProblem& p) {
    if (h.is_zero()) return;
    if (!p.T().apply(h).is_zero()) throw InvariantViolation("ideal element function is not in the kernel of T");
    auto it = std::find_if(ideal_.begin(), ideal_.end(), [&](const IdealElement& e) { return e.problem == p; });
    ExpPoly total = h;
    if (it != ideal_.end()) {
        total += it->value();
        ideal_.erase(it);
    }
    if (total.is_zero()) return;
    Scalar lead = total.leading().second;
    ideal_.push_back({lead.inv() * total, p, lead});
}

MethoriousFunction MethoriousFunction::operator-() const { return Scalar(-1) * *this; }

MethoriousFunction& MethoriousFunction::operator+=(const MethoriousFunction& o) {
    smooth_ += o.smooth_;
    for (const auto& e : o.ideal_) add_ideal(e.value(), e.problem);
    return *this;
}

MethoriousFunction operator*(const Scalar& c, const MethoriousFunction& m) {
    MethoriousFunction r(c * m.smooth_);
    for (const auto& e : m.ideal_) r.add_ideal(c * e.value(), e.problem);
    return r;
}

bool operator==(const MethoriousFunction& a, const MethoriousFunction& b) {
    return (a - b).is_zero();
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::NotEqual: return "NotEqual";
    case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

// ------------------------------------------------------------------- actions

std::vector<ExpPoly> fundamental_formula(const BoundaryProblem& p) { return projector_coefficients(p); }

MethoriousFunction act(const BoundaryProblem& p, const MethoriousFunction& m) {
    if (!is_regular(p)) throw SingularProblem("the action needs a regular problem");
    MethoriousFunction r(p.T().apply(m.smooth()));
    if (!m.smooth().is_zero() && p.order() > 0) {
        // P f spelled out on Ker T so the ideal invariant can be checked.
        auto c = projector_coefficients(p);
        ExpPoly pf;
        for (std::size_t j = 0; j < c.size(); ++j) pf += cond_apply(p.B()[j], m.smooth()) * c[j];
        r.add_ideal(pf, p);
    }
    for (const auto& e : m.ideal()) r.add_ideal(e.value(), bp_mul(p, e.problem));
    return r;
}

MethoriousFunction act(const ProblemCombination& r, const MethoriousFunction& m) {
    MethoriousFunction out;
    for (const auto& [l, p] : r.terms()) out += Scalar(l) * act(p, m);
    return out;
}

// ------------------------------------------------------- deflation/inflation

namespace {

// Nontrivial monic right factors of T, largest order first.
std::vector<DiffOperator> right_factors(const DiffOperator& T) {
    std::vector<DiffOperator> out;
    if (!T.is_constant_coefficient()) return out;
    auto roots = rational_roots(T.char_poly());
    if (!roots) return out;
    std::vector<std::pair<Rational, unsigned>> rs = *roots;
    std::vector<std::vector<Rational>> picks;
    std::vector<Rational> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == rs.size()) {
            if (!cur.empty()) picks.push_back(cur);
            return;
        }
        for (unsigned m = 0; m <= rs[i].second; ++m) {
            for (unsigned k = 0; k < m; ++k) cur.push_back(rs[i].first);
            rec(i + 1);
            for (unsigned k = 0; k < m; ++k) cur.pop_back();
        }
    };
    rec(0);
    std::stable_sort(picks.begin(), picks.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& p : picks) out.push_back(DiffOperator::from_roots(p));
    return out;
}

// Regular (T~, B~) with B~ inside the span of bs; nullopt if none exists.
std::optional<BoundaryProblem> regular_subproblem(const DiffOperator& Tt, const std::vector<StieltjesCondition>& bs) {
    FundamentalSystem fs = fundamental_system(Tt);
    auto rows = independent_rows(evaluation_matrix(bs, fs.u));
    if (rows.size() != Tt.order()) return std::nullopt;
    std::vector<StieltjesCondition> sel;
    for (auto r : rows) sel.push_back(bs[r]);
    return BoundaryProblem(Tt, sel);
}

// Conditions of span(bs) vanishing on h.
std::vector<StieltjesCondition> annihilators(const std::vector<StieltjesCondition>& bs, const ExpPoly& h) {
    Matrix col(bs.size(), std::vector<Scalar>(1));
    for (std::size_t i = 0; i < bs.size(); ++i) col[i][0] = cond_apply(bs[i], h);
    std::vector<StieltjesCondition> v;
    for (const auto& c : left_nullspace(col, bs.size())) {
        StieltjesCondition b;
        for (std::size_t i = 0; i < c.size(); ++i) b += c[i] * bs[i];
        v.push_back(b);
    }
    return v;
}

// Prefers a quotient listed in targets (so it merges with an existing element),
// otherwise the largest right factor.
std::optional<std::pair<ExpPoly, BoundaryProblem>> deflate_once(const ExpPoly& h, const BoundaryProblem& Q,
                                                                const std::vector<BoundaryProblem>& targets) {
    if (Q.order() == 0 || !is_regular(Q)) return std::nullopt;
    const auto V = annihilators(Q.B(), h);
    std::optional<std::pair<ExpPoly, BoundaryProblem>> first;
    for (const auto& Tt : right_factors(Q.T())) {
        auto sub = regular_subproblem(Tt, V);
        if (!sub) continue;
        // The left factor only depends on T~, not on the chosen B~.
        auto T1 = right_quotient(Q.T(), Tt);
        std::pair<ExpPoly, BoundaryProblem> d(Tt.apply(h), divide_left(*T1, *sub, Q));
        if (std::find(targets.begin(), targets.end(), d.second) != targets.end()) return d;
        if (!first) first = std::move(d);
    }
    return first;
}

}  // namespace

MethoriousFunction deflate(const MethoriousFunction& m) {
    std::vector<BoundaryProblem> targets;
    for (const auto& e : m.ideal()) targets.push_back(e.problem);
    MethoriousFunction r(m.smooth());
    for (const auto& e : m.ideal()) {
        ExpPoly h = e.value();
        BoundaryProblem Q = e.problem;
        while (!h.is_zero()) {
            auto d = deflate_once(h, Q, targets);
            if (!d) break;
            h = d->first;
            Q = d->second;
        }
        r.add_ideal(h, Q);
    }
    // Merging can expose new cancellations.
    if (r.ideal().size() < m.ideal().size() && !(r == m)) return deflate(r);
    return r;
}

namespace {

struct Inflated {
    BoundaryProblem problem;
    ExpPoly h;
};

std::vector<DiffOperator> monic_with_roots(const std::vector<Rational>& roots, unsigned order) {
    std::vector<DiffOperator> out;
    std::vector<Rational> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (cur.size() == order) {
            out.push_back(DiffOperator::from_roots(cur));
            return;
        }
        for (std::size_t i = from; i < roots.size(); ++i) {
            cur.push_back(roots[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<BoundaryProblem> regular_factor_dictionary(const std::vector<Rational>& roots,
                                                       const std::vector<Rational>& points, unsigned max_order) {
    std::vector<BoundaryProblem> out;
    const auto dict = condition_dictionary(points, 1);
    for (unsigned n = 1; n <= max_order; ++n) {
        for (const auto& T : monic_with_roots(roots, n)) {
            std::vector<std::size_t> idx(n);
            std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
                if (pos == n) {
                    std::vector<StieltjesCondition> c;
                    for (auto i : idx) c.push_back(dict[i]);
                    BoundaryProblem p(T, c);
                    if (p.dim() == n && is_regular(p)) out.push_back(p);
                    return;
                }
                for (std::size_t i = from; i < dict.size(); ++i) {
                    idx[pos] = i;
                    rec(pos + 1, i + 1);
                }
            };
            rec(0, 0);
        }
    }
    return out;
}

}  // namespace

Verdict mf_eq(const MethoriousFunction& a, const MethoriousFunction& b, const EqualityOptions& opt) {
    if (!(a.smooth() == b.smooth())) return Verdict::NotEqual;
    MethoriousFunction d = a - b;
    if (d.is_zero()) return Verdict::Equal;
    d = deflate(d);
    if (d.is_zero()) return Verdict::Equal;

    const auto& el = d.ideal();
    std::set<Rational> pts{Rational(0)}, roots{Rational(0)};
    unsigned budget = opt.extra_order;
    for (const auto& e : el) {
        budget += e.problem.order();
        for (const auto& c : e.problem.B())
            for (const auto& x : c.points()) pts.insert(x);
        if (e.problem.T().is_constant_coefficient())
            if (auto rr = rational_roots(e.problem.T().char_poly()))
                for (const auto& [r, m] : *rr) roots.insert(r);
    }
    unsigned min_order = budget;
    for (const auto& e : el) min_order = std::min(min_order, e.problem.order());
    const auto factors = regular_factor_dictionary({roots.begin(), roots.end()}, {pts.begin(), pts.end()},
                                                   budget - min_order);
    std::vector<std::vector<Inflated>> inf(el.size());
    for (std::size_t i = 0; i < el.size(); ++i) {
        inf[i].push_back({el[i].problem, el[i].value()});
        for (const auto& f : factors) {
            if (el[i].problem.order() + f.order() > budget) continue;
            inf[i].push_back({bp_mul(el[i].problem, f), op_apply(greens_operator(f), el[i].value())});
        }
    }
    bool common_found = false;
    for (const auto& cand : inf[0]) {
        ExpPoly sum = cand.h;
        bool all = true;
        for (std::size_t i = 1; i < el.size() && all; ++i) {
            auto it = std::find_if(inf[i].begin(), inf[i].end(),
                                   [&](const Inflated& x) { return x.problem == cand.problem; });
            if (it == inf[i].end()) all = false;
            else sum += it->h;
        }
        if (!all) continue;
        common_found = true;
        if (sum.is_zero()) return Verdict::Equal;
    }
    if (common_found) return Verdict::NotEqual;
    // Distinct elements that can never be brought to a common problem within
    // the budget are reported as different; partial overlaps stay undecided.
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j)
            for (const auto& x : inf[i])
                for (const auto& y : inf[j])
                    if (x.problem == y.problem) return Verdict::Unknown;
    return Verdict::NotEqual;
}

// ------------------------------------------------------------------- inverse

MethoriousFunction apply_inverse(const BoundaryProblem& p, const MethoriousFunction& m) {
    if (!is_regular(p)) throw SingularProblem("only regular problems are invertible");
    MethoriousFunction r(op_apply(greens_operator(p), m.smooth()));
    for (const auto& e : m.ideal()) {
        const ExpPoly v = e.value();
        if (e.problem == p) {
            r += MethoriousFunction(v);
            continue;
        }
        auto Tq = left_quotient(e.problem.T(), p.T());
        if (!Tq) throw NotLeftDivisible("the operator of an ideal element has no left factor T");
        auto q = regular_subproblem(*Tq, e.problem.B());
        if (!q || !(divide_left(p.T(), *q, e.problem) == p))
            throw NotLeftDivisible("an ideal element's problem has no left factor p");
        // v = v1 + v2 with v2 in Ker T' and B' v1 = 0; then v1:(p q) = (T' v1):(p).
        auto c = projector_coefficients(*q);
        ExpPoly v2;
        for (std::size_t j = 0; j < c.size(); ++j) v2 += cond_apply(q->B()[j], v) * c[j];
        r += MethoriousFunction(Tq->apply(v - v2));
        r.add_ideal(v2, *q);
    }
    return r;
}

ExpPoly solve_bvp(const DiffOperator& T, const std::vector<StieltjesCondition>& conditions, const ExpPoly& f,
                  const std::vector<Scalar>& values) {
    if (values.size() != conditions.size()) throw DimensionMismatch("one value per boundary condition is needed");
    if (!cond_independent(conditions)) throw SingularProblem("boundary conditions are linearly dependent");
    BoundaryProblem p(T, conditions);
    if (!is_regular(p)) throw SingularProblem("boundary problem is not regular");
    FundamentalSystem fs = fundamental_system(T);
    auto inv = inverse(evaluation_matrix(conditions, fs.u));
    ExpPoly u = op_apply(greens_operator(p), f);
    for (std::size_t i = 0; i < fs.u.size(); ++i) {
        Scalar s;
        for (std::size_t j = 0; j < values.size(); ++j) s += (*inv)[i][j] * values[j];
        u += s * fs.u[i];
    }
    return u;
}

// ------------------------------------------------------------ hyperfunctions

MethoriousHyperfunction hyper_act(const MethoriousOperator& frac, const MethoriousFunction& m, unsigned) {
    MethoriousFunction v = act(frac.num, m);
    if (frac.den.order() == 0 && frac.den.dim() == 0) return {BoundaryProblem(), v};
    try {
        return {BoundaryProblem(), apply_inverse(frac.den, v)};
    } catch (const NotLeftDivisible&) {
        return {frac.den, v};
    }
}

Verdict hyper_eq(const MethoriousHyperfunction& a, const MethoriousHyperfunction& b, unsigned bound) {
    if (a.den == b.den) return mf_eq(a.value, b.value);
    auto [q1, q2] = ore_quadruple(a.den, b.den, bound);
    return mf_eq(act(q1, a.value), act(q2, b.value));
}

std::vector<ExpPoly> probe_functions() {
    return {ExpPoly(1), ExpPoly::x(1), ExpPoly::x(2), ExpPoly::exp(Rational(1)),
            ExpPoly::monomial(Monomial{Rational(2), 1})};
}

Verdict frac_eq(const MethoriousOperator& a, const MethoriousOperator& b, unsigned bound) {
    if (a.den == b.den && a.num == b.num) return Verdict::Equal;
    bool unknown = false;
    for (const auto& f : probe_functions()) {
        auto ha = hyper_act(a, f, bound), hb = hyper_act(b, f, bound);
        const bool plain = ha.den.order() == 0 && hb.den.order() == 0;
        if (plain && !(ha.value.smooth() == hb.value.smooth())) return Verdict::NotEqual;
        if (hyper_eq(ha, hb, bound) != Verdict::Equal) unknown = true;
    }
    return unknown ? Verdict::Unknown : Verdict::Equal;
}

}  // namespace intdiff
