#include "suboplex/separation.hpp"

#include "suboplex/errors.hpp"

#include <algorithm>
#include <set>

namespace suboplex {

ThresholdContext ThresholdContext::linthr(const PointConfig& u, const Limits& lim) {
    return ThresholdContext{linthr_class(u, lim), LinearSubspace::value_space(u), u};
}

ThresholdContext ThresholdContext::polythr(int d, int k, const Limits& lim) {
    const int n = 1 << d;
    if (k == 0) {
        LinearSubspace l({std::vector<Rat>(static_cast<std::size_t>(n), Rat(1))});
        FunctionClass cls(n, 2, {all_zero_function(n), all_one_function(n)},
                          "polythr(d=" + std::to_string(d) + ",k=0)");
        return ThresholdContext{std::move(cls), std::move(l), std::nullopt};
    }
    PointConfig lifted = PointConfig::boolean_cube(d).monomial_lift(k);
    FunctionClass cls = polythr_class(d, k, lim);
    return ThresholdContext{std::move(cls), LinearSubspace::value_space(lifted), std::move(lifted)};
}

ThresholdContext ThresholdContext::from_subspace(const LinearSubspace& l, const Limits& lim) {
    const int n = l.n();
    if (n > lim.threshold_max_n)
        throw size_limit_error("ThresholdContext: subspace coordinate count exceeds the budget");
    std::vector<PartialFunction> members;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n), 0);
    while (true) {
        PartialFunction f(vals, 2);
        if (realizable(l, SignVector::of_pf(f))) members.push_back(f);
        int pos = n - 1;
        while (pos >= 0 && vals[static_cast<std::size_t>(pos)] == 1) { vals[static_cast<std::size_t>(pos)] = 0; --pos; }
        if (pos < 0) break;
        ++vals[static_cast<std::size_t>(pos)];
    }
    return ThresholdContext{FunctionClass(n, 2, std::move(members), "thr(L)"), l, std::nullopt};
}

SeparationReport compare_betti(const FunctionClass& c, const PartialFunction& f,
                               const BettiOptions& opt) {
    if (f.n() != c.n() || f.m() != c.m() || !f.is_total())
        throw shape_error("compare_betti: target must be total over the class's (n, m)");
    SeparationReport rep;
    rep.target = f;
    rep.class_descriptor = c.provenance();
    rep.member = c.contains(f);
    FunctionClass extended = with_function(c, f);
    rep.base = betti_table(c, opt);
    rep.extended = betti_table(extended, opt);
    rep.boxtimes = betti_table(boxtimes_target(c, f), opt);
    // Mayer-Vietoris alternating identity for C and {f}
    if (!mayer_vietoris_check(c, singleton_class(f), opt))
        throw discrepancy_error("compare_betti: Mayer-Vietoris identity failed");
    std::set<BettiTable::Key> keys;
    for (const auto& [k, r] : rep.base.entries()) keys.insert(k);
    for (const auto& [k, r] : rep.extended.entries()) keys.insert(k);
    for (const auto& k : keys) {
        long long before = rep.base.rank(k.first, k.second);
        long long after = rep.extended.rank(k.first, k.second);
        if (before != after) rep.diff.push_back({k.first, k.second, before, after});
    }
    return rep;
}

bool is_full(const FunctionClass& c) {
    for (int u = 0; u < c.n(); ++u)
        for (int v = 0; v < c.m(); ++v) {
            bool hit = false;
            for (const auto& h : c.members())
                if (h.value(u) == v) { hit = true; break; }
            if (!hit) return false;
        }
    return true;
}

bool membership_equivalences(const FunctionClass& c, const PartialFunction& f,
                             const BettiOptions& opt) {
    if (f.n() != c.n() || f.m() != c.m() || !f.is_total())
        throw shape_error("membership_equivalences: target must be total");
    if (!is_full(c))
        throw precondition_error("membership_equivalences: the class is not full; the lemma does not apply");
    PartialClass boxed = boxtimes_target(c, f);
    auto maximal = boxed.maximal_members();
    BettiTable t = betti_table(boxed, opt);

    const bool c1 = c.contains(f);
    const bool c2 = maximal.size() == 1 && maximal.front() == f;
    const bool c3 = maximal.size() == 1;
    bool c4 = true;
    {
        int zero_degree_entries = 0;
        for (const auto& [key, r] : t.entries()) {
            if (key.first == 0) {
                zero_degree_entries += static_cast<int>(r);
            } else {
                c4 = false;
            }
        }
        c4 = c4 && zero_degree_entries == 1;
    }
    bool c5 = true, c6 = true;
    for (const auto& [key, r] : t.entries())
        if (key.first >= 1) {
            c5 = false;
            if (!(key.second == f)) c6 = false;
        }
    if (c1 != c2 || c1 != c3 || c1 != c4 || c1 != c5 || c1 != c6)
        throw discrepancy_error("membership_equivalences: the six conditions disagree");
    return c1;
}

bool weak_representation_test(const ThresholdContext& ctx, const PartialFunction& f,
                              const BettiOptions& opt) {
    const FunctionClass& c = ctx.cls;
    if (f.n() != c.n() || !f.is_total() || f.m() != 2)
        throw shape_error("weak_representation_test: target must be total boolean");
    // homological verdict: no Betti entry at the empty function
    BettiTable t = betti_table(boxtimes_target(c, f), opt);
    bool hom = true;
    PartialFunction dagger(c.n(), 2);
    for (const auto& [key, r] : t.entries())
        if (key.second == dagger) { hom = false; break; }
    // LP verdict: phi in L, phi(u) f(u) >= 0 for all u, <phi, f> >= 1
    const LinearSubspace& l = ctx.space;
    SignVector sf = SignVector::of_pf(f);
    std::vector<LinearConstraint> cons;
    LinearConstraint total;
    total.coeffs.assign(l.basis().size(), Rat(0));
    total.rel = Rel::Ge;
    total.rhs = 1;
    for (int u = 0; u < c.n(); ++u) {
        LinearConstraint cc;
        for (const auto& b : l.basis()) cc.coeffs.push_back(b[static_cast<std::size_t>(u)]);
        if (sf.sign(u) < 0)
            for (auto& x : cc.coeffs) x = -x;
        for (std::size_t j = 0; j < cc.coeffs.size(); ++j) total.coeffs[j] += cc.coeffs[j];
        cc.rel = Rel::Ge;
        cc.rhs = 0;
        cons.push_back(std::move(cc));
    }
    cons.push_back(std::move(total));
    bool lp = is_feasible(cons, static_cast<int>(l.basis().size()));
    if (hom != lp)
        throw discrepancy_error("weak_representation_test: homological and LP verdicts disagree");
    return hom;
}

std::optional<PartialFunction> maximal_principle(const FunctionClass& c, const PartialFunction& f,
                                                 const BettiOptions& opt) {
    if (f.n() != c.n() || f.m() != 2 || c.m() != 2 || !f.is_total())
        throw shape_error("maximal_principle: target must be total boolean");
    for (const auto& g : c.members()) { // members are sorted: first hit is lex-least
        if (g == f) continue;
        bool local_max = true;
        for (int u = 0; u < c.n() && local_max; ++u) {
            PartialFunction h = g.with(u, 1 - g.value(u));
            if (c.contains(h) && g.value(u) != f.value(u)) local_max = false;
        }
        if (!local_max) continue;
        // the theorem's conclusion, asserted: beta_{i, f meet g} = [i = 0]
        BettiTable t = betti_table(boxtimes_target(c, f), opt);
        PartialFunction meet = f.meet(g);
        auto col = t.column(meet);
        if (col.size() != 1 || col.front().first != 0 || col.front().second != 1)
            throw discrepancy_error("maximal_principle: witness Betti column is not [i = 0]");
        return g;
    }
    return std::nullopt;
}

bool is_symmetric(const PartialFunction& f) {
    if (!f.is_total()) return false;
    int n = f.n();
    int d = 0;
    while ((1 << d) < n) ++d;
    if ((1 << d) != n) return false;
    std::vector<int> level_value(static_cast<std::size_t>(d + 1), -1);
    for (int u = 0; u < n; ++u) {
        int s = __builtin_popcount(static_cast<unsigned>(u));
        if (level_value[static_cast<std::size_t>(s)] == -1) level_value[static_cast<std::size_t>(s)] = f.value(u);
        else if (level_value[static_cast<std::size_t>(s)] != f.value(u)) return false;
    }
    return true;
}

int thrdeg_symmetric(const PartialFunction& f, const BettiOptions& opt) {
    if (!is_symmetric(f)) throw precondition_error("thrdeg_symmetric: target is not symmetric");
    const int n = f.n();
    int d = 0;
    while ((1 << d) < n) ++d;
    // level function: s = number of -1 coordinates = popcount of the index
    std::vector<int> bar(static_cast<std::size_t>(d + 1));
    for (int s = 0; s <= d; ++s) {
        int u = (1 << s) - 1; // any index of popcount s
        bar[static_cast<std::size_t>(s)] = f.value(u);
    }
    int r = 0;
    for (int s = 0; s < d; ++s) r += (bar[static_cast<std::size_t>(s)] != bar[static_cast<std::size_t>(s + 1)]);

    if (d <= 4) {
        // realizable at degree r
        if (r == 0) {
            // constants are degree 0
        } else {
            ThresholdContext ctx = ThresholdContext::polythr(d, r);
            if (!realizable(ctx.space, SignVector::of_pf(f)))
                throw discrepancy_error("thrdeg_symmetric: not realizable at the computed degree");
        }
        // not weakly representable at degree r - 1
        if (r >= 1) {
            ThresholdContext ctx = ThresholdContext::polythr(d, r - 1);
            if (weak_representation_test(ctx, f, opt))
                throw discrepancy_error("thrdeg_symmetric: weakly representable below the computed degree");
        }
    }
    return r;
}

bool codim1_stability_check(const ThresholdContext& ctx, const PartialFunction& f,
                            const BettiOptions& opt) {
    const FunctionClass& c = ctx.cls;
    const LinearSubspace& l = ctx.space;
    if (l.dim() < 2) throw precondition_error("codim1_stability_check: need dim(L) >= 2");
    if (!is_full(c)) throw precondition_error("codim1_stability_check: the class must be full");
    if (c.contains(f)) throw precondition_error("codim1_stability_check: f must lie outside thr L");
    PartialFunction g = projection_pi(f, l);
    SignVector sg = SignVector::of_pf(g);
    // rank of the projection's covector
    int s;
    if (g.is_empty()) {
        s = -1;
    } else {
        auto poset = CovectorPoset::of(l);
        auto rk = poset.rank_of(sg);
        if (!rk) throw discrepancy_error("codim1_stability_check: projection is not a covector");
        s = *rk;
    }
    const int degree = l.dim() - s - 2;
    BettiTable t = betti_table(boxtimes_target(c, f), opt);
    for (const auto& [key, r] : t.entries()) {
        if (key.first != degree) continue;
        const PartialFunction& pf = key.second;
        std::vector<int> extra; // dom(pf minus g)
        for (int u : pf.domain())
            if (!g.defined(u)) extra.push_back(u);
        if (extra.size() <= 1) continue;
        if (r != 1) return false;
        for (int u : extra) {
            PartialFunction f_flip = f.with(u, 1 - f.value(u));
            PartialFunction pf_trunc = pf.without(u);
            BettiTable t2 = betti_table(boxtimes_target(c, f_flip), opt);
            if (t2.rank(degree, pf_trunc) != 1) return false;
        }
    }
    return true;
}

} // namespace suboplex
