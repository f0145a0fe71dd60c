#include "suboplex/algebra.hpp"

#include "suboplex/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace suboplex {

// ---------------------------------------------------------------------------
// Extentures
// ---------------------------------------------------------------------------

std::vector<PartialFunction> extentures(const FunctionClass& c) {
    if (c.empty()) throw precondition_error("extentures: empty class");
    const int n = c.n(), m = c.m();
    std::vector<PartialFunction> found;
    // level search by |dom|; a pf extending a found extenture is skipped,
    // which makes "no extension and minimal" equivalent to "no extension"
    for (int size = 1; size <= n; ++size) {
        std::vector<int> dom;
        std::function<void(int)> pick = [&](int start) {
            if (static_cast<int>(dom.size()) == size) {
                std::vector<int> vals(dom.size(), 0);
                while (true) {
                    PartialFunction pf(n, m);
                    for (std::size_t i = 0; i < dom.size(); ++i) pf = pf.with(dom[i], vals[i]);
                    bool prunable = false;
                    for (const auto& e : found)
                        if (pf.extends(e)) { prunable = true; break; }
                    if (!prunable && !c.has_extension(pf)) found.push_back(pf);
                    std::size_t pos = vals.size();
                    while (pos > 0 && vals[pos - 1] == m - 1) vals[--pos] = 0;
                    if (pos == 0) break;
                    ++vals[pos - 1];
                }
                return;
            }
            for (int u = start; u < n; ++u) {
                dom.push_back(u);
                pick(u + 1);
                dom.pop_back();
            }
        };
        pick(0);
    }
    std::sort(found.begin(), found.end());
    return found;
}

// ---------------------------------------------------------------------------
// Ideal generators
// ---------------------------------------------------------------------------

MonomialSet sr_generators(const FunctionClass& c) {
    MonomialSet out;
    out.n = c.n();
    out.m = c.m();
    auto ex = extentures(c);
    std::set<std::pair<int, int>> point_extenture; // (u, j) with (u -> j) in ex C
    for (const auto& pf : ex) {
        Monomial mono;
        mono.role = MonomialRole::Extenture;
        for (int u = 0; u < c.n(); ++u)
            if (pf.defined(u)) mono.vars.emplace_back(u, pf.value(u));
        if (mono.vars.size() == 1) point_extenture.insert(mono.vars.front());
        out.monomials.push_back(std::move(mono));
    }
    for (int u = 0; u < c.n(); ++u)
        for (int i = 0; i < c.m(); ++i)
            for (int j = i + 1; j < c.m(); ++j) {
                if (point_extenture.count({u, i}) || point_extenture.count({u, j})) continue;
                Monomial mono;
                mono.role = MonomialRole::Functional;
                mono.vars = {{u, i}, {u, j}};
                out.monomials.push_back(std::move(mono));
            }
    std::sort(out.monomials.begin(), out.monomials.end());
    return out;
}

namespace {

Monomial gamma_monomial(const PartialFunction& f) {
    Monomial mono;
    mono.role = MonomialRole::CanonicalGenerator;
    for (int u = 0; u < f.n(); ++u)
        for (int j = 0; j < f.m(); ++j)
            if (!(f.defined(u) && f.value(u) == j)) mono.vars.emplace_back(u, j);
    return mono;
}

} // namespace

MonomialSet canonical_generators(const FunctionClass& c) {
    MonomialSet out;
    out.n = c.n();
    out.m = c.m();
    for (const auto& f : c.members()) out.monomials.push_back(gamma_monomial(f));
    std::sort(out.monomials.begin(), out.monomials.end());
    return out;
}

MonomialSet canonical_generators(const PartialClass& c) {
    MonomialSet out;
    out.n = c.n();
    out.m = c.m();
    for (const auto& f : c.maximal_members()) out.monomials.push_back(gamma_monomial(f));
    std::sort(out.monomials.begin(), out.monomials.end());
    return out;
}

// ---------------------------------------------------------------------------
// Class-ideal characterization
// ---------------------------------------------------------------------------

bool is_class_ideal(const std::vector<PartialFunction>& f, int n, int m) {
    for (const auto& a : f) {
        if (a.n() != n || a.m() != m) throw shape_error("is_class_ideal: shape mismatch");
        for (const auto& b : f)
            if (!(a == b) && a.extends(b))
                throw precondition_error("is_class_ideal: input is not an antichain");
    }
    // blocked(pf): pf extends some member of F, i.e. x^{graph pf} lies in
    // the ideal.  The ideal is a class ideal iff every unblocked pf has an
    // unblocked total extension.
    auto blocked = [&](const PartialFunction& pf) {
        for (const auto& e : f)
            if (pf.extends(e)) return true;
        return false;
    };
    std::map<PartialFunction, bool> totalizable; // unblocked and extendable to unblocked total
    std::function<bool(const PartialFunction&)> extendable = [&](const PartialFunction& pf) -> bool {
        auto it = totalizable.find(pf);
        if (it != totalizable.end()) return it->second;
        bool result;
        if (blocked(pf)) {
            result = false;
        } else if (pf.is_total()) {
            result = true;
        } else {
            int u = 0;
            while (pf.defined(u)) ++u;
            result = false;
            for (int j = 0; j < m && !result; ++j) result = extendable(pf.with(u, j));
        }
        totalizable[pf] = result;
        return result;
    };
    // scan all pf (including those defined later in the recursion tree)
    std::function<bool(PartialFunction, int)> scan = [&](PartialFunction pf, int u) -> bool {
        if (u == n) return blocked(pf) || extendable(pf);
        if (!scan(pf, u + 1)) return false;
        for (int j = 0; j < m; ++j)
            if (!scan(pf.with(u, j), u + 1)) return false;
        return true;
    };
    return scan(PartialFunction(n, m), 0);
}

// ---------------------------------------------------------------------------
// Shattering and VC invariants
// ---------------------------------------------------------------------------

bool shatters_direct(const FunctionClass& c, const std::vector<int>& u) {
    if (u.empty()) return !c.empty();
    FunctionClass r = restrict_class(c, u);
    double want = 1;
    for (std::size_t i = 0; i < u.size(); ++i) want *= c.m();
    return static_cast<double>(r.size()) == want;
}

ShatterChecks shatter_checks(const FunctionClass& c, const std::vector<int>& u,
                             const BettiOptions& opt) {
    if (c.m() != 2) throw precondition_error("shatters: VC semantics needs m = 2");
    ShatterChecks out{};
    out.direct = shatters_direct(c, u);

    // collapsed ideal: x^U in pi_* I_C iff some extenture has dom inside U
    std::set<int> uset(u.begin(), u.end());
    out.collapsed_ideal = true;
    for (const auto& e : extentures(c)) {
        bool inside = true;
        for (int v : e.domain())
            if (!uset.count(v)) { inside = false; break; }
        if (inside) { out.collapsed_ideal = false; break; }
    }

    // Betti-extension criterion: for every pf on U there is an extension pf'
    // with beta_{|U| - |dom pf|, pf'}(C) >= 1
    BettiTable t = betti_table(c, opt);
    out.betti_extension = true;
    std::vector<std::int8_t> assign(u.size(), -1);
    std::function<bool(std::size_t)> all_pf = [&](std::size_t i) -> bool {
        if (i == u.size()) {
            PartialFunction pf(c.n(), 2);
            int dom = 0;
            for (std::size_t j = 0; j < u.size(); ++j)
                if (assign[j] != -1) {
                    pf = pf.with(u[j], assign[j]);
                    ++dom;
                }
            int degree = static_cast<int>(u.size()) - dom;
            bool found = false;
            for (const auto& [key, r] : t.entries())
                if (key.first == degree && key.second.extends(pf)) { found = true; break; }
            return found;
        }
        for (std::int8_t v : {std::int8_t(-1), std::int8_t(0), std::int8_t(1)}) {
            assign[i] = v;
            if (!all_pf(i + 1)) return false;
        }
        return true;
    };
    out.betti_extension = all_pf(0);

    // Stanley-Reisner Betti criterion at sigma = U x [2]
    std::vector<std::pair<int, int>> sigma;
    for (int v : u) {
        sigma.emplace_back(v, 0);
        sigma.emplace_back(v, 1);
    }
    if (u.empty()) {
        out.sr_betti = true; // the empty set is always shattered
    } else {
        auto ranks = sr_betti(c, sigma, opt.field);
        int i = static_cast<int>(u.size()) - 1;
        out.sr_betti = ranks[static_cast<std::size_t>(i)] != 0;
    }
    return out;
}

bool shatters(const FunctionClass& c, const std::vector<int>& u, const BettiOptions& opt) {
    ShatterChecks checks = shatter_checks(c, u, opt);
    if (checks.direct != checks.collapsed_ideal || checks.direct != checks.betti_extension ||
        checks.direct != checks.sr_betti)
        throw discrepancy_error("shatters: the four criteria disagree");
    return checks.direct;
}

int vc_dimension(const FunctionClass& c) {
    if (c.empty()) throw precondition_error("vc_dimension: empty class");
    if (c.m() != 2) throw precondition_error("vc_dimension: VC semantics needs m = 2");
    int best = 0;
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(subset.size()) > best && shatters_direct(c, subset))
            best = static_cast<int>(subset.size());
        for (int u = start; u < c.n(); ++u) {
            subset.push_back(u);
            rec(u + 1);
            subset.pop_back();
        }
    };
    rec(0);
    return best;
}

int vc_radius(const FunctionClass& c) {
    if (c.empty()) throw precondition_error("vc_radius: empty class");
    if (c.m() != 2) throw precondition_error("vc_radius: VC semantics needs m = 2");
    // direct: largest k with every k-subset shattered
    int direct = 0;
    for (int k = 1; k <= c.n(); ++k) {
        bool all = true;
        std::vector<int> subset;
        std::function<bool(int, int)> rec = [&](int start, int need) -> bool {
            if (need == 0) return shatters_direct(c, subset);
            for (int u = start; u <= c.n() - need; ++u) {
                subset.push_back(u);
                bool ok = rec(u + 1, need - 1);
                subset.pop_back();
                if (!ok) return false;
            }
            return true;
        };
        all = rec(0, k);
        if (!all) break;
        direct = k;
    }
    // via extentures (for proper subclasses of the complete class)
    auto ex = extentures(c);
    if (!ex.empty()) {
        int min_dom = c.n() + 1;
        for (const auto& e : ex) min_dom = std::min(min_dom, e.dom_size());
        if (direct != min_dom - 1)
            throw discrepancy_error("vc_radius: direct value and extenture formula disagree");
    }
    return direct;
}

SimplicialComplex shatter_complex(const FunctionClass& c) {
    std::vector<std::vector<int>> faces;
    std::vector<int> subset;
    std::function<void(int)> rec = [&](int start) {
        if (!subset.empty() && shatters_direct(c, subset)) faces.push_back(subset);
        for (int u = start; u < c.n(); ++u) {
            subset.push_back(u);
            rec(u + 1);
            subset.pop_back();
        }
    };
    rec(0);
    // shattered sets are downward closed, so this face list is already a complex
    std::sort(faces.begin(), faces.end());
    return SimplicialComplex(c.n(), std::move(faces), true);
}

// ---------------------------------------------------------------------------
// Cohen-Macaulayness
// ---------------------------------------------------------------------------

CmClassResult is_cm_class(const FunctionClass& c, const BettiOptions& opt) {
    if (c.m() != 2) throw precondition_error("is_cm_class: needs m = 2");
    BettiTable t = betti_table(c, opt);
    for (const auto& [key, r] : t.entries())
        if (key.first != c.n() - key.second.dom_size()) return {false, std::nullopt};
    // canonical cublex: faces F_w for every w whose total extensions all lie in C
    const int n = c.n();
    LabeledComplex cublex(n, 2, IdealKind::Canonical);
    std::map<PartialFunction, int> id;
    std::function<bool(const PartialFunction&)> full = [&](const PartialFunction& w) {
        std::function<bool(PartialFunction, int)> rec = [&](PartialFunction pf, int u) -> bool {
            if (u == n) return c.contains(pf);
            if (pf.defined(u)) return rec(pf, u + 1);
            return rec(pf.with(u, 0), u + 1) && rec(pf.with(u, 1), u + 1);
        };
        return rec(w, 0);
    };
    // add by decreasing |dom| (increasing dimension)
    for (int dom = n; dom >= 0; --dom) {
        std::vector<int> positions;
        std::function<void(PartialFunction, int, int)> gen = [&](PartialFunction w, int from, int need) {
            if (need == 0) {
                if (!full(w)) return;
                if (dom == n) {
                    id[w] = cublex.add_vertex(w);
                } else {
                    std::vector<int> facets;
                    for (int u = 0; u < n; ++u)
                        if (!w.defined(u))
                            for (int b = 0; b < 2; ++b) facets.push_back(id.at(w.with(u, b)));
                    id[w] = cublex.add_cell(n - dom, std::move(facets), w);
                }
                return;
            }
            for (int u = from; u <= n - need; ++u)
                for (int b = 0; b < 2; ++b) gen(w.with(u, b), u + 1, need - 1);
        };
        if (dom == 0) {
            PartialFunction w(n, 2);
            if (full(w)) {
                std::vector<int> facets;
                for (int u = 0; u < n; ++u)
                    for (int b = 0; b < 2; ++b) facets.push_back(id.at(w.with(u, b)));
                id[w] = cublex.add_cell(n, std::move(facets), w);
            }
        } else {
            gen(PartialFunction(n, 2), 0, dom);
        }
    }
    return {true, std::move(cublex)};
}

bool is_cm_canonical(const FunctionClass& c) {
    if (c.m() != 2) throw precondition_error("is_cm_canonical: needs m = 2");
    if (c.empty()) throw precondition_error("is_cm_canonical: empty class");
    // neighbor relation within C, reused across extension sets
    auto edges = neighbors(c);
    // every extension set C_{>= pf} must be a tree under the relation
    auto faces = suboplex_faces(c);
    for (const auto& pf : faces) {
        auto ext = c.extensions_of(pf);
        if (ext.size() <= 1) continue;
        std::map<PartialFunction, int> idx;
        for (std::size_t i = 0; i < ext.size(); ++i) idx[ext[i]] = static_cast<int>(i);
        // union-find over the induced edges
        std::vector<int> parent(ext.size());
        for (std::size_t i = 0; i < ext.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int a) { return parent[static_cast<std::size_t>(a)] == a ? a : parent[static_cast<std::size_t>(a)] = find(parent[static_cast<std::size_t>(a)]); };
        std::size_t edge_count = 0;
        for (const auto& [f, g] : edges) {
            auto fi = idx.find(f), gi = idx.find(g);
            if (fi == idx.end() || gi == idx.end()) continue;
            ++edge_count;
            parent[static_cast<std::size_t>(find(fi->second))] = find(gi->second);
        }
        if (edge_count != ext.size() - 1) return false;
        int root = find(0);
        for (std::size_t i = 1; i < ext.size(); ++i)
            if (find(static_cast<int>(i)) != root) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Euler characteristic and aleph
// ---------------------------------------------------------------------------

namespace {

template <class ClassT>
EulerPolynomial euler_impl(const ClassT& c, const BettiOptions& opt) {
    BettiTable t = betti_table(c, opt);
    EulerPolynomial chi;
    for (const auto& [key, r] : t.entries())
        chi.coefficients[key.second] += (key.first % 2 == 0 ? 1 : -1) * r;
    for (auto it = chi.coefficients.begin(); it != chi.coefficients.end();) {
        if (it->second == 0) it = chi.coefficients.erase(it);
        else ++it;
    }
    // cross-check against the face-count Euler characteristic of each
    // filtered suboplex: coefficient(pf) = -chi~(S_{C filtered by pf})
    for (const auto& pf : suboplex_faces(c, opt.limits)) {
        auto filtered = filter_class(c, pf);
        long long expect;
        if constexpr (std::is_same_v<ClassT, FunctionClass>) {
            expect = -canonical_suboplex(filtered.cls, opt.limits).reduced_euler();
        } else {
            if (filtered.empty()) continue;
            expect = -canonical_suboplex(filtered, opt.limits).reduced_euler();
        }
        auto it = chi.coefficients.find(pf);
        long long got = it == chi.coefficients.end() ? 0 : it->second;
        if (got != expect)
            throw discrepancy_error("euler_characteristic: Betti sum and face count disagree at " +
                                    pf.to_string());
    }
    return chi;
}

} // namespace

EulerPolynomial euler_characteristic(const FunctionClass& c, const BettiOptions& opt) {
    return euler_impl(c, opt);
}

EulerPolynomial euler_characteristic(const PartialClass& c, const BettiOptions& opt) {
    return euler_impl(c, opt);
}

long long aleph(const PartialFunction& f, const FunctionClass& c, const BettiOptions& opt) {
    if (c.empty()) throw precondition_error("aleph: empty class");
    if (f.n() != c.n() || f.m() != c.m() || !f.is_total())
        throw shape_error("aleph: target must be total over the class's (n, m)");
    long long direct = c.n();
    for (const auto& h : c.members())
        direct = std::min<long long>(direct, c.n() - f.meet(h).dom_size());
    // chi route: smallest total degree of a monomial of chi_{C boxtimes f},
    // minus n (m - 1); total degree of x^{Gamma pf} is n m - |dom pf|
    EulerPolynomial chi = euler_characteristic(boxtimes_target(c, f), opt);
    long long min_totdeg = -1;
    for (const auto& [pf, coef] : chi.coefficients) {
        long long deg = static_cast<long long>(c.n()) * c.m() - pf.dom_size();
        if (min_totdeg < 0 || deg < min_totdeg) min_totdeg = deg;
    }
    long long via_chi = min_totdeg - static_cast<long long>(c.n()) * (c.m() - 1);
    if (via_chi != direct)
        throw discrepancy_error("aleph: Hamming route and Euler route disagree");
    return direct;
}

} // namespace suboplex
