#include "suboplex/resolution.hpp"

#include "suboplex/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace suboplex {

// ---------------------------------------------------------------------------
// LabeledComplex basics
// ---------------------------------------------------------------------------

int LabeledComplex::dim() const {
    int d = -1;
    for (const auto& c : cells_) d = std::max(d, c.dim);
    return d;
}

int LabeledComplex::add_vertex(const PartialFunction& label) {
    if (label.n() != n_ || label.m() != m_) throw shape_error("add_vertex: label shape mismatch");
    Cell c;
    c.dim = 0;
    c.facets = {0};
    c.label = label;
    c.vertices = {static_cast<int>(cells_.size())};
    cells_.push_back(std::move(c));
    return static_cast<int>(cells_.size()) - 1;
}

int LabeledComplex::add_cell(int dim, std::vector<int> facets, std::optional<PartialFunction> label) {
    if (dim < 1) throw shape_error("add_cell: dimension must be >= 1");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    Cell c;
    c.dim = dim;
    std::set<int> verts;
    for (int f : facets) {
        if (f <= 0 || f >= static_cast<int>(cells_.size())) throw shape_error("add_cell: bad facet id");
        if (cells_[static_cast<std::size_t>(f)].dim != dim - 1)
            throw shape_error("add_cell: facet of wrong dimension");
        for (int v : cells_[static_cast<std::size_t>(f)].vertices) verts.insert(v);
    }
    c.facets = std::move(facets);
    c.vertices.assign(verts.begin(), verts.end());
    int id = static_cast<int>(cells_.size());
    cells_.push_back(std::move(c));
    cells_.back().label = label ? *label : induced_label(id);
    return id;
}

const PartialFunction& LabeledComplex::label(int id) const {
    const auto& l = cells_[static_cast<std::size_t>(id)].label;
    if (!l) throw shape_error("label: the empty cell has no partial-function label");
    return *l;
}

std::uint64_t LabeledComplex::exponent_bits(int id) const {
    if (id == 0) return 0; // the empty cell has monomial label 1
    const PartialFunction& pf = label(id);
    return kind_ == IdealKind::Canonical ? pf.gamma_bits() : pf.graph_bits();
}

PartialFunction LabeledComplex::induced_label(int id) const {
    const Cell& c = cells_[static_cast<std::size_t>(id)];
    if (c.vertices.empty()) throw shape_error("induced_label: the empty cell");
    if (kind_ == IdealKind::Canonical) {
        PartialFunction acc = label(c.vertices.front());
        for (std::size_t i = 1; i < c.vertices.size(); ++i) acc = acc.meet(label(c.vertices[i]));
        return acc;
    }
    // Stanley-Reisner mode: union of compatible graphs.
    PartialFunction acc(n_, m_);
    for (int v : c.vertices) {
        const PartialFunction& lv = label(v);
        for (int u = 0; u < n_; ++u)
            if (lv.defined(u)) {
                if (acc.defined(u) && acc.value(u) != lv.value(u))
                    throw shape_error("induced_label: incompatible vertex graphs");
                acc = acc.with(u, lv.value(u));
            }
    }
    return acc;
}

std::vector<int> LabeledComplex::cells_of_dim(int d) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
        if (cells_[i].dim == d) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> LabeledComplex::maximal_cells() const {
    std::vector<bool> bounded(cells_.size(), false);
    for (const auto& c : cells_)
        for (int f : c.facets) bounded[static_cast<std::size_t>(f)] = true;
    std::vector<int> out;
    for (std::size_t i = 1; i < cells_.size(); ++i)
        if (!bounded[i]) out.push_back(static_cast<int>(i));
    return out;
}

// ---------------------------------------------------------------------------
// check_resolution
// ---------------------------------------------------------------------------

namespace {

// Homology of the subcomplex spanned by `selected` cells (true-indexed),
// via the order complex of its cell poset.  The empty cell is implicit:
// no selected cells means the irrelevant complex.
bool subcomplex_acyclic(const LabeledComplex& x, const std::vector<bool>& selected, Field field) {
    std::vector<int> ids;
    for (std::size_t i = 1; i < x.cells().size(); ++i)
        if (selected[i]) ids.push_back(static_cast<int>(i));
    if (ids.empty()) return true; // irrelevant complex
    // containment order via the transitive closure of facet links
    std::unordered_map<int, int> pos;
    for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> less(ids.size());
    // walk down from each cell
    for (std::size_t i = 0; i < ids.size(); ++i) {
        std::set<int> below;
        std::vector<int> stack = {ids[i]};
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int f : x.cells()[static_cast<std::size_t>(c)].facets)
                if (f != 0 && below.insert(f).second) stack.push_back(f);
        }
        for (int b : below) {
            auto it = pos.find(b);
            if (it == pos.end())
                throw shape_error("subcomplex_acyclic: selection is not closed under faces");
            less[i].push_back(it->second);
        }
    }
    SimplicialComplex oc = order_complex(static_cast<int>(ids.size()), less);
    return is_acyclic(oc, field);
}

// True if every cell is determined by its vertex set and has |V| = dim+1:
// then homology can be taken on the simplicial complex directly.
bool is_simplicial(const LabeledComplex& x) {
    std::set<std::vector<int>> seen;
    for (std::size_t i = 1; i < x.cells().size(); ++i) {
        const auto& c = x.cells()[i];
        if (static_cast<int>(c.vertices.size()) != c.dim + 1) return false;
        if (!seen.insert(c.vertices).second) return false;
    }
    return true;
}

bool subcomplex_acyclic_simplicial(const LabeledComplex& x, const std::vector<bool>& selected,
                                   Field field) {
    std::vector<std::vector<int>> faces;
    for (std::size_t i = 1; i < x.cells().size(); ++i)
        if (selected[i]) faces.push_back(x.cells()[i].vertices);
    if (faces.empty()) return true;
    // compact vertex ids
    std::map<int, int> vid;
    for (const auto& f : faces)
        for (int v : f) vid.emplace(v, 0);
    int next = 0;
    for (auto& [v, id] : vid) id = next++;
    for (auto& f : faces) {
        for (auto& v : f) v = vid.at(v);
        std::sort(f.begin(), f.end());
    }
    std::sort(faces.begin(), faces.end());
    SimplicialComplex sc(next, std::move(faces), true);
    return is_acyclic(sc, field);
}

std::vector<std::uint64_t> exponent_join_closure(const LabeledComplex& x) {
    std::set<std::uint64_t> closure;
    std::vector<std::uint64_t> vertex_exps;
    for (std::size_t i = 1; i < x.cells().size(); ++i)
        if (x.cells()[i].dim == 0) vertex_exps.push_back(x.exponent_bits(static_cast<int>(i)));
    std::vector<std::uint64_t> work = vertex_exps;
    for (auto e : work) closure.insert(e);
    while (!work.empty()) {
        std::uint64_t e = work.back();
        work.pop_back();
        for (auto v : vertex_exps) {
            std::uint64_t j = e | v;
            if (closure.insert(j).second) work.push_back(j);
        }
    }
    std::uint64_t full = (x.n() * x.m() == 64) ? ~std::uint64_t(0)
                                               : ((std::uint64_t(1) << (x.n() * x.m())) - 1);
    closure.insert(full);
    return std::vector<std::uint64_t>(closure.begin(), closure.end());
}

ResolutionReport check_resolution_impl(const LabeledComplex& x,
                                       const std::vector<PartialFunction>& generators, Field field) {
    ResolutionReport rep;
    const auto& cells = x.cells();

    // structure
    rep.well_formed = true;
    if (cells.empty() || cells[0].dim != -1) {
        rep.well_formed = false;
        rep.mismatches.push_back("missing empty cell");
        return rep;
    }
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const auto& c = cells[i];
        if (c.dim == 0) {
            if (c.facets != std::vector<int>{0} || c.vertices != std::vector<int>{static_cast<int>(i)}) {
                rep.well_formed = false;
                rep.mismatches.push_back("vertex " + std::to_string(i) + " malformed");
            }
            continue;
        }
        if (c.facets.size() < 2) {
            rep.well_formed = false;
            rep.mismatches.push_back("cell " + std::to_string(i) + " has fewer than two facets");
        }
        std::set<int> verts;
        for (int f : c.facets) {
            if (cells[static_cast<std::size_t>(f)].dim != c.dim - 1) {
                rep.well_formed = false;
                rep.mismatches.push_back("cell " + std::to_string(i) + " has a facet of wrong dimension");
            }
            for (int v : cells[static_cast<std::size_t>(f)].vertices) verts.insert(v);
        }
        if (std::vector<int>(verts.begin(), verts.end()) != c.vertices) {
            rep.well_formed = false;
            rep.mismatches.push_back("cell " + std::to_string(i) + " vertex set != union of facets");
        }
    }
    if (!rep.well_formed) return rep;

    // induced labels
    for (std::size_t i = 1; i < cells.size(); ++i) {
        PartialFunction want = x.induced_label(static_cast<int>(i));
        if (!(want == *cells[i].label)) {
            rep.mismatches.push_back("cell " + std::to_string(i) + " label " + cells[i].label->to_string() +
                                     " != induced " + want.to_string());
        }
    }
    if (!rep.mismatches.empty()) return rep;

    // generators: vertex labels vs the given minimal generating set
    std::multiset<PartialFunction> vlabels, gens(generators.begin(), generators.end());
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i].dim == 0) vlabels.insert(*cells[i].label);
    rep.generators_match = (vlabels == gens);
    if (!rep.generators_match)
        rep.mismatches.push_back("vertex labels do not match the ideal's minimal generators");

    // acyclicity of X_{<= sigma} over the join-closure of vertex exponents
    const bool simplicial = is_simplicial(x);
    std::vector<std::uint64_t> vertex_exp(cells.size(), 0);
    for (std::size_t i = 1; i < cells.size(); ++i)
        if (cells[i].dim == 0) vertex_exp[i] = x.exponent_bits(static_cast<int>(i));
    rep.is_resolution = true;
    for (std::uint64_t sigma : exponent_join_closure(x)) {
        std::vector<bool> selected(cells.size(), false);
        for (std::size_t i = 1; i < cells.size(); ++i) {
            const auto& c = cells[i];
            bool in = true;
            for (int v : c.vertices)
                if ((vertex_exp[static_cast<std::size_t>(v)] & ~sigma) != 0) { in = false; break; }
            selected[i] = in && !c.vertices.empty();
        }
        bool acyclic = simplicial ? subcomplex_acyclic_simplicial(x, selected, field)
                                  : subcomplex_acyclic(x, selected, field);
        if (!acyclic) {
            rep.is_resolution = false;
            rep.mismatches.push_back("X_{<=sigma} not acyclic at sigma mask " + std::to_string(sigma));
            break;
        }
    }

    // minimality: no cell shares its exponent with a facet
    rep.is_minimal = rep.is_resolution;
    for (std::size_t i = 1; i < cells.size() && rep.is_minimal; ++i)
        for (int f : cells[i].facets)
            if (x.exponent_bits(static_cast<int>(i)) == x.exponent_bits(f)) {
                rep.is_minimal = false;
                rep.mismatches.push_back("cell " + std::to_string(i) + " shares its label with a facet");
                break;
            }
    return rep;
}

} // namespace

ResolutionReport check_resolution_ideal(const LabeledComplex& x,
                                        const std::vector<PartialFunction>& generators, Field field) {
    return check_resolution_impl(x, generators, field);
}

ResolutionReport check_resolution(const LabeledComplex& x, const FunctionClass& c, Field field) {
    std::vector<PartialFunction> gens;
    if (x.kind() == IdealKind::Canonical) {
        gens = c.members();
    } else {
        // minimal SR generators that are graphs of partial functions; the
        // two-variable functional monomials are not representable as labels,
        // so only single-function complexes are supported here
        if (c.size() != 1)
            throw precondition_error("check_resolution: Stanley-Reisner mode supports singleton classes");
        const PartialFunction& f = c.members().front();
        for (int u = 0; u < c.n(); ++u)
            for (int j = 0; j < c.m(); ++j)
                if (j != f.value(u)) gens.push_back(PartialFunction::point(c.n(), c.m(), u, j));
    }
    return check_resolution_impl(x, gens, field);
}

ResolutionReport check_resolution(const LabeledComplex& x, const PartialClass& c, Field field) {
    if (x.kind() != IdealKind::Canonical)
        throw precondition_error("check_resolution: partial classes use the canonical ideal");
    return check_resolution_impl(x, c.maximal_members(), field);
}

BettiTable betti_from_resolution(const LabeledComplex& x, bool minimal_census, Field field) {
    const auto& cells = x.cells();
    // distinct cell exponents
    std::map<std::uint64_t, PartialFunction> degree_pf;
    for (std::size_t i = 1; i < cells.size(); ++i)
        degree_pf.emplace(x.exponent_bits(static_cast<int>(i)), *cells[i].label);

    // census by (dim, exponent)
    std::map<std::pair<int, std::uint64_t>, long long> census;
    for (std::size_t i = 1; i < cells.size(); ++i)
        ++census[{cells[i].dim, x.exponent_bits(static_cast<int>(i))}];

    const bool simplicial = is_simplicial(x);
    BettiTable table(field);
    for (const auto& [b, pf] : degree_pf) {
        // homological route: beta_{i,b} = H~_{i-1}(X_{< b}) for i >= 1
        std::vector<bool> selected(cells.size(), false);
        for (std::size_t i = 1; i < cells.size(); ++i) {
            std::uint64_t e = x.exponent_bits(static_cast<int>(i));
            selected[i] = (e & ~b) == 0 && e != b;
        }
        std::vector<int> ids;
        for (std::size_t i = 1; i < cells.size(); ++i)
            if (selected[i]) ids.push_back(static_cast<int>(i));
        std::vector<long long> h;
        if (ids.empty()) {
            h = {1}; // irrelevant complex: H~_{-1} = 1
        } else if (simplicial) {
            std::vector<std::vector<int>> faces;
            std::map<int, int> vid;
            for (int id : ids)
                for (int v : cells[static_cast<std::size_t>(id)].vertices) vid.emplace(v, 0);
            int next = 0;
            for (auto& [v, idn] : vid) idn = next++;
            for (int id : ids) {
                auto f = cells[static_cast<std::size_t>(id)].vertices;
                for (auto& v : f) v = vid.at(v);
                faces.push_back(std::move(f));
            }
            std::sort(faces.begin(), faces.end());
            h = reduced_homology(SimplicialComplex(next, std::move(faces), true), field);
        } else {
            std::unordered_map<int, int> pos;
            for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
            std::vector<std::vector<int>> less(ids.size());
            for (std::size_t i = 0; i < ids.size(); ++i) {
                std::set<int> below;
                std::vector<int> stack = {ids[i]};
                while (!stack.empty()) {
                    int c = stack.back();
                    stack.pop_back();
                    for (int f : cells[static_cast<std::size_t>(c)].facets)
                        if (f != 0 && below.insert(f).second) stack.push_back(f);
                }
                for (int bb : below) less[i].push_back(pos.at(bb));
            }
            h = reduced_homology(order_complex(static_cast<int>(ids.size()), less), field);
        }
        // beta_{i,b} = rank H~_{i-1}(X_{< b}); the H~_{-1} slot covers i = 0
        // (X_{< b} is irrelevant exactly when b is a minimal generator degree)
        std::map<int, long long> by_i;
        for (std::size_t j = 0; j < h.size(); ++j)
            if (h[j] != 0) by_i[static_cast<int>(j)] = h[j];

        if (minimal_census) {
            std::map<int, long long> cens;
            for (const auto& [key, cnt] : census)
                if (key.second == b) cens[key.first] = cnt;
            if (cens != by_i)
                throw discrepancy_error("betti_from_resolution: census and homology disagree at degree of " +
                                        pf.to_string());
        }
        for (const auto& [i, r] : by_i) table.set(i, pf, r);
    }
    return table;
}

// ---------------------------------------------------------------------------
// Named constructions
// ---------------------------------------------------------------------------

namespace {

// Generic builder for complexes whose cells are indexed by keys with a
// facet relation; keys are added bottom-up by dimension.
template <class Key>
struct CellIndex {
    std::map<Key, int> id;
    bool has(const Key& k) const { return id.count(k) != 0; }
};

} // namespace

LabeledComplex cube_resolution(int n) {
    if (n < 1) throw precondition_error("cube_resolution: need n >= 1");
    LabeledComplex x(n, 2, IdealKind::Canonical);
    // cells <-> partial functions w, dim = n - |dom w|
    std::map<PartialFunction, int> id;
    // vertices first (total w)
    for (const auto& f : complete_class(n).members()) id[f] = x.add_vertex(f);
    for (int dim = 1; dim <= n; ++dim) {
        // w with |dom| = n - dim
        std::vector<PartialFunction> keys;
        std::function<void(PartialFunction, int, int)> gen = [&](PartialFunction w, int from, int need) {
            if (need == 0) {
                keys.push_back(w);
                return;
            }
            for (int u = from; u <= n - need; ++u)
                for (int b = 0; b < 2; ++b) gen(w.with(u, b), u + 1, need - 1);
        };
        gen(PartialFunction(n, 2), 0, n - dim);
        for (const auto& w : keys) {
            std::vector<int> facets;
            for (int u = 0; u < n; ++u)
                if (!w.defined(u))
                    for (int b = 0; b < 2; ++b) facets.push_back(id.at(w.with(u, b)));
            id[w] = x.add_cell(dim, std::move(facets), w);
        }
    }
    return x;
}

LabeledComplex singleton_sr_resolution(const PartialFunction& f) {
    if (!f.is_total()) throw precondition_error("singleton_sr_resolution: f must be total");
    if (f.m() != 2) throw precondition_error("singleton_sr_resolution: codomain must be 2");
    const int n = f.n();
    LabeledComplex x(n, 2, IdealKind::StanleyReisner);
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
        verts.push_back(x.add_vertex(PartialFunction::point(n, 2, i, 1 - f.value(i))));
    // full simplex on the n vertices
    std::map<std::vector<int>, int> id;
    for (int i = 0; i < n; ++i) id[{i}] = verts[static_cast<std::size_t>(i)];
    for (int size = 2; size <= n; ++size) {
        std::vector<int> tuple;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(tuple.size()) == size) {
                std::vector<int> facets;
                for (std::size_t i = 0; i < tuple.size(); ++i) {
                    std::vector<int> sub;
                    for (std::size_t j = 0; j < tuple.size(); ++j)
                        if (j != i) sub.push_back(tuple[j]);
                    facets.push_back(id.at(sub));
                }
                id[tuple] = x.add_cell(size - 1, std::move(facets));
                return;
            }
            for (int i = start; i < n; ++i) {
                tuple.push_back(i);
                rec(i + 1);
                tuple.pop_back();
            }
        };
        rec(0);
    }
    return x;
}

LabeledComplex point_resolution(const PartialFunction& f) {
    LabeledComplex x(f.n(), f.m(), IdealKind::Canonical);
    x.add_vertex(f);
    return x;
}

LabeledComplex delta_resolution(int n) {
    if (n < 1) throw precondition_error("delta_resolution: need n >= 1");
    LabeledComplex x(n, 2, IdealKind::Canonical);
    std::vector<PartialFunction> deltas;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int8_t> vals(static_cast<std::size_t>(n), 0);
        vals[static_cast<std::size_t>(i)] = 1;
        deltas.emplace_back(std::move(vals), 2);
    }
    std::map<std::vector<int>, int> id;
    for (int i = 0; i < n; ++i) id[{i}] = x.add_vertex(deltas[static_cast<std::size_t>(i)]);
    for (int size = 2; size <= n; ++size) {
        std::vector<int> tuple;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(tuple.size()) == size) {
                std::vector<int> facets;
                for (std::size_t i = 0; i < tuple.size(); ++i) {
                    std::vector<int> sub;
                    for (std::size_t j = 0; j < tuple.size(); ++j)
                        if (j != i) sub.push_back(tuple[j]);
                    facets.push_back(id.at(sub));
                }
                id[tuple] = x.add_cell(size - 1, std::move(facets));
                return;
            }
            for (int i = start; i < n; ++i) {
                tuple.push_back(i);
                rec(i + 1);
                tuple.pop_back();
            }
        };
        rec(0);
    }
    return x;
}

namespace {

int wt_disagreements(const PartialFunction& w, const PartialFunction& base) {
    int k = 0;
    for (int u = 0; u < w.n(); ++u)
        if (w.defined(u) && w.value(u) != base.value(u)) ++k;
    return k;
}

} // namespace

LabeledComplex wt_resolution(int n, int k, std::optional<PartialFunction> f) {
    PartialFunction base = f.value_or(all_zero_function(n));
    if (base.n() != n || !base.is_total() || base.m() != 2)
        throw shape_error("wt_resolution: base must be total over (n, 2)");
    if (k < 0 || k > n) throw precondition_error("wt_resolution: need 0 <= k <= n");
    LabeledComplex x(n, 2, IdealKind::Canonical);
    std::map<PartialFunction, int> id;
    // vertices: total functions at distance exactly k from the base
    for (const auto& g : wt_class(n, k, base).members()) id[g] = x.add_vertex(g);
    // completion of w to the vertex at the boundary cases
    auto fill = [&](const PartialFunction& w, bool flip) {
        PartialFunction g = w;
        for (int u = 0; u < n; ++u)
            if (!g.defined(u)) g = g.with(u, flip ? 1 - base.value(u) : base.value(u));
        return g;
    };
    // proper cells C_w, by decreasing |dom w| (increasing dimension)
    for (int dom = n - 2; dom >= 0; --dom) {
        std::function<void(PartialFunction, int, int)> gen = [&](PartialFunction w, int from, int need) {
            if (need == 0) {
                int dis = wt_disagreements(w, base), free = n - w.dom_size();
                if (!(dis < k && k < dis + free)) return;
                int dim = free - 1;
                std::vector<int> facets;
                for (int u = 0; u < n; ++u) {
                    if (w.defined(u)) continue;
                    for (int b = 0; b < 2; ++b) {
                        PartialFunction w2 = w.with(u, b);
                        int dis2 = wt_disagreements(w2, base), free2 = free - 1;
                        if (dis2 < k && k < dis2 + free2) {
                            if (free2 - 1 == dim - 1) facets.push_back(id.at(w2));
                        } else if (dis2 == k || dis2 + free2 == k) {
                            if (dim - 1 == 0) facets.push_back(id.at(fill(w2, dis2 + free2 == k)));
                        }
                    }
                }
                id[w] = x.add_cell(dim, std::move(facets), w);
            } else {
                for (int u = from; u <= n - need; ++u)
                    for (int b = 0; b < 2; ++b) gen(w.with(u, b), u + 1, need - 1);
            }
        };
        if (dom == 0) {
            // the single w with empty domain
            int dis = 0, free = n;
            if (dis < k && k < dis + free) {
                PartialFunction w(n, 2);
                int dim = free - 1;
                std::vector<int> facets;
                for (int u = 0; u < n; ++u)
                    for (int b = 0; b < 2; ++b) {
                        PartialFunction w2 = w.with(u, b);
                        int dis2 = wt_disagreements(w2, base), free2 = free - 1;
                        if (dis2 < k && k < dis2 + free2) {
                            if (free2 - 1 == dim - 1) facets.push_back(id.at(w2));
                        } else if (dis2 == k || dis2 + free2 == k) {
                            if (dim - 1 == 0) facets.push_back(id.at(fill(w2, dis2 + free2 == k)));
                        }
                    }
                id[w] = x.add_cell(dim, std::move(facets), w);
            }
        } else {
            gen(PartialFunction(n, 2), 0, dom);
        }
    }
    return x;
}

LabeledComplex monconj_resolution(int d) {
    if (d < 1) throw precondition_error("monconj_resolution: need d >= 1");
    const int n = 1 << d;
    LabeledComplex x(n, 2, IdealKind::Canonical);
    // Lambda(w) for a partial w: 0 where some w=1 bit fails, 1 where all
    // w=1 bits and all undefined bits hold.
    auto lambda = [&](const PartialFunction& w) {
        PartialFunction pf(n, 2);
        for (int u = 0; u < n; ++u) {
            auto bits = index_bits(u, d);
            bool zero = false, one = true;
            for (int i = 0; i < d; ++i) {
                if (w.defined(i) && w.value(i) == 1 && bits[static_cast<std::size_t>(i)] == 0) zero = true;
                if ((!w.defined(i) || w.value(i) == 1) && bits[static_cast<std::size_t>(i)] != 1) one = false;
            }
            if (zero) pf = pf.with(u, 0);
            else if (one) pf = pf.with(u, 1);
        }
        return pf;
    };
    std::map<PartialFunction, int> id; // keyed by w over [d]
    // vertices: total w
    for (const auto& w : complete_class(d).members()) id[w] = x.add_vertex(lambda(w));
    for (int dim = 1; dim <= d; ++dim) {
        std::function<void(PartialFunction, int, int)> gen = [&](PartialFunction w, int from, int need) {
            if (need == 0) {
                std::vector<int> facets;
                for (int i = 0; i < d; ++i)
                    if (!w.defined(i))
                        for (int b = 0; b < 2; ++b) facets.push_back(id.at(w.with(i, b)));
                id[w] = x.add_cell(dim, std::move(facets), lambda(w));
                return;
            }
            for (int i = from; i <= d - need; ++i)
                for (int b = 0; b < 2; ++b) gen(w.with(i, b), i + 1, need - 1);
        };
        gen(PartialFunction(d, 2), 0, d - dim);
    }
    return x;
}

LabeledComplex coc_resolution(int d) {
    if (d < 1) throw precondition_error("coc_resolution: need d >= 1");
    const int n = 1 << d;
    LabeledComplex x(n, 2, IdealKind::Canonical);
    // base vertices V in {-1,0,1}^d: the conjunction with literals V
    auto conj_of = [&](const std::vector<int>& v) {
        PartialFunction pf(n, 2);
        for (int u = 0; u < n; ++u) {
            auto bits = index_bits(u, d);
            bool sat = true;
            for (int i = 0; i < d; ++i) {
                if (v[static_cast<std::size_t>(i)] == 1 && bits[static_cast<std::size_t>(i)] != 1) sat = false;
                if (v[static_cast<std::size_t>(i)] == -1 && bits[static_cast<std::size_t>(i)] != 0) sat = false;
            }
            pf = pf.with(u, sat ? 1 : 0);
        }
        return pf;
    };
    // enumerate {-1,0,1}^d vectors
    std::vector<std::vector<int>> signs;
    {
        std::vector<int> v(static_cast<std::size_t>(d), -1);
        while (true) {
            signs.push_back(v);
            int pos = d - 1;
            while (pos >= 0 && v[static_cast<std::size_t>(pos)] == 1) { v[static_cast<std::size_t>(pos)] = -1; --pos; }
            if (pos < 0) break;
            ++v[static_cast<std::size_t>(pos)];
        }
    }
    std::map<std::vector<int>, int> base_vid;
    for (const auto& v : signs) base_vid[v] = x.add_vertex(conj_of(v));
    int apex = x.add_vertex(all_zero_function(n)); // the null function

    // base cells: intervals (V, W) with V_i in {0, W_i}; dim = #ranging
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> base_id;
    for (const auto& v : signs) base_id[{v, v}] = base_vid.at(v);
    for (int dim = 1; dim <= d; ++dim) {
        for (const auto& vlow : signs)
            for (const auto& vhigh : signs) {
                int ranging = 0;
                bool ok = true;
                for (int i = 0; i < d; ++i) {
                    int a = vlow[static_cast<std::size_t>(i)], b = vhigh[static_cast<std::size_t>(i)];
                    if (a == b) continue;
                    if (a == 0 && b != 0) ++ranging;
                    else ok = false;
                }
                if (!ok || ranging != dim) continue;
                std::vector<int> facets;
                for (int i = 0; i < d; ++i) {
                    if (vlow[static_cast<std::size_t>(i)] == vhigh[static_cast<std::size_t>(i)]) continue;
                    auto lo = vlow, hi = vhigh;
                    hi[static_cast<std::size_t>(i)] = 0; // collapse to the 0 side
                    facets.push_back(base_id.at({lo, hi}));
                    lo = vlow;
                    lo[static_cast<std::size_t>(i)] = vhigh[static_cast<std::size_t>(i)]; // fix to the +-1 side
                    facets.push_back(base_id.at({lo, vhigh}));
                }
                base_id[{vlow, vhigh}] = x.add_cell(dim, std::move(facets));
            }
    }

    // cone cells C_w for w partial over [d] with values in {-1, +1}
    // (stored as PartialFunction over (d, 2): 0 <-> -1, 1 <-> +1)
    std::map<PartialFunction, int> cone_id;
    auto subpile_top = [&](const PartialFunction& w) {
        // top cells of the subpile: intervals fixed to w on dom(w), ranging elsewhere
        std::vector<int> ids;
        std::vector<int> lo(static_cast<std::size_t>(d), 0), hi(static_cast<std::size_t>(d), 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == d) {
                ids.push_back(base_id.at({lo, hi}));
                return;
            }
            if (w.defined(i)) {
                lo[static_cast<std::size_t>(i)] = hi[static_cast<std::size_t>(i)] = w.value(i) == 1 ? 1 : -1;
                rec(i + 1);
            } else {
                lo[static_cast<std::size_t>(i)] = 0;
                for (int b : {-1, 1}) {
                    hi[static_cast<std::size_t>(i)] = b;
                    rec(i + 1);
                }
            }
        };
        rec(0);
        return ids;
    };
    for (int domsz = d; domsz >= 0; --domsz) {
        std::function<void(PartialFunction, int, int)> gen = [&](PartialFunction w, int from, int need) {
            if (need == 0) {
                int dim = d + 1 - w.dom_size();
                std::vector<int> facets = subpile_top(w);
                if (w.dom_size() == d) {
                    facets.push_back(apex); // segment: corner vertex + apex
                } else {
                    for (int i = 0; i < d; ++i)
                        if (!w.defined(i))
                            for (int b = 0; b < 2; ++b) facets.push_back(cone_id.at(w.with(i, b)));
                }
                cone_id[w] = x.add_cell(dim, std::move(facets));
                return;
            }
            for (int i = from; i <= d - need; ++i)
                for (int b = 0; b < 2; ++b) gen(w.with(i, b), i + 1, need - 1);
        };
        gen(PartialFunction(d, 2), 0, domsz);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Flag resolution
// ---------------------------------------------------------------------------

long long flag_path_count(int p, int d) {
    long long acc = 1, pw = 1;
    for (int i = 0; i < d; ++i) pw *= p;
    // prod_{i=0}^{d-1} (p^{d-i} - 1)
    for (int i = 0; i < d; ++i) {
        acc *= (pw - 1);
        pw /= p;
    }
    return acc;
}

namespace {

bool prime_p(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// covector encoded as its coefficient tuple a in [p]^d, packed base p
struct FlagSpace {
    int p, d, total;
    std::vector<std::vector<int>> coeffs; // decoded tuples

    FlagSpace(int pp, int dd) : p(pp), d(dd) {
        total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        coeffs.resize(static_cast<std::size_t>(total));
        for (int a = 0; a < total; ++a) {
            int x = a;
            std::vector<int> t(static_cast<std::size_t>(d));
            for (int j = d - 1; j >= 0; --j) {
                t[static_cast<std::size_t>(j)] = x % p;
                x /= p;
            }
            coeffs[static_cast<std::size_t>(a)] = std::move(t);
        }
    }

    int weight(int a) const {
        int w = 0;
        for (int c : coeffs[static_cast<std::size_t>(a)]) w += (c != 0);
        return w;
    }
};

} // namespace

LabeledComplex flag_resolution(int p, int d, FlagOrder order) {
    if (!prime_p(p)) throw precondition_error("flag_resolution: p must be prime (prime powers rejected)");
    if (d < 1) throw precondition_error("flag_resolution: need d >= 1");
    FlagSpace fs(p, d);
    const int q = fs.total; // covector count = p^d

    auto earlier = [&](int a, int b) {
        if (order == FlagOrder::WeightLex) {
            int wa = fs.weight(a), wb = fs.weight(b);
            if (wa != wb) return wa < wb;
        }
        return fs.coeffs[static_cast<std::size_t>(a)] < fs.coeffs[static_cast<std::size_t>(b)];
    };
    auto least_of = [&](const std::vector<int>& set) {
        int best = set.front();
        for (int a : set)
            if (earlier(a, best)) best = a;
        return best;
    };

    // affine subspaces of the dual space (sets of covectors); hyperplanes of
    // V = cosets of a codimension-1 direction subspace
    auto affine_hyperplanes = [&](const std::vector<int>& v) {
        // direction set D = {a - v0}
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> out;
        const auto& base = fs.coeffs[static_cast<std::size_t>(v.front())];
        std::vector<std::vector<int>> dirs;
        for (int a : v) {
            std::vector<int> t(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j)
                t[static_cast<std::size_t>(j)] =
                    ((fs.coeffs[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] -
                      base[static_cast<std::size_t>(j)]) % p + p) % p;
            dirs.push_back(std::move(t));
        }
        // enumerate normal functionals lambda in [p]^d, keep hyperplane kernels in D
        std::vector<int> lam(static_cast<std::size_t>(d), 0);
        while (true) {
            int pos = d - 1;
            while (pos >= 0 && lam[static_cast<std::size_t>(pos)] == p - 1) { lam[static_cast<std::size_t>(pos)] = 0; --pos; }
            if (pos < 0) break;
            ++lam[static_cast<std::size_t>(pos)];
            // kernel of lam within the direction set
            std::vector<std::size_t> kernel_ids;
            bool nonconstant = false;
            for (std::size_t i = 0; i < dirs.size(); ++i) {
                int acc = 0;
                for (int j = 0; j < d; ++j) acc = (acc + lam[static_cast<std::size_t>(j)] * dirs[i][static_cast<std::size_t>(j)]) % p;
                if (acc == 0) kernel_ids.push_back(i);
                else nonconstant = true;
            }
            if (!nonconstant || kernel_ids.size() == 0) continue;
            if (kernel_ids.size() * static_cast<std::size_t>(p) != v.size()) continue; // not codim 1 on V
            // cosets: group v by lam value
            std::map<int, std::vector<int>> cosets;
            for (std::size_t i = 0; i < v.size(); ++i) {
                int acc = 0;
                for (int j = 0; j < d; ++j) acc = (acc + lam[static_cast<std::size_t>(j)] * dirs[i][static_cast<std::size_t>(j)]) % p;
                cosets[acc].push_back(v[i]);
            }
            for (auto& [val, coset] : cosets) {
                std::sort(coset.begin(), coset.end());
                if (seen.insert(coset).second) out.push_back(coset);
            }
        }
        return out;
    };

    // DFS over the DAG, collecting maximal paths' vertex sets
    std::vector<std::vector<int>> top_simplices;
    std::vector<int> path;
    std::function<void(const std::vector<int>&)> walk = [&](const std::vector<int>& v) {
        int f = least_of(v);
        path.push_back(f);
        if (v.size() == 1) {
            top_simplices.push_back(path);
        } else {
            for (const auto& w : affine_hyperplanes(v)) {
                if (std::find(w.begin(), w.end(), f) != w.end()) continue;
                walk(w);
            }
        }
        path.pop_back();
    };
    std::vector<int> all(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a) all[static_cast<std::size_t>(a)] = a;
    walk(all);

    // labels: covector a as a total function on [p^d]
    const int n = q;
    LabeledComplex x(n, p, IdealKind::Canonical);
    auto covector_fn = [&](int a) {
        std::vector<std::int8_t> vals(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            int acc = 0, xx = u;
            for (int j = d - 1; j >= 0; --j) {
                acc = (acc + fs.coeffs[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] * (xx % p)) % p;
                xx /= p;
            }
            vals[static_cast<std::size_t>(u)] = static_cast<std::int8_t>(acc);
        }
        return PartialFunction(std::move(vals), p);
    };
    std::vector<int> vid(static_cast<std::size_t>(q), -1);
    for (int a = 0; a < q; ++a) vid[static_cast<std::size_t>(a)] = x.add_vertex(covector_fn(a));

    // simplicial closure of the top simplices
    std::set<std::vector<int>> faces;
    for (auto s : top_simplices) {
        std::sort(s.begin(), s.end());
        // all subsets of s with size >= 2
        const std::size_t sz = s.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << sz); ++mask) {
            if (__builtin_popcountll(mask) < 2) continue;
            std::vector<int> sub;
            for (std::size_t i = 0; i < sz; ++i)
                if (mask >> i & 1) sub.push_back(s[i]);
            faces.insert(sub);
        }
    }
    std::map<std::vector<int>, int> id;
    for (int a = 0; a < q; ++a) id[{a}] = vid[static_cast<std::size_t>(a)];
    // add by size
    std::vector<std::vector<int>> ordered(faces.begin(), faces.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    for (const auto& f : ordered) {
        std::vector<int> facets;
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<int> sub;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != i) sub.push_back(f[j]);
            facets.push_back(id.at(sub));
        }
        id[f] = x.add_cell(static_cast<int>(f.size()) - 1, std::move(facets));
    }
    return x;
}

// ---------------------------------------------------------------------------
// Combinators
// ---------------------------------------------------------------------------

LabeledComplex join_resolutions(const LabeledComplex& x, const LabeledComplex& y) {
    if (x.n() != y.n() || x.m() != y.m()) throw shape_error("join_resolutions: shape mismatch");
    if (x.kind() != IdealKind::Canonical || y.kind() != IdealKind::Canonical)
        throw precondition_error("join_resolutions: canonical labels required");
    LabeledComplex out(x.n(), x.m(), IdealKind::Canonical);
    // cells of the join = pairs (a, b) of cells (including empty on either side,
    // not both); id map from (a, b)
    std::map<std::pair<int, int>, int> id;
    id[{0, 0}] = 0;
    struct Item {
        int a, b, dim;
    };
    std::vector<Item> items;
    for (std::size_t a = 0; a < x.cells().size(); ++a)
        for (std::size_t b = 0; b < y.cells().size(); ++b) {
            if (a == 0 && b == 0) continue;
            int dim = x.cells()[a].dim + y.cells()[b].dim + 1;
            items.push_back({static_cast<int>(a), static_cast<int>(b), dim});
        }
    std::sort(items.begin(), items.end(), [](const Item& p, const Item& q) { return p.dim < q.dim; });
    for (const auto& it : items) {
        if (it.dim == 0) {
            const PartialFunction& lbl = it.a == 0 ? y.label(it.b) : x.label(it.a);
            id[{it.a, it.b}] = out.add_vertex(lbl);
            continue;
        }
        std::vector<int> facets;
        if (it.a != 0)
            for (int fa : x.cells()[static_cast<std::size_t>(it.a)].facets) facets.push_back(id.at({fa, it.b}));
        if (it.b != 0)
            for (int fb : y.cells()[static_cast<std::size_t>(it.b)].facets) facets.push_back(id.at({it.a, fb}));
        PartialFunction lbl = it.a == 0 ? y.label(it.b)
                              : it.b == 0 ? x.label(it.a)
                                          : x.label(it.a).meet(y.label(it.b));
        id[{it.a, it.b}] = out.add_cell(it.dim, std::move(facets), lbl);
    }
    return out;
}

LabeledComplex product_resolutions(const LabeledComplex& x, const LabeledComplex& y) {
    if (x.kind() != IdealKind::Canonical || y.kind() != IdealKind::Canonical)
        throw precondition_error("product_resolutions: canonical labels required");
    const int n = x.n() + y.n(), m = x.m() + y.m();
    LabeledComplex out(n, m, IdealKind::Canonical);
    auto amalgam = [&](const PartialFunction& f, const PartialFunction& g) {
        PartialFunction pf(n, m);
        for (int u = 0; u < x.n(); ++u)
            if (f.defined(u)) pf = pf.with(u, f.value(u));
        for (int u = 0; u < y.n(); ++u)
            if (g.defined(u)) pf = pf.with(x.n() + u, g.value(u) + x.m());
        return pf;
    };
    std::map<std::pair<int, int>, int> id;
    id[{0, 0}] = 0;
    struct Item {
        int a, b, dim;
    };
    std::vector<Item> items;
    for (std::size_t a = 1; a < x.cells().size(); ++a)
        for (std::size_t b = 1; b < y.cells().size(); ++b)
            items.push_back({static_cast<int>(a), static_cast<int>(b),
                             x.cells()[a].dim + y.cells()[b].dim});
    std::sort(items.begin(), items.end(), [](const Item& p, const Item& q) { return p.dim < q.dim; });
    for (const auto& it : items) {
        PartialFunction lbl = amalgam(x.label(it.a), y.label(it.b));
        if (it.dim == 0) {
            id[{it.a, it.b}] = out.add_vertex(lbl);
            continue;
        }
        std::vector<int> facets;
        for (int fa : x.cells()[static_cast<std::size_t>(it.a)].facets)
            if (fa != 0) facets.push_back(id.at({fa, it.b}));
        for (int fb : y.cells()[static_cast<std::size_t>(it.b)].facets)
            if (fb != 0) facets.push_back(id.at({it.a, fb}));
        id[{it.a, it.b}] = out.add_cell(it.dim, std::move(facets), lbl);
    }
    return out;
}

LabeledComplex restrict_resolution(const LabeledComplex& x, const std::vector<int>& u) {
    if (x.kind() != IdealKind::Canonical)
        throw precondition_error("restrict_resolution: canonical labels required");
    for (int i : u)
        if (i < 0 || i >= x.n()) throw shape_error("restrict_resolution: position out of range");
    LabeledComplex out(static_cast<int>(u.size()), x.m(), IdealKind::Canonical);
    std::vector<int> id(x.cells().size(), -1);
    id[0] = 0;
    // same cells, labels projected
    for (int dim = 0; dim <= x.dim(); ++dim)
        for (int c : x.cells_of_dim(dim)) {
            PartialFunction lbl = x.label(c).project_to(u);
            if (dim == 0) {
                id[static_cast<std::size_t>(c)] = out.add_vertex(lbl);
            } else {
                std::vector<int> facets;
                for (int f : x.cells()[static_cast<std::size_t>(c)].facets)
                    facets.push_back(id[static_cast<std::size_t>(f)]);
                id[static_cast<std::size_t>(c)] = out.add_cell(dim, std::move(facets), lbl);
            }
        }
    return out;
}

} // namespace suboplex
