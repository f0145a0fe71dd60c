#include "suboplex/geometry.hpp"

#include "suboplex/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace suboplex {

// ---------------------------------------------------------------------------
// SignVector
// ---------------------------------------------------------------------------

SignVector SignVector::from_string(const std::string& s) {
    std::vector<std::int8_t> signs;
    signs.reserve(s.size());
    for (char c : s) {
        if (c == '+') signs.push_back(1);
        else if (c == '-') signs.push_back(-1);
        else if (c == '0') signs.push_back(0);
        else throw shape_error(std::string("bad sign character '") + c + "'");
    }
    return SignVector(std::move(signs));
}

SignVector SignVector::of_pf(const PartialFunction& pf) {
    if (pf.m() != 2) throw shape_error("SignVector::of_pf: codomain must be 2");
    std::vector<std::int8_t> signs(static_cast<std::size_t>(pf.n()), 0);
    for (int u = 0; u < pf.n(); ++u)
        if (pf.defined(u)) signs[static_cast<std::size_t>(u)] = pf.value(u) == 0 ? 1 : -1;
    return SignVector(std::move(signs));
}

bool SignVector::is_zero() const {
    for (auto s : signs_)
        if (s != 0) return false;
    return true;
}

bool SignVector::is_total() const {
    for (auto s : signs_)
        if (s == 0) return false;
    return true;
}

int SignVector::support_size() const {
    int k = 0;
    for (auto s : signs_) k += (s != 0);
    return k;
}

SignVector SignVector::negated() const {
    std::vector<std::int8_t> signs = signs_;
    for (auto& s : signs) s = static_cast<std::int8_t>(-s);
    return SignVector(std::move(signs));
}

bool SignVector::conformal_below(const SignVector& w) const {
    if (n() != w.n()) throw shape_error("conformal_below: length mismatch");
    for (int u = 0; u < n(); ++u)
        if (signs_[static_cast<std::size_t>(u)] != 0 && signs_[static_cast<std::size_t>(u)] != w.sign(u))
            return false;
    return true;
}

SignVector SignVector::compose(const SignVector& w) const {
    if (n() != w.n()) throw shape_error("compose: length mismatch");
    std::vector<std::int8_t> signs = signs_;
    for (int u = 0; u < n(); ++u)
        if (signs[static_cast<std::size_t>(u)] == 0)
            signs[static_cast<std::size_t>(u)] = static_cast<std::int8_t>(w.sign(u));
    return SignVector(std::move(signs));
}

PartialFunction SignVector::to_pf() const {
    PartialFunction pf(n(), 2);
    for (int u = 0; u < n(); ++u) {
        int s = signs_[static_cast<std::size_t>(u)];
        if (s == 1) pf = pf.with(u, 0);
        else if (s == -1) pf = pf.with(u, 1);
    }
    return pf;
}

std::string SignVector::to_string() const {
    std::string s;
    s.reserve(signs_.size());
    for (auto v : signs_) s.push_back(v == 0 ? '0' : (v > 0 ? '+' : '-'));
    return s;
}

// ---------------------------------------------------------------------------
// PointConfig / LinearSubspace
// ---------------------------------------------------------------------------

PointConfig::PointConfig(std::vector<std::vector<Rat>> points) : points_(std::move(points)) {
    if (points_.empty()) throw precondition_error("PointConfig: need at least one point");
    const std::size_t d = points_[0].size();
    for (const auto& p : points_)
        if (p.size() != d) throw shape_error("PointConfig: inconsistent point dimensions");
    RatMatrix vec;
    for (std::size_t i = 0; i < points_.size(); ++i) vec.push_back(vectorized(static_cast<int>(i)));
    affine_dim_ = rat_rank(std::move(vec)) - 1;
}

std::vector<Rat> PointConfig::vectorized(int i) const {
    std::vector<Rat> v = points_[static_cast<std::size_t>(i)];
    v.push_back(Rat(1));
    return v;
}

PointConfig PointConfig::boolean_cube(int d) {
    if (d < 1) throw precondition_error("boolean_cube: need d >= 1");
    std::vector<std::vector<Rat>> pts;
    for (int u = 0; u < (1 << d); ++u) {
        std::vector<Rat> p;
        auto bits = index_bits(u, d);
        for (int b : bits) p.push_back(b == 0 ? Rat(1) : Rat(-1));
        pts.push_back(std::move(p));
    }
    return PointConfig(std::move(pts));
}

PointConfig PointConfig::monomial_lift(int k) const {
    const int d = ambient_dim();
    if (k < 1 || k > d) throw precondition_error("monomial_lift: need 1 <= k <= d");
    // index tuples of each degree, lexicographic
    std::vector<std::vector<int>> monomials;
    for (int deg = 1; deg <= k; ++deg) {
        std::vector<int> tuple;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(tuple.size()) == deg) {
                monomials.push_back(tuple);
                return;
            }
            for (int i = start; i < d; ++i) {
                tuple.push_back(i);
                rec(i + 1);
                tuple.pop_back();
            }
        };
        rec(0);
    }
    std::vector<std::vector<Rat>> pts;
    for (const auto& p : points_) {
        std::vector<Rat> q;
        q.reserve(monomials.size());
        for (const auto& mono : monomials) {
            Rat prod = 1;
            for (int i : mono) prod *= p[static_cast<std::size_t>(i)];
            q.push_back(prod);
        }
        pts.push_back(std::move(q));
    }
    return PointConfig(std::move(pts));
}

LinearSubspace::LinearSubspace(std::vector<std::vector<Rat>> basis_rows) : basis_(std::move(basis_rows)) {
    if (basis_.empty()) throw precondition_error("LinearSubspace: need at least one basis vector");
    const std::size_t n = basis_[0].size();
    for (const auto& b : basis_)
        if (b.size() != n) throw shape_error("LinearSubspace: inconsistent vector dimensions");
    if (rat_rank(basis_) != static_cast<int>(basis_.size()))
        throw precondition_error("LinearSubspace: basis is linearly dependent");
}

bool LinearSubspace::inside_coordinate_hyperplane() const {
    for (int u = 0; u < n(); ++u) {
        bool all_zero = true;
        for (const auto& b : basis_)
            if (b[static_cast<std::size_t>(u)] != 0) { all_zero = false; break; }
        if (all_zero) return true;
    }
    return false;
}

std::vector<Rat> LinearSubspace::element(const std::vector<Rat>& coeffs) const {
    if (coeffs.size() != basis_.size()) throw shape_error("LinearSubspace::element: bad coefficient count");
    std::vector<Rat> x(static_cast<std::size_t>(n()), Rat(0));
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (int u = 0; u < n(); ++u) x[static_cast<std::size_t>(u)] += coeffs[i] * basis_[i][static_cast<std::size_t>(u)];
    return x;
}

LinearSubspace LinearSubspace::value_space(const PointConfig& u) {
    // rows of the basis = coordinates of the vectorized points, transposed
    const int n = u.count();
    const int cols = u.ambient_dim() + 1;
    std::vector<std::vector<Rat>> rows;
    for (int j = 0; j < cols; ++j) {
        std::vector<Rat> row(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = u.vectorized(i)[static_cast<std::size_t>(j)];
        rows.push_back(std::move(row));
    }
    // prune to an independent subset (the lift may be redundant)
    std::vector<std::vector<Rat>> basis;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        basis.push_back(rows[i]);
        if (rat_rank(basis) != static_cast<int>(basis.size())) basis.pop_back();
    }
    return LinearSubspace(std::move(basis));
}

// ---------------------------------------------------------------------------
// Realizability
// ---------------------------------------------------------------------------

namespace {

std::vector<LinearConstraint> sign_constraints_points(const PointConfig& u, const SignVector& tau) {
    // variables: c in Q^d, r; functional value at point i is c.p_i - r
    std::vector<LinearConstraint> cons;
    for (int i = 0; i < u.count(); ++i) {
        LinearConstraint c;
        c.coeffs = u.points()[static_cast<std::size_t>(i)];
        c.coeffs.push_back(Rat(-1));
        int s = tau.sign(i);
        if (s == 0) {
            c.rel = Rel::Eq;
            c.rhs = 0;
        } else {
            // strict sign via homogeneity: s * (c.p - r) >= 1
            if (s < 0)
                for (auto& v : c.coeffs) v = -v;
            c.rel = Rel::Ge;
            c.rhs = 1;
        }
        cons.push_back(std::move(c));
    }
    return cons;
}

std::vector<LinearConstraint> sign_constraints_subspace(const LinearSubspace& l, const SignVector& tau) {
    // variables: coefficients lambda of the basis; coordinate u of x is sum_i lambda_i basis[i][u]
    std::vector<LinearConstraint> cons;
    for (int u = 0; u < l.n(); ++u) {
        LinearConstraint c;
        c.coeffs.reserve(l.basis().size());
        for (const auto& b : l.basis()) c.coeffs.push_back(b[static_cast<std::size_t>(u)]);
        int s = tau.sign(u);
        if (s == 0) {
            c.rel = Rel::Eq;
            c.rhs = 0;
        } else {
            if (s < 0)
                for (auto& v : c.coeffs) v = -v;
            c.rel = Rel::Ge;
            c.rhs = 1;
        }
        cons.push_back(std::move(c));
    }
    return cons;
}

} // namespace

bool realizable(const PointConfig& u, const SignVector& tau) {
    if (tau.n() != u.count()) throw shape_error("realizable: sign vector length mismatch");
    return is_feasible(sign_constraints_points(u, tau), u.ambient_dim() + 1);
}

bool realizable(const LinearSubspace& l, const SignVector& tau) {
    if (tau.n() != l.n()) throw shape_error("realizable: sign vector length mismatch");
    return is_feasible(sign_constraints_subspace(l, tau), l.dim());
}

std::optional<std::vector<Rat>> realize_witness(const LinearSubspace& l, const SignVector& tau) {
    auto sol = solve_feasibility(sign_constraints_subspace(l, tau), l.dim());
    if (!sol) return std::nullopt;
    return l.element(*sol);
}

// ---------------------------------------------------------------------------
// CovectorPoset
// ---------------------------------------------------------------------------

namespace {

// Dimension of the realizing cell, from linear algebra: for a subspace,
// dim{x in L : x_u = 0 on zero(tau)} - 1; for points, the same in the space
// of affine functionals.
int cell_rank_points(const PointConfig& u, const SignVector& tau) {
    RatMatrix zero_rows;
    for (int i = 0; i < u.count(); ++i)
        if (tau.sign(i) == 0) zero_rows.push_back(u.vectorized(i));
    int dim = u.affine_dim() + 1 - (zero_rows.empty() ? 0 : rat_rank(zero_rows));
    return dim - 1;
}

int cell_rank_subspace(const LinearSubspace& l, const SignVector& tau) {
    RatMatrix cols;
    for (int u = 0; u < l.n(); ++u)
        if (tau.sign(u) == 0) {
            std::vector<Rat> col;
            for (const auto& b : l.basis()) col.push_back(b[static_cast<std::size_t>(u)]);
            cols.push_back(std::move(col));
        }
    int dim = l.dim() - (cols.empty() ? 0 : rat_rank(cols));
    return dim - 1;
}

template <class Oracle, class RankFn>
CovectorPoset enumerate_covectors(int n, const Oracle& realizable_fn, const RankFn& rank_fn,
                                  const Limits& lim) {
    if (n > lim.covector_max_n)
        throw size_limit_error("covectors: n exceeds the enumeration limit");
    std::vector<SignVector> found;
    std::vector<std::int8_t> signs(static_cast<std::size_t>(n), -1);
    while (true) {
        SignVector v{std::vector<std::int8_t>(signs)};
        if (realizable_fn(v)) found.push_back(v);
        int pos = n - 1;
        while (pos >= 0 && signs[static_cast<std::size_t>(pos)] == 1) { signs[static_cast<std::size_t>(pos)] = -1; --pos; }
        if (pos < 0) break;
        ++signs[static_cast<std::size_t>(pos)];
    }
    std::sort(found.begin(), found.end());
    // longest-chain rank from the bottom, processed by support size
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return found[a].support_size() < found[b].support_size();
    });
    std::map<SignVector, int> chain_rank;
    for (std::size_t idx : order) {
        const SignVector& v = found[idx];
        int best = -1; // the zero vector alone gives rank -1
        for (const auto& [w, rw] : chain_rank)
            if (!(w == v) && w.conformal_below(v)) best = std::max(best, rw + 1);
        if (v.is_zero()) best = -1;
        else if (best == -1) best = 0; // only the zero vector below: a cocircuit
        chain_rank[v] = best;
    }
    std::vector<CovectorPoset::Entry> entries;
    for (const auto& v : found) {
        int rk = chain_rank.at(v);
        int geo = rank_fn(v);
        if (rk != geo)
            throw discrepancy_error("covectors: chain rank " + std::to_string(rk) + " != cell dimension " +
                                    std::to_string(geo) + " at " + v.to_string());
        entries.push_back({v, rk});
    }
    return CovectorPoset(std::move(entries));
}

} // namespace

std::optional<int> CovectorPoset::rank_of(const SignVector& v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, const SignVector& s) { return e.v < s; });
    if (it == entries_.end() || !(it->v == v)) return std::nullopt;
    return it->rank;
}

std::vector<SignVector> CovectorPoset::cocircuits() const {
    std::vector<SignVector> out;
    for (const auto& e : entries_)
        if (e.rank == 0) out.push_back(e.v);
    return out;
}

int CovectorPoset::top_rank() const {
    int r = -1;
    for (const auto& e : entries_) r = std::max(r, e.rank);
    return r;
}

CovectorPoset CovectorPoset::of(const PointConfig& u, const Limits& lim) {
    return enumerate_covectors(
        u.count(), [&](const SignVector& v) { return realizable(u, v); },
        [&](const SignVector& v) { return cell_rank_points(u, v); }, lim);
}

CovectorPoset CovectorPoset::of(const LinearSubspace& l, const Limits& lim) {
    return enumerate_covectors(
        l.n(), [&](const SignVector& v) { return realizable(l, v); },
        [&](const SignVector& v) { return cell_rank_subspace(l, v); }, lim);
}

// ---------------------------------------------------------------------------
// Threshold classes
// ---------------------------------------------------------------------------

FunctionClass linthr_class(const PointConfig& u, const Limits& lim) {
    const int n = u.count();
    if (n > lim.threshold_max_n)
        throw size_limit_error("linthr: point count exceeds the enumeration budget");
    std::vector<PartialFunction> members;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n), 0);
    while (true) {
        PartialFunction f(vals, 2);
        if (realizable(u, SignVector::of_pf(f))) members.push_back(f);
        int pos = n - 1;
        while (pos >= 0 && vals[static_cast<std::size_t>(pos)] == 1) { vals[static_cast<std::size_t>(pos)] = 0; --pos; }
        if (pos < 0) break;
        ++vals[static_cast<std::size_t>(pos)];
    }
    return FunctionClass(n, 2, std::move(members), "linthr(n=" + std::to_string(n) + ")");
}

FunctionClass polythr_class(int d, int k, const Limits& lim) {
    PointConfig cube = PointConfig::boolean_cube(d);
    PointConfig lifted = cube.monomial_lift(k);
    FunctionClass c = linthr_class(lifted, lim);
    return FunctionClass(c.n(), 2, c.members(),
                         "polythr(d=" + std::to_string(d) + ",k=" + std::to_string(k) + ")");
}

BettiTable linthr_betti_closed_form(const PointConfig& u, const Limits& lim) {
    CovectorPoset poset = CovectorPoset::of(u, lim);
    const int d = u.affine_dim();
    BettiTable table(Field::Rational);
    for (const auto& e : poset.entries())
        table.set(d - e.rank, e.v.to_pf(), 1);
    return table;
}

// ---------------------------------------------------------------------------
// Homological Farkas
// ---------------------------------------------------------------------------

std::vector<SignVector> lambda_cells(const LinearSubspace& l, const SignVector& g, const Limits& lim) {
    if (g.n() != l.n()) throw shape_error("lambda_cells: length mismatch");
    if (!g.is_total()) throw precondition_error("lambda_cells: g must be total");
    bool has_minus = false, has_plus = false;
    for (int u = 0; u < g.n(); ++u) (g.sign(u) < 0 ? has_minus : has_plus) = true;
    if (!has_minus || !has_plus)
        throw precondition_error("lambda_cells: g must differ from the all-plus and all-minus vectors");
    CovectorPoset poset = CovectorPoset::of(l, lim);
    std::vector<SignVector> cells;
    for (const auto& e : poset.entries()) {
        if (e.v.is_zero() || !e.v.conformal_below(g)) continue;
        bool visible = false;
        for (int u = 0; u < g.n(); ++u)
            if (g.sign(u) < 0 && e.v.sign(u) == 0) { visible = true; break; }
        if (visible) cells.push_back(e.v);
    }
    return cells;
}

std::vector<long long> lambda_homology(const LinearSubspace& l, const SignVector& g, Field field,
                                       const Limits& lim) {
    auto cells = lambda_cells(l, g, lim);
    if (cells.empty()) return {};
    // order complex of the closed-cell poset (conformal order)
    std::vector<std::vector<int>> less(cells.size());
    for (std::size_t a = 0; a < cells.size(); ++a)
        for (std::size_t b = 0; b < cells.size(); ++b)
            if (a != b && cells[a].conformal_below(cells[b]) && !(cells[a] == cells[b]))
                less[b].push_back(static_cast<int>(a));
    SimplicialComplex oc = order_complex(static_cast<int>(cells.size()), less);
    auto h = reduced_homology(oc, field);
    // drop the degree -1 slot; Lambda is nonempty here
    return std::vector<long long>(h.begin() + 1, h.end());
}

FarkasCertificate hom_farkas(const LinearSubspace& l, Field field, const Limits& lim) {
    if (l.dim() < 2) throw precondition_error("hom_farkas: need dim(L) >= 2");
    if (l.inside_coordinate_hyperplane())
        throw precondition_error("hom_farkas: L lies inside a coordinate hyperplane");
    const int n = l.n();
    // LP oracle: x in L with x >= 1 componentwise (strict positivity by scaling)
    auto witness = realize_witness(l, SignVector(std::vector<std::int8_t>(static_cast<std::size_t>(n), 1)));

    // homological verdict: scan sign vectors g != all-plus, all-minus
    std::optional<HoleCertificate> hole;
    std::vector<std::int8_t> signs(static_cast<std::size_t>(n), 1);
    auto advance = [&]() {
        int pos = n - 1;
        while (pos >= 0 && signs[static_cast<std::size_t>(pos)] == -1) { signs[static_cast<std::size_t>(pos)] = 1; --pos; }
        if (pos < 0) return false;
        signs[static_cast<std::size_t>(pos)] = -1;
        return true;
    };
    while (advance()) {
        SignVector g{std::vector<std::int8_t>(signs)};
        bool all_minus = true;
        for (int u = 0; u < n; ++u)
            if (g.sign(u) > 0) { all_minus = false; break; }
        if (all_minus) continue;
        auto h = lambda_homology(l, g, field, lim);
        for (std::size_t j = 0; j < h.size(); ++j)
            if (h[j] != 0) {
                hole = HoleCertificate{g, static_cast<int>(j), h[j]};
                break;
            }
        if (hole) break;
    }

    if (witness && hole)
        throw discrepancy_error("hom_farkas: positive witness and hole certificate coexist");
    if (!witness && !hole)
        throw discrepancy_error("hom_farkas: neither witness nor hole certificate found");
    FarkasCertificate cert;
    if (witness) cert.value = PositiveWitness{*witness};
    else cert.value = *hole;
    return cert;
}

AffineFarkasResult affine_hom_farkas(const std::vector<AffineHyperplane>& arrangement,
                                     const AffineSubspace& n, Field field, const Limits& lim) {
    if (arrangement.empty()) throw precondition_error("affine_hom_farkas: empty arrangement");
    const std::size_t k1 = arrangement[0].normal.size() + 1; // vectorized dimension k
    // vectorized hyperplane rows (w, -offset), plus the hyperplane at infinity
    std::vector<std::vector<Rat>> w_rows;
    for (const auto& h : arrangement) {
        if (h.normal.size() + 1 != k1) throw shape_error("affine_hom_farkas: inconsistent dimensions");
        std::vector<Rat> row = h.normal;
        row.push_back(-h.offset);
        w_rows.push_back(std::move(row));
    }
    {
        std::vector<Rat> h0(k1, Rat(0));
        h0[k1 - 1] = 1;
        w_rows.push_back(std::move(h0));
    }
    if (rat_rank(w_rows) != static_cast<int>(k1))
        throw precondition_error("affine_hom_farkas: arrangement is not essential");

    // vectorize N: span{(basepoint, 1)} + directions x {0}
    std::vector<std::vector<Rat>> n_basis;
    {
        std::vector<Rat> b = n.basepoint;
        if (b.size() + 1 != k1) throw shape_error("affine_hom_farkas: subspace dimension mismatch");
        b.push_back(Rat(1));
        n_basis.push_back(std::move(b));
        for (const auto& dvec : n.directions) {
            std::vector<Rat> r = dvec;
            r.push_back(Rat(0));
            n_basis.push_back(std::move(r));
        }
        if (rat_rank(n_basis) != static_cast<int>(n_basis.size()))
            throw precondition_error("affine_hom_farkas: dependent subspace description");
    }

    // image of vec(N) under the embedding x -> (w_i . x)_i
    std::vector<std::vector<Rat>> image_basis;
    for (const auto& b : n_basis) {
        std::vector<Rat> row;
        row.reserve(w_rows.size());
        for (const auto& w : w_rows) {
            Rat acc = 0;
            for (std::size_t j = 0; j < k1; ++j) acc += w[j] * b[j];
            row.push_back(acc);
        }
        image_basis.push_back(std::move(row));
    }
    LinearSubspace image(std::move(image_basis));
    FarkasCertificate cert = hom_farkas(image, field, lim);
    AffineFarkasResult out;
    if (cert.intersects_positive_cone()) {
        // solve W.x = y for the unique preimage, then dehomogenize
        const auto& y = std::get<PositiveWitness>(cert.value).x;
        RatMatrix sys;
        std::vector<Rat> rhs;
        for (std::size_t i = 0; i < w_rows.size(); ++i) {
            sys.push_back(w_rows[i]);
            rhs.push_back(y[i]);
        }
        auto x = rat_solve(std::move(sys), std::move(rhs));
        if (x.empty()) throw discrepancy_error("affine_hom_farkas: witness does not pull back");
        // dehomogenize: the last coordinate is the H0 value, positive by construction
        std::vector<Rat> point;
        for (std::size_t j = 0; j + 1 < k1; ++j) point.push_back(x[j] / x[k1 - 1]);
        out.value = std::move(point);
    } else {
        out.value = std::get<HoleCertificate>(cert.value);
    }
    return out;
}

PartialFunction projection_pi(const PartialFunction& f, const LinearSubspace& l) {
    return projection_pi_sign(SignVector::of_pf(f), l).to_pf();
}

SignVector projection_pi_sign(const SignVector& f, const LinearSubspace& l) {
    if (f.n() != l.n()) throw shape_error("projection_pi: length mismatch");
    if (!f.is_total()) throw precondition_error("projection_pi: f must be total");
    std::vector<std::int8_t> out(static_cast<std::size_t>(f.n()), 0);
    for (int u = 0; u < f.n(); ++u) {
        // feasibility of: x in L, sign-consistent with f everywhere, strict at u
        std::vector<LinearConstraint> cons;
        for (int v = 0; v < f.n(); ++v) {
            LinearConstraint c;
            for (const auto& b : l.basis()) c.coeffs.push_back(b[static_cast<std::size_t>(v)]);
            if (f.sign(v) < 0)
                for (auto& x : c.coeffs) x = -x;
            c.rel = Rel::Ge;
            c.rhs = (v == u) ? Rat(1) : Rat(0);
            cons.push_back(std::move(c));
        }
        if (is_feasible(cons, l.dim())) out[static_cast<std::size_t>(u)] = static_cast<std::int8_t>(f.sign(u));
    }
    return SignVector(std::move(out));
}

} // namespace suboplex
