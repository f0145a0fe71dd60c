#include "suboplex/simplicial.hpp"

#include "suboplex/errors.hpp"
#include "suboplex/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace suboplex {

std::string field_name(Field f) { return f == Field::GF2 ? "gf2" : "rational"; }

Field field_from_name(const std::string& s) {
    if (s == "gf2") return Field::GF2;
    if (s == "rational") return Field::Rational;
    throw shape_error("unknown field: " + s);
}

namespace {

struct FaceHash {
    std::size_t operator()(const std::vector<int>& f) const {
        std::size_t h = 1469598103934665603ULL;
        for (int v : f) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ULL;
        return h;
    }
};

} // namespace

SimplicialComplex SimplicialComplex::closure(int num_vertices,
                                             std::vector<std::vector<int>> generators,
                                             bool include_empty) {
    std::unordered_set<std::vector<int>, FaceHash> seen;
    std::vector<std::vector<int>> stack;
    for (auto& g : generators) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        if (!g.empty() && seen.insert(g).second) stack.push_back(g);
    }
    while (!stack.empty()) {
        std::vector<int> f = std::move(stack.back());
        stack.pop_back();
        if (f.size() <= 1) continue;
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<int> sub;
            sub.reserve(f.size() - 1);
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != i) sub.push_back(f[j]);
            if (seen.insert(sub).second) stack.push_back(sub);
        }
    }
    std::vector<std::vector<int>> faces(seen.begin(), seen.end());
    std::sort(faces.begin(), faces.end());
    return SimplicialComplex(num_vertices, std::move(faces), include_empty);
}

SimplicialComplex::SimplicialComplex(int num_vertices, std::vector<std::vector<int>> faces,
                                     bool has_empty)
    : num_vertices_(num_vertices), has_empty_(has_empty), faces_(std::move(faces)) {
    std::unordered_set<std::vector<int>, FaceHash> all(faces_.begin(), faces_.end());
    for (const auto& f : faces_) {
        if (f.empty()) throw shape_error("SimplicialComplex: empty face must use the has_empty flag");
        if (!std::is_sorted(f.begin(), f.end()) || std::adjacent_find(f.begin(), f.end()) != f.end())
            throw shape_error("SimplicialComplex: faces must be sorted vertex sets");
        for (int v : f)
            if (v < 0 || v >= num_vertices_) throw shape_error("SimplicialComplex: vertex out of range");
        if (f.size() > 1) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::vector<int> sub;
                for (std::size_t j = 0; j < f.size(); ++j)
                    if (j != i) sub.push_back(f[j]);
                if (!all.count(sub)) throw shape_error("SimplicialComplex: not subset-closed");
            }
        }
    }
    if (!faces_.empty() && !has_empty_)
        throw shape_error("SimplicialComplex: nonempty complex must contain the empty face");
    std::sort(faces_.begin(), faces_.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

int SimplicialComplex::dim() const {
    if (is_void()) return std::numeric_limits<int>::min();
    int d = -1;
    for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::contains(const std::vector<int>& face) const {
    if (face.empty()) return has_empty_;
    std::vector<int> f = face;
    std::sort(f.begin(), f.end());
    return std::binary_search(faces_.begin(), faces_.end(), f,
                              [](const auto& a, const auto& b) {
                                  if (a.size() != b.size()) return a.size() < b.size();
                                  return a < b;
                              });
}

long long SimplicialComplex::reduced_euler() const {
    if (is_void()) return 0;
    long long chi = has_empty_ ? -1 : 0;
    for (const auto& f : faces_) chi += (f.size() % 2 == 1) ? 1 : -1;
    return chi;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::unordered_set<std::vector<int>, FaceHash> all(faces_.begin(), faces_.end());
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_) {
        bool maximal = true;
        // f is maximal iff no coface f+{v} is present.
        for (int v = 0; v < num_vertices_ && maximal; ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            std::vector<int> g = f;
            g.insert(std::lower_bound(g.begin(), g.end(), v), v);
            if (all.count(g)) maximal = false;
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homology.
// ---------------------------------------------------------------------------

namespace {

// Rank of a dense GF(2) matrix given as bit-packed rows.
long long gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols) {
    long long rank = 0;
    std::size_t row_start = 0;
    for (std::size_t c = 0; c < cols && row_start < rows.size(); ++c) {
        std::size_t w = c / 64, b = c % 64;
        std::size_t piv = row_start;
        while (piv < rows.size() && !(rows[piv][w] >> b & 1)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[row_start], rows[piv]);
        for (std::size_t i = row_start + 1; i < rows.size(); ++i)
            if (rows[i][w] >> b & 1)
                for (std::size_t j = w; j < rows[i].size(); ++j) rows[i][j] ^= rows[row_start][j];
        ++row_start;
        ++rank;
    }
    return rank;
}

// Fraction-free (Bareiss) rank of an integer matrix.
long long bareiss_rank(std::vector<std::vector<Int>> a) {
    if (a.empty() || a[0].empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<long long>(r);
}

struct BoundaryMatrices {
    // faces grouped by dimension; index of a face within its group
    std::vector<std::vector<std::vector<int>>> by_dim; // by_dim[k] = k-dim faces (k >= 0)
    std::vector<long long> rank; // rank[k] = rank of boundary_k : C_k -> C_{k-1}
};

// Computes all boundary-map ranks of the reduced chain complex.
// boundary_0 is the augmentation to the empty face when it is present.
std::vector<long long> boundary_ranks(const SimplicialComplex& kx, Field field) {
    int d = kx.dim();
    std::vector<std::vector<std::vector<int>>> by_dim(static_cast<std::size_t>(std::max(0, d + 1)));
    for (const auto& f : kx.faces()) by_dim[f.size() - 1].push_back(f);
    std::vector<std::unordered_map<std::vector<int>, int, FaceHash>> index(by_dim.size());
    for (std::size_t k = 0; k < by_dim.size(); ++k) {
        std::sort(by_dim[k].begin(), by_dim[k].end());
        for (std::size_t i = 0; i < by_dim[k].size(); ++i) index[k][by_dim[k][i]] = static_cast<int>(i);
    }
    std::vector<long long> rank(by_dim.size() + 1, 0);
    if (by_dim.empty()) return rank;
    // boundary_0: augmentation; rank 1 iff there is a vertex and the empty face.
    rank[0] = (kx.has_empty_face() && !by_dim[0].empty()) ? 1 : 0;
    for (std::size_t k = 1; k < by_dim.size(); ++k) {
        const auto& cols_faces = by_dim[k];
        const std::size_t rows_count = by_dim[k - 1].size(), cols_count = cols_faces.size();
        if (rows_count == 0 || cols_count == 0) { rank[k] = 0; continue; }
        if (field == Field::GF2) {
            // Transposed layout: one bit-row per k-face.
            std::vector<std::vector<std::uint64_t>> rows(
                cols_count, std::vector<std::uint64_t>((rows_count + 63) / 64, 0));
            for (std::size_t c = 0; c < cols_count; ++c) {
                const auto& f = cols_faces[c];
                for (std::size_t i = 0; i < f.size(); ++i) {
                    std::vector<int> sub;
                    for (std::size_t j = 0; j < f.size(); ++j)
                        if (j != i) sub.push_back(f[j]);
                    int r = index[k - 1].at(sub);
                    rows[c][static_cast<std::size_t>(r) / 64] ^= std::uint64_t(1) << (r % 64);
                }
            }
            rank[k] = gf2_rank(std::move(rows), rows_count);
        } else {
            std::vector<std::vector<Int>> m(rows_count, std::vector<Int>(cols_count, Int(0)));
            for (std::size_t c = 0; c < cols_count; ++c) {
                const auto& f = cols_faces[c];
                for (std::size_t i = 0; i < f.size(); ++i) {
                    std::vector<int> sub;
                    for (std::size_t j = 0; j < f.size(); ++j)
                        if (j != i) sub.push_back(f[j]);
                    m[index[k - 1].at(sub)][c] = (i % 2 == 0) ? 1 : -1;
                }
            }
            rank[k] = bareiss_rank(std::move(m));
        }
    }
    return rank;
}

} // namespace

std::vector<long long> reduced_homology(const SimplicialComplex& k, Field field) {
    if (k.is_void()) return {0};
    if (k.is_irrelevant()) return {1};
    int d = k.dim();
    std::vector<long long> counts(static_cast<std::size_t>(d + 1), 0);
    for (const auto& f : k.faces()) ++counts[f.size() - 1];
    auto rank = boundary_ranks(k, field);
    std::vector<long long> h(static_cast<std::size_t>(d + 2), 0);
    // degree -1: empty face minus image of augmentation
    h[0] = (k.has_empty_face() ? 1 : 0) - rank[0];
    for (int i = 0; i <= d; ++i) {
        long long r_in = rank[static_cast<std::size_t>(i)];
        long long r_out = (i + 1 < static_cast<int>(rank.size())) ? rank[static_cast<std::size_t>(i + 1)] : 0;
        h[static_cast<std::size_t>(i + 1)] = counts[static_cast<std::size_t>(i)] - r_in - r_out;
    }
    return h;
}

long long reduced_homology_rank(const SimplicialComplex& k, Field field, int degree) {
    auto h = reduced_homology(k, field);
    int idx = degree + 1;
    if (idx < 0 || idx >= static_cast<int>(h.size())) return 0;
    return h[static_cast<std::size_t>(idx)];
}

bool is_acyclic(const SimplicialComplex& k, Field field) {
    if (k.is_void()) return false; // void is not acyclic in the paper's sense
    if (k.is_irrelevant()) return true;
    auto h = reduced_homology(k, field);
    for (long long r : h)
        if (r != 0) return false;
    return true;
}

SimplicialComplex link(const SimplicialComplex& k, const std::vector<int>& sigma) {
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    if (!k.contains(s)) return SimplicialComplex(); // link of a non-face is void
    std::vector<std::vector<int>> faces;
    bool has_empty = false;
    for (const auto& f : k.faces()) {
        std::vector<int> inter, uni;
        std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(inter));
        if (!inter.empty()) continue;
        std::set_union(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(uni));
        if (k.contains(uni)) faces.push_back(f);
    }
    if (k.has_empty_face()) has_empty = true; // sigma itself in K makes the empty face a link member
    SimplicialComplex out(k.num_vertices(), std::move(faces), has_empty);
    out.vertex_labels = k.vertex_labels;
    return out;
}

SimplicialComplex restrict_complex(const SimplicialComplex& k, const std::vector<int>& sigma) {
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    std::vector<std::vector<int>> faces;
    for (const auto& f : k.faces())
        if (std::includes(s.begin(), s.end(), f.begin(), f.end())) faces.push_back(f);
    SimplicialComplex out(k.num_vertices(), std::move(faces), k.has_empty_face());
    out.vertex_labels = k.vertex_labels;
    return out;
}

SimplicialComplex order_complex(int num_elements, const std::vector<std::vector<int>>& less_list) {
    // less_list[a] = elements strictly below a; chains are faces.
    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    std::vector<std::vector<int>> below = less_list;
    for (auto& b : below) std::sort(b.begin(), b.end());
    std::function<void(int)> extend = [&](int top) {
        chain.push_back(top);
        chains.push_back(chain);
        for (int nxt = 0; nxt < num_elements; ++nxt) {
            // nxt strictly above top: top in below[nxt]
            if (std::binary_search(below[static_cast<std::size_t>(nxt)].begin(),
                                   below[static_cast<std::size_t>(nxt)].end(), top)) {
                // keep chains strictly increasing through comparability
                bool comparable_with_all = true;
                for (int c : chain)
                    if (c != top &&
                        !std::binary_search(below[static_cast<std::size_t>(nxt)].begin(),
                                            below[static_cast<std::size_t>(nxt)].end(), c)) {
                        comparable_with_all = false;
                        break;
                    }
                if (comparable_with_all) extend(nxt);
            }
        }
        chain.pop_back();
    };
    for (int a = 0; a < num_elements; ++a) extend(a);
    // chains were generated as increasing sequences; as faces they are vertex sets
    for (auto& c : chains) std::sort(c.begin(), c.end());
    std::sort(chains.begin(), chains.end());
    chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
    return SimplicialComplex(num_elements, std::move(chains), true);
}

// ---------------------------------------------------------------------------
// Canonical suboplex.
// ---------------------------------------------------------------------------

namespace {

template <class ClassT>
std::vector<PartialFunction> suboplex_faces_impl(const ClassT& c, const Limits& lim) {
    if (c.empty()) throw precondition_error("canonical_suboplex: the empty class is not analyzable");
    std::set<PartialFunction> seen;
    for (const auto& f : c.members()) {
        // all restrictions of f
        auto dom = f.domain();
        const std::size_t k = dom.size();
        if (k > 62) throw size_limit_error("canonical_suboplex: member domain too large");
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
            PartialFunction pf(c.n(), c.m());
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) pf = pf.with(dom[i], f.value(dom[i]));
            seen.insert(pf);
            if (seen.size() > lim.max_faces)
                throw size_limit_error("canonical_suboplex: face count exceeds limit");
        }
    }
    return std::vector<PartialFunction>(seen.begin(), seen.end());
}

template <class ClassT>
SimplicialComplex suboplex_impl(const ClassT& c, const Limits& lim) {
    auto pfs = suboplex_faces_impl(c, lim);
    // vertex ids for used (input, value) pairs
    std::map<std::pair<int, int>, int> vid;
    std::vector<std::pair<int, int>> labels;
    for (const auto& pf : pfs)
        for (int u = 0; u < pf.n(); ++u)
            if (pf.defined(u)) {
                auto key = std::make_pair(u, pf.value(u));
                if (!vid.count(key)) {
                    vid[key] = static_cast<int>(labels.size());
                    labels.push_back(key);
                }
            }
    std::vector<std::vector<int>> faces;
    for (const auto& pf : pfs) {
        if (pf.is_empty()) continue;
        std::vector<int> face;
        for (int u = 0; u < pf.n(); ++u)
            if (pf.defined(u)) face.push_back(vid.at({u, pf.value(u)}));
        std::sort(face.begin(), face.end());
        faces.push_back(std::move(face));
    }
    std::sort(faces.begin(), faces.end());
    SimplicialComplex out(static_cast<int>(labels.size()), std::move(faces), true);
    out.vertex_labels = labels;
    return out;
}

} // namespace

std::vector<PartialFunction> suboplex_faces(const FunctionClass& c, const Limits& lim) {
    return suboplex_faces_impl(c, lim);
}

std::vector<PartialFunction> suboplex_faces(const PartialClass& c, const Limits& lim) {
    return suboplex_faces_impl(c, lim);
}

SimplicialComplex canonical_suboplex(const FunctionClass& c, const Limits& lim) {
    return suboplex_impl(c, lim);
}

SimplicialComplex canonical_suboplex(const PartialClass& c, const Limits& lim) {
    return suboplex_impl(c, lim);
}

} // namespace suboplex
