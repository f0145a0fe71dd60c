#include "suboplex/betti.hpp"

#include "suboplex/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

namespace suboplex {

long long BettiTable::rank(int i, const PartialFunction& pf) const {
    auto it = entries_.find({i, pf});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, const PartialFunction& pf, long long rank) {
    if (rank < 0) throw discrepancy_error("BettiTable: negative rank");
    if (rank == 0) return;
    entries_[{i, pf}] = rank;
}

int BettiTable::max_degree() const {
    int d = -1;
    for (const auto& [key, rank] : entries_) d = std::max(d, key.first);
    return d;
}

bool BettiTable::is_pure() const {
    std::map<PartialFunction, int> seen;
    for (const auto& [key, rank] : entries_) {
        auto it = seen.find(key.second);
        if (it != seen.end() && it->second != key.first) return false;
        seen.emplace(key.second, key.first);
    }
    return true;
}

std::vector<std::pair<int, long long>> BettiTable::column(const PartialFunction& pf) const {
    std::vector<std::pair<int, long long>> out;
    for (const auto& [key, rank] : entries_)
        if (key.second == pf) out.emplace_back(key.first, rank);
    return out;
}

namespace {

FunctionClass filtered_view(const FunctionClass& c, const PartialFunction& pf) {
    return filter_class(c, pf).cls;
}

PartialClass filtered_view(const PartialClass& c, const PartialFunction& pf) {
    return filter_class(c, pf);
}

template <class ClassT>
std::string class_cache_key(const ClassT& c) {
    std::string key = std::to_string(c.n()) + ":" + std::to_string(c.m());
    for (const auto& f : c.members()) {
        key.push_back('|');
        key += f.to_string();
    }
    return key;
}

struct HomologyMemo {
    std::unordered_map<std::string, std::vector<long long>> cache;
    std::mutex mu;
};

// One column of the table: reduced homology of the filtered suboplex.
template <class ClassT>
std::vector<long long> column_ranks(const ClassT& c, const PartialFunction& pf,
                                    const BettiOptions& opt, HomologyMemo& memo) {
    auto fc = filtered_view(c, pf);
    if (fc.empty()) return {};
    std::string key = class_cache_key(fc);
    {
        std::lock_guard<std::mutex> g(memo.mu);
        auto it = memo.cache.find(key);
        if (it != memo.cache.end()) return it->second;
    }
    SimplicialComplex s = canonical_suboplex(fc, opt.limits);
    auto h = reduced_homology(s, opt.field);
    if (opt.euler_check) {
        long long alt = 0;
        for (std::size_t j = 0; j < h.size(); ++j) alt += (j % 2 == 0 ? 1 : -1) * h[j];
        // sum_j (-1)^j rank H~_{j-1} = -chi~ of the filtered suboplex
        if (alt != -s.reduced_euler())
            throw discrepancy_error("betti_table: Euler characteristic mismatch at pf " + pf.to_string());
    }
    std::lock_guard<std::mutex> g(memo.mu);
    memo.cache.emplace(std::move(key), h);
    return h;
}

template <class ClassT>
BettiTable betti_table_impl(const ClassT& c, const BettiOptions& opt) {
    if (c.empty()) throw precondition_error("betti_table: the empty class is not analyzable");
    auto pfs = suboplex_faces(c, opt.limits);
    std::vector<std::vector<long long>> cols(pfs.size());
    HomologyMemo memo;
    int threads = std::max(1, opt.threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < pfs.size(); ++i) cols[i] = column_ranks(c, pfs[i], opt, memo);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::exception_ptr fail;
        std::mutex fail_mu;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                for (std::size_t i = next.fetch_add(1); i < pfs.size(); i = next.fetch_add(1)) {
                    try {
                        cols[i] = column_ranks(c, pfs[i], opt, memo);
                    } catch (...) {
                        std::lock_guard<std::mutex> g(fail_mu);
                        if (!fail) fail = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (fail) std::rethrow_exception(fail);
    }
    BettiTable table(opt.field);
    for (std::size_t i = 0; i < pfs.size(); ++i)
        for (std::size_t j = 0; j < cols[i].size(); ++j)
            if (cols[i][j] != 0)
                table.set(static_cast<int>(j), pfs[i], cols[i][j]); // beta_i = rank H~_{i-1}
    return table;
}

} // namespace

BettiTable betti_table(const FunctionClass& c, const BettiOptions& opt) {
    return betti_table_impl(c, opt);
}

BettiTable betti_table(const PartialClass& c, const BettiOptions& opt) {
    return betti_table_impl(c, opt);
}

std::vector<long long> sr_betti(const FunctionClass& c,
                                const std::vector<std::pair<int, int>>& sigma, Field field) {
    SimplicialComplex s = canonical_suboplex(c);
    // sigma maps to vertex ids; pairs absent from the complex restrict it further
    std::vector<int> ids;
    for (const auto& pv : sigma)
        for (int v = 0; v < s.num_vertices(); ++v)
            if (s.vertex_labels[static_cast<std::size_t>(v)] == pv) ids.push_back(v);
    SimplicialComplex r = restrict_complex(s, ids);
    auto h = reduced_homology(r, field);
    const int size = static_cast<int>(sigma.size());
    std::vector<long long> out(static_cast<std::size_t>(std::max(0, size)), 0);
    for (int i = 0; i < size; ++i) {
        int idx = size - i - 1; // degree |sigma|-i-2, shifted by one for the H~_{-1} slot
        if (idx >= 0 && idx < static_cast<int>(h.size()))
            out[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(idx)];
    }
    return out;
}

int homological_dimension(const BettiTable& t) { return std::max(0, t.max_degree()); }

int homological_dimension(const FunctionClass& c, const BettiOptions& opt) {
    return homological_dimension(betti_table(c, opt));
}

int sr_dimension(const BettiTable& t, int n, int m) {
    int best = 0;
    for (const auto& [key, rank] : t.entries()) {
        int gamma = n * m - key.second.dom_size();
        best = std::max(best, gamma - key.first);
    }
    return best;
}

int sr_dimension(const FunctionClass& c, const BettiOptions& opt) {
    return sr_dimension(betti_table(c, opt), c.n(), c.m());
}

bool has_pure_betti(const FunctionClass& c, const BettiOptions& opt) {
    return betti_table(c, opt).is_pure();
}

namespace {

long long alternating_column_sum(const BettiTable& t, const PartialFunction& pf) {
    long long acc = 0;
    for (const auto& [i, r] : t.column(pf)) acc += ((i % 2 == 0) ? 1 : -1) * r;
    return acc;
}

} // namespace

bool restriction_sequence_check(const FunctionClass& c, const BettiOptions& opt) {
    if (c.n() < 2) throw precondition_error("restriction_sequence_check: need n >= 2");
    if (c.empty()) throw precondition_error("restriction_sequence_check: empty class");
    const int last = c.n() - 1;
    std::vector<int> front;
    for (int u = 0; u < last; ++u) front.push_back(u);
    FunctionClass restricted = restrict_class(c, front);

    std::set<int> values;
    for (const auto& f : c.members()) values.insert(f.value(last));
    if (values.size() == 1) {
        // Degenerate case: filtering at the forced value is the restriction.
        int b = *values.begin();
        auto filtered = filter_class(c, PartialFunction::point(c.n(), c.m(), last, b));
        return betti_table(filtered.cls, opt).entries() == betti_table(restricted, opt).entries();
    }

    BettiTable tc = betti_table(c, opt);
    BettiTable tr = betti_table(restricted, opt);
    std::set<PartialFunction> keys; // pf over [n-1], as PFs on [n] undefined at last
    for (const auto& [key, r] : tc.entries()) keys.insert(key.second.without(last));
    for (const auto& [key, r] : tr.entries()) keys.insert(key.second.embed(c.n(), front));
    for (const auto& pf : keys) {
        long long acc = alternating_column_sum(tc, pf);
        for (int b = 0; b < c.m(); ++b) acc += alternating_column_sum(tc, pf.with(last, b));
        acc -= alternating_column_sum(tr, pf.project_to(front));
        if (acc != 0) return false;
    }
    return true;
}

bool mayer_vietoris_check(const FunctionClass& c, const FunctionClass& d, const BettiOptions& opt) {
    FunctionClass u = union_class(c, d);
    PartialClass x = cartesian_intersection(c, d);
    BettiTable tc = betti_table(c, opt);
    BettiTable td = betti_table(d, opt);
    BettiTable tu = betti_table(u, opt);
    BettiTable tx = betti_table(x, opt);
    std::set<PartialFunction> keys;
    for (const auto* t : {&tc, &td, &tu, &tx})
        for (const auto& [key, r] : t->entries()) keys.insert(key.second);
    for (const auto& pf : keys) {
        long long acc = alternating_column_sum(tc, pf) + alternating_column_sum(td, pf) -
                        alternating_column_sum(tu, pf) - alternating_column_sum(tx, pf);
        if (acc != 0) return false;
    }
    return true;
}

} // namespace suboplex
