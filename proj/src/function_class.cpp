#include "suboplex/function_class.hpp"

#include "suboplex/errors.hpp"

#include <algorithm>
#include <set>

namespace suboplex {

Limits& global_limits() {
    static Limits lim;
    return lim;
}

namespace {

void check_class_size(std::size_t count, const Limits& lim, const std::string& who) {
    if (count > lim.max_class)
        throw size_limit_error(who + ": class size " + std::to_string(count) +
                               " exceeds limit " + std::to_string(lim.max_class));
}

void check_n(int n, const Limits& lim, const std::string& who) {
    if (n < 1) throw precondition_error(who + ": need n >= 1");
    if (n > lim.max_n)
        throw size_limit_error(who + ": n = " + std::to_string(n) + " exceeds limit " +
                               std::to_string(lim.max_n));
}

std::vector<PartialFunction> sorted_unique(std::vector<PartialFunction> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

FunctionClass::FunctionClass(int n, int m, std::vector<PartialFunction> members,
                             std::string provenance)
    : n_(n), m_(m), members_(sorted_unique(std::move(members))), provenance_(std::move(provenance)) {
    for (const auto& f : members_) {
        if (f.n() != n_ || f.m() != m_) throw shape_error("FunctionClass: member with mismatched (n, m)");
        if (!f.is_total()) throw shape_error("FunctionClass: member " + f.to_string() + " is not total");
    }
}

bool FunctionClass::contains(const PartialFunction& f) const {
    return std::binary_search(members_.begin(), members_.end(), f);
}

std::vector<PartialFunction> FunctionClass::extensions_of(const PartialFunction& pf) const {
    std::vector<PartialFunction> out;
    for (const auto& f : members_)
        if (f.extends(pf)) out.push_back(f);
    return out;
}

std::size_t FunctionClass::count_extensions(const PartialFunction& pf) const {
    std::size_t k = 0;
    for (const auto& f : members_) k += f.extends(pf);
    return k;
}

bool FunctionClass::has_extension(const PartialFunction& pf) const {
    for (const auto& f : members_)
        if (f.extends(pf)) return true;
    return false;
}

PartialClass::PartialClass(int n, int m, std::vector<PartialFunction> members,
                           std::string provenance)
    : n_(n), m_(m), members_(sorted_unique(std::move(members))), provenance_(std::move(provenance)) {
    for (const auto& f : members_)
        if (f.n() != n_ || f.m() != m_) throw shape_error("PartialClass: member with mismatched (n, m)");
}

std::vector<PartialFunction> PartialClass::maximal_members() const {
    std::vector<PartialFunction> out;
    for (const auto& f : members_) {
        bool maximal = true;
        for (const auto& g : members_)
            if (g != f && g.extends(f)) { maximal = false; break; }
        if (maximal) out.push_back(f);
    }
    return out;
}

std::vector<PartialFunction> PartialClass::extensions_of(const PartialFunction& pf) const {
    std::vector<PartialFunction> out;
    for (const auto& f : members_)
        if (f.extends(pf)) out.push_back(f);
    return out;
}

bool PartialClass::has_extension(const PartialFunction& pf) const {
    for (const auto& f : members_)
        if (f.extends(pf)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Index <-> bit/digit tuples, MSB first.
// ---------------------------------------------------------------------------

std::vector<int> index_bits(int u, int d) {
    std::vector<int> bits(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) bits[j] = (u >> (d - 1 - j)) & 1;
    return bits;
}

int bits_index(const std::vector<int>& bits) {
    int u = 0;
    for (int b : bits) u = (u << 1) | b;
    return u;
}

// ---------------------------------------------------------------------------
// Constructors.
// ---------------------------------------------------------------------------

FunctionClass complete_class(int n, int m, const Limits& lim) {
    check_n(n, lim, "complete");
    if (m < 2) throw precondition_error("complete: need m >= 2");
    double count = 1;
    for (int i = 0; i < n; ++i) count *= m;
    if (count > double(lim.max_class))
        throw size_limit_error("complete: m^n exceeds class size limit");
    std::vector<PartialFunction> members;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n), 0);
    while (true) {
        members.emplace_back(vals, m);
        int pos = n - 1;
        while (pos >= 0 && vals[pos] == m - 1) vals[pos--] = 0;
        if (pos < 0) break;
        ++vals[pos];
    }
    return FunctionClass(n, m, std::move(members),
                         "complete(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")");
}

FunctionClass singleton_class(const PartialFunction& f) {
    if (!f.is_total()) throw precondition_error("singleton: function must be total");
    return FunctionClass(f.n(), f.m(), {f}, "singleton(" + f.to_string() + ")");
}

FunctionClass delta_class(int n, const Limits& lim) {
    check_n(n, lim, "delta");
    std::vector<PartialFunction> members;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int8_t> vals(static_cast<std::size_t>(n), 0);
        vals[i] = 1;
        members.emplace_back(std::move(vals), 2);
    }
    return FunctionClass(n, 2, std::move(members), "delta(n=" + std::to_string(n) + ")");
}

namespace {

FunctionClass hamming_ball_class(int n, int k, std::optional<PartialFunction> f,
                                 const Limits& lim, bool exact, const std::string& who) {
    check_n(n, lim, who);
    PartialFunction base = f.value_or(all_zero_function(n));
    if (base.n() != n || base.m() != 2 || !base.is_total())
        throw shape_error(who + ": base function must be total over (n, 2)");
    if (k < 0 || k > n) throw precondition_error(who + ": need 0 <= k <= n");
    std::vector<PartialFunction> members;
    // Enumerate flip sets of size exactly/at most k.
    std::vector<int> subset;
    auto emit = [&]() {
        PartialFunction g = base;
        for (int u : subset) g = g.with(u, 1 - g.value(u));
        members.push_back(g);
    };
    std::function<void(int)> rec = [&](int start) {
        if (!exact || static_cast<int>(subset.size()) == k) emit();
        if (static_cast<int>(subset.size()) == k) return;
        for (int i = start; i < n; ++i) {
            subset.push_back(i);
            rec(i + 1);
            subset.pop_back();
        }
        check_class_size(members.size(), lim, who);
    };
    rec(0);
    std::string prov = who + "(n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                       ",f=" + base.to_string() + ")";
    return FunctionClass(n, 2, std::move(members), prov);
}

} // namespace

FunctionClass wt_class(int n, int k, std::optional<PartialFunction> f, const Limits& lim) {
    return hamming_ball_class(n, k, std::move(f), lim, /*exact=*/true, "wt");
}

FunctionClass nb_class(int n, int k, std::optional<PartialFunction> f, const Limits& lim) {
    return hamming_ball_class(n, k, std::move(f), lim, /*exact=*/false, "nb");
}

PartialFunction monconj_lambda_total(int d, const std::vector<int>& vars) {
    int n = 1 << d;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        auto bits = index_bits(u, d);
        bool all = true;
        for (int i : vars)
            if (bits[i] == 0) { all = false; break; }
        vals[u] = all ? 1 : 0;
    }
    return PartialFunction(std::move(vals), 2);
}

FunctionClass monconj_class(int d, const Limits& lim) {
    if (d < 1) throw precondition_error("monconj: need d >= 1");
    check_n(1 << d, lim, "monconj");
    std::vector<PartialFunction> members;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<int> vars;
        for (int i = 0; i < d; ++i)
            if (mask & (1 << i)) vars.push_back(i);
        members.push_back(monconj_lambda_total(d, vars));
    }
    return FunctionClass(1 << d, 2, std::move(members), "monconj(d=" + std::to_string(d) + ")");
}

FunctionClass conj_class(int d, const Limits& lim) {
    if (d < 1) throw precondition_error("conj: need d >= 1");
    int n = 1 << d;
    check_n(n, lim, "conj");
    std::vector<PartialFunction> members;
    // Literal assignment per variable: 0 absent, 1 positive, 2 negative.
    std::vector<int> lit(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<std::int8_t> vals(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u) {
            auto bits = index_bits(u, d);
            bool sat = true;
            for (int i = 0; i < d; ++i) {
                if (lit[i] == 1 && bits[i] != 1) sat = false;
                if (lit[i] == 2 && bits[i] != 0) sat = false;
            }
            vals[u] = sat ? 1 : 0;
        }
        members.emplace_back(std::move(vals), 2);
        int pos = d - 1;
        while (pos >= 0 && lit[pos] == 2) lit[pos--] = 0;
        if (pos < 0) break;
        ++lit[pos];
    }
    // The null function ⊥ = l1 ∧ ¬l1, a distinguished member.
    members.push_back(all_zero_function(n));
    return FunctionClass(n, 2, std::move(members), "conj(d=" + std::to_string(d) + ")");
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

} // namespace

FunctionClass linfun_class(int p, int d, const Limits& lim) {
    if (!is_prime(p)) throw precondition_error("linfun: p must be prime");
    if (d < 1) throw precondition_error("linfun: need d >= 1");
    int n = 1;
    for (int i = 0; i < d; ++i) {
        n *= p;
        check_n(n, lim, "linfun");
    }
    std::vector<PartialFunction> members;
    std::vector<int> coeff(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<std::int8_t> vals(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u) {
            int x = u, acc = 0;
            for (int j = d - 1; j >= 0; --j) {
                acc = (acc + coeff[j] * (x % p)) % p;
                x /= p;
            }
            vals[u] = static_cast<std::int8_t>(acc);
        }
        members.emplace_back(std::move(vals), p);
        int pos = d - 1;
        while (pos >= 0 && coeff[pos] == p - 1) coeff[pos--] = 0;
        if (pos < 0) break;
        ++coeff[pos];
    }
    return FunctionClass(n, p, std::move(members),
                         "linfun(p=" + std::to_string(p) + ",d=" + std::to_string(d) + ")");
}

FunctionClass explicit_class(int n, int m, const std::vector<std::string>& dot_strings,
                             const Limits& lim) {
    check_n(n, lim, "explicit");
    check_class_size(dot_strings.size(), lim, "explicit");
    std::vector<PartialFunction> members;
    std::set<std::string> seen;
    for (const auto& s : dot_strings) {
        if (!seen.insert(s).second) throw shape_error("explicit: duplicate function " + s);
        PartialFunction f = PartialFunction::from_string(s, m);
        if (f.n() != n) throw shape_error("explicit: function " + s + " has wrong domain size");
        if (!f.is_total()) throw shape_error("explicit: function " + s + " is not total");
        members.push_back(std::move(f));
    }
    return FunctionClass(n, m, std::move(members), "explicit");
}

PartialFunction parity_function(int d) {
    int n = 1 << d;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) vals[u] = static_cast<std::int8_t>(__builtin_popcount(unsigned(u)) & 1);
    return PartialFunction(std::move(vals), 2);
}

PartialFunction indicator_of_ones(int d) {
    int n = 1 << d;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n), 0);
    vals[n - 1] = 1;
    return PartialFunction(std::move(vals), 2);
}

PartialFunction majority_function(int d) {
    if (d % 2 == 0) throw precondition_error("majority: need odd d");
    int n = 1 << d;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        vals[u] = static_cast<std::int8_t>(__builtin_popcount(unsigned(u)) > d / 2 ? 1 : 0);
    return PartialFunction(std::move(vals), 2);
}

PartialFunction all_zero_function(int n) {
    return PartialFunction(std::vector<std::int8_t>(static_cast<std::size_t>(n), 0), 2);
}

PartialFunction all_one_function(int n) {
    return PartialFunction(std::vector<std::int8_t>(static_cast<std::size_t>(n), 1), 2);
}

// ---------------------------------------------------------------------------
// Combinators.
// ---------------------------------------------------------------------------

FilteredClass filter_class(const FunctionClass& c, const PartialFunction& pf) {
    if (pf.n() != c.n() || pf.m() != c.m()) throw shape_error("filter_class: mismatched (n, m)");
    std::vector<int> kept;
    for (int u = 0; u < c.n(); ++u)
        if (!pf.defined(u)) kept.push_back(u);
    std::vector<PartialFunction> members;
    for (const auto& f : c.members())
        if (f.extends(pf)) members.push_back(f.minus(pf));
    FunctionClass out(static_cast<int>(kept.size()), c.m(), std::move(members),
                      c.provenance().empty() ? "" : c.provenance() + "|" + pf.to_string());
    return FilteredClass{std::move(out), std::move(kept)};
}

PartialClass filter_class(const PartialClass& c, const PartialFunction& pf) {
    if (pf.n() != c.n() || pf.m() != c.m()) throw shape_error("filter_class: mismatched (n, m)");
    std::vector<int> kept;
    for (int u = 0; u < c.n(); ++u)
        if (!pf.defined(u)) kept.push_back(u);
    std::vector<PartialFunction> members;
    for (const auto& f : c.members())
        if (f.extends(pf)) members.push_back(f.minus(pf));
    return PartialClass(static_cast<int>(kept.size()), c.m(), std::move(members));
}

FunctionClass restrict_class(const FunctionClass& c, const std::vector<int>& u) {
    for (int i : u)
        if (i < 0 || i >= c.n()) throw shape_error("restrict_class: position out of range");
    std::vector<PartialFunction> members;
    for (const auto& f : c.members()) members.push_back(f.project_to(u));
    return FunctionClass(static_cast<int>(u.size()), c.m(), std::move(members));
}

FunctionClass union_class(const FunctionClass& c, const FunctionClass& d) {
    if (c.n() != d.n() || c.m() != d.m()) throw shape_error("union_class: mismatched (n, m)");
    std::vector<PartialFunction> members = c.members();
    members.insert(members.end(), d.members().begin(), d.members().end());
    return FunctionClass(c.n(), c.m(), std::move(members));
}

FunctionClass with_function(const FunctionClass& c, const PartialFunction& f) {
    return union_class(c, singleton_class(f));
}

PartialClass cartesian_intersection(const FunctionClass& c, const FunctionClass& d) {
    if (c.n() != d.n() || c.m() != d.m()) throw shape_error("cartesian_intersection: mismatched (n, m)");
    std::vector<PartialFunction> members;
    for (const auto& f : c.members())
        for (const auto& g : d.members()) members.push_back(f.meet(g));
    return PartialClass(c.n(), c.m(), std::move(members));
}

PartialClass boxtimes_target(const FunctionClass& c, const PartialFunction& f) {
    return cartesian_intersection(c, singleton_class(f));
}

FunctionClass cartesian_union(const FunctionClass& c, const FunctionClass& d) {
    if (c.empty() || d.empty()) throw precondition_error("cartesian_union: factors must be nonempty");
    int n = c.n() + d.n(), m = c.m() + d.m();
    std::vector<PartialFunction> members;
    for (const auto& f : c.members())
        for (const auto& g : d.members()) {
            std::vector<std::int8_t> vals;
            vals.reserve(static_cast<std::size_t>(n));
            for (int u = 0; u < c.n(); ++u) vals.push_back(static_cast<std::int8_t>(f.value(u)));
            for (int u = 0; u < d.n(); ++u) vals.push_back(static_cast<std::int8_t>(g.value(u) + c.m()));
            members.emplace_back(std::move(vals), m);
        }
    return FunctionClass(n, m, std::move(members));
}

std::vector<std::pair<PartialFunction, PartialFunction>> neighbors(const FunctionClass& c) {
    std::vector<std::pair<PartialFunction, PartialFunction>> out;
    const auto& mem = c.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
        for (std::size_t j = i + 1; j < mem.size(); ++j)
            if (c.count_extensions(mem[i].meet(mem[j])) == 2) out.emplace_back(mem[i], mem[j]);
    return out;
}

} // namespace suboplex
