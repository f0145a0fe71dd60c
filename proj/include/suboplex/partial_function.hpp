#ifndef SUBOPLEX_PARTIAL_FUNCTION_HPP
#define SUBOPLEX_PARTIAL_FUNCTION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace suboplex {

/// A partial map [n] -> [m], stored as a fixed-width value vector with a
/// sentinel for undefined positions.  The canonical text form is the
/// dot-string ("..11"): one character per position, '.' for undefined.
/// The empty function (all undefined) plays the role of the bottom element
/// and is written "†" in prose.
class PartialFunction {
public:
    static constexpr std::int8_t kUndef = -1;

    PartialFunction() : n_(0), m_(2) {}
    PartialFunction(int n, int m); // the empty function over (n, m)
    PartialFunction(std::vector<std::int8_t> values, int m);

    static PartialFunction empty(int n, int m = 2) { return PartialFunction(n, m); }
    static PartialFunction from_string(const std::string& dots, int m = 2);
    // Single-point map u -> v.
    static PartialFunction point(int n, int m, int u, int v);

    int n() const { return n_; }
    int m() const { return m_; }
    bool defined(int u) const { return vals_[u] != kUndef; }
    int value(int u) const { return vals_[u]; }
    const std::vector<std::int8_t>& values() const { return vals_; }

    int dom_size() const;
    std::vector<int> domain() const;
    bool is_total() const { return dom_size() == n_; }
    bool is_empty() const { return dom_size() == 0; }

    // Largest common restriction: defined at u iff both are and agree.
    PartialFunction meet(const PartialFunction& other) const;
    // True iff *this agrees with pf on all of dom(pf).
    bool extends(const PartialFunction& pf) const;

    PartialFunction with(int u, int v) const;    // set position u to v
    PartialFunction without(int u) const;        // undefine position u
    // Undefine every position outside of `keep` (domain size unchanged).
    PartialFunction restrict_to(const std::vector<int>& keep) const;
    // Keep only the positions in `keep`, reindexed to [keep.size()].
    PartialFunction project_to(const std::vector<int>& keep) const;
    // Remove the positions in dom(base), reindexing the rest; requires
    // *this to extend base.
    PartialFunction minus(const PartialFunction& base) const;
    // Inverse of the reindexing: re-insert values at `positions` of an
    // n-sized ambient domain (positions lists where each local index maps).
    PartialFunction embed(int ambient_n, const std::vector<int>& positions) const;

    std::string to_string() const;

    // graph(pf) as a bitmask over [n]x[m], bit u*m+j; requires n*m <= 64.
    std::uint64_t graph_bits() const;
    // Complement of the graph in [n]x[m] (the monomial exponent of pf).
    std::uint64_t gamma_bits() const;

    bool operator==(const PartialFunction& o) const { return n_ == o.n_ && m_ == o.m_ && vals_ == o.vals_; }
    bool operator!=(const PartialFunction& o) const { return !(*this == o); }
    // Lexicographic on the value vector with undefined first; this matches
    // dot-string order because '.' < '0' in ASCII.
    bool operator<(const PartialFunction& o) const;

private:
    int n_, m_;
    std::vector<std::int8_t> vals_;
    void check_values() const;
};

struct PartialFunctionHash {
    std::size_t operator()(const PartialFunction& pf) const;
};

} // namespace suboplex

#endif
