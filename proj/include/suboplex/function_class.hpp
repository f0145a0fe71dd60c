#ifndef SUBOPLEX_FUNCTION_CLASS_HPP
#define SUBOPLEX_FUNCTION_CLASS_HPP

#include "suboplex/limits.hpp"
#include "suboplex/partial_function.hpp"
#include "suboplex/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace suboplex {

/// A finite set of total functions [n] -> [m], kept sorted and duplicate
/// free.  Values are immutable after construction; every operation returns
/// a fresh class.
class FunctionClass {
public:
    FunctionClass(int n, int m, std::vector<PartialFunction> members,
                  std::string provenance = "");

    int n() const { return n_; }
    int m() const { return m_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<PartialFunction>& members() const { return members_; }
    const std::string& provenance() const { return provenance_; }

    bool contains(const PartialFunction& f) const;
    // Members extending pf.
    std::vector<PartialFunction> extensions_of(const PartialFunction& pf) const;
    std::size_t count_extensions(const PartialFunction& pf) const;
    bool has_extension(const PartialFunction& pf) const;

    bool operator==(const FunctionClass& o) const {
        return n_ == o.n_ && m_ == o.m_ && members_ == o.members_;
    }

private:
    int n_, m_;
    std::vector<PartialFunction> members_;
    std::string provenance_;
};

/// A finite set of partial functions with fixed (n, m).  Raw membership may
/// contain comparable elements; the canonical-generator view (maximal
/// members) is what minimally generates the canonical ideal.
class PartialClass {
public:
    PartialClass(int n, int m, std::vector<PartialFunction> members,
                 std::string provenance = "");

    int n() const { return n_; }
    int m() const { return m_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<PartialFunction>& members() const { return members_; }
    const std::string& provenance() const { return provenance_; }

    std::vector<PartialFunction> maximal_members() const;
    std::vector<PartialFunction> extensions_of(const PartialFunction& pf) const;
    bool has_extension(const PartialFunction& pf) const;

private:
    int n_, m_;
    std::vector<PartialFunction> members_;
    std::string provenance_;
};

// ---------------------------------------------------------------------------
// Named constructors.  ClassSpec mirrors the JSON surface of the CLI.
// ---------------------------------------------------------------------------

struct ClassSpec {
    std::string kind; // complete|singleton|delta|wt|monconj|conj|linfun|nb|linthr|polythr|explicit
    int n = -1;
    int m = 2;
    int d = -1;
    int k = -1;
    int p = -1;
    std::optional<std::string> function;             // singleton / wt / nb base
    std::vector<std::string> functions;              // explicit
    std::vector<std::vector<Rat>> points;            // linthr
    std::optional<Limits> limits;                    // override size guards
};

FunctionClass build_class(const ClassSpec& spec);

FunctionClass complete_class(int n, int m = 2, const Limits& lim = global_limits());
FunctionClass singleton_class(const PartialFunction& f);
FunctionClass delta_class(int n, const Limits& lim = global_limits());
// Functions at Hamming distance exactly k from f (f defaults to all-0).
FunctionClass wt_class(int n, int k, std::optional<PartialFunction> f = std::nullopt,
                       const Limits& lim = global_limits());
FunctionClass monconj_class(int d, const Limits& lim = global_limits());
FunctionClass conj_class(int d, const Limits& lim = global_limits());
FunctionClass linfun_class(int p, int d, const Limits& lim = global_limits());
// Functions within Hamming distance at most k of f (f defaults to all-0).
FunctionClass nb_class(int n, int k, std::optional<PartialFunction> f = std::nullopt,
                       const Limits& lim = global_limits());
FunctionClass explicit_class(int n, int m, const std::vector<std::string>& dot_strings,
                             const Limits& lim = global_limits());

// Bit tuple of input index u, most significant bit first ([2^d] ~ [2]^d).
std::vector<int> index_bits(int u, int d);
int bits_index(const std::vector<int>& bits);

// The monotone conjunction over the variable set T, as a total function on
// [2^d]; the partial version follows the face-label closed form.
PartialFunction monconj_lambda_total(int d, const std::vector<int>& vars);

// Named boolean targets over [2^d] (bit convention: 0 <-> sign +1).
PartialFunction parity_function(int d);
PartialFunction indicator_of_ones(int d); // ind_1: u -> [u == 1...1]
PartialFunction majority_function(int d); // odd d
PartialFunction all_zero_function(int n); // o (sign +1 everywhere)
PartialFunction all_one_function(int n);

// ---------------------------------------------------------------------------
// Combinators (section "Combining Classes").
// ---------------------------------------------------------------------------

struct FilteredClass {
    FunctionClass cls;
    std::vector<int> kept_positions; // input-position reindexing map
};

// C filtered by pf: members extending pf, with dom(pf) deleted.
FilteredClass filter_class(const FunctionClass& c, const PartialFunction& pf);
PartialClass filter_class(const PartialClass& c, const PartialFunction& pf);

// C restricted to the input subset U (reindexed, deduplicated).
FunctionClass restrict_class(const FunctionClass& c, const std::vector<int>& u);

FunctionClass union_class(const FunctionClass& c, const FunctionClass& d);
FunctionClass with_function(const FunctionClass& c, const PartialFunction& f);

// Cartesian intersection C ⊠ D = {f ∧ g}; a partial class.
PartialClass cartesian_intersection(const FunctionClass& c, const FunctionClass& d);
PartialClass boxtimes_target(const FunctionClass& c, const PartialFunction& f); // C ⊠ {f}

// Cartesian union C ⨿ D on the disjoint union of domains and codomains.
FunctionClass cartesian_union(const FunctionClass& c, const FunctionClass& d);

// All pairs {f, g} whose joint extension set in C is exactly {f, g}.
std::vector<std::pair<PartialFunction, PartialFunction>> neighbors(const FunctionClass& c);

} // namespace suboplex

#endif
