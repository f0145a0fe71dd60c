#ifndef SUBOPLEX_BETTI_HPP
#define SUBOPLEX_BETTI_HPP

#include "suboplex/function_class.hpp"
#include "suboplex/simplicial.hpp"

#include <map>
#include <string>
#include <vector>

namespace suboplex {

/// Multigraded Betti numbers of a class, keyed by (homological degree i,
/// partial function).  Zero entries are omitted; every key has at least one
/// extension in the analyzed class.
class BettiTable {
public:
    using Key = std::pair<int, PartialFunction>;

    BettiTable() : field_(Field::Rational) {}
    explicit BettiTable(Field f) : field_(f) {}

    Field field() const { return field_; }
    const std::map<Key, long long>& entries() const { return entries_; }

    long long rank(int i, const PartialFunction& pf) const;
    void set(int i, const PartialFunction& pf, long long rank);

    // Largest i with a nonzero entry; -1 when the table is empty.
    int max_degree() const;
    // At most one nonzero i per partial function.
    bool is_pure() const;
    // Entries at a fixed pf, as (i, rank) pairs.
    std::vector<std::pair<int, long long>> column(const PartialFunction& pf) const;

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

private:
    Field field_;
    std::map<Key, long long> entries_;
};

struct BettiOptions {
    Field field = Field::Rational;
    int threads = 1;
    bool euler_check = true; // verify column sums against filtered face counts
    Limits limits = global_limits();
};

/// beta_{i,pf}(C) = dim H~_{i-1}(S_{C filtered by pf}), over all faces pf
/// of the canonical suboplex (dual Hochster formula).
BettiTable betti_table(const FunctionClass& c, const BettiOptions& opt = {});
BettiTable betti_table(const PartialClass& c, const BettiOptions& opt = {});

/// Stanley-Reisner side: beta_{i,sigma}(I_C) for a squarefree degree sigma,
/// a set of (input, value) pairs; computed as dim H~_{|sigma|-i-2}(S_C
/// restricted to sigma).  Returns ranks indexed by i = 0..|sigma|-1.
std::vector<long long> sr_betti(const FunctionClass& c, const std::vector<std::pair<int, int>>& sigma,
                                Field field = Field::Rational);

int homological_dimension(const BettiTable& t);
int homological_dimension(const FunctionClass& c, const BettiOptions& opt = {});
// Regularity-duality form: max over entries of |Gamma(pf)| - i.
int sr_dimension(const BettiTable& t, int n, int m);
int sr_dimension(const FunctionClass& c, const BettiOptions& opt = {});
bool has_pure_betti(const FunctionClass& c, const BettiOptions& opt = {});

/// Verifies, for every pf over [n-1], the alternating-rank identity implied
/// by the restriction long exact sequence:
///   sum_i (-1)^i [ b_{i,pf}(C) + b_{i,pf0}(C) + b_{i,pf1}(C)
///                  - b_{i,pf}(C restricted to [n-1]) ] = 0.
/// When all members share one value at position n-1, the degenerate
/// identification C filtered at (n-1,b) = C restricted to [n-1] is checked
/// instead.
bool restriction_sequence_check(const FunctionClass& c, const BettiOptions& opt = {});

/// Alternating Mayer-Vietoris identity for union vs Cartesian intersection:
///   sum_i (-1)^i [ b_{i,pf}(C) + b_{i,pf}(D) - b_{i,pf}(C u D) - b_{i,pf}(C x D) ] = 0
/// for every pf; checked over all keys that occur in any of the four tables.
bool mayer_vietoris_check(const FunctionClass& c, const FunctionClass& d,
                          const BettiOptions& opt = {});

} // namespace suboplex

#endif
