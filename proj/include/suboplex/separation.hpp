#ifndef SUBOPLEX_SEPARATION_HPP
#define SUBOPLEX_SEPARATION_HPP

#include "suboplex/algebra.hpp"
#include "suboplex/betti.hpp"
#include "suboplex/function_class.hpp"
#include "suboplex/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace suboplex {

/// A thresholded-linear class together with the data the threshold-specific
/// criteria need: the subspace L of value vectors and (when it came from a
/// point configuration) the underlying points.
struct ThresholdContext {
    FunctionClass cls;
    LinearSubspace space;
    std::optional<PointConfig> points;

    static ThresholdContext linthr(const PointConfig& u, const Limits& lim = global_limits());
    // k = 0 is the class of the two constant functions.
    static ThresholdContext polythr(int d, int k, const Limits& lim = global_limits());
    static ThresholdContext from_subspace(const LinearSubspace& l, const Limits& lim = global_limits());
};

struct BettiDiffEntry {
    int i;
    PartialFunction pf;
    long long before, after;
};

struct SeparationReport {
    PartialFunction target;
    std::string class_descriptor;
    bool member = false;
    std::vector<BettiDiffEntry> diff; // entries changed from beta(C) to beta(C u {f})
    BettiTable base, extended, boxtimes;
};

/// Tables of C, C u {f} and C boxtimes {f}; all changed (i, pf) entries;
/// the Mayer-Vietoris alternating identity is asserted along the way.
SeparationReport compare_betti(const FunctionClass& c, const PartialFunction& f,
                               const BettiOptions& opt = {});

/// The six equivalent membership conditions on C boxtimes {f} for a full
/// class; unanimity is asserted and the common verdict returned.
/// A non-full class raises precondition_error.
bool membership_equivalences(const FunctionClass& c, const PartialFunction& f,
                             const BettiOptions& opt = {});
bool is_full(const FunctionClass& c);

/// Weak representability of f by the context's function space: homological
/// verdict (beta_{*,empty}(C boxtimes f) = 0) and the exact LP verdict
/// (phi in L, phi f >= 0 pointwise, <phi, f> >= 1) must agree.
bool weak_representation_test(const ThresholdContext& ctx, const PartialFunction& f,
                              const BettiOptions& opt = {});

/// Searches for a local maximum g != f: every member at Hamming distance 1
/// from g differs from f at the flipped input.  When found, asserts
/// beta_{i, f meet g}(C boxtimes f) = [i = 0] and returns g (the
/// lexicographically least witness).
std::optional<PartialFunction> maximal_principle(const FunctionClass& c, const PartialFunction& f,
                                                 const BettiOptions& opt = {});

/// Threshold degree of a symmetric function on {-1,1}^d: the number of sign
/// changes of the level function.  For d <= 4 both directions are verified
/// (degree-r realizability by LP, no weak representation at degree r-1).
int thrdeg_symmetric(const PartialFunction& f, const BettiOptions& opt = {});
bool is_symmetric(const PartialFunction& f);

/// Codimension-1 stability: for the projection g = Pi(f, L) of rank s,
/// every pf with beta_{l-s-2,pf} != 0 and |dom(pf minus g)| > 1 has rank 1
/// and survives single-input flips of f as stated by the theorem.
bool codim1_stability_check(const ThresholdContext& ctx, const PartialFunction& f,
                            const BettiOptions& opt = {});

} // namespace suboplex

#endif
