#ifndef SUBOPLEX_ALGEBRA_HPP
#define SUBOPLEX_ALGEBRA_HPP

#include "suboplex/betti.hpp"
#include "suboplex/function_class.hpp"
#include "suboplex/resolution.hpp"

#include <map>
#include <optional>
#include <vector>

namespace suboplex {

// ---------------------------------------------------------------------------
// Squarefree monomials over the variables x_{u,j}.
// ---------------------------------------------------------------------------

enum class MonomialRole { Functional, Extenture, CanonicalGenerator };

struct Monomial {
    std::vector<std::pair<int, int>> vars; // sorted (input, value) pairs
    MonomialRole role;
    bool operator==(const Monomial& o) const { return vars == o.vars; }
    bool operator<(const Monomial& o) const { return vars < o.vars; }
};

struct MonomialSet {
    int n = 0, m = 0;
    std::vector<Monomial> monomials; // sorted
};

/// Minimal nonrealizable samples: pf with no extension in C whose proper
/// restrictions all have extensions.  Breadth-first by |dom| with pruning.
std::vector<PartialFunction> extentures(const FunctionClass& c);

/// Minimal generators of the Stanley-Reisner ideal: extenture graphs plus
/// the functional monomials x_{u,i}x_{u,j} not absorbed by a point extenture.
MonomialSet sr_generators(const FunctionClass& c);
/// Minimal generators of the canonical ideal: {Gamma(f) : f in C} (maximal
/// members for a partial class).
MonomialSet canonical_generators(const FunctionClass& c);
MonomialSet canonical_generators(const PartialClass& c);

/// Characterization of Stanley-Reisner ideals of total classes: given an
/// antichain F of candidate extentures, decides whether the ideal generated
/// by their graphs (plus functional monomials) is I_C for some total class.
/// Equivalent to condition (*): every unblocked partial function extends to
/// an unblocked total one.
bool is_class_ideal(const std::vector<PartialFunction>& f, int n, int m);

// ---------------------------------------------------------------------------
// VC theory and shattering.
// ---------------------------------------------------------------------------

bool shatters_direct(const FunctionClass& c, const std::vector<int>& u);

struct ShatterChecks {
    bool direct;           // C restricted to U is complete
    bool collapsed_ideal;  // x^U not in the collapsed Stanley-Reisner ideal
    bool betti_extension;  // the degree-|U| Betti-extension criterion
    bool sr_betti;         // beta_{|U|-1, U x [2]}(I_C) != 0
};

/// All four criteria evaluated; disagreement raises discrepancy_error.
bool shatters(const FunctionClass& c, const std::vector<int>& u,
              const BettiOptions& opt = {});
ShatterChecks shatter_checks(const FunctionClass& c, const std::vector<int>& u,
                             const BettiOptions& opt = {});

int vc_dimension(const FunctionClass& c);
/// Computed directly and via min extenture size - 1; must agree.
int vc_radius(const FunctionClass& c);

/// Complex on [n] whose faces are the shattered subsets.
SimplicialComplex shatter_complex(const FunctionClass& c);

// ---------------------------------------------------------------------------
// Cohen-Macaulayness.
// ---------------------------------------------------------------------------

struct CmClassResult {
    bool is_cm;
    std::optional<LabeledComplex> cublex; // canonical cublex resolution when CM
};

/// Reisner criterion on the Betti table: nonzero only at i = n - |dom pf|.
/// When CM, the canonical cublex (cells = pf whose every total extension is
/// a member) is returned.
CmClassResult is_cm_class(const FunctionClass& c, const BettiOptions& opt = {});

/// The canonical ideal is Cohen-Macaulay iff the neighbor graph of every
/// extension set C_{>= pf} is a tree.
bool is_cm_canonical(const FunctionClass& c);

// ---------------------------------------------------------------------------
// Euler characteristic and approximation hardness.
// ---------------------------------------------------------------------------

/// chi_C: coefficient at pf equals sum_i (-1)^i beta_{i,pf}; cross-checked
/// against the filtered-suboplex face-count Euler characteristic.
struct EulerPolynomial {
    std::map<PartialFunction, long long> coefficients; // zero entries omitted
};

EulerPolynomial euler_characteristic(const FunctionClass& c, const BettiOptions& opt = {});
EulerPolynomial euler_characteristic(const PartialClass& c, const BettiOptions& opt = {});

/// aleph(f, C) = min over members of the Hamming distance to f, asserted
/// equal to the smallest-total-degree reading of chi of C boxtimes {f}.
long long aleph(const PartialFunction& f, const FunctionClass& c, const BettiOptions& opt = {});

} // namespace suboplex

#endif
