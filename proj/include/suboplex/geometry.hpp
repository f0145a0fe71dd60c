#ifndef SUBOPLEX_GEOMETRY_HPP
#define SUBOPLEX_GEOMETRY_HPP

#include "suboplex/betti.hpp"
#include "suboplex/function_class.hpp"
#include "suboplex/linprog.hpp"
#include "suboplex/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace suboplex {

/// Sign vector over {-,0,+}, stored as int8 in {-1,0,+1}.  The bridge to
/// partial functions uses the single shared codomain convention: bit a
/// corresponds to sign (-1)^a, so 0 <-> '+', 1 <-> '-', undefined <-> '0'.
class SignVector {
public:
    SignVector() = default;
    explicit SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {}
    static SignVector zero(int n) { return SignVector(std::vector<std::int8_t>(static_cast<std::size_t>(n), 0)); }
    static SignVector from_string(const std::string& s); // characters '+', '-', '0'
    static SignVector of_pf(const PartialFunction& pf);  // requires m == 2

    int n() const { return static_cast<int>(signs_.size()); }
    int sign(int u) const { return signs_[static_cast<std::size_t>(u)]; }
    const std::vector<std::int8_t>& signs() const { return signs_; }
    bool is_zero() const;
    bool is_total() const; // nowhere zero
    int support_size() const;

    SignVector negated() const;
    // Conformal (face) order: v <= w iff v_u in {0, w_u} for every u.
    bool conformal_below(const SignVector& w) const;
    // Composition v o w: v_u when nonzero, else w_u.
    SignVector compose(const SignVector& w) const;

    PartialFunction to_pf() const; // inverse of of_pf
    std::string to_string() const;

    bool operator==(const SignVector& o) const { return signs_ == o.signs_; }
    bool operator<(const SignVector& o) const { return signs_ < o.signs_; }

private:
    std::vector<std::int8_t> signs_;
};

/// A finite list of points in Q^d; the derived vectorization appends 1.
/// The affine span dimension is computed on construction.
class PointConfig {
public:
    explicit PointConfig(std::vector<std::vector<Rat>> points);

    int count() const { return static_cast<int>(points_.size()); }
    int ambient_dim() const { return points_.empty() ? 0 : static_cast<int>(points_[0].size()); }
    int affine_dim() const { return affine_dim_; }
    const std::vector<std::vector<Rat>>& points() const { return points_; }
    std::vector<Rat> vectorized(int i) const; // point i with a 1 appended

    // Vertices of {-1,1}^d in index order (bit 0 of the index is the last
    // coordinate; bit b maps to coordinate (-1)^b).
    static PointConfig boolean_cube(int d);
    // Degree <= k monomial lift of this config's points, monomials ordered
    // by (degree, lexicographic index tuple).  The order is part of the
    // persisted format.
    PointConfig monomial_lift(int k) const;

private:
    std::vector<std::vector<Rat>> points_;
    int affine_dim_;
};

/// A linear subspace of Q^n given by an independent rational basis.
class LinearSubspace {
public:
    explicit LinearSubspace(std::vector<std::vector<Rat>> basis_rows);

    int n() const { return basis_.empty() ? 0 : static_cast<int>(basis_[0].size()); }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Rat>>& basis() const { return basis_; }
    // True when every point of the subspace has coordinate u equal to 0.
    bool inside_coordinate_hyperplane() const;
    std::vector<Rat> element(const std::vector<Rat>& coeffs) const;

    // Column space of the vectorized point matrix: the space of value
    // vectors of affine functionals on the configuration.
    static LinearSubspace value_space(const PointConfig& u);

private:
    std::vector<std::vector<Rat>> basis_;
};

/// Realizability oracle: is tau the exact sign pattern of some affine
/// functional on the points (PointConfig), or of some element of the
/// subspace (LinearSubspace)?  Exact rational feasibility; strict signs are
/// encoded as ">= 1" by homogeneity.
bool realizable(const PointConfig& u, const SignVector& tau);
bool realizable(const LinearSubspace& l, const SignVector& tau);
std::optional<std::vector<Rat>> realize_witness(const LinearSubspace& l, const SignVector& tau);

/// The poset of realizable sign vectors with the conformal order.  Rank is
/// computed both as longest-chain length from the cocircuits and from the
/// dimension of the realizing cell; a mismatch raises discrepancy_error.
class CovectorPoset {
public:
    struct Entry {
        SignVector v;
        int rank; // rank(0-vector) = -1; cocircuits have rank 0
    };

    explicit CovectorPoset(std::vector<Entry> entries) : entries_(std::move(entries)) {}

    const std::vector<Entry>& entries() const { return entries_; }
    std::optional<int> rank_of(const SignVector& v) const;
    bool contains(const SignVector& v) const { return rank_of(v).has_value(); }
    std::vector<SignVector> cocircuits() const;
    int top_rank() const;

    static CovectorPoset of(const PointConfig& u, const Limits& lim = global_limits());
    static CovectorPoset of(const LinearSubspace& l, const Limits& lim = global_limits());

private:
    std::vector<Entry> entries_; // sorted by SignVector order
};

// ---------------------------------------------------------------------------
// Threshold classes.
// ---------------------------------------------------------------------------

/// Class of linear threshold functions on the points of u; membership of
/// each candidate is decided by exact feasibility with all-strict signs.
FunctionClass linthr_class(const PointConfig& u, const Limits& lim = global_limits());
/// Polynomial threshold functions on d bits with degree bound k.
FunctionClass polythr_class(int d, int k, const Limits& lim = global_limits());

/// Closed-form Betti table of linthr(U): one entry of rank 1 per covector
/// tau, at (i = affine_dim - rank(tau), pf = tau as a partial function).
BettiTable linthr_betti_closed_form(const PointConfig& u, const Limits& lim = global_limits());

// ---------------------------------------------------------------------------
// Homological Farkas.
// ---------------------------------------------------------------------------

/// Open cells of Lambda(g) within L: nonzero covectors tau conformal-below
/// g that vanish at some u with g_u = '-' (the facets of the sign cell of g
/// visible from the all-positive cell).
std::vector<SignVector> lambda_cells(const LinearSubspace& l, const SignVector& g,
                                     const Limits& lim = global_limits());

struct PositiveWitness {
    std::vector<Rat> x; // strictly positive point of L
};

struct HoleCertificate {
    SignVector g;
    int degree;      // homological degree of the nonzero reduced homology
    long long rank;  // its rank
};

struct FarkasCertificate {
    std::variant<PositiveWitness, HoleCertificate> value;
    bool intersects_positive_cone() const { return std::holds_alternative<PositiveWitness>(value); }
};

/// Either a strictly positive point of L, or a sign vector g whose visible
/// boundary meets L in a cycle.  The verdict is established homologically
/// (scan over g) and cross-checked against the exact LP oracle; the two
/// must agree.
FarkasCertificate hom_farkas(const LinearSubspace& l, Field field = Field::Rational,
                             const Limits& lim = global_limits());

/// Homology ranks (degree >= 0) of the order complex of the closed-cell
/// poset of Lambda(g) within L; empty cell set gives an empty vector.
std::vector<long long> lambda_homology(const LinearSubspace& l, const SignVector& g, Field field,
                                       const Limits& lim = global_limits());

/// An oriented affine hyperplane w.x = offset with positive side w.x > offset.
struct AffineHyperplane {
    std::vector<Rat> normal;
    Rat offset;
};

/// Affine subspace given by a basepoint and direction vectors.
struct AffineSubspace {
    std::vector<Rat> basepoint;
    std::vector<std::vector<Rat>> directions;
};

struct AffineFarkasResult {
    // Witness: a point of N in the all-positive region; otherwise a hole
    // certificate over the vectorized arrangement (sign of length n+1, the
    // last coordinate being the added hyperplane at infinity).
    std::variant<std::vector<Rat>, HoleCertificate> value;
    bool intersects_positive_region() const { return value.index() == 0; }
};

/// Vectorizes the arrangement plus the hyperplane at infinity, maps N
/// through the embedding and reduces to hom_farkas.  The arrangement must
/// be essential (normals together with the extra hyperplane span).
AffineFarkasResult affine_hom_farkas(const std::vector<AffineHyperplane>& arrangement,
                                     const AffineSubspace& n, Field field = Field::Rational,
                                     const Limits& lim = global_limits());

/// Projection of a total sign vector onto L: the unique maximal-support
/// covector of L conformal-below sigma(f), computed coordinatewise by
/// feasibility.  Returns the empty function when only the zero covector is
/// conformal.
PartialFunction projection_pi(const PartialFunction& f, const LinearSubspace& l);
SignVector projection_pi_sign(const SignVector& f, const LinearSubspace& l);

} // namespace suboplex

#endif
