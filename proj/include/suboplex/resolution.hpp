#ifndef SUBOPLEX_RESOLUTION_HPP
#define SUBOPLEX_RESOLUTION_HPP

#include "suboplex/betti.hpp"
#include "suboplex/function_class.hpp"
#include "suboplex/simplicial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace suboplex {

/// Which ideal of the class the labels generate: exponents are Gamma(pf)
/// (canonical ideal) or graph(pf) (Stanley-Reisner ideal).
enum class IdealKind { Canonical, StanleyReisner };

/// A regular cell complex with partial-function labels.  Cell 0 is always
/// the empty cell (dimension -1, no label).  Vertices are the 0-cells; a
/// cell records its vertex set and its facet ids, and carries the induced
/// label (the meet of its vertices' labels in canonical mode, their union
/// in Stanley-Reisner mode).
class LabeledComplex {
public:
    struct Cell {
        int dim = -1;
        std::vector<int> vertices; // sorted 0-cell ids; empty for the empty cell
        std::vector<int> facets;   // ids of the boundary cells of dimension dim-1
        std::optional<PartialFunction> label; // none for the empty cell
    };

    LabeledComplex(int n, int m, IdealKind kind) : n_(n), m_(m), kind_(kind) {
        cells_.push_back(Cell{}); // the empty cell
    }

    int n() const { return n_; }
    int m() const { return m_; }
    IdealKind kind() const { return kind_; }
    const std::vector<Cell>& cells() const { return cells_; }
    int dim() const;
    std::size_t cell_count() const { return cells_.size(); }

    // Adds a vertex (facet: the empty cell). Returns its id.
    int add_vertex(const PartialFunction& label);
    // Adds a higher cell from its facet ids; the vertex set is the union of
    // the facets' vertex sets and the label is induced unless given.
    int add_cell(int dim, std::vector<int> facets,
                 std::optional<PartialFunction> label = std::nullopt);

    const PartialFunction& label(int id) const;
    // Exponent of the cell's monomial label as a bitmask over [n]x[m].
    std::uint64_t exponent_bits(int id) const;
    // Label induced from the vertex labels (meet or union by mode).
    PartialFunction induced_label(int id) const;

    std::vector<int> cells_of_dim(int d) const;
    std::vector<int> maximal_cells() const;

private:
    int n_, m_;
    IdealKind kind_;
    std::vector<Cell> cells_;
};

struct ResolutionReport {
    bool well_formed = false;
    bool is_resolution = false;
    bool is_minimal = false;
    bool generators_match = false; // vertex labels = the ideal's minimal generators
    std::vector<std::string> mismatches;
    bool ok() const { return well_formed && is_resolution && is_minimal && generators_match; }
    bool resolves() const { return well_formed && is_resolution && generators_match; }
};

/// Verifies that X supports a (minimal) cellular resolution of the class's
/// canonical (or Stanley-Reisner) ideal: structural soundness, induced
/// labels, generator match, and acyclicity of every X_{<=sigma} over the
/// join-closure of the vertex exponents.  Homology is taken on the order
/// complex of the cell poset, so no polytopal incidence signs are needed.
ResolutionReport check_resolution(const LabeledComplex& x, const FunctionClass& c,
                                  Field field = Field::GF2);
ResolutionReport check_resolution(const LabeledComplex& x, const PartialClass& c,
                                  Field field = Field::GF2);
// Acyclicity and labels only (no generator comparison).
ResolutionReport check_resolution_ideal(const LabeledComplex& x,
                                        const std::vector<PartialFunction>& generators,
                                        Field field = Field::GF2);

/// Betti numbers read off a resolution.  For a minimal complex this is the
/// cell census by (dimension, label); the homological route
/// beta_{i,b} = dim H~_{i-1}(X_{<b}) is always computed and compared on
/// every cell degree (a mismatch on a minimal complex raises
/// discrepancy_error).
BettiTable betti_from_resolution(const LabeledComplex& x, bool minimal_census = true,
                                 Field field = Field::GF2);

// ---------------------------------------------------------------------------
// Named constructions.
// ---------------------------------------------------------------------------

// n-cube with vertex v labeled by the function v; resolves complete(n).
LabeledComplex cube_resolution(int n);
// (n-1)-simplex with vertex i labeled (i -> not f(i)); resolves the
// Stanley-Reisner ideal of {f}.
LabeledComplex singleton_sr_resolution(const PartialFunction& f);
// Single point labeled f; resolves the canonical ideal of {f}.
LabeledComplex point_resolution(const PartialFunction& f);
// (n-1)-simplex with vertex i labeled delta_i; resolves delta(n).
LabeledComplex delta_resolution(int n);
// Cube section P_n^k; resolves wt(f, k)_n (f defaults to all-zero).
LabeledComplex wt_resolution(int n, int k, std::optional<PartialFunction> f = std::nullopt);
// d-cube with vertex V labeled by the monotone conjunction Lambda(V).
LabeledComplex monconj_resolution(int d);
// Cone-over-cubes; resolves conj(d).
LabeledComplex coc_resolution(int d);

enum class FlagOrder { WeightLex, Lex };
// Flag resolution of linfun(p, d) for prime p and the given linear order.
LabeledComplex flag_resolution(int p, int d, FlagOrder order = FlagOrder::WeightLex);
// Number of maximal paths U_p(d) = prod (p^(d-i) - 1).
long long flag_path_count(int p, int d);

// ---------------------------------------------------------------------------
// Combinators.
// ---------------------------------------------------------------------------

// Join: resolves the union of the resolved classes (label = meet of labels).
LabeledComplex join_resolutions(const LabeledComplex& x, const LabeledComplex& y);
// Product: resolves the Cartesian union (labels concatenated on the
// disjoint union of domains and codomains).
LabeledComplex product_resolutions(const LabeledComplex& x, const LabeledComplex& y);
// Restriction: same cells, labels restricted to the input subset U.
LabeledComplex restrict_resolution(const LabeledComplex& x, const std::vector<int>& u);

} // namespace suboplex

#endif
