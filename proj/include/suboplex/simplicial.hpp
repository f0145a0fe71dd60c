#ifndef SUBOPLEX_SIMPLICIAL_HPP
#define SUBOPLEX_SIMPLICIAL_HPP

#include "suboplex/function_class.hpp"
#include "suboplex/partial_function.hpp"

#include <map>
#include <string>
#include <vector>

namespace suboplex {

enum class Field { GF2, Rational };

std::string field_name(Field f);
Field field_from_name(const std::string& s);

/// An abstract simplicial complex on vertices 0..V-1, stored as the full
/// face list (subset closure is an invariant, checked on construction).
/// The empty face is tracked explicitly so that the irrelevant complex
/// (empty face only) and the void complex (no faces at all) are distinct.
class SimplicialComplex {
public:
    // Builds the subset closure of the given generating faces.
    static SimplicialComplex closure(int num_vertices, std::vector<std::vector<int>> generators,
                                     bool include_empty = true);
    // Faces must already be subset-closed (verified).
    SimplicialComplex(int num_vertices, std::vector<std::vector<int>> faces, bool has_empty);
    // The void complex.
    SimplicialComplex() : num_vertices_(0), has_empty_(false) {}

    int num_vertices() const { return num_vertices_; }
    bool has_empty_face() const { return has_empty_; }
    bool is_void() const { return !has_empty_ && faces_.empty(); }
    bool is_irrelevant() const { return has_empty_ && faces_.empty(); }
    // Dimension; -1 for irrelevant, INT_MIN for void.
    int dim() const;
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    std::size_t face_count() const { return faces_.size() + (has_empty_ ? 1 : 0); }
    bool contains(const std::vector<int>& face) const;

    // Vertex labels as (input, value) pairs of [n]x[m]; optional.
    std::vector<std::pair<int, int>> vertex_labels;

    // Reduced Euler characteristic (empty face counts with sign at dim -1).
    long long reduced_euler() const;

    std::vector<std::vector<int>> facets() const;

private:
    int num_vertices_;
    bool has_empty_;
    std::vector<std::vector<int>> faces_; // sorted vectors, sorted list, empty face excluded
};

/// Reduced homology ranks over the given field, indexed from degree -1:
/// result[0] = rank of H~_{-1}, result[i+1] = rank of H~_i.  The irrelevant
/// complex reports rank 1 in degree -1; the void complex reports all zeros.
std::vector<long long> reduced_homology(const SimplicialComplex& k, Field field);

long long reduced_homology_rank(const SimplicialComplex& k, Field field, int degree);
bool is_acyclic(const SimplicialComplex& k, Field field); // zero reduced homology or irrelevant

// link_sigma(K) and K restricted to sigma, per the standard definitions.
SimplicialComplex link(const SimplicialComplex& k, const std::vector<int>& sigma);
SimplicialComplex restrict_complex(const SimplicialComplex& k, const std::vector<int>& sigma);

/// Order complex of an abstract poset given by its strict covering-or-less
/// relation: vertices are the poset elements, faces are the chains.
/// `less(a, b)` must be a strict partial order.
SimplicialComplex order_complex(int num_elements,
                                const std::vector<std::vector<int>>& less_list);

/// Canonical suboplex S_C: faces are the graphs of the partial functions
/// with an extension in the class, on the vertex set of used (input, value)
/// pairs.  Throws on the empty class.
SimplicialComplex canonical_suboplex(const FunctionClass& c,
                                     const Limits& lim = global_limits());
SimplicialComplex canonical_suboplex(const PartialClass& c,
                                     const Limits& lim = global_limits());

// The faces of S_C as partial functions (including the empty function).
std::vector<PartialFunction> suboplex_faces(const FunctionClass& c,
                                            const Limits& lim = global_limits());
std::vector<PartialFunction> suboplex_faces(const PartialClass& c,
                                            const Limits& lim = global_limits());

} // namespace suboplex

#endif
