#ifndef SUBOPLEX_LIMITS_HPP
#define SUBOPLEX_LIMITS_HPP

#include <cstddef>

namespace suboplex {

// Size guards shared by class constructors and homology-level analyses.
// Constructors reject n > max_n or |C| > max_class; suboplex/Betti
// computations reject complexes above max_faces.  All overridable, and
// max_faces also reads the SUBOPLEX_LIMIT_FACES environment variable.
struct Limits {
    int max_n = 24;
    std::size_t max_class = std::size_t(1) << 20;
    std::size_t max_faces = 1000000;
    int covector_max_n = 12;
    int threshold_max_n = 16;
};

Limits& global_limits();

} // namespace suboplex

#endif
