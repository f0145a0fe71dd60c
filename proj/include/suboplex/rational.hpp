#ifndef SUBOPLEX_RATIONAL_HPP
#define SUBOPLEX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace suboplex {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" (q > 0 after normalization).
Rat parse_rational(const std::string& s);

// Canonical text form: "p" or "p/q" with q > 1.
std::string rational_to_string(const Rat& r);

using RatMatrix = std::vector<std::vector<Rat>>;

// Rank by exact Gaussian elimination.  The input is copied.
int rat_rank(RatMatrix m);

// Reduced row echelon form in place; returns the rank.
int rat_rref(RatMatrix& m);

// Solves a.x = b exactly; empty result when inconsistent (a need not be
// square; any one solution is returned).
std::vector<Rat> rat_solve(RatMatrix a, std::vector<Rat> b);

} // namespace suboplex

#endif
