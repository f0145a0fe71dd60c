#ifndef SUBOPLEX_JSON_IO_HPP
#define SUBOPLEX_JSON_IO_HPP

#include "suboplex/algebra.hpp"
#include "suboplex/betti.hpp"
#include "suboplex/function_class.hpp"
#include "suboplex/geometry.hpp"
#include "suboplex/resolution.hpp"
#include "suboplex/separation.hpp"

#include <json.hpp>

#include <string>

namespace suboplex {

using Json = nlohmann::json;

ClassSpec class_spec_from_json(const Json& j);

// BettiTable JSON: [{"i": int, "pf": dot-string, "rank": int}], sorted by
// (i, pf); the ordering is part of the contract.
Json betti_to_json(const BettiTable& t);
std::string betti_to_csv(const BettiTable& t);

Json monomials_to_json(const MonomialSet& s);
Json extentures_to_json(const std::vector<PartialFunction>& ex);
Json euler_to_json(const EulerPolynomial& chi);

Json complex_to_json(const LabeledComplex& x);
Json resolution_report_to_json(const ResolutionReport& r);

LinearSubspace subspace_from_json(const Json& j);
PointConfig points_from_json(const Json& j);
std::pair<std::vector<AffineHyperplane>, AffineSubspace> affine_problem_from_json(const Json& j);

Json farkas_to_json(const FarkasCertificate& c);
Json affine_farkas_to_json(const AffineFarkasResult& c);

Json separation_report_to_json(const SeparationReport& r);

// Named boolean targets ("parity", "ind1", "majority", "zero", "one") for a
// class over [2^d], or a literal dot-string.
PartialFunction target_from_string(const std::string& s, int n, int m);

} // namespace suboplex

#endif
