#include "suboplex/json_io.hpp"

#include "suboplex/errors.hpp"

#include <sstream>

namespace suboplex {

ClassSpec class_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw shape_error("class spec: expected an object with \"kind\"");
    ClassSpec spec;
    spec.kind = j.at("kind").get<std::string>();
    if (j.contains("n")) spec.n = j.at("n").get<int>();
    if (j.contains("m")) spec.m = j.at("m").get<int>();
    if (j.contains("d")) spec.d = j.at("d").get<int>();
    if (j.contains("k")) spec.k = j.at("k").get<int>();
    if (j.contains("p")) spec.p = j.at("p").get<int>();
    if (j.contains("function")) spec.function = j.at("function").get<std::string>();
    if (j.contains("f")) spec.function = j.at("f").get<std::string>();
    if (j.contains("functions")) spec.functions = j.at("functions").get<std::vector<std::string>>();
    if (j.contains("points")) {
        for (const auto& row : j.at("points")) {
            std::vector<Rat> p;
            for (const auto& v : row)
                p.push_back(v.is_string() ? parse_rational(v.get<std::string>())
                                          : Rat(v.get<long long>()));
            spec.points.push_back(std::move(p));
        }
    }
    if (j.contains("limits")) {
        Limits lim = global_limits();
        const auto& lj = j.at("limits");
        if (lj.contains("max_n")) lim.max_n = lj.at("max_n").get<int>();
        if (lj.contains("max_class")) lim.max_class = lj.at("max_class").get<std::size_t>();
        if (lj.contains("max_faces")) lim.max_faces = lj.at("max_faces").get<std::size_t>();
        spec.limits = lim;
    }
    return spec;
}

Json betti_to_json(const BettiTable& t) {
    Json rows = Json::array();
    for (const auto& [key, rank] : t.entries()) { // std::map: already sorted by (i, pf)
        Json row;
        row["i"] = key.first;
        row["pf"] = key.second.to_string();
        row["rank"] = rank;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string betti_to_csv(const BettiTable& t) {
    std::ostringstream out;
    out << "i,pf,rank\n";
    for (const auto& [key, rank] : t.entries())
        out << key.first << "," << key.second.to_string() << "," << rank << "\n";
    return out.str();
}

Json monomials_to_json(const MonomialSet& s) {
    Json rows = Json::array();
    for (const auto& mono : s.monomials) {
        Json vars = Json::array();
        for (const auto& [u, j] : mono.vars) vars.push_back(Json::array({u, j}));
        Json row;
        row["vars"] = std::move(vars);
        row["role"] = mono.role == MonomialRole::Functional    ? "functional"
                      : mono.role == MonomialRole::Extenture   ? "extenture"
                                                               : "canonical-generator";
        rows.push_back(std::move(row));
    }
    return rows;
}

Json extentures_to_json(const std::vector<PartialFunction>& ex) {
    Json rows = Json::array();
    for (const auto& pf : ex) rows.push_back(pf.to_string());
    return rows;
}

Json euler_to_json(const EulerPolynomial& chi) {
    Json rows = Json::array();
    for (const auto& [pf, coef] : chi.coefficients) {
        Json row;
        row["pf"] = pf.to_string();
        row["coefficient"] = coef;
        rows.push_back(std::move(row));
    }
    return rows;
}

Json complex_to_json(const LabeledComplex& x) {
    Json cells = Json::array();
    for (std::size_t i = 0; i < x.cells().size(); ++i) {
        const auto& c = x.cells()[i];
        Json row;
        row["id"] = i;
        row["dim"] = c.dim;
        row["vertices"] = c.vertices;
        row["facets"] = c.facets;
        row["label"] = c.label ? Json(c.label->to_string()) : Json(nullptr);
        cells.push_back(std::move(row));
    }
    Json out;
    out["n"] = x.n();
    out["m"] = x.m();
    out["ideal"] = x.kind() == IdealKind::Canonical ? "canonical" : "stanley-reisner";
    out["cells"] = std::move(cells);
    return out;
}

Json resolution_report_to_json(const ResolutionReport& r) {
    Json out;
    out["well_formed"] = r.well_formed;
    out["is_resolution"] = r.is_resolution;
    out["is_minimal"] = r.is_minimal;
    out["generators_match"] = r.generators_match;
    out["mismatches"] = r.mismatches;
    return out;
}

namespace {

Rat json_rational(const Json& v) {
    return v.is_string() ? parse_rational(v.get<std::string>()) : Rat(v.get<long long>());
}

std::vector<Rat> json_vector(const Json& row) {
    std::vector<Rat> out;
    for (const auto& v : row) out.push_back(json_rational(v));
    return out;
}

} // namespace

LinearSubspace subspace_from_json(const Json& j) {
    const Json& rows = j.is_object() ? j.at("basis") : j;
    std::vector<std::vector<Rat>> basis;
    for (const auto& row : rows) basis.push_back(json_vector(row));
    return LinearSubspace(std::move(basis));
}

PointConfig points_from_json(const Json& j) {
    const Json& rows = j.is_object() ? j.at("points") : j;
    std::vector<std::vector<Rat>> pts;
    for (const auto& row : rows) pts.push_back(json_vector(row));
    PointConfig config(std::move(pts));
    if (j.is_object() && j.contains("lift_degree"))
        return config.monomial_lift(j.at("lift_degree").get<int>());
    return config;
}

std::pair<std::vector<AffineHyperplane>, AffineSubspace> affine_problem_from_json(const Json& j) {
    std::vector<AffineHyperplane> arrangement;
    for (const auto& h : j.at("hyperplanes")) {
        AffineHyperplane plane;
        plane.normal = json_vector(h.at("normal"));
        plane.offset = json_rational(h.at("offset"));
        arrangement.push_back(std::move(plane));
    }
    AffineSubspace sub;
    sub.basepoint = json_vector(j.at("subspace").at("basepoint"));
    for (const auto& row : j.at("subspace").at("directions")) sub.directions.push_back(json_vector(row));
    return {std::move(arrangement), std::move(sub)};
}

Json farkas_to_json(const FarkasCertificate& c) {
    Json out;
    if (c.intersects_positive_cone()) {
        out["kind"] = "witness";
        Json x = Json::array();
        for (const auto& v : std::get<PositiveWitness>(c.value).x) x.push_back(rational_to_string(v));
        out["x"] = std::move(x);
    } else {
        const auto& hole = std::get<HoleCertificate>(c.value);
        out["kind"] = "hole";
        out["g"] = hole.g.to_string();
        out["degree"] = hole.degree;
        out["rank"] = hole.rank;
    }
    return out;
}

Json affine_farkas_to_json(const AffineFarkasResult& c) {
    Json out;
    if (c.intersects_positive_region()) {
        out["kind"] = "witness";
        Json x = Json::array();
        for (const auto& v : std::get<std::vector<Rat>>(c.value)) x.push_back(rational_to_string(v));
        out["x"] = std::move(x);
    } else {
        const auto& hole = std::get<HoleCertificate>(c.value);
        out["kind"] = "hole";
        out["g"] = hole.g.to_string();
        out["degree"] = hole.degree;
        out["rank"] = hole.rank;
    }
    return out;
}

Json separation_report_to_json(const SeparationReport& r) {
    Json out;
    out["target"] = r.target.to_string();
    out["class"] = r.class_descriptor;
    out["member"] = r.member;
    Json diff = Json::array();
    for (const auto& e : r.diff) {
        Json row;
        row["i"] = e.i;
        row["pf"] = e.pf.to_string();
        row["before"] = e.before;
        row["after"] = e.after;
        diff.push_back(std::move(row));
    }
    out["diff"] = std::move(diff);
    out["betti_base"] = betti_to_json(r.base);
    out["betti_extended"] = betti_to_json(r.extended);
    out["betti_boxtimes"] = betti_to_json(r.boxtimes);
    return out;
}

PartialFunction target_from_string(const std::string& s, int n, int m) {
    int d = 0;
    while ((1 << d) < n) ++d;
    const bool pow2 = (1 << d) == n;
    if (s == "parity") {
        if (!pow2 || m != 2) throw shape_error("target parity needs a boolean class on [2^d]");
        return parity_function(d);
    }
    if (s == "ind1") {
        if (!pow2 || m != 2) throw shape_error("target ind1 needs a boolean class on [2^d]");
        return indicator_of_ones(d);
    }
    if (s == "majority") {
        if (!pow2 || m != 2) throw shape_error("target majority needs a boolean class on [2^d]");
        return majority_function(d);
    }
    if (s == "zero") return PartialFunction(std::vector<std::int8_t>(static_cast<std::size_t>(n), 0), m);
    if (s == "one") return PartialFunction(std::vector<std::int8_t>(static_cast<std::size_t>(n), 1), m);
    PartialFunction f = PartialFunction::from_string(s, m);
    if (f.n() != n) throw shape_error("target has wrong domain size");
    return f;
}

} // namespace suboplex
