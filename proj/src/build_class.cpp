#include "suboplex/errors.hpp"
#include "suboplex/function_class.hpp"
#include "suboplex/geometry.hpp"

namespace suboplex {

FunctionClass build_class(const ClassSpec& spec) {
    const Limits& lim = spec.limits ? *spec.limits : global_limits();
    const std::string& k = spec.kind;
    if (k == "complete") return complete_class(spec.n, spec.m, lim);
    if (k == "singleton") {
        if (!spec.function) throw shape_error("singleton: missing \"function\"");
        return singleton_class(PartialFunction::from_string(*spec.function, spec.m));
    }
    if (k == "delta") return delta_class(spec.n, lim);
    if (k == "wt") {
        std::optional<PartialFunction> f;
        if (spec.function) f = PartialFunction::from_string(*spec.function, 2);
        return wt_class(spec.n, spec.k, std::move(f), lim);
    }
    if (k == "monconj") return monconj_class(spec.d, lim);
    if (k == "conj") return conj_class(spec.d, lim);
    if (k == "linfun") return linfun_class(spec.p, spec.d, lim);
    if (k == "nb") {
        std::optional<PartialFunction> f;
        if (spec.function) f = PartialFunction::from_string(*spec.function, 2);
        return nb_class(spec.n, spec.k, std::move(f), lim);
    }
    if (k == "linthr") {
        if (!spec.points.empty()) return linthr_class(PointConfig(spec.points), lim);
        if (spec.d >= 1) return linthr_class(PointConfig::boolean_cube(spec.d), lim);
        throw shape_error("linthr: need \"points\" or \"d\"");
    }
    if (k == "polythr") return polythr_class(spec.d, spec.k, lim);
    if (k == "explicit") {
        if (spec.functions.empty()) throw shape_error("explicit: missing \"functions\"");
        int n = spec.n >= 0 ? spec.n : static_cast<int>(spec.functions.front().size());
        return explicit_class(n, spec.m, spec.functions, lim);
    }
    throw shape_error("unknown class kind: " + k);
}

} // namespace suboplex
