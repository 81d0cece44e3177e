#include "zzag/family23.hpp"

#include <algorithm>
#include <map>

namespace zzag {

namespace {

void validate_param(const Scalar& a) {
    Field k = a.field();
    if (a.is_zero() || a.is_one())
        throw DomainError("family parameter must avoid 0 and 1, got " + a.str());
    (void)k;
}

} // namespace

Pair23 make_pair23(Family23 f, std::optional<Scalar> param) {
    bool needs = f == Family23::II || f == Family23::III;
    if (needs != param.has_value())
        throw DomainError("families II and III carry a parameter, I and IV do not");
    if (param) validate_param(*param);
    return Pair23{f, std::move(param)};
}

std::string to_string(Family23 f) {
    switch (f) {
        case Family23::I: return "I";
        case Family23::II: return "II";
        case Family23::III: return "III";
        case Family23::IV: return "IV";
    }
    return "?";
}

std::optional<Family23> parse_family23(std::string_view text) {
    if (text == "I") return Family23::I;
    if (text == "II") return Family23::II;
    if (text == "III") return Family23::III;
    if (text == "IV") return Family23::IV;
    return std::nullopt;
}

Revert23 revert(const Pair23& p, const Center23& c) {
    Field k = c.lambda.field();
    if (p.param && !(p.param->field() == k))
        throw FieldMismatch("pair parameter and center over different fields");
    const Scalar& l = c.lambda;
    Scalar one = k.one();
    switch (p.family) {
        case Family23::I:
            if (l.is_zero() || l.is_one())
                return {make_pair23(Family23::IV), LambdaRange::AnyValue, {}};
            return {make_pair23(Family23::II, one - l.inverse()), LambdaRange::Nonzero, {}};
        case Family23::II:
            if (l.is_zero())
                return {make_pair23(Family23::III, *p.param), LambdaRange::AnyValue, {}};
            return {make_pair23(Family23::I), LambdaRange::Fixed, (one - *p.param).inverse()};
        case Family23::III:
            return {make_pair23(Family23::II, *p.param), LambdaRange::Fixed, k.zero()};
        case Family23::IV:
            return {make_pair23(Family23::I), LambdaRange::ZeroOrOne, {}};
    }
    throw DomainError("unreachable family");
}

ZigzagType boundary_type(Family23 f) {
    bool reduced_order = f == Family23::I || f == Family23::III;
    if (reduced_order) return ZigzagType({Weight(0), Weight(-1), Weight(-2), Weight(-3)});
    return ZigzagType({Weight(0), Weight(-1), Weight(-3), Weight(-2)});
}

std::string iso_class_label(const Pair23& p) {
    if (!p.param) return to_string(p.family);
    Scalar a = *p.param;
    Scalar b = a.inverse();
    Scalar lo = a < b ? a : b;
    Scalar hi = a < b ? b : a;
    std::string cls = lo == hi ? "{" + lo.str() + "}" : "{" + lo.str() + "," + hi.str() + "}";
    return to_string(p.family) + cls;
}

namespace {

FibrationGraph build_from_params(const Field& k, std::vector<Scalar> params) {
    for (const Scalar& a : params) validate_param(a);
    // close under inversion and keep one representative per class
    std::map<std::string, Scalar> classes;
    for (const Scalar& a : params)
        classes.emplace(iso_class_label(make_pair23(Family23::II, a)).substr(2), a);

    auto arrow_id = [](const std::string& from, const std::string& to) { return from + ">" + to; };

    TransitionOracle oracle = [&, k](const std::string& vertex) {
        std::vector<Transition> out;
        auto push = [&](const std::string& target) {
            out.push_back({target, arrow_id(vertex, target), arrow_id(target, vertex)});
        };
        if (vertex == "I") {
            Revert23 r = revert(make_pair23(Family23::I), Center23{k.zero()});
            push(iso_class_label(r.target)); // IV
            for (const auto& [cls, a] : classes) {
                // center with 1 - 1/l = a, realizing the transition to II(a)
                Scalar lambda = (k.one() - a).inverse();
                Revert23 ra = revert(make_pair23(Family23::I), Center23{lambda});
                push(iso_class_label(ra.target));
            }
            return out;
        }
        if (vertex == "IV") {
            push(iso_class_label(revert(make_pair23(Family23::IV), Center23{k.zero()}).target));
            return out;
        }
        bool is2 = vertex.rfind("II{", 0) == 0;
        bool is3 = vertex.rfind("III{", 0) == 0;
        if (!is2 && !is3) throw DomainError("unknown vertex " + vertex);
        std::string cls = vertex.substr(is2 ? 2 : 3);
        auto it = classes.find(cls);
        if (it == classes.end()) throw DomainError("unknown parameter class " + cls);
        if (is2) {
            push(iso_class_label(
                revert(make_pair23(Family23::II, it->second), Center23{k.zero()}).target));
            push(iso_class_label(
                revert(make_pair23(Family23::II, it->second), Center23{k.one()}).target));
        } else {
            push(iso_class_label(
                revert(make_pair23(Family23::III, it->second), Center23{k.zero()}).target));
        }
        return out;
    };

    // boundary carries a (-3)-curve in every family
    return build_graph(oracle, {"I"}, true);
}

} // namespace

FibrationGraph build_graph23(const Field& k) {
    if (k.is_rationals())
        throw DomainError("exhaustive graph needs a finite field; pass explicit parameters");
    if (k.characteristic() < 3) throw DomainError("field must have at least 3 elements");
    std::vector<Scalar> params;
    for (const Scalar& a : k.elements())
        if (!a.is_zero() && !a.is_one()) params.push_back(a);
    return build_from_params(k, std::move(params));
}

FibrationGraph build_graph23(const Field& k, std::span<const Scalar> params) {
    return build_from_params(k, {params.begin(), params.end()});
}

} // namespace zzag
