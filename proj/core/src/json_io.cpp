#include "zzag/json_io.hpp"

namespace zzag {

namespace {

Scalar scalar_from_json(const Field& k, const Json& j) {
    std::string text = j.is_string() ? j.get<std::string>() : j.dump();
    auto s = k.parse_scalar(text);
    if (!s) throw DomainError("bad field element '" + text + "'");
    return *s;
}

Field field_from_json(const Json& j) {
    auto f = Field::parse(j.get<std::string>());
    if (!f) throw DomainError("bad field name '" + j.get<std::string>() + "'");
    return *f;
}

} // namespace

Json weight_to_json(const Weight& w) {
    static const Weight lo = Weight(std::numeric_limits<std::int64_t>::min());
    static const Weight hi = Weight(std::numeric_limits<std::int64_t>::max());
    if (w >= lo && w <= hi) return w.convert_to<std::int64_t>();
    return w.str();
}

Weight weight_from_json(const Json& j) {
    if (j.is_number_integer()) return Weight(j.get<std::int64_t>());
    if (j.is_string()) return Weight(j.get<std::string>());
    throw DomainError("bad weight: " + j.dump());
}

Json to_json(const ZigzagType& t) {
    Json w = Json::array();
    for (const Weight& x : t.weights()) w.push_back(weight_to_json(x));
    return Json{{"weights", std::move(w)}};
}

ZigzagType zigzag_from_json(const Json& j) {
    std::vector<Weight> w;
    for (const Json& x : j.at("weights")) w.push_back(weight_from_json(x));
    return ZigzagType(std::move(w));
}

Json to_json(const MarkedZigzag& z) {
    Json out = to_json(z.type());
    out["m"] = z.positive_index();
    if (auto l = z.minus_one_index()) out["l"] = *l;
    return out;
}

MarkedZigzag marked_from_json(const Json& j) {
    std::vector<Weight> w;
    for (const Json& x : j.at("weights")) w.push_back(weight_from_json(x));
    MarkedZigzag z(std::move(w), j.at("m").get<std::size_t>());
    if (j.contains("l")) {
        auto derived = z.minus_one_index();
        if (!derived || *derived != j.at("l").get<std::size_t>())
            throw DomainError("marked (-1)-curve index disagrees with the weights");
    }
    return z;
}

Json to_json(const DualGraph& g) {
    Json nodes = Json::array();
    for (NodeId id : g.node_ids()) {
        const CurveNode& n = g.node(id);
        Json jn{{"id", id}, {"weight", weight_to_json(n.weight)}};
        if (!n.label.empty()) jn["label"] = n.label;
        nodes.push_back(std::move(jn));
    }
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

DualGraph dual_graph_from_json(const Json& j) {
    DualGraph g;
    std::map<NodeId, NodeId> remap;
    for (const Json& jn : j.at("nodes")) {
        NodeId given = jn.at("id").get<NodeId>();
        remap[given] = g.add_node(weight_from_json(jn.at("weight")),
                                  jn.value("label", std::string{}));
    }
    for (const Json& je : j.at("edges")) g.add_edge(remap.at(je.at(0)), remap.at(je.at(1)));
    return g;
}

Json to_json(const ElementaryLink& l) {
    Json out{{"kind", to_string(l.kind)}};
    if (l.side) out["side"] = to_string(*l.side);
    if (l.point) out["point"] = *l.point == PointMode::Intersection ? "intersection" : "free";
    if (!l.center.empty()) out["center"] = l.center;
    return out;
}

ElementaryLink link_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    auto side = [&]() {
        std::string s = j.at("side").get<std::string>();
        if (s == "left") return LinkSide::Left;
        if (s == "right") return LinkSide::Right;
        throw DomainError("bad link side '" + s + "'");
    };
    if (kind == "I") return ElementaryLink::contract();
    if (kind == "II") return ElementaryLink::blow_at_minus_one(side());
    if (kind == "III") return ElementaryLink::blow_interior(side());
    if (kind == "IV") {
        std::string p = j.at("point").get<std::string>();
        if (p == "intersection") return ElementaryLink::blow_boundary_intersection();
        if (p == "free") return ElementaryLink::blow_boundary_free(j.value("center", "p"));
        throw DomainError("bad point mode '" + p + "'");
    }
    throw DomainError("bad link kind '" + kind + "'");
}

Json to_json(const Move& m) {
    if (auto* r = std::get_if<Reversion>(&m))
        return Json{{"kind", "rev"}, {"in", r->center_in}, {"out", r->center_out}};
    if (auto* f = std::get_if<FiberedModification>(&m)) {
        Json out{{"kind", "fib"}, {"d", weight_to_json(f->degree)}};
        if (!f->payload.empty()) out["payload"] = f->payload;
        if (f->possibly_identity) out["possibly_identity"] = true;
        return out;
    }
    const auto& iso = std::get<Isomorphism>(m);
    Json out{{"kind", "iso"}};
    if (!iso.relabel.empty()) out["relabel"] = iso.relabel;
    return out;
}

Move move_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rev")
        return Reversion{j.at("in").get<std::string>(), j.at("out").get<std::string>()};
    if (kind == "fib") {
        FiberedModification f;
        f.degree = weight_from_json(j.at("d"));
        f.payload = j.value("payload", std::string{});
        f.possibly_identity = j.value("possibly_identity", false);
        return f;
    }
    if (kind == "iso") return Isomorphism{j.value("relabel", std::string{})};
    throw DomainError("bad move kind '" + kind + "'");
}

Json to_json(const MoveWord& w) {
    Json moves = Json::array();
    for (const Move& m : w.moves()) moves.push_back(to_json(m));
    return Json{{"base", to_json(w.base())}, {"moves", std::move(moves)}};
}

MoveWord word_from_json(const Json& j) {
    std::vector<Move> moves;
    for (const Json& jm : j.at("moves")) moves.push_back(move_from_json(jm));
    return MoveWord(zigzag_from_json(j.at("base")), std::move(moves));
}

Json to_json(const FibrationGraph& g) {
    Json vertices = Json::array();
    for (const std::string& v : g.vertices()) vertices.push_back(v);
    Json arrows = Json::array();
    for (const std::string& id : g.arrow_ids()) {
        const Arrow& a = g.arrow(id);
        arrows.push_back(Json{{"id", a.id}, {"o", a.origin}, {"t", a.target}, {"bar", a.bar}});
    }
    return Json{{"vertices", std::move(vertices)},
                {"arrows", std::move(arrows)},
                {"deep_curve", g.deep_curve_hypothesis()}};
}

FibrationGraph fibration_graph_from_json(const Json& j) {
    FibrationGraph g;
    for (const Json& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const Json& a : j.at("arrows"))
        g.add_arrow(a.at("id").get<std::string>(), a.at("o").get<std::string>(),
                    a.at("t").get<std::string>(), a.at("bar").get<std::string>());
    g.set_deep_curve_hypothesis(j.value("deep_curve", false));
    g.validate();
    return g;
}

Json to_json(const Pair23& p, const Field& k) {
    Json out{{"family", to_string(p.family)}, {"field", k.name()}};
    if (p.param) out["a"] = p.param->str();
    return out;
}

std::pair<Pair23, Field> pair23_from_json(const Json& j) {
    Field k = field_from_json(j.at("field"));
    auto fam = parse_family23(j.at("family").get<std::string>());
    if (!fam) throw DomainError("bad family '" + j.at("family").get<std::string>() + "'");
    std::optional<Scalar> a;
    if (j.contains("a")) a = scalar_from_json(k, j.at("a"));
    return {make_pair23(*fam, std::move(a)), k};
}

Json to_json(const Poly1& p) {
    Json coeffs = Json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(static_cast<std::size_t>(i)).str());
    return Json{{"coeffs", std::move(coeffs)}, {"field", p.field().name()}};
}

Poly1 poly1_from_json(const Field& k, const Json& j) {
    const Json& coeffs = j.is_array() ? j : j.at("coeffs");
    std::vector<Scalar> c;
    for (const Json& x : coeffs) c.push_back(scalar_from_json(k, x));
    return Poly1(k, std::move(c));
}

Json to_json(const PolyAut& f) {
    auto comp = [](const Poly2& p) {
        Json terms = Json::array();
        for (const auto& [i, j, c] : p.terms())
            terms.push_back(Json{{"e", Json::array({i, j})}, {"c", c.str()}});
        return terms;
    };
    return Json{{"f1", comp(f.f1())}, {"f2", comp(f.f2())}, {"field", f.field().name()}};
}

PolyAut poly_aut_from_json(const Field& k, const Json& j) {
    auto comp = [&](const Json& terms) {
        Poly2 p(k);
        for (const Json& t : terms) {
            int i = t.at("e").at(0).get<int>();
            int jj = t.at("e").at(1).get<int>();
            p = p + Poly2::monomial(scalar_from_json(k, t.at("c")), i, jj);
        }
        return p;
    };
    return PolyAut(comp(j.at("f1")), comp(j.at("f2")));
}

Json to_json(const SpDescription& sp) {
    Json out;
    out["one_parameter"] = sp.one_parameter;
    if (sp.one_parameter) out["mu"] = sp.mu.str();
    Json elems = Json::array();
    for (const SpElement& e : sp.elements)
        elems.push_back(Json{{"a", e.a.str()}, {"b", e.b.str()}, {"c", e.c.str()}});
    out["elements"] = std::move(elems);
    return out;
}

std::string dump_sorted(const Json& j) { return j.dump(2); }

} // namespace zzag
