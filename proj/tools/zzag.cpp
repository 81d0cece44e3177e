// Command-line surface over the zigzag calculus: JSON in/out, DOT export.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "zzag/json_io.hpp"
#include "zzag/moves.hpp"

using namespace zzag;

namespace {

Json read_json_file(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    return Json::parse(in);
}

Field parse_field_flag(const std::string& name) {
    auto k = Field::parse(name);
    if (!k) throw DomainError("unknown field '" + name + "' (expected Q or F<p>)");
    return *k;
}

Scalar parse_scalar_flag(const Field& k, const std::string& text) {
    auto s = k.parse_scalar(text);
    if (!s) throw DomainError("bad field element '" + text + "'");
    return *s;
}

void emit(const Json& j) { std::cout << dump_sorted(j) << "\n"; }

UVPAut parse_uvp_word(const Field& k, const Json& j) {
    std::vector<UVPGen> gens;
    for (const Json& g : j) {
        std::string name = g.at("gen").get<std::string>();
        if (name == "H")
            gens.push_back(GenH{parse_scalar_flag(k, g.at("a").get<std::string>())});
        else if (name == "I")
            gens.push_back(GenI{});
        else if (name == "T")
            gens.push_back(GenT{poly1_from_json(k, g.at("q"))});
        else if (name == "T0")
            gens.push_back(GenT0{parse_scalar_flag(k, g.at("a").get<std::string>())});
        else if (name == "Sp")
            gens.push_back(GenSp{parse_scalar_flag(k, g.at("a").get<std::string>()),
                                 parse_scalar_flag(k, g.at("b").get<std::string>()),
                                 parse_scalar_flag(k, g.at("c").get<std::string>())});
        else
            throw DomainError("unknown generator '" + name + "'");
    }
    return UVPAut(k, std::move(gens));
}

Json word_to_json_with_types(const MoveWord& w) {
    Json out = to_json(w);
    Json trace = Json::array();
    for (const ZigzagType& t : type_trace(w)) trace.push_back(to_json(t));
    out["trace"] = std::move(trace);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact calculus of boundary zigzags, their rewrites and surface families"};
    app.require_subcommand(1);

    // ------------------------------------------------------------- zigzag
    auto* zigzag = app.add_subcommand("zigzag", "validate and transform boundary types");
    zigzag->require_subcommand(1);
    std::string type_flag;
    std::optional<std::size_t> m_flag;
    bool plain = false;

    auto* zcheck = zigzag->add_subcommand("check", "validate a type / marked chain");
    zcheck->add_option("--type", type_flag, "comma-separated weights")->required();
    zcheck->add_option("--m", m_flag, "positive-curve index");
    zcheck->callback([&] {
        ZigzagType t = ZigzagType::parse(type_flag);
        Json out = to_json(t);
        out["one_standard"] = t.is_one_standard();
        if (m_flag) {
            MarkedZigzag z(t.weights(), *m_flag);
            out = to_json(z);
            out["one_standard"] = t.is_one_standard();
            out["almost_standard"] = z.almost_standard();
        } else {
            try {
                MarkedZigzag z = MarkedZigzag::from_type(t);
                out["m"] = z.positive_index();
                out["almost_standard"] = z.almost_standard();
            } catch (const DomainError&) {
                out["almost_standard"] = false;
            }
        }
        emit(out);
    });

    auto* zrev = zigzag->add_subcommand("reverse", "reverse the tail of a 1-standard type "
                                                   "(--plain reverses the raw chain order)");
    zrev->add_option("--type", type_flag)->required();
    zrev->add_flag("--plain", plain);
    zrev->callback([&] {
        ZigzagType t = ZigzagType::parse(type_flag);
        std::cout << (plain ? t.reversed() : reversion_transform(t)).str() << "\n";
    });

    // --------------------------------------------------------------- link
    auto* link = app.add_subcommand("link", "elementary links on marked chains");
    link->require_subcommand(1);
    std::string link_json, kind_flag, side_flag = "right", point_flag = "intersection",
                center_flag = "p";

    auto* lapply = link->add_subcommand("apply", "apply one elementary link");
    lapply->add_option("--type", type_flag)->required();
    lapply->add_option("--m", m_flag, "positive-curve index (default: unique non-negative)");
    lapply->add_option("--link", link_json, "link as JSON");
    lapply->add_option("--kind", kind_flag, "I, II, III or IV");
    lapply->add_option("--side", side_flag, "left/right (II, III)");
    lapply->add_option("--point", point_flag, "intersection/free (IV)");
    lapply->add_option("--center", center_flag, "center token (IV free)");
    lapply->callback([&] {
        ZigzagType t = ZigzagType::parse(type_flag);
        MarkedZigzag z = m_flag ? MarkedZigzag(t.weights(), *m_flag) : MarkedZigzag::from_type(t);
        ElementaryLink l = !link_json.empty()
                               ? link_from_json(Json::parse(link_json))
                               : link_from_json(Json{{"kind", kind_flag},
                                                     {"side", side_flag},
                                                     {"point", point_flag},
                                                     {"center", center_flag}});
        LinkResult r = apply_link(z, l);
        Json out = to_json(r.zigzag);
        out["almost_standard"] = r.almost_standard;
        emit(out);
    });

    auto* llist = link->add_subcommand("list", "enumerate applicable links");
    llist->add_option("--type", type_flag)->required();
    llist->add_option("--m", m_flag);
    llist->callback([&] {
        ZigzagType t = ZigzagType::parse(type_flag);
        MarkedZigzag z = m_flag ? MarkedZigzag(t.weights(), *m_flag) : MarkedZigzag::from_type(t);
        Json out = Json::array();
        for (const ElementaryLink& l : applicable_links(z)) out.push_back(to_json(l));
        emit(out);
    });

    // ---------------------------------------------------------- reversion
    auto* reversion = app.add_subcommand("reversion", "fibration-changing moves");
    reversion->require_subcommand(1);
    bool dot = false;

    auto* rdec = reversion->add_subcommand("decompose", "elementary-link word of the reversion");
    rdec->add_option("--type", type_flag)->required();
    rdec->callback([&] {
        ReversionLinks rl = reversion_links(ZigzagType::parse(type_flag));
        Json links = Json::array();
        for (const ElementaryLink& l : rl.links) links.push_back(to_json(l));
        Json schedule = Json::array();
        for (const ScheduleStep& s : rl.schedule)
            schedule.push_back(Json{{"step", s.name},
                                    {"after", to_json(s.after)},
                                    {"links_emitted", s.links_emitted}});
        LinkKindCounts c = count_kinds(rl.links);
        emit(Json{{"start", to_json(rl.start)},
                  {"links", std::move(links)},
                  {"schedule", std::move(schedule)},
                  {"counts",
                   Json{{"I", c.i}, {"II", c.ii}, {"III", c.iii}, {"IV", c.iv}}}});
    });

    auto* rres = reversion->add_subcommand("resolve", "two-sided resolution chain");
    rres->add_option("--type", type_flag)->required();
    rres->add_flag("--dot", dot);
    rres->callback([&] {
        DualGraph g = reversion_resolution(ZigzagType::parse(type_flag));
        if (dot)
            std::cout << g.to_dot();
        else
            emit(to_json(g));
    });

    // ------------------------------------------------------------ fibered
    auto* fibered = app.add_subcommand("fibered", "fibration-preserving moves");
    fibered->require_subcommand(1);
    long long degree_flag = 2;
    auto* fres = fibered->add_subcommand("resolve", "resolution tree of a degree-d move");
    fres->add_option("--degree", degree_flag)->required();
    fres->add_flag("--dot", dot);
    fres->callback([&] {
        DualGraph g = fibered_resolution(Weight(degree_flag));
        if (dot)
            std::cout << g.to_dot();
        else
            emit(to_json(g));
    });

    // --------------------------------------------------------------- word
    auto* word = app.add_subcommand("word", "move words and their reduction");
    word->require_subcommand(1);
    std::string file_flag;
    std::uint64_t seed_flag = 0;
    std::size_t length_flag = 6;

    auto* wreduce = word->add_subcommand("reduce", "compose adjacent moves to a fixpoint");
    wreduce->add_option("--file", file_flag, "word JSON ('-' for stdin)")->required();
    wreduce->callback([&] { emit(to_json(reduce(word_from_json(read_json_file(file_flag))))); });

    auto* wtrace = word->add_subcommand("trace", "boundary types after each move");
    wtrace->add_option("--file", file_flag)->required();
    wtrace->callback(
        [&] { emit(word_to_json_with_types(word_from_json(read_json_file(file_flag)))); });

    auto* wmin = word->add_subcommand("minimal", "test the minimality criterion");
    wmin->add_option("--file", file_flag)->required();
    wmin->callback([&] {
        MoveWord w = word_from_json(read_json_file(file_flag));
        emit(Json{{"minimal", is_minimal(w)}, {"length", w.size()}});
    });

    auto* wsample = word->add_subcommand("sample", "seeded random word for experiments");
    wsample->add_option("--type", type_flag)->required();
    wsample->add_option("--seed", seed_flag);
    wsample->add_option("--length", length_flag);
    wsample->callback([&] {
        std::mt19937_64 rng(seed_flag);
        std::vector<Move> moves;
        for (std::size_t i = 0; i < length_flag; ++i) {
            if (rng() % 2 == 0)
                moves.push_back(FiberedModification{Weight(2 + rng() % 4), "", false});
            else
                moves.push_back(Reversion{"p" + std::to_string(rng() % 4),
                                          "q" + std::to_string(rng() % 4) + "." +
                                              std::to_string(i)});
        }
        emit(to_json(MoveWord(ZigzagType::parse(type_flag), std::move(moves))));
    });

    // -------------------------------------------------------------- graph
    auto* graph = app.add_subcommand("graph", "fibration-class graphs");
    graph->require_subcommand(1);
    std::string family_flag, field_flag = "Q", params_flag, poly_flag;

    auto build_family_graph = [&]() -> FibrationGraph {
        Field k = parse_field_flag(field_flag);
        if (family_flag == "family23") {
            if (!params_flag.empty()) {
                std::vector<Scalar> params;
                std::stringstream ss(params_flag);
                std::string item;
                while (std::getline(ss, item, ',')) params.push_back(parse_scalar_flag(k, item));
                return build_graph23(k, params);
            }
            return build_graph23(k);
        }
        if (family_flag == "uvp") {
            if (poly_flag.empty()) throw DomainError("uvp graphs need --poly");
            return uvp_fibration_graph(SurfaceUVP(Poly1::parse(k, poly_flag, 'w')));
        }
        if (family_flag == "plane") return plane_fibration_graph(k);
        throw DomainError("unknown family '" + family_flag + "'");
    };

    auto* gbuild = graph->add_subcommand("build", "build a family's fibration-class graph");
    gbuild->add_option("--family", family_flag, "family23, uvp or plane")->required();
    gbuild->add_option("--field", field_flag, "Q or F<p>");
    gbuild->add_option("--params", params_flag, "parameter list for partial graphs");
    gbuild->add_option("--poly", poly_flag, "P(w) for the uvp family");
    gbuild->add_flag("--dot", dot);
    gbuild->callback([&] {
        FibrationGraph g = build_family_graph();
        if (dot)
            std::cout << g.to_dot();
        else
            emit(to_json(g));
    });

    auto* grank = graph->add_subcommand("rank", "connectivity, cycle rank and the tree criterion");
    grank->add_option("--file", file_flag, "graph JSON");
    grank->add_option("--family", family_flag);
    grank->add_option("--field", field_flag);
    grank->add_option("--params", params_flag);
    grank->add_option("--poly", poly_flag);
    grank->callback([&] {
        FibrationGraph g = file_flag.empty() ? build_family_graph()
                                             : fibration_graph_from_json(read_json_file(file_flag));
        Json out{{"vertices", g.vertex_count()},
                 {"geometric_edges", g.geometric_edge_count()},
                 {"connected", g.connected()},
                 {"cycle_rank", g.cycle_rank()},
                 {"is_tree", g.is_tree()}};
        auto report = tree_criterion(g);
        out["criterion_applicable"] = report.hypothesis_holds;
        if (report.generated)
            out["generated_by_fibration_automorphisms"] = *report.generated;
        else if (family_flag == "plane")
            out["generated_by_fibration_automorphisms"] = plane_generated_by_fibrations();
        else
            out["generated_by_fibration_automorphisms"] = "refused: no boundary curve <= -3";
        emit(out);
    });

    // -------------------------------------------------------------- plane
    auto* plane = app.add_subcommand("plane", "polynomial plane maps");
    plane->require_subcommand(1);
    std::vector<std::string> map_flags;

    auto* pcompose = plane->add_subcommand("compose", "compose maps left to right");
    pcompose->add_option("--map", map_flags, "map as 'f1, f2'")->required()->expected(-1);
    pcompose->add_option("--field", field_flag);
    pcompose->callback([&] {
        Field k = parse_field_flag(field_flag);
        PolyAut acc = PolyAut::identity(k);
        for (const std::string& m : map_flags) acc = compose(PolyAut::parse(k, m), acc);
        Json out = to_json(acc);
        out["pretty"] = acc.str();
        emit(out);
    });

    auto* pfact = plane->add_subcommand("factorize", "alternating factorization");
    pfact->add_option("--map", map_flags)->required();
    pfact->add_option("--field", field_flag);
    pfact->callback([&] {
        Field k = parse_field_flag(field_flag);
        PolyAut f = PolyAut::parse(k, map_flags.front());
        auto factors = jung_factorize(f);
        Json jf = Json::array();
        for (const JungFactor& fac : factors) {
            Json one = to_json(fac.map);
            one["kind"] = fac.kind == FactorKind::Affine ? "affine" : "triangular";
            one["pretty"] = fac.map.str();
            jf.push_back(std::move(one));
        }
        emit(Json{{"factors", std::move(jf)}, {"word", to_json(to_move_word(factors))}});
    });

    // ---------------------------------------------------------------- uvp
    auto* uvp = app.add_subcommand("uvp", "surfaces uv = P(w)");
    uvp->require_subcommand(1);
    std::string word_flag, poly2_flag;

    auto add_poly_word = [&](CLI::App* cmd, bool with_word) {
        cmd->add_option("--poly", poly_flag, "P(w)")->required();
        cmd->add_option("--field", field_flag);
        if (with_word) cmd->add_option("--word", word_flag, "generator word JSON")->required();
    };

    auto* uapply = uvp->add_subcommand("apply", "coordinate images of a generator word");
    add_poly_word(uapply, true);
    uapply->callback([&] {
        Field k = parse_field_flag(field_flag);
        SurfaceUVP s(Poly1::parse(k, poly_flag, 'w'));
        CoordinateMap m = apply(parse_uvp_word(k, Json::parse(word_flag)), s);
        emit(Json{{"u", m.u.str()}, {"v", m.v.str()}, {"w", m.w.str()}});
    });

    auto* urel = uvp->add_subcommand("relation", "rescaling constant of uv - P(w)");
    add_poly_word(urel, true);
    urel->callback([&] {
        Field k = parse_field_flag(field_flag);
        SurfaceUVP s(Poly1::parse(k, poly_flag, 'w'));
        emit(Json{{"kappa", check_relation(parse_uvp_word(k, Json::parse(word_flag)), s).str()}});
    });

    auto* usp = uvp->add_subcommand("sp", "rescaling symmetries of P");
    add_poly_word(usp, false);
    usp->callback([&] {
        Field k = parse_field_flag(field_flag);
        emit(to_json(compute_sp(SurfaceUVP(Poly1::parse(k, poly_flag, 'w')))));
    });

    auto* ucls = uvp->add_subcommand("classify", "same surface up to line automorphism + unit");
    ucls->add_option("--poly", poly_flag)->required();
    ucls->add_option("--poly2", poly2_flag)->required();
    ucls->add_option("--field", field_flag);
    ucls->callback([&] {
        Field k = parse_field_flag(field_flag);
        bool same = equivalent_surfaces(SurfaceUVP(Poly1::parse(k, poly_flag, 'w')),
                                        SurfaceUVP(Poly1::parse(k, poly2_flag, 'w')));
        emit(Json{{"equivalent", same}});
    });

    auto* unf = uvp->add_subcommand("normalform", "alternating amalgam form");
    add_poly_word(unf, true);
    unf->callback([&] {
        Field k = parse_field_flag(field_flag);
        SurfaceUVP s(Poly1::parse(k, poly_flag, 'w'));
        UVPNormalForm nf = normal_form(parse_uvp_word(k, Json::parse(word_flag)), s);
        Json out{{"word", to_json(nf.word)}, {"uniqueness_asserted", nf.uniqueness_asserted}};
        if (!nf.trailing.empty()) out["trailing"] = nf.trailing;
        emit(out);
    });

    // ----------------------------------------------------------- family23
    auto* fam = app.add_subcommand("family23", "pairs with boundary (0,-1,-2,-3)/(0,-1,-3,-2)");
    fam->require_subcommand(1);
    std::string fam_flag, a_flag, lambda_flag;

    auto* frevert = fam->add_subcommand("revert", "transition at a chosen center");
    frevert->add_option("--family", fam_flag, "I, II, III or IV")->required();
    frevert->add_option("--a", a_flag, "parameter (II, III)");
    frevert->add_option("--lambda", lambda_flag, "center coordinate")->required();
    frevert->add_option("--field", field_flag);
    frevert->callback([&] {
        Field k = parse_field_flag(field_flag);
        auto f = parse_family23(fam_flag);
        if (!f) throw DomainError("unknown family '" + fam_flag + "'");
        std::optional<Scalar> a;
        if (!a_flag.empty()) a = parse_scalar_flag(k, a_flag);
        Pair23 p = make_pair23(*f, a);
        Revert23 r = revert(p, Center23{parse_scalar_flag(k, lambda_flag)});
        Json out{{"source", to_json(p, k)},
                 {"target", to_json(r.target, k)},
                 {"target_class", iso_class_label(r.target)}};
        switch (r.out_range) {
            case LambdaRange::AnyValue: out["lambda_out"] = "any"; break;
            case LambdaRange::Nonzero: out["lambda_out"] = "nonzero"; break;
            case LambdaRange::ZeroOrOne: out["lambda_out"] = "{0,1}"; break;
            case LambdaRange::Fixed: out["lambda_out"] = r.out_value->str(); break;
        }
        emit(out);
    });

    auto* fgraph = fam->add_subcommand("graph", "fibration-class graph of the family");
    fgraph->add_option("--field", field_flag)->required();
    fgraph->add_option("--params", params_flag);
    fgraph->add_flag("--dot", dot);
    fgraph->callback([&] {
        family_flag = "family23";
        FibrationGraph g = build_family_graph();
        if (dot)
            std::cout << g.to_dot();
        else
            emit(to_json(g));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // --help exits cleanly, usage errors with 2
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
