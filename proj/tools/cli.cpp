#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "fmw/builders.hpp"
#include "fmw/ef_game.hpp"
#include "fmw/error.hpp"
#include "fmw/evaluate.hpp"
#include "fmw/exploration.hpp"
#include "fmw/io.hpp"
#include "fmw/kernels.hpp"
#include "fmw/parser.hpp"
#include "fmw/qe.hpp"
#include "fmw/symmetry.hpp"

namespace fmw::cli {

namespace {

using io::Json;

struct Options {
    std::uint64_t seed = 0;
    std::optional<int> cap;
    int rank = kDefaultRank;
    int tuples = kDefaultTupleBound;
    bool verify = false;
    bool text = false;
    std::string out;

    std::string structure, sub, product, base, fiber, fibers, left, right, coloring, target;
    std::string fiber_target, base_target, left_pebbles, right_pebbles;
    std::vector<std::string> formulas, assignments;
    bool with_s = false;
    bool symmetric = false;
    std::optional<int> elementary;
    int arity = 2, colors = 1, size = 1, x_size = 1, max_size = 2;
    bool complete = false;
    std::string property = "A";
};

struct Report {
    Json body;
    int code = kExitOk;
};

using Handler = std::function<Report(const Options&)>;

Structure load_structure(const std::string& path) {
    const Json j = io::read_json_file(path);
    if (j.contains("product")) return io::product_from_json(j).structure;
    return io::structure_from_json(j);
}

ProductStructure load_product(const std::string& path, bool force_s = false) {
    ProductStructure p = io::product_from_json(io::read_json_file(path));
    if (force_s && !p.with_s) p = generalized_product(p.base, p.fibers, true);
    return p;
}

const std::string& single_formula(const Options& o) {
    if (o.formulas.size() != 1) throw InputError("exactly one --formula is required");
    return o.formulas.front();
}

Json names(const Structure& m, const std::vector<int>& idx) {
    Json a = Json::array();
    for (int i : idx) a.push_back(m.name(i));
    return a;
}

std::vector<int> parse_pebbles(const Structure& m, const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(m.index_of(item));
    return out;
}

std::string scope_label(const std::string& params) { return "at truncation (" + params + ")"; }

HypergraphSpec spec_of(const Options& o) {
    HypergraphSpec s{o.arity, o.colors, o.size, o.complete, o.seed};
    s.validate();
    return s;
}

Json hypergraph_meta(const HypergraphSpec& s) {
    return {{"arity", s.arity}, {"colors", s.colors}, {"size", s.size}, {"complete", s.complete}, {"seed", s.seed}};
}

ExtensionProperty property_of(const Options& o) {
    if (o.property == "A") return ExtensionProperty::with_none;
    if (o.property == "A'" || o.property == "A-prime") return ExtensionProperty::colors_only;
    throw InputError("--property must be A or A'");
}

// ---- handlers ----

Report cmd_eval(const Options& o) {
    const Structure m = load_structure(o.structure);
    const Formula f = parse(single_formula(o), m.signature());
    Assignment a;
    for (const auto& s : o.assignments) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw InputError("assignment '" + s + "' is not of the form var=element");
        a[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return {{{"formula", f.to_string()}, {"value", evaluate(m, f, a)}}};
}

Report cmd_parse(const Options& o) {
    const Formula f = o.structure.empty() ? parse(single_formula(o)) : parse(single_formula(o), load_structure(o.structure).signature());
    return {{{"formula", f.to_string()},
             {"free_variables", sorted_free_variables(f)},
             {"quantifier_rank", f.quantifier_rank()}}};
}

Report cmd_product(const Options& o) {
    const auto p = lexicographic_product(load_structure(o.base), load_structure(o.fiber), o.with_s);
    return {io::product_to_json(p)};
}

Report cmd_genproduct(const Options& o) {
    const Structure base = load_structure(o.base);
    const Json fj = io::read_json_file(o.fibers);
    if (!fj.is_object()) throw InputError("fibers file must map base elements to structures");
    std::map<std::string, Structure> fibers;
    for (const auto& [a, s] : fj.items()) fibers.emplace(a, io::structure_from_json(s));
    return {io::product_to_json(generalized_product(base, fibers, o.with_s))};
}

Report cmd_qe(const Options& o) {
    const ProductStructure p = load_product(o.product, true);
    const Formula f = parse(single_formula(o), p.structure.signature());
    EliminationSession session(p, o.cap ? static_cast<std::size_t>(*o.cap) : kDefaultOracleCap);
    const Formula q = session.eliminate_all(f);
    Report r{{{"input", f.to_string()},
              {"output", q.to_string()},
              {"quantifier_free", q.is_quantifier_free()},
              {"added", io::morley_to_json(session.family().added())},
              {"diagrams_expanded", session.stats().diagrams_expanded},
              {"primitive_calls", session.stats().primitive_calls}}};
    if (o.verify) {
        const bool ok = session.verify(f, q);
        r.body["verified"] = ok;
        if (!ok) r.code = kExitNegative;
    }
    return r;
}

Report cmd_qe_witness(const Options& o) {
    const Structure m = load_structure(o.structure);
    const Formula f = parse(single_formula(o), m.signature());
    const auto w = qe_failure_witness(m, f);
    Report r{{{"formula", f.to_string()}, {"matched", w.matched}, {"type_classes", w.type_classes}}};
    if (w.formula) r.body["equivalent"] = w.formula->to_string();
    if (w.certificate) {
        r.body["certificate"] = {m.name(w.certificate->first), m.name(w.certificate->second)};
        r.code = kExitNegative;
    }
    return r;
}

Report cmd_decompose(const Options& o) {
    const ProductStructure p = load_product(o.product);
    const Formula f = parse(single_formula(o), p.structure.signature());
    const auto pairs = decompose_product_formula(p, f, o.cap ? static_cast<std::size_t>(*o.cap) : kDefaultOracleCap);
    Json arr = Json::array();
    for (const auto& [a, b] : pairs) arr.push_back({{"base", a.to_string()}, {"fiber", b.to_string()}});
    return {{{"formula", f.to_string()}, {"variables", sorted_free_variables(f)}, {"pairs", arr}, {"count", pairs.size()}}};
}

Report cmd_morleyize(const Options& o) {
    const Structure m = load_structure(o.structure);
    std::vector<Formula> fs;
    for (const auto& s : o.formulas) fs.push_back(parse(s, m.signature()));
    if (fs.empty()) throw InputError("at least one --formula is required");
    const auto [expanded, ctx] = morleyize(m, fs);
    return {{{"structure", io::structure_to_json(expanded)}, {"added", io::morley_to_json(ctx.added)}}};
}

int cap_or(const Options& o, int fallback) { return o.cap.value_or(fallback); }

Report cmd_autos(const Options& o) {
    const Structure m = load_structure(o.structure);
    const auto a = automorphisms(m, cap_or(o, kDefaultSymmetryCap));
    Json list = Json::array();
    for (const auto& p : a.elements) list.push_back(names(m, p));
    return {{{"count", a.elements.size()}, {"automorphisms", list}, {"group_verified", a.verify_group()}}};
}

Report cmd_orbits(const Options& o) {
    const Structure m = load_structure(o.structure);
    const auto p = orbits(m, cap_or(o, kDefaultSymmetryCap));
    Json list = Json::array();
    for (const auto& orb : p.orbits) list.push_back(names(m, orb));
    return {{{"count", p.count()}, {"orbits", list}}};
}

Report cmd_transitive(const Options& o) {
    const Structure m = load_structure(o.structure);
    const auto w = transitivity_counterexample(m, cap_or(o, kDefaultSymmetryCap));
    Report r{{{"transitive", !w.has_value()}}};
    if (w) {
        r.body["witness"] = {m.name(w->first), m.name(w->second)};
        r.code = kExitNegative;
    }
    return r;
}

Report cmd_symcheck(const Options& o) {
    const Structure sub = load_structure(o.sub), m = load_structure(o.structure);
    const auto v = is_symmetrically_embedded(sub, m, cap_or(o, kDefaultSymmetryCap));
    Report r{{{"holds", v.holds}, {"checked", v.checked}}};
    if (v.witness) {
        Json pairs = Json::array();
        for (std::size_t i = 0; i < v.witness->size(); ++i)
            pairs.push_back({sub.name(static_cast<int>(i)), sub.name((*v.witness)[i])});
        r.body["witness"] = pairs;
    }
    if (!v.holds) r.code = kExitNegative;
    return r;
}

Report cmd_ultrahom(const Options& o) {
    const Structure m = load_structure(o.structure);
    const auto v = is_ultrahomogeneous(m, o.tuples, cap_or(o, kDefaultSymmetryCap));
    Report r{{{"holds", v.holds}, {"max_size", v.max_size}, {"checked", v.checked}}};
    if (v.witness) {
        Json pairs = Json::array();
        for (auto [x, y] : *v.witness) pairs.push_back({m.name(x), m.name(y)});
        r.body["witness"] = pairs;
    }
    if (!v.holds) r.code = kExitNegative;
    return r;
}

Report cmd_efgame(const Options& o) {
    const Structure a = load_structure(o.left), b = load_structure(o.right);
    const auto res = ef_game(a, b, o.rank, parse_pebbles(a, o.left_pebbles), parse_pebbles(b, o.right_pebbles),
                             cap_or(o, kDefaultRoundCap));
    Json trace = Json::array();
    for (const auto& mv : res.trace) {
        const Structure& s = mv.in_first ? a : b;
        const Structure& t = mv.in_first ? b : a;
        trace.push_back({{"round", mv.round},
                         {"structure", mv.in_first ? "left" : "right"},
                         {"spoiler", s.name(mv.spoiler)},
                         {"reply", mv.reply >= 0 ? Json(t.name(mv.reply)) : Json(nullptr)}});
    }
    Report r{{{"rounds", o.rank}, {"winner", to_string(res.winner)}, {"trace", trace}}};
    if (res.winner == Player::spoiler) r.code = kExitNegative;
    return r;
}

Report cmd_kelem(const Options& o) {
    const Structure sub = load_structure(o.sub), m = load_structure(o.structure);
    const auto v = k_elementary_substructure(sub, m, o.rank, o.tuples, cap_or(o, kDefaultRoundCap));
    Report r{{{"holds", v.holds}, {"rank", v.k}, {"tuples", v.max_tuple}, {"checked", v.checked}}};
    if (v.failing_tuple) r.body["failing_tuple"] = names(sub, *v.failing_tuple);
    if (!v.holds) r.code = kExitNegative;
    return r;
}

Report cmd_mutual(const Options& o) {
    const Structure a = load_structure(o.left), b = load_structure(o.right);
    const auto v = mutually_k_embeddable(a, b, o.rank, o.tuples, cap_or(o, kDefaultRoundCap));
    Report r{{{"holds", v.holds}, {"rank", v.k}, {"tuples", v.max_tuple}}};
    r.body["forward"] = v.forward ? names(b, *v.forward) : Json(nullptr);
    r.body["backward"] = v.backward ? names(a, *v.backward) : Json(nullptr);
    if (!v.holds) r.code = kExitNegative;
    return r;
}

Report cmd_gen_hypergraph(const Options& o) {
    const auto spec = spec_of(o);
    Json j = io::structure_to_json(gen_colored_hypergraph(spec));
    j["meta"] = hypergraph_meta(spec);
    return {j};
}

Report cmd_class_check(const Options& o) {
    const Structure m = load_structure(o.structure);
    HypergraphSpec spec{o.arity, o.colors, std::max(1, m.size()), o.complete, o.seed};
    const auto v = check_class_axioms(m, spec);
    Report r{{{"holds", v.holds}, {"class", o.complete ? "D" : "C"}}};
    if (!v.holds) {
        r.body["axiom"] = v.axiom;
        if (!v.symbol.empty()) r.body["symbol"] = v.symbol;
        r.body["tuple"] = names(m, v.tuple);
        r.code = kExitNegative;
    }
    return r;
}

Report cmd_extension_check(const Options& o) {
    const Structure m = load_structure(o.structure);
    HypergraphSpec spec{o.arity, o.colors, std::max(1, m.size()), o.complete, o.seed};
    const auto v = check_extension_property(m, spec, o.x_size, property_of(o),
                                            o.cap ? static_cast<std::size_t>(*o.cap) : kDefaultDemandCap);
    Report r{{{"holds", v.holds},
              {"property", o.property},
              {"checked", v.checked},
              {"scope", scope_label("|M|=" + std::to_string(m.size()) + ", |X|<=" + std::to_string(o.x_size))}}};
    if (v.unmet) {
        Json demand = Json::array();
        for (const auto& [y, c] : v.unmet->colors)
            demand.push_back({{"set", names(m, y)}, {"color", c == 0 ? Json(nullptr) : Json(HypergraphSpec::color_symbol(c))}});
        r.body["unmet"] = {{"x", names(m, v.unmet->x)}, {"demand", demand}};
        r.code = kExitNegative;
    }
    return r;
}

Report cmd_color(const Options& o) {
    const Structure m = load_structure(o.structure);
    return {io::coloring_to_json(color_by_formula(m, parse(single_formula(o), m.signature())))};
}

Report cmd_staircase(const Options& o) {
    const ProductStructure p = load_product(o.product);
    if (!p.constant_fibers()) throw PreconditionError("staircase coloring needs constant fibers");
    std::vector<int> order(static_cast<std::size_t>(p.base.size()));
    for (int i = 0; i < p.base.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    const auto c = staircase_coloring(p, orbit_rank(p.fiber(0)), order);
    Json j = io::coloring_to_json(c);
    Json sizes = Json::object();
    for (int a = 0; a < p.base.size(); ++a) {
        int red = 0;
        for (int e : p.element_at[static_cast<std::size_t>(a)]) red += c.color_of(e) == "red";
        sizes[p.base.name(a)] = red;
    }
    j["red_per_fiber"] = sizes;
    return {j};
}

Json search_json(const Structure& m, const MonochromaticResult& r) {
    Json examined = Json::object();
    for (const auto& [color, n] : r.examined) examined[color] = n;
    Json j{{"found", r.witness.has_value()}, {"examined", examined}};
    if (r.witness) {
        j["witness"] = names(m, *r.witness);
        j["color"] = *r.color;
    }
    return j;
}

Report cmd_find_copy(const Options& o) {
    const Structure m = load_structure(o.structure);
    const Coloring c = io::coloring_from_json(io::read_json_file(o.coloring), m);
    const Structure target = load_structure(o.target);
    MonochromaticOptions opts;
    opts.require_symmetric = o.symmetric;
    opts.require_k_elementary = o.elementary;
    opts.tuple_bound = o.tuples;
    opts.cap = cap_or(o, kDefaultSearchCap);
    const auto r = find_monochromatic_copy(c, target, opts);
    Report rep{search_json(m, r)};
    rep.body["scope"] = scope_label("|M|=" + std::to_string(m.size()) + ", |target|=" + std::to_string(target.size()));
    if (!r.witness) rep.code = kExitNegative;
    return rep;
}

Report cmd_assemble(const Options& o) {
    const ProductStructure p = load_product(o.product);
    const Coloring c = io::coloring_from_json(io::read_json_file(o.coloring), p.structure);
    const auto r = product_of_monochromatic_pieces(p, c, load_structure(o.fiber_target), load_structure(o.base_target),
                                                   cap_or(o, kDefaultSearchCap));
    Report rep{{{"success", r.success},
                {"scope", scope_label("|M|=" + std::to_string(p.base.size()) + ", |N|=" + std::to_string(p.fiber(0).size()))}}};
    if (!r.success) {
        rep.body["failing_stage"] = r.failing_stage;
        rep.code = kExitNegative;
        return rep;
    }
    rep.body["color"] = r.color;
    rep.body["base_piece"] = names(p.base, r.base_piece);
    rep.body["assembled"] = names(p.structure, r.assembled);
    rep.body["f_map_verified"] = r.f_map.has_value();
    return rep;
}

Report cmd_census(const Options& o) {
    const ProductStructure p = load_product(o.product);
    const auto c = orbit_census(p, cap_or(o, kDefaultSearchCap));
    Json orbit_list = Json::array();
    for (std::size_t i = 0; i < c.orbits.size(); ++i) {
        Json touched = Json::object();
        for (auto [cls, n] : c.classes_touched[i]) touched[std::to_string(cls)] = n;
        orbit_list.push_back({{"elements", names(p.structure, c.orbits[i])}, {"fiber_classes", touched}});
    }
    Json classes = Json::object();
    for (int a = 0; a < p.base.size(); ++a) classes[p.base.name(a)] = c.fiber_class[static_cast<std::size_t>(a)];
    return {{{"orbit_count", c.orbits.size()},
             {"transitive", c.transitive()},
             {"consistent", c.consistent},
             {"fiber_classes", classes},
             {"orbits", orbit_list},
             {"scope", scope_label("|P|=" + std::to_string(p.structure.size()))}}};
}

// ---- text rendering ----

void render_text(const Json& j, int indent, std::ostream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                os << pad << k << ":\n";
                render_text(v, indent + 2, os);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                os << pad << "-\n";
                render_text(v, indent + 2, os);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Finite model theory toolkit: products, quantifier elimination, symmetry, colorings", "fmt"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "random seed (recorded in outputs)");
    app.add_option("--cap", o.cap, "size or work cap for the operation");
    app.add_option("--rank", o.rank, "quantifier rank / EF rounds");
    app.add_option("--tuples", o.tuples, "tuple-size bound");
    app.add_flag("--verify", o.verify, "verify results exhaustively");
    app.add_option("--out", o.out, "write the report to a file");
    app.add_flag("--text", o.text, "human-readable output");

    std::map<std::string, Handler> handlers;
    auto sub = [&](const std::string& name, const std::string& desc, Handler h) {
        handlers[name] = std::move(h);
        return app.add_subcommand(name, desc);
    };

    auto* c = sub("eval", "evaluate a formula under an assignment", cmd_eval);
    c->add_option("--structure", o.structure)->required();
    c->add_option("--formula", o.formulas)->required();
    c->add_option("--assign", o.assignments, "var=element");

    c = sub("parse", "parse and print a formula", cmd_parse);
    c->add_option("--formula", o.formulas)->required();
    c->add_option("--structure", o.structure, "check against this structure's signature");

    c = sub("product", "lexicographic product M[N]", cmd_product);
    c->add_option("--base", o.base)->required();
    c->add_option("--fiber", o.fiber)->required();
    c->add_flag("--with-s", o.with_s);

    c = sub("genproduct", "generalized product with per-element fibers", cmd_genproduct);
    c->add_option("--base", o.base)->required();
    c->add_option("--fibers", o.fibers, "JSON object: base element -> structure")->required();
    c->add_flag("--with-s", o.with_s);

    c = sub("qe", "eliminate quantifiers over a product", cmd_qe);
    c->add_option("--product", o.product)->required();
    c->add_option("--formula", o.formulas)->required();

    c = sub("qe-witness", "search a quantifier-free equivalent in one variable", cmd_qe_witness);
    c->add_option("--structure", o.structure)->required();
    c->add_option("--formula", o.formulas)->required();

    c = sub("decompose", "split a product formula into base/fiber pairs", cmd_decompose);
    c->add_option("--product", o.product)->required();
    c->add_option("--formula", o.formulas)->required();

    c = sub("morleyize", "add a relation symbol per formula", cmd_morleyize);
    c->add_option("--structure", o.structure)->required();
    c->add_option("--formula", o.formulas)->required();

    c = sub("autos", "enumerate automorphisms", cmd_autos);
    c->add_option("--structure", o.structure)->required();

    c = sub("orbits", "automorphism orbits", cmd_orbits);
    c->add_option("--structure", o.structure)->required();

    c = sub("transitive", "vertex-transitivity check", cmd_transitive);
    c->add_option("--structure", o.structure)->required();

    c = sub("symcheck", "is a substructure symmetrically embedded", cmd_symcheck);
    c->add_option("--sub", o.sub)->required();
    c->add_option("--structure", o.structure)->required();

    c = sub("ultrahom", "ultrahomogeneity up to --tuples elements", cmd_ultrahom);
    c->add_option("--structure", o.structure)->required();

    c = sub("efgame", "Ehrenfeucht-Fraisse game with --rank rounds", cmd_efgame);
    c->add_option("--left", o.left)->required();
    c->add_option("--right", o.right)->required();
    c->add_option("--left-pebbles", o.left_pebbles, "comma-separated elements");
    c->add_option("--right-pebbles", o.right_pebbles, "comma-separated elements");

    c = sub("kelem", "rank-bounded elementary substructure check", cmd_kelem);
    c->add_option("--sub", o.sub)->required();
    c->add_option("--structure", o.structure)->required();

    c = sub("mutual", "rank-bounded mutual embeddability", cmd_mutual);
    c->add_option("--left", o.left)->required();
    c->add_option("--right", o.right)->required();

    auto hyper_opts = [&](CLI::App* s, bool with_size) {
        s->add_option("--arity", o.arity);
        s->add_option("--colors", o.colors);
        if (with_size) s->add_option("--size", o.size)->required();
        s->add_flag("--complete", o.complete, "class D: every n-set colored");
    };
    c = sub("gen-hypergraph", "random colored hypergraph", cmd_gen_hypergraph);
    hyper_opts(c, true);

    c = sub("class-check", "check the hypergraph class axioms", cmd_class_check);
    c->add_option("--structure", o.structure)->required();
    hyper_opts(c, false);

    c = sub("extension-check", "check the one-point extension property", cmd_extension_check);
    c->add_option("--structure", o.structure)->required();
    c->add_option("--x-size", o.x_size);
    c->add_option("--property", o.property, "A (colors or none) or A' (colors only)");
    hyper_opts(c, false);

    c = sub("color", "two-color by a one-variable formula", cmd_color);
    c->add_option("--structure", o.structure)->required();
    c->add_option("--formula", o.formulas)->required();

    c = sub("staircase", "staircase coloring of a constant-fiber product", cmd_staircase);
    c->add_option("--product", o.product)->required();

    c = sub("find-copy", "monochromatic copy search", cmd_find_copy);
    c->add_option("--structure", o.structure)->required();
    c->add_option("--coloring", o.coloring)->required();
    c->add_option("--target", o.target)->required();
    c->add_flag("--symmetric", o.symmetric);
    c->add_option("--elementary", o.elementary, "require a rank-k elementary copy");

    c = sub("assemble", "assemble a product copy from monochromatic pieces", cmd_assemble);
    c->add_option("--product", o.product)->required();
    c->add_option("--coloring", o.coloring)->required();
    c->add_option("--fiber-target", o.fiber_target)->required();
    c->add_option("--base-target", o.base_target)->required();

    c = sub("census", "orbit census of a product", cmd_census);
    c->add_option("--product", o.product)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        const Report r = handlers.at(name)(o);
        std::ostringstream text;
        if (o.text)
            render_text(r.body, 0, text);
        else
            text << r.body.dump(2) << "\n";
        if (o.out.empty()) {
            out << text.str();
        } else {
            std::ofstream f(o.out);
            if (!f) throw InputError("cannot write '" + o.out + "'");
            f << text.str();
        }
        return r.code;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

}  // namespace fmw::cli
