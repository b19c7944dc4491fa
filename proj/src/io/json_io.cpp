#include "fmw/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "fmw/error.hpp"

namespace fmw::io {

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& what) {
    if (!j.is_object()) throw InputError(what + " must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw InputError("unknown key '" + key + "' in " + what);
}

template <class F>
auto guarded(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed " + what + ": " + e.what());
    }
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

Structure structure_from_json(const Json& j) {
    reject_unknown(j, {"signature", "universe", "relations", "meta"}, "structure");
    return guarded("structure", [&] {
        Signature::Map sig;
        for (const auto& [name, arity] : j.at("signature").items()) sig[name] = arity.get<int>();
        const auto universe = j.at("universe").get<std::vector<std::string>>();
        Structure::NamedTuples rels;
        if (j.contains("relations")) {
            if (!j.at("relations").is_object()) throw InputError("relations must be a JSON object");
            for (const auto& [name, tuples] : j.at("relations").items())
                rels[name] = tuples.get<std::vector<std::vector<std::string>>>();
        }
        return Structure(Signature(std::move(sig)), universe, rels);
    });
}

Json structure_to_json(const Structure& m) {
    Json j;
    j["signature"] = Json::object();
    for (const auto& [name, arity] : m.signature().symbols()) j["signature"][name] = arity;
    j["universe"] = m.universe();
    j["relations"] = Json::object();
    for (auto [name, tuples] : m.named_relations()) {
        std::sort(tuples.begin(), tuples.end());
        j["relations"][name] = tuples;
    }
    return j;
}

ProductStructure product_from_json(const Json& j) {
    reject_unknown(j, {"signature", "universe", "relations", "meta", "product"}, "product document");
    if (!j.contains("product")) throw InputError("product document lacks the 'product' key");
    const Json& pj = j.at("product");
    reject_unknown(pj, {"base", "fibers", "with_s"}, "product");
    ProductStructure p = guarded("product", [&] {
        const Structure base = structure_from_json(pj.at("base"));
        std::map<std::string, Structure> fibers;
        if (!pj.at("fibers").is_object()) throw InputError("fibers must be an object keyed by base element");
        for (const auto& [a, fj] : pj.at("fibers").items()) fibers.emplace(a, structure_from_json(fj));
        const bool with_s = pj.value("with_s", false);
        return generalized_product(base, fibers, with_s);
    });
    if (j.contains("universe") || j.contains("relations") || j.contains("signature")) {
        Json flat = j;
        flat.erase("product");
        if (!(structure_from_json(flat) == p.structure))
            throw InputError("product structure does not match the one built from base and fibers");
    }
    return p;
}

Json product_to_json(const ProductStructure& p) {
    Json j = structure_to_json(p.structure);
    Json fibers = Json::object();
    for (int a = 0; a < p.base.size(); ++a) fibers[p.base.name(a)] = structure_to_json(p.fiber(a));
    j["product"] = {{"base", structure_to_json(p.base)}, {"fibers", fibers}, {"with_s", p.with_s}};
    return j;
}

Coloring coloring_from_json(const Json& j, const Structure& m) {
    reject_unknown(j, {"colors", "palette", "meta"}, "coloring");
    return guarded("coloring", [&] {
        Coloring c{m, std::vector<std::string>(static_cast<std::size_t>(m.size()))};
        const bool fixed = j.contains("palette");
        if (fixed) c.palette = j.at("palette").get<std::vector<std::string>>();
        std::vector<char> seen(static_cast<std::size_t>(m.size()), 0);
        for (const auto& [elem, color] : j.at("colors").items()) {
            const int i = m.index_of(elem);
            c.colors[static_cast<std::size_t>(i)] = color.get<std::string>();
            seen[static_cast<std::size_t>(i)] = 1;
            const auto& col = c.colors[static_cast<std::size_t>(i)];
            if (std::find(c.palette.begin(), c.palette.end(), col) == c.palette.end()) {
                if (fixed) throw InputError("color '" + col + "' of " + elem + " is not in the palette");
                c.palette.push_back(col);
            }
        }
        for (int i = 0; i < m.size(); ++i)
            if (!seen[static_cast<std::size_t>(i)]) throw InputError("element " + m.name(i) + " has no color");
        return c;
    });
}

Json coloring_to_json(const Coloring& c) {
    Json colors = Json::object();
    for (int i = 0; i < c.structure.size(); ++i) colors[c.structure.name(i)] = c.color_of(i);
    return {{"colors", colors}};
}

Json morley_to_json(const std::vector<MorleySymbol>& added) {
    Json out = Json::array();
    for (const auto& s : added)
        out.push_back({{"symbol", s.symbol}, {"variables", s.variables}, {"definition", s.definition.to_string()}});
    return out;
}

}  // namespace fmw::io
