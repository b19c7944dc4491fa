#include <algorithm>
#include <functional>
#include <set>

#include "fmw/error.hpp"
#include "fmw/structure.hpp"
#include "partial_map.hpp"

namespace fmw {

namespace detail {

RelationPairs relation_pairs(const Structure& src, const Structure& tgt) {
    RelationPairs out;
    for (const auto& [name, arity] : src.signature().symbols()) {
        if (!tgt.signature().contains(name) || tgt.signature().arity(name) != arity)
            throw ContractError("target signature lacks symbol '" + name + "'");
        out.emplace_back(&src.relation(name), &tgt.relation(name));
    }
    return out;
}

bool extends_consistently(const RelationPairs& rels, std::span<const int> assigned, std::span<const int> image) {
    const std::size_t d = assigned.size();
    if (d == 0) return true;
    const int newest = assigned[d - 1];
    Tuple src_t, tgt_t;
    std::vector<std::size_t> pos;
    for (const auto& [rs, rt] : rels) {
        const int r = rs->arity();
        pos.assign(static_cast<std::size_t>(r), 0);
        src_t.assign(static_cast<std::size_t>(r), 0);
        tgt_t.assign(static_cast<std::size_t>(r), 0);
        while (true) {
            bool uses_newest = false;
            for (int i = 0; i < r; ++i) {
                const int e = assigned[pos[static_cast<std::size_t>(i)]];
                uses_newest |= (e == newest);
                src_t[static_cast<std::size_t>(i)] = e;
                tgt_t[static_cast<std::size_t>(i)] = image[static_cast<std::size_t>(e)];
            }
            if (uses_newest && rs->contains(src_t) != rt->contains(tgt_t)) return false;
            int i = r - 1;
            while (i >= 0 && ++pos[static_cast<std::size_t>(i)] == d) pos[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
        }
    }
    return true;
}

std::vector<std::vector<int>> element_profiles(const Structure& m) {
    std::vector<std::vector<int>> prof(static_cast<std::size_t>(m.size()));
    for (const auto& [name, rel] : m.relations()) {
        const int r = rel.arity();
        std::vector<std::vector<int>> counts(static_cast<std::size_t>(m.size()),
                                             std::vector<int>(static_cast<std::size_t>(r) + 1, 0));
        for (const auto& t : rel.tuples()) {
            for (int p = 0; p < r; ++p) counts[static_cast<std::size_t>(t[static_cast<std::size_t>(p)])][static_cast<std::size_t>(p)]++;
            if (std::all_of(t.begin(), t.end(), [&](int v) { return v == t[0]; }))
                counts[static_cast<std::size_t>(t[0])][static_cast<std::size_t>(r)] = 1;
        }
        for (std::size_t e = 0; e < prof.size(); ++e)
            prof[e].insert(prof[e].end(), counts[e].begin(), counts[e].end());
    }
    return prof;
}

}  // namespace detail

Structure induced_substructure_by_index(const Structure& m, const std::vector<int>& subset) {
    std::vector<int> idx = subset;
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw InputError("duplicate element in subset");
    std::vector<int> local(static_cast<std::size_t>(m.size()), -1);
    std::vector<std::string> universe;
    for (int i : idx) {
        if (i < 0 || i >= m.size()) throw InputError("subset index out of range");
        local[static_cast<std::size_t>(i)] = static_cast<int>(universe.size());
        universe.push_back(m.name(i));
    }
    const int n = static_cast<int>(universe.size());
    std::map<std::string, Relation, std::less<>> rels;
    for (const auto& [name, rel] : m.relations()) {
        Relation sub(rel.arity(), n);
        for (const auto& t : rel.tuples()) {
            Tuple lt;
            bool inside = true;
            for (int v : t) {
                if (local[static_cast<std::size_t>(v)] < 0) { inside = false; break; }
                lt.push_back(local[static_cast<std::size_t>(v)]);
            }
            if (inside) sub.insert(lt);
        }
        rels.emplace(name, std::move(sub));
    }
    return Structure(m.signature(), std::move(universe), std::move(rels));
}

Structure induced_substructure(const Structure& m, const std::vector<std::string>& subset) {
    std::vector<int> idx;
    idx.reserve(subset.size());
    for (const auto& e : subset) idx.push_back(m.index_of(e));
    return induced_substructure_by_index(m, idx);
}

bool is_induced_substructure(const Structure& sub, const Structure& m) {
    if (!(sub.signature() == m.signature())) return false;
    for (const auto& e : sub.universe())
        if (!m.find(e)) return false;
    return induced_substructure(m, sub.universe()).named_relations() == sub.named_relations();
}

namespace {

bool injective(const StructureMap& f) {
    if (static_cast<int>(f.mapping.size()) != f.source.size()) return false;
    std::set<int> seen;
    for (int v : f.mapping) {
        if (v < 0 || v >= f.target.size() || !seen.insert(v).second) return false;
    }
    return true;
}

bool preserves_and_reflects(const StructureMap& f) {
    for (const auto& [name, arity] : f.source.signature().symbols()) {
        const Relation& rs = f.source.relation(name);
        const Relation& rt = f.target.relation(name);
        Tuple t(static_cast<std::size_t>(arity), 0), img(static_cast<std::size_t>(arity), 0);
        const int n = f.source.size();
        while (true) {
            for (int i = 0; i < arity; ++i) img[static_cast<std::size_t>(i)] = f.mapping[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
            if (rs.contains(t) != rt.contains(img)) return false;
            int i = arity - 1;
            while (i >= 0 && ++t[static_cast<std::size_t>(i)] == n) t[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
        }
    }
    return true;
}

}  // namespace

bool check_isomorphism(const StructureMap& f) {
    if (!injective(f) || f.source.size() != f.target.size())
        throw ContractError("isomorphism check needs a bijective mapping");
    if (!(f.source.signature() == f.target.signature())) return false;
    return preserves_and_reflects(f);
}

bool check_embedding(const StructureMap& f) {
    if (!injective(f)) throw ContractError("embedding check needs an injective mapping");
    for (const auto& [name, arity] : f.source.signature().symbols())
        if (!f.target.signature().contains(name) || f.target.signature().arity(name) != arity) return false;
    return preserves_and_reflects(f);
}

std::vector<StructureMap> find_embeddings(const Structure& n, const Structure& m, std::optional<std::size_t> limit) {
    if (!(n.signature() == m.signature())) throw InputError("find_embeddings: signatures differ");
    std::vector<StructureMap> out;
    if (n.size() > m.size() || (limit && *limit == 0)) return out;
    const auto rels = detail::relation_pairs(n, m);
    std::vector<int> image(static_cast<std::size_t>(n.size()), -1);
    std::vector<int> assigned;
    std::vector<char> used(static_cast<std::size_t>(m.size()), 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n.size()) {
            out.push_back(StructureMap{n, m, image, MapKind::embedding, 0});
            return !(limit && out.size() >= *limit);
        }
        assigned.push_back(i);
        for (int j = 0; j < m.size(); ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            image[static_cast<std::size_t>(i)] = j;
            if (detail::extends_consistently(rels, assigned, image)) {
                used[static_cast<std::size_t>(j)] = 1;
                const bool go_on = rec(i + 1);
                used[static_cast<std::size_t>(j)] = 0;
                if (!go_on) { assigned.pop_back(); return false; }
            }
        }
        image[static_cast<std::size_t>(i)] = -1;
        assigned.pop_back();
        return true;
    };
    rec(0);
    return out;
}

StructureMap compose(const StructureMap& g, const StructureMap& f) {
    if (!(f.target == g.source)) throw ContractError("compose: maps are not composable");
    std::vector<int> mapping;
    mapping.reserve(f.mapping.size());
    for (int v : f.mapping) mapping.push_back(g.mapping[static_cast<std::size_t>(v)]);
    const MapKind kind = (f.kind == MapKind::isomorphism && g.kind == MapKind::isomorphism) ? MapKind::isomorphism
                                                                                        : MapKind::embedding;
    return StructureMap{f.source, g.target, std::move(mapping), kind, 0};
}

}  // namespace fmw
