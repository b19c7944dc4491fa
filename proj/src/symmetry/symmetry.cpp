#include "fmw/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "../structures/partial_map.hpp"
#include "fmw/error.hpp"

namespace fmw {

namespace {

void require_cap(const Structure& m, int cap) {
    if (m.size() > cap)
        throw ResourceError("structure has " + std::to_string(m.size()) + " elements, above the cap of " +
                            std::to_string(cap));
}

// Backtracking over bijections m -> m extending `fixed`; calls `found` for
// each automorphism until it returns false.
class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Structure& m)
        : m_(m), rels_(detail::relation_pairs(m, m)), profiles_(detail::element_profiles(m)) {}

    void run(const std::vector<std::pair<int, int>>& fixed, const std::function<bool(const Permutation&)>& found) {
        const int n = m_.size();
        std::vector<int> order, target(static_cast<std::size_t>(n), -1);
        std::vector<char> in_order(static_cast<std::size_t>(n), 0);
        for (auto [x, y] : fixed) {
            if (x < 0 || x >= n || y < 0 || y >= n) throw ContractError("partial map index out of range");
            if (in_order[static_cast<std::size_t>(x)]) {
                if (target[static_cast<std::size_t>(x)] != y) return;
                continue;
            }
            in_order[static_cast<std::size_t>(x)] = 1;
            target[static_cast<std::size_t>(x)] = y;
            order.push_back(x);
        }
        for (int x = 0; x < n; ++x)
            if (!in_order[static_cast<std::size_t>(x)]) order.push_back(x);

        Permutation image(static_cast<std::size_t>(n), -1);
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        std::vector<int> assigned;
        std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
            if (depth == order.size()) return found(image);
            const int x = order[depth];
            assigned.push_back(x);
            const int forced = target[static_cast<std::size_t>(x)];
            for (int y = forced >= 0 ? forced : 0; y < n; ++y) {
                if (used[static_cast<std::size_t>(y)] ||
                    profiles_[static_cast<std::size_t>(x)] != profiles_[static_cast<std::size_t>(y)]) {
                    if (forced >= 0) break;
                    continue;
                }
                image[static_cast<std::size_t>(x)] = y;
                if (detail::extends_consistently(rels_, assigned, image)) {
                    used[static_cast<std::size_t>(y)] = 1;
                    const bool go_on = rec(depth + 1);
                    used[static_cast<std::size_t>(y)] = 0;
                    if (!go_on) {
                        image[static_cast<std::size_t>(x)] = -1;
                        assigned.pop_back();
                        return false;
                    }
                }
                if (forced >= 0) break;
            }
            image[static_cast<std::size_t>(x)] = -1;
            assigned.pop_back();
            return true;
        };
        rec(0);
    }

private:
    const Structure& m_;
    detail::RelationPairs rels_;
    std::vector<std::vector<int>> profiles_;
};

Permutation compose_perm(const Permutation& g, const Permutation& f) {
    Permutation out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[static_cast<std::size_t>(f[i])];
    return out;
}

Permutation inverse_perm(const Permutation& f) {
    Permutation out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
    return out;
}

bool is_automorphism(const Structure& m, const Permutation& p) {
    if (static_cast<int>(p.size()) != m.size()) return false;
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= m.size() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return check_isomorphism(StructureMap{m, m, p, MapKind::isomorphism, 0});
}

}  // namespace

bool AutomorphismSet::verify_group() const {
    const std::set<Permutation> all(elements.begin(), elements.end());
    Permutation id(static_cast<std::size_t>(structure.size()));
    std::iota(id.begin(), id.end(), 0);
    if (!all.count(id)) return false;
    for (const auto& f : elements) {
        if (!is_automorphism(structure, f)) return false;
        if (!all.count(inverse_perm(f))) return false;
        for (const auto& g : elements)
            if (!all.count(compose_perm(g, f))) return false;
    }
    return true;
}

AutomorphismSet automorphisms(const Structure& m, int cap) {
    require_cap(m, cap);
    AutomorphismSet out{m, {}};
    AutomorphismSearch(m).run({}, [&](const Permutation& p) {
        out.elements.push_back(p);
        return true;
    });
    return out;
}

std::optional<Permutation> extend_to_automorphism(const Structure& m, const std::vector<std::pair<int, int>>& partial) {
    std::optional<Permutation> out;
    AutomorphismSearch(m).run(partial, [&](const Permutation& p) {
        out = p;
        return false;
    });
    return out;
}

OrbitPartition orbits(const Structure& m, int cap) {
    require_cap(m, cap);
    const int n = m.size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    AutomorphismSearch search(m);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (find(x) == find(y)) continue;
            search.run({{x, y}}, [&](const Permutation& p) {
                // Every orbit of this automorphism is inside one orbit of the group.
                for (int i = 0; i < n; ++i) {
                    const int a = find(i), b = find(p[static_cast<std::size_t>(i)]);
                    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
                }
                return false;
            });
        }
    }
    OrbitPartition out;
    out.orbit_of.assign(static_cast<std::size_t>(n), -1);
    std::map<int, int> root_to_orbit;
    for (int x = 0; x < n; ++x) {
        const int r = find(x);
        auto [it, fresh] = root_to_orbit.emplace(r, static_cast<int>(out.orbits.size()));
        if (fresh) out.orbits.emplace_back();
        out.orbits[static_cast<std::size_t>(it->second)].push_back(x);
        out.orbit_of[static_cast<std::size_t>(x)] = it->second;
    }
    return out;
}

bool is_transitive(const Structure& m, int cap) { return orbits(m, cap).count() == 1; }

std::optional<std::pair<int, int>> transitivity_counterexample(const Structure& m, int cap) {
    const auto o = orbits(m, cap);
    if (o.count() <= 1) return std::nullopt;
    return std::make_pair(o.orbits[0][0], o.orbits[1][0]);
}

EmbeddingVerdict is_symmetrically_embedded(const Structure& sub, const Structure& m, int cap) {
    if (!is_induced_substructure(sub, m)) throw PreconditionError("the first structure is not an induced substructure of the second");
    require_cap(m, cap);
    EmbeddingVerdict v;
    std::vector<int> where;
    for (const auto& e : sub.universe()) where.push_back(m.index_of(e));
    for (const auto& sigma : automorphisms(sub, cap).elements) {
        ++v.checked;
        std::vector<std::pair<int, int>> partial;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            partial.emplace_back(where[i], where[static_cast<std::size_t>(sigma[i])]);
        if (!extend_to_automorphism(m, partial)) {
            v.holds = false;
            v.witness = sigma;
            return v;
        }
    }
    return v;
}

UltrahomogeneityVerdict is_ultrahomogeneous(const Structure& m, int max_size, int cap) {
    require_cap(m, cap);
    UltrahomogeneityVerdict v;
    v.max_size = max_size;
    const int n = m.size();
    const auto rels = detail::relation_pairs(m, m);
    std::vector<int> image(static_cast<std::size_t>(n), -1), assigned;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    // Domains are increasing sequences; images are arbitrary injective sequences.
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (!assigned.empty()) {
            ++v.checked;
            std::vector<std::pair<int, int>> partial;
            for (int x : assigned) partial.emplace_back(x, image[static_cast<std::size_t>(x)]);
            if (!extend_to_automorphism(m, partial)) {
                v.holds = false;
                v.witness = partial;
                return false;
            }
        }
        if (static_cast<int>(assigned.size()) == max_size) return true;
        for (int x = from; x < n; ++x) {
            assigned.push_back(x);
            for (int y = 0; y < n; ++y) {
                if (used[static_cast<std::size_t>(y)]) continue;
                image[static_cast<std::size_t>(x)] = y;
                if (!detail::extends_consistently(rels, assigned, image)) continue;
                used[static_cast<std::size_t>(y)] = 1;
                const bool go_on = rec(x + 1);
                used[static_cast<std::size_t>(y)] = 0;
                if (!go_on) return false;
            }
            image[static_cast<std::size_t>(x)] = -1;
            assigned.pop_back();
        }
        return true;
    };
    rec(0);
    return v;
}

StructureMap lift_automorphism(const ProductStructure& p, const Permutation& sigma) {
    if (!is_automorphism(p.base, sigma)) throw ContractError("sigma is not an automorphism of the base");
    if (!p.constant_fibers()) throw PreconditionError("automorphism lifts need constant fibers");
    Permutation lifted(static_cast<std::size_t>(p.structure.size()));
    for (std::size_t e = 0; e < lifted.size(); ++e) {
        const auto [a, b] = p.components[e];
        lifted[e] = p.element_at[static_cast<std::size_t>(sigma[static_cast<std::size_t>(a)])][static_cast<std::size_t>(b)];
    }
    StructureMap f{p.structure, p.structure, lifted, MapKind::isomorphism, 0};
    if (!check_isomorphism(f)) throw ContractError("lifted map failed the automorphism check");
    return f;
}

StructureMap fiber_isomorphism_from_automorphism(const ProductStructure& p, const Permutation& tau, int element) {
    if (!p.with_s) throw ContractError("fiber isomorphisms need the s-expanded product");
    if (!is_automorphism(p.structure, tau)) throw ContractError("tau is not an automorphism of the product");
    const int a1 = p.components[static_cast<std::size_t>(element)].first;
    const int a2 = p.components[static_cast<std::size_t>(tau[static_cast<std::size_t>(element)])].first;
    std::vector<int> mapping;
    for (int e : p.element_at[static_cast<std::size_t>(a1)]) {
        const auto [a, b] = p.components[static_cast<std::size_t>(tau[static_cast<std::size_t>(e)])];
        if (a != a2) throw ContractError("tau splits an s-class");
        mapping.push_back(b);
    }
    if (p.fiber(a1).size() != p.fiber(a2).size()) throw ContractError("tau does not map the s-class onto an s-class");
    StructureMap f{p.fiber(a1), p.fiber(a2), mapping, MapKind::isomorphism, 0};
    if (!check_isomorphism(f)) throw ContractError("induced fiber map is not an isomorphism");
    return f;
}

}  // namespace fmw
