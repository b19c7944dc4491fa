#include <algorithm>
#include <numeric>

#include "fmw/error.hpp"
#include "fmw/exploration.hpp"
#include "fmw/kernels.hpp"
#include "fmw/symmetry.hpp"

namespace fmw {

std::vector<int> Coloring::class_of(const std::string& color) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == color) out.push_back(static_cast<int>(i));
    return out;
}

void Coloring::validate() const {
    if (static_cast<int>(colors.size()) != structure.size()) throw InputError("coloring is not total on the universe");
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (std::find(palette.begin(), palette.end(), colors[i]) == palette.end())
            throw InputError("element " + structure.name(static_cast<int>(i)) + " has color '" + colors[i] +
                             "' outside the palette");
}

Coloring uniform_coloring(const Structure& m, const std::string& color) {
    Coloring c{m, std::vector<std::string>(static_cast<std::size_t>(m.size()), color)};
    if (std::find(c.palette.begin(), c.palette.end(), color) == c.palette.end()) c.palette.push_back(color);
    return c;
}

Coloring color_by_formula(const Structure& m, const Formula& phi) {
    const auto vars = sorted_free_variables(phi);
    if (vars.size() != 1) throw ContractError("coloring formula must have exactly one free variable");
    const auto ext = extension(m, phi, vars);
    Coloring c{m, {}};
    for (auto b : ext) c.colors.push_back(b ? "blue" : "red");
    return c;
}

std::vector<int> orbit_rank(const Structure& n) { return orbits(n, std::max(kDefaultSymmetryCap, n.size())).orbit_of; }

Coloring staircase_coloring(const ProductStructure& p, const std::vector<int>& fiber_rank,
                            const std::vector<int>& base_order) {
    if (!p.constant_fibers()) throw PreconditionError("staircase coloring needs constant fibers");
    const int nb = p.base.size();
    const int nf = p.fiber(0).size();
    if (static_cast<int>(fiber_rank.size()) != nf) throw InputError("fiber rank must cover every fiber element");
    if (std::any_of(fiber_rank.begin(), fiber_rank.end(), [](int r) { return r < 0; }))
        throw InputError("fiber ranks must be non-negative");
    std::vector<int> position(static_cast<std::size_t>(nb), -1);
    if (static_cast<int>(base_order.size()) != nb) throw InputError("base order must list every base element");
    for (std::size_t i = 0; i < base_order.size(); ++i) {
        const int a = base_order[i];
        if (a < 0 || a >= nb || position[static_cast<std::size_t>(a)] >= 0)
            throw InputError("base order is not a permutation of the base");
        position[static_cast<std::size_t>(a)] = static_cast<int>(i);
    }
    Coloring c{p.structure, {}};
    for (const auto& [a, b] : p.components)
        c.colors.push_back(fiber_rank[static_cast<std::size_t>(b)] <= position[static_cast<std::size_t>(a)] ? "red" : "blue");
    return c;
}

}  // namespace fmw
