#include <algorithm>

#include "fmw/ef_game.hpp"
#include "fmw/error.hpp"
#include "fmw/exploration.hpp"
#include "fmw/kernels.hpp"
#include "fmw/symmetry.hpp"

namespace fmw {

MonochromaticResult find_monochromatic_copy(const Coloring& c, const Structure& target,
                                            const MonochromaticOptions& options) {
    c.validate();
    const Structure& m = c.structure;
    if (m.size() > options.cap)
        throw ResourceError("structure has " + std::to_string(m.size()) + " elements, above the search cap of " +
                            std::to_string(options.cap));
    if (!(target.signature() == m.signature())) throw InputError("target signature differs from the structure's");
    const int k = target.size();
    const int sym_cap = std::max(kDefaultSymmetryCap, m.size());

    MonochromaticResult out;
    for (const auto& color : c.palette) {
        if (options.only_color && *options.only_color != color) continue;
        const auto cls = c.class_of(color);
        if (k > static_cast<int>(cls.size())) {
            out.examined.emplace_back(color, 0);
            continue;
        }
        const SubsetPredicate accept = [&](std::span<const int> pick) {
            std::vector<int> elems;
            for (int i : pick) elems.push_back(cls[static_cast<std::size_t>(i)]);
            const Structure sub = induced_substructure_by_index(m, elems);
            if (find_embeddings(target, sub, 1).empty()) return false;
            if (options.require_symmetric && !is_symmetrically_embedded(sub, m, sym_cap).holds) return false;
            if (options.require_k_elementary &&
                !k_elementary_substructure(sub, m, *options.require_k_elementary, options.tuple_bound).holds)
                return false;
            return true;
        };
        const int n = static_cast<int>(cls.size());
        const auto r = options.mode == SearchMode::serial ? first_subset_serial(n, k, accept)
                                                          : first_subset_parallel(n, k, accept);
        out.examined.emplace_back(color, r.examined);
        if (r.witness) {
            std::vector<int> elems;
            for (int i : *r.witness) elems.push_back(cls[static_cast<std::size_t>(i)]);
            out.witness = std::move(elems);
            out.color = color;
            return out;
        }
    }
    return out;
}

namespace {

// target -> sub isomorphism, as target index -> index in `elements`.
std::vector<int> copy_map(const Structure& target, const Structure& host, const std::vector<int>& elements) {
    const auto sub = induced_substructure_by_index(host, elements);
    const auto maps = find_embeddings(target, sub, 1);
    if (maps.empty()) throw ContractError("piece is not a copy of its target");
    return maps.front().mapping;
}

}  // namespace

AssemblyResult product_of_monochromatic_pieces(const ProductStructure& p, const Coloring& c,
                                               const Structure& fiber_target, const Structure& base_target,
                                               int cap) {
    if (!p.constant_fibers()) throw PreconditionError("assembly needs constant fibers");
    c.validate();
    if (c.structure.size() != p.structure.size()) throw InputError("coloring does not match the product");
    const int nb = p.base.size();
    MonochromaticOptions opts;
    opts.cap = cap;

    AssemblyResult out;
    for (int a = 0; a < nb; ++a) {
        Coloring fc{p.fiber(a), {}, c.palette};
        for (int e : p.element_at[static_cast<std::size_t>(a)]) fc.colors.push_back(c.color_of(e));
        const auto r = find_monochromatic_copy(fc, fiber_target, opts);
        if (!r.witness) {
            out.failing_stage = "fiber " + p.base.name(a);
            return out;
        }
        out.fiber_pieces.push_back(*r.witness);
        out.base_colors.push_back(*r.color);
    }
    const Coloring base_coloring{p.base, out.base_colors, c.palette};
    const auto rb = find_monochromatic_copy(base_coloring, base_target, opts);
    if (!rb.witness) {
        out.failing_stage = "base";
        return out;
    }
    out.base_piece = *rb.witness;
    out.color = *rb.color;

    for (int a : out.base_piece)
        for (int b : out.fiber_pieces[static_cast<std::size_t>(a)])
            out.assembled.push_back(p.element_at[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    std::sort(out.assembled.begin(), out.assembled.end());

    // F((x,y)) = (f(x), g_f(x)(y)).
    const ProductStructure pattern = lexicographic_product(base_target, fiber_target, p.with_s);
    const auto f = copy_map(base_target, p.base, out.base_piece);
    std::vector<std::vector<int>> g(static_cast<std::size_t>(nb));
    for (int a : out.base_piece)
        g[static_cast<std::size_t>(a)] = copy_map(fiber_target, p.fiber(a), out.fiber_pieces[static_cast<std::size_t>(a)]);
    std::vector<int> mapping;
    for (const auto& [x, y] : pattern.components) {
        const int a = out.base_piece[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])];
        const int b = out.fiber_pieces[static_cast<std::size_t>(a)]
                                      [static_cast<std::size_t>(g[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)])];
        const int e = p.element_at[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        mapping.push_back(static_cast<int>(std::lower_bound(out.assembled.begin(), out.assembled.end(), e) -
                                           out.assembled.begin()));
    }
    StructureMap fmap{pattern.structure, induced_substructure_by_index(p.structure, out.assembled), mapping,
                      MapKind::isomorphism, 0};
    if (!check_isomorphism(fmap)) {
        out.failing_stage = "verification";
        return out;
    }
    out.f_map = std::move(fmap);
    out.success = true;
    return out;
}

OrbitCensus orbit_census(const ProductStructure& p, int cap) {
    OrbitCensus out;
    std::vector<int> reps;
    for (int a = 0; a < p.base.size(); ++a) {
        const Structure& n = p.fiber(a);
        int cls = -1;
        for (std::size_t i = 0; i < reps.size() && cls < 0; ++i) {
            const Structure& r = p.fiber(reps[i]);
            if (r.size() == n.size() && !find_embeddings(n, r, 1).empty()) cls = static_cast<int>(i);
        }
        if (cls < 0) {
            cls = static_cast<int>(reps.size());
            reps.push_back(a);
        }
        out.fiber_class.push_back(cls);
    }
    const auto o = orbits(p.structure, cap);
    out.orbits = o.orbits;
    for (const auto& orbit : o.orbits) {
        std::map<int, int> touched;
        for (int e : orbit) ++touched[out.fiber_class[static_cast<std::size_t>(p.components[static_cast<std::size_t>(e)].first)]];
        if (touched.size() > 1) out.consistent = false;
        out.classes_touched.push_back(std::move(touched));
    }
    return out;
}

}  // namespace fmw
