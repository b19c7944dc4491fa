#include <algorithm>
#include <map>

#include "fmw/error.hpp"
#include "fmw/kernels.hpp"
#include "fmw/qe.hpp"

namespace fmw {

QeWitness qe_failure_witness(const Structure& p, const Formula& phi) {
    const auto vars = sorted_free_variables(phi);
    if (vars.size() != 1) throw ContractError("the witness search needs exactly one free variable");
    const std::string& x = vars.front();
    std::vector<Formula> atoms;
    for (const auto& [sym, arity] : p.signature().symbols())
        atoms.push_back(atom(sym, std::vector<std::string>(static_cast<std::size_t>(arity), x)));

    const auto ext = extension(p, phi, vars);
    struct Class {
        int first_true = -1;
        int first_false = -1;
        int first = -1;
    };
    std::map<std::vector<std::uint8_t>, Class> classes;
    for (int e = 0; e < p.size(); ++e) {
        std::vector<std::uint8_t> bits;
        for (const auto& [sym, arity] : p.signature().symbols())
            bits.push_back(p.holds(sym, std::vector<int>(static_cast<std::size_t>(arity), e)));
        auto& c = classes[bits];
        if (c.first < 0) c.first = e;
        int& slot = ext[static_cast<std::size_t>(e)] ? c.first_true : c.first_false;
        if (slot < 0) slot = e;
    }

    QeWitness out;
    out.type_classes = classes.size();
    const Class* split = nullptr;
    for (const auto& [bits, c] : classes)
        if (c.first_true >= 0 && c.first_false >= 0 && (!split || c.first < split->first)) split = &c;
    if (split) {
        out.certificate = std::make_pair(split->first_true, split->first_false);
        return out;
    }

    out.matched = true;
    const bool none = std::none_of(ext.begin(), ext.end(), [](std::uint8_t b) { return b != 0; });
    const bool all = std::all_of(ext.begin(), ext.end(), [](std::uint8_t b) { return b != 0; });
    if (none || all) {
        out.formula = all ? equal(x, x) : negation(equal(x, x));
        return out;
    }
    std::vector<Formula> ds;
    for (const auto& [bits, c] : classes) {
        if (c.first_true < 0) continue;
        std::vector<Formula> ls;
        for (std::size_t i = 0; i < atoms.size(); ++i) ls.push_back(bits[i] ? atoms[i] : negation(atoms[i]));
        ds.push_back(conj(std::move(ls)));
    }
    out.formula = disj(std::move(ds));
    return out;
}

std::vector<FormulaPair> decompose_product_formula(const ProductStructure& p, const Formula& phi,
                                                   std::size_t oracle_cap) {
    if (!p.constant_fibers()) throw PreconditionError("decomposition needs constant fibers");
    const ProductStructure ps = p.with_s ? p : lexicographic_product(p.base, p.fiber(0), true);
    EliminationSession session(ps, oracle_cap);
    const Formula q = session.eliminate_all(phi);
    const auto& family = session.family();
    const Structure& m = p.base;
    const Structure& n = p.fiber(0);

    auto vars = sorted_free_variables(phi);
    std::vector<FormulaPair> out;
    for (const auto& part : set_partitions(vars)) {
        const Formula b = fold_under_diagram(q, part);
        if (b.is_false()) continue;
        for (const auto& clause : dnf_clauses(b)) {
            std::vector<Formula> m_side{EqualityDiagram(part).render()}, n_side;
            for (const auto& l : clause) {
                const auto vs = l.variables();
                const bool one_block = std::all_of(vs.begin(), vs.end(), [&](const std::string& v) {
                    return part.block(v) == part.block(vs.front());
                });
                (l.is_equal || one_block ? n_side : m_side).push_back(family.expand(l.to_formula()));
            }
            FormulaPair fp{simplify(conj(std::move(m_side))), simplify(conj(std::move(n_side)))};
            const auto e1 = extension(m, fp.first, vars);
            const auto e2 = extension(n, fp.second, vars);
            const auto nonzero = [](const std::vector<std::uint8_t>& e) {
                return std::any_of(e.begin(), e.end(), [](std::uint8_t b) { return b != 0; });
            };
            if (!nonzero(e1) || !nonzero(e2)) continue;
            if (std::find(out.begin(), out.end(), fp) == out.end()) out.push_back(std::move(fp));
        }
    }
    return out;
}

}  // namespace fmw
