#include "fmw/reduct.hpp"

#include <set>

#include "fmw/error.hpp"
#include "fmw/kernels.hpp"
#include "fmw/parser.hpp"

namespace fmw {

Relation define_relation(const Structure& m, const Formula& f, const std::vector<std::string>& vars) {
    if (vars.empty()) throw InputError("a defined relation needs at least one variable");
    const auto table = extension(m, f, vars);
    Relation r(static_cast<int>(vars.size()), m.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i]) r.set(i, true);
    return r;
}

Structure definitional_reduct(const Structure& m, const std::vector<Definition>& defs) {
    Signature::Map symbols;
    std::map<std::string, Relation, std::less<>> rels;
    for (const auto& d : defs) {
        const std::set<std::string> declared(d.variables.begin(), d.variables.end());
        if (declared.size() != d.variables.size())
            throw InputError("definition of '" + d.symbol + "' repeats a variable");
        if (declared != d.formula.free_variables())
            throw InputError("definition of '" + d.symbol + "' declares " + std::to_string(d.variables.size()) +
                             " variable(s) that do not match the formula's free variables");
        check_signature(d.formula, m.signature());
        if (!symbols.emplace(d.symbol, static_cast<int>(d.variables.size())).second)
            throw InputError("symbol '" + d.symbol + "' defined twice");
        rels.emplace(d.symbol, define_relation(m, d.formula, d.variables));
    }
    return Structure(Signature(std::move(symbols)), m.universe(), std::move(rels));
}

}  // namespace fmw
