#include "fmw/product.hpp"

#include <algorithm>

#include "fmw/error.hpp"
#include "fmw/kernels.hpp"

namespace fmw {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\\' || c == '|') out += '\\';
        out += c;
    }
    return out;
}

std::string unescape(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) ++i;
        out += s[i];
    }
    return out;
}

void check_factor(const Structure& m, const Structure& n, const std::string& what) {
    if (m.signature().has_s() || n.signature().has_s())
        throw InputError("factors may not contain the reserved symbol 's'");
    if (!(m.signature() == n.signature())) throw InputError(what + " has a different signature from the base");
}

}  // namespace

std::string pair_id(const std::string& a, const std::string& b) { return "(" + escape(a) + "|" + escape(b) + ")"; }

std::optional<std::pair<std::string, std::string>> split_pair_id(const std::string& id) {
    if (id.size() < 3 || id.front() != '(' || id.back() != ')') return std::nullopt;
    const std::string inner = id.substr(1, id.size() - 2);
    for (std::size_t i = 0; i < inner.size(); ++i) {
        if (inner[i] == '\\') {
            ++i;
            continue;
        }
        if (inner[i] == '|') return std::make_pair(unescape(inner.substr(0, i)), unescape(inner.substr(i + 1)));
    }
    return std::nullopt;
}

bool ProductStructure::constant_fibers() const {
    return std::all_of(fibers.begin(), fibers.end(), [&](const Structure& f) { return f == fibers.front(); });
}

ProductStructure generalized_product(const Structure& m, const std::vector<Structure>& fibers, bool with_s) {
    if (static_cast<int>(fibers.size()) != m.size()) throw InputError("need exactly one fiber per base element");
    for (std::size_t a = 0; a < fibers.size(); ++a)
        check_factor(m, fibers[a], "fiber over '" + m.name(static_cast<int>(a)) + "'");

    ProductStructure p{m, m, fibers, with_s, {}, {}};
    std::vector<std::string> universe;
    p.element_at.resize(fibers.size());
    for (int a = 0; a < m.size(); ++a) {
        const Structure& fa = fibers[static_cast<std::size_t>(a)];
        for (int b = 0; b < fa.size(); ++b) {
            p.element_at[static_cast<std::size_t>(a)].push_back(static_cast<int>(universe.size()));
            p.components.emplace_back(a, b);
            universe.push_back(pair_id(m.name(a), fa.name(b)));
        }
    }
    const int size = static_cast<int>(universe.size());
    std::map<std::string, Relation, std::less<>> rels;
    std::vector<int> t, base_t, fiber_t;
    for (const auto& [name, arity] : m.signature().symbols()) {
        Relation r(arity, size);
        const Relation& rm = m.relation(name);
        t.assign(static_cast<std::size_t>(arity), 0);
        base_t.assign(static_cast<std::size_t>(arity), 0);
        fiber_t.assign(static_cast<std::size_t>(arity), 0);
        for (std::size_t idx = 0; idx < r.table_size(); ++idx) {
            decode_tuple(idx, size, t);
            bool same = true;
            for (int i = 0; i < arity; ++i) {
                const auto [a, b] = p.components[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])];
                base_t[static_cast<std::size_t>(i)] = a;
                fiber_t[static_cast<std::size_t>(i)] = b;
                same = same && a == base_t[0];
            }
            const bool holds = same ? fibers[static_cast<std::size_t>(base_t[0])].relation(name).contains(fiber_t)
                                    : rm.contains(base_t);
            if (holds) r.set(idx, true);
        }
        rels.emplace(name, std::move(r));
    }
    Signature sig = m.signature();
    if (with_s) {
        Relation s(2, size);
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y)
                if (p.components[static_cast<std::size_t>(x)].first == p.components[static_cast<std::size_t>(y)].first)
                    s.insert(std::vector<int>{x, y});
        rels.emplace("s", std::move(s));
        sig = sig.with("s", 2);
    }
    p.structure = Structure(sig, std::move(universe), std::move(rels));
    return p;
}

ProductStructure generalized_product(const Structure& m, const std::map<std::string, Structure>& fibers,
                                     bool with_s) {
    std::vector<Structure> by_index;
    for (int a = 0; a < m.size(); ++a) {
        auto it = fibers.find(m.name(a));
        if (it == fibers.end()) throw InputError("missing fiber for base element '" + m.name(a) + "'");
        by_index.push_back(it->second);
    }
    for (const auto& [key, fiber] : fibers)
        if (!m.find(key)) throw InputError("fiber given for unknown base element '" + key + "'");
    return generalized_product(m, by_index, with_s);
}

ProductStructure lexicographic_product(const Structure& m, const Structure& n, bool with_s) {
    check_factor(m, n, "the fiber structure");
    return generalized_product(m, std::vector<Structure>(static_cast<std::size_t>(m.size()), n), with_s);
}

StructureMap fiber_embedding(const ProductStructure& p, const std::string& a) {
    const int ai = p.base.index_of(a);
    const Structure& fa = p.fiber(ai);
    return StructureMap{fa, p.structure, p.element_at[static_cast<std::size_t>(ai)], MapKind::embedding, 0};
}

std::pair<std::string, std::string> decompose_element(const ProductStructure& p, const std::string& e) {
    auto idx = p.structure.find(e);
    if (!idx) throw ContractError("'" + e + "' is not an element of the product");
    const auto [a, b] = p.components[static_cast<std::size_t>(*idx)];
    return {p.base.name(a), p.fiber(a).name(b)};
}

namespace {

bool admissible_rec(const Formula& f, const ProductStructure& p, const IndexAssignment& a) {
    if (f.kind() == NodeKind::exists || f.kind() == NodeKind::forall)
        throw ContractError("admissibility is defined for quantifier-free formulas");
    if (f.kind() == NodeKind::atom) {
        if (f.symbol() == "s") return true;
        int first = -1;
        for (const auto& v : f.args()) {
            auto it = a.find(v);
            if (it == a.end()) throw ContractError("variable '" + v + "' is not assigned");
            const int base = p.components[static_cast<std::size_t>(it->second)].first;
            if (first < 0)
                first = base;
            else if (base != first)
                return true;
        }
        return false;
    }
    for (const auto& c : f.children())
        if (!admissible_rec(c, p, a)) return false;
    return true;
}

}  // namespace

bool is_admissible(const Formula& f, const ProductStructure& p, const IndexAssignment& a) {
    for (const auto& [v, e] : a)
        if (e < 0 || e >= p.structure.size()) throw ContractError("assigned element for '" + v + "' is not in the product");
    return admissible_rec(f, p, a);
}

bool is_admissible(const Formula& f, const ProductStructure& p, const Assignment& a) {
    IndexAssignment idx;
    for (const auto& [v, e] : a) {
        auto i = p.structure.find(e);
        if (!i) throw ContractError("element '" + e + "' has no pair decomposition in this product");
        idx.emplace(v, *i);
    }
    return admissible_rec(f, p, idx);
}

}  // namespace fmw
