#include <algorithm>
#include <random>

#include "fmw/error.hpp"
#include "fmw/exploration.hpp"

namespace fmw {

namespace {

// Advances c to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

template <class F>
void for_each_subset(int n, int k, F&& f) {
    if (k > n || k < 0) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    do f(static_cast<const std::vector<int>&>(c));
    while (next_combination(c, n));
}

// Color (1..c) of a set of distinct elements, 0 when uncolored.
int set_color(const Structure& m, const HypergraphSpec& spec, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    for (int i = 1; i <= spec.colors; ++i)
        if (m.holds(HypergraphSpec::color_symbol(i), s)) return i;
    return 0;
}

void paint(std::map<std::string, Relation, std::less<>>& rels, std::vector<int> s, int color) {
    if (color == 0) return;
    auto& r = rels.at(HypergraphSpec::color_symbol(color));
    std::sort(s.begin(), s.end());
    do r.insert(s);
    while (std::next_permutation(s.begin(), s.end()));
}

int draw_color(std::mt19937_64& rng, const HypergraphSpec& spec) {
    std::uniform_int_distribution<int> dist(spec.complete ? 1 : 0, spec.colors);
    return dist(rng);
}

std::map<std::string, Relation, std::less<>> empty_tables(const HypergraphSpec& spec, int size) {
    std::map<std::string, Relation, std::less<>> rels;
    for (int i = 1; i <= spec.colors; ++i) rels.emplace(HypergraphSpec::color_symbol(i), Relation(spec.arity, size));
    return rels;
}

std::vector<std::string> numbered(int size) {
    std::vector<std::string> u;
    for (int i = 0; i < size; ++i) u.push_back(std::to_string(i));
    return u;
}

Structure generate(const HypergraphSpec& spec, std::mt19937_64& rng) {
    auto rels = empty_tables(spec, spec.size);
    for_each_subset(spec.size, spec.arity, [&](const std::vector<int>& s) { paint(rels, s, draw_color(rng, spec)); });
    return Structure(spec.signature(), numbered(spec.size), std::move(rels));
}

void require_signature(const Structure& m, const HypergraphSpec& spec) {
    spec.validate();
    if (!(m.signature() == spec.signature()))
        throw InputError("structure signature does not match R_1..R_" + std::to_string(spec.colors) + " of arity " +
                         std::to_string(spec.arity));
}

}  // namespace

void HypergraphSpec::validate() const {
    if (arity < 2) throw InputError("hypergraph arity must be at least 2");
    if (colors < 1) throw InputError("at least one color is needed");
    if (size < 1) throw InputError("hypergraph size must be at least 1");
}

Signature HypergraphSpec::signature() const {
    Signature::Map m;
    for (int i = 1; i <= colors; ++i) m[color_symbol(i)] = arity;
    return Signature(std::move(m));
}

Structure gen_colored_hypergraph(const HypergraphSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    return generate(spec, rng);
}

AxiomVerdict check_class_axioms(const Structure& m, const HypergraphSpec& spec) {
    require_signature(m, spec);
    AxiomVerdict v;
    auto fail = [&](std::string axiom, std::string symbol, std::vector<int> t) {
        v.holds = false;
        v.axiom = std::move(axiom);
        v.symbol = std::move(symbol);
        v.tuple = std::move(t);
    };
    for (int i = 1; i <= spec.colors && v.holds; ++i) {
        const std::string sym = HypergraphSpec::color_symbol(i);
        for (const auto& t : m.relation(sym).tuples()) {
            std::vector<int> sorted = t;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                fail("irreflexivity", sym, t);
                break;
            }
            bool symmetric = true;
            do symmetric = symmetric && m.holds(sym, sorted);
            while (symmetric && std::next_permutation(sorted.begin(), sorted.end()));
            if (!symmetric) {
                fail("symmetry", sym, t);
                break;
            }
            for (int j = i + 1; j <= spec.colors && v.holds; ++j)
                if (m.holds(HypergraphSpec::color_symbol(j), t)) fail("disjointness", HypergraphSpec::color_symbol(j), t);
            if (!v.holds) break;
        }
    }
    if (v.holds && spec.complete) {
        for_each_subset(m.size(), spec.arity, [&](const std::vector<int>& s) {
            if (v.holds && set_color(m, spec, s) == 0) fail("completeness", "", s);
        });
    }
    return v;
}

namespace {

std::optional<int> witness_for(const Structure& m, const HypergraphSpec& spec, const ExtensionDemand& d) {
    for (int v = 0; v < m.size(); ++v) {
        if (std::find(d.x.begin(), d.x.end(), v) != d.x.end()) continue;
        bool ok = true;
        for (const auto& [y, color] : d.colors) {
            std::vector<int> s = y;
            s.push_back(v);
            if (set_color(m, spec, s) != color) {
                ok = false;
                break;
            }
        }
        if (ok) return v;
    }
    return std::nullopt;
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) throw ResourceError("extension check exceeds " + std::to_string(cap) + " demands");
    }
    return r;
}

}  // namespace

ExtensionVerdict check_extension_property(const Structure& m, const HypergraphSpec& spec, int x_size,
                                          ExtensionProperty property, std::size_t cap) {
    require_signature(m, spec);
    if (x_size < 0 || x_size > m.size()) throw InputError("x_size must lie between 0 and the structure size");
    const int lo = property == ExtensionProperty::with_none ? 0 : 1;
    const std::size_t options = static_cast<std::size_t>(spec.colors - lo + 1);
    ExtensionVerdict v;
    for (int xs = 0; xs <= x_size && v.holds; ++xs) {
        for_each_subset(m.size(), xs, [&](const std::vector<int>& x) {
            if (!v.holds) return;
            std::vector<std::vector<int>> ys;
            for_each_subset(xs, spec.arity - 1, [&](const std::vector<int>& pos) {
                std::vector<int> y;
                for (int p : pos) y.push_back(x[static_cast<std::size_t>(p)]);
                ys.push_back(std::move(y));
            });
            const std::size_t count = checked_power(options, ys.size(), cap);
            if (v.checked + count > cap) throw ResourceError("extension check exceeds " + std::to_string(cap) + " demands");
            std::vector<int> digits(ys.size(), 0);
            for (std::size_t n = 0; n < count; ++n) {
                ExtensionDemand d{x, {}};
                for (std::size_t i = 0; i < ys.size(); ++i) d.colors.emplace_back(ys[i], digits[i] + lo);
                ++v.checked;
                if (!witness_for(m, spec, d)) {
                    v.holds = false;
                    v.unmet = std::move(d);
                    return;
                }
                for (std::size_t i = ys.size(); i-- > 0;) {
                    if (++digits[i] < static_cast<int>(options)) break;
                    digits[i] = 0;
                }
            }
        });
    }
    return v;
}

std::optional<int> find_extension_witness(const Structure& m, const HypergraphSpec& spec, const ExtensionDemand& d) {
    require_signature(m, spec);
    return witness_for(m, spec, d);
}

Structure build_extension_stage(const HypergraphSpec& spec, int x_size, ExtensionProperty property, int max_size) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    Structure m = generate(spec, rng);
    while (true) {
        const auto v = check_extension_property(m, spec, std::min(x_size, m.size()), property);
        if (v.holds && x_size <= m.size()) return m;
        const int n = m.size();
        if (n + 1 > max_size)
            throw ResourceError("extension stage needs more than " + std::to_string(max_size) + " elements");
        auto rels = empty_tables(spec, n + 1);
        for (const auto& [sym, r] : m.relations())
            for (const auto& t : r.tuples()) rels.at(sym).insert(t);
        for_each_subset(n, spec.arity - 1, [&](const std::vector<int>& z) {
            int color = -1;
            if (v.unmet)
                for (const auto& [y, c] : v.unmet->colors)
                    if (y == z) color = c;
            std::vector<int> s = z;
            s.push_back(n);
            paint(rels, s, color >= 0 ? color : draw_color(rng, spec));
        });
        m = Structure(spec.signature(), numbered(n + 1), std::move(rels));
    }
}

}  // namespace fmw
