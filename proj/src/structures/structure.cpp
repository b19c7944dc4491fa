#include "fmw/structure.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "fmw/error.hpp"

namespace fmw {

namespace {

bool valid_symbol_name(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Signature::Signature(Map symbols) : symbols_(std::move(symbols)) {
    for (const auto& [name, arity] : symbols_) {
        if (!valid_symbol_name(name)) throw InputError("invalid relation symbol name '" + name + "'");
        if (arity < 1) throw InputError("symbol '" + name + "' must have arity >= 1");
    }
    if (auto it = symbols_.find("s"); it != symbols_.end() && it->second != 2)
        throw InputError("the distinguished symbol 's' must be binary");
}

Signature::Signature(std::initializer_list<std::pair<const std::string, int>> symbols)
    : Signature(Map(symbols.begin(), symbols.end())) {}

int Signature::arity(std::string_view name) const {
    auto it = symbols_.find(name);
    if (it == symbols_.end()) throw InputError("unknown relation symbol '" + std::string(name) + "'");
    return it->second;
}

Signature Signature::with(const std::string& name, int arity) const {
    Map m = symbols_;
    m[name] = arity;
    return Signature(std::move(m));
}

Signature Signature::without(std::string_view name) const {
    Map m = symbols_;
    if (auto it = m.find(name); it != m.end()) m.erase(it);
    return Signature(std::move(m));
}

Relation::Relation(int arity, int universe_size) : arity_(arity), n_(universe_size) {
    std::size_t size = 1;
    for (int i = 0; i < arity; ++i) {
        size *= static_cast<std::size_t>(universe_size);
        if (size > kMaxRelationTable)
            throw ResourceError("relation table of arity " + std::to_string(arity) + " over " +
                                std::to_string(universe_size) + " elements is too large");
    }
    bits_.assign(size, 0);
}

std::vector<Tuple> Relation::tuples() const {
    std::vector<Tuple> out;
    Tuple t(static_cast<std::size_t>(arity_), 0);
    for (std::size_t idx = 0; idx < bits_.size(); ++idx) {
        if (bits_[idx]) {
            std::size_t rest = idx;
            for (int p = arity_ - 1; p >= 0; --p) {
                t[static_cast<std::size_t>(p)] = static_cast<int>(rest % static_cast<std::size_t>(n_));
                rest /= static_cast<std::size_t>(n_);
            }
            out.push_back(t);
        }
    }
    return out;
}

std::size_t Relation::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::shared_ptr<Structure::Data> Structure::make_data(Signature sig, std::vector<std::string> universe) {
    if (universe.empty()) throw InputError("structure universe must be nonempty");
    auto d = std::make_shared<Data>();
    d->signature = std::move(sig);
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (!d->index.emplace(universe[i], static_cast<int>(i)).second)
            throw InputError("duplicate element '" + universe[i] + "' in universe");
    }
    d->universe = std::move(universe);
    return d;
}

Structure::Structure(Signature signature, std::vector<std::string> universe, const NamedTuples& relations) {
    auto d = make_data(std::move(signature), std::move(universe));
    for (const auto& [name, arity] : d->signature.symbols())
        d->relations.emplace(name, Relation(arity, static_cast<int>(d->universe.size())));
    for (const auto& [name, tuples] : relations) {
        auto rel = d->relations.find(name);
        if (rel == d->relations.end()) throw InputError("relation '" + name + "' is not in the signature");
        Tuple t;
        for (const auto& named : tuples) {
            if (static_cast<int>(named.size()) != rel->second.arity())
                throw InputError("tuple of length " + std::to_string(named.size()) + " in relation '" + name +
                                 "' of arity " + std::to_string(rel->second.arity()));
            t.clear();
            for (const auto& e : named) {
                auto it = d->index.find(e);
                if (it == d->index.end())
                    throw InputError("unknown element '" + e + "' in relation '" + name + "'");
                t.push_back(it->second);
            }
            rel->second.insert(t);
        }
    }
    d_ = std::move(d);
}

Structure::Structure(Signature signature, std::vector<std::string> universe,
                     std::map<std::string, Relation, std::less<>> relations) {
    auto d = make_data(std::move(signature), std::move(universe));
    const int n = static_cast<int>(d->universe.size());
    for (const auto& [name, arity] : d->signature.symbols()) {
        auto it = relations.find(name);
        if (it == relations.end()) {
            d->relations.emplace(name, Relation(arity, n));
            continue;
        }
        if (it->second.arity() != arity || it->second.universe_size() != n)
            throw InputError("relation table for '" + name + "' has the wrong shape");
        d->relations.emplace(name, std::move(it->second));
    }
    for (const auto& [name, rel] : relations)
        if (!d->signature.contains(name)) throw InputError("relation '" + name + "' is not in the signature");
    d_ = std::move(d);
}

std::optional<int> Structure::find(std::string_view element) const {
    auto it = d_->index.find(element);
    if (it == d_->index.end()) return std::nullopt;
    return it->second;
}

int Structure::index_of(std::string_view element) const {
    auto i = find(element);
    if (!i) throw InputError("unknown element '" + std::string(element) + "'");
    return *i;
}

const Relation& Structure::relation(std::string_view symbol) const {
    auto it = d_->relations.find(symbol);
    if (it == d_->relations.end()) throw InputError("unknown relation symbol '" + std::string(symbol) + "'");
    return it->second;
}

Structure::NamedTuples Structure::named_relations() const {
    NamedTuples out;
    for (const auto& [name, rel] : d_->relations) {
        auto& dst = out[name];
        for (const auto& t : rel.tuples()) {
            std::vector<std::string> named;
            named.reserve(t.size());
            for (int v : t) named.push_back(this->name(v));
            dst.push_back(std::move(named));
        }
        std::sort(dst.begin(), dst.end());
    }
    return out;
}

Structure Structure::expand(const std::string& symbol, Relation rel) const {
    if (signature().contains(symbol)) throw InputError("symbol '" + symbol + "' already present");
    auto rels = d_->relations;
    const int arity = rel.arity();
    rels.emplace(symbol, std::move(rel));
    return Structure(signature().with(symbol, arity), d_->universe, std::move(rels));
}

Structure Structure::restrict_to(const Signature& sub) const {
    std::map<std::string, Relation, std::less<>> rels;
    for (const auto& [name, arity] : sub.symbols()) {
        if (!signature().contains(name) || signature().arity(name) != arity)
            throw InputError("symbol '" + name + "' is not in the structure's signature");
        rels.emplace(name, relation(name));
    }
    return Structure(sub, d_->universe, std::move(rels));
}

bool Structure::operator==(const Structure& other) const {
    if (d_ == other.d_) return true;
    return d_->signature == other.d_->signature && d_->universe == other.d_->universe &&
           d_->relations == other.d_->relations;
}

std::string to_string(MapKind kind) {
    switch (kind) {
        case MapKind::partial_isomorphism: return "partial-isomorphism";
        case MapKind::embedding: return "embedding";
        case MapKind::isomorphism: return "isomorphism";
        case MapKind::k_elementary: return "k-elementary";
    }
    return "?";
}

std::string StructureMap::image_of(std::string_view source_element) const {
    return target.name(mapping[static_cast<std::size_t>(source.index_of(source_element))]);
}

}  // namespace fmw
