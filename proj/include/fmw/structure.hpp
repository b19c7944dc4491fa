#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fmw {

using Tuple = std::vector<int>;

// Relational signature: symbol name -> arity. The binary symbol "s" is
// reserved for the fiber relation of s-expanded products.
class Signature {
public:
    using Map = std::map<std::string, int, std::less<>>;

    Signature() = default;
    explicit Signature(Map symbols);
    Signature(std::initializer_list<std::pair<const std::string, int>> symbols);

    const Map& symbols() const { return symbols_; }
    bool contains(std::string_view name) const { return symbols_.find(name) != symbols_.end(); }
    int arity(std::string_view name) const;
    bool has_s() const { return contains("s"); }
    bool empty() const { return symbols_.empty(); }

    Signature with(const std::string& name, int arity) const;
    Signature without(std::string_view name) const;

    bool operator==(const Signature&) const = default;

private:
    Map symbols_;
};

// Dense truth table of one relation over a universe of size n.
class Relation {
public:
    Relation() = default;
    Relation(int arity, int universe_size);

    int arity() const { return arity_; }
    int universe_size() const { return n_; }

    bool contains(std::span<const int> t) const { return bits_[index(t)] != 0; }
    void insert(std::span<const int> t) { bits_[index(t)] = 1; }
    void erase(std::span<const int> t) { bits_[index(t)] = 0; }

    std::size_t index(std::span<const int> t) const {
        std::size_t i = 0;
        for (int v : t) i = i * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
        return i;
    }
    std::size_t table_size() const { return bits_.size(); }
    bool at(std::size_t idx) const { return bits_[idx] != 0; }
    void set(std::size_t idx, bool v) { bits_[idx] = v ? 1 : 0; }

    // Member tuples in lexicographic order.
    std::vector<Tuple> tuples() const;
    std::size_t count() const;

    bool operator==(const Relation&) const = default;

private:
    int arity_ = 0;
    int n_ = 0;
    std::vector<std::uint8_t> bits_;
};

// Finite relational structure. Immutable; copies share storage.
class Structure {
public:
    using NamedTuples = std::map<std::string, std::vector<std::vector<std::string>>, std::less<>>;

    // Validating constructor from element names. Relations missing from the
    // map are empty. Throws InputError on any inconsistency.
    Structure(Signature signature, std::vector<std::string> universe, const NamedTuples& relations);

    // Constructor from prebuilt tables (sizes are validated).
    Structure(Signature signature, std::vector<std::string> universe,
              std::map<std::string, Relation, std::less<>> relations);

    const Signature& signature() const { return d_->signature; }
    int size() const { return static_cast<int>(d_->universe.size()); }
    const std::vector<std::string>& universe() const { return d_->universe; }
    const std::string& name(int i) const { return d_->universe[static_cast<std::size_t>(i)]; }

    std::optional<int> find(std::string_view element) const;
    int index_of(std::string_view element) const;  // throws InputError naming the element

    const Relation& relation(std::string_view symbol) const;
    bool holds(std::string_view symbol, std::span<const int> t) const { return relation(symbol).contains(t); }
    const std::map<std::string, Relation, std::less<>>& relations() const { return d_->relations; }

    NamedTuples named_relations() const;

    // New structure with one extra symbol.
    Structure expand(const std::string& symbol, Relation rel) const;
    // Same universe, relations restricted to the given signature subset.
    Structure restrict_to(const Signature& sub) const;

    bool operator==(const Structure& other) const;

private:
    struct Data {
        Signature signature;
        std::vector<std::string> universe;
        std::map<std::string, int, std::less<>> index;
        std::map<std::string, Relation, std::less<>> relations;
    };
    std::shared_ptr<const Data> d_;

    static std::shared_ptr<Data> make_data(Signature sig, std::vector<std::string> universe);
};

enum class MapKind { partial_isomorphism, embedding, isomorphism, k_elementary };

std::string to_string(MapKind kind);

// Injective map between universes. `kind` records a property that was
// checked by the operation that produced the map.
struct StructureMap {
    Structure source;
    Structure target;
    std::vector<int> mapping;  // source index -> target index
    MapKind kind = MapKind::embedding;
    int k = 0;

    std::string image_of(std::string_view source_element) const;
};

Structure induced_substructure(const Structure& m, const std::vector<std::string>& subset);
Structure induced_substructure_by_index(const Structure& m, const std::vector<int>& subset);
// sub's elements are elements of m and sub equals the substructure they induce.
bool is_induced_substructure(const Structure& sub, const Structure& m);

// true iff f reflects and preserves every relation; requires a bijection.
bool check_isomorphism(const StructureMap& f);
// true iff f is injective and reflects/preserves every relation of the source signature.
bool check_embedding(const StructureMap& f);

// All embeddings N -> M (or the first `limit`), in lexicographic order of
// the image sequence.
std::vector<StructureMap> find_embeddings(const Structure& n, const Structure& m,
                                          std::optional<std::size_t> limit = std::nullopt);

StructureMap compose(const StructureMap& g, const StructureMap& f);  // g after f

// Universe-size^arity above this is refused.
inline constexpr std::size_t kMaxRelationTable = std::size_t{1} << 26;

}  // namespace fmw
