#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fmw/structure.hpp"

namespace fmw {

inline constexpr int kDefaultRoundCap = 4;

enum class Player { duplicator, spoiler };
std::string to_string(Player p);

struct EfMove {
    int round = 0;       // 1-based
    bool in_first = true;  // spoiler played in the first structure
    int spoiler = -1;
    int reply = -1;      // -1 when duplicator had no legal answer
};

struct EfResult {
    Player winner = Player::duplicator;
    // When spoiler wins: one line of play following a winning spoiler strategy
    // against duplicator's first legal replies.
    std::vector<EfMove> trace;
};

// k-round game on (m, n) from the pebbled position (pm, pn). InputError on
// differing signatures or pebble counts, ResourceError when k > cap.
EfResult ef_game(const Structure& m, const Structure& n, int k, const std::vector<int>& pm = {},
                 const std::vector<int>& pn = {}, int cap = kDefaultRoundCap);

// True iff the pebbled tuples have the same atomic type.
bool is_partial_isomorphism(const Structure& m, const Structure& n, const std::vector<int>& pm,
                            const std::vector<int>& pn);

inline constexpr int kDefaultRank = 2;
inline constexpr int kDefaultTupleBound = 2;

struct ElementaryVerdict {
    bool holds = true;
    int k = kDefaultRank;
    int max_tuple = kDefaultTupleBound;
    std::optional<std::vector<int>> failing_tuple;  // indices in the substructure
    std::size_t checked = 0;
};

// For every set of at most max_tuple elements of sub, duplicator wins the
// k-round game between (sub, a) and (m, a). PreconditionError unless sub is
// an induced substructure of m.
ElementaryVerdict k_elementary_substructure(const Structure& sub, const Structure& m, int k, int max_tuple,
                                            int cap = kDefaultRoundCap);

// The map f: a -> b passes the same test for all tuples of length <= max_tuple.
bool is_k_elementary_map(const StructureMap& f, int k, int max_tuple, int cap = kDefaultRoundCap);

struct MutualEmbeddingVerdict {
    bool holds = false;
    std::optional<std::vector<int>> forward;   // A -> B
    std::optional<std::vector<int>> backward;  // B -> A
    int k = kDefaultRank;
    int max_tuple = kDefaultTupleBound;
};

MutualEmbeddingVerdict mutually_k_embeddable(const Structure& a, const Structure& b, int k, int max_tuple,
                                             int cap = kDefaultRoundCap);

}  // namespace fmw
