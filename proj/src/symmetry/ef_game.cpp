#include "fmw/ef_game.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "../structures/partial_map.hpp"
#include "fmw/error.hpp"
#include "fmw/kernels.hpp"

namespace fmw {

std::string to_string(Player p) { return p == Player::duplicator ? "duplicator" : "spoiler"; }

namespace {

// Game position: the injective partial map given by the pebble pairs.
class Game {
public:
    Game(const Structure& m, const Structure& n)
        : m_(m), n_(n), mn_(detail::relation_pairs(m, n)),
          image_(static_cast<std::size_t>(m.size()), -1), preimage_(static_cast<std::size_t>(n.size()), -1) {}

    // Adds (x, y); false if the extended map is not a partial isomorphism.
    // `added` tells whether a new pair was pushed (and must be popped).
    bool push(int x, int y, bool& added) {
        added = false;
        const int ix = image_[static_cast<std::size_t>(x)], py = preimage_[static_cast<std::size_t>(y)];
        if (ix >= 0 || py >= 0) return ix == y && py == x;
        image_[static_cast<std::size_t>(x)] = y;
        preimage_[static_cast<std::size_t>(y)] = x;
        domain_.push_back(x);
        added = true;
        if (!detail::extends_consistently(mn_, domain_, image_)) {
            pop();
            added = false;
            return false;
        }
        return true;
    }

    void pop() {
        const int x = domain_.back();
        domain_.pop_back();
        preimage_[static_cast<std::size_t>(image_[static_cast<std::size_t>(x)])] = -1;
        image_[static_cast<std::size_t>(x)] = -1;
    }

    bool duplicator_wins(int rounds) {
        if (rounds == 0) return true;
        std::vector<int> key;
        key.reserve(domain_.size() * 2 + 1);
        std::vector<std::pair<int, int>> pairs;
        for (int x : domain_) pairs.emplace_back(x, image_[static_cast<std::size_t>(x)]);
        std::sort(pairs.begin(), pairs.end());
        key.push_back(rounds);
        for (auto [x, y] : pairs) {
            key.push_back(x);
            key.push_back(y);
        }
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool result = true;
        for (int side = 0; side < 2 && result; ++side) {
            const int spoiler_range = side == 0 ? m_.size() : n_.size();
            for (int s = 0; s < spoiler_range && result; ++s)
                if (!has_answer(side == 0, s, rounds)) result = false;
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    // Duplicator can answer spoiler's pebble on s and still win the rest.
    bool has_answer(bool in_first, int s, int rounds, int* reply = nullptr) {
        const int range = in_first ? n_.size() : m_.size();
        for (int r = 0; r < range; ++r) {
            const int x = in_first ? s : r, y = in_first ? r : s;
            bool added = false;
            if (!push(x, y, added)) continue;
            const bool wins = duplicator_wins(rounds - 1);
            if (added) pop();
            if (wins) {
                if (reply) *reply = r;
                return true;
            }
        }
        return false;
    }

    // First legal (partial-isomorphism preserving) reply, or -1.
    int first_legal_reply(bool in_first, int s) {
        const int range = in_first ? n_.size() : m_.size();
        for (int r = 0; r < range; ++r) {
            bool added = false;
            if (push(in_first ? s : r, in_first ? r : s, added)) {
                if (added) pop();
                return r;
            }
        }
        return -1;
    }

    void play_out(int rounds, int round_no, std::vector<EfMove>& trace) {
        if (rounds == 0) return;
        for (int side = 0; side < 2; ++side) {
            const bool in_first = side == 0;
            const int range = in_first ? m_.size() : n_.size();
            for (int s = 0; s < range; ++s) {
                if (has_answer(in_first, s, rounds)) continue;
                const int r = first_legal_reply(in_first, s);
                trace.push_back({round_no, in_first, s, r});
                if (r < 0) return;
                bool added = false;
                push(in_first ? s : r, in_first ? r : s, added);
                play_out(rounds - 1, round_no + 1, trace);
                if (added) pop();
                return;
            }
        }
    }

private:
    const Structure& m_;
    const Structure& n_;
    detail::RelationPairs mn_;
    std::vector<int> image_, preimage_, domain_;
    std::map<std::vector<int>, bool> memo_;
};

void check_pair(const Structure& m, const Structure& n, const std::vector<int>& pm, const std::vector<int>& pn) {
    if (!(m.signature() == n.signature())) throw InputError("EF game needs structures over the same signature");
    if (pm.size() != pn.size()) throw InputError("pebble tuples differ in length");
    for (int x : pm)
        if (x < 0 || x >= m.size()) throw InputError("pebble outside the first structure");
    for (int y : pn)
        if (y < 0 || y >= n.size()) throw InputError("pebble outside the second structure");
}

bool place_all(Game& g, const std::vector<int>& pm, const std::vector<int>& pn) {
    for (std::size_t i = 0; i < pm.size(); ++i) {
        bool added = false;
        if (!g.push(pm[i], pn[i], added)) return false;
    }
    return true;
}

}  // namespace

bool is_partial_isomorphism(const Structure& m, const Structure& n, const std::vector<int>& pm,
                            const std::vector<int>& pn) {
    check_pair(m, n, pm, pn);
    Game g(m, n);
    return place_all(g, pm, pn);
}

EfResult ef_game(const Structure& m, const Structure& n, int k, const std::vector<int>& pm,
                 const std::vector<int>& pn, int cap) {
    check_pair(m, n, pm, pn);
    if (k < 0) throw InputError("round count must be non-negative");
    if (k > cap) throw ResourceError("round count " + std::to_string(k) + " exceeds the cap of " + std::to_string(cap));
    Game g(m, n);
    EfResult res;
    if (!place_all(g, pm, pn)) {
        res.winner = Player::spoiler;
        return res;
    }
    if (g.duplicator_wins(k)) return res;
    res.winner = Player::spoiler;
    g.play_out(k, 1, res.trace);
    return res;
}

ElementaryVerdict k_elementary_substructure(const Structure& sub, const Structure& m, int k, int max_tuple, int cap) {
    if (!is_induced_substructure(sub, m)) throw PreconditionError("the first structure is not an induced substructure of the second");
    std::vector<int> where;
    for (const auto& e : sub.universe()) where.push_back(m.index_of(e));
    ElementaryVerdict v;
    v.k = k;
    v.max_tuple = max_tuple;
    for (int t = 0; t <= std::min(max_tuple, sub.size()) && v.holds; ++t) {
        first_subset_serial(sub.size(), t, [&](std::span<const int> tuple) {
            ++v.checked;
            std::vector<int> a(tuple.begin(), tuple.end()), b;
            for (int x : a) b.push_back(where[static_cast<std::size_t>(x)]);
            if (ef_game(sub, m, k, a, b, cap).winner == Player::spoiler) {
                v.holds = false;
                v.failing_tuple = a;
                return true;
            }
            return false;
        });
    }
    return v;
}

bool is_k_elementary_map(const StructureMap& f, int k, int max_tuple, int cap) {
    for (int t = 0; t <= std::min(max_tuple, f.source.size()); ++t) {
        const auto hit = first_subset_serial(f.source.size(), t, [&](std::span<const int> tuple) {
            std::vector<int> a(tuple.begin(), tuple.end()), b;
            for (int x : a) b.push_back(f.mapping[static_cast<std::size_t>(x)]);
            return ef_game(f.source, f.target, k, a, b, cap).winner == Player::spoiler;
        });
        if (hit.witness) return false;
    }
    return true;
}

MutualEmbeddingVerdict mutually_k_embeddable(const Structure& a, const Structure& b, int k, int max_tuple, int cap) {
    MutualEmbeddingVerdict v;
    v.k = k;
    v.max_tuple = max_tuple;
    auto first_good = [&](const Structure& x, const Structure& y) -> std::optional<std::vector<int>> {
        if (k > cap) throw ResourceError("round count exceeds cap");
        for (const auto& f : find_embeddings(x, y))
            if (is_k_elementary_map(f, k, max_tuple, cap)) return f.mapping;
        return std::nullopt;
    };
    v.forward = first_good(a, b);
    v.backward = first_good(b, a);
    v.holds = v.forward.has_value() && v.backward.has_value();
    return v;
}

}  // namespace fmw
