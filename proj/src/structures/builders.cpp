#include "fmw/builders.hpp"

#include <string>

#include "fmw/error.hpp"

namespace fmw {

namespace {

void require_positive(int n) {
    if (n < 1) throw InputError("structure size must be positive");
}

std::vector<std::string> numbered(int n) {
    std::vector<std::string> u;
    for (int i = 0; i < n; ++i) u.push_back(std::to_string(i));
    return u;
}

std::vector<std::string> lettered(int n) {
    std::vector<std::string> u;
    for (int i = 0; i < n; ++i) {
        std::string s;
        int k = i;
        do {
            s.insert(s.begin(), static_cast<char>('a' + k % 26));
            k = k / 26 - 1;
        } while (k >= 0);
        u.push_back(s);
    }
    return u;
}

Structure from_edges(const std::vector<std::string>& u, const std::vector<std::pair<int, int>>& edges,
                     bool symmetric) {
    const int n = static_cast<int>(u.size());
    Relation e(2, n);
    for (auto [x, y] : edges) {
        e.insert(std::vector<int>{x, y});
        if (symmetric) e.insert(std::vector<int>{y, x});
    }
    std::map<std::string, Relation, std::less<>> rels;
    rels.emplace("E", std::move(e));
    return Structure(Signature{{"E", 2}}, u, std::move(rels));
}

}  // namespace

Structure chain(int n) {
    require_positive(n);
    Relation lt(2, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) lt.insert(std::vector<int>{i, j});
    std::map<std::string, Relation, std::less<>> rels;
    rels.emplace("lt", std::move(lt));
    return Structure(Signature{{"lt", 2}}, numbered(n), std::move(rels));
}

Structure empty_structure(int n, const Signature& sig) {
    require_positive(n);
    return Structure(sig, numbered(n), Structure::NamedTuples{});
}

Structure pure_set(int n, const Signature& sig) { return empty_structure(n, sig); }

Structure path(int n) {
    require_positive(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_edges(lettered(n), edges, true);
}

Structure directed_path(int n) {
    require_positive(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_edges(lettered(n), edges, false);
}

Structure cycle(int n) {
    require_positive(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(numbered(n), edges, false);
}

Structure undirected_cycle(int n) {
    require_positive(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(numbered(n), edges, true);
}

Structure ab_structure() {
    Structure::NamedTuples rels;
    rels["A"] = {{"p"}};
    rels["B"] = {{"q1"}, {"q2"}, {"q3"}};
    rels["R"] = {{"p", "q1"}, {"p", "q2"}, {"p", "q3"}};
    return Structure(Signature{{"R", 2}, {"A", 1}, {"B", 1}}, {"p", "q1", "q2", "q3"}, rels);
}

}  // namespace fmw
