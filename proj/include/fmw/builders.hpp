#pragma once

#include "fmw/structure.hpp"

namespace fmw {

// Linear order 0 < 1 < ... < n-1 over {lt/2}.
Structure chain(int n);
// n elements, every relation empty.
Structure pure_set(int n, const Signature& sig = Signature{{"lt", 2}});
// Undirected path a-b-c-... over {E/2}.
Structure path(int n);
// Directed path a->b->c->... over {E/2}.
Structure directed_path(int n);
// Directed cycle 0->1->...->n-1->0 over {E/2}.
Structure cycle(int n);
// Undirected cycle over {E/2}.
Structure undirected_cycle(int n);
// Elements "0".."n-1", every relation of `sig` empty.
Structure empty_structure(int n, const Signature& sig);
// Signature {R/2, A/1, B/1}, universe {p, q1, q2, q3}, A = {p}, B = {q1,q2,q3}, R = A x B.
Structure ab_structure();

}  // namespace fmw
