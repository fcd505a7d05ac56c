#pragma once

#include <cstddef>
#include <vector>

#include "rml/homology.hpp"

namespace rml {

// A single lattice reflection on CP2Blowup(k), realizable by a diffeomorphism.
//   ReflectTriple(i,j,k): reflection along L_ijk = H - Ei - Ej - Ek.
//   SwapPair(i,j):        reflection along Ei - Ej (the transposition of bi, bj).
// Indices are 1-based and stored sorted ascending.
struct CremonaMove {
    enum class Kind { ReflectTriple, SwapPair };

    Kind kind;
    int i = 0;
    int j = 0;
    int k = 0; // unused for SwapPair

    static CremonaMove reflect(int i, int j, int k);
    static CremonaMove swap(int i, int j);

    // Root class of the reflection (square -2) in the given basis.
    HomologyClass root(const Basis& basis) const;

    friend bool operator==(const CremonaMove& a, const CremonaMove& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j && a.k == b.k;
    }
    friend bool operator!=(const CremonaMove& a, const CremonaMove& b) { return !(a == b); }
    // ReflectTriple sorts before SwapPair; then index-lexicographic. This is
    // the canonical move order used by every search, so certificates are
    // reproducible.
    friend bool operator<(const CremonaMove& a, const CremonaMove& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.k < b.k;
    }
};

// Certificate for an equivalence claim; replaying it over the input class
// reproduces the claimed output.
using MoveSequence = std::vector<CremonaMove>;

// Canonical generator list for CP2Blowup(k): all triples, then all swaps.
std::vector<CremonaMove> all_moves(int k);

// A + (A.L) L for the move's root L. Involutive, preserves the pairing and K0.
HomologyClass apply_move(const HomologyClass& a, const CremonaMove& m);
HomologyClass apply_sequence(const HomologyClass& a, const MoveSequence& moves);

// General Weyl reflection x -> x + (x.root) root along any square-(-2) class.
// Not itself a basic move; used to build the closed-form system lists.
HomologyClass reflect_along(const HomologyClass& a, const HomologyClass& root);

// True iff b1 >= b2 >= ... >= bk >= 0 and a >= b1 + b2 + b3 (missing bi are 0).
bool is_reduced(const HomologyClass& a);

struct ReduceResult {
    HomologyClass vector;      // loop fixed point: b sorted descending and, when a
                               // triple reflection exists, a >= b1 + b2 + b3
    MoveSequence certificate;  // replays the input to `vector`
};

// Sort-then-reflect loop: sort b descending via SwapPair moves; while
// a < b1 + b2 + b3 reflect along L_123; repeat. The degree strictly decreases
// across reflections; an iteration cap of 10*(|a| + sum|bi|) + 100 guards
// inputs outside the criterion's domain (NonTerminatingError).
//
// The fixed point is a reduced vector whenever one exists in the orbit;
// root-type classes terminate at a fixed point with negative entries, which
// is_reduced then rejects.
ReduceResult reduce(const HomologyClass& a);

struct EquivalenceResult {
    enum class Status {
        Equivalent,
        NotEquivalentWithinBound, // reachable set within the coefficient bound
                                  // exhausted on one side without meeting
        Inconclusive,             // state cap truncated the search
    };
    Status status;
    MoveSequence certificate; // populated iff status == Equivalent; the
                              // lexicographically least among shortest ones
};

// Bidirectional breadth-first search over move applications, pruning states
// whose max |coefficient| exceeds `bound`. Deterministic: expansion follows
// the canonical move order and the certificate is the lexicographically
// least shortest one.
EquivalenceResult equivalent(const HomologyClass& a, const HomologyClass& b, Int bound,
                             std::size_t max_states = 4'000'000);

} // namespace rml
