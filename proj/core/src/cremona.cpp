#include "rml/cremona.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <unordered_map>

namespace rml {

namespace {

void require_cp2(const HomologyClass& a, const char* op) {
    if (a.basis().kind() != BasisKind::CP2Blowup)
        throw UnsupportedBasisError(std::string(op) + " expects a CP2Blowup basis");
}

void check_indices(const CremonaMove& m, const Basis& basis) {
    const int k = basis.k();
    const int top = m.kind == CremonaMove::Kind::ReflectTriple ? m.k : m.j;
    if (m.i < 1 || top > k)
        throw IndexOutOfRangeError("move indices exceed basis rank k=" + std::to_string(k));
}

Int max_abs(const std::vector<Int>& v) {
    Int m = 0;
    for (Int x : v) m = std::max(m, x < 0 ? -x : x);
    return m;
}

} // namespace

CremonaMove CremonaMove::reflect(int i, int j, int k) {
    int idx[3] = {i, j, k};
    std::sort(idx, idx + 3);
    if (idx[0] < 1 || idx[0] == idx[1] || idx[1] == idx[2])
        throw InvariantError("ReflectTriple needs three distinct indices >= 1");
    return CremonaMove{Kind::ReflectTriple, idx[0], idx[1], idx[2]};
}

CremonaMove CremonaMove::swap(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || i == j) throw InvariantError("SwapPair needs two distinct indices >= 1");
    return CremonaMove{Kind::SwapPair, i, j, 0};
}

HomologyClass CremonaMove::root(const Basis& basis) const {
    check_indices(*this, basis);
    std::vector<Int> c(static_cast<std::size_t>(basis.rank()), 0);
    if (kind == Kind::ReflectTriple) {
        // L_ijk = H - Ei - Ej - Ek, stored (1 | ..1 at i,j,k..)
        c[0] = 1;
        c[static_cast<std::size_t>(i)] = 1;
        c[static_cast<std::size_t>(j)] = 1;
        c[static_cast<std::size_t>(k)] = 1;
    } else {
        // Ei - Ej, stored (0 | ..-1 at i.. +1 at j..)
        c[static_cast<std::size_t>(i)] = -1;
        c[static_cast<std::size_t>(j)] = 1;
    }
    return HomologyClass(basis, std::move(c));
}

std::vector<CremonaMove> all_moves(int k) {
    std::vector<CremonaMove> moves;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            for (int l = j + 1; l <= k; ++l) moves.push_back(CremonaMove::reflect(i, j, l));
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) moves.push_back(CremonaMove::swap(i, j));
    return moves;
}

HomologyClass apply_move(const HomologyClass& a, const CremonaMove& m) {
    require_cp2(a, "apply_move");
    check_indices(m, a.basis());
    std::vector<Int> c(a.coeffs());
    if (m.kind == CremonaMove::Kind::SwapPair) {
        std::swap(c[static_cast<std::size_t>(m.i)], c[static_cast<std::size_t>(m.j)]);
    } else {
        // A + (A.L)L with L = H - Ei - Ej - Ek: the defect d = a - bi - bj - bk
        // is added to a and to each of bi, bj, bk.
        const Int d = c[0] - c[static_cast<std::size_t>(m.i)] - c[static_cast<std::size_t>(m.j)] -
                      c[static_cast<std::size_t>(m.k)];
        c[0] += d;
        c[static_cast<std::size_t>(m.i)] += d;
        c[static_cast<std::size_t>(m.j)] += d;
        c[static_cast<std::size_t>(m.k)] += d;
    }
    return HomologyClass(a.basis(), std::move(c));
}

HomologyClass apply_sequence(const HomologyClass& a, const MoveSequence& moves) {
    HomologyClass c = a;
    for (const auto& m : moves) c = apply_move(c, m);
    return c;
}

HomologyClass reflect_along(const HomologyClass& a, const HomologyClass& root) {
    if (pair(root, root) != -2)
        throw InvariantError("reflect_along needs a square-(-2) root");
    return a + pair(a, root) * root;
}

bool is_reduced(const HomologyClass& a) {
    require_cp2(a, "is_reduced");
    const auto& c = a.coeffs();
    const int k = a.basis().k();
    for (int i = 1; i + 1 <= k; ++i)
        if (c[static_cast<std::size_t>(i)] < c[static_cast<std::size_t>(i) + 1]) return false;
    if (k >= 1 && c[static_cast<std::size_t>(k)] < 0) return false;
    Int top3 = 0;
    for (int i = 1; i <= std::min(k, 3); ++i) top3 += c[static_cast<std::size_t>(i)];
    return c[0] >= top3;
}

ReduceResult reduce(const HomologyClass& a) {
    require_cp2(a, "reduce");
    if (a.degree() <= 0) throw InvariantError("reduce requires degree a > 0");
    const int k = a.basis().k();

    Int budget = 0;
    for (Int x : a.coeffs()) budget += x < 0 ? -x : x;
    const Int cap = 10 * budget + 100;

    std::vector<Int> c(a.coeffs());
    MoveSequence cert;
    auto emit_swap = [&](int i, int j) {
        cert.push_back(CremonaMove::swap(i, j));
        std::swap(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
    };

    Int reflections = 0;
    for (;;) {
        // Selection sort descending; ties keep the earlier entry first.
        for (int i = 1; i <= k; ++i) {
            int best = i;
            for (int j = i + 1; j <= k; ++j)
                if (c[static_cast<std::size_t>(j)] > c[static_cast<std::size_t>(best)]) best = j;
            if (best != i) emit_swap(i, best);
        }
        Int top3 = 0;
        for (int i = 1; i <= std::min(k, 3); ++i) top3 += c[static_cast<std::size_t>(i)];
        if (k < 3 || c[0] >= top3) break;
        if (++reflections > cap)
            throw NonTerminatingError("reduction exceeded its iteration cap");
        const Int d = c[0] - top3; // < 0: the degree strictly decreases
        cert.push_back(CremonaMove::reflect(1, 2, 3));
        c[0] += d;
        c[1] += d;
        c[2] += d;
        c[3] += d;
    }
    return ReduceResult{HomologyClass(a.basis(), std::move(c)), std::move(cert)};
}

// -- equivalence search ------------------------------------------------------

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<Int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Int x : v) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

using DistMap = std::unordered_map<std::vector<Int>, int, VecHash>;

struct Side {
    DistMap dist;
    std::vector<std::vector<Int>> frontier;
    int radius = 0;
};

// Depth-first reconstruction of the lexicographically least shortest path.
// On a shortest path the i-th state is at bounded-graph distance exactly i
// from A and total-i from B, so both distance maps prune hard.
struct PathFinder {
    const Basis& basis;
    const std::vector<CremonaMove>& moves;
    const std::vector<Int>& target;
    const Side& from;
    const Side& to;
    Int bound;
    int total_len = 0;
    MoveSequence path;

    bool admissible(const std::vector<Int>& state, int depth) const {
        if (max_abs(state) > bound) return false;
        if (depth <= from.radius) {
            auto it = from.dist.find(state);
            if (it == from.dist.end() || it->second != depth) return false;
        }
        const int rem = total_len - depth;
        if (rem <= to.radius) {
            auto it = to.dist.find(state);
            if (it == to.dist.end() || it->second != rem) return false;
        }
        return true;
    }

    bool dfs(const HomologyClass& state, int depth) {
        if (depth == total_len) return state.coeffs() == target;
        for (const auto& m : moves) {
            HomologyClass next = apply_move(state, m);
            if (!admissible(next.coeffs(), depth + 1)) continue;
            path.push_back(m);
            if (dfs(next, depth + 1)) return true;
            path.pop_back();
        }
        return false;
    }
};

} // namespace

EquivalenceResult equivalent(const HomologyClass& a, const HomologyClass& b, Int bound,
                             std::size_t max_states) {
    if (a.basis() != b.basis()) throw BasisMismatchError("equivalence needs a common basis");
    require_cp2(a, "equivalent");
    if (bound <= std::max(max_abs(a.coeffs()), max_abs(b.coeffs())))
        throw InvariantError("bound must exceed the coefficient magnitude of both classes");
    if (a == b) return {EquivalenceResult::Status::Equivalent, {}};

    const auto moves = all_moves(a.basis().k());
    if (moves.empty()) return {EquivalenceResult::Status::NotEquivalentWithinBound, {}};

    Side from, to;
    from.dist.emplace(a.coeffs(), 0);
    from.frontier.push_back(a.coeffs());
    to.dist.emplace(b.coeffs(), 0);
    to.frontier.push_back(b.coeffs());

    std::optional<int> meet_len;
    while (!from.frontier.empty() && !to.frontier.empty()) {
        if (from.dist.size() + to.dist.size() > max_states)
            return {EquivalenceResult::Status::Inconclusive, {}};
        // Expand the smaller frontier; ties go to the A side.
        Side& side = from.frontier.size() <= to.frontier.size() ? from : to;
        Side& other = (&side == &from) ? to : from;

        std::vector<std::vector<Int>> next;
        for (const auto& s : side.frontier) {
            HomologyClass state(a.basis(), s);
            for (const auto& m : moves) {
                auto t = apply_move(state, m).coeffs();
                if (max_abs(t) > bound) continue;
                if (side.dist.emplace(t, side.radius + 1).second) next.push_back(std::move(t));
            }
        }
        side.radius += 1;
        std::sort(next.begin(), next.end());
        side.frontier = std::move(next);

        for (const auto& s : side.frontier) {
            auto it = other.dist.find(s);
            if (it == other.dist.end()) continue;
            const int total = side.radius + it->second;
            if (!meet_len || total < *meet_len) meet_len = total;
        }
        if (meet_len) {
            // The first round that detects any meeting already sees the
            // optimal total length (both maps are complete to their radii).
            PathFinder finder{a.basis(), moves, b.coeffs(), from, to, bound, *meet_len, {}};
            if (!finder.dfs(a, 0))
                throw Error("internal: meeting detected but no path reconstructed");
            return {EquivalenceResult::Status::Equivalent, std::move(finder.path)};
        }
    }
    return {EquivalenceResult::Status::NotEquivalentWithinBound, {}};
}

} // namespace rml
