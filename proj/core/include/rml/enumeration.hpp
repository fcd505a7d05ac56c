#pragma once

#include <vector>

#include "rml/cremona.hpp"
#include "rml/homology.hpp"

namespace rml {

// A set of pairwise-orthogonal exceptional classes, canonically ordered
// (lexicographic on coefficient vectors). Invariants are re-checked from
// scratch at construction: every member has square -1 and K-pairing -1,
// members are pairwise orthogonal, and the cardinality matches the declared
// size.
class ExceptionalSystem {
public:
    ExceptionalSystem(Basis basis, std::vector<HomologyClass> classes, int declared_size);

    const Basis& basis() const { return basis_; }
    const std::vector<HomologyClass>& classes() const { return classes_; }
    int size() const { return static_cast<int>(classes_.size()); }

    friend bool operator==(const ExceptionalSystem& a, const ExceptionalSystem& b) {
        return a.basis_ == b.basis_ && a.classes_ == b.classes_;
    }
    friend bool operator!=(const ExceptionalSystem& a, const ExceptionalSystem& b) {
        return !(a == b);
    }
    friend bool operator<(const ExceptionalSystem& a, const ExceptionalSystem& b) {
        return a.classes_ < b.classes_;
    }

private:
    Basis basis_;
    std::vector<HomologyClass> classes_;
};

// -- exceptional class enumeration -------------------------------------------

// Orbit closure of the degree <= 1 exceptional classes {Ei, H-Ei-Ej} under
// the full move set. The seeds matter below rank 3, where no triple
// reflection exists and the orbit of E1 alone is incomplete.
std::vector<HomologyClass> enumerate_exceptional_orbit(int k);

// Direct Diophantine scan of E.E = -1, K0.E = -1, i.e. sum(b) = 3a - 1 and
// sum(b^2) = a^2 + 1, over the derived box (see the implementation for the
// Cauchy-Schwarz bound).
std::vector<HomologyClass> enumerate_exceptional_scan(int k);

// Both algorithms, which must agree; throws if they ever differ.
// Requires 1 <= k <= 8 (finite orbit regime); UnsupportedRankError otherwise.
std::vector<HomologyClass> enumerate_exceptional(int k);

struct BoundedEnumeration {
    std::vector<HomologyClass> classes;
    bool complete; // true iff the degree cap provably covers the whole set
};

// Diophantine scan with an explicit degree cap, usable at every rank; the
// class set is infinite for k >= 9 so the result is flagged incomplete there.
BoundedEnumeration enumerate_exceptional_bounded(int k, Int max_degree);

// All sphere-admissible (-4)-classes (Z.Z = -4, K0.Z = 2) at rank k <= 8; the
// same Cauchy-Schwarz argument bounds the degree.
std::vector<HomologyClass> enumerate_minus4_sphere_classes(int k);

// -- orthogonal system enumeration --------------------------------------------

enum class OrthMode { Z2Orthogonal, ZOrthogonal };

// Exceptional classes in the constraint's ambient basis pairing to zero with
// the constraint (mod 2, respectively over the integers). The integer variant
// supports ambient rank 9 for constraints of the cut-divisor shape
// +-(Ei - Ej - Ek - El), where orthogonality keeps the solution set finite.
std::vector<HomologyClass> orthogonal_exceptional(const Z2Class& constraint);
std::vector<HomologyClass> orthogonal_exceptional(const HomologyClass& constraint);

// All sets of `system_size` pairwise-orthogonal exceptional classes whose
// pairing with the constraint vanishes; backtracking with orthogonality
// pruning, output canonically sorted.
std::vector<ExceptionalSystem> enumerate_systems(const Z2Class& constraint, int system_size);
std::vector<ExceptionalSystem> enumerate_systems(const HomologyClass& constraint,
                                                 int system_size);

// Move certificate carrying every member of a full-size system simultaneously
// to {E1, ..., Ek} (as a set); breadth-first search over the move orbit of
// the tuple. NotNormalizableError if the finite orbit is exhausted first.
MoveSequence normalize_system(const ExceptionalSystem& sys);

// -- census -------------------------------------------------------------------

// One row of the full-size system count table, 1 <= k <= 8:
//   z2 side: systems of size k Z2-orthogonal to H in CP2Blowup(k);
//   z  side: systems of size k Z-orthogonal to S = -H + 2E1 - E2 (k <= 3) or
//            S' = E1 - E2 - E3 - E4 (k >= 4) in CP2Blowup(k+1).
struct CensusEntry {
    int k;
    std::vector<ExceptionalSystem> z2_systems;
    std::vector<ExceptionalSystem> z_systems;
    HomologyClass z_constraint;
};
CensusEntry census_entry(int k);

// The closed-form description of the same system lists: the base system
// (O_k = {Ei} on the z2 side, P_k = {H-E1-Ei} u {Ej} on the z side) together
// with its images under the listed square-(-2) reflections. Cross-validates
// the enumeration.
std::vector<ExceptionalSystem> closed_form_systems(int k, OrthMode mode);

} // namespace rml
