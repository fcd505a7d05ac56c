#pragma once

#include <optional>
#include <utility>

#include "rml/cremona.hpp"
#include "rml/enumeration.hpp"
#include "rml/homology.hpp"

namespace rml {

// Second Betti numbers of the ambient manifold before a cut along a spherical
// Lagrangian.
struct CutProfile {
    enum class Lagrangian { Sphere, RP2 };

    Lagrangian lagrangian;
    int b2plus;
    int b2minus;

    CutProfile(Lagrangian l, int plus, int minus) : lagrangian(l), b2plus(plus), b2minus(minus) {
        if (plus < 0 || minus < 0) throw InvariantError("Betti numbers must be nonnegative");
    }
};

// Effect of the cut on (b2+, b2-): a sphere leaves both unchanged; an RP2
// adds one to b2-.
std::pair<int, int> cut_betti(const CutProfile& p);

// The pairing-preserving monomorphism from the sublattice of MBasis(k)
// classes pairing trivially mod 2 with U1 + U2 + U3 into CP2Blowup(k+1).
//
// With the cut-manifold generators ordered (H', E0', ..., Ek') -- positions
// 1..k+1 of the b-part -- a class a*H - t1*U1 - t2*U2 - t3*U3 - sum bi*Ei
// maps to
//   a*H' - (-t1+t2+t3)/2 E0' - (t1-t2+t3)/2 E1' - (t1+t2-t3)/2 E2'
//        - (t1+t2+t3)/2 E3' - sum_{i>=4} bi*Ei',
// and Ei -> Ei' for i >= 4. ParityError when t1 + t2 + t3 is odd.
//
// With this coefficient order the image pairs to zero with the cut divisor
// E3' - E0' - E1' - E2' (see cut_divisor_class); the golden value
// iota(3H - 2U1 - E4 - ... - E9) = 3H' + E0' - E1' - ... - E9' pins the
// convention.
HomologyClass iota(const HomologyClass& alpha);

// Inverse on the orthogonal complement of the cut divisor: recovers
// t1 = b1'+b2', t2 = b0'+b2', t3 = b0'+b1' and passes the remaining bi
// through. NotInImageError when the class does not pair to zero with the cut
// divisor (equivalently b3' != b0'+b1'+b2').
HomologyClass iota_inverse(const HomologyClass& c);

// The (-4)-sphere class orthogonal to every iota image, in CP2Blowup(k+1):
// E3' - E0' - E1' - E2', stored (0 | 1, 1, 1, -1, 0, ...).
HomologyClass cut_divisor_class(int k);

struct Minus4Result {
    enum class Status {
        SxSClass,         // Z is A - 2B or B - 2A
        CremonaCanonical, // certificate carries Z to -H + 2E1 - E2
        NotWithinBound,
        Inconclusive,
    };
    Status status;
    std::optional<HomologyClass> sxs_class; // set for SxSClass
    MoveSequence certificate;               // set for CremonaCanonical
};

// Classification of sphere-admissible (-4)-classes (Z.Z = -4 and K.Z = 2,
// else NotMinus4SphereError). On SxS the two conditions pin Z to A-2B or
// B-2A; on CP2Blowup the class is tested for Cremona equivalence with
// -H + 2E1 - E2 within the coefficient bound.
Minus4Result classify_minus4(const HomologyClass& z, Int bound);

// Push-off correspondence: a system in CP2Blowup(k+1) whose members pair to
// zero with E1 - E2 - E3 - E4 maps memberwise through iota_inverse (after the
// coordinate swap aligning E1 - E2 - E3 - E4 with the cut divisor) to a
// system in MBasis(k). The output is Z2-orthogonal to U1 + U2 + U3, which is
// re-checked.
ExceptionalSystem tau_pushoff(const ExceptionalSystem& sys);

} // namespace rml
