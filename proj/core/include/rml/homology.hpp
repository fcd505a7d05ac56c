#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rml/basis.hpp"
#include "rml/errors.hpp"
#include "rml/rational.hpp"

namespace rml {

// Integer second-homology class in a declared basis.
//
// Coefficient storage conventions (all exact, no floating point):
//   CP2Blowup(k): (a | b1, ..., bk)  means  a*H - sum_i bi*Ei,
//                 so Ej itself is stored as (0 | ..., -1 at j, ...).
//   SxS:          (x, y)             means  x*A + y*B.
//   MBasis(k):    (a | t1, t2, t3, b4, ..., bk)
//                 means  a*H - t1*U1 - t2*U2 - t3*U3 - sum_{i>=4} bi*Ei.
//
// The (a | b...) convention matches the packing-vector notation
// "(7|4,1,2,2,2,2,2,2,2)", so printed vectors paste directly into tests.
class HomologyClass {
public:
    HomologyClass(Basis basis, std::vector<Int> coeffs)
        : basis_(basis), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != basis_.rank())
            throw InvariantError("coefficient count does not match basis rank");
    }

    const Basis& basis() const { return basis_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    // Degree coefficient: a for diagonal bases, x for SxS.
    Int degree() const { return coeffs_[0]; }

    // 1-based access into the b-part (diagonal bases) or y for SxS position 1.
    Int at(int position) const {
        if (position < 0 || position >= basis_.rank())
            throw IndexOutOfRangeError("coefficient position out of range");
        return coeffs_[static_cast<std::size_t>(position)];
    }

    friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const HomologyClass& a, const HomologyClass& b) {
        return !(a == b);
    }
    // Lexicographic on coefficient vectors; the canonical ordering used by
    // every enumeration.
    friend bool operator<(const HomologyClass& a, const HomologyClass& b) {
        return a.coeffs_ < b.coeffs_;
    }

    friend HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
    friend HomologyClass operator-(const HomologyClass& a, const HomologyClass& b);
    friend HomologyClass operator*(Int s, const HomologyClass& a);
    HomologyClass operator-() const { return Int(-1) * (*this); }

private:
    Basis basis_;
    std::vector<Int> coeffs_;
};

// Mod-2 reduction of a class; bits follow the same coefficient positions.
class Z2Class {
public:
    Z2Class(Basis basis, std::vector<std::uint8_t> bits)
        : basis_(basis), bits_(std::move(bits)) {
        if (static_cast<int>(bits_.size()) != basis_.rank())
            throw InvariantError("bit count does not match basis rank");
        for (auto& b : bits_) b &= 1u;
    }

    const Basis& basis() const { return basis_; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    bool is_zero() const {
        for (auto b : bits_)
            if (b) return false;
        return true;
    }

    friend bool operator==(const Z2Class& a, const Z2Class& b) {
        return a.basis_ == b.basis_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Z2Class& a, const Z2Class& b) { return !(a == b); }
    friend bool operator<(const Z2Class& a, const Z2Class& b) { return a.bits_ < b.bits_; }

private:
    Basis basis_;
    std::vector<std::uint8_t> bits_;
};

// -- constructors for the standard generators ------------------------------

HomologyClass zero_class(const Basis& basis);
// H for CP2Blowup/MBasis.
HomologyClass line_class(const Basis& basis);
// Ei (1-based position i of the b-part). For MBasis, positions 1..3 are the
// Ui generators and positions >= 4 the Ei.
HomologyClass generator(const Basis& basis, int i);
HomologyClass sxs_a();
HomologyClass sxs_b();

// -- intersection form -----------------------------------------------------

// Symmetric bilinear pairing. Diagonal bases: a*a' - sum bi*bi'.
// SxS: x*y' + x'*y. Throws BasisMismatchError when the bases differ.
Int pair(const HomologyClass& a, const HomologyClass& b);

inline Int self_intersection(const HomologyClass& a) { return pair(a, a); }

// K0 = -3H + E1 + ... + Ek for CP2Blowup, -2A - 2B for SxS.
// MBasis is unsupported: no operation pairs a class against K0 there.
HomologyClass canonical_class(const Basis& basis);

// 1 + (C.C + K.C)/2; the sum is always even because K is characteristic.
Int adjunction_genus(const HomologyClass& c);

bool is_exceptional_class(const HomologyClass& c);

// -- mod 2 structure -------------------------------------------------------

Z2Class z2_reduce(const HomologyClass& a);
int z2_pair(const Z2Class& x, const Z2Class& y);

// -- characteristic classes and the sphere obstruction ----------------------

// CP2Blowup only: true iff every coefficient of the (H, E) generator
// expansion is odd, i.e. a and all bi are odd.
bool is_characteristic(const HomologyClass& a);

// Signature of the intersection form: 1 - k on CP2Blowup(k).
Int signature(const Basis& basis);

enum class KmObstruction {
    SphereExcluded, // characteristic with xi.xi - sigma != 0 (mod 16)
    NoObstruction,
    NotCharacteristic,
};

// A characteristic class represented by a smoothly embedded sphere must
// satisfy xi.xi == sigma (mod 16); only that exclusion is reported here.
KmObstruction km_obstruction(const HomologyClass& xi);

// -- S2xS2 blow-up coordinates ----------------------------------------------

// Basis map for S^2xS^2 blown up once: A -> H - E2, B -> H - E1,
// E_blowup -> H - E1 - E2.  A triple (x, y, e) meaning x*A + y*B + e*E maps
// to ((x+y+e) | (y+e), (x+e)) on CP2Blowup(2), preserving the pairing
// (x,y,e).(x',y',e') = x*y' + x'*y - e*e'.
template <class T>
std::array<T, 3> sxs_blowup_to_cp2_coeffs(const T& x, const T& y, const T& e) {
    return {x + y + e, y + e, x + e};
}

HomologyClass sxs_blowup_to_cp2(Int x, Int y, Int e);

} // namespace rml
