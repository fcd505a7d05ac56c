#pragma once

#include <string>

#include "rml/errors.hpp"

namespace rml {

enum class BasisKind {
    CP2Blowup, // CP^2 # k conj-CP^2, generators (H, E1, ..., Ek)
    SxS,       // S^2 x S^2, factor classes (A, B)
    MBasis,    // cut-manifold basis (H, U1, U2, U3, E4, ..., Ek), k >= 3
};

// Ambient lattice descriptor. Rank counts one degree generator plus the
// exceptional/auxiliary generators; for SxS the rank is 2.
class Basis {
public:
    static Basis cp2_blowup(int k) {
        if (k < 0) throw InvariantError("cp2_blowup requires k >= 0");
        return Basis(BasisKind::CP2Blowup, k);
    }
    static Basis sxs() { return Basis(BasisKind::SxS, 0); }
    static Basis mbasis(int k) {
        if (k < 3) throw InvariantError("mbasis requires k >= 3");
        return Basis(BasisKind::MBasis, k);
    }

    BasisKind kind() const { return kind_; }
    int k() const { return k_; }

    int rank() const {
        switch (kind_) {
            case BasisKind::SxS: return 2;
            case BasisKind::CP2Blowup:
            case BasisKind::MBasis: return k_ + 1;
        }
        return 0; // unreachable
    }

    bool is_diagonal() const { return kind_ != BasisKind::SxS; }

    std::string str() const {
        switch (kind_) {
            case BasisKind::CP2Blowup: return "CP2Blowup(" + std::to_string(k_) + ")";
            case BasisKind::SxS: return "SxS";
            case BasisKind::MBasis: return "MBasis(" + std::to_string(k_) + ")";
        }
        return {};
    }

    friend bool operator==(const Basis& a, const Basis& b) {
        return a.kind_ == b.kind_ && a.k_ == b.k_;
    }
    friend bool operator!=(const Basis& a, const Basis& b) { return !(a == b); }

private:
    Basis(BasisKind kind, int k) : kind_(kind), k_(k) {}

    BasisKind kind_;
    int k_;
};

} // namespace rml
