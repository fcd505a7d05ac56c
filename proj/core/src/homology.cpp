#include "rml/homology.hpp"

namespace rml {

namespace {

void require_same_basis(const HomologyClass& a, const HomologyClass& b) {
    if (a.basis() != b.basis())
        throw BasisMismatchError("classes live in different bases: " + a.basis().str() +
                                 " vs " + b.basis().str());
}

} // namespace

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
    require_same_basis(a, b);
    std::vector<Int> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return HomologyClass(a.basis_, std::move(c));
}

HomologyClass operator-(const HomologyClass& a, const HomologyClass& b) {
    require_same_basis(a, b);
    std::vector<Int> c(a.coeffs_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
    return HomologyClass(a.basis_, std::move(c));
}

HomologyClass operator*(Int s, const HomologyClass& a) {
    std::vector<Int> c(a.coeffs_);
    for (auto& v : c) v *= s;
    return HomologyClass(a.basis_, std::move(c));
}

HomologyClass zero_class(const Basis& basis) {
    return HomologyClass(basis, std::vector<Int>(static_cast<std::size_t>(basis.rank()), 0));
}

HomologyClass line_class(const Basis& basis) {
    if (basis.kind() == BasisKind::SxS)
        throw UnsupportedBasisError("SxS has no line class");
    std::vector<Int> c(static_cast<std::size_t>(basis.rank()), 0);
    c[0] = 1;
    return HomologyClass(basis, std::move(c));
}

HomologyClass generator(const Basis& basis, int i) {
    if (basis.kind() == BasisKind::SxS)
        throw UnsupportedBasisError("SxS generators are A and B");
    if (i < 1 || i > basis.k())
        throw IndexOutOfRangeError("generator index " + std::to_string(i) +
                                   " outside 1.." + std::to_string(basis.k()));
    std::vector<Int> c(static_cast<std::size_t>(basis.rank()), 0);
    c[static_cast<std::size_t>(i)] = -1; // Ei = 0*H - (-1)*Ei
    return HomologyClass(basis, std::move(c));
}

HomologyClass sxs_a() { return HomologyClass(Basis::sxs(), {1, 0}); }
HomologyClass sxs_b() { return HomologyClass(Basis::sxs(), {0, 1}); }

Int pair(const HomologyClass& a, const HomologyClass& b) {
    require_same_basis(a, b);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    if (a.basis().kind() == BasisKind::SxS) return x[0] * y[1] + x[1] * y[0];
    Int p = x[0] * y[0];
    for (std::size_t i = 1; i < x.size(); ++i) p -= x[i] * y[i];
    return p;
}

HomologyClass canonical_class(const Basis& basis) {
    switch (basis.kind()) {
        case BasisKind::CP2Blowup: {
            std::vector<Int> c(static_cast<std::size_t>(basis.rank()), -1);
            c[0] = -3;
            return HomologyClass(basis, std::move(c));
        }
        case BasisKind::SxS:
            return HomologyClass(basis, {-2, -2});
        case BasisKind::MBasis:
            throw UnsupportedBasisError("canonical_class is not defined on MBasis");
    }
    throw UnsupportedBasisError("unknown basis kind");
}

Int adjunction_genus(const HomologyClass& c) {
    const HomologyClass k0 = canonical_class(c.basis());
    const Int s = pair(c, c) + pair(k0, c);
    // K is characteristic, so C.C + K.C is even for every integral class.
    return 1 + s / 2;
}

bool is_exceptional_class(const HomologyClass& c) {
    return pair(c, c) == -1 && pair(canonical_class(c.basis()), c) == -1;
}

Z2Class z2_reduce(const HomologyClass& a) {
    std::vector<std::uint8_t> bits(a.coeffs().size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        bits[i] = static_cast<std::uint8_t>(((a.coeffs()[i] % 2) + 2) % 2);
    return Z2Class(a.basis(), std::move(bits));
}

int z2_pair(const Z2Class& x, const Z2Class& y) {
    if (x.basis() != y.basis())
        throw BasisMismatchError("Z2 classes live in different bases");
    const auto& a = x.bits();
    const auto& b = y.bits();
    if (x.basis().kind() == BasisKind::SxS) return (a[0] * b[1] + a[1] * b[0]) & 1;
    int p = 0;
    for (std::size_t i = 0; i < a.size(); ++i) p ^= a[i] & b[i];
    return p;
}

bool is_characteristic(const HomologyClass& a) {
    if (a.basis().kind() != BasisKind::CP2Blowup)
        throw UnsupportedBasisError("is_characteristic expects a CP2Blowup basis");
    // Diagonal form: characteristic iff every generator coefficient is odd.
    for (Int c : a.coeffs())
        if (c % 2 == 0) return false;
    return true;
}

Int signature(const Basis& basis) {
    if (basis.kind() != BasisKind::CP2Blowup)
        throw UnsupportedBasisError("signature expects a CP2Blowup basis");
    return 1 - basis.k();
}

KmObstruction km_obstruction(const HomologyClass& xi) {
    if (!is_characteristic(xi)) return KmObstruction::NotCharacteristic;
    const Int diff = self_intersection(xi) - signature(xi.basis());
    return diff % 16 != 0 ? KmObstruction::SphereExcluded : KmObstruction::NoObstruction;
}

HomologyClass sxs_blowup_to_cp2(Int x, Int y, Int e) {
    auto c = sxs_blowup_to_cp2_coeffs<Int>(x, y, e);
    return HomologyClass(Basis::cp2_blowup(2), {c[0], c[1], c[2]});
}

} // namespace rml
