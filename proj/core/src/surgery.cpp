#include "rml/surgery.hpp"

#include <algorithm>

namespace rml {

std::pair<int, int> cut_betti(const CutProfile& p) {
    if (p.lagrangian == CutProfile::Lagrangian::Sphere) return {p.b2plus, p.b2minus};
    return {p.b2plus, p.b2minus + 1};
}

HomologyClass iota(const HomologyClass& alpha) {
    if (alpha.basis().kind() != BasisKind::MBasis)
        throw UnsupportedBasisError("iota expects an MBasis class");
    const int k = alpha.basis().k();
    const auto& c = alpha.coeffs();
    const Int t1 = c[1], t2 = c[2], t3 = c[3];
    if (((t1 + t2 + t3) % 2 + 2) % 2 != 0)
        throw ParityError("t1 + t2 + t3 must be even: the class pairs nontrivially with L");

    std::vector<Int> out(static_cast<std::size_t>(k) + 2, 0);
    out[0] = c[0];
    out[1] = (-t1 + t2 + t3) / 2; // E0'
    out[2] = (t1 - t2 + t3) / 2;  // E1'
    out[3] = (t1 + t2 - t3) / 2;  // E2'
    out[4] = (t1 + t2 + t3) / 2;  // E3'
    for (int i = 4; i <= k; ++i) out[static_cast<std::size_t>(i) + 1] = c[static_cast<std::size_t>(i)];
    return HomologyClass(Basis::cp2_blowup(k + 1), std::move(out));
}

HomologyClass iota_inverse(const HomologyClass& c) {
    if (c.basis().kind() != BasisKind::CP2Blowup)
        throw UnsupportedBasisError("iota_inverse expects a CP2Blowup class");
    const int rank_k = c.basis().k(); // = k + 1
    if (rank_k < 4) throw UnsupportedBasisError("iota_inverse needs rank k+1 >= 4");
    const auto& b = c.coeffs();
    if (b[4] != b[1] + b[2] + b[3])
        throw NotInImageError("class does not pair to zero with the cut divisor");

    const int k = rank_k - 1;
    std::vector<Int> out(static_cast<std::size_t>(k) + 1, 0);
    out[0] = b[0];
    out[1] = b[2] + b[3]; // t1
    out[2] = b[1] + b[3]; // t2
    out[3] = b[1] + b[2]; // t3
    for (int i = 5; i <= rank_k; ++i) out[static_cast<std::size_t>(i) - 1] = b[static_cast<std::size_t>(i)];
    return HomologyClass(Basis::mbasis(k), std::move(out));
}

HomologyClass cut_divisor_class(int k) {
    if (k < 3) throw InvariantError("cut divisor needs k >= 3");
    std::vector<Int> c(static_cast<std::size_t>(k) + 2, 0);
    c[1] = c[2] = c[3] = 1;
    c[4] = -1;
    return HomologyClass(Basis::cp2_blowup(k + 1), std::move(c));
}

Minus4Result classify_minus4(const HomologyClass& z, Int bound) {
    const Basis& basis = z.basis();
    if (basis.kind() == BasisKind::SxS) {
        if (self_intersection(z) != -4 || pair(canonical_class(basis), z) != 2)
            throw NotMinus4SphereError("class fails Z.Z = -4, K.Z = 2 on SxS");
        // 2xy = -4 and -2(x+y) = 2 force {x,y} = {1,-2}.
        return Minus4Result{Minus4Result::Status::SxSClass, z, {}};
    }
    if (basis.kind() != BasisKind::CP2Blowup)
        throw UnsupportedBasisError("classify_minus4 expects SxS or CP2Blowup");
    if (self_intersection(z) != -4 || pair(canonical_class(basis), z) != 2)
        throw NotMinus4SphereError("class fails Z.Z = -4, K.Z = 2");
    if (basis.k() < 2)
        // No canonical representative -H + 2E1 - E2 exists below rank 3.
        return Minus4Result{Minus4Result::Status::NotWithinBound, std::nullopt, {}};

    std::vector<Int> target(static_cast<std::size_t>(basis.rank()), 0);
    target[0] = -1;
    target[1] = -2;
    target[2] = 1;
    auto res = equivalent(z, HomologyClass(basis, std::move(target)), bound);
    switch (res.status) {
        case EquivalenceResult::Status::Equivalent:
            return Minus4Result{Minus4Result::Status::CremonaCanonical, std::nullopt,
                                std::move(res.certificate)};
        case EquivalenceResult::Status::NotEquivalentWithinBound:
            return Minus4Result{Minus4Result::Status::NotWithinBound, std::nullopt, {}};
        case EquivalenceResult::Status::Inconclusive:
        default:
            return Minus4Result{Minus4Result::Status::Inconclusive, std::nullopt, {}};
    }
}

ExceptionalSystem tau_pushoff(const ExceptionalSystem& sys) {
    const Basis basis = sys.basis();
    if (basis.kind() != BasisKind::CP2Blowup || basis.k() < 4)
        throw UnsupportedBasisError("tau_pushoff expects a CP2Blowup(k+1) system, k >= 3");
    const int k = basis.k() - 1;

    std::vector<Int> s(static_cast<std::size_t>(basis.rank()), 0);
    s[1] = -1;
    s[2] = s[3] = s[4] = 1; // E1 - E2 - E3 - E4
    const HomologyClass constraint(basis, std::move(s));

    // Swapping b1 and b4 carries E1 - E2 - E3 - E4 onto the cut divisor
    // E3' - E0' - E1' - E2', after which iota_inverse applies memberwise.
    const CremonaMove relabel = CremonaMove::swap(1, 4);
    std::vector<HomologyClass> members;
    members.reserve(sys.classes().size());
    for (const auto& c : sys.classes()) {
        if (pair(c, constraint) != 0)
            throw NotInImageError("system member pairs nontrivially with the (-4)-class");
        members.push_back(iota_inverse(apply_move(c, relabel)));
    }

    ExceptionalSystem out(Basis::mbasis(k), std::move(members), sys.size());

    // [L] = U1 + U2 + U3: every member must pair to zero with it mod 2.
    std::vector<Int> l(static_cast<std::size_t>(k) + 1, 0);
    l[1] = l[2] = l[3] = -1;
    const Z2Class l2 = z2_reduce(HomologyClass(Basis::mbasis(k), std::move(l)));
    for (const auto& m : out.classes())
        if (z2_pair(z2_reduce(m), l2) != 0)
            throw Error("internal: tau image not Z2-orthogonal to U1+U2+U3");
    return out;
}

} // namespace rml
