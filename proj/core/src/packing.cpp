#include "rml/packing.hpp"

#include <algorithm>

namespace rml {

PackingProblem::PackingProblem(Ambient a, Rational area, Rational beta,
                               std::vector<Rational> sizes)
    : ambient_(a), area_(area), beta_(beta), sizes_(std::move(sizes)) {
    if (!area_.is_positive()) throw InvariantError("base area must be positive");
    if (ambient_ == Ambient::SxS && !beta_.is_positive())
        throw InvariantError("both factor areas must be positive");
    for (const auto& s : sizes_)
        if (!s.is_positive()) throw InvariantError("ball sizes must be positive");
}

PackingProblem PackingProblem::cp2(Rational line_area, std::vector<Rational> sizes) {
    return PackingProblem(Ambient::CP2, line_area, Rational(0), std::move(sizes));
}

PackingProblem PackingProblem::sxs(Rational alpha, Rational beta, std::vector<Rational> sizes) {
    return PackingProblem(Ambient::SxS, alpha, beta, std::move(sizes));
}

PackingProblem PackingProblem::cp2_minus_rp2(Rational line_area, std::vector<Rational> sizes) {
    return PackingProblem(Ambient::CP2MinusRP2, line_area, Rational(0), std::move(sizes));
}

FormVector blowup_class(const PackingProblem& p) {
    const auto& sizes = p.sizes();
    switch (p.ambient()) {
        case PackingProblem::Ambient::CP2: {
            std::vector<Rational> c;
            c.reserve(sizes.size() + 1);
            c.push_back(p.area());
            for (const auto& s : sizes) c.push_back(s);
            return FormVector(Basis::cp2_blowup(static_cast<int>(sizes.size())), std::move(c));
        }
        case PackingProblem::Ambient::SxS: {
            if (sizes.empty())
                throw InvariantError("SxS blow-up vector needs at least one ball");
            // Dual class of the form with areas (alpha, beta, l1) maps through
            // A -> H - E2, B -> H - E1, E -> H - E1 - E2 to
            // (alpha + beta - l1 | alpha - l1, beta - l1).
            std::vector<Rational> c;
            c.reserve(sizes.size() + 2);
            c.push_back(p.area() + p.beta() - sizes[0]);
            c.push_back(p.area() - sizes[0]);
            c.push_back(p.beta() - sizes[0]);
            for (std::size_t i = 1; i < sizes.size(); ++i) c.push_back(sizes[i]);
            return FormVector(Basis::cp2_blowup(static_cast<int>(sizes.size()) + 1),
                              std::move(c));
        }
        case PackingProblem::Ambient::CP2MinusRP2:
            throw UnsupportedBasisError(
                "blowup_class supports CP2 and SxS; use packing_feasible for CP2\\RP2");
    }
    throw UnsupportedBasisError("unknown ambient");
}

SymplecticClassResult is_symplectic_class(const FormVector& v) {
    if (v.basis.kind() != BasisKind::CP2Blowup)
        throw UnsupportedBasisError("symplectic-class criterion expects a CP2Blowup vector");

    const Int scale = lcm_of_denominators(v.coeffs.data(), v.coeffs.data() + v.coeffs.size());
    std::vector<Int> c;
    c.reserve(v.coeffs.size());
    for (const auto& r : v.coeffs) c.push_back(r.num() * (scale / r.den()));
    // Pad to rank >= 3 so the triple reflection exists; zero entries are
    // allowed by the reduced-vector criterion.
    while (c.size() < 4) c.push_back(0);
    HomologyClass scaled(Basis::cp2_blowup(static_cast<int>(c.size()) - 1), std::move(c));

    if (scaled.degree() <= 0) return {Feasibility::No, scaled, std::nullopt, {}};

    std::optional<ReduceResult> red;
    try {
        red = reduce(scaled);
    } catch (const NonTerminatingError&) {
        return {Feasibility::Inconclusive, scaled, std::nullopt, {}};
    }

    const auto& r = red->vector.coeffs();
    bool ok = r[0] > 0;
    Int sq = 0;
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i] < 0) ok = false;
        sq += r[i] * r[i];
    }
    ok = ok && is_reduced(red->vector) && r[0] * r[0] > sq;
    return {ok ? Feasibility::Yes : Feasibility::No, scaled, red->vector,
            std::move(red->certificate)};
}

PackingResult packing_feasible(const PackingProblem& p) {
    if (p.ambient() == PackingProblem::Ambient::CP2MinusRP2) {
        // Packing CP2\RP2 at line area c is equivalent to packing
        // SxS(c, c/2); the case c = 1 is rp2_complement_packing.
        return packing_feasible(
            PackingProblem::sxs(p.area(), p.area() / Rational(2), p.sizes()));
    }
    if (p.sizes().empty()) {
        return {Feasibility::Yes, std::nullopt,
                SymplecticClassResult{Feasibility::Yes, std::nullopt, std::nullopt, {}}};
    }
    FormVector v = blowup_class(p);
    SymplecticClassResult detail = is_symplectic_class(v);
    return {detail.status, std::move(v), std::move(detail)};
}

PackingResult rp2_complement_packing(const std::vector<Rational>& sizes) {
    return packing_feasible(PackingProblem::cp2_minus_rp2(Rational(1), sizes));
}

} // namespace rml
