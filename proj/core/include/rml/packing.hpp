#pragma once

#include <optional>
#include <vector>

#include "rml/cremona.hpp"
#include "rml/homology.hpp"
#include "rml/rational.hpp"

namespace rml {

// Rational coefficient vector in the same storage convention as
// HomologyClass; used only for symplectic-form vectors.
struct FormVector {
    Basis basis;
    std::vector<Rational> coeffs;

    FormVector(Basis b, std::vector<Rational> c) : basis(b), coeffs(std::move(c)) {
        if (static_cast<int>(coeffs.size()) != basis.rank())
            throw InvariantError("coefficient count does not match basis rank");
    }
};

// Rational base symplectic class plus rational ball sizes.
class PackingProblem {
public:
    enum class Ambient { CP2, SxS, CP2MinusRP2 };

    static PackingProblem cp2(Rational line_area, std::vector<Rational> sizes);
    static PackingProblem sxs(Rational alpha, Rational beta, std::vector<Rational> sizes);
    static PackingProblem cp2_minus_rp2(Rational line_area, std::vector<Rational> sizes);

    Ambient ambient() const { return ambient_; }
    const Rational& area() const { return area_; }  // line area / alpha
    const Rational& beta() const { return beta_; }  // SxS only
    const std::vector<Rational>& sizes() const { return sizes_; }

private:
    PackingProblem(Ambient a, Rational area, Rational beta, std::vector<Rational> sizes);

    Ambient ambient_;
    Rational area_;
    Rational beta_;
    std::vector<Rational> sizes_;
};

enum class Feasibility { Yes, No, Inconclusive };

// Symplectic-class vector after blowing up one ball per size:
//   CP2(area), sizes l1..ln        -> (area | l1, ..., ln) on CP2Blowup(n);
//   SxS(alpha, beta), sizes l1..ln -> the first blow-up converts the basis,
//     (alpha+beta-l1 | alpha-l1, beta-l1), and the remaining sizes append as
//     further entries, giving a CP2Blowup(n+1) vector.
// Requires at least CP2 or SxS ambient and, for SxS, a nonempty size list.
FormVector blowup_class(const PackingProblem& p);

struct SymplecticClassResult {
    Feasibility status;
    std::optional<HomologyClass> scaled;  // integer vector handed to the reduction
    std::optional<HomologyClass> reduced; // fixed point of the reduction
    MoveSequence certificate;             // replays scaled -> reduced
};

// Reduced-vector criterion: scale by the common denominator to integers, pad
// to rank >= 3 with zero entries so triple reflections exist, reduce, then
// answer Yes iff the fixed point has a > 0, every bi >= 0 and a^2 > sum bi^2.
// Degree <= 0 after scaling is No outright; a reduction error (iteration cap)
// is Inconclusive.
SymplecticClassResult is_symplectic_class(const FormVector& v);

struct PackingResult {
    Feasibility status;
    std::optional<FormVector> blowup;
    SymplecticClassResult detail;
};

// Class-level feasibility: is_symplectic_class(blowup_class(p)). Yes is a
// certificate that the blow-up vector lies in the cone the reduced-vector
// criterion describes; an empty size list is trivially feasible.
// CP2MinusRP2 delegates to the equivalent SxS(area, area/2) problem.
PackingResult packing_feasible(const PackingProblem& p);

// Ball packing in the complement of the standard RP2 in CP2 with line area 1;
// equivalent to packing the same sizes into SxS(1, 1/2).
PackingResult rp2_complement_packing(const std::vector<Rational>& sizes);

} // namespace rml
