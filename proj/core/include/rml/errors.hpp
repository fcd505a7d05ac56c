#pragma once

#include <stdexcept>
#include <string>

namespace rml {

// Base type for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two classes (or a class and a constraint) live in different bases.
struct BasisMismatchError : Error {
    using Error::Error;
};

// A generator index does not exist in the target basis.
struct IndexOutOfRangeError : Error {
    using Error::Error;
};

// The operation is not defined on this basis kind.
struct UnsupportedBasisError : Error {
    using Error::Error;
};

// Exhaustive enumeration was requested at a rank where the class set is
// infinite (k >= 9).
struct UnsupportedRankError : Error {
    using Error::Error;
};

// The sort-and-reflect loop exceeded its iteration cap; the input lies
// outside the reduction criterion's domain.
struct NonTerminatingError : Error {
    using Error::Error;
};

// t1 + t2 + t3 is odd, so the class is not in the domain of the cut
// monomorphism.
struct ParityError : Error {
    using Error::Error;
};

// The class is not orthogonal to the cut divisor, so it has no preimage.
struct NotInImageError : Error {
    using Error::Error;
};

// The class fails the numeric (-4)-sphere conditions Z.Z = -4, K.Z = 2.
struct NotMinus4SphereError : Error {
    using Error::Error;
};

// Exhaustive orbit search failed to carry the system to {E1, ..., Ek}.
struct NotNormalizableError : Error {
    using Error::Error;
};

// A constructor argument violates a documented invariant.
struct InvariantError : Error {
    using Error::Error;
};

// Malformed textual or JSON input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace rml
