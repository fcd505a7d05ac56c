#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "rml/cremona.hpp"
#include "rml/enumeration.hpp"
#include "rml/homology.hpp"
#include "rml/packing.hpp"

namespace rml {

using Json = nlohmann::json;

// -- text ---------------------------------------------------------------------

// Accepts the tuple form "(a|b1,...,bk)" (coefficients in storage order) and
// the symbolic form "3H-2U1-E4-E5", "-H+2E1-E2", "A-2B", "H", "E3".
//   - U terms select MBasis, A/B terms select SxS, otherwise CP2Blowup.
//   - `k` pads a symbolic class to the requested rank (tuple forms must
//     already match it); `kind` forces the basis kind of a tuple form.
HomologyClass parse_class(const std::string& text, std::optional<int> k = std::nullopt,
                          std::optional<BasisKind> kind = std::nullopt);

// "(a|b1,...,bk)" for diagonal bases, "xA+yB" for SxS.
std::string format_class(const HomologyClass& c);

Rational parse_rational(const std::string& text);

// Comma-separated rationals with an optional repeat suffix: "1/3,1/2" or
// "1/3x8" (eight balls of size 1/3).
std::vector<Rational> parse_sizes(const std::string& text);

// -- json ---------------------------------------------------------------------

Json to_json(const Basis& basis);
Json to_json(const HomologyClass& c);
Json to_json(const Z2Class& c);
Json to_json(const Rational& r);
Json to_json(const FormVector& v);
Json to_json(const CremonaMove& m);
Json to_json(const MoveSequence& moves);
Json to_json(const ExceptionalSystem& sys);

Basis basis_from_json(const Json& j);
HomologyClass class_from_json(const Json& j);
Rational rational_from_json(const Json& j);
CremonaMove move_from_json(const Json& j);
MoveSequence moves_from_json(const Json& j);

} // namespace rml
