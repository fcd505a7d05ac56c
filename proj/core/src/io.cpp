#include "rml/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace rml {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

Int parse_int(const std::string& s, std::size_t& pos) {
    const std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw ParseError("expected an integer in '" + s + "' at " +
                                      std::to_string(start));
    return std::stoll(s.substr(start, pos - start));
}

HomologyClass parse_tuple(const std::string& s, std::optional<int> k,
                          std::optional<BasisKind> kind) {
    std::size_t pos = 1; // past '('
    std::vector<Int> coeffs;
    coeffs.push_back(parse_int(s, pos));
    if (pos >= s.size() || s[pos] != '|') throw ParseError("expected '|' in " + s);
    ++pos;
    if (pos < s.size() && s[pos] != ')') {
        coeffs.push_back(parse_int(s, pos));
        while (pos < s.size() && s[pos] == ',') {
            ++pos;
            coeffs.push_back(parse_int(s, pos));
        }
    }
    if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')' in " + s);
    if (pos + 1 != s.size()) throw ParseError("trailing characters in " + s);

    const int entries = static_cast<int>(coeffs.size()) - 1;
    if (k && *k != entries)
        throw ParseError("tuple has " + std::to_string(entries) + " entries but k=" +
                         std::to_string(*k) + " was requested");
    const BasisKind bk = kind.value_or(BasisKind::CP2Blowup);
    switch (bk) {
        case BasisKind::CP2Blowup: return HomologyClass(Basis::cp2_blowup(entries), coeffs);
        case BasisKind::MBasis: return HomologyClass(Basis::mbasis(entries), coeffs);
        case BasisKind::SxS: throw ParseError("tuple form is not defined on SxS");
    }
    throw ParseError("unknown basis kind");
}

HomologyClass parse_symbolic(const std::string& s, std::optional<int> k,
                             std::optional<BasisKind> kind) {
    Int c_h = 0, c_a = 0, c_b = 0;
    std::map<int, Int> c_e, c_u;
    bool saw_h = false, saw_ab = false, saw_u = false;
    int max_e = 0;

    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        Int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in " + s);
        }
        first = false;
        Int coeff = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t p = pos;
            coeff = parse_int(s, p);
            pos = p;
            if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (pos >= s.size()) throw ParseError("dangling coefficient in " + s);
        const char sym = s[pos++];
        coeff *= sign;
        switch (sym) {
            case 'H':
                c_h += coeff;
                saw_h = true;
                break;
            case 'A':
                c_a += coeff;
                saw_ab = true;
                break;
            case 'B':
                c_b += coeff;
                saw_ab = true;
                break;
            case 'E': {
                std::size_t p = pos;
                const Int idx = parse_int(s, p);
                pos = p;
                if (idx < 1) throw ParseError("E index must be >= 1 in " + s);
                c_e[static_cast<int>(idx)] += coeff;
                max_e = std::max(max_e, static_cast<int>(idx));
                break;
            }
            case 'U': {
                std::size_t p = pos;
                const Int idx = parse_int(s, p);
                pos = p;
                if (idx < 1 || idx > 3) throw ParseError("U index must be 1..3 in " + s);
                c_u[static_cast<int>(idx)] += coeff;
                saw_u = true;
                break;
            }
            default:
                throw ParseError(std::string("unknown symbol '") + sym + "' in " + s);
        }
    }

    if (saw_ab) {
        if (saw_h || saw_u || !c_e.empty())
            throw ParseError("A/B cannot mix with H, E or U terms: " + s);
        if (kind && *kind != BasisKind::SxS) throw ParseError("class has SxS symbols: " + s);
        return HomologyClass(Basis::sxs(), {c_a, c_b});
    }

    BasisKind bk = kind.value_or(saw_u ? BasisKind::MBasis : BasisKind::CP2Blowup);
    if (saw_u && bk != BasisKind::MBasis) throw ParseError("U terms need an MBasis: " + s);
    if (bk == BasisKind::MBasis && !c_e.empty() && c_e.begin()->first < 4)
        throw ParseError("MBasis E indices start at 4: " + s);

    int rank_k = bk == BasisKind::MBasis ? std::max(3, max_e) : max_e;
    if (k) {
        if (*k < rank_k)
            throw ParseError("class needs k >= " + std::to_string(rank_k));
        rank_k = *k;
    }
    const Basis basis =
        bk == BasisKind::MBasis ? Basis::mbasis(rank_k) : Basis::cp2_blowup(rank_k);
    std::vector<Int> coeffs(static_cast<std::size_t>(basis.rank()), 0);
    coeffs[0] = c_h;
    // Storage negates the generator coefficients: a*H - sum t*U - sum b*E.
    for (const auto& [i, c] : c_u) coeffs[static_cast<std::size_t>(i)] = -c;
    for (const auto& [i, c] : c_e) coeffs[static_cast<std::size_t>(i)] = -c;
    return HomologyClass(basis, std::move(coeffs));
}

} // namespace

HomologyClass parse_class(const std::string& text, std::optional<int> k,
                          std::optional<BasisKind> kind) {
    const std::string s = strip(text);
    if (s.empty()) throw ParseError("empty class");
    if (s[0] == '(') return parse_tuple(s, k, kind);
    return parse_symbolic(s, k, kind);
}

std::string format_class(const HomologyClass& c) {
    if (c.basis().kind() == BasisKind::SxS) {
        const Int x = c.coeffs()[0], y = c.coeffs()[1];
        if (x == 0 && y == 0) return "0";
        std::string out;
        auto term = [&](Int v, const char* sym) {
            if (v == 0) return;
            if (!out.empty() && v > 0) out += "+";
            if (v == -1)
                out += "-";
            else if (v != 1)
                out += std::to_string(v);
            out += sym;
        };
        term(x, "A");
        term(y, "B");
        return out;
    }
    std::string out = "(" + std::to_string(c.coeffs()[0]) + "|";
    for (std::size_t i = 1; i < c.coeffs().size(); ++i) {
        if (i > 1) out += ",";
        out += std::to_string(c.coeffs()[i]);
    }
    return out + ")";
}

Rational parse_rational(const std::string& text) {
    const std::string s = strip(text);
    std::size_t pos = 0;
    const Int num = parse_int(s, pos);
    if (pos == s.size()) return Rational(num);
    if (s[pos] != '/') throw ParseError("expected '/' in rational " + s);
    ++pos;
    const Int den = parse_int(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters in rational " + s);
    return Rational(num, den);
}

std::vector<Rational> parse_sizes(const std::string& text) {
    std::vector<Rational> out;
    const std::string s = strip(text);
    if (s.empty()) return out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? comma : comma - start);
        if (item.empty()) throw ParseError("empty size entry in " + text);
        std::size_t rep = item.find('x');
        Int count = 1;
        if (rep != std::string::npos) {
            std::size_t p = rep + 1;
            count = parse_int(item, p);
            if (p != item.size() || count < 1)
                throw ParseError("bad repeat count in " + item);
            item = item.substr(0, rep);
        }
        const Rational r = parse_rational(item);
        for (Int i = 0; i < count; ++i) out.push_back(r);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// -- json -----------------------------------------------------------------------

Json to_json(const Basis& basis) {
    switch (basis.kind()) {
        case BasisKind::CP2Blowup: return Json{{"kind", "cp2_blowup"}, {"k", basis.k()}};
        case BasisKind::SxS: return Json{{"kind", "sxs"}};
        case BasisKind::MBasis: return Json{{"kind", "mbasis"}, {"k", basis.k()}};
    }
    return {};
}

Json to_json(const HomologyClass& c) {
    Json j{{"basis", to_json(c.basis())}, {"coeffs", c.coeffs()}, {"text", format_class(c)}};
    if (c.basis().kind() == BasisKind::MBasis)
        j["t"] = {c.coeffs()[1], c.coeffs()[2], c.coeffs()[3]};
    return j;
}

Json to_json(const Z2Class& c) {
    std::vector<int> bits(c.bits().begin(), c.bits().end());
    return Json{{"basis", to_json(c.basis())}, {"bits", bits}};
}

Json to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

Json to_json(const FormVector& v) {
    Json coeffs = Json::array();
    for (const auto& r : v.coeffs) coeffs.push_back(to_json(r));
    return Json{{"basis", to_json(v.basis)}, {"coeffs", coeffs}};
}

Json to_json(const CremonaMove& m) {
    if (m.kind == CremonaMove::Kind::ReflectTriple)
        return Json{{"type", "reflect"}, {"ijk", {m.i, m.j, m.k}}};
    return Json{{"type", "swap"}, {"ij", {m.i, m.j}}};
}

Json to_json(const MoveSequence& moves) {
    Json j = Json::array();
    for (const auto& m : moves) j.push_back(to_json(m));
    return j;
}

Json to_json(const ExceptionalSystem& sys) {
    Json j = Json::array();
    for (const auto& c : sys.classes()) j.push_back(to_json(c));
    return j;
}

Basis basis_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cp2_blowup") return Basis::cp2_blowup(j.at("k").get<int>());
    if (kind == "sxs") return Basis::sxs();
    if (kind == "mbasis") return Basis::mbasis(j.at("k").get<int>());
    throw ParseError("unknown basis kind '" + kind + "'");
}

HomologyClass class_from_json(const Json& j) {
    return HomologyClass(basis_from_json(j.at("basis")), j.at("coeffs").get<std::vector<Int>>());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<Int>());
    return Rational(j.at("num").get<Int>(), j.at("den").get<Int>());
}

CremonaMove move_from_json(const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "reflect") {
        auto v = j.at("ijk").get<std::vector<int>>();
        if (v.size() != 3) throw ParseError("reflect move needs three indices");
        return CremonaMove::reflect(v[0], v[1], v[2]);
    }
    if (type == "swap") {
        auto v = j.at("ij").get<std::vector<int>>();
        if (v.size() != 2) throw ParseError("swap move needs two indices");
        return CremonaMove::swap(v[0], v[1]);
    }
    throw ParseError("unknown move type '" + type + "'");
}

MoveSequence moves_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("certificate must be a JSON array");
    MoveSequence moves;
    for (const auto& item : j) moves.push_back(move_from_json(item));
    return moves;
}

} // namespace rml
