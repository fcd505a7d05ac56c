// Batch command-line frontend over the lattice library with stable JSON
// output on stdout. Exit codes: 0 success, 2 validation error, 3 when
// --strict is set and a result is inconclusive.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "rml/io.hpp"
#include "rml/surgery.hpp"

namespace {

using rml::Json;

constexpr const char* kSchema = "v1";

int g_exit_code = 0;
bool g_strict = false;

void emit(Json j) {
    j["schema"] = kSchema;
    std::cout << j.dump(2) << "\n";
}

void note_inconclusive() {
    if (g_strict) g_exit_code = 3;
}

std::string feasibility_str(rml::Feasibility f) {
    switch (f) {
        case rml::Feasibility::Yes: return "yes";
        case rml::Feasibility::No: return "no";
        case rml::Feasibility::Inconclusive: note_inconclusive(); return "inconclusive";
    }
    return {};
}

// Parse two classes into a common basis, growing the smaller symbolic one.
std::pair<rml::HomologyClass, rml::HomologyClass> parse_pair(
    const std::string& a, const std::string& b, std::optional<int> k,
    std::optional<rml::BasisKind> kind) {
    rml::HomologyClass ca = rml::parse_class(a, k, kind);
    rml::HomologyClass cb = rml::parse_class(b, k, kind);
    if (ca.basis() != cb.basis() && !k && ca.basis().kind() == cb.basis().kind() &&
        ca.basis().kind() != rml::BasisKind::SxS) {
        const int unified = std::max(ca.basis().k(), cb.basis().k());
        ca = rml::parse_class(a, unified, kind);
        cb = rml::parse_class(b, unified, kind);
    }
    return {std::move(ca), std::move(cb)};
}

Json certificate_json(const rml::MoveSequence& moves) { return rml::to_json(moves); }

rml::Json load_json_arg(const std::string& arg) {
    if (arg == "-") {
        return Json::parse(std::cin);
    }
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw rml::ParseError("cannot open " + arg.substr(1));
        return Json::parse(in);
    }
    return Json::parse(arg);
}

Json systems_report(int k, const std::string& mode, const Json& constraint,
                    const std::vector<rml::ExceptionalSystem>& systems) {
    Json list = Json::array();
    for (const auto& s : systems) list.push_back(rml::to_json(s));
    return Json{{"k", k},
                {"mode", mode},
                {"constraint", constraint},
                {"count", systems.size()},
                {"systems", list}};
}

std::optional<rml::BasisKind> parse_basis_flag(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name == "cp2") return rml::BasisKind::CP2Blowup;
    if (name == "mbasis") return rml::BasisKind::MBasis;
    if (name == "sxs") return rml::BasisKind::SxS;
    throw rml::ParseError("unknown basis '" + name + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-lattice computations for rational 4-manifolds"};
    app.require_subcommand(1);
    app.add_flag("--strict", g_strict, "exit 3 when any result is inconclusive");

    // LATTICE_THREADS caps internal parallelism; all computations here are
    // single-threaded and deterministic, so any positive value is accepted.
    if (const char* threads = std::getenv("LATTICE_THREADS")) {
        const long n = std::strtol(threads, nullptr, 10);
        if (n < 1 && threads[0] != '\0') {
            std::cerr << "warning: ignoring LATTICE_THREADS=" << threads << "\n";
        }
    }

    std::string arg_a, arg_b, arg_class, arg_constraint, arg_classes, arg_sizes;
    std::string arg_mode = "z2", arg_ambient = "cp2", arg_basis, arg_lagrangian = "rp2";
    std::string arg_area = "1", arg_beta = "1/2", arg_cert;
    std::optional<int> arg_k;
    int arg_size = -1, arg_b2plus = 1, arg_b2minus = 0, arg_kmin = 1, arg_kmax = 8;
    long long arg_bound = 16, arg_max_degree = -1, arg_max_states = 4'000'000;
    bool arg_verify = false;

    auto add_k = [&](CLI::App* cmd) { cmd->add_option("--k", arg_k, "ambient blow-up count"); };

    auto* c_pair = app.add_subcommand("pair", "intersection pairing of two classes");
    c_pair->add_option("--a", arg_a)->required();
    c_pair->add_option("--b", arg_b)->required();
    c_pair->add_option("--basis", arg_basis, "cp2|mbasis|sxs");
    add_k(c_pair);

    auto* c_genus = app.add_subcommand("genus", "adjunction genus of a class");
    c_genus->add_option("--class", arg_class)->required();
    add_k(c_genus);

    auto* c_reduce = app.add_subcommand("reduce", "sort-and-reflect reduction");
    c_reduce->add_option("--class", arg_class)->required();
    add_k(c_reduce);

    auto* c_equiv = app.add_subcommand("equivalent", "Cremona equivalence search");
    c_equiv->add_option("--a", arg_a)->required();
    c_equiv->add_option("--b", arg_b)->required();
    c_equiv->add_option("--bound", arg_bound, "coefficient cap for the search");
    c_equiv->add_option("--max-states", arg_max_states);
    c_equiv->add_flag("--verify", arg_verify, "replay --certificate from --a to --b");
    c_equiv->add_option("--certificate", arg_cert, "JSON array, @file, or - for stdin");
    add_k(c_equiv);

    auto* c_enum = app.add_subcommand("enumerate-exceptional", "all exceptional classes");
    c_enum->add_option("--k", arg_k)->required();
    c_enum->add_option("--max-degree", arg_max_degree,
                       "bounded scan (required for k >= 9)");

    auto* c_sys = app.add_subcommand("systems", "orthogonal exceptional systems");
    c_sys->add_option("--mode", arg_mode, "z2|z")->required();
    c_sys->add_option("--constraint", arg_constraint)->required();
    c_sys->add_option("--size", arg_size, "system size (defaults to full size)");
    add_k(c_sys);

    auto* c_norm = app.add_subcommand("normalize-system", "carry a system to {E1..Ek}");
    c_norm->add_option("--classes", arg_classes, "semicolon-separated classes")->required();
    add_k(c_norm);

    auto* c_iota = app.add_subcommand("iota", "cut monomorphism MBasis(k) -> CP2Blowup(k+1)");
    c_iota->add_option("--class", arg_class)->required();
    add_k(c_iota);

    auto* c_iotainv = app.add_subcommand("iota-inverse", "inverse on the cut-divisor complement");
    c_iotainv->add_option("--class", arg_class)->required();
    add_k(c_iotainv);

    auto* c_cls4 = app.add_subcommand("classify-minus4", "classify a (-4)-sphere class");
    c_cls4->add_option("--class", arg_class)->required();
    c_cls4->add_option("--bound", arg_bound);
    add_k(c_cls4);

    auto* c_cut = app.add_subcommand("cut-betti", "Betti bookkeeping under cutting");
    c_cut->add_option("--lagrangian", arg_lagrangian, "sphere|rp2")->required();
    c_cut->add_option("--b2plus", arg_b2plus)->required();
    c_cut->add_option("--b2minus", arg_b2minus)->required();

    auto* c_km = app.add_subcommand("km", "characteristic-class sphere obstruction");
    c_km->add_option("--class", arg_class)->required();
    add_k(c_km);

    auto* c_pack = app.add_subcommand("pack", "ball-packing feasibility");
    c_pack->add_option("--ambient", arg_ambient, "cp2|sxs|cp2-rp2");
    c_pack->add_option("--area", arg_area, "line area (cp2) or alpha (sxs)");
    c_pack->add_option("--beta", arg_beta, "second factor area (sxs)");
    c_pack->add_option("--sizes", arg_sizes, "e.g. 1/3,1/3 or 1/3x8");

    auto* c_packrp2 = app.add_subcommand("pack-rp2", "packing of CP2 \\ RP2 at line area 1");
    c_packrp2->add_option("--sizes", arg_sizes);

    auto* c_census = app.add_subcommand("census", "full-size system counts, both modes");
    c_census->add_option("--kmin", arg_kmin);
    c_census->add_option("--kmax", arg_kmax);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_pair->parsed()) {
            auto [a, b] = parse_pair(arg_a, arg_b, arg_k, parse_basis_flag(arg_basis));
            emit(Json{{"value", rml::pair(a, b)},
                      {"a", rml::to_json(a)},
                      {"b", rml::to_json(b)}});
        } else if (c_genus->parsed()) {
            auto c = rml::parse_class(arg_class, arg_k);
            emit(Json{{"genus", rml::adjunction_genus(c)}, {"class", rml::to_json(c)}});
        } else if (c_reduce->parsed()) {
            auto c = rml::parse_class(arg_class, arg_k);
            auto res = rml::reduce(c);
            emit(Json{{"input", rml::to_json(c)},
                      {"reduced", rml::to_json(res.vector)},
                      {"is_reduced", rml::is_reduced(res.vector)},
                      {"certificate", certificate_json(res.certificate)}});
        } else if (c_equiv->parsed()) {
            auto [a, b] = parse_pair(arg_a, arg_b, arg_k, std::nullopt);
            if (arg_verify) {
                auto cert = rml::moves_from_json(load_json_arg(arg_cert));
                auto result = rml::apply_sequence(a, cert);
                const bool ok = result == b;
                emit(Json{{"verified", ok}, {"result", rml::to_json(result)}});
                return ok ? 0 : 1;
            }
            auto res = rml::equivalent(a, b, arg_bound,
                                       static_cast<std::size_t>(arg_max_states));
            std::string status;
            switch (res.status) {
                case rml::EquivalenceResult::Status::Equivalent: status = "equivalent"; break;
                case rml::EquivalenceResult::Status::NotEquivalentWithinBound:
                    status = "not_equivalent_within_bound";
                    break;
                case rml::EquivalenceResult::Status::Inconclusive:
                    status = "inconclusive";
                    note_inconclusive();
                    break;
            }
            emit(Json{{"status", status}, {"certificate", certificate_json(res.certificate)}});
        } else if (c_enum->parsed()) {
            const int k = *arg_k;
            Json classes = Json::array();
            bool complete = true;
            if (arg_max_degree >= 0) {
                auto res = rml::enumerate_exceptional_bounded(k, arg_max_degree);
                complete = res.complete;
                for (const auto& c : res.classes) classes.push_back(rml::to_json(c));
            } else {
                for (const auto& c : rml::enumerate_exceptional(k))
                    classes.push_back(rml::to_json(c));
            }
            emit(Json{{"k", k},
                      {"count", classes.size()},
                      {"complete", complete},
                      {"classes", classes}});
        } else if (c_sys->parsed()) {
            auto constraint = rml::parse_class(arg_constraint, arg_k);
            const int size = arg_size >= 0 ? arg_size : constraint.basis().k();
            std::vector<rml::ExceptionalSystem> systems;
            if (arg_mode == "z2") {
                systems = rml::enumerate_systems(rml::z2_reduce(constraint), size);
            } else if (arg_mode == "z") {
                systems = rml::enumerate_systems(constraint, size);
            } else {
                throw rml::ParseError("mode must be z2 or z");
            }
            emit(systems_report(constraint.basis().k(), arg_mode,
                                rml::to_json(constraint), systems));
        } else if (c_norm->parsed()) {
            std::vector<std::string> parts;
            std::size_t start = 0;
            while (start <= arg_classes.size()) {
                auto semi = arg_classes.find(';', start);
                parts.push_back(arg_classes.substr(
                    start, semi == std::string::npos ? semi : semi - start));
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
            int k = arg_k.value_or(0);
            if (!arg_k)
                for (const auto& p : parts)
                    k = std::max(k, rml::parse_class(p).basis().k());
            std::vector<rml::HomologyClass> members;
            for (const auto& p : parts) members.push_back(rml::parse_class(p, k));
            rml::ExceptionalSystem sys(rml::Basis::cp2_blowup(k), members,
                                       static_cast<int>(members.size()));
            auto cert = rml::normalize_system(sys);
            Json normalized = Json::array();
            for (const auto& m : sys.classes())
                normalized.push_back(rml::to_json(rml::apply_sequence(m, cert)));
            emit(Json{{"certificate", certificate_json(cert)}, {"normalized", normalized}});
        } else if (c_iota->parsed()) {
            auto c = rml::parse_class(arg_class, arg_k, rml::BasisKind::MBasis);
            auto image = rml::iota(c);
            emit(Json{{"input", rml::to_json(c)}, {"image", rml::to_json(image)}});
        } else if (c_iotainv->parsed()) {
            auto c = rml::parse_class(arg_class, arg_k, rml::BasisKind::CP2Blowup);
            auto pre = rml::iota_inverse(c);
            emit(Json{{"input", rml::to_json(c)}, {"preimage", rml::to_json(pre)}});
        } else if (c_cls4->parsed()) {
            auto c = rml::parse_class(arg_class, arg_k);
            auto res = rml::classify_minus4(c, arg_bound);
            Json j;
            switch (res.status) {
                case rml::Minus4Result::Status::SxSClass:
                    j["status"] = "sxs_class";
                    j["class"] = rml::to_json(*res.sxs_class);
                    break;
                case rml::Minus4Result::Status::CremonaCanonical:
                    j["status"] = "cremona_canonical";
                    j["certificate"] = certificate_json(res.certificate);
                    break;
                case rml::Minus4Result::Status::NotWithinBound:
                    j["status"] = "not_within_bound";
                    break;
                case rml::Minus4Result::Status::Inconclusive:
                    j["status"] = "inconclusive";
                    note_inconclusive();
                    break;
            }
            emit(std::move(j));
        } else if (c_cut->parsed()) {
            rml::CutProfile::Lagrangian l;
            if (arg_lagrangian == "sphere")
                l = rml::CutProfile::Lagrangian::Sphere;
            else if (arg_lagrangian == "rp2")
                l = rml::CutProfile::Lagrangian::RP2;
            else
                throw rml::ParseError("lagrangian must be sphere or rp2");
            auto [plus, minus] = rml::cut_betti(rml::CutProfile(l, arg_b2plus, arg_b2minus));
            emit(Json{{"b2plus", plus}, {"b2minus", minus}});
        } else if (c_km->parsed()) {
            auto c = rml::parse_class(arg_class, arg_k);
            Json j{{"class", rml::to_json(c)}};
            const bool ch = rml::is_characteristic(c);
            j["characteristic"] = ch;
            if (ch) {
                const rml::Int sq = rml::self_intersection(c);
                const rml::Int sig = rml::signature(c.basis());
                j["xi_squared"] = sq;
                j["signature"] = sig;
                j["difference"] = sq - sig;
            }
            switch (rml::km_obstruction(c)) {
                case rml::KmObstruction::SphereExcluded: j["result"] = "sphere_excluded"; break;
                case rml::KmObstruction::NoObstruction: j["result"] = "no_obstruction"; break;
                case rml::KmObstruction::NotCharacteristic:
                    j["result"] = "not_characteristic";
                    break;
            }
            emit(std::move(j));
        } else if (c_pack->parsed() || c_packrp2->parsed()) {
            auto sizes = rml::parse_sizes(arg_sizes);
            rml::PackingResult res = [&] {
                if (c_packrp2->parsed()) return rml::rp2_complement_packing(sizes);
                const rml::Rational area = rml::parse_rational(arg_area);
                if (arg_ambient == "cp2")
                    return rml::packing_feasible(rml::PackingProblem::cp2(area, sizes));
                if (arg_ambient == "sxs")
                    return rml::packing_feasible(rml::PackingProblem::sxs(
                        area, rml::parse_rational(arg_beta), sizes));
                if (arg_ambient == "cp2-rp2")
                    return rml::packing_feasible(
                        rml::PackingProblem::cp2_minus_rp2(area, sizes));
                throw rml::ParseError("ambient must be cp2, sxs or cp2-rp2");
            }();
            Json j{{"feasible", feasibility_str(res.status)},
                   {"certificate", certificate_json(res.detail.certificate)}};
            if (res.blowup) j["blowup"] = rml::to_json(*res.blowup);
            if (res.detail.scaled) j["scaled"] = rml::to_json(*res.detail.scaled);
            if (res.detail.reduced) j["reduced"] = rml::to_json(*res.detail.reduced);
            emit(std::move(j));
        } else if (c_census->parsed()) {
            Json entries = Json::array();
            Json counts_z2 = Json::array(), counts_z = Json::array();
            for (int k = arg_kmin; k <= arg_kmax; ++k) {
                auto entry = rml::census_entry(k);
                counts_z2.push_back(entry.z2_systems.size());
                counts_z.push_back(entry.z_systems.size());
                const auto h2 = rml::z2_reduce(rml::line_class(rml::Basis::cp2_blowup(k)));
                entries.push_back(Json{
                    {"k", k},
                    {"z2", systems_report(k, "z2", rml::to_json(h2), entry.z2_systems)},
                    {"z", systems_report(k + 1, "z", rml::to_json(entry.z_constraint),
                                         entry.z_systems)}});
            }
            emit(Json{{"kmin", arg_kmin},
                      {"kmax", arg_kmax},
                      {"counts", Json{{"z2", counts_z2}, {"z", counts_z}}},
                      {"entries", entries}});
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        emit(Json{{"error", Json{{"type", "validation"}, {"message", e.what()}}}});
        return 2;
    }
    return g_exit_code;
}
