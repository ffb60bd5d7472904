// barytet: exact-integer verification that every lattice barycentric
// tetrahedron is unimodularly equivalent to T(3,3,4) or T(7,11,20).

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "barytet/cli.hpp"

namespace {

using barytet::i64;

int emit(const barytet::Report& rep, const std::string& mode) {
    std::cout << (mode == "json" ? barytet::emit_json(rep) : barytet::emit_text(rep));
    return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classify lattice barycentric tetrahedra T(a,b,c) with exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string mode = "text";
    app.add_option("--emit", mode, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    i64 a = 0, b = 0, c = 0;
    auto* check = app.add_subcommand("check", "run gcd criteria and point census on T(a,b,c)");
    check->add_option("a", a, "apex x")->required();
    check->add_option("b", b, "apex y")->required();
    check->add_option("c", c, "apex z, nonzero")->required();

    i64 cmax = 0;
    auto* search = app.add_subcommand("search", "enumerate lattice barycentric T(a,b,c), c <= cmax");
    search->add_option("--cmax", cmax, "largest c to scan (>= 4)")->required();

    i64 ma = 0, mb = 0, mc = 0;
    auto* maps = app.add_subcommand("maps", "build and verify the four grounding maps of T(a,b,c)");
    maps->add_option("a", ma, "apex x")->required();
    maps->add_option("b", mb, "apex y")->required();
    maps->add_option("c", mc, "apex z, nonzero")->required();

    i64 gmax = 25;
    auto* cases = app.add_subcommand("cases", "rerun both case studies against the reference tables");
    cases->add_option("--gmax", gmax, "largest odd modulus to scan")->capture_default_str();

    i64 a1 = 0, b1 = 0, c1 = 0, a2 = 0, b2 = 0, c2 = 0;
    auto* equiv = app.add_subcommand("equiv", "decide unimodular equivalence of two grounded tetrahedra");
    equiv->add_option("a1", a1)->required();
    equiv->add_option("b1", b1)->required();
    equiv->add_option("c1", c1)->required();
    equiv->add_option("a2", a2)->required();
    equiv->add_option("b2", b2)->required();
    equiv->add_option("c2", c2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : barytet::kExitUsage;
    }

    try {
        if (*check) return emit(barytet::cmd_check(a, b, c), mode);
        if (*search) {
            if (cmax < 4) {
                std::cerr << "search: --cmax must be at least 4\n";
                return barytet::kExitUsage;
            }
            return emit(barytet::cmd_search(cmax), mode);
        }
        if (*maps) return emit(barytet::cmd_maps(ma, mb, mc), mode);
        if (*cases) {
            if (gmax < 1) {
                std::cerr << "cases: --gmax must be positive\n";
                return barytet::kExitUsage;
            }
            return emit(barytet::cmd_cases(gmax), mode);
        }
        if (*equiv) return emit(barytet::cmd_equiv(a1, b1, c1, a2, b2, c2), mode);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return barytet::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return barytet::kExitInconsistent;
    }
    return barytet::kExitUsage;
}
