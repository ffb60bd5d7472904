#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "barytet/cli.hpp"

using namespace barytet;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(BARYTET_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("check reports both pipelines for T(3,3,4)") {
    Report rep = cmd_check(3, 3, 4);
    CHECK(rep.exit_code == kExitOk);
    CHECK(rep.results["pipelines_agree"] == true);
    CHECK(rep.results["criteria"]["lattice_barycentric"] == true);
    CHECK(rep.results["oracle"]["lattice_barycentric"] == true);
    CHECK(rep.results["census"]["interior"] == json::array({json::array({1, 1, 1})}));
    CHECK(rep.results["volume6"] == 4);
}

TEST_CASE("check explains a gcd failure") {
    Report rep = cmd_check(3, 7, 12);
    CHECK(rep.exit_code == kExitOk);
    CHECK(rep.results["criteria"]["fundamental"] == false);
    CHECK(rep.results["oracle"]["fundamental"] == false);
    bool mentions_gcd = false;
    for (const auto& d : rep.diagnostics)
        if (d.find("gcd(a,c) = 3") != std::string::npos) mentions_gcd = true;
    CHECK(mentions_gcd);
}

TEST_CASE("check rejects the barycentric claim for c = 8") {
    Report rep = cmd_check(3, 3, 8);
    CHECK(rep.exit_code == kExitOk);
    CHECK(rep.results["criteria"]["lattice_barycentric"] == false);
    CHECK(rep.results["oracle"]["lattice_barycentric"] == false);
}

TEST_CASE("search command counts classes") {
    Report rep = cmd_search(20);
    CHECK(rep.exit_code == kExitOk);
    CHECK(rep.results["counts"]["T(3,3,4)"] == 1);
    CHECK(rep.results["counts"]["T(7,11,20)"] == 6);
    CHECK(rep.results["counts"]["Other"] == 0);
    CHECK(rep.results["equivalence_classes_observed"] == 2);

    Report rep4 = cmd_search(4);
    CHECK(rep4.results["hits"].size() == 1);
}

TEST_CASE("maps command verifies all four grounding maps") {
    Report rep = cmd_maps(7, 11, 20);
    CHECK(rep.exit_code == kExitOk);
    CHECK(rep.results["all_verified"] == true);
    REQUIRE(rep.results["maps"].size() == 4);
    for (const auto& m : rep.results["maps"]) {
        CHECK(m["vertex_images_ok"] == true);
        CHECK(m["volume6_preserved"] == true);
        CHECK(m["congruences_ok"] == true);
        i64 det = m["det"].get<i64>();
        CHECK((det == 1 || det == -1));
    }
    CHECK(rep.results["maps"][3]["apex_image"] == json::array({7, 11, 20}));
}

TEST_CASE("maps command rejects non-fundamental input") {
    Report rep = cmd_maps(3, 7, 12);
    CHECK(rep.exit_code == kExitUsage);
}

TEST_CASE("cases command reproduces the worked configurations") {
    Report rep = cmd_cases(25);
    CHECK(rep.exit_code == kExitOk);
    CHECK(rep.results["classes_produced"] ==
          json::array({"T(3,3,4)", "T(7,11,20)"}));

    bool found_worked = false;
    for (const auto& entry : rep.results["general"]) {
        if (entry["config"] == "1b,2a,3a,4c") {
            found_worked = true;
            CHECK(entry["feasible_gammas"] == json::array({5}));
            CHECK(entry["verdict"] == "produces_class");
            CHECK(entry["witnesses"][0]["lift"] == json::array({7, 11, 20}));
            CHECK(entry["witnesses"][0]["class"] == "T(7,11,20)");
            CHECK(entry["matches_reference"] == true);
        }
        if (entry["config"] == "1a,2a,3a,4c") {
            CHECK(entry["verdict"] == "infeasible_odd");
            CHECK(entry["matches_reference"] == true);
        }
    }
    CHECK(found_worked);

    // every general-table entry matches the stored reference conclusions
    for (const auto& entry : rep.results["general"])
        CHECK(entry["matches_reference"] == true);

    // the one known defect of the a = 3 reference table is flagged
    bool flagged = false;
    for (const auto& entry : rep.results["a3"]) {
        if (entry["config"] == "1b,2c,3c,4a") {
            CHECK(entry["matches_reference"] == false);
            CHECK(entry["feasible_gammas"] == json::array());
        } else {
            CHECK(entry["matches_reference"] == true);
        }
        if (entry["config"] == "1b,2c,3b,4a") {
            CHECK(entry["verdict"] == "produces_class");
            CHECK(entry["witnesses"][0]["lift"] == json::array({3, 7, 20}));
        }
    }
    for (const auto& d : rep.diagnostics)
        if (d.find("1b,2c,3c,4a") != std::string::npos) flagged = true;
    CHECK(flagged);
}

TEST_CASE("equiv command produces a witness") {
    Report rep = cmd_equiv(7, 11, 20, 11, 3, 20);
    CHECK(rep.exit_code == kExitOk);
    CHECK(rep.results["equivalent"] == true);
    CHECK_FALSE(rep.results["witness"].is_null());

    Report rep2 = cmd_equiv(3, 3, 4, 7, 11, 20);
    CHECK(rep2.results["equivalent"] == false);
    CHECK(rep2.results["witness"].is_null());
}

TEST_CASE("json emission round-trips and is deterministic") {
    Report rep = cmd_check(7, 11, 20);
    json doc = json::parse(emit_json(rep));
    CHECK(doc["command"] == "check");
    CHECK(doc["inputs"] == rep.inputs);
    CHECK(doc["results"] == rep.results);
    CHECK(doc["diagnostics"].is_array());
    CHECK(doc["elapsed_ms"].is_number());

    Report again = cmd_check(7, 11, 20);
    json doc2 = json::parse(emit_json(again));
    doc.erase("elapsed_ms");
    doc2.erase("elapsed_ms");
    CHECK(doc == doc2);
}

TEST_CASE("binary: exit codes and json output") {
    CHECK(run_cli("check 3 3 4").exit_code == 0);
    CHECK(run_cli("check 3 3").exit_code == 2);         // missing argument
    CHECK(run_cli("search --cmax 3").exit_code == 2);   // below minimum
    CHECK(run_cli("check 1 1 0").exit_code == 2);       // degenerate c
    CHECK(run_cli("maps 3 7 12").exit_code == 2);       // not fundamental
    CHECK(run_cli("bogus").exit_code == 2);

    auto json_run = run_cli("check 7 11 20 --emit json");
    CHECK(json_run.exit_code == 0);
    json doc = json::parse(json_run.out);
    CHECK(doc["results"]["oracle"]["lattice_barycentric"] == true);

    auto text_run = run_cli("search --cmax 8 --emit text");
    CHECK(text_run.exit_code == 0);
    CHECK(text_run.out.find("T(3,3,4)") != std::string::npos);
}
