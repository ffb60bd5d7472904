#pragma once

#include <chrono>
#include <sstream>
#include <string>

#include <json.hpp>

#include "barytet/classifier.hpp"
#include "barytet/congruence.hpp"

namespace barytet {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;  // pipeline disagreement or an Other class
constexpr int kExitUsage = 2;

// Machine-readable result of one CLI command.  Identical inputs give
// byte-identical output except for elapsed_ms.
struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> diagnostics;
    double elapsed_ms = 0.0;
    int exit_code = kExitOk;

    json to_json() const {
        json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["results"] = results;
        doc["diagnostics"] = diagnostics;
        doc["elapsed_ms"] = elapsed_ms;
        return doc;
    }
};

namespace detail {

class Stopwatch {
  public:
    double elapsed_ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline json to_json(const LatticePoint& p) { return json::array({p.x, p.y, p.z}); }

inline json to_json(const std::vector<LatticePoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back(to_json(p));
    return arr;
}

inline json to_json(const IntMatrix3& m) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) rows.push_back(json::array({m.at(r, 0), m.at(r, 1), m.at(r, 2)}));
    return rows;
}

inline json to_json(const AffineUnimodularMap& m) {
    json j;
    j["matrix"] = to_json(m.matrix());
    j["translation"] = to_json(m.translation());
    j["det"] = m.matrix().det();
    return j;
}

inline json to_json(const LatticeCensus& c) {
    json j;
    j["vertices"] = to_json(c.vertices);
    j["boundary_nonvertex"] = to_json(c.boundary_nonvertex);
    j["interior"] = to_json(c.interior);
    return j;
}

inline std::string triple_str(const GroundedTetra& g) {
    return "(" + std::to_string(g.a()) + "," + std::to_string(g.b()) + "," +
           std::to_string(g.c()) + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// check A B C: run both pipelines on one grounded tetrahedron and compare.

inline Report cmd_check(i64 a, i64 b, i64 c) {
    detail::Stopwatch timer;
    Report rep;
    rep.command = "check";
    rep.inputs = {{"a", a}, {"b", b}, {"c", c}};

    GroundedTetra g(a, b, c);
    Tetrahedron t = g.to_tetrahedron();
    LatticeCensus cen = census(t);
    auto bc = lattice_barycentre(t);

    bool o_fund = cen.boundary_nonvertex.empty();
    bool o_prim = o_fund && cen.interior.empty();
    bool o_bary = o_fund && bc && cen.interior.size() == 1 && cen.interior[0] == *bc;

    bool c_fund = is_fundamental_gcd(g);
    bool c_prim = is_primitive_gcd(g);
    bool c_bary = is_lattice_barycentric_criteria(g);

    if (!c_fund) {
        i64 s = checked_sub(checked_add(g.a(), g.b()), 1);
        for (auto [name, value] :
             {std::pair<const char*, i64>{"gcd(a,c)", gcd_nonneg(g.a(), g.c())},
              {"gcd(b,c)", gcd_nonneg(g.b(), g.c())},
              {"gcd(a+b-1,c)", gcd_nonneg(s, g.c())}}) {
            if (value != 1)
                rep.diagnostics.push_back("not fundamental: " + std::string(name) + " = " +
                                          std::to_string(value));
        }
    }

    bool agree = (o_fund == c_fund) && (o_prim == c_prim) && (o_bary == c_bary);
    if (!agree) rep.diagnostics.push_back("criteria and oracle pipelines disagree");

    rep.results["tetrahedron"] = detail::triple_str(g);
    rep.results["volume6"] = volume6(t);
    rep.results["barycentre4"] = detail::to_json(barycentre4(t));
    rep.results["lattice_barycentre"] = bc ? detail::to_json(*bc) : json(nullptr);
    rep.results["criteria"] = {{"fundamental", c_fund}, {"primitive", c_prim},
                               {"lattice_barycentric", c_bary}};
    rep.results["oracle"] = {{"fundamental", o_fund}, {"primitive", o_prim},
                             {"lattice_barycentric", o_bary}};
    rep.results["census"] = detail::to_json(cen);
    rep.results["pipelines_agree"] = agree;
    rep.exit_code = agree ? kExitOk : kExitInconsistent;
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

// ---------------------------------------------------------------------------
// search --cmax N: oracle-driven sweep plus classification of every hit.

inline Report cmd_search(i64 c_max) {
    detail::Stopwatch timer;
    Report rep;
    rep.command = "search";
    rep.inputs = {{"cmax", c_max}};

    auto hits = search(c_max);
    int n334 = 0, n71120 = 0, nother = 0;
    json hits_json = json::array();
    for (const auto& h : hits) {
        switch (h.label) {
            case ClassKind::T334: ++n334; break;
            case ClassKind::T71120: ++n71120; break;
            case ClassKind::Other: ++nother; break;
        }
        hits_json.push_back({{"a", h.tetra.a()},
                             {"b", h.tetra.b()},
                             {"c", h.tetra.c()},
                             {"class", class_kind_name(h.label)}});
        if (h.label == ClassKind::Other)
            rep.diagnostics.push_back("unclassified lattice barycentric tetrahedron " +
                                      detail::triple_str(h.tetra));
    }
    rep.results["hits"] = hits_json;
    rep.results["counts"] = {{"T(3,3,4)", n334}, {"T(7,11,20)", n71120}, {"Other", nother}};
    rep.results["equivalence_classes_observed"] = (n334 > 0) + (n71120 > 0) + (nother > 0);
    rep.exit_code = nother == 0 ? kExitOk : kExitInconsistent;
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

// ---------------------------------------------------------------------------
// maps A B C: the four grounding maps with verification flags.

inline Report cmd_maps(i64 a, i64 b, i64 c) {
    detail::Stopwatch timer;
    Report rep;
    rep.command = "maps";
    rep.inputs = {{"a", a}, {"b", b}, {"c", c}};

    GroundedTetra g(a, b, c);
    if (!is_fundamental_gcd(g)) {
        rep.diagnostics.push_back("grounding maps require a fundamental tetrahedron; " +
                                  detail::triple_str(g) + " is not fundamental");
        rep.results["maps"] = json::array();
        rep.exit_code = kExitUsage;
        rep.elapsed_ms = timer.elapsed_ms();
        return rep;
    }

    Tetrahedron t = g.to_tetrahedron();
    json maps_json = json::array();
    bool all_ok = true;
    for (SubTetraIndex j : SubTetraIndex::all()) {
        ApexImage im = apex_image(j, g);
        AffineUnimodularMap m = grounding_map(j, g);
        LatticePoint target{im.a_t, im.b_t, im.c};

        std::array<LatticePoint, 4> expected;
        switch (j.value()) {
            case 1: expected = {target, kE1, kE2, kOrigin}; break;
            case 2: expected = {kOrigin, target, kE2, kE1}; break;
            case 3: expected = {kOrigin, kE1, target, kE2}; break;
            default: expected = {kOrigin, kE1, kE2, g.apex()}; break;
        }
        bool vertices_ok = true;
        for (int i = 0; i < 4; ++i)
            vertices_ok = vertices_ok &&
                          m.apply(t.vertex(i)) == expected[static_cast<std::size_t>(i)];

        bool volume_ok = volume6(map_tetrahedron(m, t)) == volume6(t);

        // Multiplied-through forms of the apex-image congruences, checked
        // without computing any inverse.
        i64 cc = g.c();
        i64 am = mod_floor(g.a(), cc), bm = mod_floor(g.b(), cc);
        auto cong = [cc](i64 lhs, i64 factor, i64 rhs) {
            return mod_floor(checked_sub(checked_mul(lhs, factor), rhs), cc) == 0;
        };
        bool cong_ok = true;
        switch (j.value()) {
            case 1: {
                i64 s = checked_sub(checked_add(am, bm), 1);
                cong_ok = cong(im.a_t, s, am) && cong(im.b_t, s, bm);
                break;
            }
            case 2: cong_ok = cong(im.a_t, am, 1) && cong(im.b_t, am, checked_neg(bm)); break;
            case 3: cong_ok = cong(im.a_t, bm, checked_neg(am)) && cong(im.b_t, bm, 1); break;
            default: cong_ok = im.a_t == am && im.b_t == bm; break;
        }

        bool ok = vertices_ok && volume_ok && cong_ok;
        all_ok = all_ok && ok;
        if (!ok)
            rep.diagnostics.push_back("grounding map " + std::to_string(j.value()) +
                                      " failed verification");

        json mj = detail::to_json(m);
        mj["j"] = j.value();
        mj["apex_image"] = json::array({im.a_t, im.b_t, im.c});
        mj["vertex_images_ok"] = vertices_ok;
        mj["volume6_preserved"] = volume_ok;
        mj["congruences_ok"] = cong_ok;
        maps_json.push_back(std::move(mj));
    }
    rep.results["maps"] = maps_json;
    rep.results["all_verified"] = all_ok;
    rep.exit_code = all_ok ? kExitOk : kExitInconsistent;
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

// ---------------------------------------------------------------------------
// cases [--gmax N]: rerun both case studies and diff against the stored
// reference conclusions.

namespace detail {

inline json conclusion_to_json(const CaseConclusion& conc, const ReferenceConclusion& ref,
                               std::vector<std::string>& diagnostics, const std::string& label,
                               bool& any_other, std::vector<std::string>& classes) {
    json entry;
    entry["config"] = label;
    entry["feasible_gammas"] = conc.feasible_gammas;
    json wits = json::array();
    for (const auto& w : conc.witnesses) {
        json wj;
        wj["gamma"] = w.gamma;
        wj["residues"] = json::array({w.a_residue, w.b_residue});
        wj["lift"] = json::array({w.tetra.a(), w.tetra.b(), w.tetra.c()});
        switch (w.outcome) {
            case LiftOutcome::ProducesClass: {
                ClassKind k = classify(w.tetra);
                wj["outcome"] = "produces_class";
                wj["class"] = class_kind_name(k);
                classes.push_back(class_kind_name(k));
                if (k == ClassKind::Other) {
                    any_other = true;
                    diagnostics.push_back(label + ": lift " + triple_str(w.tetra) +
                                          " is barycentric but matches neither class");
                }
                break;
            }
            case LiftOutcome::FailsFundamental: wj["outcome"] = "fails_fundamental"; break;
            case LiftOutcome::NotBarycentric: wj["outcome"] = "not_barycentric"; break;
        }
        wits.push_back(std::move(wj));
    }
    entry["witnesses"] = wits;
    switch (conc.verdict) {
        case CaseVerdict::InfeasibleOdd: entry["verdict"] = "infeasible_odd"; break;
        case CaseVerdict::ProducesClass: entry["verdict"] = "produces_class"; break;
        case CaseVerdict::FailsFundamental: entry["verdict"] = "fails_fundamental"; break;
    }
    entry["reference"] = {{"feasible_gammas", ref.feasible}, {"note", ref.note}};
    bool match = conc.feasible_gammas == ref.feasible;
    entry["matches_reference"] = match;
    if (!match) {
        std::string got = "{";
        for (std::size_t i = 0; i < conc.feasible_gammas.size(); ++i)
            got += (i ? "," : "") + std::to_string(conc.feasible_gammas[i]);
        got += "}";
        std::string want = "{";
        for (std::size_t i = 0; i < ref.feasible.size(); ++i)
            want += (i ? "," : "") + std::to_string(ref.feasible[i]);
        want += "}";
        diagnostics.push_back("reference discrepancy at " + label + ": recomputed feasible " +
                              got + " vs reference " + want + " (" + ref.note + ")");
    }
    for (const auto& an : conc.anomalies) diagnostics.push_back(label + ": " + an);
    return entry;
}

}  // namespace detail

inline Report cmd_cases(i64 gamma_max) {
    detail::Stopwatch timer;
    Report rep;
    rep.command = "cases";
    rep.inputs = {{"gmax", gamma_max}};
    rep.diagnostics.push_back(
        "case row 4b: constant missing from the reference table; using b = 3 (swap symmetry)");

    bool any_other = false;
    std::vector<std::string> classes;
    classes.push_back(class_kind_name(ClassKind::T334));  // gamma = 1 lift
    rep.results["gamma1"] = {{"note", "gamma = 1 is feasible for every system; c = 4 lifts to "
                                      "T(3,3,4)"},
                             {"class", class_kind_name(ClassKind::T334)}};

    json general = json::array();
    for (CaseAlt p1 : all_case_alts())
        for (CaseAlt p2 : all_case_alts())
            for (CaseAlt p3 : all_case_alts()) {
                CaseConfig cfg{{p1, p2, p3, CaseAlt::C}};
                auto conc = feasible_gammas(general_system(cfg), gamma_max);
                general.push_back(detail::conclusion_to_json(
                    conc, reference_general_conclusion(p1, p2, p3), rep.diagnostics,
                    cfg.to_string(), any_other, classes));
            }
    rep.results["general"] = general;

    json a3 = json::array();
    for (CaseAlt p1 : all_case_alts())
        for (CaseAlt p2 : all_case_alts())
            for (CaseAlt p3 : all_case_alts()) {
                CaseConfig cfg{{p1, p2, p3, CaseAlt::A}};
                CongruenceSystem sys = a3_system(p1, p2, p3);
                sys.rows.push_back(general_case_row(4, CaseAlt::A));
                auto conc = feasible_gammas(sys, gamma_max);
                a3.push_back(detail::conclusion_to_json(conc,
                                                        reference_a3_conclusion(p1, p2, p3),
                                                        rep.diagnostics, cfg.to_string(),
                                                        any_other, classes));
            }
    rep.results["a3"] = a3;

    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    rep.results["classes_produced"] = classes;

    rep.exit_code = any_other ? kExitInconsistent : kExitOk;
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

// ---------------------------------------------------------------------------
// equiv A1 B1 C1 A2 B2 C2: decide unimodular equivalence, print the witness.

inline Report cmd_equiv(i64 a1, i64 b1, i64 c1, i64 a2, i64 b2, i64 c2) {
    detail::Stopwatch timer;
    Report rep;
    rep.command = "equiv";
    rep.inputs = {{"a1", a1}, {"b1", b1}, {"c1", c1}, {"a2", a2}, {"b2", b2}, {"c2", c2}};

    GroundedTetra g1(a1, b1, c1), g2(a2, b2, c2);
    auto witness = is_equivalent(g1, g2);
    rep.results["equivalent"] = witness.has_value();
    rep.results["witness"] = witness ? detail::to_json(*witness) : json(nullptr);
    rep.elapsed_ms = timer.elapsed_ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Rendering.

inline std::string emit_json(const Report& rep) { return rep.to_json().dump(2) + "\n"; }

inline std::string emit_text(const Report& rep) {
    std::ostringstream os;
    os << "== " << rep.command << " ==\n";
    os << "inputs: " << rep.inputs.dump() << "\n";
    os << "results:\n";
    for (const auto& [key, value] : rep.results.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << "  " << key << ":\n";
            for (const auto& item : value) os << "    - " << item.dump() << "\n";
        } else {
            os << "  " << key << ": " << value.dump() << "\n";
        }
    }
    if (!rep.diagnostics.empty()) {
        os << "diagnostics:\n";
        for (const auto& d : rep.diagnostics) os << "  - " << d << "\n";
    }
    os << "elapsed_ms: " << rep.elapsed_ms << "\n";
    return os.str();
}

}  // namespace barytet
