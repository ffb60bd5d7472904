#pragma once

#include <string>
#include <utility>
#include <vector>

#include "barytet/criteria.hpp"

namespace barytet {

// One of the three primitivity alternatives of a grounded tetrahedron
// T(l,m,n): A: l = 1, B: m = 1, C: l + m = 0 (all mod n).
enum class CaseAlt { A, B, C };

inline char case_alt_letter(CaseAlt alt) {
    switch (alt) {
        case CaseAlt::A: return 'a';
        case CaseAlt::B: return 'b';
        default: return 'c';
    }
}

inline std::array<CaseAlt, 3> all_case_alts() { return {CaseAlt::A, CaseAlt::B, CaseAlt::C}; }

// Which primitivity alternative is required of each of the four sub-tetrahedra.
struct CaseConfig {
    std::array<CaseAlt, 4> alt;

    friend bool operator==(const CaseConfig&, const CaseConfig&) = default;

    // e.g. "1b,2a,3a,4c"
    std::string to_string() const {
        std::string s;
        for (int j = 0; j < 4; ++j) {
            if (j) s += ',';
            s += static_cast<char>('1' + j);
            s += case_alt_letter(alt[static_cast<std::size_t>(j)]);
        }
        return s;
    }
};

// A linear congruence u*a + v*b = w modulo a symbolic odd modulus gamma.
struct Congruence {
    i64 u;
    i64 v;
    i64 w;

    friend bool operator==(const Congruence&, const Congruence&) = default;

    bool holds(i64 a, i64 b, i64 gamma) const {
        return mod_floor(checked_sub(checked_add(checked_mul(u, a), checked_mul(v, b)), w),
                         gamma) == 0;
    }
};

struct CongruenceSystem {
    std::vector<Congruence> rows;

    friend bool operator==(const CongruenceSystem&, const CongruenceSystem&) = default;
};

// Stored general congruence rows, indexed by sub-tetra position (1..4) and
// alternative.  Row (j, alt) holds for (a mod gamma, b mod gamma) exactly when
// grounded sub-tetra j of a barycentric candidate satisfies alternative alt;
// see the case-study analysis.  The position-4 case-b constant is missing in
// the published table; it is 3 by the x/y swap symmetry, which the test suite
// checks independently.
inline Congruence general_case_row(int position, CaseAlt alt) {
    static constexpr Congruence table[4][3] = {
        {{2, 3, 3}, {3, 2, 3}, {3, 3, 2}},    // 1a, 1b, 1c
        {{3, 0, 1}, {3, 1, 0}, {2, -1, -1}},  // 2a, 2b, 2c
        {{1, 3, 0}, {0, 3, 1}, {1, -2, 1}},   // 3a, 3b, 3c
        {{1, 0, 3}, {0, 1, 3}, {1, 1, -2}},   // 4a, 4b, 4c
    };
    if (position < 1 || position > 4) throw std::invalid_argument("general_case_row: position");
    return table[position - 1][static_cast<int>(alt)];
}

// The four-row system forced by a case configuration.
inline CongruenceSystem general_system(const CaseConfig& cfg) {
    CongruenceSystem sys;
    for (int j = 1; j <= 4; ++j)
        sys.rows.push_back(general_case_row(j, cfg.alt[static_cast<std::size_t>(j - 1)]));
    return sys;
}

// Stored single-variable rows for the specialisation a = 3 (mod c), i.e. the
// position-4 alternative a.  Each case at positions 1..3 forces one congruence
// on b alone.  Row 2a is the always-false-for-odd-gamma marker 0*b = 8.
inline Congruence a3_case_row(int position, CaseAlt alt) {
    static constexpr Congruence table[3][3] = {
        {{0, 1, -1}, {0, 1, -3}, {0, 3, -7}},  // 1a, 1b, 1c
        {{0, 0, 8}, {0, 1, -9}, {0, 1, 7}},    // 2a, 2b, 2c
        {{0, 1, -1}, {0, 3, 1}, {0, 1, 1}},    // 3a, 3b, 3c
    };
    if (position < 1 || position > 3) throw std::invalid_argument("a3_case_row: position");
    return table[position - 1][static_cast<int>(alt)];
}

inline CongruenceSystem a3_system(CaseAlt p1, CaseAlt p2, CaseAlt p3) {
    return CongruenceSystem{{a3_case_row(1, p1), a3_case_row(2, p2), a3_case_row(3, p3)}};
}

// All residue pairs (a mod gamma, b mod gamma) satisfying every row, found by
// exhaustive scan over the gamma^2 candidates.  gamma must be odd (the case
// machinery never needs an even modulus).
inline std::vector<std::pair<i64, i64>> solve_mod(i64 gamma, const CongruenceSystem& sys) {
    if (gamma < 1) throw std::invalid_argument("solve_mod: gamma must be positive");
    if (gamma % 2 == 0) throw std::invalid_argument("solve_mod: gamma must be odd");
    std::vector<std::pair<i64, i64>> out;
    for (i64 a = 0; a < gamma; ++a)
        for (i64 b = 0; b < gamma; ++b) {
            bool ok = true;
            for (const auto& row : sys.rows)
                if (!row.holds(a, b, gamma)) {
                    ok = false;
                    break;
                }
            if (ok) out.emplace_back(a, b);
        }
    return out;
}

// The unique residue mod 4*gamma that is r mod gamma and 3 mod 4 (gamma odd).
inline i64 lift_crt(i64 r, i64 gamma) {
    if (gamma < 1 || gamma % 2 == 0) throw std::invalid_argument("lift_crt: gamma must be odd");
    i64 r0 = mod_floor(r, gamma);
    for (i64 k = 0; k < 4; ++k) {
        i64 x = checked_add(r0, checked_mul(k, gamma));
        if (mod_floor(x, 4) == 3) return x;
    }
    throw std::logic_error("lift_crt: unreachable");
}

enum class LiftOutcome { ProducesClass, FailsFundamental, NotBarycentric };
enum class CaseVerdict { InfeasibleOdd, ProducesClass, FailsFundamental };

// One residue-pair solution lifted to an actual triple (a, b, 4*gamma).
struct LiftedWitness {
    i64 gamma;
    i64 a_residue;  // mod gamma
    i64 b_residue;
    GroundedTetra tetra;  // (lift a, lift b, 4*gamma)
    LiftOutcome outcome;
};

struct CaseConclusion {
    std::vector<i64> feasible_gammas;  // odd gammas in [3, gamma_max] with solutions
    std::vector<LiftedWitness> witnesses;
    CaseVerdict verdict;
    std::vector<std::string> anomalies;  // fundamental lifts that are not barycentric
};

// Scan every odd gamma in [3, gamma_max]; lift each solution by CRT to a
// residue triple mod 4*gamma and judge it with the gcd criteria.  gamma = 1 is
// excluded on purpose: it is feasible for every system and corresponds to the
// c = 4 class T(3,3,4).
inline CaseConclusion feasible_gammas(const CongruenceSystem& sys, i64 gamma_max) {
    CaseConclusion out;
    out.verdict = CaseVerdict::InfeasibleOdd;
    for (i64 gamma = 3; gamma <= gamma_max; gamma += 2) {
        auto sols = solve_mod(gamma, sys);
        if (sols.empty()) continue;
        out.feasible_gammas.push_back(gamma);
        for (auto [ra, rb] : sols) {
            GroundedTetra lifted(lift_crt(ra, gamma), lift_crt(rb, gamma), 4 * gamma);
            LiftOutcome outcome;
            if (!is_fundamental_gcd(lifted)) {
                outcome = LiftOutcome::FailsFundamental;
            } else if (is_lattice_barycentric_criteria(lifted)) {
                outcome = LiftOutcome::ProducesClass;
            } else {
                outcome = LiftOutcome::NotBarycentric;
                out.anomalies.push_back("fundamental lift T(" + std::to_string(lifted.a()) +
                                        "," + std::to_string(lifted.b()) + "," +
                                        std::to_string(lifted.c()) +
                                        ") is not lattice barycentric");
            }
            out.witnesses.push_back({gamma, ra, rb, lifted, outcome});
        }
    }
    for (const auto& w : out.witnesses) {
        if (w.outcome == LiftOutcome::ProducesClass) {
            out.verdict = CaseVerdict::ProducesClass;
            return out;
        }
    }
    if (!out.witnesses.empty()) out.verdict = CaseVerdict::FailsFundamental;
    return out;
}

// ---------------------------------------------------------------------------
// Stored reference conclusions from the published case study, used by the
// `cases` command to flag where a fresh computation disagrees.  Each entry is
// the set of odd gamma > 1 the reference tables report as surviving; entries
// whose reference conclusion is an even gamma or an explicit contradiction
// are stored as the empty set.

struct ReferenceConclusion {
    std::vector<i64> feasible;  // claimed odd feasible gammas
    std::string note;           // verbatim-ish table conclusion
};

// Conclusions for the 27 configurations (*,*,*,c) of the general case study.
inline ReferenceConclusion reference_general_conclusion(CaseAlt p1, CaseAlt p2, CaseAlt p3) {
    auto idx = [](CaseAlt x) { return static_cast<int>(x); };
    int key = 9 * idx(p1) + 3 * idx(p2) + idx(p3);
    switch (key) {
        case 9 * 0 + 3 * 1 + 1: return {{5}, "gamma = 5 -> (7,11,20)"};        // 1a,2b,3b
        case 9 * 0 + 3 * 2 + 0: return {{3}, "gamma = 3 -> (3,7,12), gcd(3,12) != 1"};  // 1a,2c,3a
        case 9 * 0 + 3 * 2 + 2: return {{3}, "gamma = 3 -> (3,7,12), gcd(3,12) != 1"};  // 1a,2c,3c
        case 9 * 1 + 3 * 0 + 0: return {{5}, "gamma = 5 -> (7,11,20)"};        // 1b,2a,3a
        case 9 * 1 + 3 * 1 + 2: return {{3}, "gamma = 3 -> (3,7,12), gcd(3,12) != 1"};  // 1b,2b,3c
        case 9 * 1 + 3 * 2 + 2: return {{3}, "gamma = 3 -> (3,7,12), gcd(3,12) != 1"};  // 1b,2c,3c
        default: return {{}, "gamma even"};
    }
}

// Conclusions for the 27 configurations (*,*,*,a) of the a = 3 (mod c) study.
inline ReferenceConclusion reference_a3_conclusion(CaseAlt p1, CaseAlt p2, CaseAlt p3) {
    auto idx = [](CaseAlt x) { return static_cast<int>(x); };
    if (p2 == CaseAlt::A) return {{}, "star: 1 = 9 forces gamma | 8"};
    int key = 9 * idx(p1) + 3 * idx(p2) + idx(p3);
    switch (key) {
        case 9 * 1 + 3 * 1 + 1: return {{}, "gamma = 3 -> b = 0 and b = 3^-1 mod 3"};  // 1b,2b,3b
        case 9 * 1 + 3 * 2 + 1: return {{5}, "gamma = 5"};                             // 1b,2c,3b
        case 9 * 1 + 3 * 2 + 2: return {{3, 5}, "gamma = 3 or gamma = 5"};             // 1b,2c,3c
        case 9 * 2 + 3 * 1 + 2: return {{5}, "gamma = 5"};                             // 1c,2b,3c
        case 9 * 2 + 3 * 2 + 2: return {{}, "gamma = 6"};                              // 1c,2c,3c
        default: return {{}, "gamma = 8"};
    }
}

}  // namespace barytet
