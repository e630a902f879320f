#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fanotilt/tilt_geometry.hpp"

namespace fanotilt {

// Closed rational interval of beta values. lo > hi is the empty window.
struct BetaWindow {
    Rational lo, hi;
    bool empty() const { return lo > hi; }
};

// One numerical wall of v together with every witness truncation the scan
// found on it. Witnesses are canonical representatives of the {w, v-w}
// pairs: the factor of larger rank, ties broken by smaller c then smaller d.
// side is "either" by construction (the pair is reported once).
struct CandidateWall {
    Wall wall;
    std::vector<CharTrunc> witnesses;
    std::vector<std::string> satisfied_constraints;
};

// Every candidate w with 0 <= ch0(w) <= rank_max whose numerical wall with v
// is a semicircle meeting beta_window with radius^2 >= min_radius_sq, and
// which passes the destabilizer constraints:
//   Delta(w) >= 0, Delta(v-w) >= 0, Delta(w) + Delta(v-w) <= Delta(v),
//   0 < H^2.ch1^s(w) < H^2.ch1^s(v) at the wall top beta = center,
//   lattice integrality of (r, c, d) on the variety of v.
// The grid is complete for these constraints: c ranges over the integers
// with 0 <= ch1^b(w) <= ch1^b(v) at both window endpoints, and for each
// (r, c) the three Delta conditions pin d inside a finite lattice interval.
// Walls are deduplicated by (center, radius^2) and ordered by radius^2
// descending, then center, with witnesses in lexicographic (r, c, d) order.
std::vector<CandidateWall> enumerate_walls(const ChernCharacter& v, long rank_max,
                                           const BetaWindow& beta_window,
                                           const Rational& min_radius_sq);

// One verified bound case for rank-2 classes (2, c, d, *) on X2.
struct CaseReport {
    std::string case_id;  // "1.1" .. "2.6"
    long c = 0;
    Rational d;
    Rational e_max;
    std::string witness_note;
    // truncations that must show up on enumerated semicircular walls of
    // v = (2, c, d, e_max)
    std::vector<CharTrunc> expected_wall_witnesses;
    // factors proportional to v: the extremal triple sits on the vertical
    // wall limit and defines no semicircle
    std::vector<CharTrunc> expected_degenerate_factors;
    bool expect_no_semicircular_walls = false;

    BetaWindow window{0, 0};
    long rank_max = 4;
    Rational min_radius_sq;
    std::vector<CandidateWall> walls;
    bool exhaustive = false;
    bool matched = false;
};

// Looks up the maximal e and the named extremal triples for (c, d), runs
// enumerate_walls on v = (2, c, d, e_max) with rank_max 4 over the window
// the corresponding case analysis works in, and checks the expectations.
CaseReport verify_theorem31_case(long c, const Rational& d);

// All representative (c, d) inputs for cases 1.1 - 2.6, two per unbounded
// case.
std::vector<std::pair<long, Rational>> theorem31_representative_inputs();

// Decomposition of ch(E(1)) against the exceptional collection
// (O(-1)[3], S(-1)[2], O[1], O(1)) on X2:
//   ch(twist(v, -1)) = -a ch(O(-1)) + b ch(S(-1)) - c ch(O) + d ch(O(1)).
// ok iff the unique rational solution is integral and the coefficients are
// simultaneously non-negative or non-positive; otherwise failure names the
// violated condition.
struct ExceptionalDecomposition {
    bool ok = false;
    std::array<BigInt, 4> coeffs{};     // (a, b, c, d), valid when ok
    std::array<Rational, 4> solution{}; // raw rational solution, always set
    std::string failure;                // empty when ok
};

ExceptionalDecomposition exceptional_decomposition(const ChernCharacter& v);

}  // namespace fanotilt
