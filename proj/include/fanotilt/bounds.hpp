#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanotilt/chern.hpp"

namespace fanotilt {

enum class BoundRegime { SchmidtP3, QuadricThm31, GeneralTypeX4, GeneralTypeX5 };

std::string regime_str(BoundRegime r);

// A maximal-c3 bound together with the classification data attached to the
// extremal case.
struct BoundResult {
    VarietyId variety = VarietyId::X2;
    BoundRegime regime = BoundRegime::QuadricThm31;
    Rational e_max;        // ch3-level bound (rank-2 normalization), X2 cases
    Rational c3_max;       // usable bound; integer for integral inputs
    Rational c3_max_raw;   // the quoted bound before integer flooring
    std::string case_id;   // "1.1" .. "2.6" for the X2 case table, else ""
    std::optional<std::string> extremal_witness;
    std::optional<std::string> caveat;
};

// Maximal e with (2, c, d, e) tilt-semistable on X2, per the case table:
//   c = -1: d=0 -> 1/6; d=-1/2 -> 5/3; integer d<=-1 -> d^2-2d+1/6;
//           non-integer d<=-3/2 -> d^2-2d+5/12;
//   c =  0: d=0 -> 0; d=-1/2 -> -1/2; d=-1 -> 1; non-integer d<=-3/2 ->
//           d^2+1/4; d=-2 -> 4; integer d<=-3 -> d^2.
// Requires c in {-1, 0}, d <= 0, 2d integral.
BoundResult e_max(long c, const Rational& d);

// Maximal c3 of rank-2 semistable classes with the given (c1, c2):
//   P3: c2^2 - c2 + 2 (c1 = 0), c2^2 (c1 = -1);
//   X2: c2^2/2, (c2^2-1)/2, (c2^2+1)/2 by parity and c1, except
//       (c1, c2) = (0, 1) where the sharp bound is -1;
//   X4 (general-type flag): c2^2 - c2 + 2, c1 = 0 only;
//   X5 (general-type flag): (2/9) c2^2 (+ 1/2 when odd), floored to the
//       integer bound; the raw rational is kept in c3_max_raw.
BoundResult c3_max(VarietyId variety, long c1, const BigInt& c2, bool general_type = false);

struct ConsistencyRow {
    BigInt c2;
    Rational d;
    Rational e_level;     // e_max(c1, d)
    Rational c3_from_e;   // converted through the rank-2 class formulas
    Rational c3_closed;   // c3_max formula value
    bool agree = false;
    std::string note;
};

struct ConsistencyReport {
    long c1 = 0;
    std::vector<ConsistencyRow> rows;
    bool all_agree = false;
};

// Cross-validates the e-level and c3-level bounds on X2 over a c2 interval.
// Inconsistencies are reported, never silently fixed. Rows with no
// semistable class (c1 = -1, c2 = 0 forces d > 0) are marked in note and do
// not count against agreement.
ConsistencyReport bounds_consistency(long c1, const BigInt& c2_from, const BigInt& c2_to);

}  // namespace fanotilt
