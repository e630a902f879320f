#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanotilt/bounds.hpp"
#include "fanotilt/chern.hpp"

namespace fanotilt {

// The five extension series. The middle sheaf of each nontrivial extension
// below runs through a component of the moduli space:
//   A: 0 -> O(-n)^2  -> E -> O_S(m)        -> 0  (all four varieties)
//   B: 0 -> O(-1)^2  -> E -> I_{line,S}(m) -> 0  (X2)
//   C: 0 -> S(-n)    -> E -> O_S(m)        -> 0  (X2, spinor bundle S)
//   D: 0 -> S(-1)    -> E -> I_{line,S}(m) -> 0  (X2)
//   F: 0 -> F(-n)    -> E -> O_S(m)        -> 0  (P3, X4, X5; see
//      ch_series_f_bundle for the rank-2 partner sheaf F)
// with S in |O_X(k)|.
enum class SeriesId { A, B, C, D, F };

std::string series_str(SeriesId s);
SeriesId parse_series(const std::string& name);

struct SeriesParams {
    SeriesId series;
    VarietyId variety;
    BigInt k = 1, m = 0, n = 1;
};

// The n forced by the series: A: ceil(k/2); C, F: floor(k/2)+1; B, D: 1.
BigInt series_default_n(SeriesId series, const BigInt& k);

// Parameter constraints:
//   A: k >= 1, n = ceil(k/2), m + n < 0, any of the four varieties;
//   B: X2, k = 1, n = 1, m < 0;
//   C: X2, k >= 1, n = floor(k/2)+1, m <= -n;
//   D: X2, k = 1, n = 1, m <= -1  (m = -1 is the c2 = 4 boundary case);
//   F: P3/X4/X5, k >= 1, n = floor(k/2)+1, m + n < 0.
// Throws DomainError naming the violated constraint.
void validate_series(const SeriesParams& p);

// ch(E) = ch(sub) + ch(quotient) through the standard-character table.
ChernCharacter series_chern(const SeriesParams& p);

// Closed forms for the series-A Chern classes, as multiples of H^2 and H^3:
//   k even: c2 = k^2/4 - km,         c3 = k (k/2 - m)^2;
//   k odd : c2 = (k-1)^2/4 - km,     c3 = k ((k-1)/2 - m)^2.
// The additive computation in series_chern reproduces these exactly
// (fixture-tested).
struct SeriesAClosedForm {
    Rational c1_h, c2_h2, c3_h3;
};
SeriesAClosedForm series_a_closed_form(const BigInt& k, const BigInt& m);

// Exact dimension of the series component (quoted binomial/polynomial
// formulas, with C(a, b) = 0 for a < b). Rejects uncovered pairs.
BigInt series_dim(const SeriesParams& p);

// Rank of the extension bundle where a closed form is stated: the four
// maximal-c3 configurations on X2 (series A with k = 1, B, C with k = 1, D).
std::optional<BigInt> series_bundle_rank(const SeriesParams& p);

// Ext^2(E, E) = 0 iff k < index(X) and m > k - n - index(X); series A only.
bool ext2_vanishes(const SeriesParams& p);

// N = dim |O_X(k)| = chi(O_X(k)) - 1.
BigInt linear_system_dim(VarietyId variety, const BigInt& k);

enum class FibrationKind { Grassmannization, Projectivization, None };
enum class BaseSpace { PN, Grassmannian, WTimesPN, None };

std::string fibration_str(FibrationKind f);
std::string base_str(BaseSpace b);

// One irreducible piece of a moduli space, with the structural data the
// classification provides. Fields that make no sense for a piece (a point,
// a singular component) stay at their None/empty defaults.
struct ModuliComponent {
    std::string label;
    BigInt dim = 0;
    FibrationKind fibration = FibrationKind::None;
    BaseSpace base = BaseSpace::None;
    BigInt base_dim = 0;
    std::optional<BigInt> bundle_rank;
    bool fine = false;
    bool smooth = false;
    bool rational = false;
    std::string note;
};

// Full description of M_{X2}(2; c1, c2, c3max).
struct MaximalModuli {
    long c1 = 0;
    BigInt c2;
    Rational c3_max;
    ChernCharacter character;
    std::string case_label;  // "series:A" etc. or "special:c2=4"
    std::optional<SeriesParams> series;
    std::vector<ModuliComponent> components;
};

// Dispatches (c1, c2) on X2 to the generic series descriptor or to the
// special-case table; rejects inputs with no semistable class or with
// unresolved attainability.
MaximalModuli maximal_moduli(VarietyId variety, long c1, const BigInt& c2);

// Generic descriptor of the series component (any valid params).
ModuliComponent series_descriptor(const SeriesParams& p);

// Cross-multiplied series-A growth estimate:
//   c3/H^3 < (4/k) (c2/H^2)^2        (k even)
//   (k-1)^2 c3/H^3 < 4k (c2/H^2)^2   (k odd; trivially strict at k = 1)
bool series_a_growth_bound_holds(const BigInt& k, const BigInt& m);

}  // namespace fanotilt
