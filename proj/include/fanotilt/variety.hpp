#pragma once

#include <array>
#include <string>

#include "fanotilt/rational.hpp"

namespace fanotilt {

// The four Fano threefolds of Picard rank one and index >= 2 handled here,
// indexed by projective degree: P3 = X1 (degree 1), the quadric X2, the
// intersection of two quadrics X4, and the linear section X5 of Gr(2,5).
enum class VarietyId { P3, X2, X4, X5 };

// Numerical invariants of X. Cohomology is generated by the hyperplane class
// H, the line class [l] and the point class [pt], with H^2 = degree*[l] and
// H^3 = degree*[pt].
//
// todd holds the coefficients (t0, t1, t2, t3) of td(T_X) against the basis
// (1, H, H^2, [pt]). They are pinned by
//     td = 1 + (1/2) c1(X) + (c1(X)^2 + c2(T_X))/12 + chi(O_X) [pt]
// with c1(X) = index*H and chi(O_X) = 1, so t1 = index/2 and
// t2 = (index^2 * degree + c2(T_X).H) / (12 * degree).  The intersection
// numbers c2(T_X).H are 6, 8, 12, 12 for P3, X2, X4, X5 (normal-bundle
// sequences for P3, X2, X4; pairing of the Schubert class s_{1,1} with H^4
// on Gr(2,5) for X5).  Calibration checks live in the tests: chi(O_X) = 1,
// chi(O_X(1)) = 4, 5, 6, 7, and the rank-2 c1=0 Euler characteristics
// chi = 2 + c3/2 - c2 on X5 and chi = 2 + c3/2 - (3/2) c2 on X2.
struct VarietyData {
    VarietyId id;
    long degree;  // H^3
    long index;   // Fano index i, with omega_X = O(-i*H)
    std::array<Rational, 4> todd;
    Rational c2_omega_H;  // H.(c2(Omega_X) + omega_X^2)/12, the linear term of RR

    std::string name() const;
};

// Immutable static data; safe to share across threads.
const VarietyData& get_variety(VarietyId id);

// Accepts "P3", "X1", "X2", "X4", "X5" (case-insensitive); rejects others
// with a diagnostic naming the supported ids.
VarietyId parse_variety(const std::string& name);

std::string variety_name(VarietyId id);

}  // namespace fanotilt
