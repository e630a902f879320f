#pragma once

#include <optional>
#include <string>

#include "fanotilt/chern.hpp"

namespace fanotilt {

// Point of the (alpha, beta) upper half-plane. alpha = 0 is accepted as a
// boundary evaluation; callers interpret those as limits.
struct TiltPoint {
    Rational alpha;
    Rational beta;

    TiltPoint(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha < 0) throw DomainError("tilt point requires alpha >= 0");
    }
    Rational alpha_sq() const { return alpha * alpha; }
};

// Tilt slope nu_{alpha,beta} = (d - beta c + (beta^2 - alpha^2)/2 r)/(c - beta r)
// in normalized (r, c, d) coordinates; the H^3 factors cancel, so the value
// is degree-independent. +infinity on zero denominator.
SlopeValue nu(const CharTrunc& v, const Rational& alpha_sq, const Rational& beta);
inline SlopeValue nu(const CharTrunc& v, const TiltPoint& p) {
    return nu(v, p.alpha_sq(), p.beta);
}

// alpha^2 with nu_{alpha,beta}(v) = 0 at the given beta, when >= 0 (0 marks
// a boundary point on the axis); nullopt when negative or rank zero.
std::optional<Rational> nu_zero_alpha_sq(const CharTrunc& v, const Rational& beta);

// Numerical wall nu(v) = nu(w) in the upper half-plane.
//   Semicircle   : center s on the beta-axis, radius^2 > 0;
//   Vertical     : the line beta = const;
//   DegenerateEverywhere : nu_v and nu_w agree identically (dependent data);
//   Empty        : the equation has no solution with alpha > 0.
// All arithmetic keeps center and radius^2 exact; radii are never taken.
enum class WallKind { Semicircle, Vertical, DegenerateEverywhere, Empty };

struct Wall {
    WallKind kind = WallKind::Empty;
    Rational center;     // s for semicircles; beta for vertical walls
    Rational radius_sq;  // semicircles only (> 0); 0 or negative data kept on Empty circles
    CharTrunc v, w;      // defining pair

    bool is_semicircle() const { return kind == WallKind::Semicircle; }
    // alpha^2 on the circle at the given beta (semicircle/empty-circle data).
    Rational alpha_sq_at(const Rational& beta) const {
        return radius_sq - sq(beta - center);
    }
    std::string kind_str() const;
};

Wall numerical_wall(const CharTrunc& v, const CharTrunc& w);

// Quadratic Bogomolov-Gieseker form
//   W_{alpha,beta}(v) = alpha^2 Delta(v) + 4 (H.ch2^b / H^3)^2
//                       - 6 (H^2.ch1^b / H^3) (ch3^b / H^3)
// On X2 this expands to (a^2+b^2)(c^2-2rd) + (3re-2cd)b + 4d^2 - 3ce.
// The inequality W >= 0 for tilt-semistable objects is established on X2 and
// P3; other varieties are rejected unless assume_bmt is set.
Rational big_w(const ChernCharacter& v, const Rational& alpha_sq, const Rational& beta,
               bool assume_bmt = false);
inline Rational big_w(const ChernCharacter& v, const TiltPoint& p, bool assume_bmt = false) {
    return big_w(v, p.alpha_sq(), p.beta, assume_bmt);
}

// W_{alpha,beta}(v) = 0 is itself a numerical wall: the wall between
// (r, c, d) and (2c, 4d, (6/degree) e); on X2 the latter is (2c, 4d, 3e).
Wall w_wall(const ChernCharacter& v);

// lambda_{alpha,beta,s} = (ch3^b - s alpha^2 H^2.ch1^b)/(H.ch2^b - (alpha^2/2) H^3.ch0^b),
// +infinity on zero denominator. Requires s > 0.
SlopeValue lambda_slope(const ChernCharacter& v, const Rational& alpha_sq, const Rational& beta,
                        const Rational& s);
inline SlopeValue lambda_slope(const ChernCharacter& v, const TiltPoint& p, const Rational& s) {
    return lambda_slope(v, p.alpha_sq(), p.beta, s);
}

// Upper bound Delta(v) / (4 rank_F (rank_F - r)) for the radius of any wall
// induced by a sub/quotient of rank rank_F > r = ch0(v) >= 0.
Rational radius_bound(const ChernCharacter& v, const BigInt& rank_F);

}  // namespace fanotilt
