#include "fanotilt/tilt_geometry.hpp"

namespace fanotilt {

SlopeValue nu(const CharTrunc& v, const Rational& alpha_sq, const Rational& beta) {
    Rational num = v.d - beta * v.c + (beta * beta - alpha_sq) / 2 * v.r;
    Rational den = v.c - beta * v.r;
    return SlopeValue::ratio(num, den);
}

std::optional<Rational> nu_zero_alpha_sq(const CharTrunc& v, const Rational& beta) {
    if (v.r == 0) return std::nullopt;
    Rational a2 = beta * beta + 2 * (v.d - beta * v.c) / v.r;
    if (a2 < 0) return std::nullopt;
    return a2;
}

std::string Wall::kind_str() const {
    switch (kind) {
        case WallKind::Semicircle: return "semicircle";
        case WallKind::Vertical: return "vertical";
        case WallKind::DegenerateEverywhere: return "degenerate-everywhere";
        case WallKind::Empty: return "empty";
    }
    return "?";
}

Wall numerical_wall(const CharTrunc& v, const CharTrunc& w) {
    // nu(v) = nu(w) cross-multiplies to
    //   W_cd - beta W_rd + ((beta^2 + alpha^2)/2) W_rc = 0
    // with the 2x2 minors of the (v, w) coordinate matrix below.
    Rational W_rc = v.c * w.r - w.c * v.r;
    Rational W_rd = v.d * w.r - w.d * v.r;
    Rational W_cd = v.d * w.c - w.d * v.c;

    Wall wall;
    wall.v = v;
    wall.w = w;
    if (W_rc != 0) {
        wall.center = W_rd / W_rc;
        wall.radius_sq = sq(wall.center) - 2 * W_cd / W_rc;
        wall.kind = wall.radius_sq > 0 ? WallKind::Semicircle : WallKind::Empty;
        return wall;
    }
    if (W_rd != 0) {
        wall.kind = WallKind::Vertical;
        wall.center = W_cd / W_rd;
        return wall;
    }
    wall.kind = W_cd == 0 ? WallKind::DegenerateEverywhere : WallKind::Empty;
    return wall;
}

Rational big_w(const ChernCharacter& v, const Rational& alpha_sq, const Rational& beta,
               bool assume_bmt) {
    VarietyId id = v.variety();
    if (id != VarietyId::X2 && id != VarietyId::P3 && !assume_bmt)
        throw DomainError("W-form inequality is established on X2 and P3 only; pass the "
                          "assume-bmt override to evaluate on " +
                          variety_name(id));
    const long deg = get_variety(id).degree;
    TwistedChar t = twist(v.quad(), beta);
    // e-slot of t already carries the H^3 normalization, ch3^b = t.e * [pt]
    return alpha_sq * delta(v) + 4 * t.d * t.d - Rational(6, deg) * t.c * t.e;
}

Wall w_wall(const ChernCharacter& v) {
    const long deg = get_variety(v.variety()).degree;
    CharTrunc second{2 * v.c_q(), 4 * v.d(), Rational(6, deg) * v.e()};
    return numerical_wall(v.trunc(), second);
}

SlopeValue lambda_slope(const ChernCharacter& v, const Rational& alpha_sq, const Rational& beta,
                        const Rational& s) {
    if (s <= 0) throw DomainError("lambda slope requires s > 0");
    const long deg = get_variety(v.variety()).degree;
    TwistedChar t = twist(v.quad(), beta);
    // H^2.ch1^b = c^b * H^3, H.ch2^b = d^b * H^3, H^3.ch0^b = r * H^3
    Rational num = t.e - s * alpha_sq * t.c * deg;
    Rational den = t.d * deg - alpha_sq / 2 * deg * t.r;
    return SlopeValue::ratio(num, den);
}

Rational radius_bound(const ChernCharacter& v, const BigInt& rank_F) {
    if (v.r() < 0 || rank_F <= v.r())
        throw DomainError("radius bound requires rank_F > ch0(v) >= 0");
    return delta(v) / (Rational(4) * rank_F * (rank_F - v.r()));
}

}  // namespace fanotilt
