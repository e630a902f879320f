#include "fanotilt/chern.hpp"

#include "fanotilt/errors.hpp"

namespace fanotilt {

std::string CharTrunc::str() const {
    return "(" + rational_str(r) + "," + rational_str(c) + "," + rational_str(d) + ")";
}

std::string TwistedChar::str() const {
    return "(" + rational_str(r) + "," + rational_str(c) + "," + rational_str(d) + "," +
           rational_str(e) + ")@" + variety_name(variety);
}

namespace {

// c2 = degree*(c^2/2 - d), c3 = 2e + degree*(c^3/6 - c*d); on X2 these are
// the classical c^2 - 2d and 2e + c^3/3 - 2cd.
Rational induced_c2(const VarietyData& X, const Rational& c, const Rational& d) {
    return X.degree * (c * c / 2 - d);
}

Rational induced_c3(const VarietyData& X, const Rational& c, const Rational& d,
                    const Rational& e) {
    return 2 * e + X.degree * (c * c * c / 6 - c * d);
}

}  // namespace

ChernCharacter::ChernCharacter(VarietyId variety, BigInt r, BigInt c, Rational d, Rational e)
    : variety_(variety), r_(std::move(r)), c_(std::move(c)), d_(std::move(d)), e_(std::move(e)) {
    const VarietyData& X = get_variety(variety_);
    if (!is_integer(induced_c2(X, Rational(c_), d_)))
        throw DomainError("ch2 violates integrality on " + X.name() + ": c2 = " +
                          rational_str(induced_c2(X, Rational(c_), d_)) + " is not an integer");
    if (!is_integer(induced_c3(X, Rational(c_), d_, e_)))
        throw DomainError("ch3 violates integrality on " + X.name() + ": c3 = " +
                          rational_str(induced_c3(X, Rational(c_), d_, e_)) +
                          " is not an integer");
}

ChernCharacter ChernCharacter::operator+(const ChernCharacter& o) const {
    if (variety_ != o.variety_) throw DomainError("cannot add characters on different varieties");
    return ChernCharacter(variety_, r_ + o.r_, c_ + o.c_, d_ + o.d_, e_ + o.e_);
}

ChernCharacter ChernCharacter::operator-(const ChernCharacter& o) const {
    if (variety_ != o.variety_)
        throw DomainError("cannot subtract characters on different varieties");
    return ChernCharacter(variety_, r_ - o.r_, c_ - o.c_, d_ - o.d_, e_ - o.e_);
}

std::string ChernCharacter::str() const {
    return "(" + r_.str() + "," + c_.str() + "," + rational_str(d_) + "," + rational_str(e_) +
           ")@" + variety_name(variety_);
}

std::string ChernClasses::str() const {
    return "(" + c1.str() + "," + c2.str() + "," + c3.str() + ")@" + variety_name(variety);
}

ChernClasses to_chern_classes(const ChernCharacter& v) {
    const VarietyData& X = get_variety(v.variety());
    Rational c2 = induced_c2(X, v.c_q(), v.d());
    Rational c3 = induced_c3(X, v.c_q(), v.d(), v.e());
    // construction already validated integrality
    return ChernClasses{v.variety(), v.c(), numer(c2), numer(c3)};
}

ChernCharacter from_chern_classes(const ChernClasses& cl, const BigInt& rank) {
    if (rank < 0) throw DomainError("from_chern_classes requires rank >= 0");
    const VarietyData& X = get_variety(cl.variety);
    Rational c(cl.c1);
    Rational d = c * c / 2 - Rational(cl.c2, X.degree);
    Rational e = (Rational(cl.c3) - X.degree * (c * c * c / 6 - c * d)) / 2;
    return ChernCharacter(cl.variety, rank, cl.c1, d, e);
}

TwistedChar twist(const TwistedChar& v, const Rational& beta) {
    const long deg = get_variety(v.variety).degree;
    TwistedChar w;
    w.variety = v.variety;
    w.r = v.r;
    w.c = v.c - beta * v.r;
    w.d = v.d - beta * v.c + beta * beta / 2 * v.r;
    w.e = v.e + deg * (-beta * v.d + beta * beta / 2 * v.c - beta * beta * beta / 6 * v.r);
    return w;
}

ChernCharacter twist_integer(const ChernCharacter& v, const BigInt& beta) {
    TwistedChar w = twist(v.quad(), Rational(beta));
    return ChernCharacter(v.variety(), numer(w.r), numer(w.c), w.d, w.e);
}

Rational delta(const CharTrunc& v) { return v.c * v.c - 2 * v.r * v.d; }

SlopeValue slope_mu(const CharTrunc& v) { return SlopeValue::ratio(v.c, v.r); }

Rational chi_rr(const TwistedChar& v) {
    const VarietyData& X = get_variety(v.variety);
    // integral of ch.td: r*t3 + c*t2*H^3 + d*t1*H^3 + e*t0
    return v.r * X.todd[3] + v.c * X.todd[2] * X.degree + v.d * X.todd[1] * X.degree + v.e;
}

Rational chi_rr_classes(const ChernClasses& cl, const BigInt& rank) {
    const VarietyData& X = get_variety(cl.variety);
    Rational c1(cl.c1), c2(cl.c2), c3(cl.c3);
    return Rational(rank) + Rational(X.degree, 6) * c1 * c1 * c1 + (c3 - c1 * c2) / 2 +
           Rational(X.index, 4) * (X.degree * c1 * c1 - 2 * c2) + c1 * X.c2_omega_H;
}

Rational CubicPolynomial::eval(const Rational& m) const {
    return ((a3 * m + a2) * m + a1) * m + a0;
}

Rational CubicPolynomial::eval_p2(const Rational& m) const { return (a3 * m + a2) * m + a1; }

int CubicPolynomial::degree() const {
    if (a3 != 0) return 3;
    if (a2 != 0) return 2;
    if (a1 != 0) return 1;
    if (a0 != 0) return 0;
    return -1;
}

bool CubicPolynomial::is_zero() const { return degree() == -1; }

CubicPolynomial hilbert_poly(const ChernCharacter& v) {
    const VarietyData& X = get_variety(v.variety());
    const long deg = X.degree;
    Rational r = v.r_q(), c = v.c_q();
    CubicPolynomial p;
    p.a3 = Rational(deg) * r / 6;
    p.a2 = Rational(deg) * (X.todd[1] * r + c) / 2;
    p.a1 = Rational(deg) * (X.todd[2] * r + X.todd[1] * c + v.d());
    p.a0 = chi_rr(v);
    return p;
}

PolyOrder poly_compare(const CubicPolynomial& f, const CubicPolynomial& g) {
    if (f.is_zero() && g.is_zero())
        throw DomainError("poly_compare: both polynomials are zero");
    int df = f.degree(), dg = g.degree();
    // lower degree sorts greater
    if (df != dg) return df < dg ? PolyOrder::Greater : PolyOrder::Less;
    std::array<Rational, 4> fc{f.a3, f.a2, f.a1, f.a0}, gc{g.a3, g.a2, g.a1, g.a0};
    const Rational& lf = fc[3 - df];
    const Rational& lg = gc[3 - df];
    for (int i = 3 - df; i < 4; ++i) {
        Rational a = fc[i] / lf, b = gc[i] / lg;
        if (a != b) return a < b ? PolyOrder::Less : PolyOrder::Greater;
    }
    return PolyOrder::Equal;
}

ChernCharacter ch_line_bundle(VarietyId variety, const BigInt& n) {
    const long deg = get_variety(variety).degree;
    Rational nq(n);
    return ChernCharacter(variety, 1, n, nq * nq / 2, Rational(deg) * nq * nq * nq / 6);
}

ChernCharacter ch_spinor_minus1() {
    return ChernCharacter(VarietyId::X2, 2, -1, 0, Rational(1, 6));
}

ChernCharacter ch_spinor(const BigInt& n) {
    // S(n) = S(-1)(n+1)
    return twist_integer(ch_spinor_minus1(), -(n + 1));
}

ChernCharacter ch_surface(VarietyId variety, const BigInt& k, const BigInt& m) {
    if (k <= 0) throw DomainError("ch_surface requires k >= 1");
    return ch_line_bundle(variety, m) - ch_line_bundle(variety, m - k);
}

ChernCharacter ch_line_curve(VarietyId variety, const BigInt& m) {
    const VarietyData& X = get_variety(variety);
    return ChernCharacter(variety, 0, 0, Rational(1, X.degree),
                          Rational(m) + 1 - Rational(X.index, 2));
}

ChernCharacter ch_ideal_line_in_surface(VarietyId variety, const BigInt& k, const BigInt& m) {
    return ch_surface(variety, k, m) - ch_line_curve(variety, m);
}

ChernCharacter ch_series_f_bundle(VarietyId variety) {
    switch (variety) {
        case VarietyId::P3:
            return ChernCharacter(VarietyId::P3, 2, 1, Rational(-1, 2), Rational(1, 6));
        case VarietyId::X4:
            return ChernCharacter(VarietyId::X4, 2, 1, 0, Rational(-1, 3));
        case VarietyId::X5:
            return ChernCharacter(VarietyId::X5, 2, 1, Rational(1, 10), Rational(-1, 6));
        default:
            throw DomainError("series-F partner sheaf is defined on P3, X4, X5 only");
    }
}

}  // namespace fanotilt
