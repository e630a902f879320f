#pragma once

#include <array>
#include <compare>
#include <string>

#include "fanotilt/rational.hpp"
#include "fanotilt/variety.hpp"

namespace fanotilt {

// All characters are stored in normalized H-power coordinates:
//   ch(E) = (r, c*H, d*H^2, e*[pt]).
// Chern classes use the integral basis (H, [l], [pt]) with H^2 = degree*[l],
// H^3 = degree*[pt]; there c1, c2, c3 are integers.

// ch<=2 truncation with rational slots; wall geometry and slopes only ever
// read these three coordinates. Twisted characters land here as well.
struct CharTrunc {
    Rational r, c, d;

    friend bool operator==(const CharTrunc&, const CharTrunc&) = default;
    CharTrunc operator-(const CharTrunc& o) const { return {r - o.r, c - o.c, d - o.d}; }
    CharTrunc operator+(const CharTrunc& o) const { return {r + o.r, c + o.c, d + o.d}; }
    std::string str() const;
};

// Unconstrained quadruple: the result of twisting by a non-integer beta,
// where the lattice conditions may fail.
struct TwistedChar {
    VarietyId variety;
    Rational r, c, d, e;

    friend bool operator==(const TwistedChar&, const TwistedChar&) = default;
    CharTrunc trunc() const { return {r, c, d}; }
    std::string str() const;
};

struct ChernClasses;

// Validated Chern character of an object on its variety: r and c are
// integers and the induced Chern classes c2, c3 are integers (equivalently,
// on X2 and P3: 2d and 6e integral).
class ChernCharacter {
  public:
    ChernCharacter(VarietyId variety, BigInt r, BigInt c, Rational d, Rational e);

    VarietyId variety() const { return variety_; }
    const BigInt& r() const { return r_; }
    const BigInt& c() const { return c_; }
    const Rational& d() const { return d_; }
    const Rational& e() const { return e_; }

    Rational r_q() const { return Rational(r_); }
    Rational c_q() const { return Rational(c_); }
    CharTrunc trunc() const { return {Rational(r_), Rational(c_), d_}; }
    TwistedChar quad() const { return {variety_, Rational(r_), Rational(c_), d_, e_}; }

    ChernCharacter operator+(const ChernCharacter& o) const;
    ChernCharacter operator-(const ChernCharacter& o) const;
    friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

    std::string str() const;

  private:
    VarietyId variety_;
    BigInt r_, c_;
    Rational d_, e_;
};

// Integral Chern classes (1, c1*H, c2*[l], c3*[pt]).
struct ChernClasses {
    VarietyId variety;
    BigInt c1, c2, c3;

    friend bool operator==(const ChernClasses&, const ChernClasses&) = default;
    std::string str() const;
};

// ch -> c; rejects characters whose induced c2 or c3 is non-integral,
// naming the violated integrality.
ChernClasses to_chern_classes(const ChernCharacter& v);

// c -> ch, exact inverse of to_chern_classes for the given rank.
ChernCharacter from_chern_classes(const ChernClasses& cl, const BigInt& rank);

// ch^beta = e^{-beta H} . ch; for integer beta this is ch(E(-beta)).
TwistedChar twist(const TwistedChar& v, const Rational& beta);

// Integer twist with re-validation: ch(E(-beta)).
ChernCharacter twist_integer(const ChernCharacter& v, const BigInt& beta);

// Discriminant c^2 - 2rd; invariant under twisting.
Rational delta(const CharTrunc& v);
inline Rational delta(const ChernCharacter& v) { return delta(v.trunc()); }
inline Rational delta(const TwistedChar& v) { return delta(v.trunc()); }

// Slope H^2.ch1 / H^3.ch0 = c/r, +infinity for rank zero.
SlopeValue slope_mu(const CharTrunc& v);
inline SlopeValue slope_mu(const ChernCharacter& v) { return slope_mu(v.trunc()); }

// Euler characteristic by pairing with td(T_X).
Rational chi_rr(const TwistedChar& v);
inline Rational chi_rr(const ChernCharacter& v) { return chi_rr(v.quad()); }

// Euler characteristic through the closed Riemann-Roch formula in Chern
// classes; agrees with chi_rr (tested).
Rational chi_rr_classes(const ChernClasses& cl, const BigInt& rank);

// Hilbert polynomial P(E, m) = chi(E(m)) = a3 m^3 + a2 m^2 + a1 m + a0.
struct CubicPolynomial {
    Rational a3, a2, a1, a0;

    Rational eval(const Rational& m) const;
    // P2(E, m) = a3 m^2 + a2 m + a1.
    Rational eval_p2(const Rational& m) const;
    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const;
    friend bool operator==(const CubicPolynomial&, const CubicPolynomial&) = default;
};

CubicPolynomial hilbert_poly(const ChernCharacter& v);

enum class PolyOrder { Less, Equal, Greater };

// Reduced-asymptotic order on Hilbert polynomials: lower degree sorts
// greater; equal degrees compare f(m)/lead(f) against g(m)/lead(g) for
// m >> 0, decided lexicographically on normalized coefficients.
// Comparing two zero polynomials is rejected.
PolyOrder poly_compare(const CubicPolynomial& f, const CubicPolynomial& g);

// --- standard characters -------------------------------------------------

// ch(O_X(n)) = (1, n, n^2/2, degree * n^3/6).
ChernCharacter ch_line_bundle(VarietyId variety, const BigInt& n);

// ch(S(-1)) = (2, -1, 0, 1/6) for the spinor bundle S on the quadric X2,
// det S = O(1). ch_spinor(n) is ch(S(n)).
ChernCharacter ch_spinor_minus1();
ChernCharacter ch_spinor(const BigInt& n);

// ch(O_S(m)) = ch(O(m)) - ch(O(m-k)) for S in |O_X(k)|.
ChernCharacter ch_surface(VarietyId variety, const BigInt& k, const BigInt& m);

// ch(O_line(m)): ch2 = [l], chi = m + 1; so (0, 0, 1/degree, m + 1 - index/2).
ChernCharacter ch_line_curve(VarietyId variety, const BigInt& m);

// ch(I_{line,S}(m)) = ch(O_S(m)) - ch(O_line(m)), S in |O_X(k)|.
ChernCharacter ch_ideal_line_in_surface(VarietyId variety, const BigInt& k, const BigInt& m);

// Chern character of the rank-2 partner sheaf of the third extension series:
// P3: cokernel of O(-1) -> O^3, (2, 1, -1/2, 1/6);
// X4: restricted 4-quadric spinor bundle, (2, 1, 0, -1/3);
// X5: restricted dual tautological bundle of Gr(2,5), (2, 1, 1/10, -1/6).
ChernCharacter ch_series_f_bundle(VarietyId variety);

}  // namespace fanotilt
