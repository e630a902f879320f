#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "fanotilt/errors.hpp"

namespace fanotilt {

// Exact arbitrary-precision rational, the universal scalar of the library.
// The backend keeps values in lowest terms with positive denominator.
// Expression templates are off: these are plain value types.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

// Construction that tolerates a negative denominator (the backend does not).
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

// q in (1/n)Z
inline bool is_multiple_of_inverse(const Rational& q, long n) {
    return is_integer(q * n);
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rational_floor(const Rational& q) { return floor_div(numer(q), denom(q)); }

inline BigInt rational_ceil(const Rational& q) { return -rational_floor(-q); }

// Round to nearest integer, halves toward +inf; used only for grid seeding.
inline BigInt rational_round(const Rational& q) { return rational_floor(q + Rational(1, 2)); }

inline Rational sq(const Rational& q) { return q * q; }

// "p/q" (or "p" when q == 1); the wire format for every rational in the CLI.
std::string rational_str(const Rational& q);

// Accepts "p", "p/q", optional leading '-'; rejects everything else.
Rational parse_rational(const std::string& text);

// A rational extended with +infinity; the value type of every slope function.
// The paper's convention: division by zero yields +infinity, larger than
// every rational.
class SlopeValue {
  public:
    SlopeValue() : finite_(true), value_(0) {}
    explicit SlopeValue(Rational v) : finite_(true), value_(std::move(v)) {}
    static SlopeValue infinity() {
        SlopeValue s;
        s.finite_ = false;
        return s;
    }
    static SlopeValue ratio(const Rational& num, const Rational& den) {
        return den == 0 ? infinity() : SlopeValue(num / den);
    }

    bool is_infinite() const { return !finite_; }
    const Rational& value() const {
        if (!finite_) throw DomainError("slope value is +infinity");
        return value_;
    }

    friend bool operator==(const SlopeValue& a, const SlopeValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }
    friend bool operator<(const SlopeValue& a, const SlopeValue& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator<=(const SlopeValue& a, const SlopeValue& b) { return a == b || a < b; }

    std::string str() const { return finite_ ? rational_str(value_) : "+inf"; }

  private:
    bool finite_;
    Rational value_;
};

}  // namespace fanotilt
