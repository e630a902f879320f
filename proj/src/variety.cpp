#include "fanotilt/variety.hpp"

#include <algorithm>
#include <cctype>

#include "fanotilt/errors.hpp"

namespace fanotilt {

namespace {

VarietyData make(VarietyId id, long degree, long index, long c2_tx_h) {
    VarietyData v;
    v.id = id;
    v.degree = degree;
    v.index = index;
    v.todd[0] = 1;
    v.todd[1] = Rational(index, 2);
    v.todd[2] = Rational(index * index * degree + c2_tx_h, 12 * degree);
    v.todd[3] = 1;
    v.c2_omega_H = Rational(c2_tx_h + index * index * degree, 12);
    return v;
}

const VarietyData kP3 = make(VarietyId::P3, 1, 4, 6);
const VarietyData kX2 = make(VarietyId::X2, 2, 3, 8);
const VarietyData kX4 = make(VarietyId::X4, 4, 2, 12);
const VarietyData kX5 = make(VarietyId::X5, 5, 2, 12);

}  // namespace

const VarietyData& get_variety(VarietyId id) {
    switch (id) {
        case VarietyId::P3: return kP3;
        case VarietyId::X2: return kX2;
        case VarietyId::X4: return kX4;
        case VarietyId::X5: return kX5;
    }
    throw DomainError("unknown variety id; supported: P3 (=X1), X2, X4, X5");
}

std::string variety_name(VarietyId id) {
    switch (id) {
        case VarietyId::P3: return "P3";
        case VarietyId::X2: return "X2";
        case VarietyId::X4: return "X4";
        case VarietyId::X5: return "X5";
    }
    return "?";
}

std::string VarietyData::name() const { return variety_name(id); }

VarietyId parse_variety(const std::string& name) {
    std::string u = name;
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return std::toupper(c); });
    if (u == "P3" || u == "X1") return VarietyId::P3;
    if (u == "X2") return VarietyId::X2;
    if (u == "X4") return VarietyId::X4;
    if (u == "X5") return VarietyId::X5;
    throw DomainError("unknown variety '" + name + "'; supported: P3 (=X1), X2, X4, X5");
}

std::string rational_str(const Rational& q) {
    if (is_integer(q)) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        throw ParseError("cannot parse rational '" + text + "'");
    }
}

}  // namespace fanotilt
