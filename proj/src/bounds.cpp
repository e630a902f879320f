#include "fanotilt/bounds.hpp"

#include "fanotilt/errors.hpp"

namespace fanotilt {

std::string regime_str(BoundRegime r) {
    switch (r) {
        case BoundRegime::SchmidtP3: return "schmidt-P3";
        case BoundRegime::QuadricThm31: return "quadric-thm31";
        case BoundRegime::GeneralTypeX4: return "general-type-X4";
        case BoundRegime::GeneralTypeX5: return "general-type-X5";
    }
    return "?";
}

BoundResult e_max(long c, const Rational& d) {
    if (c != -1 && c != 0)
        throw DomainError("e-level bounds cover c in {-1, 0}; got c = " + std::to_string(c));
    if (d > 0) throw DomainError("then d <= 0; got d = " + rational_str(d));
    if (!is_integer(2 * d)) throw DomainError("d must lie in (1/2)Z; got d = " + rational_str(d));

    BoundResult b;
    b.variety = VarietyId::X2;
    b.regime = BoundRegime::QuadricThm31;
    const bool integral = is_integer(d);

    if (c == -1) {
        if (d == 0) {
            b.e_max = Rational(1, 6);
            b.case_id = "1.1";
            b.extremal_witness = "E = S(-1)";
        } else if (d == Rational(-1, 2)) {
            b.e_max = Rational(5, 3);
            b.case_id = "1.2";
            b.extremal_witness = "0 -> O(-1)^3 -> E -> O(-2)[1] -> 0";
        } else if (integral) {
            b.e_max = d * d - 2 * d + Rational(1, 6);
            b.case_id = "1.3";
            b.extremal_witness = "0 -> O(-1)^2 -> E -> I_{line,Q}(" + rational_str(d) + ") -> 0";
        } else {
            b.e_max = d * d - 2 * d + Rational(5, 12);
            b.case_id = "1.4";
            b.extremal_witness =
                "0 -> O(-1)^2 -> E -> O_Q(" + rational_str(d - Rational(1, 2)) + ") -> 0";
        }
    } else {
        if (d == 0) {
            b.e_max = 0;
            b.case_id = "2.1";
            b.extremal_witness = "E = O^2";
        } else if (d == Rational(-1, 2)) {
            b.e_max = Rational(-1, 2);
            b.case_id = "2.2";
            b.caveat = "attainability by a Gieseker-semistable sheaf is unknown";
        } else if (d == -1) {
            b.e_max = 1;
            b.case_id = "2.3";
            b.extremal_witness = "0 -> O(-1)^6 -> E -> S(-2)^2[1] -> 0";
        } else if (!integral) {
            b.e_max = d * d + Rational(1, 4);
            b.case_id = "2.4";
            b.extremal_witness =
                "0 -> S(-1) -> E -> O_Q(" + rational_str(d + Rational(1, 2)) + ") -> 0";
        } else if (d == -2) {
            b.e_max = 4;
            b.case_id = "2.5";
            b.extremal_witness =
                "0 -> S(-1) -> E -> I_{line,Q}(-1) -> 0; the reversed order; "
                "0 -> O(-1)^4 -> E -> O(-2)^2[1] -> 0";
        } else {
            b.e_max = d * d;
            b.case_id = "2.6";
            b.extremal_witness = "0 -> S(-1) -> E -> I_{line,Q}(" + rational_str(d + 1) + ") -> 0";
        }
    }

    // rank-2 conversion: c3 = 2e + deg*(c^3/6 - c d) on X2 (deg = 2)
    Rational cq(c);
    b.c3_max = 2 * b.e_max + 2 * (cq * cq * cq / 6 - cq * d);
    b.c3_max_raw = b.c3_max;
    return b;
}

BoundResult c3_max(VarietyId variety, long c1, const BigInt& c2, bool general_type) {
    if (c1 != -1 && c1 != 0)
        throw DomainError("c3 bounds cover c1 in {-1, 0}; got c1 = " + std::to_string(c1));
    if (c2 < 0) throw DomainError("c3 bounds require c2 >= 0");

    BoundResult b;
    b.variety = variety;
    Rational c2q(c2);
    const bool even = (c2 % 2 == 0);

    switch (variety) {
        case VarietyId::P3:
            b.regime = BoundRegime::SchmidtP3;
            b.c3_max_raw = c1 == 0 ? c2q * c2q - c2q + 2 : c2q * c2q;
            b.c3_max = b.c3_max_raw;
            return b;
        case VarietyId::X2: {
            b.regime = BoundRegime::QuadricThm31;
            if (c1 == -1)
                b.c3_max_raw = even ? c2q * c2q / 2 : (c2q * c2q - 1) / 2;
            else
                b.c3_max_raw = even ? c2q * c2q / 2 : (c2q * c2q + 1) / 2;
            b.c3_max = b.c3_max_raw;
            // d <= 0 holds iff c2 >= 1 here; c2 = 0 keeps the formula value
            if (c1 == -1 && c2 == 0) b.caveat = "no semistable class: c1 = -1, c2 = 0 forces d > 0";
            if (c1 == 0 && c2 == 1) {
                b.c3_max = -1;
                b.c3_max_raw = -1;
                b.case_id = "2.2";
                b.caveat = "attainability by a Gieseker-semistable sheaf is unknown";
                b.e_max = Rational(-1, 2);
                return b;
            }
            if (c2 >= 1 || c1 == 0) {
                Rational d = (Rational(c1) * c1 - c2q) / 2;
                BoundResult e = e_max(c1, d);
                b.e_max = e.e_max;
                b.case_id = e.case_id;
                b.extremal_witness = e.extremal_witness;
            }
            return b;
        }
        case VarietyId::X4:
            if (!general_type)
                throw DomainError("the X4 bound is proven for stable reflexive sheaves of "
                                  "general type; set the general-type flag to use it");
            if (c1 != 0) throw DomainError("the X4 general-type bound requires c1 = 0");
            if (c2 == 0) throw DomainError("the X4 general-type bound requires c2 > 0");
            b.regime = BoundRegime::GeneralTypeX4;
            b.c3_max_raw = c2q * c2q - c2q + 2;
            b.c3_max = b.c3_max_raw;
            return b;
        case VarietyId::X5: {
            if (!general_type)
                throw DomainError("the X5 bound is proven for stable reflexive sheaves of "
                                  "general type; set the general-type flag to use it");
            if (c1 != 0) throw DomainError("the X5 general-type bound requires c1 = 0");
            if (c2 == 0) throw DomainError("the X5 general-type bound requires c2 > 0");
            b.regime = BoundRegime::GeneralTypeX5;
            b.c3_max_raw = Rational(2, 9) * c2q * c2q + (even ? Rational(0) : Rational(1, 2));
            // c3 is an integer, so the bound tightens to the floor
            b.c3_max = Rational(rational_floor(b.c3_max_raw));
            return b;
        }
    }
    throw DomainError("unknown variety");
}

ConsistencyReport bounds_consistency(long c1, const BigInt& c2_from, const BigInt& c2_to) {
    if (c1 != -1 && c1 != 0)
        throw DomainError("bounds_consistency covers c1 in {-1, 0}");
    ConsistencyReport report;
    report.c1 = c1;
    report.all_agree = true;
    for (BigInt c2 = c2_from; c2 <= c2_to; ++c2) {
        ConsistencyRow row;
        row.c2 = c2;
        row.d = (Rational(c1) * c1 - Rational(c2)) / 2;
        row.c3_closed = c3_max(VarietyId::X2, c1, c2).c3_max;
        if (row.d > 0) {
            row.note = "no semistable class (d > 0); closed formula value kept";
            row.agree = true;
            report.rows.push_back(std::move(row));
            continue;
        }
        BoundResult e = e_max(c1, row.d);
        row.e_level = e.e_max;
        row.c3_from_e = e.c3_max;
        row.agree = row.c3_from_e == row.c3_closed;
        if (!row.agree) {
            row.note = "MISMATCH";
            report.all_agree = false;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace fanotilt
