#include "fanotilt/moduli_series.hpp"

#include "fanotilt/errors.hpp"

namespace fanotilt {

std::string series_str(SeriesId s) {
    switch (s) {
        case SeriesId::A: return "A";
        case SeriesId::B: return "B";
        case SeriesId::C: return "C";
        case SeriesId::D: return "D";
        case SeriesId::F: return "F";
    }
    return "?";
}

SeriesId parse_series(const std::string& name) {
    if (name == "A" || name == "a") return SeriesId::A;
    if (name == "B" || name == "b") return SeriesId::B;
    if (name == "C" || name == "c") return SeriesId::C;
    if (name == "D" || name == "d") return SeriesId::D;
    if (name == "F" || name == "f") return SeriesId::F;
    throw DomainError("unknown series '" + name + "'; supported: A, B, C, D, F");
}

BigInt series_default_n(SeriesId series, const BigInt& k) {
    switch (series) {
        case SeriesId::A: return (k + 1) / 2;  // ceil(k/2) for k >= 1
        case SeriesId::C:
        case SeriesId::F: return k / 2 + 1;
        case SeriesId::B:
        case SeriesId::D: return 1;
    }
    return 1;
}

void validate_series(const SeriesParams& p) {
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw DomainError("invalid series parameters: " + what);
    };
    switch (p.series) {
        case SeriesId::A:
            require(p.k >= 1, "series A needs k >= 1");
            require(p.n == (p.k + 1) / 2, "series A needs n = ceil(k/2)");
            require(p.m + p.n < 0, "series A needs m + n < 0");
            return;
        case SeriesId::B:
            require(p.variety == VarietyId::X2, "series B lives on X2");
            require(p.k == 1 && p.n == 1, "series B needs k = n = 1");
            require(p.m < 0, "series B needs m < 0");
            return;
        case SeriesId::C:
            require(p.variety == VarietyId::X2, "series C lives on X2");
            require(p.k >= 1, "series C needs k >= 1");
            require(p.n == p.k / 2 + 1, "series C needs n = floor(k/2) + 1");
            require(p.m <= -p.n, "series C needs m <= -n");
            return;
        case SeriesId::D:
            require(p.variety == VarietyId::X2, "series D lives on X2");
            require(p.k == 1 && p.n == 1, "series D needs k = n = 1");
            require(p.m <= -1, "series D needs m <= -1");
            return;
        case SeriesId::F:
            require(p.variety == VarietyId::P3 || p.variety == VarietyId::X4 ||
                        p.variety == VarietyId::X5,
                    "series F lives on P3, X4, X5");
            require(p.k >= 1, "series F needs k >= 1");
            require(p.n == p.k / 2 + 1, "series F needs n = floor(k/2) + 1");
            require(p.m + p.n < 0, "series F needs m + n < 0");
            return;
    }
    throw DomainError("unknown series");
}

ChernCharacter series_chern(const SeriesParams& p) {
    validate_series(p);
    switch (p.series) {
        case SeriesId::A: {
            ChernCharacter o = ch_line_bundle(p.variety, -p.n);
            return o + o + ch_surface(p.variety, p.k, p.m);
        }
        case SeriesId::B: {
            ChernCharacter o = ch_line_bundle(VarietyId::X2, -1);
            return o + o + ch_ideal_line_in_surface(VarietyId::X2, 1, p.m);
        }
        case SeriesId::C:
            return ch_spinor(-p.n) + ch_surface(VarietyId::X2, p.k, p.m);
        case SeriesId::D:
            return ch_spinor(-1) + ch_ideal_line_in_surface(VarietyId::X2, 1, p.m);
        case SeriesId::F: {
            ChernCharacter f = ch_series_f_bundle(p.variety);
            return twist_integer(f, p.n) + ch_surface(p.variety, p.k, p.m);
        }
    }
    throw DomainError("unknown series");
}

SeriesAClosedForm series_a_closed_form(const BigInt& k, const BigInt& m) {
    Rational kq(k), mq(m);
    SeriesAClosedForm f;
    if (k % 2 == 0) {
        f.c1_h = 0;
        f.c2_h2 = kq * kq / 4 - kq * mq;
        f.c3_h3 = kq * sq(kq / 2 - mq);
    } else {
        f.c1_h = -1;
        f.c2_h2 = sq(kq - 1) / 4 - kq * mq;
        f.c3_h3 = kq * sq((kq - 1) / 2 - mq);
    }
    return f;
}

namespace {

BigInt binom(const BigInt& a, long b) {
    if (b < 0 || a < b) return 0;
    BigInt num = 1, den = 1;
    for (long i = 0; i < b; ++i) {
        num *= a - i;
        den *= i + 1;
    }
    return num / den;
}

BigInt to_integer(const Rational& q, const std::string& what) {
    if (!is_integer(q))
        throw DomainError(what + " evaluated to the non-integer " + rational_str(q));
    return numer(q);
}

}  // namespace

BigInt series_dim(const SeriesParams& p) {
    validate_series(p);
    const BigInt a = p.k - p.m - p.n;  // k - m - n
    const BigInt b = -p.m - p.n;       // -m - n
    const Rational kq(p.k), mq(p.m);

    switch (p.series) {
        case SeriesId::A:
            switch (p.variety) {
                case VarietyId::P3:
                    return 2 * binom(a + 3, 3) - 2 * binom(b + 3, 3) + binom(p.k + 3, 3) - 5;
                case VarietyId::X2:
                    return 2 * binom(a + 4, 4) - 2 * binom(a + 2, 4) - 2 * binom(b + 4, 4) +
                           2 * binom(b + 2, 4) + binom(p.k + 4, 4) - binom(p.k + 2, 4) - 5;
                case VarietyId::X4:
                    return 2 * binom(a + 5, 5) - 4 * binom(a + 3, 5) + 2 * binom(a + 1, 5) -
                           2 * binom(b + 5, 5) + 4 * binom(b + 3, 5) - 2 * binom(b + 1, 5) +
                           binom(p.k + 5, 5) - 2 * binom(p.k + 3, 5) + binom(p.k + 1, 5) - 5;
                case VarietyId::X5: {
                    Rational aq(a), bq(b);
                    Rational v = Rational(5, 3) * aq * aq * aq + 5 * aq * aq +
                                 Rational(16, 3) * aq - Rational(5, 3) * bq * bq * bq -
                                 5 * bq * bq - Rational(16, 3) * bq + Rational(5, 6) * kq * kq * kq +
                                 Rational(5, 2) * kq * kq + Rational(8, 3) * kq - 4;
                    return to_integer(v, "series A dimension on X5");
                }
            }
            break;
        case SeriesId::B:
            return to_integer(2 * mq * mq - 6 * mq + 4, "series B dimension");
        case SeriesId::C:
            return 4 * binom(a + 3, 3) - 4 * binom(b + 3, 3) + binom(p.k + 4, 4) -
                   binom(p.k + 2, 4) - 2;
        case SeriesId::D:
            return to_integer(2 * mq * mq - 8 * mq + 10, "series D dimension");
        case SeriesId::F:
            switch (p.variety) {
                case VarietyId::P3:
                    return binom(p.k + 3, 3) + 3 * binom(a + 3, 3) - binom(a + 2, 3) -
                           3 * binom(b + 3, 3) + binom(b + 2, 3) + 1;
                case VarietyId::X4:
                    return 4 * (binom(a + 4, 4) - binom(a + 2, 4) - binom(b + 4, 4) +
                                binom(b + 2, 4)) +
                           to_integer(Rational(2, 3) * kq * kq * kq + 2 * kq * kq +
                                          Rational(7, 3) * kq,
                                      "series F dimension on X4");
                case VarietyId::X5: {
                    Rational aq(a + 1), bq(b + 1);
                    Rational v = Rational(5, 3) * aq * aq * aq + Rational(15, 2) * aq * aq +
                                 Rational(65, 6) * aq - Rational(5, 3) * bq * bq * bq -
                                 Rational(15, 2) * bq * bq - Rational(65, 6) * bq +
                                 Rational(5, 6) * kq * kq * kq + Rational(5, 2) * kq * kq +
                                 Rational(8, 3) * kq - 1;
                    return to_integer(v, "series F dimension on X5");
                }
                default: break;
            }
            break;
    }
    throw DomainError("no dimension formula for series " + series_str(p.series) + " on " +
                      variety_name(p.variety));
}

std::optional<BigInt> series_bundle_rank(const SeriesParams& p) {
    validate_series(p);
    BigInt c2 = to_chern_classes(series_chern(p)).c2;
    switch (p.series) {
        case SeriesId::A:
            if (p.variety == VarietyId::X2 && p.k == 1 && p.m <= -2)
                return (c2 + 2) * (c2 + 2) / 4;
            return std::nullopt;
        case SeriesId::B:
            return (c2 + 1) * (c2 + 3) / 4;
        case SeriesId::C:
            if (p.k == 1) return (c2 + 1) * (c2 + 3) / 2;
            return std::nullopt;
        case SeriesId::D:
            return c2 * c2 / 2 + 2 * c2 + 1;  // = 2m^2 - 8m + 7
        case SeriesId::F:
            return std::nullopt;
    }
    return std::nullopt;
}

bool ext2_vanishes(const SeriesParams& p) {
    if (p.series != SeriesId::A)
        throw DomainError("the ext^2 vanishing criterion is stated for series A only");
    validate_series(p);
    const long i = get_variety(p.variety).index;
    return p.k < i && p.m > p.k - p.n - i;
}

BigInt linear_system_dim(VarietyId variety, const BigInt& k) {
    Rational chi = chi_rr(ch_line_bundle(variety, k));
    return numer(chi) - 1;
}

std::string fibration_str(FibrationKind f) {
    switch (f) {
        case FibrationKind::Grassmannization: return "grassmannization-rank2";
        case FibrationKind::Projectivization: return "projectivization";
        case FibrationKind::None: return "none";
    }
    return "?";
}

std::string base_str(BaseSpace b) {
    switch (b) {
        case BaseSpace::PN: return "PN";
        case BaseSpace::Grassmannian: return "G=Gr(2,4)";
        case BaseSpace::WTimesPN: return "WxPN";
        case BaseSpace::None: return "none";
    }
    return "?";
}

ModuliComponent series_descriptor(const SeriesParams& p) {
    validate_series(p);
    ModuliComponent c;
    c.dim = series_dim(p);
    c.bundle_rank = series_bundle_rank(p);
    c.fine = true;
    c.smooth = true;
    c.rational = !(p.series == SeriesId::F && p.variety == VarietyId::X4);
    const BigInt N = linear_system_dim(p.variety, p.k);
    switch (p.series) {
        case SeriesId::A:
            c.fibration = FibrationKind::Grassmannization;
            c.base = BaseSpace::PN;
            c.base_dim = N;
            break;
        case SeriesId::B:
            c.fibration = FibrationKind::Grassmannization;
            c.base = BaseSpace::Grassmannian;
            c.base_dim = 4;
            break;
        case SeriesId::C:
            c.fibration = FibrationKind::Projectivization;
            c.base = BaseSpace::PN;
            c.base_dim = N;
            break;
        case SeriesId::D:
            c.fibration = FibrationKind::Projectivization;
            c.base = BaseSpace::Grassmannian;
            c.base_dim = 4;
            break;
        case SeriesId::F: {
            c.fibration = FibrationKind::Projectivization;
            c.base = BaseSpace::WTimesPN;
            long dim_w = p.variety == VarietyId::P3 ? 3 : (p.variety == VarietyId::X4 ? 1 : 0);
            c.base_dim = N + dim_w;
            break;
        }
    }
    c.label = "series " + series_str(p.series) + " component";
    return c;
}

MaximalModuli maximal_moduli(VarietyId variety, long c1, const BigInt& c2) {
    if (variety != VarietyId::X2)
        throw DomainError("the maximal-c3 classification is implemented for X2");
    if (c1 != -1 && c1 != 0) throw DomainError("classification covers c1 in {-1, 0}");
    if (c2 < 0) throw DomainError("classification requires c2 >= 0");
    if (c1 == -1 && c2 == 0)
        throw DomainError("no semistable class: c1 = -1, c2 = 0 forces positive ch2");
    if (c1 == 0 && c2 == 1)
        throw DomainError("maximal c3 is -1 and attainability by a Gieseker-semistable sheaf "
                          "is unknown; no classification row");

    BoundResult bound = c3_max(VarietyId::X2, c1, c2);
    MaximalModuli result{c1,
                         c2,
                         bound.c3_max,
                         from_chern_classes(
                             ChernClasses{VarietyId::X2, c1, c2, numer(bound.c3_max)}, 2),
                         "",
                         std::nullopt,
                         {}};

    const bool even = (c2 % 2 == 0);
    const BigInt p = even ? c2 / 2 : (c2 - 1) / 2;

    // special small-c2 rows
    if (c1 == -1 && c2 == 1) {
        result.case_label = "special:point";
        ModuliComponent pt;
        pt.label = "point [S(-1)]";
        pt.smooth = pt.rational = pt.fine = true;
        pt.note = "single stable sheaf";
        result.components.push_back(pt);
        return result;
    }
    if (c1 == 0 && c2 == 0) {
        result.case_label = "special:point";
        ModuliComponent pt;
        pt.label = "point [O^2]";
        pt.smooth = pt.rational = true;
        pt.note = "single polystable sheaf";
        result.components.push_back(pt);
        return result;
    }
    if (c1 == -1 && c2 == 2) {
        result.case_label = "special:Gr(2,5)";
        ModuliComponent g;
        g.label = "Gr(2,5)";
        g.dim = 6;
        g.smooth = g.rational = g.fine = true;
        g.note = "isomorphic to the grassmannian Gr(2,5)";
        result.components.push_back(g);
        return result;
    }
    if (c1 == 0 && c2 == 2) {
        result.case_label = "special:c2=2";
        ModuliComponent s;
        s.label = "M(2;0,2,2)";
        s.dim = 9;
        s.smooth = false;
        s.note = "irreducible, not smooth; rationality not asserted";
        result.components.push_back(s);
        return result;
    }
    if (c1 == 0 && c2 == 4) {
        result.case_label = "special:c2=4";
        SeriesParams d_series{SeriesId::D, VarietyId::X2, 1, -1, 1};
        ModuliComponent m1 = series_descriptor(d_series);
        m1.label = "M1";
        m1.note = "all sheaves stable; the moduli scheme is nonsingular along M1";
        ModuliComponent m2;
        m2.label = "M2";
        m2.dim = 21;
        m2.smooth = false;
        m2.note = "irreducible; polystable sheaves form a closed 12-dimensional subset "
                  "where the moduli scheme is not smooth";
        result.components.push_back(m1);
        result.components.push_back(m2);
        result.series = d_series;
        return result;
    }

    // generic rows
    SeriesParams params;
    if (c1 == -1 && even) {
        if (p < 2) throw DomainError("no classification row for c1 = -1, c2 = " + c2.str());
        params = {SeriesId::A, VarietyId::X2, 1, -p, 1};
    } else if (c1 == -1) {
        params = {SeriesId::B, VarietyId::X2, 1, -p, 1};
    } else if (!even) {
        params = {SeriesId::C, VarietyId::X2, 1, -p, 1};
    } else {
        if (p < 3) throw DomainError("no classification row for c1 = 0, c2 = " + c2.str());
        params = {SeriesId::D, VarietyId::X2, 1, 1 - p, 1};
    }
    result.case_label = "series:" + series_str(params.series);
    result.series = params;
    ModuliComponent comp = series_descriptor(params);
    comp.label = "M(2;" + std::to_string(c1) + "," + c2.str() + "," +
                 rational_str(bound.c3_max) + ")";
    comp.note = "irreducible smooth rational projective; all sheaves stable; general sheaf "
                "reflexive";
    result.components.push_back(comp);
    return result;
}

bool series_a_growth_bound_holds(const BigInt& k, const BigInt& m) {
    SeriesAClosedForm f = series_a_closed_form(k, m);
    if (k % 2 == 0) return Rational(k) * f.c3_h3 < 4 * sq(f.c2_h2);
    return sq(Rational(k) - 1) * f.c3_h3 < 4 * Rational(k) * sq(f.c2_h2);
}

}  // namespace fanotilt
