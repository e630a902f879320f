#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fanotilt/wall_search.hpp"
#include "test_support.hpp"

using namespace fanotilt;
using namespace testsupport;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

// Independent oracle: full scan over a wide raw grid, with the wall circle
// and every filter recomputed from the raw slope-equality equation rather
// than through the library path.
struct OracleWall {
    Rational center, radius_sq;
    std::set<std::array<Rational, 3>> witnesses;
};

std::vector<OracleWall> brute_force_walls(const ChernCharacter& v, long rank_max,
                                          const BetaWindow& win, const Rational& min_rho_sq,
                                          long c_span = 30, long twod_span = 80) {
    const Rational rv = v.r_q(), cv = v.c_q(), dv = v.d();
    const Rational delta_v = cv * cv - 2 * rv * dv;
    const long deg = get_variety(v.variety()).degree;
    std::map<std::pair<Rational, Rational>, std::set<std::array<Rational, 3>>> walls;

    for (long r = 0; r <= rank_max; ++r) {
        for (long c = -c_span; c <= c_span; ++c) {
            // endpoint heart positivity, as documented for the scan grid
            bool c_ok = true;
            for (const Rational& b : {win.lo, win.hi}) {
                Rational x = c - b * r, X = cv - b * rv;
                if (x < 0 || x > X) c_ok = false;
            }
            if (!c_ok) continue;
            for (long t = -twod_span; t <= twod_span; ++t) {
                Rational d = Rational(c) * c / 2 - Rational(t, deg);
                Rational dw = Rational(c) * c - 2 * r * d;
                Rational du = sq(cv - c) - 2 * (rv - r) * (dv - d);
                if (dw < 0 || du < 0 || dw + du > delta_v) continue;
                // raw circle: coefficients of the slope-equality equation
                Rational A = cv * r - Rational(c) * rv;  // (beta^2+alpha^2)/2 term
                Rational B = dv * r - d * rv;            // -beta term
                Rational C = dv * c - d * cv;            // constant
                if (A == 0) continue;
                Rational s = B / A;
                Rational rho2 = s * s - 2 * C / A;
                if (!(rho2 > 0) || rho2 < min_rho_sq) continue;
                Rational peak = s < win.lo ? win.lo : (s > win.hi ? win.hi : s);
                if (rho2 - sq(peak - s) <= 0) continue;
                Rational x = c - s * r, X = cv - s * rv;
                if (!(x > 0 && x < X)) continue;
                walls[{s, rho2}].insert({Rational(r), Rational(c), d});
            }
        }
    }
    std::vector<OracleWall> out;
    for (auto& [key, wits] : walls) out.push_back({key.first, key.second, std::move(wits)});
    return out;
}

// pair-canonicalization for comparing oracle and implementation output
std::array<Rational, 3> canon_pair(const std::array<Rational, 3>& w, const ChernCharacter& v) {
    std::array<Rational, 3> u{v.r_q() - w[0], v.c_q() - w[1], v.d() - w[2]};
    if (w[0] != u[0]) return w[0] > u[0] ? w : u;
    if (w[1] != u[1]) return w[1] < u[1] ? w : u;
    return w[2] <= u[2] ? w : u;
}

bool same_wall_sets(const std::vector<CandidateWall>& got, std::vector<OracleWall> oracle,
                    const ChernCharacter& v) {
    if (got.size() != oracle.size()) return false;
    std::sort(oracle.begin(), oracle.end(), [](const OracleWall& a, const OracleWall& b) {
        if (a.radius_sq != b.radius_sq) return a.radius_sq > b.radius_sq;
        return a.center < b.center;
    });
    for (size_t i = 0; i < got.size(); ++i) {
        if (got[i].wall.center != oracle[i].center) return false;
        if (got[i].wall.radius_sq != oracle[i].radius_sq) return false;
        std::set<std::array<Rational, 3>> canon;
        for (const auto& w : oracle[i].witnesses) canon.insert(canon_pair(w, v));
        std::set<std::array<Rational, 3>> got_wits;
        for (const auto& w : got[i].witnesses) got_wits.insert({w.r, w.c, w.d});
        if (canon != got_wits) return false;
    }
    return true;
}

bool has_witness(const std::vector<CandidateWall>& walls, const CharTrunc& w,
                 const ChernCharacter& v) {
    for (const auto& cw : walls)
        for (const auto& wit : cw.witnesses)
            if (wit == w || v.trunc() - wit == w) return true;
    return false;
}

}  // namespace

TEST_CASE("enumerate_walls on (2,0,-2,4): named walls, exact against brute force") {
    ChernCharacter v(VarietyId::X2, 2, 0, -2, 4);
    BetaWindow win{Q(-2), Q(-1, 2)};
    auto walls = enumerate_walls(v, 4, win, Q(1, 100));

    // the spinor wall {-2, 2} and the W-wall {-3/2, 1/4}
    REQUIRE(walls.size() == 2);
    CHECK(walls[0].wall.center == Q(-2));
    CHECK(walls[0].wall.radius_sq == Q(2));
    CHECK(walls[1].wall.center == Q(-3, 2));
    CHECK(walls[1].wall.radius_sq == Q(1, 4));

    CHECK(has_witness(walls, CharTrunc{2, -1, 0}, v));  // S(-1)
    CHECK(has_witness(walls, CharTrunc{0, 1, -2}, v));  // I_{line,Q}(-1), same wall
    CHECK(has_witness(walls, CharTrunc{4, -4, 2}, v));  // O(-1)^4
    CHECK(has_witness(walls, CharTrunc{2, -1, Q(-1, 2)}, v));

    CHECK(same_wall_sets(walls, brute_force_walls(v, 4, win, Q(1, 100)), v));
}

TEST_CASE("enumerate_walls: Delta = 0 classes admit no semicircular wall") {
    ChernCharacter o = ch_line_bundle(VarietyId::X2, 0);
    CHECK(enumerate_walls(o, 4, {Q(-3), Q(3)}, Q(1, 1000)).empty());
    ChernCharacter o2 = o + o;
    CHECK(enumerate_walls(o2, 5, {Q(-2), Q(-1, 2)}, Q(1, 100)).empty());
}

TEST_CASE("enumerate_walls on (2,-1,-1/2,5/3): one wall, three pair-reduced witnesses") {
    ChernCharacter v(VarietyId::X2, 2, -1, Q(-1, 2), Q(5, 3));
    BetaWindow win{Q(-2), Q(-1)};
    auto walls = enumerate_walls(v, 3, win, Q(1, 100));
    REQUIRE(walls.size() == 1);
    CHECK(walls[0].wall.center == Q(-3, 2));
    CHECK(walls[0].wall.radius_sq == Q(1, 4));
    // O(-1), O(-1)^2, O(-1)^3 truncations
    CHECK(has_witness(walls, CharTrunc{1, -1, Q(1, 2)}, v));
    CHECK(has_witness(walls, CharTrunc{2, -2, 1}, v));
    CHECK(has_witness(walls, CharTrunc{3, -3, Q(3, 2)}, v));
    CHECK(same_wall_sets(walls, brute_force_walls(v, 3, win, Q(1, 100)), v));
}

TEST_CASE("brute-force agreement over random rank-2 classes") {
    int checked = 0;
    for (int i = 0; i < 40 && checked < 12; ++i) {
        ChernClasses cl{VarietyId::X2, rand_int(-1, 0), rand_int(0, 6), rand_int(-6, 6)};
        ChernCharacter v = from_chern_classes(cl, 2);
        if (delta(v) < 0) continue;
        BetaWindow win{Q(-3), Q(-1, 2)};
        auto walls = enumerate_walls(v, 4, win, Q(1, 64));
        CHECK(same_wall_sets(walls, brute_force_walls(v, 4, win, Q(1, 64), 40, 140), v));
        ++checked;
    }
    CHECK(checked >= 12);
}

TEST_CASE("enumerate_walls rejections and the empty window") {
    ChernCharacter bad(VarietyId::X2, 2, 0, 1, 0);  // Delta = -4
    CHECK_THROWS_WITH_AS(enumerate_walls(bad, 4, {Q(-2), Q(-1)}, 0), doctest::Contains("Delta"),
                         DomainError);
    ChernCharacter v(VarietyId::X2, 2, 0, -2, 4);
    CHECK_THROWS_AS(enumerate_walls(v, 0, {Q(-2), Q(-1)}, 0), DomainError);
    CHECK(enumerate_walls(v, 4, {Q(-1), Q(-2)}, 0).empty());
}

TEST_CASE("every enumerated wall respects the rank-based radius bound") {
    for (int i = 0; i < 60; ++i) {
        ChernCharacter v = rand_character(VarietyId::X2, 2);
        if (delta(v) < 0) continue;
        auto walls = enumerate_walls(v, 5, {Q(-4), Q(0)}, Q(1, 100));
        for (const auto& cw : walls)
            for (const auto& w : cw.witnesses)
                for (const CharTrunc& side : {w, v.trunc() - w}) {
                    if (!(side.r > v.r_q())) continue;
                    Rational bound = radius_bound(v, numer(side.r));
                    CHECK(cw.wall.radius_sq <= bound * bound);
                }
    }
}

TEST_CASE("complementary truncations define the same wall") {
    ChernCharacter v(VarietyId::X2, 2, 0, -2, 4);
    auto walls = enumerate_walls(v, 4, {Q(-2), Q(-1, 2)}, Q(1, 100));
    for (const auto& cw : walls)
        for (const auto& w : cw.witnesses) {
            Wall behind = numerical_wall(v.trunc(), v.trunc() - w);
            CHECK(behind.kind == WallKind::Semicircle);
            CHECK(behind.center == cw.wall.center);
            CHECK(behind.radius_sq == cw.wall.radius_sq);
        }
}

TEST_CASE("monotonicity: shrinking the window or raising the floor removes walls only") {
    ChernCharacter v(VarietyId::X2, 2, 0, -3, 9);
    auto key_set = [](const std::vector<CandidateWall>& ws) {
        std::set<std::pair<Rational, Rational>> keys;
        for (const auto& w : ws) keys.insert({w.wall.center, w.wall.radius_sq});
        return keys;
    };
    auto base = key_set(enumerate_walls(v, 4, {Q(-3), Q(-1, 2)}, Q(1, 100)));
    for (auto [lo, hi, floor_num] :
         {std::tuple<long, long, long>{-2, -1, 1}, {-3, -2, 4}, {-2, -1, 25}}) {
        auto shrunk = key_set(enumerate_walls(v, 4, {Q(lo), Q(hi)}, Q(floor_num, 100)));
        for (const auto& k : shrunk) CHECK(base.count(k) == 1);
    }
}

TEST_CASE("same-side walls nest: no partial overlaps in the enumerated family") {
    ChernCharacter v(VarietyId::X2, 2, 0, -3, 9);
    auto walls = enumerate_walls(v, 4, {Q(-4), Q(-1, 10)}, Q(1, 400));
    for (size_t i = 0; i < walls.size(); ++i)
        for (size_t j = i + 1; j < walls.size(); ++j) {
            const Wall &a = walls[i].wall, &b = walls[j].wall;
            if (a.center == b.center) continue;
            Rational beta =
                (b.center * b.center - a.center * a.center + a.radius_sq - b.radius_sq) /
                (2 * (b.center - a.center));
            CHECK(a.alpha_sq_at(beta) <= 0);
        }
    // the maximal-radius wall on the scanned side exists and tops the list
    REQUIRE(!walls.empty());
    for (const auto& w : walls) CHECK(walls[0].wall.radius_sq >= w.wall.radius_sq);
}

TEST_CASE("determinism: identical inputs give identical ordered output") {
    ChernCharacter v(VarietyId::X2, 2, -1, Q(-3, 2), Q(17, 3));
    auto a = enumerate_walls(v, 4, {Q(-3), Q(-1)}, Q(1, 100));
    auto b = enumerate_walls(v, 4, {Q(-3), Q(-1)}, Q(1, 100));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].wall.center == b[i].wall.center);
        CHECK(a[i].wall.radius_sq == b[i].wall.radius_sq);
        CHECK(a[i].witnesses == b[i].witnesses);
    }
    for (size_t i = 1; i < a.size(); ++i)
        CHECK(a[i - 1].wall.radius_sq >= a[i].wall.radius_sq);
}

TEST_CASE("verify_theorem31_case: the quoted examples") {
    CaseReport r25 = verify_theorem31_case(0, Q(-2));
    CHECK(r25.case_id == "2.5");
    CHECK(r25.e_max == 4);
    CHECK(r25.matched);
    CHECK(r25.exhaustive);

    CaseReport r11 = verify_theorem31_case(-1, Q(0));
    CHECK(r11.case_id == "1.1");
    CHECK(r11.e_max == Q(1, 6));
    CHECK(r11.walls.empty());
    CHECK(r11.matched);

    CaseReport r22 = verify_theorem31_case(0, Q(-1, 2));
    CHECK(r22.case_id == "2.2");
    CHECK(r22.e_max == Q(-1, 2));
    CHECK(r22.matched);

    CHECK_THROWS_AS(verify_theorem31_case(0, Q(1)), DomainError);
    CHECK_THROWS_AS(verify_theorem31_case(2, Q(-1)), DomainError);
}

TEST_CASE("verify_theorem31_case: all representative inputs match") {
    for (const auto& [c, d] : theorem31_representative_inputs()) {
        CaseReport r = verify_theorem31_case(c, d);
        INFO("case ", r.case_id, " at c=", c, " d=", rational_str(d));
        CHECK(r.matched);
        CHECK(r.exhaustive);
    }
}

TEST_CASE("exceptional decomposition: spinor, line bundle, trivial pair") {
    auto s = exceptional_decomposition(ch_spinor_minus1());
    REQUIRE(s.ok);
    CHECK(s.coeffs == std::array<BigInt, 4>{0, -1, -4, 0});

    auto o = exceptional_decomposition(ch_line_bundle(VarietyId::X2, -1));
    REQUIRE(o.ok);
    CHECK(o.coeffs == std::array<BigInt, 4>{0, 0, -1, 0});

    auto t = exceptional_decomposition(ChernCharacter(VarietyId::X2, 2, 0, 0, 0));
    REQUIRE(t.ok);
    CHECK(t.coeffs == std::array<BigInt, 4>{0, 0, 0, 2});

    CHECK_THROWS_AS(exceptional_decomposition(ch_line_bundle(VarietyId::P3, 0)), DomainError);
}

TEST_CASE("exceptional decomposition: diagnostics carry the failing condition") {
    // ch(O(-1) + O(1)): the solution mixes signs
    ChernCharacter mixed = ch_line_bundle(VarietyId::X2, -1) + ch_line_bundle(VarietyId::X2, 1);
    auto m = exceptional_decomposition(mixed);
    CHECK_FALSE(m.ok);
    CHECK(m.failure.find("sign") != std::string::npos);

    // a class off the integral span of the collection
    ChernCharacter frac(VarietyId::X2, 1, 0, Q(1, 2), Q(1, 2));
    auto f = exceptional_decomposition(frac);
    CHECK_FALSE(f.ok);
    CHECK(f.failure.find("integer") != std::string::npos);
}

TEST_CASE("decomposition solutions add up (linearity of the solve)") {
    for (int i = 0; i < 100; ++i) {
        ChernCharacter a = rand_character(VarietyId::X2, rand_int(0, 3));
        ChernCharacter b = rand_character(VarietyId::X2, rand_int(0, 3));
        auto da = exceptional_decomposition(a);
        auto db = exceptional_decomposition(b);
        auto dsum = exceptional_decomposition(a + b);
        for (int j = 0; j < 4; ++j)
            CHECK(dsum.solution[j] == da.solution[j] + db.solution[j]);
    }
}
