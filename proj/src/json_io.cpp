#include "fanotilt/json_io.hpp"

namespace fanotilt {

Json json_rational(const Rational& q) { return rational_str(q); }

Json json_trunc(const CharTrunc& t) {
    return Json::array({json_rational(t.r), json_rational(t.c), json_rational(t.d)});
}

Json json_character(const ChernCharacter& v) {
    Json j;
    j["variety"] = variety_name(v.variety());
    j["ch"] = Json::array({v.r().str(), v.c().str(), rational_str(v.d()), rational_str(v.e())});
    ChernClasses cl = to_chern_classes(v);
    j["chern_classes"] = Json::array({cl.c1.str(), cl.c2.str(), cl.c3.str()});
    return j;
}

Json json_wall(const Wall& w) {
    Json j;
    j["kind"] = w.kind_str();
    if (w.kind == WallKind::Semicircle || w.kind == WallKind::Vertical)
        j["center"] = json_rational(w.center);
    if (w.kind == WallKind::Semicircle) j["radius_sq"] = json_rational(w.radius_sq);
    j["v"] = json_trunc(w.v);
    j["w"] = json_trunc(w.w);
    return j;
}

Wall wall_from_json(const Json& j) {
    Wall w;
    std::string kind = j.at("kind");
    if (kind == "semicircle")
        w.kind = WallKind::Semicircle;
    else if (kind == "vertical")
        w.kind = WallKind::Vertical;
    else if (kind == "degenerate-everywhere")
        w.kind = WallKind::DegenerateEverywhere;
    else if (kind == "empty")
        w.kind = WallKind::Empty;
    else
        throw ParseError("unknown wall kind '" + kind + "'");
    if (j.contains("center")) w.center = parse_rational(j.at("center"));
    if (j.contains("radius_sq")) w.radius_sq = parse_rational(j.at("radius_sq"));
    auto trunc = [](const Json& a) {
        return CharTrunc{parse_rational(a.at(0)), parse_rational(a.at(1)),
                         parse_rational(a.at(2))};
    };
    w.v = trunc(j.at("v"));
    w.w = trunc(j.at("w"));
    return w;
}

Json json_candidate_wall(const CandidateWall& cw) {
    Json j;
    j["center"] = json_rational(cw.wall.center);
    j["radius_sq"] = json_rational(cw.wall.radius_sq);
    Json wits = Json::array();
    for (const auto& w : cw.witnesses) wits.push_back(json_trunc(w));
    j["witnesses"] = wits;
    j["side"] = "either";
    j["satisfied_constraints"] = cw.satisfied_constraints;
    return j;
}

Json json_bound(const BoundResult& b) {
    Json j;
    j["variety"] = variety_name(b.variety);
    j["regime"] = regime_str(b.regime);
    j["c3_max"] = json_rational(b.c3_max);
    if (b.c3_max_raw != b.c3_max) j["c3_max_raw"] = json_rational(b.c3_max_raw);
    if (!b.case_id.empty()) {
        j["case"] = b.case_id;
        j["e_max"] = json_rational(b.e_max);
    }
    if (b.extremal_witness) j["witness"] = *b.extremal_witness;
    if (b.caveat) j["caveat"] = *b.caveat;
    return j;
}

Json json_case_report(const CaseReport& r) {
    Json j;
    j["case"] = r.case_id;
    j["c"] = r.c;
    j["d"] = json_rational(r.d);
    j["e_max"] = json_rational(r.e_max);
    j["witness_note"] = r.witness_note;
    Json expected = Json::array();
    for (const auto& t : r.expected_wall_witnesses) expected.push_back(json_trunc(t));
    j["expected_wall_witnesses"] = expected;
    Json degen = Json::array();
    for (const auto& t : r.expected_degenerate_factors) degen.push_back(json_trunc(t));
    j["expected_degenerate_factors"] = degen;
    j["expect_no_semicircular_walls"] = r.expect_no_semicircular_walls;
    j["window"] = Json::array({json_rational(r.window.lo), json_rational(r.window.hi)});
    j["rank_max"] = r.rank_max;
    j["min_radius_sq"] = json_rational(r.min_radius_sq);
    Json walls = Json::array();
    for (const auto& cw : r.walls) walls.push_back(json_candidate_wall(cw));
    j["walls"] = walls;
    j["exhaustive"] = r.exhaustive;
    j["matched"] = r.matched;
    return j;
}

Json json_series_params(const SeriesParams& p) {
    Json j;
    j["series"] = series_str(p.series);
    j["variety"] = variety_name(p.variety);
    j["k"] = p.k.str();
    j["m"] = p.m.str();
    j["n"] = p.n.str();
    return j;
}

Json json_component(const ModuliComponent& c) {
    Json j;
    j["label"] = c.label;
    j["dim"] = c.dim.str();
    if (c.fibration != FibrationKind::None) {
        j["fibration"] = fibration_str(c.fibration);
        j["base"] = base_str(c.base);
        j["base_dim"] = c.base_dim.str();
    }
    if (c.bundle_rank) j["bundle_rank"] = c.bundle_rank->str();
    j["fine"] = c.fine;
    j["smooth"] = c.smooth;
    j["rational"] = c.rational;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json json_maximal_moduli(const MaximalModuli& m) {
    Json j;
    j["variety"] = "X2";
    j["c1"] = m.c1;
    j["c2"] = m.c2.str();
    j["c3_max"] = json_rational(m.c3_max);
    j["character"] = json_character(m.character);
    j["case"] = m.case_label;
    if (m.series) j["series"] = json_series_params(*m.series);
    Json comps = Json::array();
    for (const auto& c : m.components) comps.push_back(json_component(c));
    j["components"] = comps;
    return j;
}

}  // namespace fanotilt
