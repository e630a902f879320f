#pragma once

#include <json.hpp>

#include "fanotilt/bounds.hpp"
#include "fanotilt/moduli_series.hpp"
#include "fanotilt/wall_search.hpp"

namespace fanotilt {

// Stable-order JSON; every rational is encoded as "p/q" ("p" when q = 1).
using Json = nlohmann::ordered_json;

Json json_rational(const Rational& q);
Json json_trunc(const CharTrunc& t);
Json json_character(const ChernCharacter& v);
Json json_wall(const Wall& w);
Json json_candidate_wall(const CandidateWall& cw);
Json json_bound(const BoundResult& b);
Json json_case_report(const CaseReport& r);
Json json_component(const ModuliComponent& c);
Json json_maximal_moduli(const MaximalModuli& m);
Json json_series_params(const SeriesParams& p);

// Round-trip helpers for the wall schema {kind, center, radius_sq, v, w}.
Wall wall_from_json(const Json& j);

}  // namespace fanotilt
