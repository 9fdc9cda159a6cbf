#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gpoly/asymptotics.hpp"
#include "gpoly/gpoly.hpp"
#include "gpoly/recurrence.hpp"
#include "gpoly/rootline.hpp"

namespace gpoly {

using Json = nlohmann::json;

/// {"num": "...", "den": "..."}; strings so consumers need no bigints.
Json rational_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// Coefficients lowest degree first, each as "a" or "a/b".
Json coefficients_json(const UniPoly& p);
UniPoly poly_from_json(const Json& j);

Json to_json(const GPolyRecord& rec);
Json to_json(const IsolatingInterval& iv);
Json to_json(const RealRoot& root);
Json to_json(const VerificationReport& rep);
Json to_json(const InterlacingVerdict& v);
Json to_json(const FamilyReport& rep);
Json to_json(const LiuWangInstance& inst, const LiuWangVerdict& v);
Json to_json(const StatsRecord& rec);
Json to_json(const LemmaReport& rep);
Json to_json(const ProbeRow& row);
Json to_json(const ScheduleProbe& probe);

/// Header n,d,mu_num,mu_den,sigma2_num,sigma2_den,r_num,r_den,clt_distance,llt_distance.
std::string stats_csv(const std::vector<StatsRecord>& rows);
/// Header n,d,sigma2_num,sigma2_den,clt_distance,llt_distance.
std::string probe_csv(const ScheduleProbe& probe);

/// Shortest decimal that reads back to the same double; "nan" for NaN.
std::string format_double(double x);

}  // namespace gpoly
