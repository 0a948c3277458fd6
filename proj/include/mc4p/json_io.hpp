#pragma once
// JSON renderings of the library's value types.  Every field element is a
// string so that round trips through text stay exact; object key order is
// fixed, which keeps repeated runs byte-identical.

#include <json.hpp>
#include <string>

#include "mc4p/cayley.hpp"
#include "mc4p/elliptic.hpp"
#include "mc4p/mcg.hpp"

namespace mc4p {

using ojson = nlohmann::ordered_json;

std::string rat_text(const Rat& r);

ojson cyc_to_json(const CycNum& v);
CycNum cyc_from_json(const ojson& j);

ojson mat_to_json(const CMat& m);
CMat mat_from_json(const ojson& j);

ojson tuple_to_json(const MonodromyTuple& t);
MonodromyTuple tuple_from_json(const ojson& j);

ojson coords_to_json(const TraceCoordinates& tc);
ojson params_to_json(const CayleyParams& p);
ojson trace_field_to_json(const TraceField& f);
ojson orbit_report_to_json(const OrbitReport& r);

inline std::string field_text(const Rat& v) { return rat_text(v); }
inline std::string field_text(const Fq& v) { return v.str(); }

// ascending coefficient strings, constant term first
template <class F>
ojson poly_to_json(const Poly<F>& p) {
  ojson coeffs = ojson::array();
  for (long i = 0; i <= p.degree(); ++i) coeffs.push_back(field_text(p.coeff(i)));
  return coeffs;
}

template <class F>
ojson rational_map_to_json(const RationalMap<F>& g) {
  ojson j;
  j["num"] = poly_to_json(g.num);
  j["den"] = poly_to_json(g.den);
  j["degree"] = g.degree();
  return j;
}

}  // namespace mc4p
