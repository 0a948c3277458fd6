#include "mc4p/json_io.hpp"

namespace mc4p {

std::string rat_text(const Rat& r) { return r.get_str(); }

ojson cyc_to_json(const CycNum& v) {
  ojson j;
  j["order"] = v.order();
  ojson coeffs = ojson::array();
  for (const Rat& c : v.coeffs()) coeffs.push_back(rat_text(c));
  j["coeffs"] = coeffs;
  return j;
}

CycNum cyc_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw ParameterError("cyclotomic value needs order and coeffs fields");
  const long order = j.at("order").get<long>();
  CycNum v(Rat(0));
  long k = 0;
  for (const auto& c : j.at("coeffs")) {
    const Rat r = rat_from_string(c.get<std::string>());
    if (r != 0) v = v + CycNum(r) * CycNum::zeta_pow(order, k);
    ++k;
  }
  return v.lifted_to(order);
}

ojson mat_to_json(const CMat& m) {
  ojson j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ojson entries = ojson::array();
  for (long i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(cyc_to_json(m.at(i, c)));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

CMat mat_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw ParameterError("matrix needs an entries field");
  std::vector<std::vector<CycNum>> rows;
  for (const auto& row : j.at("entries")) {
    rows.emplace_back();
    for (const auto& cell : row) rows.back().push_back(cyc_from_json(cell));
  }
  if (rows.empty()) throw ParameterError("matrix has no rows");
  return CMat::from_rows(rows);
}

ojson tuple_to_json(const MonodromyTuple& t) {
  ojson j;
  j["M0"] = mat_to_json(t.M0());
  j["M1"] = mat_to_json(t.M1());
  j["Mlambda"] = mat_to_json(t.Mlambda());
  return j;
}

MonodromyTuple tuple_from_json(const ojson& j) {
  if (!j.is_object() || !j.contains("M0") || !j.contains("M1") || !j.contains("Mlambda"))
    throw ParameterError("tuple needs M0, M1 and Mlambda fields");
  return make_tuple(mat_from_json(j.at("M0")), mat_from_json(j.at("M1")),
                    mat_from_json(j.at("Mlambda")));
}

ojson coords_to_json(const TraceCoordinates& tc) {
  ojson j;
  j["a0"] = cyc_to_json(tc.a0.reduced());
  j["a1"] = cyc_to_json(tc.a1.reduced());
  j["alambda"] = cyc_to_json(tc.alambda.reduced());
  j["ainf"] = cyc_to_json(tc.ainf.reduced());
  j["x"] = cyc_to_json(tc.x.reduced());
  j["y"] = cyc_to_json(tc.y.reduced());
  j["z"] = cyc_to_json(tc.z.reduced());
  return j;
}

ojson params_to_json(const CayleyParams& p) {
  ojson j;
  j["alpha"] = rat_text(p.alpha);
  j["beta"] = rat_text(p.beta);
  return j;
}

ojson trace_field_to_json(const TraceField& f) {
  ojson j;
  j["degree"] = f.degree;
  j["conductor"] = f.conductor;
  return j;
}

ojson orbit_report_to_json(const OrbitReport& r) {
  ojson j;
  j["seed"] = coords_to_json(r.seed);
  j["exceeded"] = r.exceeded;
  j["size"] = r.size;
  ojson pts = ojson::array();
  for (const auto& p : r.points) {
    ojson q;
    q["x"] = cyc_to_json(p.x.reduced());
    q["y"] = cyc_to_json(p.y.reduced());
    q["z"] = cyc_to_json(p.z.reduced());
    q["word"] = p.word;
    pts.push_back(q);
  }
  j["points"] = pts;
  return j;
}

}  // namespace mc4p
