#include "gkz/jsonio.hpp"

#include <cmath>

namespace gkz {

json complex_json(cplx v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return cplx(j[0].get<double>(), j[1].get<double>());
  fail(errc::input_error, "expected a number or [re, im] pair");
}

json rational_json(const Rat& r) { return rational_string(r); }

Rat rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float()) {
    double v = j.get<double>();
    if (v == std::round(v)) return Rat((long long)v);
    fail(errc::input_error, "floating values are not exact rationals; use \"p/q\"");
  }
  fail(errc::input_error, "expected an exact rational (\"p/q\" or integer)");
}

RatVec ratvec_from_json(const json& j) {
  if (!j.is_array()) fail(errc::input_error, "expected an array of rationals");
  RatVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json ratvec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

json intmatrix_json(const IntMatrix& m) {
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) data.push_back((long long)to_double(m.at(i, j)));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

IntMatrix intmatrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
    fail(errc::input_error, "matrix must be {rows, cols, data}");
  std::size_t r = j["rows"].get<std::size_t>(), c = j["cols"].get<std::size_t>();
  const auto& d = j["data"];
  if (!d.is_array() || d.size() != r * c)
    fail(errc::input_error, "matrix data must have rows*cols entries");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) {
      const auto& x = d[i * c + k];
      if (x.is_number_integer())
        m.at(i, k) = x.get<long long>();
      else if (x.is_string())
        m.at(i, k) = Int(x.get<std::string>());
      else
        fail(errc::input_error, "matrix entries must be integers");
    }
  return m;
}

Parameter parameter_from_json(const json& j) {
  if (!j.is_array()) fail(errc::input_error, "parameter must be an array");
  bool exact = true;
  for (const auto& x : j)
    if (!(x.is_string() || x.is_number_integer())) exact = false;
  if (exact) {
    RatVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return Parameter::from_rationals(v);
  }
  std::vector<cplx> v;
  for (const auto& x : j) v.push_back(complex_from_json(x));
  return Parameter::from_complex(v);
}

json parameter_json(const Parameter& p) {
  json a = json::array();
  if (p.is_exact) {
    for (const auto& x : p.exact) a.push_back(rational_json(x));
  } else {
    for (const auto& x : p.value) a.push_back(complex_json(x));
  }
  return a;
}

json simplex_json(const SimplexData& sd) {
  json s;
  s["sigma"] = sd.sigma;
  s["det"] = (long long)to_double(sd.det);
  json sv = json::array();
  for (const auto& x : sd.s) sv.push_back(rational_json(x));
  s["s"] = sv;
  json f = json::array();
  for (const auto& x : sd.group.invariant_factors()) f.push_back((long long)to_double(x));
  s["invariant_factors"] = f;
  return s;
}

json triangulation_json(const TriangulationData& T) {
  json t;
  t["omega"] = ratvec_json(T.omega);
  json sims = json::array();
  for (const auto& sd : T.simplices) sims.push_back(simplex_json(sd));
  t["simplices"] = sims;
  t["volume"] = (long long)to_double(T.volume);
  json rows = json::array();
  for (const auto& row : T.cone_rows) rows.push_back(ratvec_json(row));
  t["cone_rows"] = rows;
  return t;
}

json series_value_json(const std::vector<long>& sigma, const IntVec& k,
                       const std::vector<cplx>& exponent, const SeriesValue& v) {
  json s;
  s["sigma"] = sigma;
  json kv = json::array();
  for (const auto& x : k) kv.push_back((long long)to_double(x));
  s["k"] = kv;
  json ev = json::array();
  for (const auto& x : exponent) ev.push_back(complex_json(x));
  s["exponent"] = ev;
  s["value"] = complex_json(v.value);
  s["order"] = v.truncation_order;
  if (std::isinf(v.tail_bound))
    s["tail_bound"] = "unbounded";
  else
    s["tail_bound"] = v.tail_bound;
  s["terms_summed"] = v.terms_summed;
  return s;
}

json tmatrix_json(const TransformMatrix& T) {
  json t;
  t["kind"] = transform_kind_name(T.kind);
  t["sigma"] = T.sigma;
  t["r"] = T.r;
  t["prefactor"] = complex_json(T.prefactor);
  json ld = json::array(), rd = json::array();
  for (const auto& x : T.left_diag) ld.push_back(complex_json(x));
  for (const auto& x : T.right_diag) rd.push_back(complex_json(x));
  t["left_diag"] = ld;
  t["right_diag"] = rd;
  json ch = json::array(), en = json::array();
  for (const auto& row : T.character) {
    json r = json::array();
    for (const auto& x : row) r.push_back(complex_json(x));
    ch.push_back(r);
  }
  for (const auto& row : T.entries) {
    json r = json::array();
    for (const auto& x : row) r.push_back(complex_json(x));
    en.push_back(r);
  }
  t["character"] = ch;
  t["entries"] = en;
  t["det"] = complex_json(T.det);
  t["cond"] = T.cond;
  if (!T.sigma0.empty()) t["sigma0"] = T.sigma0;
  json reps = json::array(), duals = json::array();
  for (const auto& k : T.reps) {
    json kv = json::array();
    for (const auto& x : k) kv.push_back((long long)to_double(x));
    reps.push_back(kv);
  }
  for (const auto& k : T.dual_reps) {
    json kv = json::array();
    for (const auto& x : k) kv.push_back((long long)to_double(x));
    duals.push_back(kv);
  }
  t["reps"] = reps;
  t["dual_reps"] = duals;
  json checks = json::array();
  for (const auto& c : T.checks)
    checks.push_back(
        json{{"name", c.name}, {"status", c.pass ? "Pass" : "Fail"}, {"detail", c.detail}});
  t["hypothesis_checks"] = checks;
  return t;
}

}  // namespace gkz
