#include "osprings/json_io.hpp"

namespace osprings {

json to_json(const QPoly& f) {
  json a = json::array();
  for (auto& c : f.coeffs()) a.push_back(c.get_str());
  return a;
}

QPoly qpoly_from_json(const json& j) {
  std::vector<mpz_class> c;
  for (auto& x : j) c.emplace_back(x.get<std::string>());
  return QPoly(std::move(c));
}

json to_json(const SchurExpansion& f) {
  json terms = json::array();
  for (auto& [la, c] : f.terms) terms.push_back({{"index", la}, {"coeffs", to_json(c)}});
  return {{"n", f.n}, {"basis", "schur"}, {"terms", terms}};
}

json to_json(const FundExpansion& f) {
  json terms = json::array();
  for (auto& [d, c] : f.terms) terms.push_back({{"index", d}, {"coeffs", to_json(c)}});
  return {{"n", f.n}, {"basis", "fundamental"}, {"terms", terms}};
}

SchurExpansion schur_from_json(const json& j) {
  if (j.at("basis") != "schur") throw std::invalid_argument("expected a schur expansion");
  SchurExpansion f;
  f.n = j.at("n").get<int>();
  for (auto& t : j.at("terms")) f.add(t.at("index").get<Partition>(), qpoly_from_json(t.at("coeffs")));
  return f;
}

FundExpansion fund_from_json(const json& j) {
  if (j.at("basis") != "fundamental") throw std::invalid_argument("expected a fundamental expansion");
  FundExpansion f;
  f.n = j.at("n").get<int>();
  for (auto& t : j.at("terms")) f.add(t.at("index").get<DescentSet>(), qpoly_from_json(t.at("coeffs")));
  return f;
}

json to_json(const GradedModuleSeries& g, bool fundamental) {
  json j = fundamental ? to_json(g.fund) : to_json(g.schur);
  j["hilbert"] = to_json(g.hilbert);
  return j;
}

json to_json(const ExtendedFilling& f) {
  json cols = json::array();
  for (int i = 0; i < f.columns(); ++i) cols.push_back({{"diagram", f.diagram[i]}, {"basement", f.basement[i]}});
  return {{"shape", f.shape}, {"columns", cols}};
}

ExtendedFilling filling_from_json(const json& j) {
  ExtendedFilling f;
  f.shape = j.at("shape").get<Composition>();
  for (auto& c : j.at("columns")) {
    f.diagram.push_back(c.at("diagram").get<std::vector<int>>());
    f.basement.push_back(c.at("basement").get<std::vector<int>>());
  }
  if (!f.valid()) throw std::invalid_argument("filling is not column increasing or does not match its shape");
  return f;
}

json osp_to_json(const OrderedSetPartition& p) { return json(p); }

OrderedSetPartition osp_from_json(const json& j) { return j.get<OrderedSetPartition>(); }

json to_json(const ExponentPolynomial& p) {
  json terms = json::array();
  for (auto& [e, c] : p.terms) terms.push_back({{"exp", e}, {"coeff", c.get_str()}});
  return {{"terms", terms}};
}

ExponentPolynomial exponent_polynomial_from_json(const json& j) {
  ExponentPolynomial p;
  for (auto& t : j.at("terms")) {
    auto e = t.at("exp").get<Exponent>();
    p.n = e.size();
    mpq_class c(t.at("coeff").get<std::string>());
    c.canonicalize();
    p.add(e, c);
  }
  return p;
}

}  // namespace osprings
