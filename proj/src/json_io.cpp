#include "seifert/json_io.hpp"

namespace seifert {

ordered_json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

ordered_json to_json(const SeifertInvariants& inv, int sign) {
  ordered_json j;
  j["e"] = int_json(inv.e);
  ordered_json pairs = ordered_json::array();
  for (const auto& [a, b] : inv.pairs)
    pairs.push_back(ordered_json::array({int_json(a), int_json(b)}));
  j["pairs"] = std::move(pairs);
  j["sign"] = sign;
  return j;
}

ordered_json to_json(const OrientedSeifert& y) { return to_json(y.inv, y.sign); }

ordered_json to_json(const PlumbingGraph& g) {
  ordered_json j;
  j["central_weight"] = int_json(g.central_weight);
  ordered_json arms = ordered_json::array();
  for (const auto& arm : g.arms) {
    ordered_json a = ordered_json::array();
    for (const Int& w : arm) a.push_back(int_json(w));
    arms.push_back(std::move(a));
  }
  j["arms"] = std::move(arms);
  j["rank"] = g.rank();
  return j;
}

ordered_json lattice_json(const GramLattice& L) {
  ordered_json j;
  j["rank"] = L.rank();
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < L.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < L.rank(); ++k) row.push_back(int_json(L.at(i, k)));
    rows.push_back(std::move(row));
  }
  j["gram"] = std::move(rows);
  return j;
}

ordered_json to_json(const IntegerPolynomial& p) {
  ordered_json j;
  ordered_json coeffs = ordered_json::array();
  for (const Int& c : p.coeffs()) coeffs.push_back(int_json(c));
  j["coeffs"] = std::move(coeffs);
  j["degree"] = p.degree();
  j["text"] = p.str();
  return j;
}

ordered_json to_json(const FoxMilnorResult& r) {
  ordered_json j;
  j["slice_obstructed"] = r.verdict == SliceVerdict::Obstructed;
  j["reason"] = r.reason;
  return j;
}

ordered_json to_json(const WitnessReport& w) {
  ordered_json j;
  j["m"] = w.m;
  j["central"] = int_json(w.central);
  j["result"] = to_json(w.result);
  j["justification"] = w.justification;
  j["externally_justified"] = w.externally_justified;
  return j;
}

ordered_json to_json(const DSurvey& s) {
  ordered_json j;
  ordered_json values = ordered_json::array();
  for (const auto& [m, d] : s.values)
    values.push_back(ordered_json::array({m, int_json(d)}));
  j["values"] = std::move(values);
  ordered_json distinct = ordered_json::array();
  for (const Int& d : s.distinct) distinct.push_back(int_json(d));
  j["distinct"] = std::move(distinct);
  j["cardinality"] = s.distinct.size();
  return j;
}

}  // namespace seifert
