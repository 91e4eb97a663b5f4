#ifndef SBL_JSON_IO_HPP
#define SBL_JSON_IO_HPP

#include <json.hpp>

#include "sbl/blob.hpp"
#include "sbl/brauer.hpp"
#include "sbl/cellrep.hpp"
#include "sbl/report.hpp"

namespace sbl {

using nlohmann::json;

inline json rational_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return json(v.convert_to<long long>());
  return json(v.str());
}

inline json to_json(const Poly& p) {
  json arr = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["e_delta"] = e.first;
    term["e_deltap"] = e.second;
    term["num"] = rational_json(numerator(c));
    term["den"] = rational_json(denominator(c));
    arr.push_back(std::move(term));
  }
  return arr;
}

inline json to_json(const DiagramSum& s) {
  json out;
  out["context"] = {s.n_top(), s.n_bottom()};
  json terms = json::array();
  for (const auto& [p, c] : s.terms()) {
    json t;
    t["diagram"] = p.to_literal();
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

inline json to_json(const BlobSum& s) {
  json out;
  out["context"] = {s.n_top(), s.n_bottom()};
  json terms = json::array();
  for (const auto& [b, c] : s.terms()) {
    json t;
    t["diagram"] = b.to_literal();
    t["coeff"] = to_json(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

inline json to_json(const VerifyReport& r) {
  json out;
  out["name"] = r.name;
  out["checked"] = r.checked;
  out["failures"] = r.failures;
  json sizes = json::object();
  for (const auto& [k, v] : r.sizes) sizes[k] = v;
  out["sizes"] = std::move(sizes);
  out["pass"] = r.pass();
  return out;
}

inline json to_json(const RelationReport& r) {
  json out;
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}});
  out["checks"] = std::move(checks);
  out["all_pass"] = r.all_pass();
  return out;
}

inline json to_json(const GramMatrix& g) {
  json out;
  out["n"] = g.module.n;
  out["m"] = g.module.m;
  out["sign"] = sign_suffix(g.module.sign);
  json basis = json::array();
  for (const auto& h : g.module.basis) basis.push_back(h.to_literal());
  out["basis"] = std::move(basis);
  json rows = json::array();
  for (size_t i = 0; i < g.entries.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < g.entries.cols(); ++j)
      row.push_back(g.entries(i, j).to_string());
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

}  // namespace sbl

#endif
