#pragma once

// JSON forms of the library values. Big coefficients travel as decimal
// strings so no consumer has to parse arbitrary-precision numbers.

#include <string>
#include <vector>

#include <json.hpp>

#include "affchar/affine_orbits.hpp"
#include "affchar/character.hpp"
#include "affchar/qseries.hpp"
#include "affchar/theta_oracle.hpp"
#include "affchar/weight_lattice.hpp"

namespace affchar {

using Json = nlohmann::json;

/// Canonical coordinates, e.g. [4,3,2,1,0].
inline Json to_json(const HorizontalWeight& w) {
  const auto c = w.canonical();
  return Json(std::vector<Coord>(c.coords().begin(), c.coords().end()));
}

inline HorizontalWeight weight_from_json(const Json& j) {
  const auto coords = j.get<std::vector<Coord>>();
  if (coords.size() < 2) throw LatticeError("weight needs at least two coordinates");
  return HorizontalWeight(Rank(static_cast<int>(coords.size()) - 1), coords).canonical();
}

template <typename C>
Json to_json(const QSeries<C>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"trunc", s.trunc()}, {"coeffs", coeffs}};
}

inline IntSeries int_series_from_json(const Json& j) {
  const int trunc = j.at("trunc").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (coeffs.size() != static_cast<std::size_t>(trunc) + 1) {
    throw SeriesError("series has " + std::to_string(coeffs.size()) + " coefficients but trunc " +
                      std::to_string(trunc));
  }
  std::vector<BigInt> values;
  for (const auto& c : coeffs) values.emplace_back(c.is_string() ? c.get<std::string>() : c.dump());
  return IntSeries(trunc, std::move(values));
}

inline Json to_json(const PermutationWeight& pw) {
  const auto labels = pw.lambda_labels.values();
  return Json{{"labels", std::vector<Coord>(labels.begin(), labels.end())}, {"depth", pw.depth}, {"sign", pw.sign}};
}

inline Json to_json(const PermutationWeightSet& set) {
  Json out = Json::array();
  for (const auto& pw : set) out.push_back(to_json(pw));
  return out;
}

inline Json to_json(const AffineDominant& dom) {
  const auto labels = dom.labels().values();
  return Json{{"k", dom.level()}, {"labels", std::vector<Coord>(labels.begin(), labels.end())}};
}

inline Json to_json(const CharacterSeries& cs) {
  return Json{{"algebra", cs.dom.algebra_name()},
              {"weight", to_json(cs.dom)},
              {"M", cs.max_depth},
              {"chi", to_json(cs.chi)},
              {"numerator", to_json(cs.numerator)},
              {"denominator", to_json(cs.denominator)},
              {"anomaly", to_string(anomaly(cs.dom))}};
}

inline Json to_json(const TPolynomial& t) { return Json{{"shell", t.shell}, {"series", to_json(t.series)}}; }

}  // namespace affchar
