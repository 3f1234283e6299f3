// Copyright 2026 The besselpade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BESSELPADE_REPORT_HPP
#define BESSELPADE_REPORT_HPP

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "besselpade/budak.hpp"
#include "besselpade/pade.hpp"
#include "besselpade/response.hpp"
#include "besselpade/stability.hpp"
#include "besselpade/surd.hpp"
#include "json.hpp"

namespace besselpade {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

/// How a transfer function was built; enough to rebuild it exactly.
struct Provenance {
  std::string family;  // "pade", "budak" or "external"
  unsigned n = 0;
  unsigned m = 0;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::optional<Rational> gamma;
  std::optional<TransferFunction> external;
};

inline Provenance pade_provenance(unsigned n, unsigned m) {
  // The denominator is B_n(s, m-n+2, 1).
  Provenance p{"pade", n, m, Rational(m) - Rational(n) + 2, Rational(1), std::nullopt, std::nullopt};
  return p;
}

inline Provenance budak_provenance(unsigned m, unsigned n, const Rational& gamma) {
  return {"budak", n, m, Rational(2), Rational(1), gamma, std::nullopt};
}

inline Provenance external_provenance(const TransferFunction& tf) {
  return {"external", 0, 0, std::nullopt, std::nullopt, std::nullopt, tf};
}

inline TransferFunction reconstruct(const Provenance& p) {
  if (p.family == "pade") return pade_exp({p.n, p.m});
  if (p.family == "budak") {
    if (!p.gamma) throw std::invalid_argument("budak provenance without gamma");
    return budak_tf({p.m, p.n, *p.gamma});
  }
  if (p.family == "external" && p.external) return *p.external;
  throw std::invalid_argument("unknown provenance family '" + p.family + "'");
}

using FlatnessOutcome = std::variant<FlatnessReport, std::string>;

struct DesignReport {
  Provenance provenance;
  TransferFunction tf;
  StabilityReport stability;
  FlatnessOutcome delay_flatness;
  FlatnessOutcome magnitude_flatness;
  bool minimum_phase = true;
};

/// All zeros in the closed left half-plane. A constant numerator has none.
inline bool minimum_phase(const TransferFunction& tf) {
  if (tf.numerator().degree() < 1) return true;
  return routh_hurwitz(tf.numerator()).verdict != Verdict::NotHurwitz;
}

inline DesignReport design_report(const TransferFunction& tf, Provenance provenance) {
  if (tf.denominator().degree() < 1) throw std::invalid_argument("design report needs a denominator of degree >= 1");
  DesignReport r{std::move(provenance), tf, routh_hurwitz(tf.denominator()), std::string(), std::string(),
                 minimum_phase(tf)};
  try {
    r.delay_flatness = flatness(group_delay(tf), Quantity::Delay);
  } catch (const std::domain_error& e) {
    r.delay_flatness = std::string(e.what());
  }
  try {
    r.magnitude_flatness = flatness(magnitude_squared(tf), Quantity::MagnitudeSquared);
  } catch (const std::domain_error& e) {
    r.magnitude_flatness = std::string(e.what());
  }
  return r;
}

inline DesignReport design_report(const Provenance& provenance) {
  return design_report(reconstruct(provenance), provenance);
}

// --- JSON -----------------------------------------------------------------

inline Json to_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

inline Json to_json(const TransferFunction& tf) {
  Json out;
  out["num"] = to_json(tf.numerator().coefficients());
  out["den"] = to_json(tf.denominator().coefficients());
  return out;
}

inline Polynomial polynomial_from_json(const Json& list) {
  if (!list.is_array()) throw std::invalid_argument("coefficient list must be a JSON array");
  std::vector<Rational> c;
  for (const auto& item : list) {
    if (item.is_string()) {
      c.push_back(parse_rational(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      c.emplace_back(item.get<long long>());
    } else {
      throw std::invalid_argument("coefficients must be \"p/q\" strings or integers");
    }
  }
  return Polynomial(std::move(c));
}

/// {"num": [...ascending], "den": [...]}.
inline TransferFunction transfer_function_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw std::invalid_argument("transfer function JSON needs \"num\" and \"den\"");
  }
  return TransferFunction(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

inline Json to_json(const Provenance& p) {
  Json out;
  out["family"] = p.family;
  if (p.family == "external") {
    out["transfer_function"] = p.external ? to_json(*p.external) : Json();
    return out;
  }
  out["n"] = p.n;
  out["m"] = p.m;
  out["alpha"] = p.alpha ? Json(to_string(*p.alpha)) : Json();
  out["beta"] = p.beta ? Json(to_string(*p.beta)) : Json();
  out["gamma"] = p.gamma ? Json(to_string(*p.gamma)) : Json();
  return out;
}

inline Provenance provenance_from_json(const Json& j) {
  Provenance p;
  p.family = j.at("family").get<std::string>();
  if (p.family == "external") {
    p.external = transfer_function_from_json(j.at("transfer_function"));
    return p;
  }
  p.n = j.at("n").get<unsigned>();
  p.m = j.at("m").get<unsigned>();
  auto optional_rational = [&](const char* key) -> std::optional<Rational> {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return parse_rational(j.at(key).get<std::string>());
  };
  p.alpha = optional_rational("alpha");
  p.beta = optional_rational("beta");
  p.gamma = optional_rational("gamma");
  return p;
}

inline Json to_json(const StabilityReport& s) {
  Json out;
  out["verdict"] = std::string(to_string(s.verdict));
  out["routh_first_column"] = to_json(s.routh_first_column);
  out["sign_changes"] = s.sign_changes;
  out["degenerate_rows"] = s.degenerate_rows;
  return out;
}

inline Json to_json(const FlatnessOutcome& f, Quantity quantity) {
  Json out;
  out["quantity"] = std::string(to_string(quantity));
  if (const auto* r = std::get_if<FlatnessReport>(&f)) {
    out["value_at_origin"] = to_string(r->value_at_origin);
    out["order"] = r->order;
    out["leading_deviation"] = to_string(r->leading_deviation);
  } else {
    out["error"] = std::get<std::string>(f);
  }
  return out;
}

/// Keys in fixed order: report_version, provenance, transfer_function,
/// stability, delay_flatness, magnitude_flatness, minimum_phase.
inline Json to_json(const DesignReport& r) {
  Json out;
  out["report_version"] = kReportVersion;
  out["provenance"] = to_json(r.provenance);
  out["transfer_function"] = to_json(r.tf);
  out["stability"] = to_json(r.stability);
  out["delay_flatness"] = to_json(r.delay_flatness, Quantity::Delay);
  out["magnitude_flatness"] = to_json(r.magnitude_flatness, Quantity::MagnitudeSquared);
  out["minimum_phase"] = r.minimum_phase;
  return out;
}

inline std::string describe(const FlatnessOutcome& f) {
  if (const auto* r = std::get_if<FlatnessReport>(&f)) {
    return "order " + std::to_string(r->order) + ", value at origin " + to_string(r->value_at_origin) +
           ", leading deviation " + to_string(r->leading_deviation);
  }
  return "undefined (" + std::get<std::string>(f) + ")";
}

inline std::string to_text(const DesignReport& r) {
  std::string out;
  out += "transfer function: " + to_string(r.tf) + "\n";
  out += "stability: " + std::string(to_string(r.stability.verdict)) + " (right half-plane roots: " +
         std::to_string(r.stability.sign_changes) + ")\n";
  out += "delay flatness: " + describe(r.delay_flatness) + "\n";
  out += "magnitude flatness: " + describe(r.magnitude_flatness) + "\n";
  out += std::string("minimum phase: ") + (r.minimum_phase ? "yes" : "no") + "\n";
  return out;
}

// --- Order-2 gamma ----------------------------------------------------------

struct Order2Report {
  unsigned m = 0;
  unsigned n = 0;
  Order2Gamma gamma;
  Order2Certificate certificate;
};

inline Order2Report order2_report(unsigned m, unsigned n) {
  return {m, n, gamma_order2(n, m), order2_certificate(n, m)};
}

inline std::string to_text(const Order2Report& r, int precision) {
  std::string out;
  for (const QuadSurd* g : {&r.gamma.upper, &r.gamma.lower}) {
    out += to_string(*g) + " ≈ " + to_decimal(*g, precision) + "\n";
  }
  out += "q(gamma) = " + to_string(r.gamma.q, "gamma") + "\n";
  return out;
}

inline Json to_json(const Order2Report& r, int precision) {
  Json out;
  out["m"] = r.m;
  out["n"] = r.n;
  Json solutions = Json::array();
  for (const QuadSurd* g : {&r.gamma.upper, &r.gamma.lower}) {
    Json s;
    s["exact"] = to_string(*g);
    s["decimal"] = to_decimal(*g, precision);
    solutions.push_back(s);
  }
  out["solutions"] = solutions;
  out["q"] = to_json(r.gamma.q.coefficients());
  out["u1_mismatch_divisible_by_q"] = r.certificate.u1_divisible;
  out["u2_mismatch_divisible_by_q"] = r.certificate.u2_divisible;
  return out;
}

// --- Comparison -------------------------------------------------------------

struct CompareRow {
  std::string label;
  std::optional<QuadSurd> gamma;
  std::size_t delay_order = 0;
  std::size_t magnitude_order = 0;
  std::optional<bool> minimum_phase;  // empty when there are no zeros
  Verdict stability = Verdict::NotHurwitz;
};

inline std::string_view stability_label(Verdict v) {
  switch (v) {
    case Verdict::StrictHurwitz:
      return "Stable";
    case Verdict::NotHurwitz:
      return "Unstable";
    case Verdict::Marginal:
      return "Marginal";
  }
  return "?";
}

/// Pade (n, m), Budak (m, n) at both order-2 gammas, and the all-pole
/// Bessel function of degree n. The Budak orders come from exact evaluation
/// in Q(sqrt d) of the gamma-polynomial coefficients.
inline std::vector<CompareRow> compare(unsigned n, unsigned m) {
  if (m < 1 || m >= n) throw std::invalid_argument("compare: requires 1 <= m < n");
  std::vector<CompareRow> rows;

  const TransferFunction pade = pade_exp({n, m});
  rows.push_back({"pade(" + std::to_string(n) + "," + std::to_string(m) + ")", std::nullopt,
                  flatness(group_delay(pade), Quantity::Delay).order,
                  flatness(magnitude_squared(pade), Quantity::MagnitudeSquared).order, minimum_phase(pade),
                  routh_hurwitz(pade.denominator()).verdict});

  const Order2Gamma order2 = gamma_order2(n, m);
  const Order2Certificate certificate = order2_certificate(n, m);
  if (!certificate.u1_divisible) throw std::logic_error("compare: order-2 certificate failed");
  // B_n(2 gamma s, 2, 1) for gamma > 0 shares its verdict with B_n(s, 2, 1).
  const Verdict budak_stability = routh_hurwitz(gbp({n, 2, 1})).verdict;
  for (const QuadSurd* g : {&order2.upper, &order2.lower}) {
    const std::size_t magnitude = budak_magnitude_flatness_at(m, n, *g).order;
    rows.push_back({"budak(" + std::to_string(m) + "," + std::to_string(n) + ")", *g,
                    budak_delay_flatness_at(m, n, *g).order, magnitude,
                    // zeros of B_m(2 (gamma - 1) s) sit in the left half-plane iff gamma > 1
                    QuadSurd(Rational(1)) < *g, budak_stability});
  }

  const Polynomial bessel = classical_bessel(n);
  const TransferFunction all_pole(Polynomial{bessel(0)}, bessel);
  rows.push_back({"bessel(" + std::to_string(n) + ")", std::nullopt,
                  flatness(group_delay(all_pole), Quantity::Delay).order,
                  flatness(magnitude_squared(all_pole), Quantity::MagnitudeSquared).order, std::nullopt,
                  routh_hurwitz(bessel).verdict});
  return rows;
}

inline std::string to_text(const std::vector<CompareRow>& rows, int precision) {
  std::string out = "family        gamma            delay  magnitude  min-phase  stability\n";
  auto pad = [](std::string s, std::size_t w) {
    // Width counts code points so the em dash lines up.
    std::size_t visible = 0;
    for (unsigned char c : s) visible += (c & 0xC0) != 0x80;
    if (visible < w) s.append(w - visible, ' ');
    return s;
  };
  for (const auto& r : rows) {
    out += pad(r.label, 14);
    out += pad(r.gamma ? to_decimal(*r.gamma, precision) : "—", 17);
    out += pad(std::to_string(r.delay_order), 7);
    out += pad(std::to_string(r.magnitude_order), 11);
    out += pad(r.minimum_phase ? (*r.minimum_phase ? "yes" : "no") : "—", 11);
    out += std::string(stability_label(r.stability)) + "\n";
  }
  return out;
}

inline Json to_json(const std::vector<CompareRow>& rows, int precision) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["family"] = r.label;
    if (r.gamma) {
      row["gamma"] = to_string(*r.gamma);
      row["gamma_decimal"] = to_decimal(*r.gamma, precision);
    } else {
      row["gamma"] = nullptr;
      row["gamma_decimal"] = nullptr;
    }
    row["delay_order"] = r.delay_order;
    row["magnitude_order"] = r.magnitude_order;
    row["minimum_phase"] = r.minimum_phase ? Json(*r.minimum_phase) : Json();
    row["stability"] = std::string(stability_label(r.stability));
    out.push_back(row);
  }
  return out;
}

// --- Sweep ------------------------------------------------------------------

inline std::string format_double(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

/// CSV of |H|, unwrapped phase and group delay on `points` equally spaced
/// frequencies in [0, omega_max]. Rows next to a pole get a trailing
/// "near_pole" field.
inline std::string sweep_csv(const TransferFunction& tf, double omega_max, std::size_t points) {
  if (!(omega_max > 0) || !std::isfinite(omega_max)) throw std::invalid_argument("sweep: omega_max must be > 0");
  if (points < 2) throw std::invalid_argument("sweep: need at least 2 points");
  std::vector<double> omegas(points);
  for (std::size_t i = 0; i < points; ++i) {
    omegas[i] = omega_max * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  const auto h = sample(tf, omegas);
  const auto mag = sample(magnitude_squared(tf), omegas);
  std::optional<std::vector<Sample<double>>> delay;
  try {
    delay = sample(group_delay(tf), omegas);
  } catch (const std::domain_error&) {
    // Zero or pole at the origin: delay column is left as nan.
  }

  std::string out = "omega,magnitude,phase_rad,group_delay\n";
  double previous = 0.0;
  double offset = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    double phase = std::arg(h[i].value);
    if (i > 0) {
      const double raw = phase + offset;
      if (raw - previous > std::numbers::pi) offset -= 2 * std::numbers::pi;
      if (raw - previous < -std::numbers::pi) offset += 2 * std::numbers::pi;
    }
    phase += offset;
    previous = phase;
    const double td = delay ? (*delay)[i].value : std::nan("");
    out += format_double(omegas[i]) + "," + format_double(std::sqrt(mag[i].value)) + "," + format_double(phase) +
           "," + format_double(td);
    if (h[i].near_pole || mag[i].near_pole) out += ",near_pole";
    out += "\n";
  }
  return out;
}

}  // namespace besselpade

#endif  // BESSELPADE_REPORT_HPP
