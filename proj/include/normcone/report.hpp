#pragma once

// Analysis reports: one flat value per analyzed instance (semigroup ring,
// Zariski-type hypersurface, or raw filtration table), with an invariants
// block, tri-state verdicts carrying their criterion trail, and the
// hypothesis flags used. Serializes to the versioned JSON schema
// "normcone.report.v1" and back, losslessly.

#include "normcone/hilbert.hpp"
#include "normcone/hvector.hpp"
#include "normcone/integers.hpp"
#include "normcone/verdict.hpp"

#include "json.hpp"

#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace normcone {

inline constexpr const char* kReportSchema = "normcone.report.v1";

enum class RingClass {
  reduced_hypersurface,
  nonreduced_hypersurface,
  complete_intersection,
  not_gorenstein,
};

inline const char* ring_class_name(RingClass c) {
  switch (c) {
    case RingClass::reduced_hypersurface:    return "reduced_hypersurface";
    case RingClass::nonreduced_hypersurface: return "nonreduced_hypersurface";
    case RingClass::complete_intersection:   return "complete_intersection";
    case RingClass::not_gorenstein:          return "not_gorenstein";
  }
  return "?";
}

inline RingClass ring_class_from_name(const std::string& s) {
  if (s == "reduced_hypersurface") return RingClass::reduced_hypersurface;
  if (s == "nonreduced_hypersurface") return RingClass::nonreduced_hypersurface;
  if (s == "complete_intersection") return RingClass::complete_intersection;
  if (s == "not_gorenstein") return RingClass::not_gorenstein;
  fail(errc::parse, "unknown ring class '" + s + "'");
}

namespace detail {

inline nlohmann::json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();  // decimal string beyond 64 bits
}

inline Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  fail(errc::parse, "expected integer or decimal string");
}

inline nlohmann::json int_vec_to_json(const std::vector<Int>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

inline std::vector<Int> int_vec_from_json(const nlohmann::json& j) {
  std::vector<Int> v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

}  // namespace detail

inline nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json reasons = nlohmann::json::array();
  for (const Reason& r : v.reasons)
    reasons.push_back({{"criterion", r.criterion}, {"detail", r.detail}});
  return {{"status", status_name(v.status)}, {"reasons", reasons}};
}

inline Verdict verdict_from_json(const nlohmann::json& j) {
  Verdict v;
  const std::string s = j.at("status").get<std::string>();
  if (s == "holds") v.status = Status::holds;
  else if (s == "fails") v.status = Status::fails;
  else if (s == "inapplicable") v.status = Status::inapplicable;
  else fail(errc::parse, "unknown verdict status '" + s + "'");
  for (const auto& r : j.at("reasons"))
    v.reasons.push_back(Reason{r.at("criterion").get<std::string>(),
                               r.at("detail").get<std::string>()});
  return v;
}

struct Report {
  // --- instance descriptor ---
  std::string family;             // "semigroup" | "hypersurface" | "filtration"
  std::vector<i64> generators;    // semigroup
  i64 a = 0, b = 0, m = 0;        // hypersurface parameters
  i64 gcd_ab = 0, a_prime = 0, b_prime = 0;
  std::optional<std::string> char_condition;  // hypersurface metadata, never checked
  std::string source;             // filtration input description

  // --- invariants ---
  i64 dim = 1;
  Int e0, e1, lambda, bound;
  std::optional<i64> rbar, nr;
  std::optional<bool> nr_maximal;
  std::optional<HVector> h;
  std::optional<HilbertCoefficients> coefficients;
  bool postulation_known = false;      // whether a fit was performed
  std::optional<i64> postulation;      // disengaged while known: value <= -1
  std::optional<i64> frobenius;        // semigroup
  std::optional<bool> symmetric;       // semigroup
  std::vector<i64> ladder;             // hypersurface: n_1..n_{a-1}
  std::vector<i64> presentation_rbar;  // hypersurface: exponents t_0..t_{a-1} at n = rbar
  std::vector<Int> profile;            // H(0..N) the analysis used

  // --- verdicts ---
  Verdict gorenstein;
  std::optional<RingClass> ring_class;
  std::optional<bool> max_embedding_dimension;

  // --- provenance ---
  std::vector<std::string> criteria_applied;
  ProfileAssumptions flags;

  nlohmann::json to_json() const {
    using nlohmann::json;
    json instance{{"family", family}};
    if (family == "semigroup") {
      instance["generators"] = generators;
    } else if (family == "hypersurface") {
      instance["a"] = a;
      instance["b"] = b;
      instance["m"] = m;
      instance["gcd"] = gcd_ab;
      instance["a_prime"] = a_prime;
      instance["b_prime"] = b_prime;
      if (char_condition) instance["char_condition"] = *char_condition;
    } else {
      instance["source"] = source;
    }

    json inv{{"dim", dim},
             {"e0", detail::int_to_json(e0)},
             {"e1", detail::int_to_json(e1)},
             {"lambda", detail::int_to_json(lambda)},
             {"bound", detail::int_to_json(bound)}};
    if (rbar) inv["rbar"] = *rbar;
    if (nr) inv["nr"] = *nr;
    if (nr_maximal) inv["nr_maximal"] = *nr_maximal;
    if (h) inv["h_vector"] = detail::int_vec_to_json(h->coeffs());
    if (coefficients) inv["coefficients"] = detail::int_vec_to_json(coefficients->e);
    if (postulation_known) {
      if (postulation) inv["postulation"] = *postulation;
      else inv["postulation"] = nullptr;  // every supplied point fits: value <= -1
    }
    if (frobenius) inv["frobenius"] = *frobenius;
    if (symmetric) inv["symmetric"] = *symmetric;
    if (!ladder.empty()) inv["ladder"] = ladder;
    if (!presentation_rbar.empty()) inv["presentation_rbar"] = presentation_rbar;
    if (!profile.empty()) inv["profile"] = detail::int_vec_to_json(profile);

    json verdicts{{"gorenstein", verdict_to_json(gorenstein)}};
    if (ring_class) verdicts["ring_class"] = ring_class_name(*ring_class);
    if (max_embedding_dimension) verdicts["max_embedding_dimension"] = *max_embedding_dimension;

    json provenance{{"criteria_applied", criteria_applied},
                    {"flags",
                     {{"ambient_gorenstein", flags.ambient_gorenstein},
                      {"assoc_graded_cm", flags.assoc_graded_cm},
                      {"depth_at_least_dim_minus_1", flags.depth_at_least_dim_minus_1}}}};

    return json{{"schema", kReportSchema},
                {"instance", instance},
                {"invariants", inv},
                {"verdicts", verdicts},
                {"provenance", provenance}};
  }

  static Report from_json(const nlohmann::json& j) {
    require(j.at("schema").get<std::string>() == kReportSchema, errc::parse,
            "unsupported report schema");
    Report r;
    const auto& instance = j.at("instance");
    r.family = instance.at("family").get<std::string>();
    if (r.family == "semigroup") {
      r.generators = instance.at("generators").get<std::vector<i64>>();
    } else if (r.family == "hypersurface") {
      r.a = instance.at("a").get<i64>();
      r.b = instance.at("b").get<i64>();
      r.m = instance.at("m").get<i64>();
      r.gcd_ab = instance.at("gcd").get<i64>();
      r.a_prime = instance.at("a_prime").get<i64>();
      r.b_prime = instance.at("b_prime").get<i64>();
      if (instance.contains("char_condition"))
        r.char_condition = instance.at("char_condition").get<std::string>();
    } else {
      r.source = instance.value("source", std::string{});
    }

    const auto& inv = j.at("invariants");
    r.dim = inv.at("dim").get<i64>();
    r.e0 = detail::int_from_json(inv.at("e0"));
    r.e1 = detail::int_from_json(inv.at("e1"));
    r.lambda = detail::int_from_json(inv.at("lambda"));
    r.bound = detail::int_from_json(inv.at("bound"));
    if (inv.contains("rbar")) r.rbar = inv.at("rbar").get<i64>();
    if (inv.contains("nr")) r.nr = inv.at("nr").get<i64>();
    if (inv.contains("nr_maximal")) r.nr_maximal = inv.at("nr_maximal").get<bool>();
    if (inv.contains("h_vector"))
      r.h = HVector(detail::int_vec_from_json(inv.at("h_vector")), r.dim);
    if (inv.contains("coefficients"))
      r.coefficients = HilbertCoefficients(detail::int_vec_from_json(inv.at("coefficients")));
    if (inv.contains("postulation")) {
      r.postulation_known = true;
      if (!inv.at("postulation").is_null()) r.postulation = inv.at("postulation").get<i64>();
    }
    if (inv.contains("frobenius")) r.frobenius = inv.at("frobenius").get<i64>();
    if (inv.contains("symmetric")) r.symmetric = inv.at("symmetric").get<bool>();
    if (inv.contains("ladder")) r.ladder = inv.at("ladder").get<std::vector<i64>>();
    if (inv.contains("presentation_rbar"))
      r.presentation_rbar = inv.at("presentation_rbar").get<std::vector<i64>>();
    if (inv.contains("profile")) r.profile = detail::int_vec_from_json(inv.at("profile"));

    const auto& verdicts = j.at("verdicts");
    r.gorenstein = verdict_from_json(verdicts.at("gorenstein"));
    if (verdicts.contains("ring_class"))
      r.ring_class = ring_class_from_name(verdicts.at("ring_class").get<std::string>());
    if (verdicts.contains("max_embedding_dimension"))
      r.max_embedding_dimension = verdicts.at("max_embedding_dimension").get<bool>();

    const auto& provenance = j.at("provenance");
    r.criteria_applied = provenance.at("criteria_applied").get<std::vector<std::string>>();
    const auto& fl = provenance.at("flags");
    r.flags.ambient_gorenstein = fl.at("ambient_gorenstein").get<bool>();
    r.flags.assoc_graded_cm = fl.at("assoc_graded_cm").get<bool>();
    r.flags.depth_at_least_dim_minus_1 = fl.at("depth_at_least_dim_minus_1").get<bool>();
    return r;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "instance: " << family;
    if (family == "semigroup") {
      os << " <";
      for (std::size_t i = 0; i < generators.size(); ++i)
        os << (i ? "," : "") << generators[i];
      os << ">";
    } else if (family == "hypersurface") {
      os << " (a=" << a << ", b=" << b << ", m=" << m << ", gcd=" << gcd_ab << ")";
    } else if (!source.empty()) {
      os << " " << source;
    }
    os << "\n";
    if (frobenius) os << "frobenius: " << *frobenius << "\n";
    if (symmetric) os << "symmetric: " << (*symmetric ? "yes" : "no") << "\n";
    if (!ladder.empty()) {
      os << "ladder: ";
      for (std::size_t i = 0; i < ladder.size(); ++i) os << (i ? "," : "") << ladder[i];
      os << "\n";
    }
    os << "dim: " << dim << "\n";
    os << "e0: " << e0 << "\n";
    os << "e1: " << e1 << "\n";
    os << "lambda: " << lambda << "\n";
    if (rbar) os << "rbar: " << *rbar << "\n";
    if (nr) os << "nr: " << *nr << "\n";
    os << "bound: " << bound << "\n";
    if (nr_maximal) os << "nr_maximal: " << (*nr_maximal ? "yes" : "no") << "\n";
    if (h) os << "h_vector: " << h->str() << "\n";
    if (coefficients) os << "coefficients: " << coefficients->str() << "\n";
    if (postulation_known) {
      os << "postulation: ";
      if (postulation) os << *postulation;
      else os << "<= -1";
      os << "\n";
    }
    if (!presentation_rbar.empty()) {
      os << "presentation at rbar: (";
      for (std::size_t i = 0; i < presentation_rbar.size(); ++i)
        os << (i ? "," : "") << presentation_rbar[i];
      os << ")\n";
    }
    os << "gorenstein: " << status_name(gorenstein.status) << "\n";
    for (const Reason& reason : gorenstein.reasons)
      os << "  - " << reason.criterion << ": " << reason.detail << "\n";
    if (ring_class) os << "ring_class: " << ring_class_name(*ring_class) << "\n";
    if (max_embedding_dimension)
      os << "max_embedding_dimension: " << (*max_embedding_dimension ? "yes" : "no") << "\n";
    os << "flags: ambient_gorenstein=" << flags.ambient_gorenstein
       << " assoc_graded_cm=" << flags.assoc_graded_cm
       << " depth_at_least_dim_minus_1=" << flags.depth_at_least_dim_minus_1 << "\n";
    return os.str();
  }
};

// Generic analysis of a raw length table: coefficient fit, exact postulation
// number (scanning below the table when every supplied point fits, since
// H(n) = 0 for n <= 0 by definition), the h-vector when the increments
// stabilize in range, and the symmetry criterion gated on the flags.
inline Report analyze_filtration(const FiltrationProfile& p, std::string source = {}) {
  Report rep;
  rep.family = "filtration";
  rep.source = std::move(source);
  rep.dim = p.dim();
  rep.profile = p.table();
  rep.flags = p.flags();
  rep.lambda = p.lambda();

  const ProfileFit fit = fit_profile(p);
  rep.coefficients = fit.coeffs;
  rep.e0 = fit.coeffs.e[0];
  rep.e1 = fit.coeffs.e[1];  // profile dim >= 1, so the fit has >= 2 entries
  rep.bound = relative_reduction_bound(rep.e0, rep.e1, rep.lambda);

  rep.postulation_known = true;
  if (fit.postulation) {
    rep.postulation = *fit.postulation;
  } else {
    i64 n = -1;
    while (evaluate_hilbert_polynomial(fit.coeffs, n) == 0) {
      --n;  // a nonzero degree-d polynomial has at most d integer roots
      require(n >= -(p.dim() + 2), errc::verification,
              "polynomial vanished on too many points below the table");
    }
    rep.postulation = n;
  }
  if (p.flags().depth_at_least_dim_minus_1)
    rep.rbar = reduction_from_postulation(*rep.postulation, p.dim(), p.flags());

  std::optional<HVector> h;
  try {
    h = h_vector_from_increments(p.increments(), p.dim());
  } catch (const error& e) {
    if (e.code() != errc::non_stabilized) throw;
  }
  rep.h = h;

  if (h) {
    rep.gorenstein = gorenstein_by_symmetry(*h, p.flags());
  } else {
    rep.gorenstein =
        Verdict{Status::inapplicable,
                {Reason{criteria::h_vector_symmetry,
                        "h-vector undetermined: increments do not stabilize in range"}}};
  }
  for (const Reason& reason : rep.gorenstein.reasons)
    rep.criteria_applied.push_back(reason.criterion);
  return rep;
}

}  // namespace normcone
