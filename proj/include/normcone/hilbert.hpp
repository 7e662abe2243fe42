#pragma once

// Filtration-agnostic Hilbert numerics. A profile is the finite table
// H(0..N) of lengths H(n) = len(A/F_n) of a Hilbert filtration on a
// d-dimensional ring, plus the hypothesis flags the numeric criteria need.
// From it: coefficient extraction (e0..ed), postulation number, reduction
// number, h-vectors, and the tri-state Gorenstein criteria.

#include "normcone/hvector.hpp"
#include "normcone/integers.hpp"
#include "normcone/verdict.hpp"

#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace normcone {

struct HilbertCoefficients {
  std::vector<Int> e;  // e[0..d]; e[0] is the multiplicity, >= 1

  HilbertCoefficients() = default;
  explicit HilbertCoefficients(std::vector<Int> coeffs) : e(std::move(coeffs)) {
    require(!e.empty(), errc::domain, "coefficient vector must be nonempty");
    require(e[0] >= 1, errc::domain, "multiplicity e0 must be >= 1");
  }

  i64 dim() const { return static_cast<i64>(e.size()) - 1; }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ')';
    return os.str();
  }

  friend bool operator==(const HilbertCoefficients&, const HilbertCoefficients&) = default;
};

// Hypotheses the caller asserts about the source ring/filtration; numeric
// criteria whose theorems need a missing flag come back `inapplicable`.
struct ProfileAssumptions {
  bool ambient_gorenstein = false;
  bool assoc_graded_cm = false;
  bool depth_at_least_dim_minus_1 = false;

  friend bool operator==(const ProfileAssumptions&, const ProfileAssumptions&) = default;
};

class FiltrationProfile {
 public:
  // H holds H(0..N). Requires dim >= 1, H(0) = 0, H non-decreasing, H(1) >= 1.
  FiltrationProfile(i64 dim, std::vector<Int> H, ProfileAssumptions flags = {})
      : dim_(dim), H_(std::move(H)), flags_(flags) {
    require(dim_ >= 1, errc::domain, "profile dimension must be >= 1");
    require(H_.size() >= 2, errc::domain, "profile needs at least H(0) and H(1)");
    require(H_[0] == 0, errc::domain, "H(0) must be 0");
    require(H_[1] >= 1, errc::domain, "H(1) = lambda must be >= 1");
    for (std::size_t n = 1; n < H_.size(); ++n)
      require(H_[n] >= H_[n - 1], errc::domain, "H must be non-decreasing");
  }

  i64 dim() const { return dim_; }
  i64 last_index() const { return static_cast<i64>(H_.size()) - 1; }
  const std::vector<Int>& table() const { return H_; }
  const Int& at(i64 n) const { return H_[static_cast<std::size_t>(n)]; }
  const Int& lambda() const { return H_[1]; }  // len(A/F_1)
  const ProfileAssumptions& flags() const { return flags_; }

  // c_n = H(n+1) - H(n) for n = 0..N-1.
  std::vector<Int> increments() const {
    std::vector<Int> c(H_.size() - 1);
    for (std::size_t n = 0; n + 1 < H_.size(); ++n) c[n] = H_[n + 1] - H_[n];
    return c;
  }

 private:
  i64 dim_;
  std::vector<Int> H_;
  ProfileAssumptions flags_;
};

// P(n) = sum_{i=0}^{d} (-1)^i e_i C(n+d-1-i, d-i), with the binomials read
// as polynomials in n (so evaluation at n = 0 sees C(-1,0) = 1).
inline Int evaluate_hilbert_polynomial(const HilbertCoefficients& coeffs, i64 n) {
  const i64 d = coeffs.dim();
  Int acc = 0;
  for (i64 i = 0; i <= d; ++i) {
    Int term = coeffs.e[static_cast<std::size_t>(i)] * binomial_poly(Int(n + d - 1 - i), d - i);
    if (i % 2 == 0) acc += term; else acc -= term;
  }
  return acc;
}

struct ProfileFit {
  HilbertCoefficients coeffs;
  // Largest n in [0, N] with H(n) != P(n); disengaged when every supplied
  // point fits, i.e. the postulation number is <= -1 (below the table).
  std::optional<i64> postulation;
  i64 fit_points = 0;  // trailing points on which H(n) == P(n)
};

// Extracts (e0..ed) by successive finite differences of the corrected tail:
// the (d-i)-fold difference of H minus the already-extracted terms is
// eventually the constant (-1)^i e_i. The fit is then verified on every
// point past the detected postulation number; `window` trailing fit points
// are demanded as stabilization evidence (default d+2, configurable upward).
inline ProfileFit fit_profile(const FiltrationProfile& p, i64 window = 0) {
  const i64 d = p.dim();
  if (window == 0) window = d + 2;
  require(window >= d + 2, errc::domain, "stabilization window must be >= dim + 2");
  const i64 N = p.last_index();
  require(N >= d + 1, errc::non_stabilized, "profile too short to determine coefficients");

  std::vector<Int> T(p.table());
  std::vector<Int> e(static_cast<std::size_t>(d + 1));
  for (i64 i = 0; i <= d; ++i) {
    std::vector<Int> D = T;
    for (i64 pass = 0; pass < d - i; ++pass) {
      for (std::size_t j = D.size() - 1; j >= 1; --j) D[j] -= D[j - 1];
      D.erase(D.begin());
    }
    Int top = D.back();
    e[static_cast<std::size_t>(i)] = (i % 2 == 0) ? top : -top;
    for (i64 n = 0; n <= N; ++n) {
      Int term = e[static_cast<std::size_t>(i)] * binomial_poly(Int(n + d - 1 - i), d - i);
      if (i % 2 == 0) T[static_cast<std::size_t>(n)] -= term;
      else T[static_cast<std::size_t>(n)] += term;
    }
  }

  // T now holds H(n) - P(n).
  std::optional<i64> post;
  for (i64 n = N; n >= 0; --n) {
    if (T[static_cast<std::size_t>(n)] != 0) { post = n; break; }
  }
  const i64 fit_points = post ? N - *post : N + 1;
  require(fit_points >= window, errc::non_stabilized,
          "tail does not fit a Hilbert polynomial on enough consecutive points");
  require(e[0] >= 1, errc::domain, "profile is eventually constant; multiplicity would be < 1");
  return ProfileFit{HilbertCoefficients(std::move(e)), post, fit_points};
}

inline HilbertCoefficients coefficients_from_profile(const FiltrationProfile& p, i64 window = 0) {
  return fit_profile(p, window).coeffs;
}

// sup{ n : H(n) != P(n) } within the supplied range; disengaged = every
// supplied value fits (the postulation number is <= -1).
inline std::optional<i64> postulation_number(const FiltrationProfile& p) {
  return fit_profile(p).postulation;
}

// reduction number = postulation number + dim; valid only when the caller
// asserts depth G >= dim - 1.
inline i64 reduction_from_postulation(i64 n_f, i64 dim, const ProfileAssumptions& flags) {
  require(flags.depth_at_least_dim_minus_1, errc::inapplicable,
          "reduction-from-postulation needs the depth >= dim-1 flag");
  return n_f + dim;
}

namespace criteria {
inline constexpr const char* h_vector_symmetry = "h_vector_symmetry";
inline constexpr const char* reduction_one_coefficients = "reduction_one_coefficients";
inline constexpr const char* reduction_two_coefficients = "reduction_two_coefficients";
inline constexpr const char* maximal_nr_hilbert_series = "maximal_nr_hilbert_series";
inline constexpr const char* congruence_class = "congruence_class";
inline constexpr const char* ell_duality = "ell_duality";
inline constexpr const char* hypothesis_gate = "hypothesis_gate";
}  // namespace criteria

// Symmetric h-vector criterion. Needs ambient Gorenstein + associated graded
// ring Cohen-Macaulay; without both flags the verdict is inapplicable.
inline Verdict gorenstein_by_symmetry(const HVector& h, const ProfileAssumptions& flags) {
  if (!flags.ambient_gorenstein || !flags.assoc_graded_cm) {
    std::string missing;
    if (!flags.ambient_gorenstein) missing += " ambient_gorenstein";
    if (!flags.assoc_graded_cm) missing += " assoc_graded_cm";
    return Verdict{Status::inapplicable,
                   {Reason{criteria::hypothesis_gate, "missing hypothesis flag(s):" + missing}}};
  }
  const bool sym = is_symmetric(h);
  return Verdict{sym ? Status::holds : Status::fails,
                 {Reason{criteria::h_vector_symmetry,
                         "h = " + h.str() + (sym ? " is" : " is not") + " palindromic"}}};
}

// Coefficient criteria at reduction number 1 and 2 (pure predicates; the
// ambient-Gorenstein hypothesis is the caller's to gate).
inline bool gorenstein_r1(const Int& e0, const Int& e1) { return e0 == 2 * e1; }
inline bool gorenstein_r2(const Int& e0, const Int& e1) { return e0 == e1; }

// Upper bound for the relative reduction number: e1 - e0 + lambda + 1.
inline Int relative_reduction_bound(const Int& e0, const Int& e1, const Int& lambda) {
  return e1 - e0 + lambda + 1;
}

// Maximality: the relative reduction number attains the bound.
inline bool is_maximal_nr(i64 nr, const Int& e0, const Int& e1, const Int& lambda) {
  return Int(nr) == relative_reduction_bound(e0, e1, lambda);
}

// Gorenstein criterion when the relative reduction number r >= 2 is maximal:
// at r = 2, holds iff lambda = 1; at r >= 3, holds iff lambda = 1 and e0 = 2.
// Hypotheses (all asserted by flags): ambient Gorenstein, nr maximal,
// associated graded ring Cohen-Macaulay.
inline Verdict gorenstein_maximal(const Int& lambda, const Int& e0, i64 r,
                                  bool ambient_gorenstein, bool nr_maximal,
                                  bool assoc_graded_cm) {
  require(r >= 2, errc::domain, "maximal-nr criterion needs r >= 2");
  if (!ambient_gorenstein || !nr_maximal || !assoc_graded_cm) {
    std::string missing;
    if (!ambient_gorenstein) missing += " ambient_gorenstein";
    if (!nr_maximal) missing += " nr_maximal";
    if (!assoc_graded_cm) missing += " assoc_graded_cm";
    return Verdict{Status::inapplicable,
                   {Reason{criteria::hypothesis_gate, "missing hypothesis flag(s):" + missing}}};
  }
  std::ostringstream os;
  bool ok;
  if (r == 2) {
    ok = (lambda == 1);
    os << "r = 2: lambda = " << lambda << (ok ? " == 1" : " != 1");
  } else {
    ok = (lambda == 1 && e0 == 2);
    os << "r = " << r << ": lambda = " << lambda << ", e0 = " << e0
       << (ok ? " (lambda == 1 and e0 == 2)" : " (need lambda == 1 and e0 == 2)");
  }
  return Verdict{ok ? Status::holds : Status::fails,
                 {Reason{criteria::maximal_nr_hilbert_series, os.str()}}};
}

// At maximal relative reduction number: e_i = C(nr, i) for 2 <= i <= d.
inline bool ei_binomial_check(i64 nr, const HilbertCoefficients& coeffs) {
  for (i64 i = 2; i <= coeffs.dim(); ++i)
    if (coeffs.e[static_cast<std::size_t>(i)] != binomial(nr, i)) return false;
  return true;
}

// e_i = sum_j C(j, i) h_j for i = 0..dim (so e0 = sum h_j).
inline HilbertCoefficients coefficients_from_hvector(const HVector& h) {
  std::vector<Int> e(static_cast<std::size_t>(h.dim() + 1));
  for (i64 i = 0; i <= h.dim(); ++i) {
    Int acc = 0;
    for (i64 j = 0; j <= h.degree(); ++j)
      acc += binomial(j, i) * h[static_cast<std::size_t>(j)];
    e[static_cast<std::size_t>(i)] = acc;
  }
  return HilbertCoefficients(std::move(e));
}

}  // namespace normcone
