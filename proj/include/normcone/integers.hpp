#pragma once

// Exact integer arithmetic used throughout: arbitrary-precision values,
// binomial coefficients in both the counting and the polynomial convention,
// and the library-wide error type. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace normcone {

using Int = boost::multiprecision::cpp_int;
using i64 = std::int64_t;

enum class errc {
  empty_generators,
  gcd_not_one,
  domain,            // precondition violated (ranges, signs, shapes)
  range_too_small,
  non_stabilized,    // tail never fits a degree-d polynomial in range
  non_integer_fit,   // linear solve has no integer solution
  negative_entry,    // h-vector entry negative where the formula forbids it
  bound_too_small,
  inapplicable,      // a required hypothesis flag is absent
  verification,      // an oracle twin disagreed with the closed form
  parse,             // malformed external input
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_generators: return "EmptyGenerators";
    case errc::gcd_not_one:      return "GcdNotOne";
    case errc::domain:           return "DomainViolation";
    case errc::range_too_small:  return "RangeTooSmall";
    case errc::non_stabilized:   return "NonStabilized";
    case errc::non_integer_fit:  return "NonIntegerFit";
    case errc::negative_entry:   return "NegativeEntry";
    case errc::bound_too_small:  return "BoundTooSmall";
    case errc::inapplicable:     return "Inapplicable";
    case errc::verification:     return "VerificationFailure";
    case errc::parse:            return "ParseError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

// Counting binomial: C(n,k) = 0 whenever n < 0, k < 0, or k > n.
inline Int binomial(i64 n, i64 k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (i64 i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

// Polynomial binomial: the degree-k polynomial x(x-1)...(x-k+1)/k! evaluated
// at any integer x. Agrees with binomial() for x >= 0; for x < 0 it is the
// nonzero polynomial value (e.g. C(-1,0) = 1), which is what Hilbert
// polynomial evaluation needs at the low end of a profile.
inline Int binomial_poly(const Int& x, i64 k) {
  if (k < 0) return 0;
  Int num = 1;
  for (i64 i = 0; i < k; ++i) num *= (x - i);
  Int den = 1;
  for (i64 i = 2; i <= k; ++i) den *= i;
  return num / den;  // exact for integer x
}

// Ceiling division for positive divisors; numerator may be any sign.
inline i64 ceil_div(i64 num, i64 den) {
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

inline i64 gcd_i64(i64 a, i64 b) {
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace normcone
