#pragma once

// Tri-state verdicts. Numeric criteria for Gorenstein-ness carry hypotheses
// (ambient ring Gorenstein, associated graded ring Cohen-Macaulay, depth)
// that cannot be checked from numbers alone; a verdict is `inapplicable`
// exactly when a required hypothesis flag is absent, and otherwise records
// which criteria decided it, with the (in)equalities instantiated.

#include <string>
#include <vector>

namespace normcone {

enum class Status { holds, fails, inapplicable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::holds:        return "holds";
    case Status::fails:        return "fails";
    case Status::inapplicable: return "inapplicable";
  }
  return "?";
}

struct Reason {
  std::string criterion;  // stable identifier, e.g. "h_vector_symmetry"
  std::string detail;     // instantiated equality/inequality or missing hypothesis

  friend bool operator==(const Reason&, const Reason&) = default;
};

struct Verdict {
  Status status = Status::inapplicable;
  std::vector<Reason> reasons;  // never empty in a rendered report

  bool holds() const { return status == Status::holds; }
  bool applicable() const { return status != Status::inapplicable; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace normcone
