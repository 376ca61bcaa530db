#pragma once

/// \file validation.hpp
/// \brief Cross-checks of the three counting routes (enumeration, closed
/// form, recurrence) plus the algebraic identities behind them.
///
/// A mismatch never aborts a run. Every row is recorded and the verdict is
/// the conjunction of all rows and all identity checks.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "trinet/exact_count.hpp"
#include "trinet/oracle.hpp"

namespace trinet::validation {

struct Record {
  std::int64_t n = 1;
  PolygonClass cls = PolygonClass::Pentagon;
  std::optional<ExactCount> oracle;  // absent in formula-only runs
  ExactCount closed;
  ExactCount recurrence;
  std::optional<ExactCount> forcing_oracle;  // f (pentagon) or g (hexagon) from enumeration
  ExactCount forcing_closed;
  std::optional<bool> angle_law;  // whole net passes the 60/120 angle law
  bool agree = true;

  friend bool operator==(const Record&, const Record&) = default;
};

/// One family of identities checked over a range of n or k.
struct IdentityCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures == 0

  bool passed() const noexcept { return failures == 0; }

  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

struct Timing {
  std::int64_t oracle_ns = 0;
  std::int64_t closed_ns = 0;
  std::int64_t recurrence_ns = 0;
  std::int64_t identities_ns = 0;

  friend bool operator==(const Timing&, const Timing&) = default;
};

struct VerificationReport {
  std::int64_t n_min = 1;
  std::int64_t n_max = 1;
  bool formula_only = false;
  std::vector<PolygonClass> classes;  // sorted ascending
  std::vector<Record> records;        // sorted by n, then class
  std::vector<IdentityCheck> checks;
  std::vector<std::string> mismatches;
  bool verdict = true;
  std::optional<Timing> timing;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Classes the closed forms cover.
inline const std::set<PolygonClass>& formula_classes() {
  static const std::set<PolygonClass> s{PolygonClass::Pentagon, PolygonClass::Hexagon};
  return s;
}

/// Enumeration vs closed form vs recurrence for every n in [1, n_max], with
/// forcing-term and angle-law checks. Enumeration grows roughly like n^6;
/// n_max around 40 is the practical ceiling. `classes` must be a non-empty
/// subset of {pentagon, hexagon}.
VerificationReport cross_validate(NetSize n_max, const std::set<PolygonClass>& classes = formula_classes());

/// Closed form vs recurrence only, plus divisibility, first-difference and
/// forcing-step identities. Linear in n_max; fine up to n_max = 10^6.
VerificationReport formula_only_validate(NetSize n_max);

/// Recomputes every row's `agree`, the mismatch list and the verdict from
/// the compared columns and checks.
void finalize(VerificationReport& report);

/// The identity families, usable on their own.
std::vector<IdentityCheck> identity_checks(NetSize n_max);

}  // namespace trinet::validation
