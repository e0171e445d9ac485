#pragma once

// Named property suites over the standard absolute-value kinds: the axiom,
// ultrametric, and subtractive checks on fixed windows, round trips through
// the classifier and reconstructor, the base-change constant's base
// independence, and the exponent kernel's basic equations.  The CLI `suite`
// subcommand and the acceptance driver both run these; each item names one
// property instance and carries its verdict.

#include <cstdint>
#include <string>
#include <vector>

#include "ostk/absvalue.hpp"

namespace ostk::suites {

struct SuiteItem {
  std::string name;
  absval::Verdict verdict = absval::Verdict::Pass;
  std::string detail;
  bool exact = false;  // decided against a closed form, not just bounds
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteItem> items;
  bool all_pass() const;
  std::size_t fail_count() const;
};

// Multiplicativity and triangle inequality, window [-100, 100], seeded
// samples on top of the deterministic sweep.
SuiteResult suite_axioms(long stage, long trials, std::uint64_t seed);

// Ultrametric inequality on [-100, 100] for the non-Archimedean kinds.
SuiteResult suite_ultrametric(long stage);

// Subtractive triangle inequality on the natural window [0, 100].
SuiteResult suite_subtractive(long stage);

// Round trips on window [-50, 50]: every p-adic power with
// p in {2,3,5,7,97} and exponent in {-1, -1/4, -7/2} (the canonical -1 both
// as the plain p-adic kind and as its power form), the euclidean powers with
// exponent in {0, 1/3, 1}, and the trivial kind.
SuiteResult suite_roundtrip(long prime_budget, long stage);

// Base independence of the base-change constant across b in [2, 20], with
// the exact values 1 (euclidean) and 0 (p-adic, p-characteristic, trivial).
SuiteResult suite_fundamental(long stage);

// The exponent kernel: the six basic power equations, log/exp inversion,
// monotonicity in the exponent, and exact rational-exponent subadditivity
// (m+n)^q <= m^q + n^q, on the documented desk-scale grids.
SuiteResult suite_exponents(long stage);

// Dispatch by suite name ("axioms", "ultrametric", "subtractive",
// "roundtrip", "fundamental", "exponents"); Errc::BadParameter on an unknown
// name.
SuiteResult run_suite(const std::string& name, long stage, long budget,
                      long trials, std::uint64_t seed);

}  // namespace ostk::suites
