#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/import_export.hpp>

namespace ladderfib {

/// Exact covering count. Never negative; 0 means "no covering exists".
using Count = boost::multiprecision::cpp_int;

/// Exact rational, used wherever entropies are compared exactly.
using Ratio = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  UnsupportedLegs,
  OddRungsUndopedThreeLeg,
  InsufficientN,
  BadCut,
  EmptyGrid,
  TooLarge,
  GeometryInconsistent,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Ladder geometry: `legs` chains of `rungs` sites each, open boundaries.
struct LadderSpec {
  int legs = 2;
  int rungs = 0;
  bool doped = false;

  int sites() const { return legs * rungs; }
};

/// Throws unless legs in {2,3,4} and (undoped 3-leg => even rungs).
void validate_spec(const LadderSpec& spec);

/// floor(l*N/2), the largest dimer count that fits on the lattice.
int max_dimers(const LadderSpec& spec);

/// Dimer/hole bookkeeping for a doped ladder at fixed dimer count k.
struct DopingState {
  LadderSpec spec;
  long long dimers = 0;  // k

  long long holes() const { return (long long)spec.sites() - 2 * dimers; }
  double hole_density() const {
    return spec.sites() == 0 ? 0.0
                             : 1.0 - 2.0 * (double)dimers / spec.sites();
  }
  double singlet_density() const { return 1.0 - hole_density(); }
  bool feasible() const { return dimers >= 0 && 2 * dimers <= spec.sites(); }
};

/// One lattice site, 1-based. Linear index (rung-1)*legs + leg is a
/// bijection onto [1, legs*rungs].
struct SiteIndex {
  int leg = 1;
  int rung = 1;

  int linear(int legs) const { return (rung - 1) * legs + leg; }
  static SiteIndex from_linear(int idx, int legs) {
    return SiteIndex{(idx - 1) % legs + 1, (idx - 1) / legs + 1};
  }
  friend bool operator==(const SiteIndex&, const SiteIndex&) = default;
  friend auto operator<=>(const SiteIndex&, const SiteIndex&) = default;
};

/// Density -> dimer-count conversion used by the CLI and the vbe curves:
/// round half up, ties toward more dimers.
long long dimers_from_density(int legs, int rungs, double hole_density);

/// num/den as a double with relative error well under 1e-12, via scaled
/// integer division. den must be positive.
double ratio_as_double(const Count& num, const Count& den);

/// Natural log of a positive count.
double log_count(const Count& v);

}  // namespace ladderfib
