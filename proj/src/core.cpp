#include "ladderfib/core.hpp"

#include <cmath>

namespace ladderfib {

void validate_spec(const LadderSpec& spec) {
  if (spec.legs < 2 || spec.legs > 4) {
    throw Error(ErrorCode::UnsupportedLegs,
                "legs must be 2, 3 or 4 (got " + std::to_string(spec.legs) + ")");
  }
  if (spec.rungs < 0) {
    throw Error(ErrorCode::InsufficientN, "rungs must be >= 0");
  }
  if (!spec.doped && spec.legs == 3 && spec.rungs % 2 != 0) {
    throw Error(ErrorCode::OddRungsUndopedThreeLeg,
                "undoped three-leg ladders need an even number of rungs: "
                "odd rungs leave an odd site count with no complete dimer covering");
  }
}

int max_dimers(const LadderSpec& spec) { return spec.sites() / 2; }

long long dimers_from_density(int legs, int rungs, double hole_density) {
  double x = (1.0 - hole_density) * legs * rungs / 2.0;
  return (long long)std::floor(x + 0.5);
}

double ratio_as_double(const Count& num, const Count& den) {
  if (den <= 0) throw Error(ErrorCode::InsufficientN, "ratio denominator must be positive");
  if (num == 0) return 0.0;
  // scale so the integer quotient keeps ~96 bits of the ratio
  Count q = (num << 96) / den;
  return std::ldexp(q.convert_to<double>(), -96);
}

double log_count(const Count& v) {
  // cpp_int -> double conversion is fine up to ~1e308; counts here stay far below
  return std::log(v.convert_to<double>());
}

}  // namespace ladderfib
