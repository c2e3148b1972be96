#pragma once

#include <vector>

#include "ladderfib/core.hpp"

namespace ladderfib {

/// The paper's recursions come in two algebraically equivalent shapes:
/// the block-sum form and the rearranged short form. Both are implemented
/// and tested against each other.
enum class RecursionForm { Summed, Compact };

/// Dense memo of covering counts for one ladder family.
///
/// Undoped: entries Z_N for N = 0..n_max (three-leg: odd N stored as 0).
/// Doped:   entries Z_{N,k} for N = 0..n_max, k = 0..floor(legs*n_max/2).
/// Out-of-range lookups return 0; a finished table is immutable.
class CountTable {
 public:
  static CountTable build(const LadderSpec& spec, int n_max,
                          RecursionForm form = RecursionForm::Summed);

  const LadderSpec& spec() const { return spec_; }
  RecursionForm form() const { return form_; }
  int n_max() const { return n_max_; }
  long long k_max() const { return k_max_; }

  /// Z_N (undoped tables). 0 when out of range or parity-infeasible.
  const Count& undoped(long long n) const;

  /// Z_{N,k} (doped tables). 0 when out of range or k infeasible.
  const Count& doped(long long n, long long k) const;

 private:
  CountTable() = default;
  void fill_undoped();
  void fill_doped_summed();
  void fill_doped_compact_two_leg();

  LadderSpec spec_;
  RecursionForm form_ = RecursionForm::Summed;
  int n_max_ = 0;
  long long k_max_ = 0;
  std::vector<Count> seq_;                 // undoped
  std::vector<std::vector<Count>> grid_;   // doped, grid_[n][k]
  Count zero_ = 0;
};

/// Z_N for an undoped ladder. Throws OddRungsUndopedThreeLeg for odd
/// three-leg requests; internal recursion indices use the Z_odd = 0
/// convention instead.
Count undoped_count(int legs, int n, RecursionForm form = RecursionForm::Summed);

/// Z_{N,k} for a doped ladder; infeasible k gives 0, not an error.
Count doped_count(int legs, int n, long long k);

/// Two-leg rearranged doped recursion
/// Z_{N,k} = 2 Z_{N-1,k-1} + Z_{N-1,k} + Z_{N-2,k-1} - Z_{N-3,k-3}.
Count doped_count_compact(int n, long long k);

/// Spec'd convenience: memoized table to n_max (summed form).
CountTable build_table(const LadderSpec& spec, int n_max);

}  // namespace ladderfib
