#include "ladderfib/sequences.hpp"

namespace ladderfib {

namespace {

// Safe 2-D lookup with the universal out-of-range -> 0 convention.
const Count& cell(const std::vector<std::vector<Count>>& g, long long n,
                  long long k, const Count& zero) {
  if (n < 0 || k < 0) return zero;
  if (n >= (long long)g.size()) return zero;
  if (k >= (long long)g[n].size()) return zero;
  return g[n][k];
}

}  // namespace

const Count& CountTable::undoped(long long n) const {
  if (n < 0 || n > n_max_) return zero_;
  return seq_[n];
}

const Count& CountTable::doped(long long n, long long k) const {
  if (n < 0 || n > n_max_ || k < 0 || k > k_max_) return zero_;
  if (2 * k > (long long)spec_.legs * n) return zero_;
  return grid_[n][k];
}

CountTable CountTable::build(const LadderSpec& spec, int n_max,
                             RecursionForm form) {
  validate_spec(spec);
  if (spec.doped && form == RecursionForm::Compact && spec.legs != 2) {
    throw Error(ErrorCode::UnsupportedLegs,
                "compact doped recursion exists for two legs only");
  }
  CountTable t;
  t.spec_ = spec;
  t.form_ = form;
  t.n_max_ = n_max;
  if (spec.doped) {
    t.k_max_ = (long long)spec.legs * n_max / 2;
    if (form == RecursionForm::Compact)
      t.fill_doped_compact_two_leg();
    else
      t.fill_doped_summed();
  } else {
    t.fill_undoped();
  }
  return t;
}

void CountTable::fill_undoped() {
  const int l = spec_.legs;
  seq_.assign(n_max_ + 1, Count(0));
  seq_[0] = 1;
  if (form_ == RecursionForm::Compact) {
    if (l == 2) {
      if (n_max_ >= 1) seq_[1] = 1;
      for (int n = 2; n <= n_max_; ++n) seq_[n] = seq_[n - 1] + seq_[n - 2];
    } else if (l == 3) {
      // Z_N = 4 Z_{N-2} - Z_{N-4}, seeds Z_0 = 1, Z_2 = 3
      if (n_max_ >= 2) seq_[2] = 3;
      for (int n = 4; n <= n_max_; n += 2)
        seq_[n] = 4 * seq_[n - 2] - seq_[n - 4];
    } else {
      // Z_N = 2 Z_{N-1} + 3 Z_{N-2} - 2 Z_{N-3}, seeds 1, 1, 5
      if (n_max_ >= 1) seq_[1] = 1;
      if (n_max_ >= 2) seq_[2] = 5;
      for (int n = 3; n <= n_max_; ++n)
        seq_[n] = 2 * seq_[n - 1] + 3 * seq_[n - 2] - 2 * seq_[n - 3];
    }
    return;
  }
  // Summed forms, with running prefix sums so each cell costs O(1).
  if (l == 2) {
    if (n_max_ >= 1) seq_[1] = 1;
    for (int n = 2; n <= n_max_; ++n) seq_[n] = seq_[n - 1] + seq_[n - 2];
  } else if (l == 3) {
    // Z_N = 3 Z_{N-2} + 2 sum_{i=1}^{N/2-1} Z_{N-2i-2}; the sum is the
    // prefix of even-index terms up to N-4.
    Count even_prefix = 0;  // sum of Z_0..Z_{n-4} (even indices)
    for (int n = 2; n <= n_max_; n += 2) {
      if (n >= 4) even_prefix += seq_[n - 4];
      seq_[n] = 3 * seq_[n - 2] + 2 * even_prefix;
    }
  } else {
    // Z_N = Z_{N-1} + 4 Z_{N-2} + 2 sum_{m=0}^{N-3} Z_m
    if (n_max_ >= 1) seq_[1] = 1;
    Count prefix = 0;  // sum of Z_0..Z_{n-3}
    for (int n = 2; n <= n_max_; ++n) {
      if (n >= 3) prefix += seq_[n - 3];
      seq_[n] = seq_[n - 1] + 4 * seq_[n - 2] + 2 * prefix;
    }
  }
}

void CountTable::fill_doped_summed() {
  const int l = spec_.legs;
  const long long K = k_max_;
  grid_.assign(n_max_ + 1, std::vector<Count>(K + 1, Count(0)));
  grid_[0][0] = 1;

  if (l == 2) {
    // Z_{N,k} = Z_{N-1,k-1} + Z_{N-2,k-2} + Z_{N-1,k} + 2 D_{N-2,k-1},
    // D_{m,j} = Z_{m,j} + D_{m-1,j-1}  (prefix along the down-left diagonal)
    std::vector<std::vector<Count>> diag(n_max_ + 1,
                                         std::vector<Count>(K + 1, Count(0)));
    diag[0][0] = 1;
    for (int n = 1; n <= n_max_; ++n) {
      const long long kcap = std::min<long long>(K, (long long)l * n / 2);
      for (long long k = 0; k <= kcap; ++k) {
        Count v = cell(grid_, n - 1, k - 1, zero_) +
                  cell(grid_, n - 2, k - 2, zero_) +
                  cell(grid_, n - 1, k, zero_) +
                  2 * cell(diag, n - 2, k - 1, zero_);
        grid_[n][k] = std::move(v);
        diag[n][k] = grid_[n][k] + cell(diag, n - 1, k - 1, zero_);
      }
    }
    return;
  }

  // Three and four legs share the double-sum structure
  //   sum_{i>=1} sum_{j=0}^{ci-1} Z_{N-2i, k-ci+j}
  // which reduces to column sums of row prefixes:
  //   sum_i [ R_{N-2i,k-1} - R_{N-2i,k-ci-1} ]
  //     = C_{N-2,k-1} - G_{N-2,k-c-1}
  // with R the row prefix, C_{m,c} = R_{m,c} + C_{m-2,c} and
  // G_{m,c} = R_{m,c} + G_{m-2,c-c0} stepping down the (2, c0) diagonal.
  const long long c0 = l;  // dimers removed per two-rung block
  std::vector<std::vector<Count>> rowp(n_max_ + 1,
                                       std::vector<Count>(K + 1, Count(0)));
  std::vector<std::vector<Count>> colp(n_max_ + 1,
                                       std::vector<Count>(K + 1, Count(0)));
  std::vector<std::vector<Count>> diagp(n_max_ + 1,
                                        std::vector<Count>(K + 1, Count(0)));
  auto finish_row = [&](int n) {
    for (long long c = 0; c <= K; ++c) {
      rowp[n][c] = grid_[n][c] + (c > 0 ? rowp[n][c - 1] : zero_);
      colp[n][c] = rowp[n][c] + cell(colp, n - 2, c, zero_);
      diagp[n][c] = rowp[n][c] + cell(diagp, n - 2, c - c0, zero_);
    }
  };
  finish_row(0);
  for (int n = 1; n <= n_max_; ++n) {
    const long long kcap = std::min<long long>(K, (long long)l * n / 2);
    for (long long k = 0; k <= kcap; ++k) {
      Count sum2 = cell(colp, n - 2, k - 1, zero_) -
                   cell(diagp, n - 2, k - c0 - 1, zero_);
      Count v;
      if (l == 3) {
        v = 2 * cell(grid_, n - 1, k - 1, zero_) +
            cell(grid_, n - 1, k, zero_) + 3 * sum2;
      } else {
        v = cell(grid_, n - 1, k - 2, zero_) +
            3 * cell(grid_, n - 1, k - 1, zero_) +
            cell(grid_, n - 1, k, zero_) + 2 * sum2;
      }
      grid_[n][k] = std::move(v);
    }
    finish_row(n);
  }
}

void CountTable::fill_doped_compact_two_leg() {
  const long long K = k_max_;
  grid_.assign(n_max_ + 1, std::vector<Count>(K + 1, Count(0)));
  grid_[0][0] = 1;
  if (n_max_ >= 1) {
    grid_[1][0] = 1;
    if (K >= 1) grid_[1][1] = 1;
  }
  for (int n = 2; n <= n_max_; ++n) {
    const long long kcap = std::min<long long>(K, n);
    for (long long k = 0; k <= kcap; ++k) {
      grid_[n][k] = 2 * cell(grid_, n - 1, k - 1, zero_) +
                    cell(grid_, n - 1, k, zero_) +
                    cell(grid_, n - 2, k - 1, zero_) -
                    cell(grid_, n - 3, k - 3, zero_);
    }
  }
}

Count undoped_count(int legs, int n, RecursionForm form) {
  LadderSpec spec{legs, n, false};
  validate_spec(spec);
  return CountTable::build(spec, n, form).undoped(n);
}

Count doped_count(int legs, int n, long long k) {
  LadderSpec spec{legs, n, true};
  validate_spec(spec);
  if (k < 0 || 2 * k > (long long)legs * n) return 0;
  return CountTable::build(spec, n).doped(n, k);
}

Count doped_count_compact(int n, long long k) {
  LadderSpec spec{2, n, true};
  validate_spec(spec);
  if (k < 0 || k > n) return 0;
  return CountTable::build(spec, n, RecursionForm::Compact).doped(n, k);
}

CountTable build_table(const LadderSpec& spec, int n_max) {
  return CountTable::build(spec, n_max);
}

}  // namespace ladderfib
