#pragma once

#include <optional>
#include <vector>

#include "zeta/laurent.hpp"
#include "zeta/precision.hpp"

namespace rzeta {

/// Partial sums of sum_{k <= K} (1/k - log(1 + 1/k)) at each checkpoint, in
/// HpReal (stored as HpComplex with zero imaginary part).
PartialSumSeries euler_gamma_partial(const std::vector<long>& checkpoints, const PrecisionContext& ctx);

/// gamma_0..gamma_{n_max} in zeta(s) = 1/(s-1) + sum_n (-1)^n gamma_n (s-1)^n / n!,
/// from contour coefficients of zeta(s) - 1/(s-1) on |s - 1| = 1/2.
std::vector<HpReal> stieltjes_constants(int n_max, const PrecisionContext& ctx);
HpReal stieltjes_gamma(int n, const PrecisionContext& ctx);

struct StieltjesTable {
  int n_max;
  std::vector<HpReal> gammas;
  std::vector<std::optional<HpReal>> bound;         // e n! / (2^n sqrt n); none for n = 0
  std::vector<std::optional<HpReal>> bound_margin;  // bound - |gamma_n|
  bool all_margins_positive() const;
};

/// e n! / (2^n sqrt(n)) for n >= 1.
HpReal stieltjes_bound(int n, long bits);

StieltjesTable bound_check(int n_max, const PrecisionContext& ctx);

}  // namespace rzeta
