#pragma once

#include <map>
#include <optional>
#include <vector>

#include "zeta/mobius.hpp"
#include "zeta/precision.hpp"

namespace rzeta {

/// 1/zeta(s) = residue / (s - rho) + sum_n coeffs[n] (s - rho)^n on
/// 0 < |s - rho| < radius.
struct LaurentExpansion {
  HpComplex rho;
  HpComplex residue;
  std::vector<HpComplex> coeffs;  // c_0, c_1, ...
  HpReal radius;
  int n_terms() const { return static_cast<int>(coeffs.size()); }
};

/// A monitored sequence of partial sums. `smoothed[i]` is the Cesaro mean of
/// the partial sums S_j over floor(3K/4) < j <= K, K = checkpoints[i].
struct PartialSumSeries {
  std::vector<long> checkpoints;
  std::vector<HpComplex> raw;
  std::vector<HpComplex> smoothed;
  /// max |raw_i - raw_j| over the last quartile of checkpoints.
  HpReal oscillation;
  /// |smoothed_i - oracle| when an oracle value is known.
  std::vector<HpReal> distance_to_oracle;

  void set_oracle(const HpComplex& oracle);
};

/// Index of the first checkpoint counted in the oscillation statistic.
size_t last_quartile_start(size_t n_checkpoints);
HpReal oscillation_of(const std::vector<HpComplex>& raw);

/// 1/zeta'(rho); SuspectZero when |zeta'(rho)| <= 10^-6.
HpComplex residue(const HpComplex& rho, const PrecisionContext& ctx);

/// a_1..a_{N+1} with a_j = zeta^{(j)}(rho) / j! (a_0 = zeta(rho) = 0 is dropped).
std::vector<HpComplex> taylor_at_zero(const HpComplex& rho, int N, const PrecisionContext& ctx);

struct InvertedSeries {
  HpComplex residue;
  std::vector<HpComplex> coeffs;  // c_0..c_{N-1}
};

/// Laurent data of 1 / (x (a_1 + a_2 x + ...)) from a_1..a_{N+1}.
/// ZeroLeadingCoefficient when a_1 = 0.
InvertedSeries invert_series(const std::vector<HpComplex>& a, int N);

/// mu(k) k^{-s} + residue / (s - rho) ((k + 1)^{-(s - rho)} - k^{-(s - rho)}).
HpComplex v_term(long k, const HpComplex& s, const HpComplex& rho, const HpComplex& residue,
                 const PrecisionContext& ctx);

/// Default checkpoint ladder for coefficient diagnostics.
std::vector<long> default_checkpoints();

/// Partial sums of sum_k [mu(k) log^n(k) k^{-rho}
///   - residue (log^{n+1}(k + 1) - log^{n+1}(k)) / (n + 1)] at each checkpoint.
/// Runs on the double-precision compensated kernels up to
/// kCompensatedTermLimit terms, in HpComplex beyond.
PartialSumSeries phi_series(const HpComplex& rho, const HpComplex& residue, int n,
                            const std::vector<long>& checkpoints, const MobiusTable& table,
                            const PrecisionContext& ctx);

/// The coefficient the phi_n sums are meant to approach: (-1)^n n! c_n.
HpComplex phi_from_coefficient(const HpComplex& c_n, int n);

/// Expansion with c_0..c_{n_coeffs-1} from the Taylor data at rho. The radius
/// is 0.8 * min(distance to the listed neighbor zeros, |rho - 1|).
LaurentExpansion build_expansion(const HpComplex& rho, int n_coeffs,
                                 const std::vector<HpComplex>& neighbor_zeros,
                                 const PrecisionContext& ctx);

/// Same, with `truncate` applied to an existing longer expansion.
LaurentExpansion truncated(const LaurentExpansion& e, int n_coeffs);

/// OutsideDisk unless 0 < |s - rho| < radius.
HpComplex laurent_eval(const HpComplex& s, const LaurentExpansion& e);

/// max over `samples` equispaced points on |s - rho| = r of
/// |1/zeta(s) - laurent_eval(s)| using c_0..c_N.
HpReal reconstruction_residual(const LaurentExpansion& e, const HpReal& r, int N, int samples,
                               const PrecisionContext& ctx);
HpReal reconstruction_residual(const HpComplex& rho, const HpReal& r, int N, int samples,
                               const std::vector<HpComplex>& neighbor_zeros,
                               const PrecisionContext& ctx);

}  // namespace rzeta
