#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeta/precision.hpp"

namespace rzeta {

/// |zeta'(rho)| at or below this marks a zero suspect rather than multiple.
inline constexpr double kSimplicityFloor = 1e-6;

enum class ZeroStatus { Refined, SimpleConfirmed, Suspect };

std::string_view to_string(ZeroStatus s);
ZeroStatus parse_zero_status(std::string_view text);

struct ZeroRecord {
  long index = 0;
  HpReal t;
  HpComplex rho;  // 1/2 + i t
  std::optional<HpReal> zeta_at_rho_abs;
  std::optional<HpComplex> zeta_prime_at_rho;
  HpReal zeta_prime_abs;
  int winding = 0;
  ZeroStatus status = ZeroStatus::Refined;
};

/// Newton on Z(t) from t0 until |dt| < 10^-target_digits, then zeta(rho)
/// and zeta'(rho) (contour derivative). NoConvergence after 60 steps or when
/// the iterate leaves t0 +- 0.5; one retry at escalated precision first.
ZeroRecord refine_zero(const HpReal& t0, const PrecisionContext& ctx);

/// Plain bisection on the sign of Z over [a, b] until the bracket is shorter
/// than `width`. Shares nothing with refine_zero beyond Z itself.
HpReal bisect_zero(const HpReal& a, const HpReal& b, const HpReal& width, const PrecisionContext& ctx);

/// Winding number of zeta around |s - rho| = r (trapezoid rule on zeta'/zeta
/// with max(32, 2 * target_digits) nodes). Requires 0 < r <= 1/4 and no
/// neighbor ordinate within r of Im(rho). NonIntegerWinding when the
/// quadrature lands more than 0.1 from an integer.
int multiplicity_probe(const HpComplex& rho, const HpReal& r, const PrecisionContext& ctx,
                       const std::vector<HpReal>& neighbor_ordinates = {});

struct ArgumentCount {
  long count;
  HpReal height_used;  // T after any shifts away from zeros
  int shifts;
  long pole_correction;  // poles of zeta enclosed by the rectangle
};

/// Zeros of zeta in 0 < Im s <= T from the argument principle over the
/// rectangle (-1, eps i), (2, eps i), (2, T i), (-1, T i), eps = 10^-3.
/// Adaptive Gauss-Legendre panels on zeta'/zeta, each checked against the
/// endpoint change of log zeta. T is shifted up by 0.05 (at most 5 times)
/// when Z changes sign within 0.1 of it.
ArgumentCount count_by_argument(const HpReal& T, const PrecisionContext& ctx);

/// (T / 2 pi) log(T / 2 pi) - T / 2 pi + 7/8.
HpReal rvm_estimate(const HpReal& T);

struct ZeroScan {
  HpReal T;
  std::vector<ZeroRecord> zeros;  // 0 < t <= T, increasing
  long n_sign_changes;            // on (0, count.height_used]
  ArgumentCount count;
  double grid_step;
};

/// Sign changes of Z on a uniform grid of step 0.25 / log T, halved up to
/// twice while the sign-change count disagrees with count_by_argument
/// (GridTooCoarse after that), each bracket refined by refine_zero.
ZeroScan scan(const HpReal& T, const PrecisionContext& ctx);
std::vector<ZeroRecord> scan_zeros(const HpReal& T, const PrecisionContext& ctx);

/// Fills winding and status: winding from multiplicity_probe with
/// r = min(1/32, gap / 4) where gap is the distance to the nearest listed
/// neighbor; recomputes zeta'(rho) when it is missing.
void audit_zeros(std::vector<ZeroRecord>& zeros, const PrecisionContext& ctx);

struct CountReport {
  HpReal T;
  HpReal height_used;
  long n_sign_changes;
  long n_winding;
  long n_records;
  long n_distinct;  // N_0: equals n_records (multiplicities are measured, all 1 at this scale)
  HpReal rvm_estimate;
  long n_simple;
  std::optional<HpReal> ratio_simple;  // n_simple / n_winding; empty when no zeros
  bool counts_match;
  bool empty_range;
  bool meets_lower_density;  // ratio >= 19/29
  bool meets_upper_density;  // ratio >= 0.84665

  bool failed() const { return !counts_match; }
};

inline constexpr double kDensityLow = 19.0 / 29.0;
inline constexpr double kDensityHigh = 0.84665;

/// Report for an audited scan.
CountReport density_report(const ZeroScan& audited);
/// scan + audit + report.
CountReport density_report(const HpReal& T, const PrecisionContext& ctx);

// Zero cache: "# zeta-zeros v1 digits=<D>" then
// "<index>,<t>,<|zeta'(rho)|>,<winding>,<status>" per line.
struct ZeroCache {
  int digits = 0;
  std::vector<ZeroRecord> zeros;
};

ZeroCache read_zero_cache(std::istream& in, long bits);
ZeroCache read_zero_cache_file(const std::string& path, long bits);
void write_zero_cache_header(std::ostream& out, int digits);
void write_zero_record(std::ostream& out, const ZeroRecord& z);
/// Appends records whose index exceeds the last cached index. Creates the
/// file (with header) when missing; CacheFormat when digits differ.
/// Returns the number of records appended.
long append_zero_cache(const std::string& path, int digits, const std::vector<ZeroRecord>& zeros);

}  // namespace rzeta
