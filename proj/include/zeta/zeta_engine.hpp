#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "zeta/precision.hpp"

namespace rzeta {

enum class ZetaMethod { EulerMaclaurin, Reflected, RiemannSiegel };

std::string_view to_string(ZetaMethod m);

struct ZetaValue {
  HpComplex value;
  ZetaMethod method;
  int certified_digits;
};

/// Single evaluation of zeta(s) at ctx.bits, no agreement check. This is the
/// building block every quadrature and scan uses; `zeta` wraps it with the
/// two-precision certification.
///
/// Euler-Maclaurin for Re(s) >= 1/2 and on the disk |s| <= 1/4 (where the
/// reflected form has a removable 0 * pole); reflection through the
/// functional equation elsewhere.
HpComplex zeta_value(const HpComplex& s, const PrecisionContext& ctx, ZetaMethod* method = nullptr);

/// zeta(s) certified to ctx.target_digits by two-precision agreement.
ZetaValue zeta(const HpComplex& s, const PrecisionContext& ctx);

/// Taylor coefficients a_0..a_order of zeta(s + e) in e, from the
/// Euler-Maclaurin formula carried out in truncated power-series arithmetic.
/// Independent of the Cauchy contour route.
std::vector<HpComplex> zeta_jet(const HpComplex& s, int order, const PrecisionContext& ctx);

struct ZetaWithDerivative {
  HpComplex value;
  HpComplex derivative;
};

/// zeta(s) and zeta'(s) in one pass; Euler-Maclaurin jet where zeta_value
/// uses Euler-Maclaurin, differentiated reflection formula elsewhere.
ZetaWithDerivative zeta_and_derivative(const HpComplex& s, const PrecisionContext& ctx);

/// chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s), zeta(s) = chi(s) zeta(1 - s).
HpComplex functional_equation_factor(const HpComplex& s, const PrecisionContext& ctx);

/// pi^{-s/2} Gamma(s/2) zeta(s); invariant under s -> 1 - s.
HpComplex completed_zeta(const HpComplex& s, const PrecisionContext& ctx);

using AnalyticFunction = std::function<HpComplex(const HpComplex&, const PrecisionContext&)>;

/// Taylor coefficients a_0..a_max_order of f around `center` from the
/// trapezoid rule on the circle |s - center| = radius with `nodes` points.
/// Node evaluations run through parallel_map; the reduction order is fixed.
std::vector<HpComplex> cauchy_taylor(const AnalyticFunction& f, const HpComplex& center,
                                     const HpReal& radius, int nodes, int max_order,
                                     const PrecisionContext& ctx);

/// Default contour radius for derivatives at s: min(1/4, |s - 1| / 2).
HpReal derivative_radius(const HpComplex& s, const PrecisionContext& ctx);

/// zeta^{(j)}(s) / j! for j = 0..max_order via cauchy_taylor with 8 * target_digits nodes.
std::vector<HpComplex> zeta_taylor(const HpComplex& s, int max_order, const PrecisionContext& ctx,
                                   std::optional<HpReal> radius = std::nullopt);

/// k-th derivative of zeta at s (k <= 8) through Cauchy's integral formula.
HpComplex zeta_deriv(const HpComplex& s, int k, const PrecisionContext& ctx,
                     std::optional<HpReal> radius = std::nullopt);

/// Riemann-Siegel theta from log Gamma(1/4 + it/2).
HpReal hardy_theta(const HpReal& t, const PrecisionContext& ctx);
HpReal hardy_theta_prime(const HpReal& t, const PrecisionContext& ctx);

/// Z(t) = e^{i theta(t)} zeta(1/2 + it) at ctx.bits, no agreement check.
HpReal hardy_z_value(const HpReal& t, const PrecisionContext& ctx);

struct HardyWithDerivative {
  HpReal z;
  HpReal dz;
};
HardyWithDerivative hardy_z_and_derivative(const HpReal& t, const PrecisionContext& ctx);

/// Certified Z(t) for t >= 0.
HpReal hardy_Z(const HpReal& t, const PrecisionContext& ctx);

/// The full complex rotation e^{i theta(t)} zeta(1/2 + it); its imaginary part
/// vanishes up to rounding.
HpComplex hardy_rotated(const HpReal& t, const PrecisionContext& ctx);

/// 1/zeta(s); NearZero when |zeta(s)| < 10^{-target_digits/2}.
HpComplex inverse_zeta(const HpComplex& s, const PrecisionContext& ctx);

/// Number of main-sum terms the Euler-Maclaurin evaluator uses at s.
long euler_maclaurin_terms(const HpComplex& s, const PrecisionContext& ctx);

}  // namespace rzeta
