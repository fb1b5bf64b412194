#include "zeta/zero_finder.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "zeta/parallel.hpp"
#include "zeta/zeta_engine.hpp"

namespace rzeta {

std::string_view to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::Refined: return "refined";
    case ZeroStatus::SimpleConfirmed: return "simple-confirmed";
    case ZeroStatus::Suspect: return "suspect";
  }
  return "unknown";
}

ZeroStatus parse_zero_status(std::string_view text) {
  if (text == "refined") return ZeroStatus::Refined;
  if (text == "simple-confirmed") return ZeroStatus::SimpleConfirmed;
  if (text == "suspect") return ZeroStatus::Suspect;
  throw Error(ErrorKind::CacheFormat, "unknown zero status '" + std::string(text) + "'");
}

namespace {

constexpr int kMaxNewtonSteps = 60;
constexpr double kMaxExcursion = 0.5;
constexpr int kScanDigits = 15;

PrecisionContext scan_context() { return PrecisionContext::for_digits(kScanDigits); }

HpComplex critical(const HpReal& t, long bits) {
  return {HpReal(0.5, bits), t.with_bits(bits)};
}

HpReal newton_on_z(const HpReal& t0, const PrecisionContext& ctx) {
  const long p = ctx.bits();
  const HpReal start = t0.with_bits(p);
  const HpReal tol = pow10(-ctx.target_digits(), p);
  HpReal t = start;
  for (int it = 0; it < kMaxNewtonSteps; ++it) {
    const HardyWithDerivative zd = hardy_z_and_derivative(t, ctx);
    if (zd.dz.is_zero()) break;
    const HpReal step = zd.z / zd.dz;
    t -= step;
    if (abs(t - start) > kMaxExcursion || t.sign() <= 0) break;
    if (abs(step) < tol) return t;
  }
  throw Error(ErrorKind::NoConvergence, "Newton on Z did not converge from t0 = " + t0.to_string(12));
}

}  // namespace

ZeroRecord refine_zero(const HpReal& t0, const PrecisionContext& ctx) {
  PrecisionContext work = ctx;
  HpReal t;
  try {
    t = newton_on_z(t0, work);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoConvergence) throw;
    work = ctx.escalated();
    t = newton_on_z(t0, work);
  }

  ZeroRecord rec;
  rec.t = t.with_bits(ctx.bits());
  rec.rho = critical(rec.t, ctx.bits());
  const HpReal zabs = abs(zeta_value(critical(t, work.bits()), work));
  if (zabs >= pow10(2 - ctx.target_digits(), work.bits())) {
    throw Error(ErrorKind::NoConvergence, "|zeta| at the Newton limit is " + zabs.to_string(6));
  }
  rec.zeta_at_rho_abs = zabs.with_bits(ctx.bits());
  rec.zeta_prime_at_rho = zeta_deriv(rec.rho, 1, ctx);
  rec.zeta_prime_abs = abs(*rec.zeta_prime_at_rho);
  return rec;
}

HpReal bisect_zero(const HpReal& a_in, const HpReal& b_in, const HpReal& width,
                   const PrecisionContext& ctx) {
  const long p = ctx.bits();
  HpReal a = a_in.with_bits(p);
  HpReal b = b_in.with_bits(p);
  if (b < a) std::swap(a, b);
  const int sa = hardy_z_value(a, ctx).sign();
  const int sb = hardy_z_value(b, ctx).sign();
  if (sa == 0) return a;
  if (sb == 0) return b;
  if (sa == sb) throw Error(ErrorKind::InvalidArgument, "Z has the same sign at both bracket ends");
  while (b - a > width) {
    HpReal mid = (a + b) / 2;
    const int sm = hardy_z_value(mid, ctx).sign();
    if (sm == 0) return mid;
    if (sm == sa) {
      a = std::move(mid);
    } else {
      b = std::move(mid);
    }
  }
  return (a + b) / 2;
}

int multiplicity_probe(const HpComplex& rho, const HpReal& r, const PrecisionContext& ctx,
                       const std::vector<HpReal>& neighbor_ordinates) {
  if (r.sign() <= 0 || r > 0.25) {
    throw Error(ErrorKind::InvalidArgument, "probe radius must lie in (0, 1/4]");
  }
  for (const HpReal& nt : neighbor_ordinates) {
    if (abs(nt - rho.im) <= r) {
      throw Error(ErrorKind::InvalidArgument,
                  "probe circle reaches the neighboring zero at t = " + nt.to_string(12));
    }
  }
  const long p = ctx.bits();
  HpComplex to_pole = rho.with_bits(p);
  to_pole.re -= HpReal::from_int(1, p);
  if (abs(to_pole) <= r) throw Error(ErrorKind::ContourTouchesPole, "probe circle reaches s = 1");

  const int nodes = std::max(32, 2 * ctx.target_digits());
  const HpReal step = const_pi(p) * 2 / static_cast<long>(nodes);
  const HpComplex center = rho.with_bits(p);
  const HpReal radius = r.with_bits(p);
  const std::vector<HpComplex> samples = parallel_map(static_cast<size_t>(nodes), [&](size_t j) {
    const HpComplex offset = expi(step * static_cast<long>(j)) * radius;
    const ZetaWithDerivative zd = zeta_and_derivative(center + offset, ctx);
    if (zd.value.is_zero()) {
      throw Error(ErrorKind::NonIntegerWinding, "probe contour passes through a zero");
    }
    return zd.derivative / zd.value * offset;
  });
  HpComplex sum(p);
  for (const auto& v : samples) sum += v;
  sum /= static_cast<long>(nodes);
  const double w = sum.re.to_double();
  const double rounded = std::round(w);
  if (std::fabs(w - rounded) > 0.1 || std::fabs(sum.im.to_double()) > 0.1) {
    throw Error(ErrorKind::NonIntegerWinding, "winding quadrature gave " + sum.re.to_string(8) +
                                                  " + " + sum.im.to_string(8) + "i");
  }
  return static_cast<int>(rounded);
}

namespace {

constexpr int kGaussOrder = 16;
constexpr double kBottomEps = 1e-3;
constexpr double kPanelTol = 1e-5;
constexpr int kMaxPanelDepth = 40;

struct GaussRule {
  std::array<double, kGaussOrder> x;
  std::array<double, kGaussOrder> w;
};

const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule g{};
    const int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-16) break;
      }
      g.x[i] = x;
      g.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return g;
  }();
  return rule;
}

using cplx = std::complex<double>;

struct Integrand {
  PrecisionContext ctx;

  cplx log_derivative(cplx s) const {
    const ZetaWithDerivative zd = zeta_and_derivative(HpComplex(s.real(), s.imag(), ctx.bits()), ctx);
    if (zd.value.is_zero()) throw Error(ErrorKind::ContourNearZero, "contour hits a zero");
    return (zd.derivative / zd.value).to_complex();
  }

  // log zeta(s) reduced to double: log|zeta| exactly, arg principal.
  cplx log_value(cplx s) const {
    const HpComplex v = zeta_value(HpComplex(s.real(), s.imag(), ctx.bits()), ctx);
    if (v.is_zero()) throw Error(ErrorKind::ContourNearZero, "contour hits a zero");
    return log(v).to_complex();
  }
};

double wrap_angle(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a > std::numbers::pi) a -= two_pi;
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

// Returns the argument change of zeta along [a, b]; throws ContourNearZero
// when the panel cannot be resolved.
double panel_arg_change(const Integrand& f, cplx a, cplx b, cplx la, cplx lb, int depth) {
  const GaussRule& g = gauss_rule();
  const cplx half = (b - a) / 2.0;
  const cplx mid = (a + b) / 2.0;
  cplx integral = 0.0;
  for (int i = 0; i < kGaussOrder; ++i) {
    integral += g.w[i] * f.log_derivative(mid + half * g.x[i]);
  }
  integral *= half;
  const double d_arg = wrap_angle(lb.imag() - la.imag());
  const double d_mod = lb.real() - la.real();
  const double scale = std::max(1.0, std::abs(integral));
  const bool resolved = std::fabs(integral.imag()) < 2.5 &&
                        std::fabs(integral.imag() - d_arg) < kPanelTol * scale &&
                        std::fabs(integral.real() - d_mod) < kPanelTol * scale;
  if (resolved) return d_arg;
  if (depth >= kMaxPanelDepth) {
    throw Error(ErrorKind::ContourNearZero, "argument quadrature does not resolve near s = " +
                                                std::to_string(mid.real()) + " + " +
                                                std::to_string(mid.imag()) + "i");
  }
  const cplx lm = f.log_value(mid);
  return panel_arg_change(f, a, mid, la, lm, depth + 1) +
         panel_arg_change(f, mid, b, lm, lb, depth + 1);
}

double edge_arg_change(const Integrand& f, cplx a, cplx b, double max_panel) {
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / max_panel)));
  std::vector<cplx> pts(static_cast<size_t>(panels) + 1);
  for (int i = 0; i <= panels; ++i) pts[i] = a + (b - a) * (static_cast<double>(i) / panels);
  const std::vector<cplx> logs =
      parallel_map(pts.size(), [&](size_t i) { return f.log_value(pts[i]); });
  const std::vector<double> pieces = parallel_map(static_cast<size_t>(panels), [&](size_t i) {
    return panel_arg_change(f, pts[i], pts[i + 1], logs[i], logs[i + 1], 0);
  });
  double total = 0.0;
  for (double v : pieces) total += v;
  return total;
}

bool z_changes_sign_near(double T, const PrecisionContext& ctx) {
  constexpr int kSamples = 21;
  const std::vector<int> signs = parallel_map(static_cast<size_t>(kSamples), [&](size_t i) {
    const double t = std::max(0.0, T - 0.1 + 0.2 * static_cast<double>(i) / (kSamples - 1));
    return hardy_z_value(HpReal(t, ctx.bits()), ctx).sign();
  });
  for (int i = 0; i + 1 < kSamples; ++i) {
    if (signs[i] * signs[i + 1] <= 0) return true;
  }
  return false;
}

}  // namespace

ArgumentCount count_by_argument(const HpReal& T, const PrecisionContext& ctx) {
  if (T < 1.0) throw Error(ErrorKind::InvalidArgument, "count_by_argument needs T >= 1");
  const PrecisionContext inner = PrecisionContext::for_digits(std::min(ctx.target_digits(), 20));
  const Integrand f{inner};
  constexpr int kMaxShifts = 5;
  for (int shift = 0; shift <= kMaxShifts; ++shift) {
    HpReal height = T.with_bits(ctx.bits()) + HpReal(0.05 * shift, ctx.bits());
    const double h = height.to_double();
    if (z_changes_sign_near(h, scan_context())) continue;
    try {
      const cplx c0(-1.0, kBottomEps), c1(2.0, kBottomEps), c2(2.0, h), c3(-1.0, h);
      double total = 0.0;
      total += edge_arg_change(f, c0, c1, 0.5);
      total += edge_arg_change(f, c1, c2, 1.0);
      total += edge_arg_change(f, c2, c3, 0.5);
      total += edge_arg_change(f, c3, c0, 1.0);
      const double winding = total / (2.0 * std::numbers::pi);
      const double rounded = std::round(winding);
      if (std::fabs(winding - rounded) > 1e-3) continue;
      // zeros minus poles inside; s = 1 sits below the bottom edge
      const cplx pole(1.0, 0.0);
      const bool pole_inside = pole.real() > c0.real() && pole.real() < c1.real() &&
                               pole.imag() > c0.imag() && pole.imag() < c2.imag();
      const long poles = pole_inside ? 1 : 0;
      return {static_cast<long>(rounded) + poles, std::move(height), shift, poles};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ContourNearZero) throw;
    }
  }
  throw Error(ErrorKind::ContourNearZero,
              "no clean contour height within " + std::to_string(0.05 * kMaxShifts) + " of T = " +
                  T.to_string(10));
}

HpReal rvm_estimate(const HpReal& T) {
  if (T < 2.0) throw Error(ErrorKind::InvalidArgument, "rvm_estimate needs T >= 2");
  const long p = T.bits();
  const HpReal x = T / (const_pi(p) * 2);
  return x * log(x) - x + HpReal(0.875, p);
}

namespace {

struct Grid {
  double step;
  std::vector<double> t;
  std::vector<int> sign;
};

Grid evaluate_grid(double height, double step, const Grid* coarse) {
  Grid g;
  const long n = static_cast<long>(std::ceil(height / step));
  g.step = height / static_cast<double>(n);
  g.t.resize(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) g.t[i] = g.step * static_cast<double>(i);
  g.t.back() = height;
  const PrecisionContext sctx = scan_context();
  const bool reuse = coarse != nullptr && coarse->t.size() * 2 - 1 == g.t.size();
  g.sign = parallel_map(g.t.size(), [&](size_t i) {
    if (reuse && i % 2 == 0) return coarse->sign[i / 2];
    return hardy_z_value(HpReal(g.t[i], sctx.bits()), sctx).sign();
  });
  return g;
}

std::vector<size_t> sign_changes(const Grid& g) {
  std::vector<size_t> out;
  for (size_t i = 0; i + 1 < g.t.size(); ++i) {
    if (g.sign[i] * g.sign[i + 1] < 0) out.push_back(i);
  }
  return out;
}

}  // namespace

ZeroScan scan(const HpReal& T, const PrecisionContext& ctx) {
  if (T < 10.0 || T > 1000.0) throw Error(ErrorKind::OutOfRange, "scan height must lie in [10, 1000]");
  ArgumentCount count = count_by_argument(T, ctx);
  const double height = count.height_used.to_double();

  double step = 0.25 / std::log(T.to_double());
  Grid grid = evaluate_grid(height, step, nullptr);
  std::vector<size_t> brackets = sign_changes(grid);
  for (int refinement = 0; static_cast<long>(brackets.size()) != count.count; ++refinement) {
    if (refinement == 2) {
      throw Error(ErrorKind::GridTooCoarse,
                  std::to_string(brackets.size()) + " sign changes against " +
                      std::to_string(count.count) + " zeros by the argument principle");
    }
    step /= 2;
    grid = evaluate_grid(height, step, &grid);
    brackets = sign_changes(grid);
  }

  const PrecisionContext sctx = scan_context();
  std::vector<ZeroRecord> found = parallel_map(brackets.size(), [&](size_t b) {
    const size_t i = brackets[b];
    const HpReal a(grid.t[i], sctx.bits());
    const HpReal c(grid.t[i + 1], sctx.bits());
    const HpReal mid = bisect_zero(a, c, HpReal(1e-3, sctx.bits()), sctx);
    return refine_zero(mid, ctx);
  });

  ZeroScan out{T.with_bits(ctx.bits()), {}, static_cast<long>(brackets.size()), std::move(count),
               grid.step};
  for (auto& z : found) {
    if (z.t > T) continue;
    if (!out.zeros.empty() && !(z.t > out.zeros.back().t)) {
      throw Error(ErrorKind::GridTooCoarse, "two brackets refined to the same zero");
    }
    z.index = static_cast<long>(out.zeros.size()) + 1;
    out.zeros.push_back(std::move(z));
  }
  return out;
}

std::vector<ZeroRecord> scan_zeros(const HpReal& T, const PrecisionContext& ctx) {
  return scan(T, ctx).zeros;
}

void audit_zeros(std::vector<ZeroRecord>& zeros, const PrecisionContext& ctx) {
  const long p = ctx.bits();
  detail::parallel_for(zeros.size(), [&](size_t i) {
    ZeroRecord& z = zeros[i];
    std::vector<HpReal> neighbors;
    HpReal gap(1.0, p);
    if (i > 0) neighbors.push_back(zeros[i - 1].t);
    if (i + 1 < zeros.size()) neighbors.push_back(zeros[i + 1].t);
    for (const auto& nt : neighbors) gap = min(gap, abs(nt - z.t));
    const HpReal r = min(HpReal(1.0 / 32.0, p), gap / 4);

    if (!z.zeta_prime_at_rho) {
      z.zeta_prime_at_rho = zeta_deriv(z.rho, 1, ctx);
      z.zeta_prime_abs = abs(*z.zeta_prime_at_rho);
    }
    if (!z.zeta_at_rho_abs) z.zeta_at_rho_abs = abs(zeta_value(z.rho, ctx));
    try {
      z.winding = multiplicity_probe(z.rho, r, ctx, neighbors);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonIntegerWinding) throw;
      z.winding = 0;
    }
    const bool simple = z.winding == 1 && z.zeta_prime_abs > kSimplicityFloor;
    z.status = simple ? ZeroStatus::SimpleConfirmed : ZeroStatus::Suspect;
  });
}

CountReport density_report(const ZeroScan& s) {
  CountReport r{s.T,
                s.count.height_used,
                s.n_sign_changes,
                s.count.count,
                static_cast<long>(s.zeros.size()),
                static_cast<long>(s.zeros.size()),
                rvm_estimate(s.T),
                0,
                std::nullopt,
                s.n_sign_changes == s.count.count,
                s.count.count == 0,
                false,
                false};
  for (const auto& z : s.zeros) {
    if (z.status == ZeroStatus::SimpleConfirmed) ++r.n_simple;
  }
  if (r.n_winding > 0) {
    const long p = s.T.bits();
    HpReal ratio = HpReal::from_int(r.n_simple, p) / r.n_winding;
    r.meets_lower_density = ratio >= kDensityLow;
    r.meets_upper_density = ratio >= kDensityHigh;
    r.ratio_simple = std::move(ratio);
  }
  return r;
}

CountReport density_report(const HpReal& T, const PrecisionContext& ctx) {
  ZeroScan s = scan(T, ctx);
  audit_zeros(s.zeros, ctx);
  return density_report(s);
}

}  // namespace rzeta
