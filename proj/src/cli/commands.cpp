#include "zeta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "zeta/laurent.hpp"
#include "zeta/mobius.hpp"
#include "zeta/parallel.hpp"
#include "zeta/stieltjes.hpp"
#include "zeta/zero_finder.hpp"
#include "zeta/zeta_engine.hpp"

namespace rzeta::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr double kLaurentResidualRadius = 1.0 / 32.0;
constexpr int kLaurentSamples = 64;
constexpr int kMaxLaurentTerms = 12;
constexpr int kPhiOrders = 2;

PrecisionContext context_for(const RunConfig& cfg) { return PrecisionContext::for_digits(cfg.digits); }

std::string num(const HpReal& x, int digits) { return x.to_string(digits); }

json cnum(const HpComplex& z, int digits) {
  return json{{"re", num(z.re, digits)}, {"im", num(z.im, digits)}};
}

bool is_usage_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::OutOfRange:
    case ErrorKind::LimitTooLarge:
    case ErrorKind::UnknownIndex:
    case ErrorKind::CacheFormat:
      return true;
    default:
      return false;
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.kind()) ? kExitUsage : kExitFinding;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

void print_zero_rows(const std::vector<ZeroRecord>& zeros, int digits, std::ostream& out) {
  out << "index,t,abs_zeta_prime,winding,status\n";
  for (const auto& z : zeros) {
    out << z.index << ',' << num(z.t, digits) << ',' << num(z.zeta_prime_abs, digits) << ','
        << z.winding << ',' << to_string(z.status) << '\n';
  }
}

json zero_rows_json(const std::vector<ZeroRecord>& zeros, int digits) {
  json arr = json::array();
  for (const auto& z : zeros) {
    arr.push_back({{"index", z.index},
                   {"t", num(z.t, digits)},
                   {"abs_zeta_prime", num(z.zeta_prime_abs, digits)},
                   {"winding", z.winding},
                   {"status", std::string(to_string(z.status))}});
  }
  return arr;
}

json report_json(const CountReport& r, int digits) {
  return {{"T", num(r.T, digits)},
          {"height_used", num(r.height_used, digits)},
          {"n_sign_changes", r.n_sign_changes},
          {"n_winding", r.n_winding},
          {"n_records", r.n_records},
          {"n_distinct", r.n_distinct},
          {"rvm_estimate", num(r.rvm_estimate, 12)},
          {"n_simple", r.n_simple},
          {"ratio_simple", r.ratio_simple ? json(num(*r.ratio_simple, 12)) : json(nullptr)},
          {"counts_match", r.counts_match},
          {"empty_range", r.empty_range},
          {"ratio_ge_19_29", r.meets_lower_density},
          {"ratio_ge_0_84665", r.meets_upper_density}};
}

void print_report_csv(const CountReport& r, int digits, std::ostream& out) {
  out << "T,height_used,n_sign_changes,n_winding,n_records,n_distinct,rvm_estimate,n_simple,"
         "ratio_simple,counts_match,ratio_ge_19_29,ratio_ge_0_84665\n";
  out << num(r.T, digits) << ',' << num(r.height_used, digits) << ',' << r.n_sign_changes << ','
      << r.n_winding << ',' << r.n_records << ',' << r.n_distinct << ',' << num(r.rvm_estimate, 12)
      << ',' << r.n_simple << ',' << (r.ratio_simple ? num(*r.ratio_simple, 12) : "") << ','
      << (r.counts_match ? "true" : "false") << ',' << (r.meets_lower_density ? "true" : "false")
      << ',' << (r.meets_upper_density ? "true" : "false") << '\n';
}

void emit_zeros_and_report(const RunConfig& cfg, const std::vector<ZeroRecord>& zeros,
                           const CountReport& report, std::ostream& out) {
  if (cfg.format == OutFormat::Json) {
    json doc{{"zeros", zero_rows_json(zeros, cfg.digits)}, {"report", report_json(report, cfg.digits)}};
    out << doc.dump(2) << '\n';
    return;
  }
  print_zero_rows(zeros, cfg.digits, out);
  out << '\n';
  print_report_csv(report, cfg.digits, out);
}

std::vector<ZeroRecord> cached_zeros(const RunConfig& cfg, const PrecisionContext& ctx) {
  const std::string path = resolve_cache_path(cfg);
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::CacheFormat, "zero cache '" + path + "' does not exist; run `zeros` first");
  }
  ZeroCache cache = read_zero_cache_file(path, ctx.bits());
  if (cache.digits != cfg.digits) {
    throw Error(ErrorKind::CacheFormat, "cache holds digits=" + std::to_string(cache.digits) +
                                            ", run asks for " + std::to_string(cfg.digits));
  }
  if (cache.zeros.empty()) throw Error(ErrorKind::CacheFormat, "zero cache '" + path + "' is empty");
  return std::move(cache.zeros);
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.digits < 10 || cfg.digits > 200) {
    throw Error(ErrorKind::InvalidArgument, "--digits must lie in [10, 200]");
  }
  if (!(cfg.t_max > 0.0) || cfg.t_max > 1000.0) {
    throw Error(ErrorKind::InvalidArgument, "--t-max must lie in (0, 1000]");
  }
  if (cfg.k_max < 1 || cfg.k_max > MobiusTable::kMaxLimit) {
    throw Error(ErrorKind::InvalidArgument, "--k-max must lie in [1, 1e8]");
  }
}

std::string resolve_cache_path(const RunConfig& cfg) {
  if (!cfg.cache_path.empty()) return cfg.cache_path;
  if (const char* env = std::getenv("ZETA_CACHE"); env != nullptr && *env != '\0') return env;
  return "zeta-zeros.cache";
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    const PrecisionContext ctx = context_for(cfg);
    ZeroScan s;
    try {
      s = scan(HpReal(cfg.t_max, ctx.bits()), ctx);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GridTooCoarse) throw;
      out << "count mismatch: " << e.what() << '\n';
      return kExitFinding;
    }
    audit_zeros(s.zeros, ctx);
    const CountReport report = density_report(s);
    const std::string path = resolve_cache_path(cfg);
    const long appended = append_zero_cache(path, cfg.digits, s.zeros);
    err << "cache " << path << ": " << appended << " record(s) appended\n";
    emit_zeros_and_report(cfg, s.zeros, report, out);
    return report.failed() ? kExitFinding : kExitOk;
  });
}

int cmd_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    const PrecisionContext ctx = context_for(cfg);
    std::vector<ZeroRecord> zeros;
    for (auto& z : cached_zeros(cfg, ctx)) {
      if (z.t > cfg.t_max) break;
      ZeroRecord fresh;
      fresh.index = z.index;
      fresh.t = z.t;
      fresh.rho = z.rho;
      zeros.push_back(std::move(fresh));
    }
    if (zeros.empty()) {
      throw Error(ErrorKind::CacheFormat, "no cached zeros up to T = " + std::to_string(cfg.t_max));
    }
    audit_zeros(zeros, ctx);
    const HpReal T(cfg.t_max, ctx.bits());
    const ArgumentCount count = count_by_argument(T, ctx);
    ZeroScan view{T, zeros, static_cast<long>(zeros.size()), count, 0.0};
    const CountReport report = density_report(view);
    emit_zeros_and_report(cfg, zeros, report, out);
    const bool any_suspect = report.n_simple != report.n_records;
    return (any_suspect || report.failed()) ? kExitFinding : kExitOk;
  });
}

int cmd_laurent(const RunConfig& cfg, long zero_index, int n_terms, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    if (n_terms < 0 || n_terms > kMaxLaurentTerms) {
      throw Error(ErrorKind::InvalidArgument, "--terms must lie in [0, 12]");
    }
    const PrecisionContext ctx = context_for(cfg);
    const int d = cfg.digits;
    const std::vector<ZeroRecord> zeros = cached_zeros(cfg, ctx);
    const auto it = std::find_if(zeros.begin(), zeros.end(),
                                 [&](const ZeroRecord& z) { return z.index == zero_index; });
    if (it == zeros.end()) {
      throw Error(ErrorKind::UnknownIndex, "zero index " + std::to_string(zero_index) + " not in cache");
    }
    std::vector<HpComplex> neighbors{conj(it->rho)};
    if (it != zeros.begin()) neighbors.push_back(std::prev(it)->rho);
    if (std::next(it) != zeros.end()) neighbors.push_back(std::next(it)->rho);

    const LaurentExpansion e = build_expansion(it->rho, n_terms, neighbors, ctx);
    const HpReal r(kLaurentResidualRadius, ctx.bits());

    json coeffs = json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(cnum(c, d));
    json residuals = json::object();
    for (int used = 0; used <= n_terms; ++used) {
      residuals[std::to_string(used)] =
          num(reconstruction_residual(e, r, used - 1, kLaurentSamples, ctx), 6);
    }

    json phi = json::object();
    const int phi_orders = std::min(n_terms, kPhiOrders);
    if (phi_orders > 0) {
      std::vector<long> ladder;
      for (long k : default_checkpoints()) {
        if (k <= cfg.k_max) ladder.push_back(k);
      }
      if (ladder.empty()) ladder.push_back(cfg.k_max);
      const MobiusTable table = sieve_mobius(ladder.back());
      for (int n = 0; n < phi_orders; ++n) {
        PartialSumSeries ps = phi_series(e.rho, e.residue, n, ladder, table, ctx);
        ps.set_oracle(phi_from_coefficient(e.coeffs[n], n));
        json raw = json::array(), smooth = json::array(), dist = json::array();
        for (size_t i = 0; i < ps.checkpoints.size(); ++i) {
          raw.push_back(cnum(ps.raw[i], 16));
          smooth.push_back(cnum(ps.smoothed[i], 16));
          dist.push_back(num(ps.distance_to_oracle[i], 6));
        }
        phi[std::to_string(n)] = {{"oracle", cnum(phi_from_coefficient(e.coeffs[n], n), d)},
                                  {"checkpoints", ps.checkpoints},
                                  {"raw", raw},
                                  {"smoothed", smooth},
                                  {"oscillation", num(ps.oscillation, 6)},
                                  {"distance_to_oracle", dist}};
      }
    }

    json doc{{"index", zero_index},
             {"rho", cnum(e.rho, d)},
             {"residue", cnum(e.residue, d)},
             {"coeffs", coeffs},
             {"radius", num(e.radius, d)},
             {"residual_radius", num(r, 6)},
             {"residuals", residuals},
             {"phi_diagnostics", phi},
             {"phi_convergence", "not asserted: partial sums are recorded as diagnostics only"}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  });
}

int cmd_stieltjes(const RunConfig& cfg, int n_max, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    if (n_max < 0 || n_max > 20) throw Error(ErrorKind::OutOfRange, "--n-max must lie in [0, 20]");
    const PrecisionContext ctx = context_for(cfg);
    const StieltjesTable t = bound_check(n_max, ctx);
    const int d = cfg.digits;
    if (cfg.format == OutFormat::Json) {
      json rows = json::array();
      for (int n = 0; n <= n_max; ++n) {
        rows.push_back({{"n", n},
                        {"gamma_n", num(t.gammas[n], d)},
                        {"bound", t.bound[n] ? json(num(*t.bound[n], d)) : json(nullptr)},
                        {"margin", t.bound_margin[n] ? json(num(*t.bound_margin[n], d)) : json(nullptr)}});
      }
      out << rows.dump(2) << '\n';
    } else {
      out << "n,gamma_n,bound,margin\n";
      for (int n = 0; n <= n_max; ++n) {
        out << n << ',' << num(t.gammas[n], d) << ',' << (t.bound[n] ? num(*t.bound[n], d) : "") << ','
            << (t.bound_margin[n] ? num(*t.bound_margin[n], d) : "") << '\n';
      }
    }
    return t.all_margins_positive() ? kExitOk : kExitFinding;
  });
}

int cmd_mertens(const RunConfig& cfg, long x, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(cfg);
    if (x < 1 || x > cfg.k_max) {
      throw Error(ErrorKind::OutOfRange,
                  "x = " + std::to_string(x) + " outside [1, k_max = " + std::to_string(cfg.k_max) + "]");
    }
    const MobiusTable table = sieve_mobius(x);
    const long m = mertens(x, table);
    if (cfg.format == OutFormat::Json) {
      out << json{{"x", x}, {"mertens", m}}.dump(2) << '\n';
    } else {
      out << m << '\n';
    }
    return kExitOk;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeros of the Riemann zeta function, Laurent data of 1/zeta, Stieltjes constants"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "csv";
  app.add_option("--digits", cfg.digits, "decimal digits to certify (10..200)");
  app.add_option("--t-max", cfg.t_max, "scan height (<= 1000)");
  app.add_option("--k-max", cfg.k_max, "Moebius sieve limit");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--cache", cfg.cache_path, "zero cache file (default $ZETA_CACHE)");
  app.add_option("--workers", cfg.workers, "worker thread cap (0 = all cores)");

  auto* zeros = app.add_subcommand("zeros", "scan, refine and audit zeros up to --t-max; extend the cache");
  auto* audit = app.add_subcommand("audit", "re-audit cached zeros up to --t-max");
  auto* laurent = app.add_subcommand("laurent", "Laurent expansion of 1/zeta at a cached zero (JSON)");
  long index = 0;
  int terms = 8;
  laurent->add_option("--index", index, "1-based zero index")->required();
  laurent->add_option("--terms", terms, "regular coefficients c_0..c_{terms-1} (0..12)");
  auto* stieltjes = app.add_subcommand("stieltjes", "Stieltjes constants with the factorial bound");
  int n_max = 20;
  stieltjes->add_option("--n-max", n_max, "largest index (0..20)");
  auto* mertens_cmd = app.add_subcommand("mertens", "Mertens function M(x)");
  long x = 0;
  mertens_cmd->add_option("--x", x, "argument (<= --k-max)")->required();
  for (auto* sub : {zeros, audit, laurent, stieltjes, mertens_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.format = format == "json" ? OutFormat::Json : OutFormat::Csv;
  set_worker_count(cfg.workers);

  if (*zeros) return cmd_zeros(cfg, out, err);
  if (*audit) return cmd_audit(cfg, out, err);
  if (*laurent) return cmd_laurent(cfg, index, terms, out, err);
  if (*stieltjes) return cmd_stieltjes(cfg, n_max, out, err);
  return cmd_mertens(cfg, x, out, err);
}

}  // namespace rzeta::cli
