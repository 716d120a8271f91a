// Command-line front end: one subcommand per verification suite.
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.

#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "burgess/approx.hpp"
#include "burgess/bounds.hpp"
#include "burgess/characters.hpp"
#include "burgess/moments.hpp"
#include "burgess/report.hpp"
#include "burgess/runs.hpp"

namespace {

using namespace burgess;
using arith::u64;
using report::Format;
using report::ReportRow;
using report::Writer;

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", o.out_path, "Output file (default: stdout)");
}

// Writer plus the stream it may own.
struct Sink {
  std::unique_ptr<std::ofstream> file;
  std::unique_ptr<Writer> writer;
};

Sink make_sink(const OutputOptions& o) {
  Sink s;
  const Format fmt = o.format == "json" ? Format::kJson : Format::kCsv;
  if (o.out_path.empty()) {
    s.writer = std::make_unique<Writer>(std::cout, fmt);
  } else {
    s.file = std::make_unique<std::ofstream>(o.out_path);
    if (!*s.file)
      throw std::invalid_argument("cannot open output file: " + o.out_path);
    s.writer = std::make_unique<Writer>(*s.file, fmt);
  }
  return s;
}

int cmd_moment(u64 p, u64 e, u64 h, u64 r, const OutputOptions& out) {
  const auto chi = characters::make_character(p, e);
  const auto res = moments::moment(chi, {h, r});
  const auto bound = moments::moment_upper_bound(p, {h, r});
  const bool ok = res.value <= bound.hi() + res.abs_error;
  ReportRow row;
  row.add("p", p).add("e", e).add("h", h).add("r", r);
  row.add("value", res.value).add("exact", res.exact);
  row.add("abs_error", res.abs_error);
  row.add_interval("bound", bound);
  row.add("ok", ok);
  auto sink = make_sink(out);
  sink.writer->write(row);
  sink.writer->finish();
  return ok ? 0 : 1;
}

int cmd_verify_lemma2(u64 p_max, u64 h_max, u64 r_max, unsigned jobs,
                      bool emit_cases, const OutputOptions& out) {
  auto sink = make_sink(out);
  std::function<void(const moments::Lemma2Case&)> case_sink;
  if (emit_cases) {
    case_sink = [&](const moments::Lemma2Case& c) {
      ReportRow row;
      row.add("p", c.p).add("e", c.e).add("h", c.h).add("r", c.r);
      row.add("value", c.value).add("abs_error", c.abs_error);
      row.add("bound_hi", c.bound_hi);
      row.add("ok", c.value <= c.bound_hi + c.abs_error);
      sink.writer->write(row);
    };
  }
  const auto summary =
      moments::verify_lemma2(p_max, h_max, r_max, jobs, case_sink);
  if (!emit_cases) {
    ReportRow row;
    row.add("p_max", p_max).add("h_max", h_max).add("r_max", r_max);
    row.add("cases", summary.cases).add("failures", summary.failures);
    sink.writer->write(row);
  }
  sink.writer->finish();
  std::cerr << "lemma2 sweep: " << summary.cases << " cases, "
            << summary.failures << " failures\n";
  for (const auto& c : summary.failed)
    std::cerr << "  FAIL p=" << c.p << " e=" << c.e << " h=" << c.h
              << " r=" << c.r << " value=" << report::format_double(c.value)
              << " bound=" << report::format_double(c.bound_hi) << "\n";
  return summary.failures == 0 ? 0 : 1;
}

int cmd_fractions(std::int64_t a, std::int64_t b, double x,
                  const OutputOptions& out) {
  const u64 count = approx::distinct_fraction_count(a, b, x);
  ReportRow row;
  row.add("a", a).add("b", b).add("x", x);
  row.add("count", count);
  bool ok = true;
  if (x >= 7.0) {
    const auto lb = approx::fraction_count_lower_bound(x);
    row.add_interval("lower_bound", lb);
    ok = double(count) >= lb.hi();
  } else {
    row.add_empty("lower_bound_lo").add_empty("lower_bound_hi");
  }
  row.add("ok", ok);
  auto sink = make_sink(out);
  sink.writer->write(row);
  sink.writer->finish();
  return ok ? 0 : 1;
}

int cmd_approx(u64 N, u64 p, double A, const OutputOptions& out) {
  if (p == 0 || p > u64(std::numeric_limits<arith::i64>::max()))
    throw std::invalid_argument("approx: p must be in [1, 2^63)");
  const arith::ReducedFraction theta{arith::i64(N), arith::i64(p)};
  const auto res = approx::dirichlet_approx(theta, A);
  // |a theta - b| <= 1/A as |a num - b den| * A <= den (integers are exact)
  const arith::i128 diff128 =
      arith::i128(res.a) * theta.num() - arith::i128(res.b) * theta.den();
  const double diff = double(diff128 < 0 ? -diff128 : diff128);
  const bool ok = res.a >= 1 && double(res.a) < A &&
                  diff * A <= double(theta.den()) * (1.0 + 1e-15);
  ReportRow row;
  row.add("n", N).add("p", p).add("A", A);
  row.add("theta_num", std::int64_t(theta.num()));
  row.add("theta_den", std::int64_t(theta.den()));
  row.add("a", std::int64_t(res.a)).add("b", std::int64_t(res.b));
  row.add("ok", ok);
  auto sink = make_sink(out);
  sink.writer->write(row);
  sink.writer->finish();
  return ok ? 0 : 1;
}

int cmd_intervals(u64 p, u64 e, u64 N, u64 H, u64 h, const OutputOptions& out) {
  const auto chi = characters::make_character(p, e);
  const auto fam = approx::build_interval_family(p, N, H, h, &chi);
  auto sink = make_sink(out);
  for (const auto& iv : fam.intervals) {
    ReportRow row;
    row.add("q", iv.q).add("t", iv.t);
    row.add("lo_num", std::int64_t(iv.lo.num()))
        .add("lo_den", std::int64_t(iv.lo.den()));
    row.add("hi_num", std::int64_t(iv.hi.num()))
        .add("hi_den", std::int64_t(iv.hi.den()));
    row.add("first_int", iv.first_integer).add("last_int", iv.last_integer);
    row.add("value_num", iv.value.num()).add("value_den", iv.value.den());
    sink.writer->write(row);
  }
  sink.writer->finish();
  std::cerr << "intervals: " << fam.intervals.size()
            << " disjoint, lower bound " << fam.count_lower_bound.to_string()
            << ", a=" << fam.a << " b=" << fam.b
            << ", chi constant on each\n";
  const bool ok = double(fam.intervals.size()) >= fam.count_lower_bound.hi();
  return ok ? 0 : 1;
}

int cmd_bounds(const std::string& p_text, const OutputOptions& out) {
  const auto p = bounds::PrimeMagnitude::parse(p_text);
  if (!p.at_least(5e4))
    throw std::invalid_argument("bounds: requires p >= 5*10^4");
  const auto rep = bounds::bound_report(p);
  ReportRow row;
  row.add("p", p_text);
  row.add("h", rep.h).add("r", rep.r);
  row.add_interval("X", rep.X);
  row.add_interval("f", rep.f);
  row.add_interval("g", rep.g);
  row.add_interval("cg", rep.cg);
  row.add_interval("burgess", rep.burgess);
  row.add_interval("brauer", rep.brauer);
  auto sink = make_sink(out);
  sink.writer->write(row);
  sink.writer->finish();
  return 0;
}

int cmd_thresholds(const OutputOptions& out) {
  const auto rep = bounds::theorem2_report();
  auto sink = make_sink(out);
  bool all_ok = true;
  for (const auto& r : rep.rows) {
    ReportRow row;
    row.add("p", r.p_text);
    if (r.constant > 0)
      row.add("constant", r.constant);
    else
      row.add_empty("constant");
    row.add_interval("cg", r.cg);
    row.add("verified", std::string(verdict_name(r.verified)));
    sink.writer->write(row);
    if (r.constant > 0 && r.verified != Verdict::kTrue) all_ok = false;
  }
  sink.writer->finish();
  std::cerr << "C = " << rep.c_enclosure.to_string()
            << ", g decreasing on grid: "
            << verdict_name(rep.g_decreasing_on_grid) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_max_run(u64 p, const std::string& order, const OutputOptions& out) {
  runs::RunRecord rec;
  if (order == "2") {
    rec = runs::quadratic_max_run(p);
  } else if (order == "all") {
    rec = runs::max_run_over_characters(p);
  } else {
    runs::ScanOptions opts;
    opts.p_min = opts.p_max = p;
    opts.filter = runs::OrderFilter::kOrderK;
    opts.k = std::stoull(order);
    runs::RunRecord found;
    bool any = false;
    runs::scan_primes(opts, [&](const runs::RunRecord& r) {
      found = r;
      any = true;
    });
    if (!any)
      throw std::invalid_argument("max-run: no character of that order mod p");
    rec = found;
  }
  auto sink = make_sink(out);
  sink.writer->write(report::run_record_row(rec));
  sink.writer->finish();
  return 0;
}

int cmd_scan(u64 p_min, u64 p_max, const std::string& order, unsigned jobs,
             const OutputOptions& out) {
  runs::ScanOptions opts;
  opts.p_min = p_min;
  opts.p_max = p_max;
  opts.jobs = jobs;
  if (order == "2") {
    opts.filter = runs::OrderFilter::kQuadratic;
  } else if (order == "all") {
    opts.filter = runs::OrderFilter::kAll;
  } else {
    opts.filter = runs::OrderFilter::kOrderK;
    opts.k = std::stoull(order);
  }
  auto sink = make_sink(out);
  const auto summary = runs::scan_primes(opts, [&](const runs::RunRecord& r) {
    sink.writer->write(report::run_record_row(r));
  });
  sink.writer->finish();
  std::cerr << "scan: " << summary.primes << " primes, "
            << summary.brauer_violations << " Brauer violations, "
            << summary.burgess_violations << "/" << summary.burgess_checked
            << " empirical Burgess violations\n";
  std::cerr << "record table (new maximum H):\n";
  for (const auto& rec : summary.records)
    std::cerr << "  p=" << rec.p << " H=" << rec.H << " N=" << rec.N
              << " e=" << rec.e << "\n";
  return summary.brauer_violations == 0 ? 0 : 1;
}

int cmd_witness(u64 min_run, u64 limit, const OutputOptions& out) {
  const auto wit = runs::find_prop1_witness(min_run, limit);
  if (!wit) {
    std::cerr << "witness: search exhausted below " << limit << "\n";
    return 1;
  }
  ReportRow row;
  row.add("p", wit->p).add("e", wit->e).add("N", wit->N);
  row.add("H", wit->H).add("h", wit->h);
  row.add("X", double(wit->H) / (2.0 * double(wit->h)));
  auto sink = make_sink(out);
  sink.writer->write(row);
  sink.writer->finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Explicit verification of character-run bounds: moments, interval "
      "families, rigorous constants, and prime sweeps"};
  app.require_subcommand(1);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  u64 p = 0, e = 0, h = 1, r = 1, N = 0, H = 0;

  OutputOptions out_moment;
  auto* moment = app.add_subcommand("moment", "Compute S(chi,h,r) and its bound");
  moment->set_help_flag("--help", "Print help");  // frees -h for the window length
  moment->add_option("--p", p)->required();
  moment->add_option("--e", e)->required();
  moment->add_option("--h", h)->required();
  moment->add_option("--r", r)->required();
  add_output_options(moment, out_moment);

  u64 vl_pmax = 2000, vl_hmax = 5, vl_rmax = 2;
  unsigned vl_jobs = hw;
  bool vl_cases = false;
  OutputOptions out_vl;
  auto* vl = app.add_subcommand("verify-lemma2",
                                "Moment-vs-bound sweep over all characters");
  vl->set_help_flag("--help", "Print help");
  vl->add_option("--p-max", vl_pmax);
  vl->add_option("--h-max", vl_hmax);
  vl->add_option("--r-max", vl_rmax);
  vl->add_option("--jobs", vl_jobs);
  vl->add_flag("--cases", vl_cases, "Emit one row per case");
  add_output_options(vl, out_vl);

  std::int64_t fa = 1, fb = 0;
  double fx = 7.0;
  OutputOptions out_fr;
  auto* fr =
      app.add_subcommand("fractions", "Count distinct (a t + b)/q, q <= X");
  fr->add_option("--a", fa)->required();
  fr->add_option("--b", fb)->required();
  fr->add_option("--x-max", fx)->required();
  add_output_options(fr, out_fr);

  u64 an = 0, ap = 0;
  double aA = 2.0;
  OutputOptions out_ap;
  auto* apx = app.add_subcommand("approx", "Dirichlet approximation of N/p");
  apx->add_option("--n", an)->required();
  apx->add_option("--p", ap)->required();
  apx->add_option("--a", aA, "The bound A > 1")->required();
  add_output_options(apx, out_ap);

  u64 ih = 1;
  OutputOptions out_iv;
  auto* iv = app.add_subcommand("intervals",
                                "Build and verify the disjoint I(q,t) family");
  iv->set_help_flag("--help", "Print help");
  iv->add_option("--p", p)->required();
  iv->add_option("--e", e)->required();
  iv->add_option("--n", N, "Left endpoint N")->required();
  iv->add_option("--H", H)->required();
  iv->add_option("--h", ih)->required();
  add_output_options(iv, out_iv);

  std::string bp;
  OutputOptions out_b;
  auto* bd = app.add_subcommand("bounds", "Rigorous f, g, C g, Burgess, Brauer");
  bd->add_option("--p", bp, "Prime magnitude, e.g. 1e6 or 5e18")->required();
  add_output_options(bd, out_b);

  OutputOptions out_t;
  auto* th = app.add_subcommand("thresholds", "Certify the headline constants");
  add_output_options(th, out_t);

  std::string mr_order = "2";
  OutputOptions out_mr;
  auto* mr = app.add_subcommand("max-run", "Longest constant run mod p");
  mr->add_option("--p", p)->required();
  mr->add_option("--order", mr_order, "2, all, or an order k");
  add_output_options(mr, out_mr);

  u64 sc_min = 3, sc_max = 1000;
  std::string sc_order = "2";
  unsigned sc_jobs = hw;
  OutputOptions out_sc;
  auto* sc = app.add_subcommand("scan", "Sweep primes for maximal runs");
  sc->add_option("--p-min", sc_min);
  sc->add_option("--p-max", sc_max)->required();
  sc->add_option("--order", sc_order, "2, all, or an order k");
  sc->add_option("--jobs", sc_jobs);
  add_output_options(sc, out_sc);

  u64 wt_min = 14, wt_limit = 10'000'000;
  OutputOptions out_wt;
  auto* wt = app.add_subcommand("witness",
                                "Smallest prime usable by the interval family");
  wt->add_option("--min-run", wt_min);
  wt->add_option("--limit", wt_limit);
  add_output_options(wt, out_wt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (moment->parsed()) return cmd_moment(p, e, h, r, out_moment);
    if (vl->parsed())
      return cmd_verify_lemma2(vl_pmax, vl_hmax, vl_rmax, vl_jobs, vl_cases,
                               out_vl);
    if (fr->parsed()) return cmd_fractions(fa, fb, fx, out_fr);
    if (apx->parsed()) return cmd_approx(an, ap, aA, out_ap);
    if (iv->parsed()) return cmd_intervals(p, e, N, H, ih, out_iv);
    if (bd->parsed()) return cmd_bounds(bp, out_b);
    if (th->parsed()) return cmd_thresholds(out_t);
    if (mr->parsed()) return cmd_max_run(p, mr_order, out_mr);
    if (sc->parsed()) return cmd_scan(sc_min, sc_max, sc_order, sc_jobs, out_sc);
    if (wt->parsed()) return cmd_witness(wt_min, wt_limit, out_wt);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::overflow_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    // logic/runtime errors here mean a verification invariant failed
    std::cerr << "verification failure: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
