// rzlab: command-line front end.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "rzlab/phase.hpp"
#include "rzlab/rzeta.hpp"
#include "rzlab/specfun.hpp"
#include "rzlab/store.hpp"
#include "rzlab/thetafun.hpp"
#include "rzlab/verify.hpp"
#include "rzlab/zerolab.hpp"

namespace {

using namespace rzlab;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string num(cplx z) { return num(z.real()) + "," + num(z.imag()); }

cplx parse_complex(const std::string& text, const char* flag) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re) || !(in >> comma) || comma != ',' || !(in >> im) || !in.eof() ||
      !std::isfinite(re) || !std::isfinite(im))
    throw UsageError(std::string(flag) + ": expected RE,IM, got '" + text + "'");
  return {re, im};
}

// Output goes to --out when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error("cannot open " + path + " for writing");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string require_store(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("RZLAB_STORE"); env && *env) return env;
  throw UsageError("--store: no store path given and RZLAB_STORE is not set");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for Riemann's auxiliary function R(s)"};
  app.require_subcommand(1);
  int threads = 0;
  double precision = 1e-9;
  std::string out_path;
  app.add_option("--threads", threads, "worker threads (default: OpenMP default)")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", precision, "requested absolute error of evaluations")
      ->check(CLI::Range(1e-12, 1e-4));
  app.add_option("--out", out_path, "output file (default stdout)");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate R(s) and R'(s)");
  std::string s_text, method = "shifted";
  eval->add_option("--s", s_text, "point RE,IM")->required();
  eval->add_option("--method", method, "direct | shifted")
      ->check(CLI::IsMember({"direct", "shifted"}));

  // theta
  auto* theta = app.add_subcommand("theta", "evaluate phi(x) and phi'(x)");
  double x = 0.0;
  theta->add_option("--x", x, "x > 0")->required();

  // zeros scan
  auto* zeros = app.add_subcommand("zeros", "zero store operations");
  zeros->require_subcommand(1);
  auto* scan = zeros->add_subcommand("scan", "find all zeros of R in a region");
  double tmin = 0.0, tmax = 0.0;
  std::optional<double> smin, smax;
  std::string store_path;
  scan->add_option("--tmin", tmin)->required();
  scan->add_option("--tmax", tmax)->required();
  scan->add_option("--smin", smin);
  scan->add_option("--smax", smax);
  scan->add_option("--store", store_path, "zero store (default $RZLAB_STORE)");

  // counts
  auto* counts = app.add_subcommand("counts", "sided zero counts up to height T");
  double T = 0.0;
  counts->add_option("--T", T)->required();
  counts->add_option("--store", store_path);

  // phase
  auto* phase_cmd = app.add_subcommand("phase", "tabulate omega, u, d, theta and the residual");
  double step = 1.0;
  phase_cmd->add_option("--tmax", tmax)->required();
  phase_cmd->add_option("--step", step)->required()->check(CLI::PositiveNumber);
  phase_cmd->add_option("--store", store_path);

  // constants
  auto* constants = app.add_subcommand("constants", "a, the identity value at 1/2 and B");
  constants->add_option("--store", store_path);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"specfun", "theta", "rzeta", "zeros", "phase", "all"}));
  verify_cmd->add_option("--store", store_path,
                         "store for the zeros and phase suites (missing parts are scanned)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (threads > 0) omp_set_num_threads(threads);

  try {
    Sink sink(out_path);
    std::ostream& os = sink.os();

    if (*eval) {
      const ComplexPoint s(parse_complex(s_text, "--s"));
      const rzeta::EvalOptions opt{precision, true};
      const auto p = method == "direct"
                         ? rzeta::eval_r_pair(s, rzeta::QuadratureSpec::at_level(0), opt)
                         : rzeta::eval_r_pair(s, std::nullopt, opt);
      os << "s " << num(cplx(s)) << "\n"
         << "R " << num(p.value.value) << "\n"
         << "abs_err " << num(p.value.abs_err) << "\n"
         << "R' " << num(p.derivative.value) << "\n"
         << "abs_err' " << num(p.derivative.abs_err) << "\n"
         << "shift_level " << p.shift_level << "\n";
      return exit_ok;
    }

    if (*theta) {
      const auto e = thetafun::phi(x);
      os << "x " << num(e.x) << "\nphi " << num(e.phi) << "\nphi' " << num(e.phi_prime)
         << "\nseries " << thetafun::to_string(e.series_used) << "\nterms " << e.terms << "\n";
      return exit_ok;
    }

    if (*scan) {
      const std::string path = require_store(store_path);
      const auto [dlo, dhi] = zerolab::default_sigma_range(tmin, tmax);
      const double lo = smin.value_or(dlo), hi = smax.value_or(dhi);
      zerolab::ScanOptions opt;
      opt.threads = threads;
      zerolab::ScanReport rep;
      auto store = zerolab::ZeroStore::load(path);
      const auto found = zerolab::scan_zeros(tmin, tmax, lo, hi, opt, &rep);
      store.add(found);
      if (tmin < tmax) store.add_coverage({rep.region, rep.count});
      store.save(path);
      os << "region " << num(rep.region.sigma_min) << "," << num(rep.region.sigma_max) << " x "
         << num(rep.region.t_min) << "," << num(rep.region.t_max) << "\n"
         << "winding " << rep.count << "\nzeros " << found.size() << "\nclusters "
         << rep.clusters.size() << "\nstore " << path << " (" << store.upper().size()
         << " above, " << store.lower().size() << " below the real axis)\n";
      for (const auto& c : rep.clusters)
        os << "cluster " << num(c.box.sigma_min) << "," << num(c.box.sigma_max) << " x "
           << num(c.box.t_min) << "," << num(c.box.t_max) << " winding " << c.count << "\n";
      return rep.clusters.empty() ? exit_ok : exit_fail;
    }

    if (*counts) {
      const auto store = zerolab::ZeroStore::load(require_store(store_path));
      const auto c = zerolab::sided_counts(T, store);
      os << "T " << num(c.T) << "\nN " << num(c.N) << "\nN_r " << num(c.N_r) << "\nN_l "
         << num(c.N_l) << "\nmain_term " << num(c.main_term) << "\nresidual " << num(c.residual_eq6)
         << "\nwinding " << c.winding << "\nambiguous " << c.ambiguous << "\n";
      return exit_ok;
    }

    if (*phase_cmd) {
      const auto store = zerolab::ZeroStore::load(require_store(store_path));
      const auto B = phase::estimate_B(store, false);
      std::vector<double> grid;
      const long n = static_cast<long>(std::floor(std::abs(tmax) / step + 1e-9));
      for (long k = 0; k <= n; ++k) grid.push_back(std::copysign(step * k, tmax));
      os << phase::to_csv(phase::decomposition_check(grid, store, B.B_estimate));
      return exit_ok;
    }

    if (*constants) {
      const auto store = zerolab::ZeroStore::load(require_store(store_path));
      const auto r = phase::estimate_B(store);
      os << "a " << num(r.a) << "\nidentity " << num(r.identity_value) << "\npartial_sum_right "
         << num(r.partial_sum_right) << "\nlast_summand " << num(r.last_summand) << "\nright_terms "
         << r.right_terms << "\nB " << num(r.B_estimate) << "\nB_truncation_error "
         << num(r.B_truncation_error) << "\nB_regression " << num(r.B_regression)
         << "\nB_regression_spread " << num(r.B_regression_spread) << "\nmixed_sum "
         << num(r.mixed_sum) << "\nmixed_tail_bound " << num(r.mixed_tail_bound) << "\n";
      return exit_ok;
    }

    if (*verify_cmd) {
      const auto s = verify::suite_from_string(suite);
      std::string path = store_path;
      if (path.empty())
        if (const char* env = std::getenv("RZLAB_STORE")) path = env;
      const auto store =
          verify::needs_store(s) ? verify::prepare_store(path) : zerolab::ZeroStore{};
      bool ok = true;
      for (const auto& c : verify::run_suite(s, store)) {
        os << verify::format(c) << "\n";
        ok = ok && c.pass;
      }
      os << (ok ? "all checks passed" : "verification FAILED") << "\n";
      return ok ? exit_ok : exit_fail;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
  return exit_usage;
}
