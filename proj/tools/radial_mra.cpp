// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

// Command-line front end. Exit codes: 0 success, 1 unexpected failure,
// 2 schema or grid errors, 3 tolerance failures, 4 domain errors.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "radial/cwt.hpp"
#include "radial/error.hpp"
#include "radial/fwt.hpp"
#include "radial/hankel.hpp"
#include "radial/hypergroup.hpp"
#include "radial/io.hpp"
#include "radial/mra.hpp"
#include "radial/parallel.hpp"
#include "radial/wavelet.hpp"

namespace {

using namespace radial;
using io::json;

constexpr int kExitSchema = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitDomain = 4;

void emit_error(const char* kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

struct ToleranceFailure {
  std::string message;
  json detail;
};

struct Options {
  std::uint64_t seed = 0;
  int threads = 0;
  std::string tolerances_path;
  io::Tolerances tol;
};

SampledProfile transform(const HypergroupIndex& alpha, const SampledProfile& p) {
  const RadialGrid out = dual_grid(p.grid());
  return alpha.value() == 0.5 ? hankel_half(p, out) : hankel_general(alpha, p, out);
}

CosineFilter load_filter(const std::string& path) { return io::parse_filter_csv(io::read_text(path)); }

void print_json(const json& doc) { std::cout << doc.dump(2) << '\n'; }

// Smooth random spectrum supported in (lo, hi): a bump times a short cosine series.
EvenFunction random_band_limited(std::mt19937_64& rng, double lo, double hi) {
  std::normal_distribution<double> n01;
  std::vector<Complex> c(6);
  for (auto& v : c) v = {n01(rng), n01(rng)};
  return EvenFunction(
      [c, lo, hi](double l) {
        if (l <= lo || l >= hi) return Complex(0.0);
        const double t = (l - lo) / (hi - lo);
        Complex s = 0.0;
        for (std::size_t m = 0; m < c.size(); ++m) s += c[m] * std::cos(m * std::numbers::pi * t);
        return std::exp(-1.0 / (t * (1.0 - t))) * s;
      },
      hi);
}

void write_csv_rows(const std::string& path, const std::string& header,
                    const std::vector<std::vector<double>>& rows) {
  std::ostringstream o;
  o.precision(17);
  o << header << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) o << (i ? "," : "") << row[i];
    o << '\n';
  }
  io::write_text(path, o.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial multiresolution analysis on the Bessel-Kingman hypergroup"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for generated test inputs");
  app.add_option("--threads", opt.threads, "Worker cap (default: RADIAL_MRA_THREADS or all cores)");
  app.add_option("--tolerances", opt.tolerances_path, "tolerances.json overriding the defaults");

  std::function<void()> action;

  // hankel
  double alpha_v = 0.5;
  std::string in_path, out_path, report_path, spec_path, g_path, f_path, grid_path, filter_path, phi_path;
  bool inverse = false;
  auto* hankel = app.add_subcommand("hankel", "Forward or inverse Hankel transform of a sampled profile");
  hankel->add_option("--alpha", alpha_v)->required();
  hankel->add_option("--in", in_path)->required();
  hankel->add_option("--out", out_path)->required();
  hankel->add_flag("--inverse", inverse);
  hankel->callback([&] {
    action = [&] {
      const HypergroupIndex alpha(alpha_v);
      const auto p = io::load_profile(in_path);
      const RadialGrid out = dual_grid(p.grid());
      io::save_profile(out_path, inverse ? inverse_hankel(alpha, p, out) : transform(alpha, p));
    };
  });

  // translate
  double shift = 0.0;
  auto* translate_cmd = app.add_subcommand("translate", "Hypergroup translation T_r of a sampled profile");
  translate_cmd->add_option("--alpha", alpha_v)->required();
  translate_cmd->add_option("--r", shift)->required();
  translate_cmd->add_option("--in", in_path)->required();
  translate_cmd->add_option("--out", out_path)->required();
  translate_cmd->callback([&] {
    action = [&] {
      const HypergroupIndex alpha(alpha_v);
      const auto p = io::load_profile(in_path);
      if (p.domain() != Domain::radial) throw SchemaError("translate expects a radial profile");
      const auto t = alpha.value() == 0.5 ? translate_half(p, shift) : translate_general(alpha, p, shift);
      io::save_profile(out_path, t);
      print_json({{"truncated", t.truncated()}});
    };
  });

  // scaling
  auto* scaling = app.add_subcommand("scaling", "Scaling functions");
  scaling->require_subcommand(1);
  std::string kind;
  int n_max = 0;
  auto* build = scaling->add_subcommand("build", "Build a scaling function");
  build->add_option("--kind", kind)->required()->check(CLI::IsMember({"shannon", "meyer", "hat-spline", "from-classical"}));
  build->add_option("--spec", spec_path, "from-classical: {schema, classical_spectrum: profile}");
  build->add_option("--out", out_path)->required();
  build->callback([&] {
    action = [&] {
      std::optional<ScalingFunction> phi;
      if (kind == "from-classical") {
        if (spec_path.empty()) throw SchemaError("--kind from-classical needs --spec");
        const json doc = io::read_json(spec_path);
        if (!doc.contains("classical_spectrum")) throw SchemaError("missing field \"classical_spectrum\"");
        phi = from_classical(io::profile_from_json(doc["classical_spectrum"]));
      } else {
        phi = scaling_builtin(kind);
      }
      io::write_json(out_path, io::scaling_to_json(*phi));
    };
  });
  auto* orth = scaling->add_subcommand("orthogonalize", "phi_hat / sqrt(P_phi)");
  orth->add_option("--in", in_path)->required();
  orth->add_option("--out", out_path)->required();
  orth->add_option("--n-max", n_max, "Lattice-sum cutoff (0: default)");
  orth->callback([&] {
    action = [&] {
      const auto phi = io::scaling_from_json(io::read_json(in_path));
      io::write_json(out_path, io::scaling_to_json(orthogonalize(phi, n_max)));
    };
  });
  auto* validate = scaling->add_subcommand("validate", "Check the MRA conditions");
  validate->add_option("--in", in_path)->required();
  validate->add_option("--report", report_path)->required();
  validate->callback([&] {
    action = [&] {
      const auto phi = io::scaling_from_json(io::read_json(in_path));
      const auto report = validate_mra(phi);
      io::write_json(report_path, io::report_to_json(report));
      json failed = json::array();
      if (!report.riesz.satisfied() || report.riesz.A < opt.tol.riesz_floor) failed.push_back("riesz");
      if (!(report.two_scale_residual < opt.tol.two_scale)) failed.push_back("two_scale");
      if (!report.generates_mra) failed.push_back("generates_mra");
      if (report.gram_deviation && !(*report.gram_deviation < opt.tol.orthonormality)) failed.push_back("gram");
      if (!failed.empty()) throw ToleranceFailure{"MRA validation failed", {{"failed", failed}}};
    };
  });

  // filter
  auto* filter = app.add_subcommand("filter", "Filter functions");
  filter->require_subcommand(1);
  int n_coeffs = 64;
  int grid_pts = 4096;
  auto* extract = filter->add_subcommand("extract", "Filter G and its cosine coefficients g_0..g_N");
  extract->add_option("--in", in_path)->required();
  extract->add_option("--n", n_coeffs)->check(CLI::PositiveNumber);
  extract->add_option("--grid", grid_pts)->check(CLI::PositiveNumber);
  extract->add_option("--out", out_path)->required();
  extract->callback([&] {
    action = [&] {
      const auto phi = io::scaling_from_json(io::read_json(in_path));
      const auto ex = extract_filter(phi, grid_pts, n_coeffs);
      io::write_text(out_path, io::format_filter_csv(ex.filter));
      print_json({{"epsilon", ex.epsilon},
                  {"symbol_identity_residual", ex.symbol.identity_residual(grid_pts)},
                  {"filter_identity_residual", ex.filter.identity_residual(grid_pts)},
                  {"completed", ex.completed},
                  {"masked", ex.masked}});
    };
  });

  // wavelet
  auto* wavelet = app.add_subcommand("wavelet", "Basic wavelets");
  wavelet->require_subcommand(1);
  std::optional<double> wavelet_tol;
  auto* wbuild = wavelet->add_subcommand("build", "psi_hat(2 l) = conj(G(l + 1)) phi_hat(l)");
  wbuild->add_option("--phi", phi_path)->required();
  wbuild->add_option("--filter", filter_path)->required();
  wbuild->add_option("--tol", wavelet_tol, "Filter identity tolerance (default: tolerances file)");
  wbuild->add_option("--out", out_path)->required();
  wbuild->callback([&] {
    action = [&] {
      const json phi_doc = io::read_json(phi_path);
      const auto phi = io::scaling_from_json(phi_doc);
      const auto g = load_filter(filter_path);
      const double tol = wavelet_tol.value_or(opt.tol.filter_identity);
      build_wavelet(phi, g, tol);
      std::vector<Complex> coeffs;
      for (int n = 0; n <= g.order(); ++n) coeffs.push_back(g.g(n));
      io::write_json(out_path, {{"schema", io::kSchemaVersion},
                                {"type", "wavelet"},
                                {"phi", phi_doc},
                                {"filter", io::complex_array(coeffs)},
                                {"filter_identity_residual", g.identity_residual()},
                                {"tol", tol}});
    };
  });

  // fwt
  auto* fwt = app.add_subcommand("fwt", "Fast wavelet transform on coefficient vectors");
  fwt->require_subcommand(1);
  int depth = 1;
  int j_top = 0;
  int ell = 1;
  int k_row = 1;
  auto* dec = fwt->add_subcommand("decompose", "Coefficients c^(j) to a pyramid");
  dec->add_option("--filter", filter_path)->required();
  dec->add_option("--in", in_path)->required();
  dec->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  dec->add_option("--j-top", j_top);
  dec->add_option("--out", out_path)->required();
  dec->callback([&] {
    action = [&] {
      const auto g = load_filter(filter_path);
      const auto c = io::coefficients_from_json(io::read_json(in_path));
      io::write_json(out_path, io::pyramid_to_json(decompose(c, g, depth, j_top)));
    };
  });
  auto* rec = fwt->add_subcommand("reconstruct", "Pyramid back to c^(j_top)");
  rec->add_option("--filter", filter_path)->required();
  rec->add_option("--in", in_path)->required();
  rec->add_option("--out", out_path)->required();
  rec->callback([&] {
    action = [&] {
      const auto g = load_filter(filter_path);
      const auto p = io::pyramid_from_json(io::read_json(in_path));
      io::write_json(out_path, {{"schema", io::kSchemaVersion}, {"c", io::complex_array(reconstruct(p, g))}});
    };
  });
  auto* qr = fwt->add_subcommand("qr", "Print the table entries q and r for (l, k)");
  qr->add_option("--filter", filter_path)->required();
  qr->add_option("--ell", ell)->required();
  qr->add_option("--k", k_row)->required();
  qr->callback([&] {
    action = [&] {
      const auto [q, r] = qr_coefficients(load_filter(filter_path), ell, k_row);
      std::cout.precision(17);
      std::cout << "q " << q.real() << ' ' << q.imag() << '\n' << "r " << r.real() << ' ' << r.imag() << '\n';
    };
  });

  // cwt
  auto* cwt_cmd = app.add_subcommand("cwt", "Continuous wavelet transform");
  cwt_cmd->require_subcommand(1);
  auto* run = cwt_cmd->add_subcommand("run", "Psi_g f on a log-uniform (r, a) grid");
  run->add_option("--alpha", alpha_v)->required();
  run->add_option("--g", g_path)->required();
  run->add_option("--f", f_path)->required();
  run->add_option("--grid", grid_path)->required();
  run->add_option("--out", out_path)->required();
  run->callback([&] {
    action = [&] {
      const HypergroupIndex alpha(alpha_v);
      const auto g_hat = io::spectrum_from_json(io::read_json(g_path), alpha);
      const auto f_hat = io::spectrum_from_json(io::read_json(f_path), alpha);
      const auto grid = io::cwt_grid_from_json(io::read_json(grid_path), alpha);
      const auto psi = cwt(alpha, f_hat, g_hat, grid);
      io::write_text(out_path, io::format_cwt_csv(grid, psi));
      print_json({{"energy", cwt_energy(psi, grid)}, {"admissibility", admissibility(g_hat)}});
    };
  });

  // frame
  auto* frame_cmd = app.add_subcommand("frame", "Discrete Fourier-Bessel frames");
  frame_cmd->require_subcommand(1);
  auto* check = frame_cmd->add_subcommand("check", "Frame bound estimates and energy ratios");
  check->add_option("--alpha", alpha_v)->required();
  check->add_option("--g", g_path)->required();
  check->add_option("--spec", spec_path)->required();
  check->add_option("--report", report_path)->required();
  check->callback([&] {
    action = [&] {
      const HypergroupIndex alpha(alpha_v);
      const auto g_hat = io::spectrum_from_json(io::read_json(g_path), alpha);
      const json doc = io::read_json(spec_path);
      if (doc.value("schema", 0) != io::kSchemaVersion) throw SchemaError("frame spec needs \"schema\": 1");
      if (!doc.contains("l") || !doc.contains("Q")) throw SchemaError("frame spec needs \"l\" and \"Q\"");
      FrameSpec spec{alpha, doc["l"].get<double>(), doc["Q"].get<std::vector<double>>(), doc.value("n_max", 512)};
      const auto band = doc.value("band", std::vector<double>{0.5, 4.0});
      if (band.size() != 2 || !(band[0] > 0.0 && band[0] < band[1])) throw SchemaError("\"band\" must be [lo, hi]");
      const int inputs = doc.value("inputs", 20);
      const Frame frame(g_hat, spec);
      const auto [A, B] = frame.bound_estimates(band[0], band[1]);
      std::mt19937_64 rng(opt.seed);
      std::vector<double> ratios;
      for (int i = 0; i < inputs; ++i) {
        const auto f = random_band_limited(rng, band[0], band[1]);
        ratios.push_back(frame.energy(f) / weighted_integral(f, f, alpha, band[1]).real());
      }
      json report{{"schema", io::kSchemaVersion}, {"A_est", A},       {"B_est", B},
                  {"l", spec.l},                 {"alpha", alpha_v}, {"energy_ratio", ratios}};
      if (doc.contains("lattice_a")) {
        const auto lb = lattice_bounds(g_hat, doc["lattice_a"].get<double>(), grid_pts);
        report["lattice"] = {{"sigma", lb.sigma}, {"tau", lb.tau}, {"M", lb.M},
                             {"sum_min", lb.sum_min}, {"sum_max", lb.sum_max}, {"holds", lb.holds()}};
      }
      io::write_json(report_path, report);
      double worst = 0.0;
      for (double r : ratios) worst = std::max({worst, std::fabs(r / A - 1.0), std::fabs(r / B - 1.0)});
      if (A == B && worst > opt.tol.frame_ratio) {
        throw ToleranceFailure{"energy ratio outside the tight bound", {{"worst_relative", worst}}};
      }
      if (report.contains("lattice") && !report["lattice"]["holds"].get<bool>()) {
        throw ToleranceFailure{"lattice bound violated", report["lattice"]};
      }
    };
  });

  // plotdata
  std::string what;
  int k_max = 8;
  auto* plot = app.add_subcommand("plotdata", "Figure-ready tables");
  plot->add_option("--what", what)->required()->check(CLI::IsMember({"gram", "periodization", "filter-identity"}));
  plot->add_option("--in", in_path, "Scaling function JSON")->required();
  plot->add_option("--out", out_path)->required();
  plot->add_option("--k", k_max, "gram: number of translates")->check(CLI::PositiveNumber);
  plot->add_option("--grid", grid_pts)->check(CLI::PositiveNumber);
  plot->callback([&] {
    action = [&] {
      const auto phi = io::scaling_from_json(io::read_json(in_path));
      std::vector<std::vector<double>> rows;
      if (what == "gram") {
        std::vector<EvenFunction> spectra;
        for (int k = 1; k <= k_max; ++k) spectra.push_back(basis_spectrum(phi, 0, k));
        const auto G = gram_matrix(spectra);
        for (int a = 0; a < k_max; ++a) {
          for (int b = 0; b < k_max; ++b) rows.push_back({a + 1.0, b + 1.0, G[a][b].real(), G[a][b].imag()});
        }
        write_csv_rows(out_path, "k,l,re,im", rows);
      } else if (what == "periodization") {
        const auto P = periodize(phi, grid_pts);
        for (std::size_t i = 0; i < P.lambda.size(); ++i) rows.push_back({P.lambda[i], P.values[i]});
        write_csv_rows(out_path, "lambda,P", rows);
      } else {
        const auto G = extract_filter(phi, grid_pts).symbol;
        for (int i = 0; i < grid_pts; ++i) {
          const double l = (i + 0.5) / grid_pts;
          rows.push_back({l, std::norm(G(l)) + std::norm(G(l + 1.0)) - 1.0});
        }
        write_csv_rows(out_path, "lambda,residual", rows);
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (opt.threads > 0) set_thread_count(opt.threads);
    if (!opt.tolerances_path.empty()) opt.tol = io::Tolerances::load(opt.tolerances_path);
    if (action) action();
    return 0;
  } catch (const ToleranceFailure& e) {
    std::cerr << json{{"error", "tolerance"}, {"message", e.message}, {"detail", e.detail}}.dump() << '\n';
    return kExitTolerance;
  } catch (const SchemaError& e) {
    emit_error("schema", e.what());
    return kExitSchema;
  } catch (const GridMismatchError& e) {
    emit_error("grid_mismatch", e.what());
    return kExitSchema;
  } catch (const ToleranceError& e) {
    emit_error("tolerance", e.what());
    return kExitTolerance;
  } catch (const DomainError& e) {
    emit_error("domain", e.what());
    return kExitDomain;
  } catch (const json::exception& e) {
    emit_error("schema", e.what());
    return kExitSchema;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return 1;
  }
}
