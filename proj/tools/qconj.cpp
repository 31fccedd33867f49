// Command-line front-end: probability/quantum distances, qubit distance
// surfaces, 1D/2D conjugate-variable segmentation, decision regions and
// adaptive/uniform smoothing. Emits CSV, JSON and PGM files.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "qconj/encoding.hpp"
#include "qconj/image.hpp"
#include "qconj/io.hpp"
#include "qconj/metrics.hpp"
#include "qconj/quantum.hpp"
#include "qconj/segmentation.hpp"

using nlohmann::json;
using namespace qconj;

namespace {

json finite_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot open for writing: " + out_path);
    out << j.dump(2) << "\n";
  }
}

Rule parse_rule(const std::string& s) {
  if (s == "expectation") return Rule::Expectation;
  if (s == "distance") return Rule::Distance;
  if (s == "model") return Rule::Model;
  throw ParseError("unknown rule: " + s);
}

P4Form parse_p4(const std::string& s) {
  if (s == "rank1") return P4Form::Rank1;
  if (s == "scaled") return P4Form::ScaledIdentity;
  throw ParseError("unknown p4 form: " + s);
}

int run_distances(const std::string& p_path, const std::string& q_path,
                  const std::string& phases_path, const std::string& out) {
  RVec p = validate_prob(read_csv_vector(p_path));
  RVec q = validate_prob(read_csv_vector(q_path));
  if (p.size() != q.size())
    throw ParseError("p and q must have the same length");
  RVec phases = RVec::Zero(p.size());
  if (!phases_path.empty()) {
    phases = read_csv_vector(phases_path);
    if (phases.size() != p.size())
      throw ParseError("phases must match the distributions in length");
  }
  DistanceReport r = classical_distances(p, q);
  CVec psi = encode(p, phases);
  CVec xi = encode_real(q);
  AngleRelations ang = angle_relations(p, q);
  json j{{"euclidean", r.euclidean_prob},
         {"trace_variational", r.trace_variational},
         {"rel_chi2", r.rel_chi2},
         {"kl_divergence", finite_or_inf(r.kl_divergence)},
         {"jensen_shannon", r.jensen_shannon},
         {"bhattacharyya_table", r.bhattacharyya_dist},
         {"fidelity", r.fidelity},
         {"bhattacharyya_distance", bhattacharyya_distance(p, q)},
         {"no_name_distance_pure", no_name_distance_pure(psi, xi)},
         {"principal_euclidean_distance", principal_euclidean_distance(psi, xi)},
         {"omega", ang.omega},
         {"sin_omega", ang.sin_omega},
         {"two_sin_half", ang.two_sin_half}};
  emit(j, out);
  return 0;
}

int run_surface(int figure, double p_fixed, double dgamma, int resolution,
                const std::string& out) {
  SurfaceGrid g;
  switch (figure) {
    case 1:
      g = qubit_distance_surface(SurfaceMode::FixP, p_fixed, resolution);
      break;
    case 2:
      g = qubit_distance_surface(SurfaceMode::FixPhase, dgamma, resolution);
      break;
    case 3:
      g = qubit_distance_surface(SurfaceMode::PEqualsQ, 0.0, resolution);
      break;
    default:
      throw ParseError("figure must be 1, 2 or 3");
  }
  write_csv_grid(out, g.row_axis, g.col_axis, g.values);
  return 0;
}

int run_segment1d(const std::string& in_path, const std::string& demo, int n,
                  double c1, double c2, const std::string& rule_name,
                  double sigma, const std::string& p4, const std::string& out) {
  SampledSignal sig;
  if (demo == "cosconst") {
    sig = cosconst_signal(n);
  } else if (!demo.empty()) {
    throw ParseError("unknown demo: " + demo);
  } else if (!in_path.empty()) {
    sig = read_csv_signal(in_path);
  } else {
    throw ParseError("either an input CSV or --demo is required");
  }
  SignalLimits lim{c1, c2};
  Rule rule = parse_rule(rule_name);
  if (rule == Rule::Model)
    throw ParseError("segment1d supports rules expectation|distance");
  LabelMap map = segment_signal(sig, lim, rule, sigma, parse_p4(p4));
  write_csv_segmentation(out, sig, map, lim);
  return 0;
}

int run_regions(double c1, double c2, int resolution,
                const std::string& rule_name, const std::string& p4,
                const std::string& out) {
  SignalLimits lim{c1, c2};
  Rule rule = parse_rule(rule_name);
  RegionGrid grid = decision_regions(lim, resolution, rule, parse_p4(p4));
  write_csv_label_grid(out, grid);
  RegionDiagnostics diag = region_diagnostics(grid, lim, rule);
  json j{{"rule", rule_name},
         {"resolution", resolution},
         {"c1", c1},
         {"c2", c2},
         {"measured_radius_fpp", diag.measured_radius_fpp},
         {"measured_radius_fp", diag.measured_radius_fp},
         {"closed_form_fpp", diag.closed_form_fpp}};
  emit(j, out + ".diag.json");
  return 0;
}

ImageGray load_image(const std::string& in_path, const std::string& demo,
                     uint64_t seed, int size) {
  if (demo == "synth") return synthetic_test_image(size, size, seed);
  if (!demo.empty()) throw ParseError("unknown demo: " + demo);
  if (in_path.empty())
    throw ParseError("either an input PGM or --demo is required");
  return read_pgm(in_path);
}

int run_segment2d(const std::string& in_path, const std::string& demo,
                  uint64_t seed, int size, double c1, double c2,
                  const std::string& rule_name, double sigma,
                  const std::string& p4, const std::string& out) {
  ImageGray img = load_image(in_path, demo, seed, size);
  ImageLabelMap labels = label_image(img, {c1, c2}, parse_rule(rule_name),
                                     sigma, parse_p4(p4));
  write_label_pgm(out, labels);
  return 0;
}

int run_filter(const std::string& in_path, const std::string& demo,
               uint64_t seed, int size, double c1, double c2,
               const std::string& mode, int kernel, double sigma,
               const std::string& p4, const std::string& out) {
  ImageGray img = load_image(in_path, demo, seed, size);
  ImageGray result;
  if (mode == "uniform") {
    result = uniform_mean_filter(img, kernel);
  } else if (mode == "adaptive") {
    ImageLabelMap labels =
        label_image(img, {c1, c2}, Rule::Expectation, sigma, parse_p4(p4));
    result = adaptive_mean_filter(img, labels, kernel);
  } else {
    throw ParseError("mode must be uniform or adaptive");
  }
  write_pgm(out, result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugate-variable signal/image segmentation toolkit"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "Eigen thread count override");

  // distances
  std::string d_p, d_q, d_phases, d_out;
  auto* distances = app.add_subcommand(
      "distances", "Classical and quantum distances of two distributions");
  distances->add_option("p", d_p, "CSV with distribution p")->required();
  distances->add_option("q", d_q, "CSV with distribution q")->required();
  distances->add_option("--phases", d_phases,
                        "CSV with per-symbol phases applied to p's encoding");
  distances->add_option("-o,--out", d_out, "JSON output path (default stdout)");

  // surface
  int s_figure = 3, s_res = 64;
  double s_p = 0.5, s_dgamma = 0.0;
  std::string s_out;
  auto* surface =
      app.add_subcommand("surface", "Qubit distance surface grids");
  surface->add_option("--figure", s_figure, "1: fixed p, 2: fixed phase, 3: p=q")
      ->required();
  surface->add_option("--p", s_p, "fixed p(x) for figure 1");
  surface->add_option("--dgamma", s_dgamma, "fixed phase difference for figure 2");
  surface->add_option("--resolution", s_res, "grid resolution");
  surface->add_option("-o,--out", s_out, "CSV output path")->required();

  // segment1d
  std::string g1_in, g1_demo, g1_rule = "expectation", g1_p4 = "scaled", g1_out;
  int g1_n = 2000;
  double g1_c1 = 1.0, g1_c2 = 1.0, g1_sigma = 0.0;
  auto* seg1 = app.add_subcommand("segment1d", "Per-sample signal labeling");
  seg1->add_option("input", g1_in, "CSV signal (t,f)");
  seg1->add_option("--demo", g1_demo, "built-in generator: cosconst");
  seg1->add_option("--n", g1_n, "demo sample count");
  seg1->add_option("--c1", g1_c1, "limit on |f'|");
  seg1->add_option("--c2", g1_c2, "limit on |f''|");
  seg1->add_option("--rule", g1_rule, "expectation|distance");
  seg1->add_option("--sigma", g1_sigma, "Gaussian pre-smoothing, in samples");
  seg1->add_option("--p4", g1_p4, "P4 scoring form: scaled|rank1");
  seg1->add_option("-o,--out", g1_out, "CSV output path")->required();

  // regions
  double r_c1 = 1.0, r_c2 = 1.0;
  int r_res = 256;
  std::string r_rule = "expectation", r_p4 = "scaled", r_out;
  auto* regions = app.add_subcommand("regions", "Decision-region label grid");
  regions->add_option("--c1", r_c1, "limit on |f'|");
  regions->add_option("--c2", r_c2, "limit on |f''|");
  regions->add_option("--resolution", r_res, "grid resolution");
  regions->add_option("--rule", r_rule, "expectation|distance|model");
  regions->add_option("--p4", r_p4, "P4 scoring form: scaled|rank1");
  regions->add_option("-o,--out", r_out, "CSV output path")->required();

  // segment2d
  std::string g2_in, g2_demo, g2_rule = "expectation", g2_p4 = "scaled", g2_out;
  uint64_t g2_seed = 7;
  int g2_size = 512;
  double g2_c1 = 0.5, g2_c2 = 1.0, g2_sigma = 0.0;
  auto* seg2 = app.add_subcommand("segment2d", "Per-pixel image labeling");
  seg2->add_option("input", g2_in, "binary 8-bit PGM");
  seg2->add_option("--demo", g2_demo, "built-in generator: synth");
  seg2->add_option("--seed", g2_seed, "demo noise seed");
  seg2->add_option("--size", g2_size, "demo image size");
  seg2->add_option("--c1", g2_c1, "limit on the gradient magnitude");
  seg2->add_option("--c2", g2_c2, "limit on |Laplacian|");
  seg2->add_option("--rule", g2_rule, "expectation|distance|model");
  seg2->add_option("--sigma", g2_sigma, "Gaussian pre-smoothing, in pixels");
  seg2->add_option("--p4", g2_p4, "P4 scoring form: scaled|rank1");
  seg2->add_option("-o,--out", g2_out, "label PGM output path")->required();

  // filter
  std::string f_in, f_demo, f_mode = "adaptive", f_p4 = "scaled", f_out;
  uint64_t f_seed = 7;
  int f_size = 512, f_kernel = 15;
  double f_c1 = 0.5, f_c2 = 1.0, f_sigma = 0.0;
  auto* filter = app.add_subcommand("filter", "Adaptive or uniform smoothing");
  filter->add_option("input", f_in, "binary 8-bit PGM");
  filter->add_option("--demo", f_demo, "built-in generator: synth");
  filter->add_option("--seed", f_seed, "demo noise seed");
  filter->add_option("--size", f_size, "demo image size");
  filter->add_option("--mode", f_mode, "uniform|adaptive");
  filter->add_option("--kernel", f_kernel, "odd box kernel size");
  filter->add_option("--c1", f_c1, "limit on the gradient magnitude");
  filter->add_option("--c2", f_c2, "limit on |Laplacian|");
  filter->add_option("--sigma", f_sigma, "Gaussian pre-smoothing, in pixels");
  filter->add_option("--p4", f_p4, "P4 scoring form: scaled|rank1");
  filter->add_option("-o,--out", f_out, "PGM output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads > 0) Eigen::setNbThreads(threads);
    if (*distances) return run_distances(d_p, d_q, d_phases, d_out);
    if (*surface) return run_surface(s_figure, s_p, s_dgamma, s_res, s_out);
    if (*seg1)
      return run_segment1d(g1_in, g1_demo, g1_n, g1_c1, g1_c2, g1_rule,
                           g1_sigma, g1_p4, g1_out);
    if (*regions)
      return run_regions(r_c1, r_c2, r_res, r_rule, r_p4, r_out);
    if (*seg2)
      return run_segment2d(g2_in, g2_demo, g2_seed, g2_size, g2_c1, g2_c2,
                           g2_rule, g2_sigma, g2_p4, g2_out);
    if (*filter)
      return run_filter(f_in, f_demo, f_seed, f_size, f_c1, f_c2, f_mode,
                        f_kernel, f_sigma, f_p4, f_out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DistributionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SignalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
