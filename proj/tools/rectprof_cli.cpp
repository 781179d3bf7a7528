// Copyright 2026 The rectprof Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: rectangle searches, covers and codecs, the
// hypercontractivity parameter, profile bound curves, and random-matrix
// experiments. Every subcommand prints JSON to stdout.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rectprof/bipartite_graph.hpp"
#include "rectprof/covering.hpp"
#include "rectprof/fixed_distance.hpp"
#include "rectprof/hypercontractivity.hpp"
#include "rectprof/joint_distribution.hpp"
#include "rectprof/random_graphs.hpp"
#include "rectprof/rect_search.hpp"

namespace {

using nlohmann::json;
using namespace rectprof;

json rect_to_json(const Rectangle& r) {
  return json{{"left", r.left}, {"right", r.right}};
}

int run_rectmax(const std::string& graph_spec, std::uint32_t a_cap, std::uint32_t b_cap,
                const std::string& mode, std::uint32_t restarts, std::uint64_t seed,
                double budget, unsigned threads) {
  const BipartiteGraph g = graph_from_spec(graph_spec);
  RectMaxResult res;
  if (mode == "exact") {
    ExactSearchOptions opts;
    opts.subset_budget = budget;
    opts.threads = threads;
    res = max_rect_exact(g, a_cap, b_cap, opts);
  } else if (mode == "greedy") {
    res = max_rect_greedy(g, a_cap, b_cap, restarts, seed, threads);
  } else {
    std::cerr << "rectmax: mode must be exact or greedy\n";
    return 2;
  }
  json out{{"count", res.count},
           {"witness", rect_to_json(res.witness)},
           {"mode", res.mode == RectMode::exact ? "exact" : "heuristic"}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

Rectangle resolve_base(const std::string& base_spec, const BipartiteGraph& g,
                       const std::string& graph_spec) {
  if (base_spec.rfind("sphere:", 0) == 0) {
    if (graph_spec.rfind("fixed:", 0) != 0)
      throw std::invalid_argument("cover: sphere bases need a fixed:n=..,d=.. graph");
    // reparse n and d from the graph spec
    const BipartiteGraph probe = g;  // sizes already known
    const int n = static_cast<int>(std::llround(std::log2(probe.left_size())));
    // recover d from any vertex's neighborhood size: C(n, d) neighbors
    const int w = std::stoi(base_spec.substr(7));
    // find d by matching degree
    int d = -1;
    const std::uint64_t deg = probe.left_degree(0);
    for (int cand = 1; cand < n; ++cand)
      if (binomial_u64(n, cand) == deg) {
        d = cand;
        break;
      }
    if (d < 0) throw std::invalid_argument("cover: cannot infer distance from graph");
    return sphere_rectangle(FixedDistanceSpec(n, d), w).rect;
  }
  if (base_spec.rfind("rect:", 0) == 0) {
    std::ifstream in(base_spec.substr(5));
    if (!in) throw std::runtime_error("cover: cannot open base rectangle file");
    json j;
    in >> j;
    return Rectangle::of(j["left"].get<std::vector<std::uint32_t>>(),
                         j["right"].get<std::vector<std::uint32_t>>());
  }
  throw std::invalid_argument("cover: base must be sphere:<w> or rect:<file>");
}

int run_cover(const std::string& graph_spec, const std::string& base_spec, double gamma,
              std::uint64_t seed, std::uint64_t trials, const std::string& out_path) {
  auto g = std::make_shared<BipartiteGraph>(graph_from_spec(graph_spec));
  const Rectangle base = resolve_base(base_spec, *g, graph_spec);
  const std::uint64_t k = rect_edge_count(*g, base);
  if (k == 0) throw std::invalid_argument("cover: base rectangle contains no edges");
  if (static_cast<double>(k) * std::exp2(gamma) < static_cast<double>(g->edge_count()))
    throw std::invalid_argument("cover: K * 2^gamma < |E|; no cover of this size can exist");

  const int n = static_cast<int>(std::llround(std::log2(g->left_size())));
  const AutomorphismSampler sampler = hypercube_automorphism_sampler(n);
  const std::uint64_t m = default_cover_size(gamma, g->edge_count());

  json out;
  out["base_edges"] = k;
  out["m"] = m;
  bool done = false;
  for (std::uint64_t t = 0; t < trials && !done; ++t) {
    Cover cover = random_cover(g, sampler, base, m, mix_seed(seed, t));
    if (!cover.is_complete()) continue;
    done = true;
    const ProfileTriple triple = verify_witness(cover);
    out["complete"] = true;
    out["seed_used"] = seed + t;
    out["attempts"] = t + 1;
    out["triple"] = {{"alpha", triple.alpha}, {"beta", triple.beta}, {"gamma", triple.gamma}};
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      save_cover(cover, graph_spec, f);
      out["cover_file"] = out_path;
    }
  }
  if (!done) {
    out["complete"] = false;
    out["attempts"] = trials;
  }
  std::cout << out.dump(2) << "\n";
  return done ? 0 : 1;
}

int run_codec(const std::string& cover_path, const std::string& action,
              const std::vector<std::uint64_t>& args) {
  Cover cover = load_cover_file(cover_path);
  Codec codec(std::move(cover));
  json out;
  if (action == "encode") {
    const auto msg = codec.encode(static_cast<std::uint32_t>(args[0]),
                                  static_cast<std::uint32_t>(args[1]));
    out = {{"a", msg.a}, {"b", msg.b}, {"c", msg.c}};
  } else {
    const Edge e = codec.decode({static_cast<std::uint32_t>(args[0]),
                                 static_cast<std::uint32_t>(args[1]),
                                 static_cast<std::uint32_t>(args[2])});
    out = {{"x", e.x}, {"y", e.y}};
  }
  out["message_bits"] = {{"alpha", codec.alpha_bits()},
                         {"beta", codec.beta_bits()},
                         {"gamma", codec.gamma_bits()}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_delta(const std::string& dist_spec, double tol, std::uint64_t seed, unsigned threads) {
  const JointDistribution d = distribution_from_spec(dist_spec);
  OptimizerConfig cfg;
  cfg.seed = seed;
  cfg.threads = threads;
  const DeltaEstimate est = delta_estimate(d, tol, cfg);
  json out{{"lower", est.lower}, {"upper", est.upper}, {"tolerance", est.tolerance},
           {"degenerate", d.is_degenerate()}};
  if (est.witness) out["witness"] = *est.witness;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_randgraph(int n_bits, double ones_exp, double tau, double kappa, double eps,
                  std::uint64_t seeds, std::uint64_t trials, std::uint64_t seed,
                  const std::string& out_path) {
  const std::uint32_t side = std::uint32_t(1) << n_bits;
  const auto ones =
      static_cast<std::uint64_t>(std::llround(std::pow(2.0, ones_exp * n_bits)));
  const auto s = static_cast<std::uint32_t>(std::llround(std::pow(2.0, tau * n_bits)));
  if (eps <= 0) {
    const double slack = std::min(1.5 - kappa - tau, 2.0 - kappa - 2.0 * tau);
    if (slack <= 0)
      throw std::invalid_argument(
          "randgraph: (tau, kappa) outside the admissible region "
          "(need kappa + tau < 1.5 and kappa + 2 tau < 2); pass --eps explicitly");
    eps = 0.5 * slack;
  }
  const double threshold = std::pow(2.0, (1.5 - kappa - eps) * n_bits);

  json per_seed = json::array();
  std::uint64_t density_ok = 0, degree_ok = 0;
  for (std::uint64_t i = 0; i < seeds; ++i) {
    RandomMatrixSpec spec{side, ones, mix_seed(seed, i)};
    const BipartiteGraph g = sample_matrix(spec);
    const DensityScan scan = scan_rectangle_density(g, s, ScanMode::sampled, trials,
                                                    mix_seed(spec.seed, 7));
    const DegreeReport deg = degree_check(g);
    const bool d_ok = static_cast<double>(scan.max_ones) < threshold;
    density_ok += d_ok;
    degree_ok += deg.threshold_ok;
    per_seed.push_back({{"max_ones", scan.max_ones},
                        {"max_random", scan.max_random},
                        {"max_greedy", scan.max_greedy},
                        {"density_ok", d_ok},
                        {"max_row", deg.max_row},
                        {"max_col", deg.max_col},
                        {"degree_ok", deg.threshold_ok}});
  }
  json out{{"side", side},        {"ones", ones},
           {"rect_side", s},      {"kappa", kappa},
           {"epsilon", eps},      {"threshold", threshold},
           {"seeds", seeds},      {"density_ok", density_ok},
           {"degree_ok", degree_ok}, {"per_seed", per_seed}};
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << out.dump(2) << "\n";
    std::cout << "{\"report\": \"" << out_path << "\", \"density_ok\": " << density_ok
              << ", \"degree_ok\": " << degree_ok << "}\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"profile toolkit for bipartite graphs and joint distributions"};
  app.require_subcommand(1);

  // rectmax
  std::string rm_graph, rm_mode = "exact";
  std::uint32_t rm_a = 1, rm_b = 1, rm_restarts = 32;
  std::uint64_t rm_seed = 1;
  double rm_budget = 1e8;
  unsigned rm_threads = 1;
  auto* rectmax = app.add_subcommand("rectmax", "max edges in a size-capped rectangle");
  rectmax->add_option("--graph", rm_graph, "graph spec or path")->required();
  rectmax->add_option("--a-cap", rm_a, "left size cap")->required();
  rectmax->add_option("--b-cap", rm_b, "right size cap")->required();
  rectmax->add_option("--mode", rm_mode, "exact|greedy");
  rectmax->add_option("--restarts", rm_restarts, "greedy restarts");
  rectmax->add_option("--seed", rm_seed, "greedy seed");
  rectmax->add_option("--budget", rm_budget, "exact-search subset budget");
  rectmax->add_option("--threads", rm_threads, "parallelism degree");

  // cover
  std::string cv_graph, cv_base, cv_out;
  double cv_gamma = 0;
  std::uint64_t cv_seed = 1, cv_trials = 1;
  auto* cover = app.add_subcommand("cover", "randomized shifted-copy cover");
  cover->add_option("--graph", cv_graph, "graph spec (fixed:... for sphere bases)")->required();
  cover->add_option("--base", cv_base, "sphere:<w> or rect:<file>")->required();
  cover->add_option("--gamma", cv_gamma, "rectangle-count exponent")->required();
  cover->add_option("--seed", cv_seed, "first seed");
  cover->add_option("--trials", cv_trials, "seeds to try until complete");
  cover->add_option("--out", cv_out, "write the cover as JSON");

  // codec
  std::string cd_cover;
  std::vector<std::uint64_t> cd_encode, cd_decode;
  auto* codec = app.add_subcommand("codec", "encode/decode through a stored cover");
  codec->add_option("--cover", cd_cover, "cover JSON file")->required();
  auto* enc = codec->add_subcommand("encode", "encode an edge (x y)");
  enc->add_option("values", cd_encode, "x y")->expected(2);
  auto* dec = codec->add_subcommand("decode", "decode a message (a b c)");
  dec->add_option("values", cd_decode, "a b c")->expected(3);
  codec->require_subcommand(1);

  // delta
  std::string dl_dist;
  double dl_tol = 1e-3;
  std::uint64_t dl_seed = 0x5eed;
  unsigned dl_threads = 1;
  auto* delta = app.add_subcommand("delta", "hypercontractivity parameter bracket");
  delta->add_option("--dist", dl_dist, "path to JSON distribution or bsc:<eps>")->required();
  delta->add_option("--tol", dl_tol, "bracket width");
  delta->add_option("--seed", dl_seed, "optimizer seed");
  delta->add_option("--threads", dl_threads, "parallelism degree");

  // rect-bound
  double rb_mu = 0, rb_nu = 0, rb_delta = 0;
  bool rb_asym = false;
  auto* rbound = app.add_subcommand("rect-bound", "rectangle probability bound");
  rbound->add_option("--mu", rb_mu)->required();
  rbound->add_option("--nu", rb_nu)->required();
  rbound->add_option("--delta", rb_delta)->required();
  rbound->add_flag("--asymptotic", rb_asym, "leading-order shape instead of the full bound");

  // gk
  double gk_logx = 0, gk_logy = 0, gk_delta = 0, gk_n = 1, gk_a = 0, gk_b = 0, gk_c = 0;
  auto* gk = app.add_subcommand("gk", "three-message length deficit");
  gk->add_option("--logx", gk_logx)->required();
  gk->add_option("--logy", gk_logy)->required();
  gk->add_option("--delta", gk_delta)->required();
  gk->add_option("--n", gk_n)->required();
  gk->add_option("--a", gk_a)->required();
  gk->add_option("--b", gk_b)->required();
  gk->add_option("--c", gk_c)->required();

  // curves
  double cu_eps = 0.11;
  std::string cu_grid = "0.01:0.99:0.01", cu_out;
  auto* curves = app.add_subcommand("curves", "profile bound curves as CSV");
  curves->add_option("--eps", cu_eps, "distance fraction")->required();
  curves->add_option("--grid", cu_grid, "tau grid start:stop:step");
  curves->add_option("--out", cu_out, "output CSV path")->required();

  // sphere
  int sp_n = 0, sp_d = 0, sp_w = 0;
  auto* sphere = app.add_subcommand("sphere", "single-weight rectangle edge count");
  sphere->add_option("--n", sp_n)->required();
  sphere->add_option("--d", sp_d)->required();
  sphere->add_option("--w", sp_w)->required();

  // bsc-sample
  int bs_n = 0;
  double bs_eps = 0.1;
  std::uint64_t bs_count = 1, bs_seed = 1;
  auto* bsc = app.add_subcommand("bsc-sample", "sample bit-flip coupled pairs");
  bsc->add_option("--n", bs_n)->required();
  bsc->add_option("--eps", bs_eps)->required();
  bsc->add_option("--count", bs_count);
  bsc->add_option("--seed", bs_seed);

  // randgraph
  int rg_bits = 6;
  double rg_ones_exp = 1.5, rg_tau = 0.5, rg_kappa = 0.75, rg_eps = 0;
  std::uint64_t rg_seeds = 100, rg_trials = 2000, rg_seed = 1;
  std::string rg_out;
  auto* rg = app.add_subcommand("randgraph", "fixed-ones random matrix experiments");
  rg->add_option("--n-bits", rg_bits, "log2 of the side")->required();
  rg->add_option("--ones-exp", rg_ones_exp, "ones = 2^(exp * n-bits)");
  rg->add_option("--tau", rg_tau)->required();
  rg->add_option("--kappa", rg_kappa)->required();
  rg->add_option("--eps", rg_eps, "slack; default = recipe midpoint");
  rg->add_option("--seeds", rg_seeds);
  rg->add_option("--trials", rg_trials, "sampled rectangles per seed");
  rg->add_option("--seed", rg_seed);
  rg->add_option("--out", rg_out, "write the full report JSON here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rectmax->parsed())
      return run_rectmax(rm_graph, rm_a, rm_b, rm_mode, rm_restarts, rm_seed, rm_budget,
                         rm_threads);
    if (cover->parsed())
      return run_cover(cv_graph, cv_base, cv_gamma, cv_seed, cv_trials, cv_out);
    if (codec->parsed()) {
      if (enc->parsed()) return run_codec(cd_cover, "encode", cd_encode);
      return run_codec(cd_cover, "decode", cd_decode);
    }
    if (delta->parsed()) return run_delta(dl_dist, dl_tol, dl_seed, dl_threads);
    if (rbound->parsed()) {
      const double v = rb_asym ? rectprof::rect_bound_asymptotic(rb_mu, rb_nu, rb_delta)
                               : rectprof::rect_bound(rb_mu, rb_nu, rb_delta);
      std::cout << nlohmann::json{{"bound", v}}.dump(2) << "\n";
      return 0;
    }
    if (gk->parsed()) {
      const double v =
          common_information_deficit(gk_logx, gk_logy, gk_delta, gk_n, gk_a, gk_b, gk_c);
      std::cout << nlohmann::json{{"deficit", v}, {"infeasible_leading_order", v < 0}}.dump(2)
                << "\n";
      return 0;
    }
    if (curves->parsed()) {
      CurveGrid grid;
      const auto c1 = cu_grid.find(':');
      const auto c2 = cu_grid.rfind(':');
      if (c1 == std::string::npos || c2 == c1)
        throw std::invalid_argument("curves: grid must be start:stop:step");
      grid.start = std::stod(cu_grid.substr(0, c1));
      grid.stop = std::stod(cu_grid.substr(c1 + 1, c2 - c1 - 1));
      grid.step = std::stod(cu_grid.substr(c2 + 1));
      std::ofstream f(cu_out);
      if (!f) throw std::runtime_error("curves: cannot open output file");
      emit_curves(cu_eps, grid, f);
      std::cout << nlohmann::json{{"written", cu_out}}.dump(2) << "\n";
      return 0;
    }
    if (sphere->parsed()) {
      nlohmann::json out{{"log2_count", sphere_edge_count_log2(sp_n, sp_d, sp_w)}};
      try {
        out["count"] = sphere_edge_count(sp_n, sp_d, sp_w);
        out["sphere_size"] = binomial_u64(sp_n, sp_w);
      } catch (const std::overflow_error&) {
        out["count"] = nullptr;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (bsc->parsed()) {
      Rng rng(bs_seed);
      for (std::uint64_t i = 0; i < bs_count; ++i) {
        const auto [x, y] = sample_bsc_pair(bs_n, bs_eps, rng);
        std::cout << x << ' ' << y << "\n";
      }
      return 0;
    }
    if (rg->parsed())
      return run_randgraph(rg_bits, rg_ones_exp, rg_tau, rg_kappa, rg_eps, rg_seeds, rg_trials,
                           rg_seed, rg_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
