#include "spx/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "spx/conn.hpp"
#include "spx/errors.hpp"
#include "spx/families.hpp"
#include "spx/graph_io.hpp"
#include "spx/spectral.hpp"
#include "spx/verify.hpp"

namespace spx {

namespace {

struct ParamFlags {
  std::optional<int> n;
  int r = 2;
  int h = 1;
  int delta = 1;
  std::optional<int> kappa;
  std::optional<int> lambda;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "Order");
    cmd->add_option("--r", r, "Component count")->capture_default_str();
    cmd->add_option("--h", h, "Extra size")->capture_default_str();
    cmd->add_option("--delta", delta, "Minimum degree")->capture_default_str();
    cmd->add_option("--kappa", kappa, "Conditional vertex connectivity");
    cmd->add_option("--lambda", lambda, "Conditional edge connectivity");
  }

  int order() const {
    if (!n) throw ParamError("--n is required");
    return *n;
  }

  ExtremalParams vertex() const {
    if (!kappa) throw ParamError("--kappa is required");
    return ExtremalParams::vertex(order(), r, h, delta, *kappa);
  }

  ExtremalParams edge() const {
    if (!lambda) throw ParamError("--lambda is required");
    return ExtremalParams::edge(order(), r, h, delta, *lambda);
  }
};

std::string read_input(const std::string& source, std::istream& in) {
  if (source == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(source);
  if (!file) throw FormatError("cannot read " + source);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& source, std::istream& in) { return parse_graph(read_input(source, in)); }

std::vector<std::pair<int, int>> parse_extra(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParamError("--extra entries look like clique:small, got '" + item + "'");
    try {
      out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw ParamError("--extra entries look like clique:small, got '" + item + "'");
    }
  }
  return out;
}

SpectralConfig spectral_config(double tolerance, double epsilon) {
  SpectralConfig cfg;
  cfg.tolerance = tolerance;
  cfg.comparison_epsilon = epsilon;
  cfg.validate();
  return cfg;
}

int default_threads() {
  if (const char* env = std::getenv("SPX_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::logic_error&) {
    }
    throw ParamError("SPX_THREADS must be a positive integer");
  }
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal checks for conditional connectivity", "spx"};
  app.require_subcommand(1);
  // Subcommands inherit this; a bare -h would clash with --h.
  app.set_help_flag("--help", "Print this help message and exit");

  ParamFlags construct_p;
  std::string family;
  std::string format = "graph6";
  std::string blocks_path;
  int t = 1;
  std::string extra;
  bool construct_relaxed = false;
  auto* construct = app.add_subcommand("construct", "Build an extremal family member");
  construct->add_option("--family", family, "g-kappa | b-lambda | k-family | f-lambda")
      ->required()
      ->check(CLI::IsMember({"g-kappa", "b-lambda", "k-family", "f-lambda"}));
  construct_p.attach(construct);
  construct->add_option("--t", t, "k-family: pendant-to-K_h edges")->capture_default_str();
  construct->add_option("--extra", extra, "k-family: extra edges as clique:small,...");
  construct->add_option("--format", format, "graph6 | dot | json")
      ->capture_default_str()
      ->check(CLI::IsMember({"graph6", "dot", "json"}));
  construct->add_option("--blocks", blocks_path, "Write the block map JSON sidecar here");
  construct->add_flag("--relaxed-threshold", construct_relaxed, "Allow n below (lambda+1)(h+1)^2");

  std::string kind;
  int inv_r = 2;
  int inv_h = 0;
  bool use_oracle = false;
  std::string inv_input = "-";
  auto* invariant = app.add_subcommand("invariant", "Conditional connectivity with certificate");
  invariant->add_option("--kind", kind, "kappa | lambda | classical-kappa | classical-lambda")
      ->required()
      ->check(CLI::IsMember({"kappa", "lambda", "classical-kappa", "classical-lambda"}));
  invariant->add_option("--r", inv_r, "Component count")->capture_default_str();
  invariant->add_option("--h", inv_h, "Extra size")->capture_default_str();
  invariant->add_flag("--oracle", use_oracle, "Use the brute-force reference (value only)");
  invariant->add_option("input", inv_input, "graph6 or edge-list JSON file, - for stdin")->capture_default_str();

  std::string rho_input = "-";
  double tolerance = 1e-12;
  double epsilon = 1e-9;
  auto* rho = app.add_subcommand("rho", "Perron root and vector");
  rho->add_option("input", rho_input, "graph6 or edge-list JSON file, - for stdin")->capture_default_str();
  rho->add_option("--tolerance", tolerance, "Residual tolerance")->capture_default_str();

  std::string bound_kind;
  std::optional<std::string> bound_input;
  std::optional<int> bound_n;
  std::optional<int> bound_m;
  std::optional<int> bound_delta;
  int bound_r = 2;
  int bound_h = 1;
  auto* bound = app.add_subcommand("bound", "Spectral upper bound or clique bracket");
  bound->add_option("--kind", bound_kind, "hsf | bracket")->required()->check(CLI::IsMember({"hsf", "bracket"}));
  bound->add_option("input", bound_input, "Graph to test against the bound");
  bound->add_option("--n", bound_n, "Order");
  bound->add_option("--m", bound_m, "hsf: edge count");
  bound->add_option("--delta", bound_delta, "hsf: minimum degree");
  bound->add_option("--r", bound_r, "bracket: component count")->capture_default_str();
  bound->add_option("--h", bound_h, "bracket: extra size")->capture_default_str();
  bound->add_option("--tolerance", tolerance, "Residual tolerance")->capture_default_str();
  bound->add_option("--epsilon", epsilon, "Comparison margin")->capture_default_str();

  ParamFlags verify_p;
  std::string theorem;
  std::optional<std::string> mode;
  std::vector<std::uint64_t> seeds;
  VerifyOptions opts;
  std::optional<int> threads;
  std::string checkpoint;
  bool no_timing = false;
  bool verify_relaxed = false;
  auto* verify = app.add_subcommand("verify", "Check an extremal result by search");
  verify->add_option("--theorem", theorem, "1.2 (vertex) | 1.3 (edge) | lemma-3.4 (k-family) | bracket")
      ->required()
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, std::string>{{"1.2", "1.2"}, {"vertex", "1.2"}, {"1.3", "1.3"}, {"edge", "1.3"},
                                             {"lemma-3.4", "lemma-3.4"}, {"k-family", "lemma-3.4"},
                                             {"bracket", "bracket"}}));
  verify_p.attach(verify);
  verify->add_option("--mode", mode, "exhaustive | neighborhood | randomized | family");
  verify->add_option("--seed", seeds, "Seeds for randomized mode, one chain each");
  verify->add_option("--iterations", opts.iterations, "Proposals per chain")->capture_default_str();
  verify->add_option("--temperature", opts.temperature, "Metropolis temperature")->capture_default_str();
  verify->add_option("--restart-interval", opts.restart_interval, "Proposals between restarts")
      ->capture_default_str();
  verify->add_option("--edit-distance", opts.edit_distance, "Neighborhood radius")->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads (default: SPX_THREADS or 1)");
  verify->add_option("--shards", opts.shards, "Mask-range shards")->capture_default_str();
  verify->add_option("--checkpoint", checkpoint, "JSON-lines shard log for resumable runs");
  verify->add_flag("--long-running", opts.long_running, "Allow exhaustive search at n = 8");
  verify->add_flag("--relaxed-threshold", verify_relaxed, "Probe below n >= (lambda+1)(h+1)^2 without asserting");
  verify->add_flag("--no-timing", no_timing, "Leave wall_clock out of the report");
  verify->add_option("--tolerance", tolerance, "Residual tolerance")->capture_default_str();
  verify->add_option("--epsilon", epsilon, "Comparison margin")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n';
    return kExitParam;
  }

  try {
    if (construct->parsed()) {
      const OrderThreshold threshold = construct_relaxed ? OrderThreshold::relaxed : OrderThreshold::enforce;
      std::optional<LabeledFamily> f;
      Graph g;
      if (family == "g-kappa") {
        f = g_kappa(construct_p.vertex());
      } else if (family == "b-lambda") {
        f = b_lambda(construct_p.edge(), threshold);
      } else if (family == "k-family") {
        f = k_family(construct_p.edge(), KAttachment{t, parse_extra(extra)}, threshold);
      } else {
        if (!construct_p.lambda) throw ParamError("--lambda is required");
        g = f_lambda(construct_p.order(), construct_p.delta, *construct_p.lambda);
      }
      if (f) g = f->graph;
      if (!blocks_path.empty()) {
        if (!f) throw ParamError("f-lambda has no block map");
        std::ofstream sidecar(blocks_path);
        if (!sidecar) throw FormatError("cannot write " + blocks_path);
        sidecar << blocks_json(*f).dump(2) << '\n';
      }
      if (format == "graph6") {
        out << graph6_encode(g) << '\n';
      } else if (format == "dot") {
        out << to_dot(g);
      } else {
        out << to_edge_list_json(g).dump() << '\n';
      }
      return kExitOk;
    }

    if (invariant->parsed()) {
      const Graph g = load_graph(inv_input, in);
      nlohmann::ordered_json doc;
      doc["kind"] = kind;
      if (kind == "kappa" || kind == "lambda") {
        doc["r"] = inv_r;
        doc["h"] = inv_h;
      }
      if (use_oracle) {
        if (kind != "kappa" && kind != "lambda") throw ParamError("--oracle applies to kappa and lambda");
        const std::optional<int> v = kind == "kappa" ? kappa_oracle(g, inv_r, inv_h) : lambda_oracle(g, inv_r, inv_h);
        doc["value"] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
      } else if (kind == "kappa" || kind == "lambda") {
        const nlohmann::json body =
            kind == "kappa" ? to_json(kappa_h_r(g, inv_r, inv_h)) : to_json(lambda_h_r(g, inv_r, inv_h));
        doc["value"] = body["value"];
        doc["cut"] = body["cut"];
        doc["components"] = body["components"];
      } else {
        const ClassicalConnectivity c = kind == "classical-kappa" ? classical_kappa(g) : classical_lambda(g);
        doc["value"] = c.value ? nlohmann::ordered_json(*c.value) : nlohmann::ordered_json(nullptr);
        if (c.conventional) doc["conventional"] = *c.conventional;
      }
      out << doc.dump() << '\n';
      return kExitOk;
    }

    if (rho->parsed()) {
      SpectralConfig cfg;
      cfg.tolerance = tolerance;
      out << to_json(perron(load_graph(rho_input, in), cfg)).dump() << '\n';
      return kExitOk;
    }

    if (bound->parsed()) {
      const SpectralConfig cfg = spectral_config(tolerance, epsilon);
      std::optional<Graph> g;
      if (bound_input) g = load_graph(*bound_input, in);
      nlohmann::ordered_json doc;
      doc["kind"] = bound_kind;
      if (bound_kind == "hsf") {
        const int n = g ? g->order() : bound_n.value_or(-1);
        const int m = g ? g->size() : bound_m.value_or(-1);
        const int d = g ? min_degree(*g) : bound_delta.value_or(-1);
        if (!g && (!bound_n || !bound_m || !bound_delta)) throw ParamError("hsf needs a graph or --n, --m and --delta");
        const double b = hsf_bound(n, m, d);
        doc["n"] = n;
        doc["m"] = m;
        doc["delta"] = d;
        doc["bound"] = b;
        if (g) {
          const double r = spectral_radius(*g, cfg);
          doc["rho"] = r;
          doc["satisfied"] = r <= b + cfg.comparison_epsilon;
          doc["equality_class"] = hsf_equality_class(*g);
        }
      } else {
        const int n = g ? g->order() : bound_n.value_or(-1);
        if (!g && !bound_n) throw ParamError("bracket needs a graph or --n");
        const auto [lo, hi] = clique_bracket(n, bound_r, bound_h);
        doc["n"] = n;
        doc["r"] = bound_r;
        doc["h"] = bound_h;
        doc["lower"] = lo;
        doc["upper"] = hi;
        if (g) {
          const double r = spectral_radius(*g, cfg);
          doc["rho"] = r;
          doc["satisfied"] = r > lo + cfg.comparison_epsilon && r < hi - cfg.comparison_epsilon;
        }
      }
      out << doc.dump() << '\n';
      return kExitOk;
    }

    // verify
    opts.spectral = spectral_config(tolerance, epsilon);
    opts.threads = threads ? *threads : default_threads();
    if (opts.threads < 1) throw ParamError("--threads must be >= 1");
    if (!seeds.empty()) opts.seeds = seeds;
    if (!checkpoint.empty()) opts.checkpoint = checkpoint;
    opts.threshold = verify_relaxed ? OrderThreshold::relaxed : OrderThreshold::enforce;

    if (theorem == "bracket") {
      const ExtremalParams p = verify_p.edge();
      const BracketReport r = bracket_sweep({p}, opts.spectral, opts.threshold);
      out << to_json(r).dump() << '\n';
      return r.passed() || verify_relaxed ? kExitOk : kExitVerificationFailed;
    }
    VerificationReport report;
    if (theorem == "1.2") {
      opts.mode = parse_search_mode(mode.value_or("exhaustive"));
      report = verify_vertex_extremal(verify_p.vertex(), opts);
    } else if (theorem == "1.3") {
      opts.mode = parse_search_mode(mode.value_or("randomized"));
      report = verify_edge_extremal(verify_p.edge(), opts);
    } else {
      if (mode && *mode != "family") throw ParamError("lemma-3.4 runs in family mode only");
      opts.mode = SearchMode::family;
      report = verify_k_family(verify_p.edge(), opts);
    }
    out << to_json(report, !no_timing).dump() << '\n';
    if (!report.passed() && report.threshold_enforced) {
      err << "verification failed: the maximizers are not exactly the construction's isomorphism class\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  } catch (const ParamError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParam;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  }
}

}  // namespace spx
