#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "spx/conn.hpp"
#include "spx/errors.hpp"
#include "spx/graph_io.hpp"
#include "spx/isomorphism.hpp"
#include "spx/verify.hpp"

using namespace spx;

namespace {

std::string stable(const VerificationReport& r) { return to_json(r, false).dump(); }

std::filesystem::path scratch_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "spx_test_verify";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::filesystem::remove(path);
  return path;
}

std::vector<std::string> read_lines(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("class filter edge window and rejections") {
  const ClassFilter f(ExtremalParams::vertex(6, 2, 1, 1, 1));
  CHECK(f.min_edges() == 5);
  CHECK(f.max_edges() == 9);
  FilterCounts counts;
  CHECK_FALSE(f.admit(complete(6), counts));
  CHECK(counts.edge_window == 1);
  CHECK_FALSE(f.admit(cycle(6), counts));
  CHECK(counts.min_degree == 1);
  CHECK_FALSE(f.admit(disjoint_union(complete(4), path(2)), counts));
  CHECK(counts.connectivity == 1);
  CHECK(f.admit(g_kappa(ExtremalParams::vertex(6, 2, 1, 1, 1)).graph, counts));

  const ClassFilter e(ExtremalParams::edge(8, 2, 1, 1, 1));
  CHECK(e.min_edges() == 7);
  CHECK(e.max_edges() == 28 - 11);
  CHECK(e.admit(b_lambda(ExtremalParams::edge(8, 2, 1, 1, 1)).graph));
  // Star: minimum degree 1 but no edge cut leaves two blocks of order >= 2 with one edge.
  CHECK_FALSE(e.admit(star(7), counts));
}

TEST_CASE("enumeration is shard independent") {
  const ExtremalParams p = ExtremalParams::vertex(6, 2, 1, 1, 1);
  const SearchSpace whole = SearchSpace::full(p);
  CHECK(whole.hi == (1U << 15));
  std::vector<std::string> all;
  const FilterCounts total = enumerate_class(whole, [&](const Graph& g) { all.push_back(graph6_encode(g)); });
  CHECK(!all.empty());

  for (int pieces : {2, 5, 64}) {
    std::vector<std::string> joined;
    FilterCounts sum;
    // Visit the pieces back to front; the union must not care.
    for (int i = pieces - 1; i >= 0; --i) {
      SearchSpace s = whole;
      s.lo = whole.hi * i / pieces;
      s.hi = whole.hi * (i + 1) / pieces;
      sum += enumerate_class(s, [&](const Graph& g) { joined.push_back(graph6_encode(g)); });
    }
    CHECK(sum == total);
    CHECK(std::multiset<std::string>(joined.begin(), joined.end()) ==
          std::multiset<std::string>(all.begin(), all.end()));
  }

  const ClassFilter filter(p);
  for (const std::string& s : all) CHECK(filter.admit(graph6_decode(s)));
  CHECK(std::set<std::string>(all.begin(), all.end()).size() == all.size());
  CHECK_THROWS_AS(SearchSpace::full(ExtremalParams::vertex(9, 2, 1, 1, 1)), ParamError);
}

TEST_CASE("maximum tracker") {
  MaximumTracker t;
  CHECK(t.empty());
  CHECK_THROWS_AS(t.top(), ParamError);
  const Graph p4 = path(4);
  const Graph s3 = star(3);
  t.offer(p4, spectral_radius(p4));
  t.offer(s3, spectral_radius(s3));
  t.offer(relabel(s3, std::vector<int>{3, 2, 1, 0}), spectral_radius(s3));
  CHECK(t.band().size() == 1);
  CHECK(t.top() == doctest::Approx(std::sqrt(3.0)));
  CHECK(*t.runner_up() == doctest::Approx(spectral_radius(p4)));

  // Ties within epsilon are kept side by side.
  MaximumTracker ties;
  ties.offer(cycle(4), 2.0);
  ties.offer(star(4), 2.0 + 1e-12);
  CHECK(ties.band().size() == 2);
  CHECK(*ties.runner_up() == doctest::Approx(2.0));

  MaximumTracker a, b, ab, ba;
  a.offer(p4, spectral_radius(p4));
  b.offer(s3, spectral_radius(s3));
  ab.merge(a);
  ab.merge(b);
  ba.merge(b);
  ba.merge(a);
  CHECK(ab.to_json() == ba.to_json());

  const MaximumTracker back = MaximumTracker::from_json(nlohmann::json::parse(ab.to_json().dump()), 1e-9);
  CHECK(back.to_json() == ab.to_json());
}

TEST_CASE("vertex version at order 6") {
  const ExtremalParams p = ExtremalParams::vertex(6, 2, 1, 1, 1);
  const VerificationReport r = verify_vertex_extremal(p);
  CHECK(r.passed());
  CHECK(r.unique_up_to_iso);
  CHECK(r.matches_construction);
  CHECK(r.candidates == (1U << 15));
  CHECK(*r.runner_up_gap > 1e-6);
  REQUIRE(r.maximizers.size() == 1);
  CHECK(are_isomorphic(graph6_decode(r.maximizers.front().graph6), g_kappa(p).graph));
  CHECK(std::abs(*r.rho_max - r.construction.rho) <= 1e-9);
  // Every reported maximizer passes the filters on its own.
  for (const auto& m : r.maximizers) CHECK(ClassFilter(p).admit(graph6_decode(m.graph6)));

  const nlohmann::ordered_json j = to_json(r);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j.contains("wall_clock"));
  CHECK_FALSE(to_json(r, false).contains("wall_clock"));
}

TEST_CASE("reports do not depend on threads or shards") {
  const ExtremalParams p = ExtremalParams::vertex(6, 2, 1, 1, 1);
  VerifyOptions one;
  VerifyOptions many;
  many.threads = 4;
  VerifyOptions coarse;
  coarse.shards = 3;
  coarse.threads = 2;
  const std::string base = stable(verify_vertex_extremal(p, one));
  CHECK(stable(verify_vertex_extremal(p, many)) == base);
  CHECK(stable(verify_vertex_extremal(p, coarse)) == base);
}

TEST_CASE("checkpoint resume") {
  const ExtremalParams p = ExtremalParams::vertex(6, 2, 1, 1, 1);
  const auto path = scratch_file("resume.jsonl");
  VerifyOptions opts;
  opts.shards = 8;
  opts.checkpoint = path;
  const std::string first = stable(verify_vertex_extremal(p, opts));
  std::vector<std::string> lines = read_lines(path);
  CHECK(lines.size() == 8);
  const nlohmann::json rec = nlohmann::json::parse(lines.front());
  CHECK(rec.contains("range"));
  CHECK(rec.contains("examined"));
  CHECK(rec.contains("local_max"));
  CHECK(rec.contains("maximizers"));

  // Keep three shards plus a torn line; the rest must be recomputed to the same report.
  {
    std::ofstream out(path, std::ios::trunc);
    for (int i = 0; i < 3; ++i) out << lines[i] << '\n';
    out << lines[3].substr(0, lines[3].size() / 2);
  }
  CHECK(stable(verify_vertex_extremal(p, opts)) == first);

  // Fully checkpointed: nothing is recomputed and nothing appended.
  const auto before = read_lines(path).size();
  CHECK(stable(verify_vertex_extremal(p, opts)) == first);
  CHECK(read_lines(path).size() == before);

  const ExtremalParams other = ExtremalParams::vertex(6, 2, 1, 2, 1);
  CHECK_THROWS_AS(verify_vertex_extremal(other, opts), FormatError);
  opts.shards = 5;
  CHECK_THROWS_AS(verify_vertex_extremal(p, opts), FormatError);
}

TEST_CASE("neighborhood search") {
  const ExtremalParams p = ExtremalParams::vertex(7, 2, 1, 2, 1);
  VerifyOptions opts;
  opts.mode = SearchMode::neighborhood;
  const VerificationReport r = verify_vertex_extremal(p, opts);
  CHECK(r.passed());
  CHECK(r.candidates == 1 + 21 + 21 * 20 / 2);
  opts.edit_distance = -1;
  CHECK_THROWS_AS(verify_vertex_extremal(p, opts), ParamError);
}

TEST_CASE("random adversary is reproducible") {
  const ExtremalParams p = ExtremalParams::edge(8, 2, 1, 1, 1);
  VerifyOptions opts;
  opts.mode = SearchMode::randomized;
  opts.iterations = 3000;
  opts.restart_interval = 500;
  opts.seeds = {1, 2, 3};
  const VerificationReport a = random_adversary(p, opts);
  CHECK(a.passed());
  CHECK(a.examined > 0);
  opts.threads = 3;
  CHECK(stable(random_adversary(p, opts)) == stable(a));
  opts.seeds = {7};
  opts.threads = 1;
  CHECK(stable(random_adversary(p, opts)) == stable(random_adversary(p, opts)));
  opts.seeds.clear();
  CHECK_THROWS_AS(random_adversary(p, opts), ParamError);
  opts.seeds = {1};
  opts.temperature = 0;
  CHECK_THROWS_AS(random_adversary(p, opts), ParamError);
}

TEST_CASE("randomized vertex version") {
  VerifyOptions opts;
  opts.mode = SearchMode::randomized;
  opts.iterations = 2000;
  opts.seeds = {5};
  CHECK(verify_vertex_extremal(ExtremalParams::vertex(9, 2, 1, 2, 1), opts).passed());
}

TEST_CASE("parameter errors stop the search") {
  CHECK_THROWS_AS(verify_vertex_extremal(ExtremalParams::vertex(4, 2, 1, 1, 1)), ParamError);
  CHECK_THROWS_AS(verify_edge_extremal(ExtremalParams::edge(8, 2, 1, 2, 1)), ParamError);
  CHECK_THROWS_AS(verify_edge_extremal(ExtremalParams::vertex(6, 2, 1, 1, 1)), ParamError);
  CHECK_THROWS_AS(verify_vertex_extremal(ExtremalParams::edge(8, 2, 1, 1, 1)), ParamError);
  CHECK_THROWS_AS(verify_k_family(ExtremalParams::edge(8, 2, 1, 1, 1)), ParamError);
  // Order 8 exhaustion needs the explicit gate.
  CHECK_THROWS_AS(verify_edge_extremal(ExtremalParams::edge(8, 2, 1, 1, 1)), ParamError);
  VerifyOptions family;
  family.mode = SearchMode::family;
  CHECK_THROWS_AS(verify_vertex_extremal(ExtremalParams::vertex(6, 2, 1, 1, 1), family), ParamError);
}

TEST_CASE("below the order threshold the edge version can still be probed") {
  VerifyOptions opts;
  opts.threshold = OrderThreshold::relaxed;
  for (int n : {6, 7}) {
    const VerificationReport r = verify_edge_extremal(ExtremalParams::edge(n, 2, 1, 1, 1), opts);
    CHECK_FALSE(r.threshold_enforced);
    CHECK(r.examined > 0);
  }
}

TEST_CASE("K family") {
  const ExtremalParams p = ExtremalParams::edge(12, 2, 1, 1, 2);
  const auto members = k_family_members(p);
  REQUIRE(!members.empty());
  for (const LabeledFamily& f : members) CHECK(lambda_h_r(f.graph, 2, 1).value() == 2);
  const VerificationReport r = verify_k_family(p);
  CHECK(r.passed());
  CHECK(std::abs(*r.rho_max - spectral_radius(b_lambda(p).graph)) <= 1e-9);

  VerifyOptions family;
  family.mode = SearchMode::family;
  CHECK(verify_edge_extremal(p, family).passed());
}

TEST_CASE("bracket sweep") {
  const std::vector<ExtremalParams> params = {
      ExtremalParams::edge(8, 2, 1, 1, 1), ExtremalParams::edge(12, 2, 1, 1, 2),
      ExtremalParams::edge(18, 3, 1, 1, 2), ExtremalParams::edge(27, 2, 2, 1, 2)};
  const BracketReport b = bracket_sweep(params);
  CHECK(b.passed());
  REQUIRE(b.entries.size() == 4);
  for (const BracketEntry& e : b.entries) {
    CHECK(e.members > 0);
    CHECK(e.violations.empty());
    CHECK(e.lower + 1 == e.upper);
    CHECK(e.min_rho > e.lower);
    CHECK(e.max_rho < e.upper);
  }
  CHECK(to_json(b)["passed"] == true);
}
