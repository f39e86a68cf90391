#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spx/families.hpp"
#include "spx/graph.hpp"
#include "spx/spectral.hpp"

namespace spx {

inline constexpr const char* kReportSchema = "spx-verification-report/1";
inline constexpr int kMaxExhaustiveOrder = 8;

/// Per-filter rejection counts, in filter order.
struct FilterCounts {
  std::uint64_t edge_window = 0;
  std::uint64_t min_degree = 0;
  std::uint64_t connectivity = 0;
  std::uint64_t conditional = 0;

  FilterCounts& operator+=(const FilterCounts& o);
  friend bool operator==(const FilterCounts&, const FilterCounts&) = default;
};

/// Membership test for the class of connected graphs of order n with minimum degree delta and
/// conditional connectivity exactly p.value. Filters run cheapest first:
/// edge-count window, minimum degree, connectivity, conditional connectivity.
class ClassFilter {
 public:
  explicit ClassFilter(const ExtremalParams& p);

  /// Edge counts outside [min_edges, max_edges] cannot belong to the class.
  int min_edges() const { return min_edges_; }
  int max_edges() const { return max_edges_; }

  /// True when g is a member; otherwise bumps the counter of the first failing filter.
  bool admit(const Graph& g, FilterCounts& rejected) const;
  bool admit(const Graph& g) const;

 private:
  ExtremalParams p_;
  int min_edges_;
  int max_edges_;
};

/// Labeled graphs of order n whose graph6-order edge mask lies in [lo, hi).
struct SearchSpace {
  ExtremalParams params;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  /// The whole mask space [0, 2^C(n,2)) for n <= 8.
  static SearchSpace full(const ExtremalParams& p);
};

/// Calls visit on every class member in the range exactly once, in increasing mask order.
FilterCounts enumerate_class(const SearchSpace& space, const std::function<void(const Graph&)>& visit);

/// Maximum-rho bookkeeping over a stream of graphs.
///
/// Keeps one representative (smallest graph6 string) per isomorphism class whose rho is within
/// epsilon of the running maximum, and the best rho among everything that dropped out of that
/// band. Isomorphism is only tested up to order 16; beyond that equal graphs are merged.
class MaximumTracker {
 public:
  struct Entry {
    std::string graph6;
    double rho = 0.0;
  };

  explicit MaximumTracker(double epsilon = 1e-9) : epsilon_(epsilon) {}

  void offer(const Graph& g, double rho);
  void offer(const Entry& e);
  /// Absorbs another tracker; merging in a fixed order gives a fixed result.
  void merge(const MaximumTracker& other);

  bool empty() const { return band_.empty(); }
  double top() const;
  /// Band classes by decreasing rho (ties by graph6).
  std::vector<Entry> band() const;
  /// Best rho of any graph not isomorphic to the top class.
  std::optional<double> runner_up() const;
  std::optional<double> below_band() const { return below_; }

  nlohmann::ordered_json to_json() const;
  static MaximumTracker from_json(const nlohmann::json& j, double epsilon);

 private:
  struct Member {
    Entry entry;
    Graph graph;
  };
  void insert(const Graph& g, std::string key, double rho);
  void note_below(double rho);

  double epsilon_;
  std::vector<Member> band_;
  std::optional<double> below_;
};

enum class SearchMode { exhaustive, neighborhood, randomized, family };

struct VerifyOptions {
  SearchMode mode = SearchMode::exhaustive;
  int threads = 1;
  /// Mask-range shards for exhaustive runs; fixed so reports do not depend on the thread count.
  int shards = 64;
  /// Exhaustive search at order 8 is refused unless set.
  bool long_running = false;
  /// JSON-lines file of completed shards; existing records are reused on restart.
  std::optional<std::filesystem::path> checkpoint;
  /// Neighborhood mode: all labeled graphs within this many edge toggles of the construction.
  int edit_distance = 2;
  /// Randomized mode: proposals per chain and one chain per seed.
  long iterations = 100'000;
  std::vector<std::uint64_t> seeds = {42};
  double temperature = 0.5;
  /// Proposals between restarts; 0 disables restarts.
  long restart_interval = 10'000;
  OrderThreshold threshold = OrderThreshold::enforce;
  SpectralConfig spectral;
};

std::string to_string(SearchMode m);
SearchMode parse_search_mode(const std::string& s);

struct VerificationReport {
  std::string check;
  ExtremalParams params;
  bool threshold_enforced = true;
  SearchMode mode = SearchMode::exhaustive;
  /// Candidates looked at before filtering.
  std::uint64_t candidates = 0;
  /// Candidates that passed every class filter.
  std::uint64_t examined = 0;
  FilterCounts rejected;
  std::optional<double> rho_max;
  std::vector<MaximumTracker::Entry> maximizers;
  bool unique_up_to_iso = false;
  bool matches_construction = false;
  std::optional<double> runner_up_gap;
  MaximumTracker::Entry construction;
  std::string regime;
  /// Edge version with r <= 3, where the bundle description degenerates.
  bool degenerate_bundle = false;
  std::vector<std::uint64_t> seeds;
  double wall_clock = 0.0;

  /// Some class member was examined, all maximizers form one class and it is the construction's.
  bool passed() const { return examined > 0 && unique_up_to_iso && matches_construction; }
};

/// Report as one JSON document; wall_clock is left out when include_timing is false.
nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = true);

/// Vertex version: every maximizer of rho over the class must be isomorphic to g_kappa(p).
/// Modes: exhaustive (n <= 7, or 8 with long_running), neighborhood, randomized.
VerificationReport verify_vertex_extremal(const ExtremalParams& p, const VerifyOptions& opts = {});

/// Edge version against b_lambda(p). Modes: exhaustive, neighborhood, randomized, family.
VerificationReport verify_edge_extremal(const ExtremalParams& p, const VerifyOptions& opts = {});

/// Maximum of rho over all members of the K family equals rho(b_lambda(p)) and is attained only by it.
/// Requires lambda >= r.
VerificationReport verify_k_family(const ExtremalParams& p, const VerifyOptions& opts = {});

/// Seeded Markov chain of single edge toggles over the class, started from the construction
/// and periodically restarted from it or from a random class member. Moves leaving the class are
/// rejected; others are accepted by the Metropolis rule at opts.temperature. One chain per seed.
VerificationReport random_adversary(const ExtremalParams& p, const VerifyOptions& opts = {});

/// All members of the K family (every t and every extra-edge placement, up to the symmetry of
/// the unused clique vertices) whose conditional edge-connectivity equals lambda, one per
/// isomorphism class (n <= 16) or per labeled graph otherwise.
std::vector<LabeledFamily> k_family_members(const ExtremalParams& p,
                                            OrderThreshold threshold = OrderThreshold::enforce);

struct BracketEntry {
  ExtremalParams params;
  std::size_t members = 0;
  double lower = 0.0;
  double upper = 0.0;
  double min_rho = 0.0;
  double max_rho = 0.0;
  /// graph6 of members outside (lower + epsilon, upper - epsilon).
  std::vector<std::string> violations;
};

struct BracketReport {
  std::vector<BracketEntry> entries;
  bool passed() const;
};

/// Checks lower < rho < upper with margin cfg.comparison_epsilon for every K family member.
BracketReport bracket_sweep(const std::vector<ExtremalParams>& params, const SpectralConfig& cfg = {},
                            OrderThreshold threshold = OrderThreshold::enforce);

nlohmann::ordered_json to_json(const BracketReport& r);

}  // namespace spx
