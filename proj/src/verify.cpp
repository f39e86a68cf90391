#include "spx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iterator>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "spx/conn.hpp"
#include "spx/errors.hpp"
#include "spx/graph_io.hpp"
#include "spx/isomorphism.hpp"

namespace spx {

FilterCounts& FilterCounts::operator+=(const FilterCounts& o) {
  edge_window += o.edge_window;
  min_degree += o.min_degree;
  connectivity += o.connectivity;
  conditional += o.conditional;
  return *this;
}

ClassFilter::ClassFilter(const ExtremalParams& p) : p_(p) {
  p.validate(OrderThreshold::relaxed);
  const int n = p.n;
  min_edges_ = std::max(n - 1, (n * p.delta + 1) / 2);
  // Some component A of the split has h + 1 <= |A| and leaves >= h + 1 vertices outside it
  // (and outside the vertex cut), so at least this many pairs are missing.
  const int missing = p.kind == ConnectivityKind::vertex ? (p.h + 1) * (n - p.value - p.h - 1)
                                                         : (p.h + 1) * (n - p.h - 1) - p.value;
  max_edges_ = pair_count(n) - std::max(0, missing);
}

bool ClassFilter::admit(const Graph& g, FilterCounts& rejected) const {
  if (g.order() != p_.n || g.size() < min_edges_ || g.size() > max_edges_) {
    ++rejected.edge_window;
    return false;
  }
  if (min_degree(g) != p_.delta) {
    ++rejected.min_degree;
    return false;
  }
  if (!is_connected(g)) {
    ++rejected.connectivity;
    return false;
  }
  const std::optional<int> v = p_.kind == ConnectivityKind::vertex ? kappa_h_r_at_most(g, p_.r, p_.h, p_.value)
                                                                    : lambda_h_r_at_most(g, p_.r, p_.h, p_.value);
  if (v != p_.value) {
    ++rejected.conditional;
    return false;
  }
  return true;
}

bool ClassFilter::admit(const Graph& g) const {
  FilterCounts ignored;
  return admit(g, ignored);
}

SearchSpace SearchSpace::full(const ExtremalParams& p) {
  if (p.n < 1 || p.n > kMaxExhaustiveOrder) {
    throw ParamError("exhaustive search is limited to 1 <= n <= " + std::to_string(kMaxExhaustiveOrder));
  }
  return {p, 0, std::uint64_t{1} << pair_count(p.n)};
}

FilterCounts enumerate_class(const SearchSpace& space, const std::function<void(const Graph&)>& visit) {
  const ClassFilter filter(space.params);
  FilterCounts rejected;
  for (std::uint64_t mask = space.lo; mask < space.hi; ++mask) {
    const int m = std::popcount(mask);
    if (m < filter.min_edges() || m > filter.max_edges()) {
      ++rejected.edge_window;
      continue;
    }
    const Graph g = Graph::from_mask(space.params.n, mask);
    if (filter.admit(g, rejected)) visit(g);
  }
  return rejected;
}

namespace {

bool same_class(const Graph& a, const Graph& b) {
  if (a.order() > kMaxIsomorphismOrder) return a == b;
  return are_isomorphic(a, b);
}

}  // namespace

double MaximumTracker::top() const {
  if (band_.empty()) throw ParamError("maximum of an empty tracker");
  double t = band_.front().entry.rho;
  for (const Member& m : band_) t = std::max(t, m.entry.rho);
  return t;
}

void MaximumTracker::note_below(double rho) {
  if (!below_ || rho > *below_) below_ = rho;
}

void MaximumTracker::offer(const Graph& g, double rho) {
  if (!band_.empty() && rho < top() - epsilon_) {
    note_below(rho);
    return;
  }
  insert(g, graph6_encode(g), rho);
}

void MaximumTracker::offer(const Entry& e) {
  if (!band_.empty() && e.rho < top() - epsilon_) {
    note_below(e.rho);
    return;
  }
  insert(graph6_decode(e.graph6), e.graph6, e.rho);
}

void MaximumTracker::insert(const Graph& g, std::string key, double rho) {
  bool placed = false;
  for (Member& m : band_) {
    if (!same_class(m.graph, g)) continue;
    if (key < m.entry.graph6) m = Member{{std::move(key), rho}, g};
    placed = true;
    break;
  }
  if (!placed) band_.push_back(Member{{std::move(key), rho}, g});
  const double t = top();
  std::erase_if(band_, [&](const Member& m) {
    if (m.entry.rho >= t - epsilon_) return false;
    note_below(m.entry.rho);
    return true;
  });
}

void MaximumTracker::merge(const MaximumTracker& other) {
  for (const Member& m : other.band_) {
    if (!band_.empty() && m.entry.rho < top() - epsilon_) {
      note_below(m.entry.rho);
    } else {
      insert(m.graph, m.entry.graph6, m.entry.rho);
    }
  }
  if (other.below_) note_below(*other.below_);
}

std::vector<MaximumTracker::Entry> MaximumTracker::band() const {
  std::vector<Entry> out;
  for (const Member& m : band_) out.push_back(m.entry);
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    if (a.rho != b.rho) return a.rho > b.rho;
    return a.graph6 < b.graph6;
  });
  return out;
}

std::optional<double> MaximumTracker::runner_up() const {
  std::optional<double> best = below_;
  const std::vector<Entry> b = band();
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (!best || b[i].rho > *best) best = b[i].rho;
  }
  return best;
}

nlohmann::ordered_json MaximumTracker::to_json() const {
  nlohmann::ordered_json out;
  out["local_max"] = band_.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(top());
  nlohmann::ordered_json graphs = nlohmann::ordered_json::array();
  nlohmann::ordered_json rhos = nlohmann::ordered_json::array();
  for (const Entry& e : band()) {
    graphs.push_back(e.graph6);
    rhos.push_back(e.rho);
  }
  out["maximizers"] = std::move(graphs);
  out["maximizer_rho"] = std::move(rhos);
  out["below_band"] = below_ ? nlohmann::ordered_json(*below_) : nlohmann::ordered_json(nullptr);
  return out;
}

MaximumTracker MaximumTracker::from_json(const nlohmann::json& j, double epsilon) {
  MaximumTracker t(epsilon);
  try {
    const auto& graphs = j.at("maximizers");
    const auto& rhos = j.at("maximizer_rho");
    if (graphs.size() != rhos.size()) throw FormatError("maximizer lists differ in length");
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      t.offer(Entry{graphs[i].get<std::string>(), rhos[i].get<double>()});
    }
    if (!j.at("below_band").is_null()) t.note_below(j.at("below_band").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed tracker record: ") + e.what());
  }
  return t;
}

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::exhaustive:
      return "exhaustive";
    case SearchMode::neighborhood:
      return "neighborhood";
    case SearchMode::randomized:
      return "randomized";
    case SearchMode::family:
      return "family";
  }
  return "?";
}

SearchMode parse_search_mode(const std::string& s) {
  for (SearchMode m : {SearchMode::exhaustive, SearchMode::neighborhood, SearchMode::randomized, SearchMode::family}) {
    if (to_string(m) == s) return m;
  }
  throw ParamError("unknown search mode '" + s + "'");
}

namespace {

nlohmann::ordered_json counts_json(const FilterCounts& c) {
  nlohmann::ordered_json out;
  out["edge_window"] = c.edge_window;
  out["min_degree"] = c.min_degree;
  out["connectivity"] = c.connectivity;
  out["conditional"] = c.conditional;
  return out;
}

FilterCounts counts_from_json(const nlohmann::json& j) {
  FilterCounts c;
  c.edge_window = j.at("edge_window").get<std::uint64_t>();
  c.min_degree = j.at("min_degree").get<std::uint64_t>();
  c.connectivity = j.at("connectivity").get<std::uint64_t>();
  c.conditional = j.at("conditional").get<std::uint64_t>();
  return c;
}

template <class T>
nlohmann::ordered_json maybe(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json out;
  out["schema"] = kReportSchema;
  out["check"] = r.check;
  out["params"] = nlohmann::ordered_json::parse(to_json(r.params).dump());
  out["threshold_enforced"] = r.threshold_enforced;
  out["mode"] = to_string(r.mode);
  out["candidates"] = r.candidates;
  out["rejected"] = counts_json(r.rejected);
  out["examined"] = r.examined;
  out["rho_max"] = maybe(r.rho_max);
  nlohmann::ordered_json maxes = nlohmann::ordered_json::array();
  for (const auto& e : r.maximizers) {
    nlohmann::ordered_json m;
    m["graph6"] = e.graph6;
    m["rho"] = e.rho;
    maxes.push_back(std::move(m));
  }
  out["maximizers"] = std::move(maxes);
  out["unique_up_to_iso"] = r.unique_up_to_iso;
  out["matches_construction"] = r.matches_construction;
  out["runner_up_gap"] = maybe(r.runner_up_gap);
  nlohmann::ordered_json c;
  c["graph6"] = r.construction.graph6;
  c["rho"] = r.construction.rho;
  c["regime"] = r.regime;
  if (r.params.kind == ConnectivityKind::edge) c["degenerate_bundle"] = r.degenerate_bundle;
  out["construction"] = std::move(c);
  out["seed"] = r.seeds.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.seeds);
  out["passed"] = r.passed();
  if (include_timing) out["wall_clock"] = r.wall_clock;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  std::uint64_t candidates = 0;
  std::uint64_t examined = 0;
  FilterCounts rejected;
  MaximumTracker tracker;

  explicit Tally(double eps) : tracker(eps) {}

  void absorb(const Tally& o) {
    candidates += o.candidates;
    examined += o.examined;
    rejected += o.rejected;
    tracker.merge(o.tracker);
  }
};

LabeledFamily construction_for(const ExtremalParams& p, OrderThreshold threshold) {
  return p.kind == ConnectivityKind::vertex ? g_kappa(p) : b_lambda(p, threshold);
}

VerificationReport start_report(const std::string& check, const ExtremalParams& p, const VerifyOptions& opts,
                                const LabeledFamily& c) {
  VerificationReport r;
  r.check = check;
  r.params = p;
  r.threshold_enforced = opts.threshold == OrderThreshold::enforce;
  r.mode = opts.mode;
  r.construction = {graph6_encode(c.graph), spectral_radius(c.graph, opts.spectral)};
  r.regime = c.regime;
  r.degenerate_bundle = p.kind == ConnectivityKind::edge && p.r <= 3;
  return r;
}

void finish_report(VerificationReport& r, const Tally& t, const Graph& construction) {
  r.candidates = t.candidates;
  r.examined = t.examined;
  r.rejected = t.rejected;
  if (t.tracker.empty()) return;
  r.rho_max = t.tracker.top();
  r.maximizers = t.tracker.band();
  r.unique_up_to_iso = r.maximizers.size() == 1;
  r.matches_construction = std::all_of(r.maximizers.begin(), r.maximizers.end(), [&](const auto& e) {
    return same_class(graph6_decode(e.graph6), construction);
  });
  const std::optional<double> ru = t.tracker.runner_up();
  if (ru) r.runner_up_gap = *r.rho_max - *ru;
}

// ---- exhaustive ----------------------------------------------------------------------------

struct ShardRange {
  std::uint64_t lo;
  std::uint64_t hi;
};

std::vector<ShardRange> shard_ranges(std::uint64_t total, int shards) {
  const std::uint64_t count = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, shards));
  std::vector<ShardRange> out;
  for (std::uint64_t i = 0; i < count; ++i) out.push_back({total * i / count, total * (i + 1) / count});
  return out;
}

Tally run_shard(const ExtremalParams& p, ShardRange range, const SpectralConfig& cfg) {
  Tally t(cfg.comparison_epsilon);
  t.candidates = range.hi - range.lo;
  t.rejected = enumerate_class({p, range.lo, range.hi}, [&](const Graph& g) {
    ++t.examined;
    t.tracker.offer(g, spectral_radius(g, cfg));
  });
  return t;
}

nlohmann::ordered_json shard_record(const ExtremalParams& p, ShardRange range, const Tally& t) {
  nlohmann::ordered_json rec;
  rec["range"] = {range.lo, range.hi};
  rec["params"] = nlohmann::ordered_json::parse(to_json(p).dump());
  rec["examined"] = t.examined;
  const nlohmann::ordered_json tracked = t.tracker.to_json();
  for (const auto& [k, v] : tracked.items()) rec[k] = v;
  rec["rejected"] = counts_json(t.rejected);
  return rec;
}

std::map<std::uint64_t, Tally> load_checkpoint(const std::filesystem::path& path, const ExtremalParams& p,
                                               const std::vector<ShardRange>& ranges, double eps) {
  std::map<std::uint64_t, Tally> done;
  std::ifstream in(path);
  if (!in) return done;
  const nlohmann::json want = to_json(p);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      // A torn final line from an interrupted write is dropped; that shard simply reruns.
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw FormatError(where + ": unparseable checkpoint record");
    }
    try {
      if (rec.at("params") != want) throw FormatError(where + ": checkpoint belongs to different parameters");
      const auto lo = rec.at("range").at(0).get<std::uint64_t>();
      const auto hi = rec.at("range").at(1).get<std::uint64_t>();
      const bool known =
          std::any_of(ranges.begin(), ranges.end(), [&](const ShardRange& r) { return r.lo == lo && r.hi == hi; });
      if (!known) throw FormatError(where + ": checkpoint range does not match the shard layout");
      Tally t(eps);
      t.candidates = hi - lo;
      t.examined = rec.at("examined").get<std::uint64_t>();
      t.rejected = counts_from_json(rec.at("rejected"));
      t.tracker = MaximumTracker::from_json(rec, eps);
      done.insert_or_assign(lo, std::move(t));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(where + ": malformed checkpoint record: " + e.what());
    }
  }
  return done;
}

// Cuts an unterminated last line so appended records start on a line of their own.
void drop_torn_tail(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  const std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  if (body.empty() || body.back() == '\n') return;
  const std::size_t keep = body.find_last_of('\n');
  std::filesystem::resize_file(path, keep == std::string::npos ? 0 : keep + 1);
}

Tally run_exhaustive(const ExtremalParams& p, const VerifyOptions& opts) {
  const SearchSpace space = SearchSpace::full(p);
  if (p.n == kMaxExhaustiveOrder && !opts.long_running) {
    throw ParamError("exhaustive search at n = 8 runs for a long time; pass the long-running flag to allow it");
  }
  if (opts.shards < 1) throw ParamError("shard count must be >= 1");
  const double eps = opts.spectral.comparison_epsilon;
  const std::vector<ShardRange> ranges = shard_ranges(space.hi, opts.shards);

  std::map<std::uint64_t, Tally> restored;
  std::ofstream log;
  if (opts.checkpoint) {
    restored = load_checkpoint(*opts.checkpoint, p, ranges, eps);
    drop_torn_tail(*opts.checkpoint);
    log.open(*opts.checkpoint, std::ios::app);
    if (!log) throw FormatError("cannot open checkpoint file " + opts.checkpoint->string());
  }

  std::vector<std::optional<Tally>> results(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    auto it = restored.find(ranges[i].lo);
    if (it != restored.end()) results[i] = std::move(it->second);
  }

  std::atomic<std::size_t> next{0};
  std::mutex log_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < ranges.size(); i = next++) {
        if (results[i]) continue;
        Tally t = run_shard(p, ranges[i], opts.spectral);
        if (opts.checkpoint) {
          const std::string line = shard_record(p, ranges[i], t).dump();
          std::lock_guard lock(log_mutex);
          log << line << '\n' << std::flush;
        }
        results[i] = std::move(t);
      }
    } catch (...) {
      std::lock_guard lock(log_mutex);
      if (!failure) failure = std::current_exception();
      next = ranges.size();
    }
  };
  const int threads = std::clamp(opts.threads, 1, static_cast<int>(ranges.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  Tally total(eps);
  for (const auto& r : results) total.absorb(*r);
  return total;
}

// ---- neighborhood --------------------------------------------------------------------------

Tally run_neighborhood(const ExtremalParams& p, const Graph& centre, const VerifyOptions& opts) {
  if (opts.edit_distance < 0) throw ParamError("edit distance must be >= 0");
  const ClassFilter filter(p);
  std::vector<Edge> pairs;
  for (int j = 1; j < p.n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const int total = static_cast<int>(pairs.size());
  const int depth = std::min(opts.edit_distance, total);
  Tally t(opts.spectral.comparison_epsilon);
  std::vector<int> idx;
  auto visit = [&](const Graph& g) {
    ++t.candidates;
    if (!filter.admit(g, t.rejected)) return;
    ++t.examined;
    t.tracker.offer(g, spectral_radius(g, opts.spectral));
  };
  // Toggle sets in lexicographic order, smallest first.
  std::function<void(const Graph&, int)> extend = [&](const Graph& g, int from) {
    visit(g);
    if (static_cast<int>(idx.size()) == depth) return;
    for (int k = from; k < total; ++k) {
      idx.push_back(k);
      extend(toggle_edge(g, pairs[k].u, pairs[k].v), k + 1);
      idx.pop_back();
    }
  };
  extend(centre, 0);
  return t;
}

// ---- adversary -----------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, bound) by rejection, independent of the standard library's distributions.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

Tally run_chain(const ExtremalParams& p, const Graph& start, std::uint64_t seed, const VerifyOptions& opts) {
  const ClassFilter filter(p);
  if (!filter.admit(start)) throw ParamError("the construction is not a member of the class");
  std::vector<Edge> pairs;
  for (int j = 1; j < p.n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  Rng rng(seed);
  Tally t(opts.spectral.comparison_epsilon);

  auto propose = [&](const Graph& g) -> std::optional<std::pair<Graph, double>> {
    const Edge& e = pairs[rng.below(pairs.size())];
    Graph c = toggle_edge(g, e.u, e.v);
    ++t.candidates;
    if (!filter.admit(c, t.rejected)) return std::nullopt;
    ++t.examined;
    const double rho = spectral_radius(c, opts.spectral);
    t.tracker.offer(c, rho);
    return std::make_pair(std::move(c), rho);
  };

  Graph state = start;
  double rho = spectral_radius(state, opts.spectral);
  ++t.examined;
  t.tracker.offer(state, rho);
  long restarts = 0;
  for (long step = 1; step <= opts.iterations; ++step) {
    if (opts.restart_interval > 0 && step % opts.restart_interval == 0) {
      state = start;
      if (++restarts % 2 == 1) {
        // Random class member: a walk from the construction that ignores rho.
        for (int k = 0; k < p.n * p.n; ++k) {
          if (auto next = propose(state)) state = std::move(next->first);
        }
      }
      rho = spectral_radius(state, opts.spectral);
    }
    auto next = propose(state);
    if (!next) continue;
    if (next->second >= rho || rng.unit() < std::exp((next->second - rho) / opts.temperature)) {
      state = std::move(next->first);
      rho = next->second;
    }
  }
  return t;
}

Tally run_adversary(const ExtremalParams& p, const Graph& start, const VerifyOptions& opts) {
  if (opts.seeds.empty()) throw ParamError("randomized search needs at least one seed");
  if (opts.iterations < 0) throw ParamError("iteration count must be >= 0");
  if (!(opts.temperature > 0.0)) throw ParamError("temperature must be positive");
  std::vector<std::optional<Tally>> results(opts.seeds.size());
  std::atomic<std::size_t> next{0};
  std::mutex m;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < results.size(); i = next++) results[i] = run_chain(p, start, opts.seeds[i], opts);
    } catch (...) {
      std::lock_guard lock(m);
      if (!failure) failure = std::current_exception();
      next = results.size();
    }
  };
  const int threads = std::clamp(opts.threads, 1, static_cast<int>(results.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  Tally total(opts.spectral.comparison_epsilon);
  for (const auto& r : results) total.absorb(*r);
  return total;
}

// ---- K family ------------------------------------------------------------------------------

struct MemberScan {
  std::vector<LabeledFamily> members;
  std::uint64_t candidates = 0;
  FilterCounts rejected;
};

MemberScan scan_k_family(const ExtremalParams& p, OrderThreshold threshold) {
  if (p.kind != ConnectivityKind::edge) throw ParamError("the K family needs edge-connectivity parameters");
  p.validate(threshold);
  const int n1 = p.n - (p.r - 1) * (p.h + 1);
  const int small_count = (p.r - 1) * (p.h + 1);
  MemberScan scan;
  for (int t = 1; t <= p.delta; ++t) {
    const int extra = p.value - p.r + 1 - p.delta + t;
    if (extra < 0) continue;
    // Clique vertices past the pendant's neighbours and vertex 0 are interchangeable, so the
    // extra edges only ever need the first `extra` of them.
    const int limit = std::min(n1, std::max(1, p.delta - t) + extra);
    std::vector<std::pair<int, int>> candidates;
    for (int x = 0; x < limit; ++x) {
      for (int y = 0; y < small_count; ++y) candidates.emplace_back(x, y);
    }
    KAttachment a{t, {}};
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
      if (static_cast<int>(a.extra.size()) == extra) {
        ++scan.candidates;
        std::optional<LabeledFamily> f;
        try {
          f = k_family(p, a, threshold);
        } catch (const ParamError&) {
          ++scan.rejected.min_degree;
          return;
        }
        if (lambda_h_r_at_most(f->graph, p.r, p.h, p.value) != p.value) {
          ++scan.rejected.conditional;
          return;
        }
        for (const LabeledFamily& seen : scan.members) {
          if (same_class(seen.graph, f->graph)) return;
        }
        scan.members.push_back(std::move(*f));
        return;
      }
      for (std::size_t k = from; k < candidates.size(); ++k) {
        a.extra.push_back(candidates[k]);
        choose(k + 1);
        a.extra.pop_back();
      }
    };
    choose(0);
  }
  return scan;
}

VerificationReport family_report(const std::string& check, const ExtremalParams& p, const VerifyOptions& opts) {
  const auto start = Clock::now();
  const LabeledFamily c = b_lambda(p, opts.threshold);
  VerificationReport r = start_report(check, p, opts, c);
  r.mode = SearchMode::family;
  MemberScan scan = scan_k_family(p, opts.threshold);
  Tally t(opts.spectral.comparison_epsilon);
  t.candidates = scan.candidates;
  t.rejected = scan.rejected;
  for (const LabeledFamily& f : scan.members) {
    ++t.examined;
    t.tracker.offer(f.graph, spectral_radius(f.graph, opts.spectral));
  }
  finish_report(r, t, c.graph);
  r.wall_clock = seconds_since(start);
  return r;
}

VerificationReport run_check(const std::string& check, const ExtremalParams& p, const VerifyOptions& opts) {
  const auto start = Clock::now();
  const LabeledFamily c = construction_for(p, opts.threshold);
  VerificationReport r = start_report(check, p, opts, c);
  std::optional<Tally> t;
  switch (opts.mode) {
    case SearchMode::exhaustive:
      t = run_exhaustive(p, opts);
      break;
    case SearchMode::neighborhood:
      t = run_neighborhood(p, c.graph, opts);
      break;
    case SearchMode::randomized:
      t = run_adversary(p, c.graph, opts);
      r.seeds = opts.seeds;
      break;
    case SearchMode::family:
      throw ParamError("family-restricted search applies to the edge version only");
  }
  finish_report(r, *t, c.graph);
  r.wall_clock = seconds_since(start);
  return r;
}

}  // namespace

VerificationReport verify_vertex_extremal(const ExtremalParams& p, const VerifyOptions& opts) {
  if (p.kind != ConnectivityKind::vertex) throw ParamError("vertex-version check needs kappa parameters");
  return run_check("vertex-extremal", p, opts);
}

VerificationReport verify_edge_extremal(const ExtremalParams& p, const VerifyOptions& opts) {
  if (p.kind != ConnectivityKind::edge) throw ParamError("edge-version check needs lambda parameters");
  p.validate(opts.threshold);
  if (opts.mode == SearchMode::family) return family_report("edge-extremal", p, opts);
  return run_check("edge-extremal", p, opts);
}

VerificationReport verify_k_family(const ExtremalParams& p, const VerifyOptions& opts) {
  if (p.kind != ConnectivityKind::edge) throw ParamError("K family check needs lambda parameters");
  if (p.value < p.r) throw ParamError("infeasible parameters: requires lambda >= r");
  return family_report("k-family", p, opts);
}

VerificationReport random_adversary(const ExtremalParams& p, const VerifyOptions& opts) {
  VerifyOptions o = opts;
  o.mode = SearchMode::randomized;
  return run_check("adversary", p, o);
}

std::vector<LabeledFamily> k_family_members(const ExtremalParams& p, OrderThreshold threshold) {
  return scan_k_family(p, threshold).members;
}

bool BracketReport::passed() const {
  return !entries.empty() && std::all_of(entries.begin(), entries.end(), [](const BracketEntry& e) {
           return e.members > 0 && e.violations.empty();
         });
}

BracketReport bracket_sweep(const std::vector<ExtremalParams>& params, const SpectralConfig& cfg,
                            OrderThreshold threshold) {
  BracketReport out;
  for (const ExtremalParams& p : params) {
    BracketEntry e;
    e.params = p;
    std::tie(e.lower, e.upper) = clique_bracket(p.n, p.r, p.h);
    const std::vector<LabeledFamily> members = k_family_members(p, threshold);
    e.members = members.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      const double rho = spectral_radius(members[i].graph, cfg);
      e.min_rho = i == 0 ? rho : std::min(e.min_rho, rho);
      e.max_rho = i == 0 ? rho : std::max(e.max_rho, rho);
      if (!(rho > e.lower + cfg.comparison_epsilon && rho < e.upper - cfg.comparison_epsilon)) {
        e.violations.push_back(graph6_encode(members[i].graph));
      }
    }
    out.entries.push_back(std::move(e));
  }
  return out;
}

nlohmann::ordered_json to_json(const BracketReport& r) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const BracketEntry& e : r.entries) {
    nlohmann::ordered_json j;
    j["params"] = nlohmann::ordered_json::parse(to_json(e.params).dump());
    j["members"] = e.members;
    j["lower"] = e.lower;
    j["upper"] = e.upper;
    j["min_rho"] = e.min_rho;
    j["max_rho"] = e.max_rho;
    j["violations"] = e.violations;
    entries.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["entries"] = std::move(entries);
  out["passed"] = r.passed();
  return out;
}

}  // namespace spx
