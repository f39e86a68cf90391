#pragma once

#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spx/errors.hpp"
#include "spx/graph.hpp"

namespace spx {

struct SpectralConfig {
  /// Bound on the max-norm residual |Ax - rho x| of a returned Perron pair.
  double tolerance = 1e-12;
  /// Margin used when asserting strict inequalities between spectral radii.
  double comparison_epsilon = 1e-9;
  long max_iterations = 1'000'000;

  /// Throws ParamError unless 0 < tolerance < comparison_epsilon < 1 and max_iterations > 0.
  void validate() const;
};

struct PerronData {
  double rho = 0.0;
  /// Positive eigenvector scaled so that its largest entry is 1.
  std::vector<double> vector;
  double residual = 0.0;
  long iterations = 0;
};

/// Perron root and vector of a connected graph.
///
/// Power iteration runs on A + I (primitive for connected graphs, so bipartite
/// inputs converge too) from the all-ones vector. The Rayleigh quotient of the
/// current iterate is the eigenvalue estimate, and iteration stops once the
/// max-norm residual drops to cfg.tolerance. Results are bitwise reproducible.
///
/// Throws ParamError on disconnected or empty input, ConvergenceError when the
/// residual is still above tolerance after cfg.max_iterations steps.
PerronData perron(const Graph& g, const SpectralConfig& cfg = {});

/// Same iteration as perron() but returns only rho and never allocates.
double spectral_radius(const Graph& g, const SpectralConfig& cfg = {});

nlohmann::json to_json(const PerronData& p);

inline constexpr int kMaxQuotientParts = 8;

/// Quotient matrix of an equitable partition.
struct QuotientMatrix {
  /// cells[i][j]: neighbours in part j of any vertex of part i.
  std::vector<std::vector<int>> cells;
  std::vector<int> part_sizes;
  /// part_map[v]: index of the part containing v.
  std::vector<int> part_map;

  int parts() const { return static_cast<int>(part_sizes.size()); }
};

class NonEquitablePartition : public ParamError {
 public:
  NonEquitablePartition(int vertex, int part);
  int vertex() const { return vertex_; }
  int part() const { return part_; }

 private:
  int vertex_;
  int part_;
};

/// Builds B and checks equitability cell by cell; throws NonEquitablePartition
/// naming the first vertex whose count into some part disagrees with its part's
/// first vertex. `parts` must partition V(g) into nonempty sets.
QuotientMatrix equitable_quotient(const Graph& g, std::span<const VertexSet> parts);

/// Coarsest equitable partition refining `parts`, ordered by smallest member.
std::vector<VertexSet> equitable_refinement(const Graph& g, std::span<const VertexSet> parts);

/// Largest eigenvalue of B.
///
/// B is similar to the symmetric matrix S = D^{1/2} B D^{-1/2} (D = part sizes),
/// so its spectrum is real. The Perron root is located by bisection on [0, n-1]
/// using the number of eigenvalues of S above the midpoint, read from the
/// inertia of an LDL^T factorization of S - lambda I; near-zero pivots are
/// nudged off zero. Throws ParamError when B has more than kMaxQuotientParts parts.
double quotient_spectral_radius(const QuotientMatrix& b, const SpectralConfig& cfg = {});

/// Edge rotation: for each w in `moved`, delete v-w and add u-w.
/// Requires moved nonempty, moved within N(v) \ N(u), and u, v not in moved.
Graph kelmans_shift(const Graph& g, int u, int v, const VertexSet& moved);

/// Hong-Shu-Fang (and Nikiforov) bound
///   (delta - 1)/2 + sqrt(2m - n delta + (delta + 1)^2 / 4)
/// for connected graphs with minimum degree delta >= 1.
/// Throws ParamError when delta < 1 or the radicand is negative.
double hsf_bound(int n, int m, int delta);

/// True iff every degree of g is either min_degree(g) or n - 1, i.e. g is regular
/// or bidegreed with degrees {delta, n - 1}: the graphs attaining hsf_bound.
bool hsf_equality_class(const Graph& g);

/// ab - (a + t)(b - t), which equals at - bt + t^2.
double shifted_product_gap(double a, double b, double t);

/// Evaluates ab > (a + t)(b - t) under the hypotheses b > a > t >= 1 and |a - b| < 1.
/// The hypotheses have no integer solutions, so inputs are real; throws ParamError
/// when they fail.
bool shifted_product_decreases(double a, double b, double t);

/// C(a,2) + C(b,2) < C(a+1,2) + C(b-1,2) for a >= b >= 3 (moving a vertex from the
/// smaller clique to the larger one gains a - b + 1 edges). Throws ParamError
/// outside the hypotheses.
bool clique_transfer_gains_edges(long a, long b);

/// Open interval (n1 - 1, n1) with n1 = n - (r-1)(h+1), the clique order left
/// after carving r - 1 blocks of h + 1 vertices.
std::pair<double, double> clique_bracket(int n, int r, int h);

}  // namespace spx
