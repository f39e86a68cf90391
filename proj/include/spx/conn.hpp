#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "spx/graph.hpp"

namespace spx {

/// A vertex set S whose removal leaves >= r components, each of order >= h + 1.
struct VertexCutCertificate {
  VertexSet cut;
  std::vector<VertexSet> components;
  int value = 0;
};

/// An edge set F whose removal leaves >= r components, each of order >= h + 1.
/// F is exactly the set of edges running between those components.
struct EdgeCutCertificate {
  EdgeSet cut;
  std::vector<VertexSet> components;
  int value = 0;
};

/// Either a minimum cut or "undefined" (no admissible cut exists at all).
template <class Certificate>
struct ConnResult {
  std::optional<Certificate> certificate;

  bool defined() const { return certificate.has_value(); }
  int value() const { return certificate->value; }
};

using KappaResult = ConnResult<VertexCutCertificate>;
using LambdaResult = ConnResult<EdgeCutCertificate>;

/// h-extra r-component connectivity of a connected graph.
///
/// Vertex subsets are scanned by increasing cardinality and, within one
/// cardinality, in lexicographic order, so the first admissible set is both
/// minimum and lexicographically smallest. Throws ParamError for r < 2, h < 0
/// or disconnected input; a graph with too few vertices is simply undefined.
KappaResult kappa_h_r(const Graph& g, int r, int h);

/// kappa_h_r restricted to cut sizes <= cap: the value when it is <= cap,
/// nullopt otherwise (including undefined).
std::optional<int> kappa_h_r_at_most(const Graph& g, int r, int h, int cap);

/// h-extra r-component edge-connectivity of a connected graph.
///
/// A minimum edge cut is always the set of edges between the blocks of a
/// partition of V into connected blocks, so the search runs over set partitions
/// (restricted growth strings, vertices in label order) with at least r blocks
/// of order >= h + 1, pruned on the running count of cross edges and on whether
/// the unassigned vertices can still fill every block. Ties are broken by the
/// lexicographically smallest sorted cut.
LambdaResult lambda_h_r(const Graph& g, int r, int h);

/// lambda_h_r restricted to cut sizes <= cap.
std::optional<int> lambda_h_r_at_most(const Graph& g, int r, int h, int cap);

/// Independent reference: every vertex subset in colex (numeric bitmask) order,
/// no early exit. Order <= 20.
std::optional<int> kappa_oracle(const Graph& g, int r, int h);

/// Independent reference: edge subsets by increasing cardinality, component
/// condition tested directly on G - F. Requires m <= 24.
std::optional<int> lambda_oracle(const Graph& g, int r, int h);

/// Classical connectivity; complete graphs have no separating set and report
/// an undefined value annotated with the conventional n - 1.
struct ClassicalConnectivity {
  std::optional<int> value;
  std::optional<int> conventional;
};

ClassicalConnectivity classical_kappa(const Graph& g);
ClassicalConnectivity classical_lambda(const Graph& g);

/// Recomputes the components of G - cut and checks value, component count and sizes.
bool certificate_valid(const Graph& g, const VertexCutCertificate& c, int r, int h);
bool certificate_valid(const Graph& g, const EdgeCutCertificate& c, int r, int h);

/// {"value": int, "cut": [...], "components": [[...], ...]}; undefined results
/// serialize as {"value": null, "cut": null, "components": null}.
nlohmann::json to_json(const KappaResult& r);
nlohmann::json to_json(const LambdaResult& r);

}  // namespace spx
