#include "ctqw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "ctqw/error.hpp"

namespace ctqw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParameterOutOfDomain: return "ParameterOutOfDomain";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::NoClosedForm: return "NoClosedForm";
    case ErrorCode::NoClosedFormMeasure: return "NoClosedFormMeasure";
    case ErrorCode::UnsupportedMomentOrder: return "UnsupportedMomentOrder";
    case ErrorCode::UnsupportedEdgeBehavior: return "UnsupportedEdgeBehavior";
    case ErrorCode::InsufficientSpan: return "InsufficientSpan";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::TruncationTooLarge: return "TruncationTooLarge";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::NotQDGraph: return "NotQDGraph";
    case ErrorCode::EigenSolverFailure: return "EigenSolverFailure";
    case ErrorCode::DivergentFraction: return "DivergentFraction";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::TailMassExceeded: return "TailMassExceeded";
    case ErrorCode::DegenerateNodes: return "DegenerateNodes";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::EigenSolverFailure:
    case ErrorCode::DivergentFraction:
    case ErrorCode::QuadratureNotConverged:
    case ErrorCode::TailMassExceeded:
    case ErrorCode::DegenerateNodes:
      return true;
    default:
      return false;
  }
}

Graph::Graph(std::size_t vertex_count, std::vector<std::vector<Vertex>> adjacency,
             Vertex origin)
    : adjacency_(std::move(adjacency)), origin_(origin) {
  if (adjacency_.size() != vertex_count)
    fail(ErrorCode::DimensionMismatch, "adjacency list count differs from vertex_count");
  if (origin_ >= vertex_count) fail(ErrorCode::IndexOutOfRange, "origin out of range");
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& nb : adjacency_) twice += nb.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex a = 0; a < adjacency_.size(); ++a)
    for (Vertex b : adjacency_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nb = adjacency_.at(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

namespace {

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex root) {
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(adj.size(), unseen);
  std::queue<Vertex> frontier;
  dist[root] = 0;
  frontier.push(root);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adj[v]) {
      if (dist[w] == unseen) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges, Vertex origin) {
  if (vertex_count == 0) fail(ErrorCode::IndexOutOfRange, "graph needs at least one vertex");
  if (origin >= vertex_count)
    fail(ErrorCode::IndexOutOfRange, "origin " + std::to_string(origin) + " out of range");
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count)
      fail(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                           ") out of range for " + std::to_string(vertex_count) +
                                           " vertices");
    if (a == b) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  const auto dist = bfs_distances(adj, origin);
  for (Vertex v = 0; v < vertex_count; ++v)
    if (dist[v] == std::numeric_limits<std::size_t>::max())
      fail(ErrorCode::DisconnectedGraph,
           "vertex " + std::to_string(v) + " is not reachable from origin " + std::to_string(origin));
  return Graph(vertex_count, std::move(adj), origin);
}

Graph build_graph(std::span<const Edge> edges, Vertex origin) {
  std::size_t n = origin + 1;
  for (const auto& [a, b] : edges) n = std::max({n, a + 1, b + 1});
  return build_graph(n, edges, origin);
}

std::vector<std::size_t> Stratification::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(strata.size());
  for (const auto& s : strata) out.push_back(s.size());
  return out;
}

Stratification stratify(const Graph& g) {
  Stratification s;
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v);
  s.distance = bfs_distances(adj, g.origin());
  std::size_t depth = 0;
  for (auto d : s.distance) depth = std::max(depth, d + 1);
  s.strata.assign(depth, {});
  // ascending vertex order inside each layer
  for (Vertex v = 0; v < g.vertex_count(); ++v) s.strata[s.distance[v]].push_back(v);
  return s;
}

namespace {

struct StratumDegrees {
  std::size_t down = 0;
  std::size_t lateral = 0;
  std::size_t up = 0;
};

StratumDegrees degrees_of(const Graph& g, const Stratification& s, Vertex v) {
  StratumDegrees d;
  const auto k = s.distance[v];
  for (Vertex w : g.neighbors(v)) {
    const auto kw = s.distance[w];
    if (kw + 1 == k) ++d.down;
    else if (kw == k) ++d.lateral;
    else if (kw == k + 1) ++d.up;
    else
      fail(ErrorCode::NotQDGraph, "edge (" + std::to_string(v) + "," + std::to_string(w) +
                                      ") spans strata " + std::to_string(k) + " and " +
                                      std::to_string(kw));
  }
  return d;
}

}  // namespace

JacobiSeq extract_jacobi(const Graph& g, const Stratification& s,
                         std::vector<std::string>* warnings) {
  if (s.distance.size() != g.vertex_count())
    fail(ErrorCode::DimensionMismatch, "stratification does not belong to this graph");
  const std::size_t levels = s.depth();
  std::vector<double> omega;
  std::vector<double> alpha;
  omega.reserve(levels - 1);
  alpha.reserve(levels);

  std::vector<StratumDegrees> per_stratum(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    const auto& layer = s.strata[k];
    const Vertex first = layer.front();
    const auto ref = degrees_of(g, s, first);
    for (Vertex v : layer) {
      const auto d = degrees_of(g, s, v);
      const char* which = nullptr;
      std::size_t a = 0, b = 0;
      if (d.down != ref.down) which = "downward", a = ref.down, b = d.down;
      else if (d.lateral != ref.lateral) which = "within-stratum", a = ref.lateral, b = d.lateral;
      else if (d.up != ref.up) which = "upward", a = ref.up, b = d.up;
      if (which) {
        std::ostringstream msg;
        msg << "stratum " << k << ": vertices " << first << " and " << v << " have " << which
            << " degrees " << a << " and " << b;
        fail(ErrorCode::NotQDGraph, msg.str());
      }
    }
    per_stratum[k] = ref;
  }

  for (std::size_t k = 0; k < levels; ++k) {
    const double size_k = static_cast<double>(s.strata[k].size());
    if (k > 0) {
      const double size_prev = static_cast<double>(s.strata[k - 1].size());
      const double down = static_cast<double>(per_stratum[k].down);
      omega.push_back(size_k / size_prev * down * down);
    }
    const auto lateral = per_stratum[k].lateral;
    if (lateral + 1 > s.strata[k].size())
      fail(ErrorCode::NotQDGraph, "stratum " + std::to_string(k) +
                                      " has within-stratum degree above |V_k|-1");
    if (warnings && (s.strata[k].size() * lateral) % 2 != 0)
      warnings->push_back("stratum " + std::to_string(k) + ": |V_k|*alpha_{k+1} is odd");
    alpha.push_back(static_cast<double>(lateral));
  }
  return JacobiSeq::finite(std::move(omega), std::move(alpha), 1.0);
}

cvec apply_adjacency(const Graph& g, std::span<const std::complex<double>> v) {
  if (v.size() != g.vertex_count())
    fail(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) +
                                           " differs from vertex count " +
                                           std::to_string(g.vertex_count()));
  cvec out(v.size());
  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    std::complex<double> acc = 0.0;
    for (Vertex j : g.neighbors(i)) acc += v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace ctqw
