#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctqw/jacobi.hpp"

namespace ctqw {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using cvec = std::vector<std::complex<double>>;

/// Simple undirected connected graph with a distinguished origin.
///
/// Adjacency lists are sorted and deduplicated; the edge list holds each
/// edge once as (min, max) in lexicographic order.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<std::vector<Vertex>> adjacency,
        Vertex origin);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;
  Vertex origin() const noexcept { return origin_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::vector<Edge> edges() const;
  bool adjacent(Vertex a, Vertex b) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  Vertex origin_;
};

/// Builds a graph from an edge list. Duplicate and reversed edges collapse.
/// Throws IndexOutOfRange, SelfLoop or DisconnectedGraph.
Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges,
                  Vertex origin);

/// Same, with vertex_count inferred as 1 + the largest index seen (or origin).
Graph build_graph(std::span<const Edge> edges, Vertex origin);

/// Distance partition of the vertex set from the origin.
struct Stratification {
  std::vector<std::vector<Vertex>> strata;  // strata[k] sorted ascending
  std::vector<std::size_t> distance;        // per vertex

  std::size_t depth() const noexcept { return strata.size(); }
  std::vector<std::size_t> sizes() const;
};

Stratification stratify(const Graph& g);

/// Szegő–Jacobi coefficients of a QD graph. Throws NotQDGraph when a stratum
/// is not homogeneous in its downward, lateral or upward degree. Any
/// non-fatal constraint notes are appended to `warnings` when supplied.
JacobiSeq extract_jacobi(const Graph& g, const Stratification& s,
                         std::vector<std::string>* warnings = nullptr);

/// Product with the 0/1 adjacency matrix.
cvec apply_adjacency(const Graph& g, std::span<const std::complex<double>> v);

}  // namespace ctqw
