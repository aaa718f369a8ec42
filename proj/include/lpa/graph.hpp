#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lpa/int_matrix.hpp"

namespace lpa {

struct Edge {
  std::string id;
  std::size_t source = 0;
  std::size_t range = 0;

  bool operator==(const Edge&) const = default;
};

/// Finite directed multigraph with named vertices.
///
/// Vertex order is significant: it fixes the row and column order of every
/// matrix derived from the graph. Parallel edges and loops are allowed.
/// Construction validates the invariants (nonempty vertex set, distinct
/// vertex names, distinct edge ids, in-range endpoints) and throws
/// DomainError otherwise; a constructed Graph is always valid.
class Graph {
 public:
  Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }

  std::size_t out_degree(std::size_t v) const { return out_edges_.at(v).size(); }
  std::size_t in_degree(std::size_t v) const { return in_degree_.at(v); }
  /// Indices into edges() of the edges with source v, in declaration order.
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_edges_.at(v); }

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_edges_;
  std::vector<std::size_t> in_degree_;
};

/// Cayley graph of Z/nZ with respect to {1, n-1}: vertices v1..vn, edges
/// e_i: v_i -> v_{i+1} and f_i: v_i -> v_{i-1}, indices mod n and 1-based.
Graph cayley_graph(long n);

/// One vertex v1 with n loops g1..gn.
Graph rose_graph(long n);

/// Vertices v1, v2; d-1 edges h1.. from v1 to v2; n loops g1..gn at v2.
Graph stemmed_rose_graph(long n, long d);

/// Entry (i, j) counts the edges from vertex i to vertex j.
IntMatrix adjacency_matrix(const Graph& g);

struct PisWitness {
  std::string condition;              // "sink_free", "condition_L", "cofinal", "has_cycle"
  std::vector<std::string> vertices;  // sink / exitless cycle / (from, cycle vertex) / acyclic set
  std::string detail;

  bool operator==(const PisWitness&) const = default;
};

struct PisReport {
  bool sink_free = false;
  bool condition_L = false;
  bool cofinal = false;
  bool has_cycle = false;
  bool purely_infinite_simple = false;
  std::vector<PisWitness> witnesses;
};

/// Graph-theoretic test for purely infinite simplicity of L_K(E): sink-free,
/// every cycle has an exit, cofinal, and at least one cycle exists.
PisReport pis_report(const Graph& g);

}  // namespace lpa
