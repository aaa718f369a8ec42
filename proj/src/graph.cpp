#include "lpa/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace lpa {

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw DomainError("graph must have at least one vertex");
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw DomainError("duplicate vertex identifier '" + v + "'");
  seen.clear();
  out_edges_.resize(vertices_.size());
  in_degree_.assign(vertices_.size(), 0);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (!seen.insert(e.id).second) throw DomainError("duplicate edge identifier '" + e.id + "'");
    if (e.source >= vertices_.size() || e.range >= vertices_.size())
      throw DomainError("edge '" + e.id + "' has an endpoint outside the vertex list");
    out_edges_[e.source].push_back(k);
    ++in_degree_[e.range];
  }
}

namespace {

std::string vname(long i) { return "v" + std::to_string(i); }

std::vector<std::string> numbered_vertices(long n) {
  std::vector<std::string> vs;
  vs.reserve(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) vs.push_back(vname(i));
  return vs;
}

}  // namespace

Graph cayley_graph(long n) {
  if (n < 1) throw DomainError("cayley_graph: n must be at least 1");
  // 1-based index arithmetic mod n with residue 0 mapped to n.
  auto wrap = [n](long i) { return ((i - 1) % n + n) % n + 1; };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * n));
  for (long i = 1; i <= n; ++i)
    edges.push_back({"e" + std::to_string(i), static_cast<std::size_t>(i - 1),
                     static_cast<std::size_t>(wrap(i + 1) - 1)});
  for (long i = 1; i <= n; ++i)
    edges.push_back({"f" + std::to_string(i), static_cast<std::size_t>(i - 1),
                     static_cast<std::size_t>(wrap(i - 1) - 1)});
  return Graph(numbered_vertices(n), std::move(edges));
}

Graph rose_graph(long n) {
  if (n < 1) throw DomainError("rose_graph: n must be at least 1");
  std::vector<Edge> edges;
  for (long i = 1; i <= n; ++i) edges.push_back({"g" + std::to_string(i), 0, 0});
  return Graph({"v1"}, std::move(edges));
}

Graph stemmed_rose_graph(long n, long d) {
  if (n < 2) throw DomainError("stemmed_rose_graph: n must be at least 2");
  if (d < 2) throw DomainError("stemmed_rose_graph: d must be at least 2");
  std::vector<Edge> edges;
  for (long i = 1; i <= d - 1; ++i) edges.push_back({"h" + std::to_string(i), 0, 1});
  for (long i = 1; i <= n; ++i) edges.push_back({"g" + std::to_string(i), 1, 1});
  return Graph({"v1", "v2"}, std::move(edges));
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const Edge& e : g.edges()) a(e.source, e.range) += 1;
  return a;
}

namespace {

// reach[u][w]: w is reachable from u by a path of length >= 0.
std::vector<std::vector<bool>> reachability(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    std::deque<std::size_t> queue{u};
    reach[u][u] = true;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t k : g.out_edges(x)) {
        std::size_t y = g.edges()[k].range;
        if (!reach[u][y]) {
          reach[u][y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return reach;
}

}  // namespace

PisReport pis_report(const Graph& g) {
  const std::size_t n = g.vertex_count();
  PisReport report;

  report.sink_free = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.out_degree(v) == 0) {
      report.sink_free = false;
      report.witnesses.push_back({"sink_free", {g.vertex_name(v)}, "vertex emits no edges"});
    }
  }

  // An exitless cycle consists of out-degree-1 vertices only, so it is a cycle
  // of the functional graph obtained by following each such vertex's edge.
  report.condition_L = true;
  {
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on current walk, 2 done
    for (std::size_t start = 0; start < n; ++start) {
      if (state[start] != 0) continue;
      std::vector<std::size_t> walk;
      std::size_t v = start;
      while (state[v] == 0 && g.out_degree(v) == 1) {
        state[v] = 1;
        walk.push_back(v);
        v = g.edges()[g.out_edges(v).front()].range;
      }
      if (state[v] == 1) {
        auto it = std::find(walk.begin(), walk.end(), v);
        PisWitness w{"condition_L", {}, "cycle has no exit"};
        for (; it != walk.end(); ++it) w.vertices.push_back(g.vertex_name(*it));
        report.condition_L = false;
        report.witnesses.push_back(std::move(w));
      }
      for (std::size_t x : walk) state[x] = 2;
    }
  }

  const auto reach = reachability(g);
  std::vector<std::size_t> cycle_vertices;
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t k : g.out_edges(w)) {
      if (reach[g.edges()[k].range][w]) {
        cycle_vertices.push_back(w);
        break;
      }
    }
  }
  report.has_cycle = !cycle_vertices.empty();
  if (!report.has_cycle) {
    PisWitness w{"has_cycle", {}, "no vertex lies on a cycle"};
    for (std::size_t v = 0; v < n; ++v) w.vertices.push_back(g.vertex_name(v));
    report.witnesses.push_back(std::move(w));
  }

  report.cofinal = true;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w : cycle_vertices) {
      if (!reach[u][w]) {
        report.cofinal = false;
        report.witnesses.push_back({"cofinal",
                                    {g.vertex_name(u), g.vertex_name(w)},
                                    "first vertex does not reach the cycle vertex"});
        break;
      }
    }
  }

  report.purely_infinite_simple =
      report.sink_free && report.condition_L && report.cofinal && report.has_cycle;
  return report;
}

}  // namespace lpa
