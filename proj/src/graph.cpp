#include "zagreb/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "zagreb/exact.hpp"

namespace zagreb {

Graph::Graph(std::int64_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
}

std::vector<std::int64_t> Graph::degrees() const {
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

Int sum_sq_degrees(const Graph& g) {
  Int total = 0;
  for (std::int64_t d : g.degrees()) total += Int(d) * d;
  return total;
}

Graph complement(const Graph& g) {
  const auto& edges = g.edges();
  std::vector<Graph::Edge> co;
  std::size_t idx = 0;
  for (std::int64_t u = 0; u < g.vertex_count(); ++u)
    for (std::int64_t v = u + 1; v < g.vertex_count(); ++v) {
      if (idx < edges.size() && edges[idx] == Graph::Edge{u, v})
        ++idx;
      else
        co.emplace_back(u, v);
    }
  return Graph(g.vertex_count(), std::move(co));
}

Graph quasi_complete(std::int64_t n, std::int64_t m) {
  require_valid_nm(Int(n), Int(m));
  TriDecomp d = triangular_decompose(Int(m));
  auto r = d.r.convert_to<std::int64_t>();
  auto q = d.q.convert_to<std::int64_t>();
  if (n < r || (q > 0 && n < r + 1)) throw std::domain_error("n < required vertex count");
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < r; ++i)
    for (std::int64_t j = i + 1; j < r; ++j) edges.emplace_back(i, j);
  for (std::int64_t i = 0; i < q; ++i) edges.emplace_back(i, r);
  return Graph(n, std::move(edges));
}

Graph quasi_star(std::int64_t n, std::int64_t m) {
  require_valid_nm(Int(n), Int(m));
  Int co_edges = binom2(Int(n)) - m;
  return complement(quasi_complete(n, co_edges.convert_to<std::int64_t>()));
}

Graph extremal_graph(std::int64_t n, std::int64_t m) {
  return value_C(Int(n), Int(m)) >= value_S(Int(n), Int(m)) ? quasi_complete(n, m)
                                                            : quasi_star(n, m);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph from_edge_list(std::istream& in) {
  std::int64_t n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("malformed edge list header");
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    std::int64_t u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("malformed edge list line");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list(in);
}

}  // namespace zagreb
