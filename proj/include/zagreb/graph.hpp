#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zagreb/int_types.hpp"

namespace zagreb {

/// Simple labeled graph on vertices {0,...,n-1}. No loops, no duplicate
/// edges; edges stored as (u,v) with u < v, sorted lexicographically.
class Graph {
 public:
  using Edge = std::pair<std::int64_t, std::int64_t>;

  explicit Graph(std::int64_t n) : n_(n) {}
  Graph(std::int64_t n, std::vector<Edge> edges);

  std::int64_t vertex_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<std::int64_t> degrees() const;

  bool operator==(const Graph& o) const = default;

 private:
  std::int64_t n_;
  std::vector<Edge> edges_;
};

/// Sum of squared degrees (the first Zagreb index).
Int sum_sq_degrees(const Graph& g);

/// Edge set is exactly the non-edges of g; degrees map d -> n-1-d.
Graph complement(const Graph& g);

/// Clique on {0,...,r-1}, vertex r adjacent to the q lowest-indexed clique
/// vertices, remaining vertices isolated; attains C(n,m).
Graph quasi_complete(std::int64_t n, std::int64_t m);

/// Complement of quasi_complete(n, binom(n,2)-m); attains S(n,m).
Graph quasi_star(std::int64_t n, std::int64_t m);

/// quasi_complete if C >= S else quasi_star (ties resolved quasi-complete).
Graph extremal_graph(std::int64_t n, std::int64_t m);

/// Canonical edge-list text: first line "n m", then one line "u v" per
/// edge, 0-indexed, u < v, in lexicographic pair order. Bit-exact format.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::istream& in);
Graph from_edge_list(const std::string& text);

}  // namespace zagreb
