#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace pstab::detail {

// Maximum-cardinality bipartite matching (Hopcroft-Karp). Left vertices are
// 0..n_left-1, adjacency lists hold right vertices 0..n_right-1.
class HopcroftKarp {
 public:
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  HopcroftKarp(std::size_t n_left, std::size_t n_right)
      : adj_(n_left), match_left_(n_left, none), match_right_(n_right, none), dist_(n_left) {}

  void add_edge(std::size_t u, std::size_t v) { adj_[u].push_back(v); }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u)
        if (match_left_[u] == none && dfs(u)) ++size;
    }
    return size;
  }

  // Right vertex matched to left vertex u, or `none`.
  std::size_t mate(std::size_t u) const { return match_left_[u]; }

 private:
  static constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();

  bool bfs() {
    std::queue<std::size_t> q;
    bool found_free = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == none) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = inf;
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == none) {
          found_free = true;
        } else if (dist_[w] == inf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found_free;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const std::size_t w = match_right_[v];
      if (w == none || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = inf;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
};

}  // namespace pstab::detail
