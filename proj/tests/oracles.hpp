#pragma once

// Deliberately naive reference implementations. They share nothing with the
// planner beyond the Environment type.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <optional>
#include <vector>

#include "ppnl/task.hpp"
#include "ppnl/world.hpp"

namespace oracle {

using ppnl::Coordinate;
using ppnl::Environment;

// Plain BFS over a 2-D array; -1 when unreachable.
inline int bfs_distance(const Environment& env, Coordinate s, Coordinate g) {
  const int n = env.grid_size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  std::deque<Coordinate> q{s};
  d[s.row][s.col] = 0;
  while (!q.empty()) {
    const Coordinate c = q.front();
    q.pop_front();
    if (c == g) return d[c.row][c.col];
    const int dr[4] = {-1, 1, 0, 0};
    const int dc[4] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k) {
      const Coordinate nb{c.row + dr[k], c.col + dc[k]};
      if (nb.row < 0 || nb.col < 0 || nb.row >= n || nb.col >= n) continue;
      if (env.is_obstacle(nb) || d[nb.row][nb.col] >= 0) continue;
      d[nb.row][nb.col] = d[c.row][c.col] + 1;
      q.push_back(nb);
    }
  }
  return -1;
}

// Recursive flood fill counting the cells connected to s.
inline int flood_fill_count(const Environment& env, Coordinate s) {
  const int n = env.grid_size();
  std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
  int count = 0;
  auto fill = [&](auto& self, int r, int c) -> void {
    if (r < 0 || c < 0 || r >= n || c >= n) return;
    if (seen[r * n + c] || env.is_obstacle({r, c})) return;
    seen[r * n + c] = 1;
    ++count;
    self(self, r + 1, c);
    self(self, r - 1, c);
    self(self, r, c + 1);
    self(self, r, c - 1);
  };
  fill(fill, s.row, s.col);
  return count;
}

// Minimum open-tour cost over every permutation that respects the
// constraint. dist is (l+1)x(l+1) with the start at index 0; -1 = disconnected.
inline std::optional<int> brute_force_tour(const std::vector<std::vector<int>>& dist,
                                           const std::optional<ppnl::OrderingConstraint>& constraint) {
  const std::size_t l = dist.size() - 1;
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<int> best;
  do {
    if (constraint) {
      std::size_t last_before = 0;
      std::size_t first_after = l;
      for (std::size_t i = 0; i < l; ++i) {
        const bool is_before =
            std::find(constraint->before.begin(), constraint->before.end(), perm[i]) != constraint->before.end();
        if (is_before) last_before = i;
        else first_after = std::min(first_after, i);
      }
      if (first_after < last_before) continue;
    }
    int cost = 0;
    std::size_t at = 0;
    bool ok = true;
    for (const std::size_t g : perm) {
      const int d = dist[at][g + 1];
      if (d < 0) {
        ok = false;
        break;
      }
      cost += d;
      at = g + 1;
    }
    if (ok && (!best || cost < *best)) best = cost;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oracle
