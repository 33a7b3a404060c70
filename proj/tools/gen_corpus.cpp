// Enumerates all connected cubic graphs on 4..14 vertices up to isomorphism
// and writes one graph6 file per order. Every cubic graph below 16 vertices
// has a perfect matching, so each target graph is a disjoint union of
// cycles plus a perfect matching on the same vertices; the enumeration
// walks all cycle partitions and admissible matchings and deduplicates by
// exact isomorphism behind a distance-profile hash. The known counts per
// order double as a completeness check.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "slopes/graph.hpp"
#include "slopes/graph_algos.hpp"
#include "slopes/io.hpp"

namespace fs = std::filesystem;

namespace {

std::string distance_profile(const slopes::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::string> rows;
  rows.reserve(n);
  std::vector<int> dist(n);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue[0] = s;
    int head = 0;
    int tail = 1;
    while (head < tail) {
      const int v = queue[head++];
      for (int w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue[tail++] = w;
        }
    }
    auto sorted = dist;
    std::sort(sorted.begin(), sorted.end());
    std::string row;
    for (int d : sorted) row += std::to_string(d) + ",";
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& r : rows) key += r + "|";
  return key;
}

struct IsoStore {
  std::map<std::string, std::vector<slopes::Graph>> buckets;
  std::vector<std::string> lines;

  void add(const slopes::Graph& g) {
    auto& bucket = buckets[distance_profile(g)];
    for (const auto& rep : bucket)
      if (slopes::find_isomorphism(g, rep)) return;
    bucket.push_back(g);
    lines.push_back(slopes::to_graph6(g));
  }
};

// Partitions of n into parts of size at least three, descending.
void for_each_partition(int remaining, int max_part, std::vector<int>& parts,
                        const std::function<void(const std::vector<int>&)>& cb) {
  if (remaining == 0) {
    cb(parts);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 3; --p) {
    if (remaining - p != 0 && remaining - p < 3) continue;
    parts.push_back(p);
    for_each_partition(remaining - p, p, parts, cb);
    parts.pop_back();
  }
}

void enumerate_for_order(int n, IsoStore& store) {
  std::vector<int> parts;
  for_each_partition(n, n, parts, [&](const std::vector<int>& partition) {
    std::vector<std::pair<int, int>> cycle_edges;
    std::vector<int> cycle_of(n);
    std::vector<int> pos_in_cycle(n);
    std::vector<int> cycle_len_of(n);
    int base = 0;
    for (std::size_t c = 0; c < partition.size(); ++c) {
      const int len = partition[c];
      for (int i = 0; i < len; ++i) {
        const int v = base + i;
        cycle_of[v] = static_cast<int>(c);
        pos_in_cycle[v] = i;
        cycle_len_of[v] = len;
        cycle_edges.push_back({v, base + (i + 1) % len});
      }
      base += len;
    }

    // A matching chord parallel to a cycle edge would duplicate it.
    auto forbidden = [&](int u, int v) {
      if (cycle_of[u] != cycle_of[v]) return false;
      const int len = cycle_len_of[u];
      const int d = (pos_in_cycle[v] - pos_in_cycle[u] + len) % len;
      return d == 1 || d == len - 1;
    };

    std::vector<int> partner(n, -1);
    std::vector<std::pair<int, int>> matching;
    auto recurse = [&](auto&& self) -> void {
      int u = 0;
      while (u < n && partner[u] >= 0) ++u;
      if (u == n) {
        auto edges = cycle_edges;
        edges.insert(edges.end(), matching.begin(), matching.end());
        auto g = slopes::Graph::from_edges(n, std::move(edges));
        if (slopes::is_connected(g)) store.add(g);
        return;
      }
      for (int v = u + 1; v < n; ++v) {
        if (partner[v] >= 0 || forbidden(u, v)) continue;
        partner[u] = v;
        partner[v] = u;
        matching.push_back({u, v});
        self(self);
        matching.pop_back();
        partner[u] = -1;
        partner[v] = -1;
      }
    };
    recurse(recurse);
  });
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path out_dir = argc > 1 ? argv[1] : "fixtures/corpus";
  fs::create_directories(out_dir);
  for (int n = 4; n <= 14; n += 2) {
    IsoStore store;
    enumerate_for_order(n, store);
    std::sort(store.lines.begin(), store.lines.end());
    char name[32];
    std::snprintf(name, sizeof name, "cubic%02d.g6", n);
    std::ofstream out(out_dir / name, std::ios::binary | std::ios::trunc);
    for (const auto& line : store.lines) out << line << "\n";
    std::cout << name << ": " << store.lines.size() << " graphs\n";
  }
  return 0;
}
