#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathmat/generate.hpp"
#include "pathmat/graph6.hpp"

namespace pathmat {

struct UnicyclicTag {
  int n;
  int k;
  AttachShape shape;
};

/// One corpus graph, stored as its graph6 encoding; the id doubles as the
/// serialized witness in verification reports.
struct CorpusEntry {
  std::string id;
  std::string g6;
  std::optional<UnicyclicTag> unicyclic;

  Graph graph() const { return parse_graph6(g6); }
};

struct Corpus {
  std::string name;
  std::vector<CorpusEntry> entries;
};

/// Every connected labeled graph with 1..max_n vertices, enumerated by
/// adjacency bitmask. Isomorphic duplicates are kept; downstream checks are
/// isomorphism-invariant, so duplicates only cost time.
inline Corpus exhaustive_small_graphs(int max_n) {
  if (max_n < 1 || max_n > 7)
    throw std::invalid_argument("exhaustive enumeration is limited to max_n in 1..7");
  Corpus corpus;
  corpus.name = "exhaustive:" + std::to_string(max_n);
  for (int n = 1; n <= max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    // pair index order matches the graph6 bit order (columns j, rows i < j)
    std::vector<std::pair<int, int>> pair_at;
    pair_at.reserve(pairs);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pair_at.emplace_back(i, j);

    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      std::uint8_t adj[7] = {};
      for (int idx = 0; idx < pairs; ++idx) {
        if ((mask >> idx) & 1) {
          const auto [i, j] = pair_at[idx];
          adj[i] |= static_cast<std::uint8_t>(1u << j);
          adj[j] |= static_cast<std::uint8_t>(1u << i);
        }
      }
      std::uint8_t seen = 1, frontier = 1;
      while (frontier) {
        std::uint8_t next = 0;
        for (int v = 0; v < n; ++v)
          if ((frontier >> v) & 1) next |= adj[v];
        frontier = static_cast<std::uint8_t>(next & ~seen);
        seen |= next;
      }
      if (seen != ((1u << n) - 1)) continue;

      std::string g6(1, static_cast<char>(63 + n));
      int acc = 0, nbits = 0;
      for (int idx = 0; idx < pairs; ++idx) {
        acc = (acc << 1) | ((mask >> idx) & 1);
        if (++nbits == 6) {
          g6.push_back(static_cast<char>(63 + acc));
          acc = 0;
          nbits = 0;
        }
      }
      if (nbits > 0) g6.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
      corpus.entries.push_back({g6, g6, std::nullopt});
    }
  }
  return corpus;
}

inline Graph random_gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph random_connected_gnp(int n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
}

/// Connected graph with exactly m edges: a random spanning tree plus
/// uniformly sampled extra edges.
inline Graph random_connected_gnm(int n, int m, std::mt19937_64& rng) {
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > pairs)
    throw std::invalid_argument("edge count out of range for a connected graph");
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<Edge> edges;
  for (int j = 1; j < n; ++j) {
    std::uniform_int_distribution<int> pick(0, j - 1);
    int u = perm[pick(rng)], v = perm[j];
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  std::uniform_int_distribution<int> vert(0, n - 1);
  while (static_cast<int>(edges.size()) < m) {
    int u = vert(rng), v = vert(rng);
    if (u == v) continue;
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

/// `count` seeded random connected graphs of order n (edge probability 1/2,
/// resampled until connected). Deterministic for a fixed seed.
inline Corpus random_connected_corpus(int count, int n, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("corpus size must be nonnegative");
  Corpus corpus;
  corpus.name = "random:n=" + std::to_string(n) + ",count=" + std::to_string(count) +
                ",seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  corpus.entries.reserve(count);
  for (int i = 0; i < count; ++i) {
    Graph g = random_connected_gnp(n, 0.5, rng);
    std::string g6 = write_graph6(g);
    corpus.entries.push_back({"random[" + std::to_string(i) + "]=" + g6, g6, std::nullopt});
  }
  return corpus;
}

/// Every unicyclic graph shape with n_min <= n <= n_max and 3 <= k <= n,
/// tagged with its (n, k, shape) parameters. The random-tree attachment is
/// seeded per (n, k) so the sweep is deterministic.
inline Corpus unicyclic_sweep(int n_min, int n_max) {
  if (n_min < 3 || n_max < n_min)
    throw std::invalid_argument("unicyclic sweep needs 3 <= n_min <= n_max");
  Corpus corpus;
  corpus.name = "unicyclic:nmin=" + std::to_string(n_min) + ",nmax=" + std::to_string(n_max);
  constexpr AttachShape kShapes[] = {AttachShape::pendant_path, AttachShape::pendant_star,
                                     AttachShape::random_tree};
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 3; k <= n; ++k) {
      for (AttachShape shape : kShapes) {
        const std::uint64_t seed = static_cast<std::uint64_t>(n) * 1000 + k;
        Graph g = make_unicyclic(n, k, shape, seed);
        std::string id = "U(n=" + std::to_string(n) + ",k=" + std::to_string(k) + "," +
                         to_string(shape) + ")";
        corpus.entries.push_back({std::move(id), write_graph6(g), UnicyclicTag{n, k, shape}});
      }
    }
  }
  return corpus;
}

/// graph6 stream, one graph per line; blank lines are skipped. Optional
/// connected-only and order filters.
inline Corpus corpus_from_graph6(std::istream& in, bool connected_only = false, int min_n = 0,
                                 int max_n = 0) {
  Corpus corpus;
  corpus.name = "file";
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Graph g = parse_graph6(line);
    if (min_n > 0 && g.order() < min_n) continue;
    if (max_n > 0 && g.order() > max_n) continue;
    if (connected_only && !is_connected(g)) continue;
    corpus.entries.push_back(
        {"line" + std::to_string(lineno) + "=" + write_graph6(g), write_graph6(g), std::nullopt});
  }
  return corpus;
}

}  // namespace pathmat
