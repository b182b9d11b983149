#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "dtembed/vocab.hpp"

namespace dtembed {

// Undirected, positively weighted word graph. Weights are shared-feature
// counts. No self-loops; adjacency symmetric, sorted by neighbor id.
struct DtGraph {
  Vocabulary vocab;  // node id -> word
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> adj;

  std::size_t node_count() const { return vocab.size(); }
  std::size_t edge_count() const;
  std::size_t degree(std::uint32_t v) const { return adj[v].size(); }

  // 0 when the edge is absent.
  std::int64_t weight(std::uint32_t u, std::uint32_t v) const;
  bool has_edge(std::uint32_t u, std::uint32_t v) const { return weight(u, v) > 0; }
  double weighted_degree(std::uint32_t v) const;

  // Inserts both directions; caller must not add duplicates or loops.
  void add_edge(std::uint32_t u, std::uint32_t v, std::int64_t w);
  void sort_adjacency();
};

// Keeps exactly the edges with weight >= min_weight and drops nodes left
// isolated. Relative node order is preserved.
DtGraph filter_edges(const DtGraph& graph, std::int64_t min_weight);

// Edge-list TSV: `word1<TAB>word2<TAB>weight`, one line per undirected edge,
// word1 < word2 lexicographically, lines sorted. Byte-deterministic.
void write_edge_list(const DtGraph& graph, std::ostream& out);
void write_edge_list_file(const DtGraph& graph, const std::filesystem::path& path);

// Reads the same format. Node ids are assigned in lexicographic word order.
// Self-loops, duplicate edges and non-positive weights are errors.
DtGraph read_edge_list(std::istream& in, const std::string& source_name = "<stream>");
DtGraph read_edge_list_file(const std::filesystem::path& path);

}  // namespace dtembed
