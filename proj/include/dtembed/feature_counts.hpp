#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

#include "dtembed/vocab.hpp"

namespace dtembed {

// Sparse word x feature co-occurrence counts with marginals. Stored entries
// are strictly positive; absent pairs are zero.
struct FeatureCounts {
  Vocabulary words;
  Vocabulary features;
  // entries[word_id] = (feature_id, count), feature ids unique per word
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> entries;
  std::vector<std::int64_t> word_marginals;     // F(w)
  std::vector<std::int64_t> feature_marginals;  // F(f)
  std::int64_t total = 0;                       // N

  std::size_t entry_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.size();
    return n;
  }
};

// Checks that the marginals and total are consistent with the entries.
// Throws Error naming the first offending word or feature.
void validate(const FeatureCounts& counts);

// Recomputes marginals and total from the entries.
void recompute_marginals(FeatureCounts& counts);

// Reads `word<TAB>feature<TAB>count` lines (UTF-8, counts positive base-10
// integers). Duplicate (word, feature) lines accumulate. Blank lines are
// skipped; malformed lines raise Error with the 1-based line number.
FeatureCounts read_feature_counts(std::istream& in, const std::string& source_name = "<stream>");
FeatureCounts read_feature_counts_file(const std::filesystem::path& path);

}  // namespace dtembed
