#include "dtembed/feature_counts.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string>
#include <unordered_map>

#include "dtembed/error.hpp"

namespace dtembed {

void recompute_marginals(FeatureCounts& counts) {
  counts.word_marginals.assign(counts.words.size(), 0);
  counts.feature_marginals.assign(counts.features.size(), 0);
  counts.total = 0;
  for (std::size_t w = 0; w < counts.entries.size(); ++w) {
    for (const auto& [f, c] : counts.entries[w]) {
      counts.word_marginals[w] += c;
      counts.feature_marginals[f] += c;
      counts.total += c;
    }
  }
}

void validate(const FeatureCounts& counts) {
  if (counts.entries.size() != counts.words.size() ||
      counts.word_marginals.size() != counts.words.size() ||
      counts.feature_marginals.size() != counts.features.size()) {
    throw Error("feature counts: structure sizes do not match vocabularies");
  }
  std::vector<std::int64_t> fw(counts.words.size(), 0);
  std::vector<std::int64_t> ff(counts.features.size(), 0);
  std::int64_t n = 0;
  for (std::size_t w = 0; w < counts.entries.size(); ++w) {
    for (const auto& [f, c] : counts.entries[w]) {
      if (c <= 0)
        throw Error("feature counts: non-positive count stored for word '" +
                    counts.words[static_cast<std::uint32_t>(w)] + "'");
      if (f >= counts.features.size())
        throw Error("feature counts: feature id out of range for word '" +
                    counts.words[static_cast<std::uint32_t>(w)] + "'");
      fw[w] += c;
      ff[f] += c;
      n += c;
    }
  }
  for (std::size_t w = 0; w < fw.size(); ++w) {
    if (fw[w] != counts.word_marginals[w])
      throw Error("inconsistent marginal for word '" +
                  counts.words[static_cast<std::uint32_t>(w)] + "': stored " +
                  std::to_string(counts.word_marginals[w]) + ", entries sum to " +
                  std::to_string(fw[w]));
  }
  for (std::size_t f = 0; f < ff.size(); ++f) {
    if (ff[f] != counts.feature_marginals[f])
      throw Error("inconsistent marginal for feature '" +
                  counts.features[static_cast<std::uint32_t>(f)] + "': stored " +
                  std::to_string(counts.feature_marginals[f]) + ", entries sum to " +
                  std::to_string(ff[f]));
  }
  if (n != counts.total)
    throw Error("inconsistent total count: stored " + std::to_string(counts.total) +
                ", entries sum to " + std::to_string(n));
}

namespace {

std::int64_t parse_count(std::string_view text, const std::string& where) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(where + ": count is not a base-10 integer: '" + std::string(text) + "'");
  if (value <= 0) throw Error(where + ": count must be positive, got " + std::string(text));
  return value;
}

}  // namespace

FeatureCounts read_feature_counts(std::istream& in, const std::string& source_name) {
  FeatureCounts counts;
  // (word, feature) -> accumulated count; flattened into entries afterwards
  std::unordered_map<std::uint64_t, std::int64_t> acc;

  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      // strip a UTF-8 BOM if present
      if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
      first = false;
    }
    if (line.empty()) continue;
    const std::string where = source_name + ":" + std::to_string(line_no);

    auto tab1 = line.find('\t');
    if (tab1 == std::string::npos)
      throw Error(where + ": expected word<TAB>feature<TAB>count");
    auto tab2 = line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos)
      throw Error(where + ": expected exactly 3 tab-separated fields");

    std::string_view word(line.data(), tab1);
    std::string_view feature(line.data() + tab1 + 1, tab2 - tab1 - 1);
    std::string_view count_text(line.data() + tab2 + 1, line.size() - tab2 - 1);
    if (word.empty()) throw Error(where + ": empty word");
    if (feature.empty()) throw Error(where + ": empty feature");

    std::int64_t c = parse_count(count_text, where);
    std::uint32_t w = counts.words.add(word);
    std::uint32_t f = counts.features.add(feature);
    acc[(static_cast<std::uint64_t>(w) << 32) | f] += c;
  }

  counts.entries.resize(counts.words.size());
  for (const auto& [key, c] : acc) {
    auto w = static_cast<std::uint32_t>(key >> 32);
    auto f = static_cast<std::uint32_t>(key & 0xffffffffULL);
    counts.entries[w].emplace_back(f, c);
  }
  for (auto& e : counts.entries)
    std::sort(e.begin(), e.end());
  recompute_marginals(counts);
  return counts;
}

FeatureCounts read_feature_counts_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open counts file: " + path.string());
  return read_feature_counts(in, path.filename().string());
}

}  // namespace dtembed
