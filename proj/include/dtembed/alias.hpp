#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dtembed/error.hpp"
#include "dtembed/rng.hpp"

namespace dtembed {

// Walker alias table: O(n) construction, O(1) sampling from a discrete
// distribution proportional to the given non-negative weights.
class AliasTable {
 public:
  AliasTable() = default;

  explicit AliasTable(const std::vector<double>& weights) {
    const std::size_t n = weights.size();
    if (n == 0) throw Error("alias table: empty weight vector");
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw Error("alias table: negative weight");
      total += w;
    }
    if (total <= 0.0) throw Error("alias table: all weights zero");

    prob_.assign(n, 0.0);
    alias_.assign(n, 0);
    std::vector<double> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = weights[i] * n / total;

    // Stacks filled in index order so construction is deterministic.
    std::vector<std::uint32_t> small, large;
    small.reserve(n);
    large.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (scaled[i] < 1.0)
        small.push_back(static_cast<std::uint32_t>(i));
      else
        large.push_back(static_cast<std::uint32_t>(i));
    }
    while (!small.empty() && !large.empty()) {
      std::uint32_t s = small.back();
      std::uint32_t l = large.back();
      small.pop_back();
      large.pop_back();
      prob_[s] = scaled[s];
      alias_[s] = l;
      scaled[l] = (scaled[l] + scaled[s]) - 1.0;
      if (scaled[l] < 1.0)
        small.push_back(l);
      else
        large.push_back(l);
    }
    while (!large.empty()) {
      prob_[large.back()] = 1.0;
      large.pop_back();
    }
    while (!small.empty()) {
      prob_[small.back()] = 1.0;  // numerical leftovers
      small.pop_back();
    }
  }

  std::size_t size() const { return prob_.size(); }
  bool empty() const { return prob_.empty(); }

  // Sample with two uniforms in [0,1).
  std::uint32_t sample(double u1, double u2) const {
    auto k = static_cast<std::size_t>(u1 * static_cast<double>(prob_.size()));
    if (k >= prob_.size()) k = prob_.size() - 1;
    return u2 < prob_[k] ? static_cast<std::uint32_t>(k) : alias_[k];
  }

  std::uint32_t sample(Rng& rng) const {
    double u1 = rng.next_double();
    double u2 = rng.next_double();
    return sample(u1, u2);
  }

 private:
  std::vector<double> prob_;
  std::vector<std::uint32_t> alias_;
};

}  // namespace dtembed
