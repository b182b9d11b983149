#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dtembed {

// Interned string table: id <-> string, insertion order preserved.
class Vocabulary {
 public:
  std::uint32_t add(std::string_view s) {
    auto it = index_.find(std::string(s));
    if (it != index_.end()) return it->second;
    auto id = static_cast<std::uint32_t>(items_.size());
    items_.emplace_back(s);
    index_.emplace(items_.back(), id);
    return id;
  }

  std::optional<std::uint32_t> find(std::string_view s) const {
    auto it = index_.find(std::string(s));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& operator[](std::uint32_t id) const { return items_[id]; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<std::string>& items() const { return items_; }

 private:
  std::vector<std::string> items_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace dtembed
