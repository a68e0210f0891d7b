#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lmu {

// Path of child indices from the root of a term. Binders have a single
// child 0 (their body); applications have children 0 (function) and 1
// (argument). The empty path is the root.
class Position {
 public:
  Position() = default;
  explicit Position(std::vector<std::uint8_t> path) : path_(std::move(path)) {}

  const std::vector<std::uint8_t>& path() const { return path_; }
  bool is_root() const { return path_.empty(); }
  std::size_t depth() const { return path_.size(); }

  Position child(std::uint8_t index) const;
  Position concat(const Position& suffix) const;
  bool is_prefix_of(const Position& other) const;

  // "root" or dotted indices, e.g. "0.1.0".
  std::string str() const;
  static Position parse(std::string_view text);

  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;

 private:
  std::vector<std::uint8_t> path_;
};

}  // namespace lmu
