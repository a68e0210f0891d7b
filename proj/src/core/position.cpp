#include "lmupp/position.hpp"

#include <stdexcept>

namespace lmu {

Position Position::child(std::uint8_t index) const {
  Position out = *this;
  out.path_.push_back(index);
  return out;
}

Position Position::concat(const Position& suffix) const {
  Position out = *this;
  out.path_.insert(out.path_.end(), suffix.path_.begin(), suffix.path_.end());
  return out;
}

bool Position::is_prefix_of(const Position& other) const {
  if (path_.size() > other.path_.size()) return false;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (path_[i] != other.path_[i]) return false;
  }
  return true;
}

std::string Position::str() const {
  if (path_.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path_.size(); ++i) {
    if (i) out += '.';
    out += static_cast<char>('0' + path_[i]);
  }
  return out;
}

Position Position::parse(std::string_view text) {
  if (text == "root" || text.empty()) return {};
  std::vector<std::uint8_t> path;
  bool expect_digit = true;
  for (char c : text) {
    if (expect_digit && (c == '0' || c == '1')) {
      path.push_back(static_cast<std::uint8_t>(c - '0'));
      expect_digit = false;
    } else if (!expect_digit && c == '.') {
      expect_digit = true;
    } else {
      throw std::invalid_argument("malformed position: " + std::string(text));
    }
  }
  if (expect_digit) throw std::invalid_argument("malformed position: " + std::string(text));
  return Position(std::move(path));
}

}  // namespace lmu
