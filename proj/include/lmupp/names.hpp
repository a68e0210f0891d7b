#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lmu {

// The distinguished mu-constant. It may occur free but is never bound.
inline constexpr std::string_view kDelta = "delta";

inline bool is_delta(std::string_view name) { return name == kDelta; }

// Returns "base$N" with N drawn from a process-wide atomic counter. Names
// produced by the parser can never contain '$', so the result is always fresh.
std::string fresh_name(std::string_view base);

// Strips a trailing "$N" suffix, if any.
std::string base_name(std::string_view name);

// Small sorted set of identifiers. Free-variable sets are cached on every
// term node, so this favours compactness over asymptotics.
class NameSet {
 public:
  NameSet() = default;
  NameSet(std::initializer_list<std::string> names);

  bool contains(std::string_view name) const;
  bool empty() const { return names_.empty(); }
  std::size_t size() const { return names_.size(); }

  void insert(std::string name);
  void erase(std::string_view name);

  NameSet without(std::string_view name) const;
  static NameSet unite(const NameSet& a, const NameSet& b);
  bool intersects(const NameSet& other) const;
  bool subset_of(const NameSet& other) const;

  auto begin() const { return names_.begin(); }
  auto end() const { return names_.end(); }

  friend bool operator==(const NameSet&, const NameSet&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace lmu
