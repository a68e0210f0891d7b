#include "lmupp/names.hpp"

#include <algorithm>
#include <atomic>

namespace lmu {

namespace {
std::atomic<unsigned long> g_fresh_counter{0};
}

std::string fresh_name(std::string_view base) {
  std::string out = base_name(base);
  out += '$';
  out += std::to_string(g_fresh_counter.fetch_add(1, std::memory_order_relaxed));
  return out;
}

std::string base_name(std::string_view name) {
  auto pos = name.find('$');
  return std::string(pos == std::string_view::npos ? name : name.substr(0, pos));
}

NameSet::NameSet(std::initializer_list<std::string> names) {
  for (const auto& n : names) insert(n);
}

bool NameSet::contains(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  return it != names_.end() && *it == name;
}

void NameSet::insert(std::string name) {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) names_.insert(it, std::move(name));
}

void NameSet::erase(std::string_view name) {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it != names_.end() && *it == name) names_.erase(it);
}

NameSet NameSet::without(std::string_view name) const {
  if (!contains(name)) return *this;
  NameSet out = *this;
  out.erase(name);
  return out;
}

NameSet NameSet::unite(const NameSet& a, const NameSet& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  NameSet out;
  out.names_.reserve(a.size() + b.size());
  std::set_union(a.names_.begin(), a.names_.end(), b.names_.begin(), b.names_.end(),
                 std::back_inserter(out.names_));
  return out;
}

bool NameSet::intersects(const NameSet& other) const {
  auto i = names_.begin();
  auto j = other.names_.begin();
  while (i != names_.end() && j != other.names_.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

bool NameSet::subset_of(const NameSet& other) const {
  return std::includes(other.names_.begin(), other.names_.end(), names_.begin(), names_.end());
}

}  // namespace lmu
