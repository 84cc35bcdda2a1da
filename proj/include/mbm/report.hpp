#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mbm/matrix.hpp"

namespace mbm {

/// Outcome of one named diagram. On failure, `witness` is the index of a
/// domain basis vector on which the two composites differ (absent when the
/// condition is not an equation of composites, e.g. a rank test).
struct Condition {
  std::string id;
  bool pass = true;
  std::optional<std::size_t> witness;
};

class Report {
 public:
  void add(Condition c) { items_.push_back(std::move(c)); }

  void add_flag(std::string id, bool pass) { items_.push_back({std::move(id), pass, std::nullopt}); }

  /// Records whether two composites of one diagram agree.
  void add_equal(std::string id, const Mat& lhs, const Mat& rhs) {
    const auto diff = first_difference(lhs, rhs);
    items_.push_back({std::move(id), !diff.has_value(), diff});
  }

  /// Appends another report, prefixing each id.
  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.items_) items_.push_back({prefix + c.id, c.pass, c.witness});
  }

  bool ok() const {
    for (const auto& c : items_)
      if (!c.pass) return false;
    return true;
  }

  const std::vector<Condition>& items() const noexcept { return items_; }

  const Condition* find(const std::string& id) const {
    for (const auto& c : items_)
      if (c.id == id) return &c;
    return nullptr;
  }
  bool passed(const std::string& id) const {
    const auto* c = find(id);
    return c != nullptr && c->pass;
  }

  const Condition* first_failure() const {
    for (const auto& c : items_)
      if (!c.pass) return &c;
    return nullptr;
  }

  /// Ids are renamed in place; used when a generic check is reused for a
  /// differently named structure map.
  Report renamed(const std::vector<std::pair<std::string, std::string>>& mapping) const {
    Report out = *this;
    for (auto& c : out.items_)
      for (const auto& [from, to] : mapping)
        if (c.id == from) {
          c.id = to;
          break;
        }
    return out;
  }

  /// `<id>: PASS` or `<id>: FAIL[ witness=<index>]`, one per line.
  void print(std::ostream& out) const {
    for (const auto& c : items_) {
      out << c.id << ": " << (c.pass ? "PASS" : "FAIL");
      if (!c.pass && c.witness) out << " witness=" << *c.witness;
      out << '\n';
    }
  }

  std::string str() const {
    std::ostringstream out;
    print(out);
    return out.str();
  }

 private:
  std::vector<Condition> items_;
};

}  // namespace mbm
