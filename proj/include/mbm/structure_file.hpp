#pragma once

// Line-oriented structure files:
//
//   # comment
//   p = 2
//   dim = 2
//   m:
//   1 0 0 0
//   0 0 0 1
//
//   e: 1 0
//
// A block header `name:` is followed by matrix rows, one per line, up to the
// next blank line, header or key. A header may carry the whole matrix inline
// with rows separated by ';'. Known blocks: m, t1, t2, e, t3, t4, e_prime,
// c, c_inv. Entries may be negative and are reduced mod p.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mbm/braided_context.hpp"
#include "mbm/errors.hpp"
#include "mbm/generators.hpp"
#include "mbm/matrix.hpp"
#include "mbm/structures.hpp"

namespace mbm {

class StructureFile {
 public:
  StructureFile(FieldSpec field, std::size_t dim) : field_(field), dim_(dim) {}

  FieldSpec field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  bool has(const std::string& block) const { return blocks_.count(block) != 0; }
  const Mat& get(const std::string& block) const {
    auto it = blocks_.find(block);
    if (it == blocks_.end()) throw ParseError(0, "missing block '" + block + ":'");
    return it->second;
  }
  void set(const std::string& block, Mat m) {
    check_shape(block, m);
    blocks_.insert_or_assign(block, std::move(m));
  }
  const std::map<std::string, Mat>& blocks() const noexcept { return blocks_; }

  Semigroup semigroup() const { return {dim_, get("m")}; }
  MultiplierBimonoid bimonoid() const { return {semigroup(), get("t1"), get("t2"), get("e")}; }
  RegularMultiplierBimonoid regular() const { return {bimonoid(), get("t3"), get("t4"), get("e_prime")}; }

  /// The symmetric context, or the user braiding from the c (and c_inv) blocks.
  BraidedContext context() const {
    if (!has("c")) {
      if (has("c_inv")) throw ParseError(0, "block 'c_inv:' given without 'c:'");
      return BraidedContext::symmetric(field_);
    }
    if (has("c_inv")) return BraidedContext::with_braiding(UserBraiding(get("c"), get("c_inv")));
    return BraidedContext::with_braiding(UserBraiding::from(get("c")));
  }

  static std::optional<std::pair<std::size_t, std::size_t>> expected_shape(const std::string& block, std::size_t n) {
    if (block == "m") return std::pair{n, n * n};
    if (block == "e" || block == "e_prime") return std::pair{std::size_t{1}, n};
    if (block == "t1" || block == "t2" || block == "t3" || block == "t4" || block == "c" || block == "c_inv")
      return std::pair{n * n, n * n};
    return std::nullopt;
  }

 private:
  void check_shape(const std::string& block, const Mat& m) const {
    const auto shape = expected_shape(block, dim_);
    if (!shape) throw ParseError(0, "unknown block '" + block + ":'");
    if (m.rows() != shape->first || m.cols() != shape->second)
      throw ShapeError(block + " has shape " + m.shape() + ", expected " + std::to_string(shape->first) + "x" +
                       std::to_string(shape->second) + " for dim = " + std::to_string(dim_));
  }

  FieldSpec field_;
  std::size_t dim_;
  std::map<std::string, Mat> blocks_;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<long long> parse_int_row(const std::string& text, std::size_t line) {
  std::istringstream in(text);
  std::vector<long long> row;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(line, "not an integer: '" + tok + "'");
    row.push_back(v);
  }
  return row;
}

inline bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

inline std::size_t parse_size(const std::string& value, std::size_t line, const std::string& key) {
  const auto row = parse_int_row(value, line);
  if (row.size() != 1 || row[0] < 0) throw ParseError(line, "'" + key + "' needs one non-negative integer");
  return static_cast<std::size_t>(row[0]);
}

}  // namespace detail

inline StructureFile parse_structure(std::istream& in) {
  struct RawBlock {
    std::size_t line;
    std::vector<std::vector<long long>> rows;
  };
  std::optional<std::size_t> p, dim;
  std::map<std::string, RawBlock> raw;
  std::string current;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    const std::string t = detail::trim(text);
    if (t.empty()) {
      current.clear();
      continue;
    }
    if (auto eq = t.find('='); eq != std::string::npos) {
      const std::string key = detail::trim(t.substr(0, eq)), value = detail::trim(t.substr(eq + 1));
      current.clear();
      if (key == "p") {
        if (p) throw ParseError(line, "duplicate 'p'");
        p = detail::parse_size(value, line, key);
      } else if (key == "dim") {
        if (dim) throw ParseError(line, "duplicate 'dim'");
        dim = detail::parse_size(value, line, key);
      } else {
        throw ParseError(line, "unknown key '" + key + "'");
      }
      continue;
    }
    if (auto colon = t.find(':'); colon != std::string::npos) {
      const std::string name = detail::trim(t.substr(0, colon));
      if (!detail::is_identifier(name)) throw ParseError(line, "malformed block header");
      if (!StructureFile::expected_shape(name, 1)) throw ParseError(line, "unknown block '" + name + ":'");
      if (raw.count(name)) throw ParseError(line, "duplicate block '" + name + ":'");
      RawBlock& block = raw[name];
      block.line = line;
      current = name;
      const std::string rest = t.substr(colon + 1);
      std::size_t start = 0;
      while (start <= rest.size()) {
        const std::size_t end = std::min(rest.find(';', start), rest.size());
        auto row = detail::parse_int_row(rest.substr(start, end - start), line);
        if (!row.empty()) block.rows.push_back(std::move(row));
        start = end + 1;
      }
      if (!block.rows.empty()) current.clear();
      continue;
    }
    if (current.empty()) throw ParseError(line, "matrix row outside a block");
    raw[current].rows.push_back(detail::parse_int_row(t, line));
  }
  if (!p) throw ParseError(0, "missing 'p = <prime>'");
  if (!dim) throw ParseError(0, "missing 'dim = <n>'");
  if (*dim == 0) throw ParseError(0, "dim must be positive");
  std::optional<FieldSpec> field;
  try {
    field.emplace(static_cast<std::uint32_t>(*p));
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
  StructureFile out(*field, *dim);
  for (auto& [name, block] : raw) {
    if (block.rows.empty()) throw ParseError(block.line, "block '" + name + ":' is empty");
    for (const auto& row : block.rows)
      if (row.size() != block.rows.front().size())
        throw ParseError(block.line, "block '" + name + ":' has rows of different lengths");
    try {
      out.set(name, Mat::from_rows(*field, block.rows));
    } catch (const ShapeError& e) {
      throw ShapeError("line " + std::to_string(block.line) + ": " + e.what());
    }
  }
  return out;
}

inline StructureFile parse_structure_string(const std::string& text) {
  std::istringstream in(text);
  return parse_structure(in);
}

/// Canonical form: header comment, p, dim, then blocks in the order
/// m, t1, t2, e, t3, t4, e_prime, c, c_inv, each followed by a blank line.
inline void write_structure(std::ostream& out, const StructureFile& f, const std::string& comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "p = " << f.field().p() << '\n' << "dim = " << f.dim() << '\n';
  for (const char* name : {"m", "t1", "t2", "e", "t3", "t4", "e_prime", "c", "c_inv"}) {
    if (!f.has(name)) continue;
    out << '\n' << name << ":\n";
    write_matrix_rows(out, f.get(name));
  }
}

inline StructureFile to_structure_file(const MultiplierBimonoid& b) {
  StructureFile f(b.field(), b.dim());
  f.set("m", b.semigroup.m);
  f.set("t1", b.t1);
  f.set("t2", b.t2);
  f.set("e", b.e);
  return f;
}

inline StructureFile to_structure_file(const RegularMultiplierBimonoid& r) {
  StructureFile f = to_structure_file(r.bimonoid);
  f.set("t3", r.t3);
  f.set("t4", r.t4);
  f.set("e_prime", r.e_prime);
  return f;
}

/// A group multiplication table: one row of element indices per line, '#'
/// comments and blank lines ignored.
inline FiniteGroupSpec parse_group_table(std::istream& in) {
  FiniteGroupSpec::Table table;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    const auto row = detail::parse_int_row(text, line);
    if (row.empty()) continue;
    std::vector<std::size_t> r;
    for (long long v : row) {
      if (v < 0) throw ParseError(line, "negative group element");
      r.push_back(static_cast<std::size_t>(v));
    }
    table.push_back(std::move(r));
  }
  return FiniteGroupSpec(std::move(table));
}

}  // namespace mbm
