// Finitary operations over a small domain, stored as explicit truth tables.
//
// A table row index encodes the argument tuple in mixed radix with the first
// argument most significant: index(a1..at) = a1*d^(t-1) + ... + at.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "clenum/errors.hpp"
#include "clenum/family.hpp"
#include "clenum/vector.hpp"

namespace clenum {

class Operation {
 public:
  Operation() = default;
  Operation(std::string name, int d, int arity, std::vector<std::uint8_t> table)
      : name_(std::move(name)), d_(d), arity_(arity), table_(std::move(table)) {
    if (d < 2 || d > 10) throw SpecError("operation domain size must be in [2, 10]");
    if (arity < 1) throw SpecError("operation arity must be at least 1");
    std::size_t rows = 1;
    for (int i = 0; i < arity; ++i) rows *= static_cast<std::size_t>(d);
    if (table_.size() != rows) throw SpecError("operation table has wrong row count");
    for (auto v : table_)
      if (v >= d) throw SpecError("operation table value out of domain");
  }

  const std::string& name() const { return name_; }
  int domain() const { return d_; }
  int arity() const { return arity_; }
  const std::vector<std::uint8_t>& table() const { return table_; }
  std::size_t rows() const { return table_.size(); }

  int eval_index(std::size_t index) const { return table_[index]; }

  int eval(const std::vector<int>& args) const {
    std::size_t idx = 0;
    for (int a : args) idx = idx * static_cast<std::size_t>(d_) + static_cast<std::size_t>(a);
    return table_[idx];
  }

  bool operator==(const Operation& o) const {
    return d_ == o.d_ && arity_ == o.arity_ && table_ == o.table_;
  }

  // Invariance under every argument transposition, checked via adjacent swaps.
  bool is_symmetric() const {
    if (arity_ == 1) return true;
    std::vector<int> args(static_cast<std::size_t>(arity_), 0);
    for (std::size_t row = 0; row < table_.size(); ++row) {
      std::size_t rest = row;
      for (int i = arity_ - 1; i >= 0; --i) {
        args[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(d_));
        rest /= static_cast<std::size_t>(d_);
      }
      for (int i = 0; i + 1 < arity_; ++i) {
        std::swap(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i + 1)]);
        if (eval(args) != static_cast<int>(table_[row])) return false;
        std::swap(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i + 1)]);
      }
    }
    return true;
  }

 private:
  std::string name_;
  int d_ = 2;
  int arity_ = 1;
  std::vector<std::uint8_t> table_;
};

// Coefficient-wise application: result[i] = f(args[0][i], ..., args[t-1][i]).
inline Vector apply_op(const Operation& f, const std::vector<Vector>& args) {
  if (static_cast<int>(args.size()) != f.arity())
    throw SpecError("apply_op: argument count does not match arity");
  for (const auto& a : args)
    if (a.domain() != f.domain() || a.size() != args[0].size())
      throw SpecError("apply_op: argument domain/length mismatch");
  int n = args[0].size();
  Vector r(n, f.domain());
  std::size_t d = static_cast<std::size_t>(f.domain());
  for (int i = 0; i < n; ++i) {
    std::size_t idx = 0;
    for (const auto& a : args) idx = idx * d + static_cast<std::size_t>(a.get(i));
    r.set(i, f.eval_index(idx));
  }
  return r;
}

// The dual operation g(x1..xt) = neg(f(neg(x1), ..., neg(xt))), boolean only.
inline Operation dual_of(const Operation& f) {
  if (f.domain() != 2) throw SpecError("dual is defined for the boolean domain only");
  std::size_t rows = f.rows();
  std::vector<std::uint8_t> t(rows);
  for (std::size_t i = 0; i < rows; ++i)
    t[i] = static_cast<std::uint8_t>(1 - f.eval_index(rows - 1 - i));
  return Operation("dual_" + f.name(), 2, f.arity(), std::move(t));
}

namespace ops {

inline Operation from_formula(std::string name, int d, int arity,
                              int (*fn)(const std::vector<int>&)) {
  std::size_t rows = 1;
  for (int i = 0; i < arity; ++i) rows *= static_cast<std::size_t>(d);
  std::vector<std::uint8_t> table(rows);
  std::vector<int> args(static_cast<std::size_t>(arity));
  for (std::size_t row = 0; row < rows; ++row) {
    std::size_t rest = row;
    for (int i = arity - 1; i >= 0; --i) {
      args[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    table[row] = static_cast<std::uint8_t>(fn(args));
  }
  return Operation(std::move(name), d, arity, std::move(table));
}

inline Operation and2() {
  return from_formula("and", 2, 2, +[](const std::vector<int>& a) { return a[0] & a[1]; });
}
inline Operation or2() {
  return from_formula("or", 2, 2, +[](const std::vector<int>& a) { return a[0] | a[1]; });
}
inline Operation xor2() {
  return from_formula("xor", 2, 2, +[](const std::vector<int>& a) { return a[0] ^ a[1]; });
}
inline Operation not1() {
  return from_formula("not", 2, 1, +[](const std::vector<int>& a) { return 1 - a[0]; });
}
inline Operation maj3() {
  return from_formula("maj", 2, 3,
                      +[](const std::vector<int>& a) { return (a[0] + a[1] + a[2] >= 2) ? 1 : 0; });
}
inline Operation xor3() {
  return from_formula("xor3", 2, 3, +[](const std::vector<int>& a) { return a[0] ^ a[1] ^ a[2]; });
}
// x AND (y OR z)
inline Operation and_or() {
  return from_formula("andor", 2, 3,
                      +[](const std::vector<int>& a) { return a[0] & (a[1] | a[2]); });
}
// x AND (y -> z)
inline Operation and_imp() {
  return from_formula("andimp", 2, 3,
                      +[](const std::vector<int>& a) { return a[0] & ((1 - a[1]) | a[2]); });
}
// if x then y else z
inline Operation ite() {
  return from_formula("ite", 2, 3, +[](const std::vector<int>& a) { return a[0] ? a[1] : a[2]; });
}
inline Operation const_fn(int d, int value) {
  Operation base = from_formula("tmp", d, 1, +[](const std::vector<int>&) { return 0; });
  std::vector<std::uint8_t> t(base.rows(), static_cast<std::uint8_t>(value));
  return Operation("const" + std::to_string(value), d, 1, std::move(t));
}

// Threshold (k+1)-ary: 1 iff at least k arguments are 1.  Near-unanimity of
// arity k+1 for every k >= 2.
inline Operation threshold(int k) {
  if (k < 2) throw SpecError("threshold requires k >= 2");
  int arity = k + 1;
  std::size_t rows = std::size_t{1} << arity;
  std::vector<std::uint8_t> table(rows);
  for (std::size_t row = 0; row < rows; ++row) {
    int cnt = 0;
    for (int i = 0; i < arity; ++i)
      if (row & (std::size_t{1} << i)) ++cnt;
    table[row] = static_cast<std::uint8_t>(cnt >= k ? 1 : 0);
  }
  return Operation("th" + std::to_string(k) + "^" + std::to_string(k + 1), 2, arity,
                   std::move(table));
}

inline Operation mod_add(int d) {
  std::size_t rows = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::vector<std::uint8_t> t(rows);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      t[static_cast<std::size_t>(x * d + y)] = static_cast<std::uint8_t>((x + y) % d);
  return Operation("add" + std::to_string(d), d, 2, std::move(t));
}

// min(x + y, 2) over domain {0, 1, 2}: associative, commutative, identity 0,
// but 2 has no inverse.
inline Operation capped_sum() {
  return from_formula("cappedsum", 3, 2,
                      +[](const std::vector<int>& a) { return std::min(a[0] + a[1], 2); });
}

// Returns y when y == z, otherwise x; near-unanimity of arity 3 over any d.
inline Operation dual_discriminator(int d) {
  std::size_t rows =
      static_cast<std::size_t>(d) * static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::vector<std::uint8_t> t(rows);
  std::size_t row = 0;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) t[row++] = static_cast<std::uint8_t>(y == z ? y : x);
  return Operation("dualdiscr" + std::to_string(d), d, 3, std::move(t));
}

inline Operation bit_xor4() {
  return from_formula("bitxor4", 4, 2, +[](const std::vector<int>& a) { return a[0] ^ a[1]; });
}

}  // namespace ops
}  // namespace clenum
