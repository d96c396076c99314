// A Family is a deduplicated set of equal-length vectors over one domain,
// kept in first-seen order so downstream output is deterministic.
#pragma once

#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "clenum/errors.hpp"
#include "clenum/vector.hpp"

namespace clenum {

// Sorted distinct coordinate indices, 0-based internally.  Textual
// interfaces (DNF clauses, hypergraph edges) are 1-based and converted at
// the parsing boundary.
using IndexSet = std::vector<int>;

class Family {
 public:
  Family() = default;
  Family(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw SpecError("family length must be at least 1");
    if (d < 2 || d > 10) throw SpecError("domain size must be in [2, 10]");
  }

  // Empty family whose length is not yet pinned (n() == 0 until first insert).
  static Family empty(int d = 2) {
    Family f;
    f.d_ = d;
    return f;
  }

  static Family from_lines(const std::vector<std::string>& lines, int d = 2) {
    Family f = Family::empty(d);
    for (const auto& line : lines) f.insert(Vector::from_string(line, d));
    return f;
  }

  // Returns false (and keeps the first occurrence) on duplicates.
  bool insert(const Vector& v) {
    if (v.domain() != d_) throw SpecError("domain mismatch on family insert");
    if (n_ == 0)
      n_ = v.size();
    else if (v.size() != n_)
      throw SpecError("length mismatch on family insert: expected " + std::to_string(n_) +
                      ", got " + std::to_string(v.size()));
    auto [it, fresh] = index_.emplace(v, members_.size());
    (void)it;
    if (fresh) members_.push_back(v);
    return fresh;
  }

  bool contains(const Vector& v) const { return index_.count(v) > 0; }

  int n() const { return n_; }
  int domain() const { return d_; }
  std::size_t size() const { return members_.size(); }
  bool empty_set() const { return members_.empty(); }

  const Vector& at(std::size_t i) const { return members_[i]; }
  const std::vector<Vector>& members() const { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool same_set(const Family& o) const {
    if (size() != o.size()) return false;
    for (const auto& v : members_)
      if (!o.contains(v)) return false;
    return true;
  }

 private:
  int n_ = 0;
  int d_ = 2;
  std::vector<Vector> members_;
  std::unordered_map<Vector, std::size_t, VectorHash> index_;
};

// Coefficient-wise projection of one vector onto an index set.
inline Vector project(const Vector& v, const IndexSet& idx) {
  if (idx.empty()) throw SpecError("cannot project onto an empty index set");
  Vector r(static_cast<int>(idx.size()), v.domain());
  for (std::size_t p = 0; p < idx.size(); ++p) {
    int i = idx[p];
    if (i < 0 || i >= v.size()) throw SpecError("projection index out of range");
    r.set(static_cast<int>(p), v.get(i));
  }
  return r;
}

// Projection of a whole family; members that collide after projection merge.
inline Family project(const Family& s, const IndexSet& idx) {
  if (s.empty_set()) return Family::empty(s.domain());
  Family r = Family::empty(s.domain());
  for (const auto& v : s) r.insert(project(v, idx));
  return r;
}

// The n prefix projections S|[1..l]; prefixes[l-1] has length l.  Shared by
// the backtrack enumerators, which test extensions against prefix families.
inline std::vector<Family> prefix_families(const Family& s) {
  std::vector<Family> out;
  out.reserve(static_cast<std::size_t>(s.n()));
  IndexSet idx;
  for (int l = 1; l <= s.n(); ++l) {
    idx.push_back(l - 1);
    out.push_back(project(s, idx));
  }
  return out;
}

}  // namespace clenum
