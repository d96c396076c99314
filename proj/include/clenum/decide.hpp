// Polynomial-time membership tests v in Cl_F(S) for each algorithm tag.
// Every decider is total over raw instances: shape mismatches throw, the
// empty family always decides "no" (the closure of the empty set is empty),
// and each test is usable as the extension oracle of the backtrack search via
// the prefix equivalence (v extendable iff v is in the closure of the
// projected family).
#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clenum/clones.hpp"
#include "clenum/errors.hpp"
#include "clenum/family.hpp"
#include "clenum/multidomain.hpp"
#include "clenum/oracle.hpp"
#include "clenum/vector.hpp"

namespace clenum {

// Index of the first 1-coordinate of a boolean vector, -1 if none.  The
// MSB-first packing makes this a count of leading zeros.
inline int leading_index(const Vector& v) {
  const auto& ws = v.words();
  for (std::size_t wi = 0; wi < ws.size(); ++wi)
    if (ws[wi] != 0)
      return static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countl_zero(ws[wi])));
  return -1;
}

// Incremental GF(2) elimination over word-packed rows.  Maintains a forward
// echelon basis (distinct leading indices, first-come pivoting) plus, for the
// odd-combination test, the parity of the member combination each row
// represents and whether any kernel combination has odd support.
class Gf2Eliminator {
 public:
  explicit Gf2Eliminator(const Family& s) : n_(s.n()), lead_row_(static_cast<std::size_t>(s.n()), -1) {
    if (s.domain() != 2) throw SpecError("linear algebra requires the boolean domain");
    for (const Vector& w : s) add_row(w);
  }

  void add_row(Vector x) {
    int parity = 1;
    reduce(x, parity);
    const int li = leading_index(x);
    if (li < 0) {
      if (parity & 1) kernel_odd_ = true;
      return;
    }
    lead_row_[static_cast<std::size_t>(li)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(x));
    parities_.push_back(parity);
  }

  bool in_span(Vector x) const {
    int parity = 0;
    reduce(x, parity);
    return x.all_zero();
  }

  // Some combination with odd support equals x.  Support parity is linear
  // over GF(2): reduce x to find one solution's parity, then adjust by a
  // kernel element when an odd-parity kernel combination exists.
  bool in_span_odd(Vector x) const {
    int parity = 0;
    reduce(x, parity);
    if (!x.all_zero()) return false;
    return (parity & 1) != 0 || kernel_odd_;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vector>& basis() const { return rows_; }
  bool kernel_has_odd_combination() const { return kernel_odd_; }

 private:
  void reduce(Vector& x, int& parity) const {
    while (true) {
      const int li = leading_index(x);
      if (li < 0) return;
      const int r = lead_row_[static_cast<std::size_t>(li)];
      if (r < 0) return;
      x.xor_with(rows_[static_cast<std::size_t>(r)]);
      parity ^= parities_[static_cast<std::size_t>(r)];
    }
  }

  int n_;
  std::vector<Vector> rows_;
  std::vector<int> parities_;
  std::vector<int> lead_row_;
  bool kernel_odd_ = false;
};

namespace detail {
inline void check_query_shape(const Family& s, const Vector& v) {
  if (s.empty_set()) return;
  if (v.size() != s.n() || v.domain() != s.domain())
    throw SpecError("query vector shape does not match the instance");
}
}  // namespace detail

// --- no operations: the closure is the family itself -----------------------

inline bool decide_list_only(const Family& s, const Vector& v) {
  detail::check_query_shape(s, v);
  return s.contains(v);
}

// --- conjunction ------------------------------------------------------------

// v is an intersection of members iff the members that dominate v (all w
// with 1(v) subset of 1(w)) exist and meet exactly to v.
inline bool decide_meet(const Family& s, const Vector& v) {
  detail::check_query_shape(s, v);
  if (s.empty_set()) return false;
  bool any = false;
  Vector acc(s.n(), 2);
  for (const Vector& w : s) {
    if (!v.ones_subset_of(w)) continue;
    if (!any) {
      acc = w;
      any = true;
    } else {
      acc.meet_with(w);
    }
  }
  return any && acc == v;
}

// --- GF(2) span and odd-size sums -------------------------------------------

inline bool decide_span(const Family& s, const Vector& v) {
  detail::check_query_shape(s, v);
  if (s.empty_set()) return false;
  return Gf2Eliminator(s).in_span(v);
}

inline bool decide_affine_span(const Family& s, const Vector& v) {
  detail::check_query_shape(s, v);
  if (s.empty_set()) return false;
  return Gf2Eliminator(s).in_span_odd(v);
}

// --- lattice (conjunction + disjunction) ------------------------------------

// v is in the lattice closure iff the join over i in 1(v) of the meets
// x^i = meet{w : w_i = 1} reproduces v.  The empty join (v = 0) must not
// silently accept: 0 belongs to the closure iff the meet of all of S is 0.
inline bool decide_lattice(const Family& s, const Vector& v) {
  detail::check_query_shape(s, v);
  if (s.empty_set()) return false;
  const int n = s.n();
  if (v.all_zero()) {
    Vector acc = s.at(0);
    for (std::size_t i = 1; i < s.size(); ++i) acc.meet_with(s.at(i));
    return acc.all_zero();
  }
  Vector acc(n, 2);
  for (int i = 0; i < n; ++i) {
    if (v.get(i) != 1) continue;
    bool any = false;
    Vector meet_i(n, 2);
    for (const Vector& w : s) {
      if (w.get(i) != 1) continue;
      if (!any) {
        meet_i = w;
        any = true;
      } else {
        meet_i.meet_with(w);
      }
    }
    if (!any) return false;
    acc.join_with(meet_i);
  }
  return acc == v;
}

// --- pair patterns (majority and the two limit clones) ----------------------

// For each unordered pair of coordinates, which of the four boolean patterns
// is realized by some member; plus, per column, which values occur.
struct PairTable {
  int n = 0;
  std::vector<std::uint8_t> pat;  // index i*n+j for i<j, bit (a<<1)|b
  std::vector<std::uint8_t> col;  // per column, bit a set iff value a occurs

  static PairTable build(const Family& s) {
    PairTable t;
    t.n = s.n();
    const std::size_t n = static_cast<std::size_t>(t.n);
    t.pat.assign(n * n, 0);
    t.col.assign(n, 0);
    for (const Vector& w : s) {
      for (int i = 0; i < t.n; ++i) {
        const int a = w.get(i);
        t.col[static_cast<std::size_t>(i)] |= static_cast<std::uint8_t>(1 << a);
        for (int j = i + 1; j < t.n; ++j) {
          const int b = w.get(j);
          t.pat[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] |=
              static_cast<std::uint8_t>(1 << ((a << 1) | b));
        }
      }
    }
    return t;
  }

  bool has(int i, int j, int a, int b) const {
    if (i > j) {
      std::swap(i, j);
      std::swap(a, b);
    }
    return (pat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)] >>
            ((a << 1) | b)) &
           1;
  }

  // The two viable values for coordinate j given value a at coordinate i < j,
  // packed as bits {value0, value1}.
  std::uint8_t viable_second(int i, int j, int a) const {
    const std::uint8_t byte = pat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(j)];
    return static_cast<std::uint8_t>((byte >> (a << 1)) & 3);
  }

  bool column_has(int i, int a) const { return (col[static_cast<std::size_t>(i)] >> a) & 1; }
};

// Majority closure: every pair pattern of v must be realized by some member
// (for n = 1 the closure degenerates to the family itself).
inline bool decide_majority(const PairTable& t, const Family& s, const Vector& v) {
  detail::check_query_shape(s, v);
  if (s.empty_set()) return false;
  if (s.n() == 1) return s.contains(v);
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j)
      if (!t.has(i, j, v.get(i), v.get(j))) return false;
  return true;
}

inline bool decide_majority(const Family& s, const Vector& v) {
  if (s.empty_set()) return false;
  return decide_majority(PairTable::build(s), s, v);
}

namespace detail {

// Shared body of the two limit-clone deciders.  Constant columns are
// normalized away first (every closure element agrees with them), then the
// residual pattern conditions are checked on the pair table; pairs touching a
// constant column pass automatically once the normalization check holds, so
// the scan can stay on raw coordinates.
inline bool decide_limit_clone(const PairTable& t, const Family& s, const Vector& v,
                               bool require_strict_pattern) {
  check_query_shape(s, v);
  if (s.empty_set()) return false;
  const int n = s.n();

  Vector all_meet = s.at(0);
  Vector all_join = s.at(0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    all_meet.meet_with(s.at(i));
    all_join.join_with(s.at(i));
  }
  // Columns constant 1: v must be 1 there; columns constant 0: v must be 0.
  if (!all_meet.ones_subset_of(v)) return false;
  if (!v.ones_subset_of(all_join)) return false;

  bool dominated = false;
  for (const Vector& w : s)
    if (v.ones_subset_of(w)) {
      dominated = true;
      break;
    }
  if (!dominated) return false;

  for (int k = 0; k < n; ++k) {
    if (v.get(k) != 1) continue;
    for (int i = 0; i < n; ++i) {
      if (v.get(i) != 0) continue;
      const bool ok = require_strict_pattern
                          ? t.has(k, i, 1, 0)
                          : (t.has(k, i, 1, 0) || t.has(k, i, 0, 1));
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace detail

// x and (y -> z): some member dominates 1(v) and every (1,0) position pair of
// v is realized by a member in mixed form (0,1) or (1,0).
inline bool decide_and_imp(const PairTable& t, const Family& s, const Vector& v) {
  return detail::decide_limit_clone(t, s, v, /*require_strict_pattern=*/false);
}

inline bool decide_and_imp(const Family& s, const Vector& v) {
  if (s.empty_set()) return false;
  return decide_and_imp(PairTable::build(s), s, v);
}

// x and (y or z): as above but the pair must be realized exactly as (1,0).
inline bool decide_and_or(const PairTable& t, const Family& s, const Vector& v) {
  return detail::decide_limit_clone(t, s, v, /*require_strict_pattern=*/true);
}

inline bool decide_and_or(const Family& s, const Vector& v) {
  if (s.empty_set()) return false;
  return decide_and_or(PairTable::build(s), s, v);
}

// --- column classes (functionally complete reducts) -------------------------

enum class FixMode {
  kNone,       // lattice plus negation: no fixed columns
  kConstants,  // if-then-else: all-0 and all-1 columns keep their value
  kZeros,      // or + xor: all-0 columns stay 0
};

// Partition of the columns into classes of identical columns, with some
// columns fixed to a constant value depending on the clone.  The closure is
// exactly the set of vectors taking the fixed values and constant on each
// class, hence has 2^#classes elements.
struct ColumnClasses {
  int n = 0;
  std::vector<int> fixed_value;     // -1 when free
  std::vector<int> class_of;        // class id, -1 for fixed columns
  std::vector<Vector> class_mask;   // boolean mask of each class
  int num_classes = 0;

  static ColumnClasses build(const Family& s, FixMode mode) {
    if (s.empty_set()) throw SpecError("column classes are undefined for an empty family");
    ColumnClasses c;
    c.n = s.n();
    const std::size_t n = static_cast<std::size_t>(c.n);
    const std::size_t m = s.size();
    c.fixed_value.assign(n, -1);
    c.class_of.assign(n, -1);

    std::vector<std::vector<std::uint8_t>> sig(n, std::vector<std::uint8_t>(m));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i < n; ++i)
        sig[i][r] = static_cast<std::uint8_t>(s.at(r).get(static_cast<int>(i)));

    auto column_constant = [&](std::size_t i) -> int {
      const std::uint8_t first = sig[i][0];
      for (std::size_t r = 1; r < m; ++r)
        if (sig[i][r] != first) return -1;
      return first;
    };

    std::vector<std::pair<std::vector<std::uint8_t>, int>> seen;  // signature -> class id
    for (std::size_t i = 0; i < n; ++i) {
      const int cst = column_constant(i);
      const bool fix = (mode == FixMode::kConstants && cst >= 0) ||
                       (mode == FixMode::kZeros && cst == 0);
      if (fix) {
        c.fixed_value[i] = cst;
        continue;
      }
      int id = -1;
      for (const auto& [key, val] : seen)
        if (key == sig[i]) {
          id = val;
          break;
        }
      if (id < 0) {
        id = c.num_classes++;
        seen.emplace_back(sig[i], id);
        c.class_mask.emplace_back(c.n, 2);
      }
      c.class_of[i] = id;
      c.class_mask[static_cast<std::size_t>(id)].set(static_cast<int>(i), 1);
    }
    return c;
  }
};

inline bool decide_classes(const ColumnClasses& c, const Vector& v) {
  if (v.size() != c.n || v.domain() != 2)
    throw SpecError("query vector shape does not match the instance");
  std::vector<int> class_value(static_cast<std::size_t>(c.num_classes), -1);
  for (int i = 0; i < c.n; ++i) {
    const int a = v.get(i);
    if (c.fixed_value[static_cast<std::size_t>(i)] >= 0) {
      if (a != c.fixed_value[static_cast<std::size_t>(i)]) return false;
      continue;
    }
    int& cv = class_value[static_cast<std::size_t>(c.class_of[static_cast<std::size_t>(i)])];
    if (cv < 0)
      cv = a;
    else if (cv != a)
      return false;
  }
  return true;
}

// --- dispatch ----------------------------------------------------------------

// Decides membership for a resolved instance.  Construction precomputes the
// algorithm's tables once; operator() then answers queries in the ORIGINAL
// problem space (the dual reduction's output complement is applied to the
// query internally).
class MembershipDecider {
 public:
  explicit MembershipDecider(ResolvedProblem rp) : rp_(std::move(rp)) {
    const Family& fam = rp_.family;
    if (fam.empty_set()) return;
    switch (rp_.algo) {
      case Algo::kSpan:
      case Algo::kAffineSpan:
        elim_.emplace(fam);
        break;
      case Algo::kMajority:
      case Algo::kAndOr:
      case Algo::kAndImp:
        pairs_.emplace(PairTable::build(fam));
        break;
      case Algo::kLatticeNeg:
        classes_.emplace(ColumnClasses::build(fam, FixMode::kNone));
        break;
      case Algo::kDiscriminator:
        classes_.emplace(ColumnClasses::build(fam, FixMode::kConstants));
        break;
      case Algo::kOrXorClasses:
        classes_.emplace(ColumnClasses::build(fam, FixMode::kZeros));
        break;
      case Algo::kNuBoolean:
      case Algo::kNuGeneral:
        nu_.emplace(rp_.generators, rp_.nu_width, fam, rp_.budget);
        break;
      case Algo::kAssociative:
        saturated_.emplace(saturate({*rp_.assoc_op}, fam, rp_.budget));
        break;
      case Algo::kSaturation:
        saturated_.emplace(saturate(rp_.generators, fam, rp_.budget));
        break;
      default:
        break;
    }
  }

  bool operator()(Vector v) const {
    const Family& fam = rp_.family;
    if (fam.empty_set()) return false;
    if (v.size() != fam.n() || v.domain() != fam.domain())
      throw SpecError("query vector shape does not match the instance");
    if (rp_.complement_outputs) v.complement_in_place();
    switch (rp_.algo) {
      case Algo::kListOnly: return decide_list_only(fam, v);
      case Algo::kMeet: return decide_meet(fam, v);
      case Algo::kSpan: return elim_->in_span(std::move(v));
      case Algo::kAffineSpan: return elim_->in_span_odd(std::move(v));
      case Algo::kLattice: return decide_lattice(fam, v);
      case Algo::kLatticeNeg:
      case Algo::kDiscriminator:
      case Algo::kOrXorClasses: return decide_classes(*classes_, v);
      case Algo::kMajority: return decide_majority(*pairs_, fam, v);
      case Algo::kAndOr: return decide_and_or(*pairs_, fam, v);
      case Algo::kAndImp: return decide_and_imp(*pairs_, fam, v);
      case Algo::kNuBoolean:
      case Algo::kNuGeneral: return (*nu_)(v);
      case Algo::kGroup: return decide_group(*rp_.group, fam, v);
      case Algo::kAssociative:
      case Algo::kSaturation: return saturated_->contains(v);
    }
    throw SpecError("unknown algorithm tag");
  }

  const ResolvedProblem& problem() const { return rp_; }

 private:
  ResolvedProblem rp_;
  std::optional<Gf2Eliminator> elim_;
  std::optional<PairTable> pairs_;
  std::optional<ColumnClasses> classes_;
  std::optional<NuDecider> nu_;
  std::optional<Family> saturated_;
};

}  // namespace clenum
