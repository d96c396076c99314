// Membership machinery for operations over arbitrary finite domains:
//   * near-unanimity detection and projection-based membership (the local
//     characterization: v is in the closure iff every width-(a-1) projection
//     of v lies in the corresponding projected closure),
//   * commutative group recognition, decomposition into cyclic prime-power
//     components, and membership via linear congruence systems,
//   * depth-first enumeration for a single associative operation.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clenum/errors.hpp"
#include "clenum/family.hpp"
#include "clenum/operation.hpp"
#include "clenum/oracle.hpp"
#include "clenum/stream.hpp"
#include "clenum/vector.hpp"

namespace clenum {

// Returns the arity if f satisfies the near-unanimity identities
// f(y,x,...,x) = f(x,y,x,...,x) = ... = f(x,...,x,y) = x for all x, y
// (taking y = x also forces idempotence).  Arity-1 and arity-2 operations
// fail these identities over any domain with at least two elements.
inline std::optional<int> detect_near_unanimity(const Operation& f) {
  const int t = f.arity();
  const int d = f.domain();
  std::vector<int> args(static_cast<std::size_t>(t));
  for (int x = 0; x < d; ++x) {
    for (int pos = 0; pos < t; ++pos) {
      for (int y = 0; y < d; ++y) {
        std::fill(args.begin(), args.end(), x);
        args[static_cast<std::size_t>(pos)] = y;
        if (f.eval(args) != x) return std::nullopt;
      }
    }
  }
  return t;
}

// All size-w subsets of {0,...,n-1} in lexicographic order.
inline std::vector<IndexSet> all_combinations(int n, int w) {
  std::vector<IndexSet> out;
  if (w <= 0 || w > n) return out;
  IndexSet cur(static_cast<std::size_t>(w));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = w - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - w + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < w; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Decides closure membership when the generating set contains a
// near-unanimity operation of arity w+1: membership holds iff every
// projection onto w coordinates lands in the projected closure.  All
// projected closures are computed once at construction by saturation.
// When w >= n the whole closure is saturated directly.
class NuDecider {
 public:
  NuDecider(std::vector<Operation> generators, int width, const Family& family,
            std::size_t budget = kDefaultBudget)
      : n_(family.n()), width_(width) {
    if (width_ < 1) throw SpecError("projection width must be at least 1");
    if (family.empty_set()) {
      empty_ = true;
      return;
    }
    if (width_ >= n_) {
      whole_ = saturate(generators, family, budget);
      return;
    }
    index_sets_ = all_combinations(n_, width_);
    closures_.reserve(index_sets_.size());
    for (const IndexSet& idx : index_sets_)
      closures_.push_back(saturate(generators, project(family, idx), budget));
  }

  bool operator()(const Vector& v) const {
    if (empty_) return false;
    if (v.size() != n_) throw SpecError("vector length does not match the instance");
    if (width_ >= n_) return whole_->contains(v);
    for (std::size_t k = 0; k < index_sets_.size(); ++k)
      if (!closures_[k].contains(project(v, index_sets_[k]))) return false;
    return true;
  }

  int width() const { return width_; }

 private:
  int n_;
  int width_;
  bool empty_ = false;
  std::optional<Family> whole_;
  std::vector<IndexSet> index_sets_;
  std::vector<Family> closures_;
};

// A finite commutative group presented by its multiplication table, decomposed
// as a direct product of cyclic groups of prime-power order.  iso maps each
// element to its coordinate tuple; component j is Z_{moduli[j]} generated by
// generators[j], with moduli[j] = primes[j]^exponents[j].
struct GroupStructure {
  Operation op;
  int identity = 0;
  std::vector<int> inverse;
  std::vector<int> moduli;
  std::vector<int> primes;
  std::vector<int> exponents;
  std::vector<int> generators;
  std::vector<std::vector<int>> iso;
};

namespace detail {

// Non-increasing integer partitions of a, largest first part first:
// 3 -> [3], [2,1], [1,1,1].
inline void partitions_rec(int a, int max_part, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (a == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(a, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(a - part, part, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions_of(int a) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(a, a, cur, out);
  return out;
}

inline std::vector<std::pair<int, int>> prime_factorization(int d) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= d; ++p) {
    if (d % p) continue;
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

inline long long int_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace detail

// Verifies the abelian-group axioms for a binary operation table and computes
// a cyclic decomposition.  Throws SpecError naming the first violated axiom.
inline GroupStructure build_group_structure(const Operation& f) {
  if (f.arity() != 2)
    throw SpecError("group check requires a binary operation, got arity " +
                    std::to_string(f.arity()));
  const int d = f.domain();
  auto mul = [&](int a, int b) { return f.eval_index(a * d + b); };

  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw SpecError("operation is not associative: ((" + std::to_string(a) + "*" +
                          std::to_string(b) + ")*" + std::to_string(c) + ") != (" +
                          std::to_string(a) + "*(" + std::to_string(b) + "*" +
                          std::to_string(c) + "))");
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      if (mul(a, b) != mul(b, a))
        throw SpecError("operation is not commutative: " + std::to_string(a) + "*" +
                        std::to_string(b) + " != " + std::to_string(b) + "*" +
                        std::to_string(a));

  GroupStructure g;
  g.op = f;
  g.identity = -1;
  for (int cand = 0; cand < d && g.identity < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < d && ok; ++x) ok = (mul(cand, x) == x);
    if (ok) g.identity = cand;
  }
  if (g.identity < 0) throw SpecError("operation has no identity element");

  g.inverse.assign(static_cast<std::size_t>(d), -1);
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y)
      if (mul(x, y) == g.identity) {
        g.inverse[static_cast<std::size_t>(x)] = y;
        break;
      }
    if (g.inverse[static_cast<std::size_t>(x)] < 0)
      throw SpecError("element " + std::to_string(x) + " has no inverse");
  }

  std::vector<int> order(static_cast<std::size_t>(d), 0);
  for (int x = 0; x < d; ++x) {
    int p = x, o = 1;
    while (p != g.identity) {
      p = mul(p, x);
      ++o;
    }
    order[static_cast<std::size_t>(x)] = o;
  }

  // Candidate component shapes: for each prime, a partition of its exponent
  // in d; fewer components are tried first, so a cyclic decomposition is
  // preferred when one exists.
  const auto factors = detail::prime_factorization(d);
  std::vector<std::vector<std::vector<int>>> per_prime;
  per_prime.reserve(factors.size());
  for (const auto& [p, e] : factors) per_prime.push_back(detail::partitions_of(e));

  std::vector<std::size_t> choice(factors.size(), 0);
  while (true) {
    std::vector<int> moduli, primes, exponents;
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      for (int e : per_prime[fi][choice[fi]]) {
        moduli.push_back(static_cast<int>(detail::int_pow(factors[fi].first, e)));
        primes.push_back(factors[fi].first);
        exponents.push_back(e);
      }
    }
    const int t = static_cast<int>(moduli.size());

    // Search generator tuples in ascending element order; the first tuple
    // whose coordinate map is a bijection wins.
    std::vector<int> gens(static_cast<std::size_t>(t), 0);
    std::vector<std::vector<int>> multiples(static_cast<std::size_t>(t));
    std::vector<int> iso_of(static_cast<std::size_t>(d), -1);
    auto try_fill = [&]() -> bool {
      for (int j = 0; j < t; ++j) {
        auto& row = multiples[static_cast<std::size_t>(j)];
        row.assign(static_cast<std::size_t>(moduli[static_cast<std::size_t>(j)]), g.identity);
        for (int c = 1; c < moduli[static_cast<std::size_t>(j)]; ++c)
          row[static_cast<std::size_t>(c)] =
              mul(row[static_cast<std::size_t>(c - 1)], gens[static_cast<std::size_t>(j)]);
      }
      std::fill(iso_of.begin(), iso_of.end(), -1);
      std::vector<int> coord(static_cast<std::size_t>(t), 0);
      while (true) {
        int elem = g.identity;
        for (int j = 0; j < t; ++j)
          elem = mul(elem, multiples[static_cast<std::size_t>(j)]
                              [static_cast<std::size_t>(coord[static_cast<std::size_t>(j)])]);
        if (iso_of[static_cast<std::size_t>(elem)] >= 0) return false;
        int code = 0;
        for (int j = 0; j < t; ++j)
          code = code * moduli[static_cast<std::size_t>(j)] + coord[static_cast<std::size_t>(j)];
        iso_of[static_cast<std::size_t>(elem)] = code;
        int j = t - 1;
        while (j >= 0 &&
               coord[static_cast<std::size_t>(j)] == moduli[static_cast<std::size_t>(j)] - 1) {
          coord[static_cast<std::size_t>(j)] = 0;
          --j;
        }
        if (j < 0) break;
        ++coord[static_cast<std::size_t>(j)];
      }
      return true;
    };
    auto dfs = [&](auto&& self, int j) -> bool {
      if (j == t) return try_fill();
      for (int x = 0; x < d; ++x) {
        if (order[static_cast<std::size_t>(x)] != moduli[static_cast<std::size_t>(j)]) continue;
        gens[static_cast<std::size_t>(j)] = x;
        if (self(self, j + 1)) return true;
      }
      return false;
    };
    if (dfs(dfs, 0)) {
      g.moduli = moduli;
      g.primes = primes;
      g.exponents = exponents;
      g.generators = gens;
      g.iso.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(t), 0));
      for (int x = 0; x < d; ++x) {
        int code = iso_of[static_cast<std::size_t>(x)];
        // try_fill left iso_of for the *winning* tuple; recompute coordinates
        // from the mixed-radix code.
        for (int j = t - 1; j >= 0; --j) {
          g.iso[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)] =
              code % moduli[static_cast<std::size_t>(j)];
          code /= moduli[static_cast<std::size_t>(j)];
        }
      }
      return g;
    }

    std::size_t fi = factors.size();
    while (fi > 0) {
      --fi;
      if (++choice[fi] < per_prime[fi].size()) break;
      choice[fi] = 0;
      if (fi == 0) {
        // Unreachable for a verified abelian group (structure theorem).
        throw SpecError("internal error: no cyclic decomposition found");
      }
    }
  }
}

namespace detail {

inline long long mod_inverse(long long a, long long m) {
  long long old_r = a % m, r = m;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return ((old_s % m) + m) % m;
}

// Decides solvability of A*y = b over Z_{p^E}.  Elimination prefers pivots
// that are units mod p; when every remaining entry is divisible by p the
// whole system is divided by p (descending to exponent E-1), which fails
// exactly when some right-hand side is not divisible by p.
inline bool solvable_mod_prime_power(std::vector<std::vector<long long>> rows,
                                     std::vector<long long> rhs, long long p, int E) {
  while (true) {
    if (E == 0) return true;
    long long M = 1;
    for (int i = 0; i < E; ++i) M *= p;

    std::size_t r = 0;
    while (r < rows.size()) {
      bool all_zero = true;
      for (auto& x : rows[r]) {
        x = ((x % M) + M) % M;
        if (x != 0) all_zero = false;
      }
      rhs[r] = ((rhs[r] % M) + M) % M;
      if (all_zero) {
        if (rhs[r] != 0) return false;
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
        rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(r));
      } else {
        ++r;
      }
    }
    if (rows.empty()) return true;

    std::size_t pr = rows.size();
    std::size_t pc = 0;
    for (std::size_t i = 0; i < rows.size() && pr == rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        if (rows[i][j] % p != 0) {
          pr = i;
          pc = j;
          break;
        }

    if (pr < rows.size()) {
      const long long inv = mod_inverse(rows[pr][pc], M);
      for (auto& x : rows[pr]) x = (x * inv) % M;
      rhs[pr] = (rhs[pr] * inv) % M;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pr) continue;
        const long long factor = rows[i][pc];
        if (factor == 0) continue;
        for (std::size_t j = 0; j < rows[i].size(); ++j)
          rows[i][j] = ((rows[i][j] - factor * rows[pr][j]) % M + M) % M;
        rhs[i] = ((rhs[i] - factor * rhs[pr]) % M + M) % M;
      }
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pr));
      rhs.erase(rhs.begin() + static_cast<std::ptrdiff_t>(pr));
    } else {
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rhs[i] % p != 0) return false;
      for (auto& row : rows)
        for (auto& x : row) x /= p;
      for (auto& x : rhs) x /= p;
      --E;
    }
  }
}

}  // namespace detail

// Membership in the closure of a nonempty family under a commutative group
// operation: the closure is the generated subgroup, so v belongs iff for
// every prime p the induced linear system over Z_{p^Emax} is solvable, where
// components of smaller exponent are embedded by scaling.
inline bool decide_group(const GroupStructure& g, const Family& s, const Vector& v) {
  if (s.empty_set()) return false;
  if (v.size() != s.n() || v.domain() != s.domain())
    throw SpecError("vector shape does not match the instance");
  const int n = s.n();
  const std::size_t m = s.size();
  const int t = static_cast<int>(g.moduli.size());

  std::vector<int> distinct_primes;
  for (int p : g.primes)
    if (std::find(distinct_primes.begin(), distinct_primes.end(), p) == distinct_primes.end())
      distinct_primes.push_back(p);

  for (int p : distinct_primes) {
    int emax = 0;
    for (int j = 0; j < t; ++j)
      if (g.primes[static_cast<std::size_t>(j)] == p)
        emax = std::max(emax, g.exponents[static_cast<std::size_t>(j)]);
    const long long M = detail::int_pow(p, emax);

    std::vector<std::vector<long long>> rows;
    std::vector<long long> rhs;
    for (int c = 0; c < n; ++c) {
      for (int j = 0; j < t; ++j) {
        if (g.primes[static_cast<std::size_t>(j)] != p) continue;
        const long long scale =
            detail::int_pow(p, emax - g.exponents[static_cast<std::size_t>(j)]);
        std::vector<long long> row(m);
        for (std::size_t i = 0; i < m; ++i)
          row[i] = (g.iso[static_cast<std::size_t>(s.at(i).get(c))][static_cast<std::size_t>(j)] *
                    scale) %
                   M;
        rows.push_back(std::move(row));
        rhs.push_back(
            (g.iso[static_cast<std::size_t>(v.get(c))][static_cast<std::size_t>(j)] * scale) % M);
      }
    }
    if (!detail::solvable_mod_prime_power(std::move(rows), std::move(rhs), p, emax)) return false;
  }
  return true;
}

inline void require_associative(const Operation& f) {
  if (f.arity() != 2) throw SpecError("expected a binary operation, got arity " +
                                      std::to_string(f.arity()));
  const int d = f.domain();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (f.eval_index(f.eval_index(a * d + b) * d + c) !=
            f.eval_index(a * d + f.eval_index(b * d + c)))
          throw SpecError("operation is not associative");
}

// Membership under a single associative operation by explicit saturation;
// only suitable when the closure fits within the given budget.
inline bool decide_associative_small(const Operation& f, const Family& s, const Vector& v,
                                     std::size_t budget = kDefaultBudget) {
  require_associative(f);
  if (s.empty_set()) return false;
  return saturate({f}, s, budget).contains(v);
}

// Enumerates the closure under one associative binary operation by DFS over
// right-multiplications by family members.  Associativity guarantees every
// product of members equals a left-nested product, so this reaches the whole
// closure; the visited set makes the delay polynomial in n, m, and the number
// of solutions produced so far, at the price of storing all solutions.
class AssociativeDfsEnumerator : public Enumerator {
 public:
  AssociativeDfsEnumerator(Operation f, const Family& s) : f_(std::move(f)), family_(s) {
    require_associative(f_);
    if (!family_.empty_set() && f_.domain() != family_.domain())
      throw SpecError("operation domain does not match the family");
  }

  std::optional<Vector> next() override {
    while (true) {
      if (!stack_.empty()) {
        Frame& fr = stack_.back();
        if (fr.next_member == family_.size()) {
          stack_.pop_back();
          continue;
        }
        Vector u = apply_op(f_, {fr.v, family_.at(fr.next_member++)});
        ++work_;
        if (visited_.insert(u).second) {
          stack_.push_back(Frame{u, 0});
          return u;
        }
        continue;
      }
      while (root_ < family_.size()) {
        const Vector& r = family_.at(root_++);
        if (visited_.insert(r).second) {
          stack_.push_back(Frame{r, 0});
          return r;
        }
      }
      return std::nullopt;
    }
  }

  std::uint64_t work() const override { return work_; }

 private:
  struct Frame {
    Vector v;
    std::size_t next_member;
  };
  Operation f_;
  Family family_;
  std::set<Vector> visited_;
  std::vector<Frame> stack_;
  std::size_t root_ = 0;
  std::uint64_t work_ = 0;
};

}  // namespace clenum
