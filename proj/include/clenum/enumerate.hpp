// Polynomial-delay enumerators for the closure Cl_F(S).  Every enumerator
// implements the pull-based Enumerator interface, emits each closure element
// exactly once, and works on the preprocessed (internal) family; when the
// dual reduction is active, make_enumerator wraps the stream so callers
// always see the closure of the original instance.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "clenum/clones.hpp"
#include "clenum/decide.hpp"
#include "clenum/errors.hpp"
#include "clenum/family.hpp"
#include "clenum/multidomain.hpp"
#include "clenum/oracle.hpp"
#include "clenum/stream.hpp"
#include "clenum/vector.hpp"

namespace clenum {

// --- family members verbatim (no operations) ---------------------------------

class ListEnumerator : public Enumerator {
 public:
  explicit ListEnumerator(const Family& s) : fam_(s) {}

  std::optional<Vector> next() override {
    if (next_ == fam_.size()) return std::nullopt;
    work_ += fam_.at(next_).word_count() + 1;
    return fam_.at(next_++);
  }

  std::uint64_t work() const override { return work_; }
  std::uint64_t branch_work() const override { return fam_.empty_set() ? 0 : fam_.at(0).word_count() + 1; }

 private:
  Family fam_;
  std::size_t next_ = 0;
  std::uint64_t work_ = 0;
};

// --- generic backtrack search -------------------------------------------------

// Flashlight search over prefixes: coordinate l is assigned a value only if
// the extended prefix lies in the closure of the projected family, which by
// the prefix equivalence guarantees a completion.  Consequently every
// expanded internal node has at least one emitted descendant, so the number
// of internal nodes is at most n * #solutions + 1.
//
// The search always runs in the internal (preprocessed) problem space: the
// per-level deciders never apply the output complement, and the child order
// flips to descending when the dual wrapper will complement emissions so that
// the user-visible stream stays in ascending lexicographic order.
class BacktrackEnumerator : public Enumerator {
 public:
  explicit BacktrackEnumerator(const ResolvedProblem& rp, bool descending_children = false)
      : n_(rp.family.n()), d_(rp.family.domain()), desc_(descending_children) {
    if (rp.family.empty_set()) {
      done_ = true;
      return;
    }
    p_ = Vector(n_, d_);
    levels_.reserve(static_cast<std::size_t>(n_));
    deciders_.reserve(static_cast<std::size_t>(n_));
    IndexSet prefix;
    for (int l = 1; l <= n_; ++l) {
      prefix.push_back(l - 1);
      ResolvedProblem sub;
      sub.algo = rp.algo;
      sub.family = project(rp.family, prefix);
      sub.complement_outputs = false;
      sub.nu_width = rp.nu_width;
      sub.generators = rp.generators;
      sub.group = rp.group;
      sub.assoc_op = rp.assoc_op;
      sub.budget = rp.budget;
      levels_.push_back(std::move(sub));
    }
    for (const ResolvedProblem& sub : levels_)
      deciders_.push_back(std::make_unique<MembershipDecider>(sub));
  }

  std::optional<Vector> next() override {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      stack_.push_back(0);
      nodes_visited_ = 1;
    }
    while (!stack_.empty()) {
      const int depth = static_cast<int>(stack_.size()) - 1;
      int& tried = stack_.back();
      if (tried == d_) {
        stack_.pop_back();
        continue;
      }
      const int value = desc_ ? d_ - 1 - tried : tried;
      ++tried;
      p_.set(depth, value);
      ++work_;
      Vector q(depth + 1, d_);
      for (int i = 0; i <= depth; ++i) q.set(i, p_.get(i));
      if (!(*deciders_[static_cast<std::size_t>(depth)])(std::move(q))) continue;
      if (depth + 1 == n_) return p_;
      stack_.push_back(0);
      ++nodes_visited_;
    }
    done_ = true;
    return std::nullopt;
  }

  std::uint64_t work() const override { return work_; }
  std::uint64_t nodes_visited() const override { return nodes_visited_; }

 private:
  int n_ = 0;
  int d_ = 2;
  bool desc_ = false;
  bool started_ = false;
  bool done_ = false;
  Vector p_;
  std::vector<int> stack_;  // per depth: number of child values already tried
  std::vector<ResolvedProblem> levels_;
  std::vector<std::unique_ptr<MembershipDecider>> deciders_;
  std::uint64_t work_ = 0;
  std::uint64_t nodes_visited_ = 0;
};

// --- conjunction: compatibility lists ----------------------------------------

// Maintains COMP (members dominating the assigned 1s) and COUNT (per
// coordinate, how many compatible members are 0 there).  A prefix is
// extendable iff COMP is nonempty and every assigned-0 coordinate has a
// compatible 0-witness.  Trying 0 at the next coordinate is an O(1) check of
// COUNT; trying 1 removes the compatible members that are 0 there, journaling
// each mutation so the edge can be rolled back when its subtree is done.
// branch_work() reports the journal entries retained on the current
// root-to-leaf path plus the per-node constant work, which is bounded by
// m + m*n + 2n <= 2*m*n + 8*n.
class E2FastEnumerator : public Enumerator {
 public:
  explicit E2FastEnumerator(const Family& s) : fam_(s) {
    if (fam_.domain() != 2) throw SpecError("conjunction enumeration requires the boolean domain");
    if (fam_.empty_set()) {
      done_ = true;
      return;
    }
    n_ = fam_.n();
    m_ = static_cast<int>(fam_.size());
    comp_.assign(static_cast<std::size_t>(m_), 1);
    comp_count_ = m_;
    count_.assign(static_cast<std::size_t>(n_), 0);
    for (const Vector& w : fam_)
      for (int i = 0; i < n_; ++i)
        if (w.get(i) == 0) ++count_[static_cast<std::size_t>(i)];
    p_ = Vector(n_, 2);
  }

  std::optional<Vector> next() override {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      stack_.push_back({});
      ++nodes_visited_;
    }
    while (!stack_.empty()) {
      Node& node = stack_.back();
      const int depth = static_cast<int>(stack_.size()) - 1;
      if (node.tried == 0) {
        node.tried = 1;
        ++work_;
        if (count_[static_cast<std::size_t>(depth)] > 0) {
          p_.set(depth, 0);
          if (depth + 1 == n_) return p_;
          stack_.push_back({});
          ++nodes_visited_;
        }
        continue;
      }
      if (node.tried == 1) {
        node.tried = 2;
        if (assign_one(depth, node)) {
          p_.set(depth, 1);
          if (depth + 1 == n_) return p_;
          stack_.push_back({});
          ++nodes_visited_;
        }
        continue;
      }
      if (node.applied) {
        rollback(node);
        branch_journal_ -= node.journal.size();
      }
      stack_.pop_back();
    }
    done_ = true;
    return std::nullopt;
  }

  std::uint64_t work() const override { return work_; }
  std::uint64_t branch_work() const override {
    return branch_journal_ + 2 * static_cast<std::uint64_t>(n_);
  }
  std::uint64_t nodes_visited() const override { return nodes_visited_; }

 private:
  struct Entry {
    enum Kind { kMember, kCount } kind;
    int index;
  };
  struct Node {
    int tried = 0;  // 0: value 0 next, 1: value 1 next, 2: exhausted
    bool applied = false;
    std::vector<Entry> journal;
  };

  // Remove every compatible member that is 0 at `depth`.  Fails when the
  // compatible set empties or an assigned-0 coordinate loses its last
  // 0-witness; on failure all applied mutations are rolled back here.
  bool assign_one(int depth, Node& node) {
    bool ok = true;
    for (int w = 0; w < m_ && ok; ++w) {
      if (!comp_[static_cast<std::size_t>(w)]) continue;
      const Vector& member = fam_.at(static_cast<std::size_t>(w));
      if (member.get(depth) != 0) continue;
      comp_[static_cast<std::size_t>(w)] = 0;
      --comp_count_;
      node.journal.push_back({Entry::kMember, w});
      ++work_;
      if (comp_count_ == 0) {
        ok = false;
        break;
      }
      for (int j = 0; j < n_; ++j) {
        if (member.get(j) != 0) continue;
        --count_[static_cast<std::size_t>(j)];
        node.journal.push_back({Entry::kCount, j});
        ++work_;
        if (count_[static_cast<std::size_t>(j)] == 0 && j < depth && p_.get(j) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      rollback(node);
      node.journal.clear();
      return false;
    }
    node.applied = true;
    branch_journal_ += node.journal.size();
    return true;
  }

  void rollback(Node& node) {
    for (auto it = node.journal.rbegin(); it != node.journal.rend(); ++it) {
      if (it->kind == Entry::kMember) {
        comp_[static_cast<std::size_t>(it->index)] = 1;
        ++comp_count_;
      } else {
        ++count_[static_cast<std::size_t>(it->index)];
      }
      ++work_;
    }
  }

  Family fam_;
  int n_ = 0;
  int m_ = 0;
  bool started_ = false;
  bool done_ = false;
  Vector p_;
  std::vector<char> comp_;
  int comp_count_ = 0;
  std::vector<int> count_;
  std::vector<Node> stack_;
  std::uint64_t work_ = 0;
  std::uint64_t branch_journal_ = 0;
  std::uint64_t nodes_visited_ = 0;
};

// --- Gray-code walks over disjoint or independent toggles ---------------------

// Emits { start XOR (xor of a subset of basis) } for all 2^|basis| subsets by
// a reflected Gray walk, so consecutive emissions differ by one basis XOR.
// Serves the linear span (start 0, echelon basis), its odd-support coset
// (start = a member, basis of pairwise differences), and the column-class
// closures (start = fixed columns, basis = class masks).  Per emission this
// costs one XOR plus the output copy: 2 * ceil(n/64) word operations plus a
// constant.
class GraySubsetEnumerator : public Enumerator {
 public:
  GraySubsetEnumerator(Vector start, std::vector<Vector> basis)
      : cur_(std::move(start)), basis_(std::move(basis)) {
    if (static_cast<int>(basis_.size()) > 126)
      throw SpecError("closure rank exceeds 126; 2^rank elements cannot be enumerated");
    total_ = static_cast<unsigned __int128>(1) << basis_.size();
  }

  std::optional<Vector> next() override {
    if (emitted_ == total_) return std::nullopt;
    if (emitted_ == 0) {
      ++emitted_;
      branch_ = cur_.word_count() + 4;
      work_ += branch_;
      return cur_;
    }
    const auto low = static_cast<std::uint64_t>(emitted_);
    const int bit = low != 0
                        ? std::countr_zero(low)
                        : 64 + std::countr_zero(static_cast<std::uint64_t>(emitted_ >> 64));
    cur_.xor_with(basis_[static_cast<std::size_t>(bit)]);
    ++emitted_;
    branch_ = 2 * cur_.word_count() + 4;
    work_ += branch_;
    return cur_;
  }

  std::uint64_t work() const override { return work_; }
  std::uint64_t branch_work() const override { return branch_; }

 private:
  Vector cur_;
  std::vector<Vector> basis_;
  unsigned __int128 total_ = 0;
  unsigned __int128 emitted_ = 0;
  std::uint64_t work_ = 0;
  std::uint64_t branch_ = 0;
};

// --- lattice: hill climbing over atom joins -----------------------------------

// Closure elements are exactly v0 = meet(S) joined with subsets of the atoms
// x^i = meet{w in S : w_i = 1}.  The walk keeps, per tree node, the list L of
// topologically ordered atoms still addable; joining atom i keeps only the
// later atoms j whose representative coordinate is still 0 (equivalently,
// atoms not absorbed by the new solution).  Distinct atom values are kept
// once (duplicates would break the disjointness of the emitted subtrees), and
// the topological order puts strict supersets first with ties broken by
// ascending representative index.  Per emission: stack pops, at most |L|
// coordinate probes, and one join -- at most 3n + O(1) operations.
class M2HillClimbEnumerator : public Enumerator {
 public:
  explicit M2HillClimbEnumerator(const Family& s) {
    if (s.domain() != 2) throw SpecError("lattice enumeration requires the boolean domain");
    if (s.empty_set()) {
      done_ = true;
      return;
    }
    n_ = s.n();
    v0_ = s.at(0);
    for (std::size_t i = 1; i < s.size(); ++i) v0_.meet_with(s.at(i));

    for (int i = 0; i < n_; ++i) {
      if (v0_.get(i) != 0) continue;
      bool any = false;
      Vector atom(n_, 2);
      for (const Vector& w : s) {
        if (w.get(i) != 1) continue;
        if (!any) {
          atom = w;
          any = true;
        } else {
          atom.meet_with(w);
        }
      }
      if (!any) continue;
      bool fresh = true;
      for (const Atom& a : atoms_)
        if (a.value == atom) {
          fresh = false;
          break;
        }
      if (fresh) atoms_.push_back({std::move(atom), i});
    }

    // Kahn's algorithm for "strict supersets first", ties by representative.
    const std::size_t a = atoms_.size();
    std::vector<int> supersets(a, 0);
    std::vector<char> taken(a, 0);
    for (std::size_t x = 0; x < a; ++x)
      for (std::size_t y = 0; y < a; ++y)
        if (x != y && atoms_[x].value.ones_subset_of(atoms_[y].value)) ++supersets[x];
    std::vector<int> order;
    order.reserve(a);
    for (std::size_t step = 0; step < a; ++step) {
      int pick = -1;
      for (std::size_t x = 0; x < a; ++x)
        if (!taken[x] && supersets[x] == 0 &&
            (pick < 0 || atoms_[x].rep < atoms_[static_cast<std::size_t>(pick)].rep))
          pick = static_cast<int>(x);
      taken[static_cast<std::size_t>(pick)] = 1;
      order.push_back(pick);
      for (std::size_t y = 0; y < a; ++y)
        if (!taken[y] && atoms_[y].value.ones_subset_of(atoms_[static_cast<std::size_t>(pick)].value))
          --supersets[y];
    }

    stack_.push_back({v0_, std::move(order), 0});
  }

  std::optional<Vector> next() override {
    if (done_) return std::nullopt;
    std::uint64_t ops = 0;
    if (!root_emitted_) {
      root_emitted_ = true;
      branch_ = v0_.word_count() + 2;
      work_ += branch_;
      return v0_;
    }
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (f.cursor == f.list.size()) {
        ++ops;
        stack_.pop_back();
        continue;
      }
      const int id = f.list[f.cursor++];
      Vector nv = f.v;
      nv.join_with(atoms_[static_cast<std::size_t>(id)].value);
      ops += nv.word_count();
      std::vector<int> nl;
      nl.reserve(f.list.size() - f.cursor);
      for (std::size_t k = f.cursor; k < f.list.size(); ++k) {
        ++ops;
        const int j = f.list[k];
        if (nv.get(atoms_[static_cast<std::size_t>(j)].rep) == 0) nl.push_back(j);
      }
      stack_.push_back({std::move(nv), std::move(nl), 0});
      branch_ = ops + stack_.back().v.word_count() + 2;
      work_ += branch_;
      return stack_.back().v;
    }
    done_ = true;
    return std::nullopt;
  }

  std::uint64_t work() const override { return work_; }
  std::uint64_t branch_work() const override { return branch_; }

 private:
  struct Atom {
    Vector value;
    int rep;
  };
  struct Frame {
    Vector v;
    std::vector<int> list;
    std::size_t cursor;
  };

  int n_ = 0;
  bool done_ = false;
  bool root_emitted_ = false;
  Vector v0_;
  std::vector<Atom> atoms_;
  std::vector<Frame> stack_;
  std::uint64_t work_ = 0;
  std::uint64_t branch_ = 0;
};

// --- majority: incremental pair-consistency -----------------------------------

// A prefix is extendable iff every assigned coordinate pair shows a realized
// pattern, so the tree has no dead branches.  When coordinate l is entered,
// one sweep over i < l fetches each pair byte once and intersects the viable
// values for both candidate children simultaneously; the per-branch cost is
// therefore sum over l of l <= n(n+1)/2 pattern probes.
class D2IncrementalEnumerator : public Enumerator {
 public:
  explicit D2IncrementalEnumerator(const Family& s) {
    if (s.domain() != 2) throw SpecError("majority enumeration requires the boolean domain");
    if (s.empty_set()) {
      done_ = true;
      return;
    }
    n_ = s.n();
    pairs_ = PairTable::build(s);
    p_ = Vector(n_, 2);
    stack_.push_back({pairs_.col[0], 0, 1});
    branch_cost_ = 1;
    nodes_visited_ = 1;
  }

  std::optional<Vector> next() override {
    if (done_) return std::nullopt;
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      const int depth = static_cast<int>(stack_.size()) - 1;
      while (f.tried < 2 && !((f.viable >> f.tried) & 1)) ++f.tried;
      if (f.tried == 2) {
        branch_cost_ -= f.cost;
        stack_.pop_back();
        continue;
      }
      p_.set(depth, f.tried++);
      if (depth + 1 == n_) return p_;
      std::uint8_t mask = 3;
      for (int i = 0; i <= depth; ++i) {
        mask &= pairs_.viable_second(i, depth + 1, p_.get(i));
        ++work_;
      }
      const std::uint64_t cost = static_cast<std::uint64_t>(depth) + 1;
      stack_.push_back({mask, 0, cost});
      branch_cost_ += cost;
      ++nodes_visited_;
    }
    done_ = true;
    return std::nullopt;
  }

  std::uint64_t work() const override { return work_; }
  std::uint64_t branch_work() const override {
    return branch_cost_ + 2 * static_cast<std::uint64_t>(n_);
  }
  std::uint64_t nodes_visited() const override { return nodes_visited_; }

 private:
  struct Frame {
    std::uint8_t viable;
    int tried;
    std::uint64_t cost;
  };

  int n_ = 0;
  bool done_ = false;
  Vector p_;
  PairTable pairs_;
  std::vector<Frame> stack_;
  std::uint64_t work_ = 0;
  std::uint64_t branch_cost_ = 0;
  std::uint64_t nodes_visited_ = 0;
};

// --- near-unanimity: projection closures --------------------------------------

// By the Baker-Pixley property for a near-unanimity operation of arity w+1,
// membership reduces to all width-w projections.  The search keeps saturated
// closures of the prefix families up to length w and of every width-w
// projection; at depth l > w a candidate value is viable iff for every
// J subset of the assigned coordinates with |J| = w-1, the projection to
// J + {l} lies in the corresponding closure.  That makes the tree free of
// dead branches with O(n^(w-1)) closure probes per node.  When w >= n the
// whole closure is saturated once and emitted in lexicographic order.
class NUIncrementalEnumerator : public Enumerator {
 public:
  NUIncrementalEnumerator(std::vector<Operation> generators, int width, const Family& s,
                          std::size_t budget = kDefaultBudget)
      : n_(s.n()), d_(s.domain()), w_(width) {
    if (w_ < 1) throw SpecError("projection width must be at least 1");
    if (s.empty_set()) {
      done_ = true;
      return;
    }
    if (w_ >= n_) {
      Family cl = saturate(generators, s, budget);
      sorted_ = cl.members();
      std::sort(sorted_.begin(), sorted_.end());
      return;
    }
    IndexSet prefix;
    for (int l = 1; l <= w_; ++l) {
      prefix.push_back(l - 1);
      prefix_closures_.push_back(saturate(generators, project(s, prefix), budget));
    }
    for (const IndexSet& idx : all_combinations(n_, w_))
      proj_closures_.emplace(idx, saturate(generators, project(s, idx), budget));
    p_ = Vector(n_, d_);
    stack_.push_back(0);
    nodes_visited_ = 1;
  }

  std::optional<Vector> next() override {
    if (done_) return std::nullopt;
    if (!sorted_.empty() || w_ >= n_) {
      if (sorted_cursor_ == sorted_.size()) {
        done_ = true;
        return std::nullopt;
      }
      return sorted_[sorted_cursor_++];
    }
    while (!stack_.empty()) {
      const int depth = static_cast<int>(stack_.size()) - 1;
      int& tried = stack_.back();
      if (tried == d_) {
        stack_.pop_back();
        continue;
      }
      const int value = tried++;
      p_.set(depth, value);
      if (!viable(depth)) continue;
      if (depth + 1 == n_) return p_;
      stack_.push_back(0);
      ++nodes_visited_;
    }
    done_ = true;
    return std::nullopt;
  }

  std::uint64_t work() const override { return work_; }
  std::uint64_t nodes_visited() const override { return nodes_visited_; }

 private:
  bool viable(int depth) {
    const int len = depth + 1;
    if (len <= w_) {
      Vector q(len, d_);
      for (int i = 0; i < len; ++i) q.set(i, p_.get(i));
      ++work_;
      return prefix_closures_[static_cast<std::size_t>(len - 1)].contains(q);
    }
    for (const IndexSet& j : combinations_for(depth)) {
      Vector q(w_, d_);
      for (int t = 0; t < w_ - 1; ++t) q.set(t, p_.get(j[static_cast<std::size_t>(t)]));
      q.set(w_ - 1, p_.get(depth));
      IndexSet idx = j;
      idx.push_back(depth);
      ++work_;
      if (!proj_closures_.at(idx).contains(q)) return false;
    }
    return true;
  }

  const std::vector<IndexSet>& combinations_for(int depth) {
    auto [it, fresh] = combos_.try_emplace(depth);
    if (fresh) it->second = all_combinations(depth, w_ - 1);
    return it->second;
  }

  int n_ = 0;
  int d_ = 2;
  int w_ = 0;
  bool done_ = false;
  Vector p_;
  std::vector<Family> prefix_closures_;
  std::map<IndexSet, Family> proj_closures_;
  std::map<int, std::vector<IndexSet>> combos_;
  std::vector<int> stack_;
  std::vector<Vector> sorted_;
  std::size_t sorted_cursor_ = 0;
  std::uint64_t work_ = 0;
  std::uint64_t nodes_visited_ = 0;
};

// --- incremental saturation fallback ------------------------------------------

class SaturationEnumerator : public Enumerator {
 public:
  SaturationEnumerator(std::vector<Operation> generators, const Family& s,
                       std::size_t budget = kDefaultBudget)
      : stream_(std::move(generators), s, budget) {}

  std::optional<Vector> next() override { return stream_.next(); }

 private:
  SaturationStream stream_;
};

// --- construction ---------------------------------------------------------------

enum class EnumMode { kFast, kGeneric };

namespace detail {

inline std::unique_ptr<Enumerator> make_fast_enumerator(const ResolvedProblem& rp) {
  const Family& fam = rp.family;
  switch (rp.algo) {
    case Algo::kListOnly:
      return std::make_unique<ListEnumerator>(fam);
    case Algo::kMeet:
      return std::make_unique<E2FastEnumerator>(fam);
    case Algo::kSpan: {
      if (fam.empty_set()) return std::make_unique<ListEnumerator>(fam);
      Gf2Eliminator elim(fam);
      return std::make_unique<GraySubsetEnumerator>(Vector(fam.n(), 2), elim.basis());
    }
    case Algo::kAffineSpan: {
      if (fam.empty_set()) return std::make_unique<ListEnumerator>(fam);
      Family diffs(fam.n(), 2);
      for (const Vector& w : fam) {
        Vector x = w;
        x.xor_with(fam.at(0));
        diffs.insert(x);
      }
      Gf2Eliminator elim(diffs);
      return std::make_unique<GraySubsetEnumerator>(fam.at(0), elim.basis());
    }
    case Algo::kLattice:
      return std::make_unique<M2HillClimbEnumerator>(fam);
    case Algo::kLatticeNeg:
    case Algo::kDiscriminator:
    case Algo::kOrXorClasses: {
      if (fam.empty_set()) return std::make_unique<ListEnumerator>(fam);
      const FixMode mode = rp.algo == Algo::kLatticeNeg    ? FixMode::kNone
                           : rp.algo == Algo::kDiscriminator ? FixMode::kConstants
                                                             : FixMode::kZeros;
      const ColumnClasses classes = ColumnClasses::build(fam, mode);
      Vector base(fam.n(), 2);
      for (int i = 0; i < fam.n(); ++i)
        if (classes.fixed_value[static_cast<std::size_t>(i)] == 1) base.set(i, 1);
      return std::make_unique<GraySubsetEnumerator>(std::move(base), classes.class_mask);
    }
    case Algo::kMajority:
      return std::make_unique<D2IncrementalEnumerator>(fam);
    case Algo::kNuBoolean:
    case Algo::kNuGeneral:
      return std::make_unique<NUIncrementalEnumerator>(rp.generators, rp.nu_width, fam, rp.budget);
    case Algo::kAndOr:
    case Algo::kAndImp:
    case Algo::kGroup:
      // Their deciders are cheap and exact, so the backtrack search already
      // achieves polynomial delay; no specialized walk exists.
      return std::make_unique<BacktrackEnumerator>(rp, rp.complement_outputs);
    case Algo::kAssociative:
      return std::make_unique<AssociativeDfsEnumerator>(*rp.assoc_op, fam);
    case Algo::kSaturation:
      return std::make_unique<SaturationEnumerator>(rp.generators, fam, rp.budget);
  }
  throw SpecError("unknown algorithm tag");
}

}  // namespace detail

// Builds the enumerator for a resolved instance.  kFast picks the
// algorithm-specific walk; kGeneric always uses the backtrack search over the
// membership decider.  Both emit the closure of the ORIGINAL instance: when
// the dual reduction complemented the family, the stream is wrapped to
// complement every emission (and the underlying walk flips its child order so
// lexicographic output order is preserved where the walk is lexicographic).
inline std::unique_ptr<Enumerator> make_enumerator(const ResolvedProblem& rp,
                                                   EnumMode mode = EnumMode::kFast) {
  std::unique_ptr<Enumerator> inner =
      mode == EnumMode::kGeneric
          ? std::make_unique<BacktrackEnumerator>(rp, rp.complement_outputs)
          : detail::make_fast_enumerator(rp);
  if (rp.complement_outputs) return std::make_unique<ComplementStream>(std::move(inner));
  return inner;
}

}  // namespace clenum
