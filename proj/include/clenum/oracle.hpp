// Brute-force closure computation by saturation: repeatedly apply every
// operation coefficient-wise to tuples of already-discovered vectors until a
// fixpoint.  This is the ground truth the fast deciders and enumerators are
// verified against; it is deliberately simple and memory-hungry.
//
// Rounds are semi-naive: a tuple is processed only if at least one argument
// belongs to the newest frontier.  Symmetric operations are applied to
// non-decreasing index tuples only.  When d^n is small the engine works on
// packed integer codes instead of Vector objects.
#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <unordered_map>
#include <vector>

#include "clenum/errors.hpp"
#include "clenum/family.hpp"
#include "clenum/operation.hpp"
#include "clenum/vector.hpp"

namespace clenum {

inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

class SaturationEngine {
 public:
  SaturationEngine(std::vector<Operation> fs, const Family& start,
                   std::size_t budget = kDefaultBudget)
      : ops_(std::move(fs)), n_(start.n()), d_(start.domain()), budget_(budget) {
    for (const auto& f : ops_) {
      if (f.domain() != d_) throw SpecError("saturation: operation domain differs from family");
      symmetric_.push_back(f.is_symmetric());
    }
    if (start.empty_set()) {
      finished_ = true;
      return;
    }
    std::size_t space = 1;
    pattern_mode_ = true;
    for (int i = 0; i < n_; ++i) {
      space *= static_cast<std::size_t>(d_);
      if (space > (std::size_t{1} << 20)) {
        pattern_mode_ = false;
        break;
      }
    }
    if (pattern_mode_) present_.assign(space, 0);
    for (const auto& v : start) insert_vector(v);
    frontier_lo_ = 0;
  }

  bool finished() const { return finished_; }
  std::size_t size() const { return count_; }

  Vector element(std::size_t i) const {
    if (pattern_mode_) return decode(codes_[i]);
    return vecs_[i];
  }

  bool contains(const Vector& v) const {
    if (v.size() != n_ || v.domain() != d_) return false;
    if (pattern_mode_) return present_[encode(v)] != 0;
    return vec_index_.count(v) > 0;
  }

  // Runs one semi-naive round; returns the number of fresh vectors.
  std::size_t run_round() {
    if (finished_) return 0;
    std::size_t hi = count_;
    std::size_t lo = frontier_lo_;
    std::size_t before = count_;
    for (std::size_t op = 0; op < ops_.size(); ++op) {
      if (symmetric_[op])
        apply_symmetric(ops_[op], lo, hi);
      else
        apply_general(ops_[op], lo, hi);
    }
    frontier_lo_ = hi;
    if (count_ == before) finished_ = true;
    return count_ - before;
  }

  void run_to_fixpoint() {
    while (!finished_) run_round();
  }

  Family to_family() const {
    if (count_ == 0) return Family::empty(d_);
    Family out(n_, d_);
    for (std::size_t i = 0; i < count_; ++i) out.insert(element(i));
    return out;
  }

 private:
  std::uint32_t encode(const Vector& v) const {
    std::uint32_t code = 0;
    for (int i = 0; i < n_; ++i)
      code = code * static_cast<std::uint32_t>(d_) + static_cast<std::uint32_t>(v.get(i));
    return code;
  }

  Vector decode(std::uint32_t code) const {
    Vector v(n_, d_);
    for (int i = n_ - 1; i >= 0; --i) {
      v.set(i, static_cast<int>(code % static_cast<std::uint32_t>(d_)));
      code /= static_cast<std::uint32_t>(d_);
    }
    return v;
  }

  void check_budget() const {
    if (count_ > budget_)
      throw BudgetError("saturation exceeded its budget of " + std::to_string(budget_) +
                            " accumulated vectors",
                        budget_);
  }

  void insert_vector(const Vector& v) {
    if (pattern_mode_) {
      insert_code(encode(v));
    } else {
      if (!vec_index_.emplace(v, count_).second) return;
      vecs_.push_back(v);
      ++count_;
      check_budget();
    }
  }

  void insert_code(std::uint32_t code) {
    if (present_[code]) return;
    present_[code] = 1;
    codes_.push_back(code);
    std::size_t base = digits_.size();
    digits_.resize(base + static_cast<std::size_t>(n_));
    std::uint32_t rest = code;
    for (int i = n_ - 1; i >= 0; --i) {
      digits_[base + static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(rest % static_cast<std::uint32_t>(d_));
      rest /= static_cast<std::uint32_t>(d_);
    }
    ++count_;
    check_budget();
  }

  // --- pattern-mode application with shared per-coordinate partial indices ---

  void emit_pattern_result(const Operation& f, const std::uint16_t* idx_row) {
    std::uint32_t code = 0;
    for (int j = 0; j < n_; ++j)
      code = code * static_cast<std::uint32_t>(d_) +
             static_cast<std::uint32_t>(f.eval_index(idx_row[j]));
    insert_code(code);
  }

  void extend_index_row(const std::uint16_t* src, std::uint16_t* dst, std::size_t elem) const {
    const std::uint8_t* row = digits_.data() + elem * static_cast<std::size_t>(n_);
    for (int j = 0; j < n_; ++j)
      dst[j] = static_cast<std::uint16_t>(src[j] * static_cast<std::uint16_t>(d_) + row[j]);
  }

  void apply_symmetric(const Operation& f, std::size_t lo, std::size_t hi) {
    int t = f.arity();
    std::vector<std::uint16_t> idx(static_cast<std::size_t>((t + 1) * n_), 0);
    if (pattern_mode_) {
      rec_symmetric(f, idx.data(), 0, t, 0, lo, hi);
    } else {
      std::vector<Vector> args;
      rec_symmetric_generic(f, args, t, 0, lo, hi);
    }
  }

  void rec_symmetric(const Operation& f, std::uint16_t* idx, int depth, int t, std::size_t from,
                     std::size_t lo, std::size_t hi) {
    const std::uint16_t* cur = idx + static_cast<std::size_t>(depth * n_);
    std::uint16_t* nxt = idx + static_cast<std::size_t>((depth + 1) * n_);
    bool last = depth + 1 == t;
    std::size_t begin = last ? std::max(from, lo) : from;
    for (std::size_t e = begin; e < hi; ++e) {
      extend_index_row(cur, nxt, e);
      if (last)
        emit_pattern_result(f, nxt);
      else
        rec_symmetric(f, idx, depth + 1, t, e, lo, hi);
    }
  }

  void rec_symmetric_generic(const Operation& f, std::vector<Vector>& args, int t,
                             std::size_t from, std::size_t lo, std::size_t hi) {
    bool last = static_cast<int>(args.size()) + 1 == t;
    std::size_t begin = last ? std::max(from, lo) : from;
    for (std::size_t e = begin; e < hi; ++e) {
      args.push_back(vecs_[e]);
      if (last)
        insert_vector(apply_op(f, args));
      else
        rec_symmetric_generic(f, args, t, e, lo, hi);
      args.pop_back();
    }
  }

  void apply_general(const Operation& f, std::size_t lo, std::size_t hi) {
    int t = f.arity();
    if (pattern_mode_) {
      std::vector<std::uint16_t> idx(static_cast<std::size_t>((t + 1) * n_), 0);
      rec_general(f, idx.data(), 0, t, false, lo, hi);
    } else {
      std::vector<Vector> args;
      rec_general_generic(f, args, t, false, lo, hi);
    }
  }

  void rec_general(const Operation& f, std::uint16_t* idx, int depth, int t, bool has_frontier,
                   std::size_t lo, std::size_t hi) {
    const std::uint16_t* cur = idx + static_cast<std::size_t>(depth * n_);
    std::uint16_t* nxt = idx + static_cast<std::size_t>((depth + 1) * n_);
    bool last = depth + 1 == t;
    std::size_t begin = (last && !has_frontier) ? lo : 0;
    for (std::size_t e = begin; e < hi; ++e) {
      extend_index_row(cur, nxt, e);
      if (last)
        emit_pattern_result(f, nxt);
      else
        rec_general(f, idx, depth + 1, t, has_frontier || e >= lo, lo, hi);
    }
  }

  void rec_general_generic(const Operation& f, std::vector<Vector>& args, int t,
                           bool has_frontier, std::size_t lo, std::size_t hi) {
    bool last = static_cast<int>(args.size()) + 1 == t;
    std::size_t begin = (last && !has_frontier) ? lo : 0;
    for (std::size_t e = begin; e < hi; ++e) {
      args.push_back(vecs_[e]);
      if (last)
        insert_vector(apply_op(f, args));
      else
        rec_general_generic(f, args, t, has_frontier || e >= lo, lo, hi);
      args.pop_back();
    }
  }

  std::vector<Operation> ops_;
  std::vector<bool> symmetric_;
  int n_ = 0;
  int d_ = 2;
  std::size_t budget_ = kDefaultBudget;
  bool pattern_mode_ = false;
  bool finished_ = false;
  std::size_t count_ = 0;
  std::size_t frontier_lo_ = 0;

  // pattern mode
  std::vector<std::uint8_t> present_;
  std::vector<std::uint32_t> codes_;
  std::vector<std::uint8_t> digits_;  // count_ rows of n_ digits

  // generic mode
  std::vector<Vector> vecs_;
  std::unordered_map<Vector, std::size_t, VectorHash> vec_index_;
};

inline Family saturate(const std::vector<Operation>& fs, const Family& start,
                       std::size_t budget = kDefaultBudget) {
  SaturationEngine engine(fs, start, budget);
  engine.run_to_fixpoint();
  return engine.to_family();
}

// Pull-based saturation: members first, discoveries afterwards.  A budget
// overflow surfaces only once every vector found before it has been pulled.
class SaturationStream {
 public:
  SaturationStream(std::vector<Operation> fs, const Family& start,
                   std::size_t budget = kDefaultBudget)
      : engine_(std::move(fs), start, budget) {}

  std::optional<Vector> next() {
    while (emit_ == engine_.size()) {
      if (engine_.finished()) return std::nullopt;
      if (overflow_) std::rethrow_exception(overflow_);
      try {
        engine_.run_round();
      } catch (const BudgetError&) {
        // keep draining what was discovered before the overflow
        overflow_ = std::current_exception();
      }
    }
    return engine_.element(emit_++);
  }

 private:
  SaturationEngine engine_;
  std::size_t emit_ = 0;
  std::exception_ptr overflow_;
};

}  // namespace clenum
