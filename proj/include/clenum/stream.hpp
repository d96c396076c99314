// Pull-based solution streams.  An Enumerator yields each closure element
// exactly once through next(); std::nullopt marks exhaustion.  Streams also
// expose abstract work counters so callers can check delay bounds:
//   work()          cumulative count of elementary data-structure updates
//   branch_work()   updates attributable to the branch of the last emission
//   nodes_visited() internal search-tree nodes entered so far
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "clenum/vector.hpp"

namespace clenum {

class Enumerator {
 public:
  virtual ~Enumerator() = default;
  virtual std::optional<Vector> next() = 0;
  virtual std::uint64_t work() const { return 0; }
  virtual std::uint64_t branch_work() const { return 0; }
  virtual std::uint64_t nodes_visited() const { return 0; }
};

inline std::vector<Vector> drain(Enumerator& e, std::size_t limit = static_cast<std::size_t>(-1)) {
  std::vector<Vector> out;
  while (out.size() < limit) {
    auto v = e.next();
    if (!v) break;
    out.push_back(std::move(*v));
  }
  return out;
}

// Complements every emitted vector; used for dual post-processing over d = 2.
class ComplementStream : public Enumerator {
 public:
  explicit ComplementStream(std::unique_ptr<Enumerator> inner) : inner_(std::move(inner)) {}
  std::optional<Vector> next() override {
    auto v = inner_->next();
    if (v) v->complement_in_place();
    return v;
  }
  std::uint64_t work() const override { return inner_->work(); }
  std::uint64_t branch_work() const override { return inner_->branch_work(); }
  std::uint64_t nodes_visited() const override { return inner_->nodes_visited(); }

 private:
  std::unique_ptr<Enumerator> inner_;
};

}  // namespace clenum
