#pragma once

#include <cassert>
#include <memory>
#include <utility>

#include "enumkit/bitvec.hpp"
#include "enumkit/errors.hpp"

namespace enumkit {

enum class StepKind : uint8_t { Continue, Emit, Done };

// Result of one machine step. A step either performs silent work, emits one
// solution, or reports that the enumeration is over. Once Done has been
// returned every later step returns Done.
struct StepOutcome {
  StepKind kind = StepKind::Continue;
  Solution solution;

  static StepOutcome make_continue() { return {}; }
  static StepOutcome make_emit(Solution s) { return {StepKind::Emit, std::move(s)}; }
  static StepOutcome make_done() { return {StepKind::Done, {}}; }

  bool is_continue() const { return kind == StepKind::Continue; }
  bool is_emit() const { return kind == StepKind::Emit; }
  bool is_done() const { return kind == StepKind::Done; }
};

// The stepped machine contract. Implementations are deterministic given their
// state; randomized machines carry an explicit seed inside that state.
// clone() produces an independent deep copy, which is how snapshots are
// realized. A machine may declare snapshot_supported() == false to opt out of
// snapshot-based wrappers even though clone() exists for internal use.
class Enumerator {
 public:
  virtual ~Enumerator() = default;
  virtual StepOutcome step() = 0;
  virtual bool snapshot_supported() const { return true; }
  virtual std::unique_ptr<Enumerator> clone() const = 0;
};

// An immutable saved machine state.
struct MachineState {
  std::shared_ptr<const Enumerator> frozen;
  bool finished = false;
};

// Value-semantic handle around an Enumerator. Enforces the Done latch and
// provides snapshot/restore via deep copies. Copying a Machine copies the
// underlying state (and requires snapshot support).
class Machine {
 public:
  explicit Machine(std::unique_ptr<Enumerator> impl) : impl_(std::move(impl)) {
    assert(impl_ != nullptr);
  }

  template <class E, class... Args>
  static Machine make(Args&&... args) {
    return Machine(std::make_unique<E>(std::forward<Args>(args)...));
  }

  Machine(const Machine& o) : impl_(checked_clone(o)), finished_(o.finished_) {}
  Machine& operator=(const Machine& o) {
    if (this != &o) {
      impl_ = checked_clone(o);
      finished_ = o.finished_;
    }
    return *this;
  }
  Machine(Machine&&) noexcept = default;
  Machine& operator=(Machine&&) noexcept = default;

  StepOutcome step() {
    if (finished_) return StepOutcome::make_done();
    StepOutcome out = impl_->step();
    if (out.is_done()) finished_ = true;
    return out;
  }

  bool done() const { return finished_; }

  bool snapshot_supported() const { return impl_->snapshot_supported(); }

  MachineState snapshot() const {
    require_snapshot();
    return MachineState{std::shared_ptr<const Enumerator>(impl_->clone()), finished_};
  }

  void restore(const MachineState& state) {
    impl_ = state.frozen->clone();
    finished_ = state.finished;
  }

  // Independent copy at the current state.
  Machine fork() const { return Machine(*this); }

  const Enumerator* impl() const { return impl_.get(); }
  Enumerator* impl() { return impl_.get(); }

  template <class T>
  const T* as() const {
    return dynamic_cast<const T*>(impl_.get());
  }

 private:
  static std::unique_ptr<Enumerator> checked_clone(const Machine& o) {
    o.require_snapshot();
    return o.impl_->clone();
  }

  void require_snapshot() const {
    if (!impl_->snapshot_supported())
      throw SnapshotUnsupported("machine does not support snapshot/restore");
  }

  std::unique_ptr<Enumerator> impl_;
  bool finished_ = false;
};

}  // namespace enumkit
