#pragma once

#include <stdexcept>
#include <string>

namespace enumkit {

// Base class for failures that abort an enumeration run.
struct EnumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The configured global step ceiling was hit; the machine is likely runaway.
struct StepBudgetExceeded : EnumError {
  explicit StepBudgetExceeded(const std::string& what) : EnumError(what) {}
};

// A solution store (trie, visited set, saturation pool) outgrew its ceiling.
struct StoreBudgetExceeded : EnumError {
  explicit StoreBudgetExceeded(const std::string& what) : EnumError(what) {}
};

// An operation required snapshot/restore on a machine that does not offer it.
struct SnapshotUnsupported : EnumError {
  explicit SnapshotUnsupported(const std::string& what) : EnumError(what) {}
};

// A machine declared incremental delay p but emitted a solution too late.
struct IncrementalDelayViolated : EnumError {
  explicit IncrementalDelayViolated(const std::string& what) : EnumError(what) {}
};

// An extension oracle accepted a complete prefix that fails the final
// solution predicate.
struct OracleInconsistent : EnumError {
  explicit OracleInconsistent(const std::string& what) : EnumError(what) {}
};

// A root-to-leaf segment of a backtracking search exceeded its declared bound.
struct PathTimeExceeded : EnumError {
  explicit PathTimeExceeded(const std::string& what) : EnumError(what) {}
};

// A brute-force oracle was asked to enumerate beyond its size ceiling.
struct InstanceTooLarge : EnumError {
  explicit InstanceTooLarge(const std::string& what) : EnumError(what) {}
};

// Malformed instance file. `line` is 1-based.
struct ParseError : EnumError {
  ParseError(const std::string& what, int line_no)
      : EnumError(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  int line;
};

// Well-formed input that violates a semantic requirement (cycle in a DAG,
// element out of range, ...).
struct ValidationError : EnumError {
  explicit ValidationError(const std::string& what) : EnumError(what) {}
};

}  // namespace enumkit
