#pragma once
// Shared identifiers, error codes and scratch storage.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tenpage {

using VertexId = int;
using EdgeId = int;
using Dart = int;  // half-edge index; twin(d) == d ^ 1

enum class Err {
  NotAnEmbedding,
  NotOnePlanar,
  SelfLoop,
  Disconnected,
  NotNormalized,
  BadParameter,
  TooLarge,
  SpineMismatch,
  InvalidCertificate,
  NoBlocksDominated,
  InducerCovered,
  UncoveredCase,
  ParseError,
  Internal,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Err c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

// Integer map with O(1) bulk clear, used so that per-instance passes cost
// O(instance size) instead of O(graph size).
class StampedMap {
 public:
  void resize(size_t n) {
    val_.assign(n, 0);
    stamp_.assign(n, 0);
    cur_ = 1;
  }
  void clear() { ++cur_; }
  bool has(int i) const { return stamp_[i] == cur_; }
  void set(int i, int v) {
    val_[i] = v;
    stamp_[i] = cur_;
  }
  int get(int i, int def = -1) const { return has(i) ? val_[i] : def; }
  size_t size() const { return val_.size(); }

 private:
  std::vector<int> val_, stamp_;
  int cur_ = 0;
};

}  // namespace tenpage
