#pragma once

#include <cstdint>

namespace powfactor {

/// Operation counts collected by the instrumentation hook.
///
/// `mulmods` counts reductions modulo N: one per scalar modular product and
/// one per output coefficient of a packed polynomial product. `gcds` counts
/// full-width gcd / inversion attempts against N.
struct OpCounts {
  std::uint64_t mulmods = 0;
  std::uint64_t gcds = 0;

  OpCounts& operator+=(const OpCounts& other) {
    mulmods += other.mulmods;
    gcds += other.gcds;
    return *this;
  }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Installs a per-thread counting sink for the lifetime of the scope.
///
/// Scopes nest: when an inner scope closes, its counts are added to the
/// enclosing one. With no active scope, counting is a no-op.
class CountScope {
 public:
  CountScope();
  ~CountScope();
  CountScope(const CountScope&) = delete;
  CountScope& operator=(const CountScope&) = delete;

  const OpCounts& counts() const { return counts_; }

 private:
  friend void note_mulmods(std::uint64_t);
  friend void note_gcds(std::uint64_t);

  OpCounts counts_;
  CountScope* previous_;
};

void note_mulmods(std::uint64_t n = 1);
void note_gcds(std::uint64_t n = 1);

}  // namespace powfactor
