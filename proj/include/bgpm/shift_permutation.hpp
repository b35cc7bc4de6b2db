#pragma once

#include <numeric>

#include "bgpm/dense.hpp"

namespace bgpm {

/// The shift permutation i -> i + s (mod n) on {1, ..., n}. All indices are
/// 1-based and reduced back into 1..n.
class ShiftPermutation {
 public:
  ShiftPermutation(Index n, Index s) : n_(n), s_(s) {
    if (n < 1) throw PreconditionError("shift permutation needs n >= 1");
    if (s < 0 || s >= n)
      throw PreconditionError("shift " + std::to_string(s) + " outside 0.." + std::to_string(n - 1));
  }

  Index size() const { return n_; }
  Index shift() const { return s_; }
  // gcd(n, 0) = n, so the identity has n fixed-point cycles.
  Index cycle_count() const { return std::gcd(n_, s_); }
  Index order() const { return s_ == 0 ? 1 : n_ / std::gcd(n_, s_); }

  Index apply(Index i) const { return wrap(i + s_); }
  // pi^r(i)
  Index apply(Index i, Index r) const { return wrap(i + (r % n_) * s_); }
  // Brings any integer into 1..n.
  Index wrap(Index i) const { return ((i - 1) % n_ + n_) % n_ + 1; }

  friend bool operator==(const ShiftPermutation&, const ShiftPermutation&) = default;

 private:
  Index n_;
  Index s_;
};

inline Index perm_order(const ShiftPermutation& p) { return p.order(); }

/// pi^r == pi^(r mod order).
inline Index perm_power_reduce(const ShiftPermutation& p, Index r) {
  if (r < 0) throw PreconditionError("perm_power_reduce: r must be nonnegative");
  return r % p.order();
}

}  // namespace bgpm
