#pragma once

#include <span>
#include <vector>

#include "bgpm/roots.hpp"

namespace bgpm {

struct MatchReport {
  bool matched = false;
  // Values left over from each side after a maximum pairing.
  std::vector<ComplexF> unmatched_a;
  std::vector<ComplexF> unmatched_b;
};

/// True iff the two multisets admit a perfect pairing with every pair within
/// `tol`. Decided exactly as a bipartite matching on the threshold graph.
MatchReport multiset_match(std::span<const ComplexF> a, std::span<const ComplexF> b, double tol);

inline MatchReport multiset_match(const std::vector<Root>& a, const std::vector<Root>& b, double tol) {
  const auto ea = expand(a);
  const auto eb = expand(b);
  return multiset_match(std::span<const ComplexF>(ea), std::span<const ComplexF>(eb), tol);
}

}  // namespace bgpm
