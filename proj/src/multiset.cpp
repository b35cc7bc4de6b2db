#include "bgpm/multiset.hpp"

#include <cmath>
#include <functional>

namespace bgpm {

MatchReport multiset_match(std::span<const ComplexF> a, std::span<const ComplexF> b, double tol) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::vector<std::vector<std::size_t>> adjacent(na);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      if (std::abs(a[i] - b[j]) <= tol) adjacent[i].push_back(j);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(nb, kNone);  // b index -> a index
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j : adjacent[i]) {
      if (seen[j]) continue;
      seen[j] = 1;
      if (owner[j] == kNone || augment(owner[j])) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };

  std::vector<char> paired(na, 0);
  for (std::size_t i = 0; i < na; ++i) {
    seen.assign(nb, 0);
    augment(i);
  }
  MatchReport report;
  for (std::size_t j = 0; j < nb; ++j) {
    if (owner[j] == kNone)
      report.unmatched_b.push_back(b[j]);
    else
      paired[owner[j]] = 1;
  }
  for (std::size_t i = 0; i < na; ++i)
    if (!paired[i]) report.unmatched_a.push_back(a[i]);
  report.matched = report.unmatched_a.empty() && report.unmatched_b.empty();
  return report;
}

}  // namespace bgpm
