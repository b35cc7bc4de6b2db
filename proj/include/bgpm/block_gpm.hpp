#pragma once

#include <optional>
#include <vector>

#include "bgpm/dense.hpp"
#include "bgpm/shift_permutation.hpp"

namespace bgpm {

/// A kn x kn block generalized permutation matrix for a shift permutation:
/// block row i holds the single k x k block U(i, pi(i)), everything else is
/// zero. Equivalently dense(U) = diag(U(1, pi(1)), ..., U(n, pi(n))) (P_pi (x) I_k).
///
/// Blocks are addressed by their 1-based block row. Zero blocks are allowed;
/// `zero_block_rows()` reports them.
template <class Scalar>
class BlockGpm {
 public:
  using scalar_type = Scalar;

  BlockGpm(ShiftPermutation perm, std::vector<Matrix<Scalar>> blocks)
      : perm_(perm), blocks_(std::move(blocks)) {
    if (static_cast<Index>(blocks_.size()) != perm_.size())
      throw DimensionError("BlockGpm: expected " + std::to_string(perm_.size()) + " blocks, got " +
                           std::to_string(blocks_.size()));
    k_ = blocks_.front().rows();
    if (k_ < 1) throw DimensionError("BlockGpm: blocks must be at least 1x1");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i].rows() != k_ || blocks_[i].cols() != k_)
        throw DimensionError("BlockGpm: block " + std::to_string(i + 1) + " is not " + std::to_string(k_) +
                             "x" + std::to_string(k_));
  }

  /// All blocks I_k: the permutation matrix P_pi (x) I_k.
  static BlockGpm permutation(ShiftPermutation perm, Index k) {
    return BlockGpm(perm, std::vector<Matrix<Scalar>>(static_cast<std::size_t>(perm.size()), identity<Scalar>(k)));
  }

  const ShiftPermutation& perm() const { return perm_; }
  Index n() const { return perm_.size(); }
  Index k() const { return k_; }
  Index shift() const { return perm_.shift(); }
  Index dim() const { return n() * k_; }

  /// U(i, pi(i)), 1-based.
  const Matrix<Scalar>& block(Index i) const { return blocks_.at(static_cast<std::size_t>(perm_.wrap(i) - 1)); }
  /// Storage order: blocks()[i - 1] is block row i.
  const std::vector<Matrix<Scalar>>& blocks() const { return blocks_; }

  std::vector<Index> zero_block_rows() const {
    std::vector<Index> rows;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i].isZero(0)) rows.push_back(static_cast<Index>(i) + 1);
    return rows;
  }

  friend bool operator==(const BlockGpm& a, const BlockGpm& b) {
    if (!(a.perm_ == b.perm_) || a.k_ != b.k_) return false;
    for (std::size_t i = 0; i < a.blocks_.size(); ++i)
      if (a.blocks_[i] != b.blocks_[i]) return false;
    return true;
  }

 private:
  ShiftPermutation perm_;
  Index k_ = 0;
  std::vector<Matrix<Scalar>> blocks_;
};

using BlockGpmZ = BlockGpm<BigInt>;
using BlockGpmQ = BlockGpm<Rational>;
using BlockGpmC = BlockGpm<ComplexF>;

template <class Scalar>
Matrix<Scalar> to_dense(const BlockGpm<Scalar>& u) {
  const Index k = u.k();
  Matrix<Scalar> out = zeros<Scalar>(u.dim(), u.dim());
  for (Index i = 1; i <= u.n(); ++i) out.block((i - 1) * k, (u.perm().apply(i) - 1) * k, k, k) = u.block(i);
  return out;
}

/// Block product: (UV)(i, pi_v(pi_u(i))) = U(i, pi_u(i)) V(pi_u(i), pi_v(pi_u(i))),
/// shift s_u + s_v (mod n).
template <class Scalar>
BlockGpm<Scalar> multiply(const BlockGpm<Scalar>& u, const BlockGpm<Scalar>& v) {
  if (u.n() != v.n() || u.k() != v.k())
    throw DimensionError("multiply: shapes differ (n=" + std::to_string(u.n()) + ",k=" + std::to_string(u.k()) +
                         " vs n=" + std::to_string(v.n()) + ",k=" + std::to_string(v.k()) + ")");
  std::vector<Matrix<Scalar>> blocks;
  blocks.reserve(static_cast<std::size_t>(u.n()));
  for (Index i = 1; i <= u.n(); ++i) blocks.push_back(u.block(i) * v.block(u.perm().apply(i)));
  return BlockGpm<Scalar>(ShiftPermutation(u.n(), (u.shift() + v.shift()) % u.n()), std::move(blocks));
}

template <class Scalar>
BlockGpm<Scalar> operator*(const BlockGpm<Scalar>& u, const BlockGpm<Scalar>& v) {
  return multiply(u, v);
}

/// U^r for r >= 1 by repeated squaring on the block representation; the
/// shift becomes r s (mod n).
template <class Scalar>
BlockGpm<Scalar> power(const BlockGpm<Scalar>& u, Index r) {
  if (r < 1) throw PreconditionError("power: exponent must be >= 1");
  std::optional<BlockGpm<Scalar>> result;
  BlockGpm<Scalar> base = u;
  while (r > 0) {
    if (r & 1) result = result ? multiply(*result, base) : base;
    r >>= 1;
    if (r > 0) base = multiply(base, base);
  }
  return *result;
}

/// The ordered product U(i, pi(i)) U(pi(i), pi^2(i)) ... U(pi^(d-1)(i), i)
/// around the orbit of i, d = order of pi.
template <class Scalar>
Matrix<Scalar> cycle_product(const BlockGpm<Scalar>& u, Index i) {
  const Index d = u.perm().order();
  Matrix<Scalar> acc = u.block(i);
  Index at = u.perm().apply(i);
  for (Index j = 1; j < d; ++j) {
    acc = (acc * u.block(at)).eval();
    at = u.perm().apply(at);
  }
  return acc;
}

/// Diagonal blocks of U^d: U^d = diag(cycle_product(u, 1), ..., cycle_product(u, n)).
/// For s = 0 this is the block list itself.
template <class Scalar>
std::vector<Matrix<Scalar>> power_to_order(const BlockGpm<Scalar>& u) {
  std::vector<Matrix<Scalar>> out;
  out.reserve(static_cast<std::size_t>(u.n()));
  for (Index i = 1; i <= u.n(); ++i) out.push_back(cycle_product(u, i));
  return out;
}

template <class To, class From>
BlockGpm<To> convert(const BlockGpm<From>& u) {
  std::vector<Matrix<To>> blocks;
  blocks.reserve(u.blocks().size());
  for (const auto& b : u.blocks()) blocks.push_back(convert<To>(b));
  return BlockGpm<To>(u.perm(), std::move(blocks));
}

}  // namespace bgpm
