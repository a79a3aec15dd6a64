#pragma once

#include <vector>

#include "subschur/linalg.hpp"

namespace subschur {

/// A finite sequence (s_0, ..., s_kappa) of q x q complex matrices.
class MomentSequence {
 public:
  explicit MomentSequence(std::vector<Matrix> blocks);

  /// Scalar (q = 1) sequence from real values.
  static MomentSequence scalar(const std::vector<double>& values);

  Index block_size() const noexcept { return q_; }
  std::size_t length() const noexcept { return blocks_.size(); }
  /// kappa, the index of the last block.
  std::size_t order() const noexcept { return blocks_.size() - 1; }

  const Matrix& operator[](std::size_t j) const { return blocks_[j]; }
  const Matrix& at(std::size_t j) const;
  const Matrix& back() const { return blocks_.back(); }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  /// Largest Frobenius norm among the blocks.
  double scale() const;

  /// First `count` blocks.
  MomentSequence prefix(std::size_t count) const;
  MomentSequence with_last(const Matrix& block) const;
  MomentSequence appended(const Matrix& block) const;

  /// Blockwise comparison, ||a_j - b_j|| <= eps * max(1, ||a_j||).
  bool approx_equal(const MomentSequence& other, const Tolerance& tol = {}) const;
  /// Same comparison restricted to the first `count` blocks.
  bool leading_blocks_equal(const MomentSequence& other, std::size_t count,
                            const Tolerance& tol = {}) const;

 private:
  Index q_ = 0;
  std::vector<Matrix> blocks_;
};

}  // namespace subschur
