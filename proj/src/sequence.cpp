#include "subschur/sequence.hpp"

#include <algorithm>
#include <string>

namespace subschur {

MomentSequence::MomentSequence(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw Error(ErrorCode::TooShort, "moment sequence needs at least one block");
  }
  q_ = blocks_.front().rows();
  if (q_ < 1) {
    throw Error(ErrorCode::ShapeMismatch, "moment sequence blocks must be at least 1x1");
  }
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (blocks_[j].rows() != q_ || blocks_[j].cols() != q_) {
      throw Error(ErrorCode::ShapeMismatch,
                  "block " + std::to_string(j) + " is not " + std::to_string(q_) + "x" +
                      std::to_string(q_));
    }
  }
}

MomentSequence MomentSequence::scalar(const std::vector<double>& values) {
  std::vector<Matrix> blocks;
  blocks.reserve(values.size());
  for (double v : values) blocks.push_back(Matrix::Constant(1, 1, Complex(v, 0.0)));
  return MomentSequence(std::move(blocks));
}

const Matrix& MomentSequence::at(std::size_t j) const {
  if (j >= blocks_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "block index " + std::to_string(j) + " exceeds order " +
                    std::to_string(order()));
  }
  return blocks_[j];
}

MomentSequence MomentSequence::prefix(std::size_t count) const {
  if (count == 0 || count > blocks_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "prefix of length " + std::to_string(count) + " out of range");
  }
  return MomentSequence({blocks_.begin(), blocks_.begin() + static_cast<long>(count)});
}

MomentSequence MomentSequence::with_last(const Matrix& block) const {
  auto blocks = blocks_;
  blocks.back() = block;
  return MomentSequence(std::move(blocks));
}

MomentSequence MomentSequence::appended(const Matrix& block) const {
  auto blocks = blocks_;
  blocks.push_back(block);
  return MomentSequence(std::move(blocks));
}

double MomentSequence::scale() const {
  double out = 0.0;
  for (const auto& b : blocks_) out = std::max(out, b.norm());
  return out;
}

bool MomentSequence::approx_equal(const MomentSequence& other, const Tolerance& tol) const {
  if (other.length() != length()) return false;
  return leading_blocks_equal(other, length(), tol);
}

bool MomentSequence::leading_blocks_equal(const MomentSequence& other, std::size_t count,
                                          const Tolerance& tol) const {
  if (other.block_size() != q_ || count > length() || count > other.length()) return false;
  for (std::size_t j = 0; j < count; ++j) {
    if ((blocks_[j] - other.blocks_[j]).norm() > tol.threshold(blocks_[j].norm())) {
      return false;
    }
  }
  return true;
}

}  // namespace subschur
