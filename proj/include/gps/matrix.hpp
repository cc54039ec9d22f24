#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace gps {

/// Dense square matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim, double fill = 0.0) : dim_(dim), data_(dim * dim, fill) {}

  [[nodiscard]] std::size_t dim() const { return dim_; }

  double& operator()(std::size_t i, std::size_t j) {
    assert(i < dim_ && j < dim_);
    return data_[i * dim_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    assert(i < dim_ && j < dim_);
    return data_[i * dim_ + j];
  }

  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

  [[nodiscard]] bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  [[nodiscard]] std::vector<double> multiply(std::span<const double> v) const {
    assert(v.size() == dim_);
    std::vector<double> out(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < dim_; ++j) acc += data_[i * dim_ + j] * v[j];
      out[i] = acc;
    }
    return out;
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

}  // namespace gps
