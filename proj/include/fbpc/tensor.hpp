#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "fbpc/common.hpp"

namespace fbpc {

// Dense row-major array of doubles. Shapes are small (rank <= 4 in practice).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int64_t> shape)
      : shape_(std::move(shape)), data_(checked_numel(shape_), 0.0) {}
  Tensor(std::vector<int64_t> shape, std::vector<double> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (static_cast<int64_t>(data_.size()) != checked_numel(shape_))
      throw validation_error("tensor data size does not match shape");
  }

  static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }

  const std::vector<int64_t>& shape() const { return shape_; }
  int64_t rank() const { return static_cast<int64_t>(shape_.size()); }
  int64_t size(int64_t dim) const { return shape_[static_cast<size_t>(dim)]; }
  int64_t numel() const { return static_cast<int64_t>(data_.size()); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& vec() { return data_; }
  const std::vector<double>& vec() const { return data_; }

  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // 2-D accessors (first dim = row)
  double& at(int64_t i, int64_t j) { return data_[static_cast<size_t>(i * stride0() + j)]; }
  double at(int64_t i, int64_t j) const { return data_[static_cast<size_t>(i * stride0() + j)]; }

  // elements per leading index
  int64_t stride0() const {
    int64_t s = 1;
    for (size_t k = 1; k < shape_.size(); ++k) s *= shape_[k];
    return s;
  }

  Tensor reshaped(std::vector<int64_t> shape) const {
    Tensor out(std::move(shape), data_);
    return out;
  }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  Tensor& operator+=(const Tensor& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Tensor& operator*=(double c) {
    for (double& v : data_) v *= c;
    return *this;
  }

  double norm() const {
    double s = 0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

 private:
  static int64_t checked_numel(const std::vector<int64_t>& shape) {
    int64_t n = 1;
    for (int64_t d : shape) {
      if (d < 0) throw validation_error("negative tensor dimension");
      n *= d;
    }
    return n;
  }

  std::vector<int64_t> shape_;
  std::vector<double> data_;
};

// Gathers the given leading-dimension slices into a new tensor.
inline Tensor take_rows(const Tensor& t, const std::vector<int64_t>& idx) {
  std::vector<int64_t> shape = t.shape();
  shape[0] = static_cast<int64_t>(idx.size());
  Tensor out(shape);
  const int64_t row = t.stride0();
  for (size_t k = 0; k < idx.size(); ++k) {
    const double* src = t.data() + idx[k] * row;
    double* dst = out.data() + static_cast<int64_t>(k) * row;
    std::copy(src, src + row, dst);
  }
  return out;
}

}  // namespace fbpc
