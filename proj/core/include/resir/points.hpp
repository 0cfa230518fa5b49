#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "resir/error.hpp"

namespace resir {

/// A batch of d-dimensional points in contiguous row-major storage.
class PointBatch {
public:
  PointBatch() = default;
  explicit PointBatch(std::size_t dim, std::size_t count = 0)
      : dim_(dim), data_(dim * count) {
    if (dim == 0) throw_bad_parameter("PointBatch: dimension must be positive");
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }
  bool empty() const noexcept { return data_.empty(); }

  void reserve(std::size_t count) { data_.reserve(count * dim_); }

  /// Appends an uninitialized row and returns a writable view of it.
  std::span<double> append() {
    data_.resize(data_.size() + dim_);
    return {data_.data() + data_.size() - dim_, dim_};
  }

  void append(std::span<const double> point) {
    if (point.size() != dim_) {
      throw Error("dimension-mismatch", "PointBatch: row has wrong width");
    }
    auto row = append();
    for (std::size_t j = 0; j < dim_; ++j) row[j] = point[j];
  }

  std::span<const double> operator[](std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }
  std::span<double> operator[](std::size_t i) {
    return {data_.data() + i * dim_, dim_};
  }

  const std::vector<double>& data() const noexcept { return data_; }

private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

} // namespace resir
