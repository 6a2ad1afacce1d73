#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wdal {

using Shape = std::vector<std::int64_t>;

std::int64_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

/// Dense double-precision array. Cheap to copy (data is shared); treated as
/// immutable once it leaves the kernel that built it.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape);
  Tensor(Shape shape, std::vector<double> data);

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor full(Shape shape, double v);
  static Tensor scalar(double v) { return full({1}, v); }

  const Shape& shape() const { return shape_; }
  std::int64_t numel() const { return numel_; }
  bool defined() const { return data_ != nullptr; }

  const double* data() const { return data_->data(); }
  double* mut() { return data_->data(); }
  double at(std::int64_t i) const { return (*data_)[static_cast<std::size_t>(i)]; }

  const std::vector<double>& vec() const { return *data_; }

  /// Deep copy with its own buffer.
  Tensor clone() const;

  bool all_finite() const;
  double sum() const;

 private:
  Shape shape_;
  std::int64_t numel_ = 0;
  std::shared_ptr<std::vector<double>> data_;
};

inline bool same_shape(const Tensor& a, const Tensor& b) { return a.shape() == b.shape(); }

}  // namespace wdal
