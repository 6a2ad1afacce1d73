#include "wdal/tensor.hpp"

#include <cmath>

#include "wdal/errors.hpp"

namespace wdal {

std::int64_t shape_numel(const Shape& s) {
  std::int64_t n = 1;
  for (auto d : s) n *= d;
  return n;
}

std::string shape_str(const Shape& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += ")";
  return out;
}

Tensor::Tensor(Shape shape)
    : shape_(std::move(shape)),
      numel_(shape_numel(shape_)),
      data_(std::make_shared<std::vector<double>>(static_cast<std::size_t>(numel_), 0.0)) {}

Tensor::Tensor(Shape shape, std::vector<double> data)
    : shape_(std::move(shape)), numel_(shape_numel(shape_)) {
  if (numel_ != static_cast<std::int64_t>(data.size()))
    throw_runtime("tensor: data length " + std::to_string(data.size()) + " does not match shape " +
                  shape_str(shape_));
  data_ = std::make_shared<std::vector<double>>(std::move(data));
}

Tensor Tensor::full(Shape shape, double v) {
  Tensor t(std::move(shape));
  for (auto& x : *t.data_) x = v;
  return t;
}

Tensor Tensor::clone() const {
  Tensor t;
  t.shape_ = shape_;
  t.numel_ = numel_;
  t.data_ = std::make_shared<std::vector<double>>(*data_);
  return t;
}

bool Tensor::all_finite() const {
  for (double v : *data_)
    if (!std::isfinite(v)) return false;
  return true;
}

double Tensor::sum() const {
  double s = 0.0;
  for (double v : *data_) s += v;
  return s;
}

}  // namespace wdal
