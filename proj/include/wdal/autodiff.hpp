#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wdal/tensor.hpp"

namespace wdal::ad {

struct Node;
using Var = std::shared_ptr<Node>;

/// One value in the computation graph. Every op records its inputs and a
/// vector-Jacobian product that itself builds graph nodes, so gradients are
/// differentiable again (the gradient penalty differentiates a gradient).
struct Node {
  Tensor value;
  std::vector<Var> inputs;
  const char* op = "leaf";
  // vjp(self, grad_out) -> grad for each input, as new graph nodes.
  std::function<std::vector<Var>(const Var&, const Var&)> vjp;
};

Var leaf(Tensor value);
inline Var constant(Tensor value) { return leaf(std::move(value)); }
Var scalar(double v);

/// Reverse-mode gradients of `output` w.r.t. each Var in `wrt`.
/// `seed` defaults to ones_like(output). The returned Vars are part of the
/// graph, so they can be differentiated again.
std::vector<Var> grad(const Var& output, const std::vector<Var>& wrt, Var seed = nullptr);

// Elementwise (same-shape) ----------------------------------------------------
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var div(const Var& a, const Var& b);
Var neg(const Var& a);
Var scale(const Var& a, double s);
Var add_const(const Var& a, double s);
Var relu(const Var& a);
Var sigmoid(const Var& a);
Var log_(const Var& a);
Var sqrt_(const Var& a);
Var square(const Var& a);
/// Elementwise clamp to [lo, hi]; gradient is zero where clamped.
Var clamp(const Var& a, double lo, double hi);
/// min(a, c) elementwise; gradient passes where a <= c.
Var minimum_const(const Var& a, double c);

// Reductions and broadcasts ---------------------------------------------------
// Layout convention: dim 0 is batch (B), dim 1 channels (C), the rest spatial.
Var sum_all(const Var& a);                         // -> {1}
Var mean_all(const Var& a);                        // -> {1}
Var bcast_all(const Var& a, Shape shape);          // {1} -> shape
Var sum_spatial(const Var& a);                     // {B,C,...} -> {B,C}
Var bcast_spatial(const Var& a, Shape shape);      // {B,C} -> {B,C,...}
Var sum_per_sample(const Var& a);                  // {B,...} -> {B}
Var bcast_sample(const Var& a, Shape shape);       // {B} -> {B,...}
Var sum_channel(const Var& a);                     // {B,C,...} -> {C}
Var bcast_channel(const Var& a, Shape shape);      // {C} -> {B,C,...}

// Structure -------------------------------------------------------------------
Var reshape(const Var& a, Shape shape);
Var concat_c(const Var& a, const Var& b);               // along channel dim
Var slice_c(const Var& a, std::int64_t c0, std::int64_t c1);
Var pad_c(const Var& a, std::int64_t c0, std::int64_t c_total);

// Convolution and friends -----------------------------------------------------
struct ConvSpec {
  std::array<std::int64_t, 3> stride{1, 1, 1};
  std::array<std::int64_t, 3> pad{0, 0, 0};
  std::array<std::int64_t, 3> dilation{1, 1, 1};
};

/// x: {B,Ci,D,H,W}, w: {Co,Ci,kd,kh,kw}, b: {Co} or null.
Var conv3d(const Var& x, const Var& w, const Var& b, const ConvSpec& spec);
Var conv3d_dx(const Var& gy, const Var& w, Shape x_shape, const ConvSpec& spec);
Var conv3d_dw(const Var& x, const Var& gy, Shape w_shape, const ConvSpec& spec);

/// Average pooling with kernel == stride == k; spatial dims must divide by k.
Var avg_pool3d(const Var& x, std::int64_t k);
Var avg_unpool3d(const Var& x, std::int64_t k, Shape out_shape);

/// Max pooling with kernel == stride == k; boundary windows are truncated
/// (ceil mode), so any input size is valid.
Var max_pool3d(const Var& x, std::int64_t k);

/// Nearest-neighbour resize of the three spatial dims.
Var resize_nearest3d(const Var& x, std::array<std::int64_t, 3> out_spatial);

// Shape helpers ---------------------------------------------------------------
inline std::array<std::int64_t, 3> spatial_of(const Shape& s) {
  return {s[2], s[3], s[4]};
}

Shape conv3d_out_shape(const Shape& x, const Shape& w, const ConvSpec& spec);

}  // namespace wdal::ad
