#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gridsynth/errors.hpp"

namespace gridsynth::ad {

/// Dense row-major matrix of doubles, shared-handle semantics.
///
/// A Tensor is a lightweight handle onto a (shape, value, grad) node. Ops on a
/// Tape produce fresh nodes; parameters keep their node across training steps
/// so gradients accumulate in place between optimizer updates.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(int rows, int cols, bool requires_grad = false) {
    Tensor t;
    t.node_ = std::make_shared<Node>();
    t.node_->rows = rows;
    t.node_->cols = cols;
    t.node_->value.assign(static_cast<std::size_t>(rows) * cols, 0.0);
    t.node_->requires_grad = requires_grad;
    return t;
  }

  static Tensor constant(int rows, int cols, std::vector<double> data) {
    if (static_cast<std::size_t>(rows) * cols != data.size())
      throw ConfigError("tensor data length does not match shape " +
                        shape_str(rows, cols));
    Tensor t = zeros(rows, cols, false);
    t.node_->value = std::move(data);
    return t;
  }

  static Tensor param(int rows, int cols, std::vector<double> data) {
    Tensor t = constant(rows, cols, std::move(data));
    t.node_->requires_grad = true;
    return t;
  }

  static Tensor scalar(double v) { return constant(1, 1, {v}); }

  bool defined() const { return node_ != nullptr; }
  int rows() const { return node_->rows; }
  int cols() const { return node_->cols; }
  std::size_t size() const { return node_->value.size(); }
  bool is_scalar() const { return node_->rows == 1 && node_->cols == 1; }

  double at(int r, int c) const {
    return node_->value[static_cast<std::size_t>(r) * node_->cols + c];
  }
  double& at(int r, int c) {
    return node_->value[static_cast<std::size_t>(r) * node_->cols + c];
  }

  const std::vector<double>& values() const { return node_->value; }
  std::vector<double>& values() { return node_->value; }

  double item() const {
    if (!is_scalar()) throw NumericError("item() on non-scalar tensor");
    return node_->value[0];
  }

  bool requires_grad() const { return node_->requires_grad; }

  /// Gradient buffer, allocated on first touch.
  std::vector<double>& grad() {
    if (node_->grad.size() != node_->value.size())
      node_->grad.assign(node_->value.size(), 0.0);
    return node_->grad;
  }
  const std::vector<double>& grad() const {
    return const_cast<Tensor*>(this)->grad();
  }

  void zero_grad() { node_->grad.assign(node_->value.size(), 0.0); }

  bool same_node(const Tensor& other) const { return node_ == other.node_; }

  static std::string shape_str(int r, int c) {
    return "(" + std::to_string(r) + "x" + std::to_string(c) + ")";
  }
  std::string shape_str() const { return shape_str(rows(), cols()); }

 private:
  struct Node {
    int rows = 0;
    int cols = 0;
    std::vector<double> value;
    std::vector<double> grad;
    bool requires_grad = false;
  };
  std::shared_ptr<Node> node_;
};

}  // namespace gridsynth::ad
