#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shapetok/common.hpp"

namespace shapetok::diff {

// Dense row-major float64 array, rank 0..2 in practice (scalars are {1}).
struct Tensor {
  std::vector<int64_t> shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::vector<int64_t> s, std::vector<double> d);

  static Tensor zeros(std::vector<int64_t> shape);
  static Tensor full(std::vector<int64_t> shape, double value);
  static Tensor scalar(double value);
  static Tensor row(std::vector<double> values);                   // (1,n)
  static Tensor matrix(int64_t r, int64_t c, std::vector<double>); // (r,c)

  int64_t numel() const;
  // 2-D accessors; rank-1 tensors are treated as a single row.
  int64_t rows() const;
  int64_t cols() const;
  double& at(int64_t r, int64_t c) { return data[r * cols() + c]; }
  double at(int64_t r, int64_t c) const { return data[r * cols() + c]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }
  bool all_finite() const;
};

// Named parameter store with a mirrored gradient map.
class ModelParams {
 public:
  Tensor& add(const std::string& path, Tensor value);
  bool has(const std::string& path) const;
  Tensor& value(const std::string& path);
  const Tensor& value(const std::string& path) const;
  Tensor& grad(const std::string& path);
  const Tensor& grad(const std::string& path) const;

  void zero_grads();
  std::vector<std::string> paths() const;  // sorted (map order)
  size_t size() const { return values_.size(); }
  int64_t total_elements() const;

  const std::map<std::string, Tensor>& values() const { return values_; }
  std::map<std::string, Tensor>& values() { return values_; }

 private:
  std::map<std::string, Tensor> values_;
  std::map<std::string, Tensor> grads_;
};

// matmul helpers used by forward ops and backward rules
Tensor mm(const Tensor& a, const Tensor& b);     // a (m,k) * b (k,n)
Tensor mm_nt(const Tensor& a, const Tensor& b);  // a (m,k) * b^T (n,k)
Tensor mm_tn(const Tensor& a, const Tensor& b);  // a^T (k,m) * b (k,n)

}  // namespace shapetok::diff
