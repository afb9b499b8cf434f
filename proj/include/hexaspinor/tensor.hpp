#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include <hexaspinor/types.hpp>

namespace hexaspinor {

// Dense complex tensor of dynamic rank, row-major storage.  This is the
// carrier for every indexed symbol that does not fit a fixed-size Eigen
// matrix: epsilon symbols, the A-operators, curvature tensors and their
// spinor images.
template <class Scalar>
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<int> shape)
      : shape_(std::move(shape)), data_(checked_size(shape_), Scalar(0)) {}

  Tensor(std::vector<int> shape, std::vector<Scalar> entries)
      : shape_(std::move(shape)), data_(std::move(entries)) {
    if (data_.size() != checked_size(shape_))
      throw input_error("Tensor: entry count does not match shape");
    for (const Scalar& v : data_)
      if (!std::isfinite(std::abs(v))) throw input_error("Tensor: non-finite entry");
  }

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  std::size_t size() const { return data_.size(); }
  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }

  Scalar& operator()(std::initializer_list<int> idx) { return data_[flat(idx.begin(), idx.size())]; }
  const Scalar& operator()(std::initializer_list<int> idx) const {
    return data_[flat(idx.begin(), idx.size())];
  }
  Scalar& at(const std::vector<int>& idx) { return data_[flat(idx.data(), idx.size())]; }
  const Scalar& at(const std::vector<int>& idx) const { return data_[flat(idx.data(), idx.size())]; }

  double max_abs() const {
    double m = 0;
    for (const Scalar& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  Tensor& operator+=(const Tensor& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Tensor& operator*=(Scalar s) {
    for (Scalar& v : data_) v *= s;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Scalar s, Tensor t) { return t *= s; }

  // Axis permutation: out[i_0,...] = in[i_{perm[0]}, ...]; perm[k] names the
  // input axis that becomes output axis k.
  Tensor transposed(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != rank()) throw input_error("transpose: bad permutation");
    std::vector<int> nshape(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) nshape[k] = shape_[perm[k]];
    Tensor out(nshape);
    std::vector<int> idx(rank(), 0), src(rank(), 0);
    for (std::size_t f = 0; f < out.data_.size(); ++f) {
      out.unflatten(f, idx);
      for (std::size_t k = 0; k < perm.size(); ++k) src[perm[k]] = idx[k];
      out.data_[f] = at(src);
    }
    return out;
  }

  void unflatten(std::size_t flat_index, std::vector<int>& idx) const {
    for (int k = rank() - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(flat_index % shape_[k]);
      flat_index /= shape_[k];
    }
  }

 private:
  static std::size_t checked_size(const std::vector<int>& shape) {
    std::size_t n = 1;
    for (int d : shape) {
      if (d < 1) throw input_error("Tensor: shape dimensions must be >= 1");
      n *= static_cast<std::size_t>(d);
    }
    return n;
  }

  template <class It>
  std::size_t flat(It idx, std::size_t n) const {
    std::size_t f = 0;
    for (std::size_t k = 0; k < n; ++k) f = f * shape_[k] + static_cast<std::size_t>(idx[k]);
    return f;
  }

  void require_same_shape(const Tensor& o) const {
    if (shape_ != o.shape_) throw input_error("Tensor: shape mismatch");
  }

  std::vector<int> shape_;
  std::vector<Scalar> data_;
};

using CTensor = Tensor<cd>;

namespace detail {

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace detail

// Standard contraction of t1 and t2 over the given (axis-of-t1, axis-of-t2)
// pairs.  Result shape: unpaired axes of t1 followed by unpaired axes of t2.
template <class Scalar>
Tensor<Scalar> contract(const Tensor<Scalar>& t1, const Tensor<Scalar>& t2,
                        const std::vector<std::pair<int, int>>& axis_pairs) {
  std::vector<bool> used1(t1.rank(), false), used2(t2.rank(), false);
  std::vector<int> cdims;
  for (auto [a1, a2] : axis_pairs) {
    if (a1 < 0 || a1 >= t1.rank() || a2 < 0 || a2 >= t2.rank())
      throw input_error("contract: axis out of range");
    if (used1[a1] || used2[a2]) throw input_error("contract: repeated axis");
    if (t1.shape()[a1] != t2.shape()[a2])
      throw input_error("contract: dimension mismatch on contracted pair");
    used1[a1] = used2[a2] = true;
    cdims.push_back(t1.shape()[a1]);
  }
  std::vector<int> free1, free2, out_shape;
  for (int k = 0; k < t1.rank(); ++k)
    if (!used1[k]) { free1.push_back(k); out_shape.push_back(t1.shape()[k]); }
  for (int k = 0; k < t2.rank(); ++k)
    if (!used2[k]) { free2.push_back(k); out_shape.push_back(t2.shape()[k]); }
  if (out_shape.empty()) out_shape.push_back(1);  // rank-0 result stored as shape {1}

  Tensor<Scalar> out(out_shape);
  const bool scalar_out = free1.empty() && free2.empty();

  std::vector<int> oidx(out.rank(), 0), i1(t1.rank(), 0), i2(t2.rank(), 0);
  std::size_t ncontr = 1;
  for (int d : cdims) ncontr *= static_cast<std::size_t>(d);

  for (std::size_t f = 0; f < out.size(); ++f) {
    out.unflatten(f, oidx);
    if (!scalar_out) {
      for (std::size_t k = 0; k < free1.size(); ++k) i1[free1[k]] = oidx[k];
      for (std::size_t k = 0; k < free2.size(); ++k) i2[free2[k]] = oidx[free1.size() + k];
    }
    Scalar acc(0);
    std::vector<int> c(cdims.size(), 0);
    for (std::size_t n = 0; n < ncontr; ++n) {
      std::size_t rem = n;
      for (int k = static_cast<int>(cdims.size()) - 1; k >= 0; --k) {
        c[k] = static_cast<int>(rem % cdims[k]);
        rem /= cdims[k];
      }
      for (std::size_t k = 0; k < axis_pairs.size(); ++k) {
        i1[axis_pairs[k].first] = c[k];
        i2[axis_pairs[k].second] = c[k];
      }
      acc += t1.at(i1) * t2.at(i2);
    }
    out.data()[f] = acc;
  }
  return out;
}

// Antisymmetrization over the listed axes: average of all their permutations
// weighted by permutation sign.  Idempotent.
template <class Scalar>
Tensor<Scalar> antisymmetrize(const Tensor<Scalar>& t, const std::vector<int>& axes) {
  for (int a : axes)
    if (a < 0 || a >= t.rank()) throw input_error("antisymmetrize: axis out of range");
  const int dim = t.shape()[axes[0]];
  for (int a : axes)
    if (t.shape()[a] != dim) throw input_error("antisymmetrize: listed axes must share a dimension");

  std::vector<int> order(axes.size());
  std::iota(order.begin(), order.end(), 0);
  Tensor<Scalar> out(t.shape());
  std::vector<int> idx(t.rank(), 0), src(t.rank(), 0);
  double count = 0;
  do {
    const int sign = detail::permutation_sign(order);
    count += 1;
    for (std::size_t f = 0; f < out.size(); ++f) {
      out.unflatten(f, idx);
      src = idx;
      for (std::size_t k = 0; k < axes.size(); ++k) src[axes[k]] = idx[axes[order[k]]];
      out.data()[f] += Scalar(sign) * t.at(src);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  out *= Scalar(1.0 / count);
  return out;
}

template <class Scalar>
bool approx_equal(const Tensor<Scalar>& t1, const Tensor<Scalar>& t2, const Tolerance& tol = {}) {
  if (t1.shape() != t2.shape()) throw input_error("approx_equal: shape mismatch");
  const double scale = std::max(t1.max_abs(), t2.max_abs());
  double dev = 0;
  for (std::size_t i = 0; i < t1.size(); ++i)
    dev = std::max(dev, std::abs(t1.data()[i] - t2.data()[i]));
  return dev <= tol.absolute + tol.relative * scale;
}

// Rank-n alternating symbol with eps_{0,1,...,n-1} = scale.
template <class Scalar>
Tensor<Scalar> levi_civita(int n, Scalar scale = Scalar(1)) {
  Tensor<Scalar> e(std::vector<int>(n, n));
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    e.at(p) = Scalar(detail::permutation_sign(p)) * scale;
  } while (std::next_permutation(p.begin(), p.end()));
  return e;
}

// The rank-4 alternating symbol eps_{abcd} with eps_{1234} = eps.
struct Epsilon4 {
  cd eps = cd(1, 0);
  CTensor lower() const { return levi_civita<cd>(4, eps); }
  // eps^{abcd}, normalized so the standard contraction identities hold.
  CTensor upper() const { return levi_civita<cd>(4, cd(1, 0) / eps); }
};

}  // namespace hexaspinor
