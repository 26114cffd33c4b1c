#ifndef DSLAB_TRANSFORMS_HPP
#define DSLAB_TRANSFORMS_HPP

// Sampled functions on the truncated group and their fast Walsh-Paley /
// Walsh-Kaczmarz transforms. A single butterfly core produces Paley-ordered
// coefficients; the Kaczmarz ordering is a per-block permutation of those.

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "dslab/dyadic.hpp"
#include "dslab/systems.hpp"

namespace dslab {

template <typename S>
constexpr const char* numeric_mode_name() {
  if constexpr (std::is_same_v<S, double>) {
    return "float";
  } else {
    return "exact";
  }
}

// A function constant on each rank-N dyadic cell, stored cell by cell.
template <typename S>
class SampledFunction {
 public:
  explicit SampledFunction(int resolution)
      : resolution_(resolution), values_(cell_count(resolution), S(0)) {}
  SampledFunction(int resolution, std::vector<S> values)
      : resolution_(resolution), values_(std::move(values)) {
    if (values_.size() != cell_count(resolution))
      throw std::invalid_argument("value count must be 2^resolution");
  }

  int resolution() const { return resolution_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<S>& values() const { return values_; }
  std::vector<S>& values() { return values_; }
  const S& operator[](std::size_t cell) const { return values_[cell]; }
  S& operator[](std::size_t cell) { return values_[cell]; }

  S value_at(const DyadicPoint& x) const {
    if (x.resolution() != resolution_)
      throw ResolutionError("point resolution mismatch");
    return values_[x.index()];
  }

  S mean() const {
    S acc(0);
    for (const S& v : values_) acc += v;
    return acc / S(static_cast<long>(values_.size()));
  }

  bool operator==(const SampledFunction& other) const = default;

 private:
  int resolution_;
  std::vector<S> values_;
};

template <typename S>
struct CoefficientVector {
  System system = System::walsh_paley;
  int resolution = 0;
  std::vector<S> coeffs;
};

namespace detail {

// In-place unnormalized Walsh-Hadamard butterfly.
template <typename S>
void butterfly(std::vector<S>& v) {
  const std::size_t n = v.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        S a = v[j];
        S b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

inline std::uint32_t reverse_bits(std::uint32_t x, int width) {
  std::uint32_t r = 0;
  for (int i = 0; i < width; ++i) {
    r = (r << 1) | ((x >> i) & 1u);
  }
  return r;
}

// Natural butterfly order vs. our MSB-first cell convention differ by a
// full bit reversal of the index.
template <typename S>
std::vector<S> apply_full_reversal(const std::vector<S>& v, int width) {
  std::vector<S> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[reverse_bits(static_cast<std::uint32_t>(i), width)] = v[i];
  }
  return out;
}

// The Paley<->Kaczmarz coefficient permutation: index 0 is fixed, every
// other index maps through lower_bit_reverse. Involution.
template <typename S>
std::vector<S> apply_block_reversal(const std::vector<S>& v) {
  std::vector<S> out(v.size());
  out[0] = v[0];
  for (std::size_t i = 1; i < v.size(); ++i) {
    out[i] = v[lower_bit_reverse(i)];
  }
  return out;
}

}  // namespace detail

// coeffs[i] = 2^{-N} sum_x f(x) psi_i(x).
template <typename S>
CoefficientVector<S> forward_transform(const SampledFunction<S>& f,
                                       System system) {
  const int n = f.resolution();
  std::vector<S> work = f.values();
  detail::butterfly(work);
  work = detail::apply_full_reversal(work, n);
  const S norm(static_cast<long>(f.size()));
  for (S& c : work) c /= norm;
  if (system == System::walsh_kaczmarz) {
    work = detail::apply_block_reversal(work);
  }
  return CoefficientVector<S>{system, n, std::move(work)};
}

template <typename S>
SampledFunction<S> inverse_transform(const CoefficientVector<S>& c) {
  std::vector<S> work = c.coeffs;
  if (c.system == System::walsh_kaczmarz) {
    work = detail::apply_block_reversal(work);
  }
  work = detail::apply_full_reversal(work, c.resolution);
  detail::butterfly(work);
  return SampledFunction<S>(c.resolution, std::move(work));
}

// S_M f = sum_{i<M} (coefficient i) psi_i ; S_0 = 0, S_{2^N} f = f.
template <typename S>
SampledFunction<S> partial_sum(const SampledFunction<S>& f, std::uint64_t m,
                               System system) {
  if (m > f.size())
    throw ResolutionError("partial sum order exceeds 2^resolution");
  CoefficientVector<S> c = forward_transform(f, system);
  for (std::size_t i = static_cast<std::size_t>(m); i < c.coeffs.size(); ++i) {
    c.coeffs[i] = S(0);
  }
  return inverse_transform(c);
}

// Refine a coarse sampling to a finer grid (the function is unchanged).
template <typename S>
SampledFunction<S> embed(const SampledFunction<S>& f, int resolution) {
  if (resolution < f.resolution())
    throw ResolutionError("embedding cannot lower resolution");
  const std::size_t rep = std::size_t{1} << (resolution - f.resolution());
  std::vector<S> out;
  out.reserve(f.size() * rep);
  for (const S& v : f.values()) {
    out.insert(out.end(), rep, v);
  }
  return SampledFunction<S>(resolution, std::move(out));
}

// Dyadic convolution (f*g)(x) = 2^{-N} sum_t f(x xor t) g(t); diagonal in
// the Paley basis.
template <typename S>
SampledFunction<S> convolve(const SampledFunction<S>& f,
                            const SampledFunction<S>& g) {
  if (f.resolution() != g.resolution())
    throw ResolutionError("convolution resolution mismatch");
  CoefficientVector<S> a = forward_transform(f, System::walsh_paley);
  CoefficientVector<S> b = forward_transform(g, System::walsh_paley);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] *= b.coeffs[i];
  return inverse_transform(a);
}

inline SampledFunction<double> to_float(const SampledFunction<Rat>& f) {
  std::vector<double> vals(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) vals[i] = f[i].get_d();
  return SampledFunction<double>(f.resolution(), std::move(vals));
}

}  // namespace dslab

#endif  // DSLAB_TRANSFORMS_HPP
