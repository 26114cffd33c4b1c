#ifndef DSLAB_KERNELS_HPP
#define DSLAB_KERNELS_HPP

// Dirichlet, Fejer, (C,alpha) and Norlund kernels as sampled functions.
// Dirichlet kernels and the integer numerators n*K_n are built by direct
// summation of the system functions and cached by (kind, n, system, N),
// since verification sweeps reuse them heavily.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dslab/cesaro.hpp"
#include "dslab/systems.hpp"
#include "dslab/transforms.hpp"
#include "dslab/weights.hpp"

namespace dslab {

enum class KernelKind { dirichlet, fejer, cesaro, norlund };

std::string kernel_kind_name(KernelKind k);

template <typename S>
struct Kernel {
  KernelKind kind;
  std::uint64_t n = 0;
  System system = System::walsh_paley;
  Rat alpha;               // cesaro only
  std::string weight_key;  // norlund only
  SampledFunction<S> data;
};

// D_n = sum_{i<n} psi_i; D_0 = 0. Integer-valued.
// Shared cached table, one entry per cell.
std::shared_ptr<const std::vector<std::int64_t>> dirichlet_table(
    std::uint64_t n, System system, int resolution);

// n*K_n = sum_{k=1}^{n} D_k = sum_{i<n} (n-i) psi_i. Integer-valued.
std::shared_ptr<const std::vector<std::int64_t>> fejer_numerator_table(
    std::uint64_t n, System system, int resolution);

// Populate the Dirichlet cache for every order 1..n_max in one incremental
// pass (cheaper than n_max separate direct summations, identical values).
void warm_dirichlet_tables(std::uint64_t n_max, System system, int resolution);

template <typename S>
Kernel<S> dirichlet_kernel(std::uint64_t n, System system, int resolution);

template <typename S>
Kernel<S> fejer_kernel(std::uint64_t n, System system, int resolution);

template <typename S>
Kernel<S> cesaro_kernel(std::uint64_t n, const Rat& alpha, System system,
                        int resolution);

template <typename S>
Kernel<S> norlund_kernel(std::uint64_t n, const WeightSequence& q,
                         System system, int resolution);

// --- implementation ---

namespace detail {

template <typename S>
S scalar_from_rat(const Rat& r) {
  if constexpr (std::is_same_v<S, double>) {
    return r.get_d();
  } else {
    return r;
  }
}

template <typename S>
std::vector<S> int_table_values(const std::vector<std::int64_t>& table) {
  std::vector<S> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    out[i] = S(static_cast<long>(table[i]));
  }
  return out;
}

}  // namespace detail

template <typename S>
Kernel<S> dirichlet_kernel(std::uint64_t n, System system, int resolution) {
  if (n > cell_count(resolution))
    throw ResolutionError("dirichlet order exceeds 2^resolution");
  auto table = dirichlet_table(n, system, resolution);
  return Kernel<S>{KernelKind::dirichlet, n, system, Rat(0), "",
                   SampledFunction<S>(resolution,
                                      detail::int_table_values<S>(*table))};
}

template <typename S>
Kernel<S> fejer_kernel(std::uint64_t n, System system, int resolution) {
  if (n == 0) throw std::domain_error("fejer kernel needs n >= 1");
  if (n > cell_count(resolution))
    throw ResolutionError("fejer order exceeds 2^resolution");
  auto numer = fejer_numerator_table(n, system, resolution);
  std::vector<S> vals(numer->size());
  const S div = detail::scalar_from_rat<S>(Rat(static_cast<unsigned long>(n)));
  for (std::size_t i = 0; i < vals.size(); ++i) {
    vals[i] = S(static_cast<long>((*numer)[i])) / div;
  }
  return Kernel<S>{KernelKind::fejer, n, system, Rat(0), "",
                   SampledFunction<S>(resolution, std::move(vals))};
}

// The (C,alpha) kernel, taken as the Norlund kernel with q_k = A_k^{alpha-1}:
// normalizer Q_n = sum_{k=1}^{n} A_{n-k}^{alpha-1} = A_{n-1}^{alpha}.
template <typename S>
Kernel<S> cesaro_kernel(std::uint64_t n, const Rat& alpha, System system,
                        int resolution) {
  if (n == 0) throw std::domain_error("cesaro kernel needs n >= 1");
  if (n > cell_count(resolution))
    throw ResolutionError("cesaro order exceeds 2^resolution");
  CesaroTable low(alpha - 1);
  const std::size_t cells = cell_count(resolution);
  std::vector<S> acc(cells, S(0));
  Rat norm_exact(0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    auto dk = dirichlet_table(k, system, resolution);
    const Rat w_exact = low.at(static_cast<std::size_t>(n - k));
    norm_exact += w_exact;
    const S w = detail::scalar_from_rat<S>(w_exact);
    for (std::size_t c = 0; c < cells; ++c) {
      acc[c] += w * S(static_cast<long>((*dk)[c]));
    }
  }
  const S norm = detail::scalar_from_rat<S>(norm_exact);
  for (S& v : acc) v /= norm;
  return Kernel<S>{KernelKind::cesaro, n, system, alpha, "",
                   SampledFunction<S>(resolution, std::move(acc))};
}

template <typename S>
Kernel<S> norlund_kernel(std::uint64_t n, const WeightSequence& q,
                         System system, int resolution) {
  if (n == 0) throw std::domain_error("norlund kernel needs n >= 1");
  if (n > cell_count(resolution))
    throw ResolutionError("norlund order exceeds 2^resolution");
  const std::size_t cells = cell_count(resolution);
  std::vector<S> acc(cells, S(0));
  std::vector<S> w(n);
  if constexpr (std::is_same_v<S, double>) {
    auto qp = q.qf_prefix(n);
    for (std::uint64_t k = 1; k <= n; ++k) w[k - 1] = qp[n - k];
  } else {
    auto qp = q.q_prefix(n);
    for (std::uint64_t k = 1; k <= n; ++k) w[k - 1] = qp[n - k];
  }
  for (std::uint64_t k = 1; k <= n; ++k) {
    auto dk = dirichlet_table(k, system, resolution);
    const S& wk = w[k - 1];
    if (wk == S(0)) continue;
    for (std::size_t c = 0; c < cells; ++c) {
      acc[c] += wk * S(static_cast<long>((*dk)[c]));
    }
  }
  S qn;
  if constexpr (std::is_same_v<S, double>) {
    qn = q.Qf(n);
  } else {
    qn = q.Q(n);
  }
  if (qn == S(0)) throw DegenerateWeightsError("Q_n = 0");
  for (S& v : acc) v /= qn;
  return Kernel<S>{KernelKind::norlund, n, system, Rat(0), q.key(),
                   SampledFunction<S>(resolution, std::move(acc))};
}

}  // namespace dslab

#endif  // DSLAB_KERNELS_HPP
