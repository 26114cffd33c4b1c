#ifndef DSLAB_MEANS_HPP
#define DSLAB_MEANS_HPP

// Summability means acting on sampled functions. Every mean here is a
// coefficient multiplier: t_n f = sum_i (coefficient i of f) * lambda_n(i)
// * psi_i, with lambda_n determined by the mean. That form is the exact
// collapse of the defining linear combination of partial sums and is valid
// in both orderings; the Paley-only convolution route is kept as an oracle.
//
// Conventions pinned here:
//   fejer          t_n with q == 1, i.e. (1/n) sum_{k=1..n} S_k
//   fejer_printed  sigma_n = (1/n) sum_{k=0..n-1} S_k (one-term shift)
//   riesz          (1/l_n) sum_{k=1..n-1} S_k/k   (the k=0 term would
//                  divide by zero, so the sum starts at 1)
//   norlund_log    (1/l_n) sum_{k=1..n-1} S_k/(n-k), l_n = sum_{k<n} 1/k

#include <cstdint>
#include <memory>

#include "dslab/cesaro.hpp"
#include "dslab/kernels.hpp"
#include "dslab/transforms.hpp"
#include "dslab/weights.hpp"

namespace dslab {

enum class MeanKind { norlund, fejer, fejer_printed, cesaro, riesz, norlund_log };

inline std::string mean_kind_name(MeanKind k) {
  switch (k) {
    case MeanKind::norlund: return "norlund";
    case MeanKind::fejer: return "fejer";
    case MeanKind::fejer_printed: return "fejer_printed";
    case MeanKind::cesaro: return "cesaro";
    case MeanKind::riesz: return "riesz";
    case MeanKind::norlund_log: return "norlund_log";
  }
  return "?";
}

struct MeanId {
  MeanKind kind = MeanKind::fejer;
  System system = System::walsh_paley;
  std::shared_ptr<WeightSequence> weights;  // norlund
  Rat alpha;                                // cesaro
  std::shared_ptr<CesaroTable> cesaro_table;

  static MeanId norlund(std::shared_ptr<WeightSequence> q, System s) {
    return MeanId{MeanKind::norlund, s, std::move(q), Rat(0), nullptr};
  }
  static MeanId fejer(System s) {
    return MeanId{MeanKind::fejer, s, nullptr, Rat(0), nullptr};
  }
  static MeanId fejer_printed(System s) {
    return MeanId{MeanKind::fejer_printed, s, nullptr, Rat(0), nullptr};
  }
  static MeanId cesaro(const Rat& alpha, System s) {
    return MeanId{MeanKind::cesaro, s, nullptr, alpha,
                  std::make_shared<CesaroTable>(alpha)};
  }
  static MeanId riesz(System s) {
    return MeanId{MeanKind::riesz, s, nullptr, Rat(0), nullptr};
  }
  static MeanId norlund_log(System s) {
    return MeanId{MeanKind::norlund_log, s, nullptr, Rat(0), nullptr};
  }
};

template <typename S>
S abs_of(const S& v) {
  if constexpr (std::is_same_v<S, double>) {
    return std::abs(v);
  } else {
    return v < 0 ? S(-v) : v;
  }
}

// lambda_n(i) for i = 0..count-1.
template <typename S>
std::vector<S> mean_multipliers(const MeanId& mean, std::uint64_t n,
                                std::size_t count) {
  if (n == 0) throw std::domain_error("mean order must be positive");
  if ((mean.kind == MeanKind::riesz || mean.kind == MeanKind::norlund_log) &&
      n < 2) {
    throw std::domain_error("logarithmic means need n >= 2");
  }
  std::vector<S> lam(count, S(0));
  const std::size_t top = std::min<std::uint64_t>(n, count);
  switch (mean.kind) {
    case MeanKind::norlund: {
      if (!mean.weights) throw std::invalid_argument("norlund mean needs weights");
      if constexpr (std::is_same_v<S, double>) {
        auto Q = mean.weights->Qf_prefix(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < top; ++i) lam[i] = Q[n - i] / Q[n];
      } else {
        auto Q = mean.weights->Q_prefix(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < top; ++i) lam[i] = Q[n - i] / Q[n];
      }
      break;
    }
    case MeanKind::fejer: {
      const S dn(static_cast<long>(n));
      for (std::size_t i = 0; i < top; ++i)
        lam[i] = S(static_cast<long>(n - i)) / dn;
      break;
    }
    case MeanKind::fejer_printed: {
      const S dn(static_cast<long>(n));
      for (std::size_t i = 0; i < top; ++i)
        lam[i] = S(static_cast<long>(n - 1 - i)) / dn;
      break;
    }
    case MeanKind::cesaro: {
      // Norlund multipliers with q_k = A_k^{alpha-1}: Q_j = A_{j-1}^{alpha}.
      const auto& table = *mean.cesaro_table;
      const Rat qn = table.at(static_cast<std::size_t>(n - 1));
      for (std::size_t i = 0; i < top; ++i) {
        Rat r = table.at(static_cast<std::size_t>(n - i - 1)) / qn;
        lam[i] = detail::scalar_from_rat<S>(r);
      }
      break;
    }
    case MeanKind::riesz:
    case MeanKind::norlund_log: {
      // h[m] = 1 + 1/2 + ... + 1/m; l_n = h[n-1].
      std::vector<S> h(static_cast<std::size_t>(n), S(0));
      for (std::size_t m = 1; m < h.size(); ++m)
        h[m] = h[m - 1] + S(1) / S(static_cast<long>(m));
      const S ln = h[n - 1];
      if (mean.kind == MeanKind::riesz) {
        for (std::size_t i = 0; i < top; ++i) lam[i] = (ln - h[i]) / ln;
      } else {
        for (std::size_t i = 0; i < top; ++i) lam[i] = h[n - 1 - i] / ln;
      }
      break;
    }
  }
  return lam;
}

template <typename S>
SampledFunction<S> apply_multipliers(const CoefficientVector<S>& coeffs,
                                     const std::vector<S>& lam) {
  CoefficientVector<S> scaled = coeffs;
  for (std::size_t i = 0; i < scaled.coeffs.size(); ++i)
    scaled.coeffs[i] *= lam[i];
  return inverse_transform(scaled);
}

template <typename S>
SampledFunction<S> apply_mean(const MeanId& mean, std::uint64_t n,
                              const SampledFunction<S>& f) {
  if (n > f.size())
    throw ResolutionError("mean order exceeds 2^resolution");
  CoefficientVector<S> c = forward_transform(f, mean.system);
  auto lam = mean_multipliers<S>(mean, n, c.coeffs.size());
  return apply_multipliers(c, lam);
}

// Oracle route: convolution with the matching kernel. Paley only (the
// Kaczmarz system functions are not characters, so its means are not
// convolutions).
template <typename S>
SampledFunction<S> apply_mean_via_kernel(const MeanId& mean, std::uint64_t n,
                                         const SampledFunction<S>& f) {
  if (mean.system != System::walsh_paley)
    throw std::domain_error("kernel convolution route is Paley-only");
  if (n > f.size())
    throw ResolutionError("mean order exceeds 2^resolution");
  const int res = f.resolution();
  SampledFunction<S> kernel(res);
  switch (mean.kind) {
    case MeanKind::norlund:
      kernel = norlund_kernel<S>(n, *mean.weights, mean.system, res).data;
      break;
    case MeanKind::fejer:
      kernel = fejer_kernel<S>(n, mean.system, res).data;
      break;
    case MeanKind::cesaro:
      kernel = cesaro_kernel<S>(n, mean.alpha, mean.system, res).data;
      break;
    case MeanKind::fejer_printed: {
      // (1/n) sum_{k=0}^{n-1} D_k = P_{n-1}/n
      if (n >= 2) {
        auto p = fejer_numerator_table(n - 1, mean.system, res);
        auto vals = detail::int_table_values<S>(*p);
        const S dn(static_cast<long>(n));
        for (S& v : vals) v /= dn;
        kernel = SampledFunction<S>(res, std::move(vals));
      }
      break;
    }
    case MeanKind::riesz:
    case MeanKind::norlund_log: {
      if (n < 2) throw std::domain_error("logarithmic means need n >= 2");
      const std::size_t cells = cell_count(res);
      std::vector<S> acc(cells, S(0));
      S ln(0);
      for (std::uint64_t k = 1; k < n; ++k) ln += S(1) / S(static_cast<long>(k));
      for (std::uint64_t k = 1; k < n; ++k) {
        auto dk = dirichlet_table(k, mean.system, res);
        const S w = S(1) / S(static_cast<long>(mean.kind == MeanKind::riesz
                                                   ? k
                                                   : n - k));
        for (std::size_t c = 0; c < cells; ++c)
          acc[c] += w * S(static_cast<long>((*dk)[c]));
      }
      for (S& v : acc) v /= ln;
      kernel = SampledFunction<S>(res, std::move(acc));
      break;
    }
  }
  return convolve(f, kernel);
}

// Truncated maximal operator: pointwise max of |t_n f| over the admissible
// n up to n_max (n starts at 2 for the logarithmic means).
template <typename S>
SampledFunction<S> maximal_operator(const MeanId& mean,
                                    const SampledFunction<S>& f,
                                    std::uint64_t n_max) {
  if (n_max > f.size())
    throw ResolutionError("maximal range exceeds 2^resolution");
  const std::uint64_t start =
      (mean.kind == MeanKind::riesz || mean.kind == MeanKind::norlund_log) ? 2
                                                                           : 1;
  if (n_max < start)
    throw std::domain_error("maximal operator range is empty");
  CoefficientVector<S> c = forward_transform(f, mean.system);
  SampledFunction<S> out(f.resolution());
  for (std::uint64_t n = start; n <= n_max; ++n) {
    auto lam = mean_multipliers<S>(mean, n, c.coeffs.size());
    SampledFunction<S> t = apply_multipliers(c, lam);
    for (std::size_t i = 0; i < out.size(); ++i) {
      S a = abs_of(t[i]);
      if (a > out[i]) out[i] = a;
    }
  }
  return out;
}

// The dyadic filtration of a sampled function: level k holds the rank-k
// block averages (level N is the function itself).
template <typename S>
class FiniteMartingale {
 public:
  explicit FiniteMartingale(const SampledFunction<S>& f)
      : resolution_(f.resolution()) {
    levels_.resize(resolution_ + 1);
    levels_[resolution_] = f.values();
    for (int k = resolution_ - 1; k >= 0; --k) {
      const auto& fine = levels_[k + 1];
      auto& coarse = levels_[k];
      coarse.resize(fine.size() / 2);
      for (std::size_t b = 0; b < coarse.size(); ++b) {
        coarse[b] = (fine[2 * b] + fine[2 * b + 1]) / S(2);
      }
    }
  }

  int resolution() const { return resolution_; }

  // S_{2^k} f expanded back to full resolution.
  SampledFunction<S> level(int k) const {
    if (k < 0 || k > resolution_)
      throw ResolutionError("martingale level out of range");
    return embed(SampledFunction<S>(k, levels_[k]), resolution_);
  }

  S block_average(int k, std::size_t block) const { return levels_[k][block]; }

  // f*(x) = max_k |rank-k block average at x|.
  SampledFunction<S> maximal() const {
    SampledFunction<S> out(resolution_);
    for (std::size_t c = 0; c < out.size(); ++c) {
      S best = abs_of(levels_[0][0]);
      for (int k = 1; k <= resolution_; ++k) {
        S a = abs_of(levels_[k][c >> (resolution_ - k)]);
        if (a > best) best = a;
      }
      out[c] = best;
    }
    return out;
  }

 private:
  int resolution_;
  std::vector<std::vector<S>> levels_;
};

template <typename S>
SampledFunction<S> martingale_maximal(const SampledFunction<S>& f) {
  return FiniteMartingale<S>(f).maximal();
}

}  // namespace dslab

#endif  // DSLAB_MEANS_HPP
