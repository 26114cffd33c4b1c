#ifndef DSLAB_CESARO_HPP
#define DSLAB_CESARO_HPP

// Cesaro binomial coefficients A_n^alpha = (alpha+1)...(alpha+n)/n!, kept as
// an exact table per alpha. A_0^alpha = 1 (the empty product), which is what
// makes sum_{k=1}^n A_{n-k}^{alpha-1} = A_n^alpha an identity.

#include <mutex>
#include <vector>

#include "dslab/rational.hpp"

namespace dslab {

class CesaroTable {
 public:
  explicit CesaroTable(const Rat& alpha);

  const Rat& alpha() const { return alpha_; }

  // A_n^alpha; thread-safe, values are append-only.
  Rat at(std::size_t n) const;

 private:
  Rat alpha_;
  mutable std::mutex mutex_;
  mutable std::vector<Rat> table_;
};

// A single coefficient; alpha must avoid the poles -1, -2, ...
Rat cesaro_coefficient(const Rat& alpha, std::size_t n);

}  // namespace dslab

#endif  // DSLAB_CESARO_HPP
