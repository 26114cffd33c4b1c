#ifndef DSLAB_DYADIC_HPP
#define DSLAB_DYADIC_HPP

// Bit-level model of the truncated dyadic group: points with a fixed
// resolution, dyadic intervals, and binary expansions of indices.
//
// Cell indexing puts x_0 in the most significant position, so the rank-n
// interval around a point is always a contiguous slice of cells.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dslab/rational.hpp"

namespace dslab {

struct ResolutionError : std::runtime_error {
  explicit ResolutionError(const std::string& what)
      : std::runtime_error(what) {}
};

constexpr int kMaxResolution = 26;

inline std::size_t cell_count(int resolution) {
  if (resolution < 0 || resolution > kMaxResolution)
    throw ResolutionError("resolution out of range");
  return std::size_t{1} << resolution;
}

// One point of the truncated group: the first `resolution` coordinates
// (x_0, ..., x_{N-1}), packed into a cell index with x_0 as MSB.
class DyadicPoint {
 public:
  DyadicPoint(int resolution, std::uint32_t cell_index)
      : resolution_(resolution), index_(cell_index) {
    if (cell_index >= cell_count(resolution))
      throw std::invalid_argument("cell index out of range");
  }

  static DyadicPoint from_bits(const std::vector<int>& bits);
  static DyadicPoint zero(int resolution) { return DyadicPoint(resolution, 0); }
  // e_k: the k-th coordinate is 1, the rest 0.
  static DyadicPoint unit(int resolution, int k);

  int resolution() const { return resolution_; }
  std::uint32_t index() const { return index_; }

  int bit(int k) const {
    if (k < 0 || k >= resolution_)
      throw ResolutionError("coordinate index beyond resolution");
    return (index_ >> (resolution_ - 1 - k)) & 1u;
  }

  std::vector<int> bits() const;

  bool operator==(const DyadicPoint& other) const = default;

 private:
  int resolution_;
  std::uint32_t index_;
};

// I_rank(x): all points sharing the first `rank` coordinates. The anchor is
// the shared prefix, packed MSB-first.
class DyadicInterval {
 public:
  DyadicInterval(int rank, std::uint32_t anchor) : rank_(rank), anchor_(anchor) {
    if (anchor >= cell_count(rank))
      throw std::invalid_argument("anchor out of range for rank");
  }

  static DyadicInterval whole() { return DyadicInterval(0, 0); }
  static DyadicInterval around(const DyadicPoint& x, int rank);

  int rank() const { return rank_; }
  std::uint32_t anchor() const { return anchor_; }

  Rat measure() const { return pow2_rat(-rank_); }

  bool contains(const DyadicPoint& x) const;

  bool operator==(const DyadicInterval& other) const = default;

 private:
  int rank_;
  std::uint32_t anchor_;
};

struct CellRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open
  std::size_t size() const { return end - begin; }
};

// Binary expansion of n >= 1: digits, the top exponent |n|, the descending
// exponents n_1 > ... > n_r, and the tails n^(k) left after dropping the k
// largest powers (n^(0) = n, n^(r) = 0).
struct IndexExpansion {
  std::uint64_t n = 0;
  std::vector<int> digits;      // digits[i] = n_i, least significant first
  int top = 0;                  // |n|
  std::vector<int> exponents;   // descending
  std::vector<std::uint64_t> tails;  // tails[k] = n^(k), size r+1

  int rank() const { return static_cast<int>(exponents.size()); }
};

// |n| = max{j : n_j != 0}; |0| is undefined and reported as a domain error.
int bit_length(std::uint64_t n);

IndexExpansion decompose(std::uint64_t n);

// The contiguous cell indices at the given resolution whose points lie in I.
CellRange interval_cells(const DyadicInterval& interval, int resolution);

}  // namespace dslab

#endif  // DSLAB_DYADIC_HPP
