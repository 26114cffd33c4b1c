#include "dslab/dyadic.hpp"

#include <bit>

namespace dslab {

DyadicPoint DyadicPoint::from_bits(const std::vector<int>& bits) {
  int n = static_cast<int>(bits.size());
  std::uint32_t idx = 0;
  for (int k = 0; k < n; ++k) {
    if (bits[k] != 0 && bits[k] != 1)
      throw std::invalid_argument("coordinates must be 0 or 1");
    idx = (idx << 1) | static_cast<std::uint32_t>(bits[k]);
  }
  return DyadicPoint(n, idx);
}

DyadicPoint DyadicPoint::unit(int resolution, int k) {
  if (k < 0 || k >= resolution)
    throw ResolutionError("unit coordinate beyond resolution");
  return DyadicPoint(resolution,
                     std::uint32_t{1} << (resolution - 1 - k));
}

std::vector<int> DyadicPoint::bits() const {
  std::vector<int> out(resolution_);
  for (int k = 0; k < resolution_; ++k) out[k] = bit(k);
  return out;
}

DyadicInterval DyadicInterval::around(const DyadicPoint& x, int rank) {
  if (rank < 0 || rank > x.resolution())
    throw ResolutionError("interval rank beyond point resolution");
  return DyadicInterval(rank, x.index() >> (x.resolution() - rank));
}

bool DyadicInterval::contains(const DyadicPoint& x) const {
  if (rank_ > x.resolution())
    throw ResolutionError("interval rank beyond point resolution");
  return (x.index() >> (x.resolution() - rank_)) == anchor_;
}

int bit_length(std::uint64_t n) {
  if (n == 0) throw std::domain_error("|0| is undefined");
  return std::bit_width(n) - 1;
}

IndexExpansion decompose(std::uint64_t n) {
  if (n == 0) throw std::domain_error("decompose requires n >= 1");
  IndexExpansion e;
  e.n = n;
  e.top = bit_length(n);
  e.digits.assign(e.top + 1, 0);
  for (int i = 0; i <= e.top; ++i) e.digits[i] = (n >> i) & 1u;
  std::uint64_t rest = n;
  e.tails.push_back(rest);
  while (rest != 0) {
    int j = bit_length(rest);
    e.exponents.push_back(j);
    rest -= std::uint64_t{1} << j;
    e.tails.push_back(rest);
  }
  return e;
}

CellRange interval_cells(const DyadicInterval& interval, int resolution) {
  if (interval.rank() > resolution)
    throw ResolutionError("interval rank exceeds resolution");
  std::size_t width = std::size_t{1} << (resolution - interval.rank());
  CellRange r;
  r.begin = static_cast<std::size_t>(interval.anchor()) * width;
  r.end = r.begin + width;
  return r;
}

}  // namespace dslab
