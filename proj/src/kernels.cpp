#include "dslab/kernels.hpp"

#include <bit>
#include <map>
#include <tuple>

namespace dslab {

std::string kernel_kind_name(KernelKind k) {
  switch (k) {
    case KernelKind::dirichlet: return "dirichlet";
    case KernelKind::fejer: return "fejer";
    case KernelKind::cesaro: return "cesaro";
    case KernelKind::norlund: return "norlund";
  }
  return "?";
}

CesaroTable::CesaroTable(const Rat& alpha) : alpha_(alpha) {
  if (alpha.get_den() == 1 && alpha <= -1) {
    throw std::domain_error("cesaro alpha must avoid -1, -2, ...");
  }
  table_.push_back(Rat(1));  // A_0 = 1
}

Rat CesaroTable::at(std::size_t n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (table_.size() <= n) {
    std::size_t j = table_.size();
    Rat next = table_.back() * (alpha_ + static_cast<long>(j)) /
               Rat(static_cast<long>(j));
    table_.push_back(next);
  }
  return table_[n];
}

Rat cesaro_coefficient(const Rat& alpha, std::size_t n) {
  return CesaroTable(alpha).at(n);
}

namespace {

using TableKey = std::tuple<char, std::uint64_t, int, int>;
using TablePtr = std::shared_ptr<const std::vector<std::int64_t>>;

std::mutex table_mutex;
std::map<TableKey, TablePtr> table_cache;

TablePtr cache_find(const TableKey& key) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto it = table_cache.find(key);
  return it == table_cache.end() ? nullptr : it->second;
}

TablePtr cache_store(const TableKey& key, std::vector<std::int64_t> values) {
  auto ptr = std::make_shared<const std::vector<std::int64_t>>(
      std::move(values));
  std::lock_guard<std::mutex> lock(table_mutex);
  auto [it, inserted] = table_cache.emplace(key, ptr);
  // Concurrent writers compute identical values; keep the first.
  return it->second;
}

std::vector<std::uint32_t> cell_reversal(int resolution) {
  const std::size_t cells = cell_count(resolution);
  std::vector<std::uint32_t> rev(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    std::uint32_t r = 0, x = static_cast<std::uint32_t>(c);
    for (int i = 0; i < resolution; ++i) {
      r = (r << 1) | (x & 1u);
      x >>= 1;
    }
    rev[c] = r;
  }
  return rev;
}

// Adds psi_i to acc over every cell. Signs come from the defining formulas:
// w_i via popcount against the bit-reversed cell, kappa_i via the r_{|i|}
// coordinate plus the reversed low digits.
void accumulate_row(std::vector<std::int64_t>& acc, std::uint64_t i,
                    System system, int resolution,
                    const std::vector<std::uint32_t>& rev,
                    std::int64_t weight) {
  const std::size_t cells = acc.size();
  if (i == 0) {
    for (std::size_t c = 0; c < cells; ++c) acc[c] += weight;
    return;
  }
  if (system == System::walsh_paley) {
    const std::uint32_t mask = static_cast<std::uint32_t>(i);
    for (std::size_t c = 0; c < cells; ++c) {
      acc[c] += (std::popcount(mask & rev[c]) & 1) ? -weight : weight;
    }
    return;
  }
  const int m = bit_length(i);
  const std::uint32_t low =
      static_cast<std::uint32_t>(i) & ((std::uint32_t{1} << m) - 1u);
  const int top_shift = resolution - m;
  const int rm_shift = resolution - 1 - m;
  for (std::size_t c = 0; c < cells; ++c) {
    const std::uint32_t cu = static_cast<std::uint32_t>(c);
    int parity = static_cast<int>((cu >> rm_shift) & 1u);
    parity ^= std::popcount(low & (cu >> top_shift)) & 1;
    acc[c] += parity ? -weight : weight;
  }
}

}  // namespace

std::shared_ptr<const std::vector<std::int64_t>> dirichlet_table(
    std::uint64_t n, System system, int resolution) {
  if (n > cell_count(resolution))
    throw ResolutionError("dirichlet order exceeds 2^resolution");
  TableKey key{'D', n, static_cast<int>(system), resolution};
  if (auto hit = cache_find(key)) return hit;
  std::vector<std::int64_t> acc(cell_count(resolution), 0);
  auto rev = cell_reversal(resolution);
  for (std::uint64_t i = 0; i < n; ++i) {
    accumulate_row(acc, i, system, resolution, rev, 1);
  }
  return cache_store(key, std::move(acc));
}

std::shared_ptr<const std::vector<std::int64_t>> fejer_numerator_table(
    std::uint64_t n, System system, int resolution) {
  if (n > cell_count(resolution))
    throw ResolutionError("fejer order exceeds 2^resolution");
  TableKey key{'P', n, static_cast<int>(system), resolution};
  if (auto hit = cache_find(key)) return hit;
  std::vector<std::int64_t> acc(cell_count(resolution), 0);
  auto rev = cell_reversal(resolution);
  for (std::uint64_t i = 0; i < n; ++i) {
    accumulate_row(acc, i, system, resolution, rev,
                   static_cast<std::int64_t>(n - i));
  }
  return cache_store(key, std::move(acc));
}

void warm_dirichlet_tables(std::uint64_t n_max, System system,
                           int resolution) {
  if (n_max > cell_count(resolution))
    throw ResolutionError("dirichlet order exceeds 2^resolution");
  std::vector<std::int64_t> acc(cell_count(resolution), 0);
  auto rev = cell_reversal(resolution);
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    accumulate_row(acc, k - 1, system, resolution, rev, 1);
    TableKey key{'D', k, static_cast<int>(system), resolution};
    if (!cache_find(key)) cache_store(key, acc);
  }
}

}  // namespace dslab
