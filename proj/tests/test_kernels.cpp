#include <doctest.h>

#include "dslab/kernels.hpp"
#include "test_util.hpp"

using namespace dslab;

namespace {

// Direct summation oracle for D_n straight from the definitions.
std::vector<long> direct_dirichlet(std::uint64_t n, System s, int resolution) {
  std::vector<long> out(cell_count(resolution), 0);
  for (std::uint32_t c = 0; c < out.size(); ++c) {
    DyadicPoint x(resolution, c);
    for (std::uint64_t i = 0; i < n; ++i) out[c] += system_eval(s, i, x);
  }
  return out;
}

}  // namespace

TEST_CASE("cesaro coefficients: pinned values and pole rejection") {
  CHECK(cesaro_coefficient(Rat(1), 5) == 6);      // A_n^1 = n+1
  CHECK(cesaro_coefficient(Rat(1, 2), 2) == Rat(15, 8));
  CHECK(cesaro_coefficient(Rat(1, 2), 0) == 1);   // A_0 = 1
  CHECK_THROWS_AS(cesaro_coefficient(Rat(-1), 3), std::domain_error);
  CHECK_THROWS_AS(cesaro_coefficient(Rat(-2), 3), std::domain_error);
  CHECK_NOTHROW(cesaro_coefficient(Rat(-1, 2), 3));
}

TEST_CASE("cesaro coefficient identities hold exactly up to n = 200") {
  for (Rat alpha : {Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(3, 4), Rat(1)}) {
    CesaroTable hi(alpha);
    CesaroTable lo(alpha - 1);
    Rat running(0);
    for (std::size_t n = 0; n <= 200; ++n) {
      if (n >= 1) CHECK(hi.at(n) - hi.at(n - 1) == lo.at(n));
      running += lo.at(n);
      // sum_{k=0}^{n} A_{n-k}^{alpha-1} = A_n^alpha (the printed k=1 lower
      // limit misses the k=0 term; see the next test)
      REQUIRE(running == hi.at(n));
    }
  }
}

TEST_CASE("the k=1..n sum equals A_{n-1}^alpha, one step behind") {
  CesaroTable hi(Rat(1, 2));
  CesaroTable lo(Rat(-1, 2));
  Rat sum(0);
  for (std::size_t k = 1; k <= 10; ++k) sum += lo.at(10 - k);
  CHECK(sum == hi.at(9));
  CHECK(sum != hi.at(10));
}

TEST_CASE("dirichlet kernels: closed form at dyadic orders, both systems") {
  for (int res = 1; res <= 6; ++res) {
    for (int m = 0; m <= res; ++m) {
      for (System s : {System::walsh_paley, System::walsh_kaczmarz}) {
        auto k = dirichlet_kernel<Rat>(std::uint64_t{1} << m, s, res);
        CellRange in = interval_cells(DyadicInterval(m, 0), res);
        for (std::size_t c = 0; c < k.data.size(); ++c) {
          Rat expect = (c >= in.begin && c < in.end)
                           ? Rat(std::int64_t{1} << m)
                           : Rat(0);
          REQUIRE(k.data[c] == expect);
        }
      }
    }
  }
}

TEST_CASE("dirichlet kernels: pinned small values and direct-sum oracle") {
  auto d0 = dirichlet_kernel<Rat>(0, System::walsh_paley, 2);
  CHECK(d0.data == SampledFunction<Rat>(2));  // D_0 = 0
  auto d1 = dirichlet_kernel<Rat>(1, System::walsh_kaczmarz, 2);
  CHECK(d1.data == SampledFunction<Rat>(2, std::vector<Rat>(4, Rat(1))));
  auto d3 = dirichlet_kernel<Rat>(3, System::walsh_paley, 2);
  CHECK(d3.data.values() ==
        std::vector<Rat>{Rat(3), Rat(1), Rat(1), Rat(-1)});

  for (System s : {System::walsh_paley, System::walsh_kaczmarz}) {
    for (std::uint64_t n : {std::uint64_t(5), std::uint64_t(11),
                            std::uint64_t(16)}) {
      auto fast = dirichlet_kernel<Rat>(n, s, 4);
      auto oracle = direct_dirichlet(n, s, 4);
      for (std::size_t c = 0; c < fast.data.size(); ++c)
        REQUIRE(fast.data[c] == Rat(oracle[c]));
    }
  }
  CHECK_THROWS_AS(dirichlet_kernel<Rat>(9, System::walsh_paley, 3),
                  ResolutionError);
}

TEST_CASE("warmed tables agree with individually built ones") {
  warm_dirichlet_tables(16, System::walsh_kaczmarz, 4);
  for (std::uint64_t n = 1; n <= 16; ++n) {
    auto t = dirichlet_table(n, System::walsh_kaczmarz, 4);
    auto oracle = direct_dirichlet(n, System::walsh_kaczmarz, 4);
    for (std::size_t c = 0; c < t->size(); ++c)
      REQUIRE((*t)[c] == oracle[c]);
  }
}

TEST_CASE("fejer kernels: K_1 = 1, peak value, averaging identity") {
  auto k1 = fejer_kernel<Rat>(1, System::walsh_paley, 3);
  CHECK(k1.data == SampledFunction<Rat>(3, std::vector<Rat>(8, Rat(1))));

  // K_n(0) = (n+1)/2 since D_k(0) = k
  for (std::uint64_t n = 1; n <= 16; ++n) {
    auto k = fejer_kernel<Rat>(n, System::walsh_paley, 4);
    CHECK(k.data[0] == Rat(static_cast<long>(n + 1)) / 2);
  }

  // n*K_n = sum_{k=1}^{n} D_k exactly, both systems
  for (System s : {System::walsh_paley, System::walsh_kaczmarz}) {
    for (std::uint64_t n : {std::uint64_t(3), std::uint64_t(7),
                            std::uint64_t(12)}) {
      auto k = fejer_kernel<Rat>(n, s, 4);
      SampledFunction<Rat> sum(4);
      for (std::uint64_t j = 1; j <= n; ++j) {
        auto d = dirichlet_kernel<Rat>(j, s, 4);
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += d.data[c];
      }
      for (std::size_t c = 0; c < sum.size(); ++c)
        REQUIRE(Rat(static_cast<long>(n)) * k.data[c] == sum[c]);
    }
  }
}

TEST_CASE("dyadic fejer kernels are nonnegative") {
  for (int j = 0; j <= 8; ++j) {
    auto k = fejer_kernel<Rat>(std::uint64_t{1} << j, System::walsh_paley, 9);
    for (std::size_t c = 0; c < k.data.size(); ++c) REQUIRE(k.data[c] >= 0);
  }
}

TEST_CASE("norlund kernel with constant weights is the fejer kernel") {
  auto q = WeightSequence::constant();
  for (std::uint64_t n : {std::uint64_t(1), std::uint64_t(5),
                          std::uint64_t(9)}) {
    auto f = norlund_kernel<Rat>(n, *q, System::walsh_paley, 4);
    auto k = fejer_kernel<Rat>(n, System::walsh_paley, 4);
    CHECK(f.data == k.data);
  }
}

TEST_CASE("norlund kernel with cesaro weights matches the direct (C,a) sum") {
  auto q = WeightSequence::cesaro(Rat(1, 2));
  CesaroTable lo(Rat(-1, 2));
  for (std::uint64_t n = 1; n <= 64; ++n) {
    auto fast = norlund_kernel<Rat>(n, *q, System::walsh_paley, 6);
    // oracle: (1/Q_n) sum A_{n-k}^{alpha-1} D_k with Q_n the weight sum
    SampledFunction<Rat> acc(6);
    Rat qn(0);
    for (std::uint64_t k = 1; k <= n; ++k) {
      Rat w = lo.at(static_cast<std::size_t>(n - k));
      qn += w;
      auto d = dirichlet_table(k, System::walsh_paley, 6);
      for (std::size_t c = 0; c < acc.size(); ++c)
        acc[c] += w * Rat(static_cast<long>((*d)[c]));
    }
    for (std::size_t c = 0; c < acc.size(); ++c)
      REQUIRE(fast.data[c] == acc[c] / qn);
    // and equals the cesaro kernel under the Norlund normalizer
    auto ces = cesaro_kernel<Rat>(n, Rat(1, 2), System::walsh_paley, 6);
    REQUIRE(fast.data == ces.data);
  }
}

TEST_CASE("norlund kernels have mean one") {
  auto cesaro_q = WeightSequence::cesaro(Rat(1, 2));
  auto power_q = WeightSequence::power(Rat(1, 2));
  for (const auto& q : {cesaro_q, power_q}) {
    for (std::uint64_t n : {std::uint64_t(1), std::uint64_t(6),
                            std::uint64_t(13)}) {
      auto k = norlund_kernel<Rat>(n, *q, System::walsh_kaczmarz, 4);
      CHECK(k.data.mean() == 1);
    }
  }
}
