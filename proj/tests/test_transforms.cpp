#include <doctest.h>

#include "dslab/kernels.hpp"
#include "dslab/transforms.hpp"
#include "test_util.hpp"

using namespace dslab;
using dslab::testutil::Rng;

namespace {

// O(4^N) oracle: coefficients as direct inner products.
std::vector<Rat> direct_coefficients(const SampledFunction<Rat>& f, System s) {
  std::vector<Rat> out(f.size(), Rat(0));
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    Rat acc(0);
    for (std::uint32_t c = 0; c < f.size(); ++c) {
      DyadicPoint x(f.resolution(), c);
      acc += f[c] * Rat(system_eval(s, i, x));
    }
    out[i] = acc / Rat(static_cast<long>(f.size()));
  }
  return out;
}

SampledFunction<Rat> system_row(System s, std::uint64_t n, int resolution) {
  SampledFunction<Rat> f(resolution);
  for (std::uint32_t c = 0; c < f.size(); ++c) {
    f[c] = Rat(system_eval(s, n, DyadicPoint(resolution, c)));
  }
  return f;
}

}  // namespace

TEST_CASE("constants transform to a unit coefficient at zero") {
  for (System s : {System::walsh_paley, System::walsh_kaczmarz}) {
    SampledFunction<Rat> one(4, std::vector<Rat>(16, Rat(1)));
    auto c = forward_transform(one, s);
    CHECK(c.coeffs[0] == 1);
    for (std::size_t i = 1; i < 16; ++i) CHECK(c.coeffs[i] == 0);
  }
}

TEST_CASE("system functions are unit vectors in their own basis") {
  auto w5 = system_row(System::walsh_paley, 5, 3);
  auto c = forward_transform(w5, System::walsh_paley);
  for (std::size_t i = 0; i < 8; ++i) CHECK(c.coeffs[i] == (i == 5 ? 1 : 0));

  auto k5 = system_row(System::walsh_kaczmarz, 5, 3);
  auto ck = forward_transform(k5, System::walsh_kaczmarz);
  for (std::size_t i = 0; i < 8; ++i) CHECK(ck.coeffs[i] == (i == 5 ? 1 : 0));
}

TEST_CASE("fast coefficients equal direct inner products, both systems") {
  Rng rng(7);
  for (int res = 1; res <= 6; ++res) {
    auto f = testutil::random_function(res, rng);
    for (System s : {System::walsh_paley, System::walsh_kaczmarz}) {
      auto fast = forward_transform(f, s);
      auto direct = direct_coefficients(f, s);
      REQUIRE(fast.coeffs == direct);
    }
  }
}

TEST_CASE("round-trip is the identity in exact mode") {
  Rng rng(11);
  auto f = testutil::random_function(6, rng);
  for (System s : {System::walsh_paley, System::walsh_kaczmarz}) {
    CHECK(inverse_transform(forward_transform(f, s)) == f);
  }
}

TEST_CASE("all-ones coefficients up to 2^n rebuild the Dirichlet kernel") {
  const int res = 4;
  for (int n = 0; n <= 4; ++n) {
    CoefficientVector<Rat> c{System::walsh_paley, res,
                             std::vector<Rat>(16, Rat(0))};
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
      c.coeffs[i] = 1;
    auto f = inverse_transform(c);
    auto d = dirichlet_kernel<Rat>(std::uint64_t{1} << n, System::walsh_paley,
                                   res);
    CHECK(f == d.data);
  }
}

TEST_CASE("counterexample function has the block coefficient profile") {
  // f_n = D_{2^{n+1}} - D_{2^n}: Kaczmarz coefficients are 1 exactly on
  // [2^n, 2^{n+1}), 0 elsewhere.
  const int n = 2, res = n + 2;
  auto d_hi = dirichlet_kernel<Rat>(8, System::walsh_paley, res);
  auto d_lo = dirichlet_kernel<Rat>(4, System::walsh_paley, res);
  SampledFunction<Rat> f(res);
  for (std::size_t c = 0; c < f.size(); ++c)
    f[c] = d_hi.data[c] - d_lo.data[c];
  auto coeffs = forward_transform(f, System::walsh_kaczmarz);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(coeffs.coeffs[i] == ((i >= 4 && i < 8) ? 1 : 0));
  }
}

TEST_CASE("partial sums: endpoints, truncation, and block averages") {
  Rng rng(23);
  auto f = testutil::random_function(5, rng);
  for (System s : {System::walsh_paley, System::walsh_kaczmarz}) {
    CHECK(partial_sum(f, 0, s) == SampledFunction<Rat>(5));
    CHECK(partial_sum(f, 32, s) == f);
    CHECK_THROWS_AS(partial_sum(f, 33, s), ResolutionError);

    // S_{2^k} f: block averages over rank-k intervals, both systems
    for (int k = 0; k <= 5; ++k) {
      auto sk = partial_sum(f, std::uint64_t{1} << k, s);
      const std::size_t width = std::size_t{1} << (5 - k);
      for (std::size_t c = 0; c < f.size(); ++c) {
        std::size_t base = (c / width) * width;
        Rat avg(0);
        for (std::size_t j = base; j < base + width; ++j) avg += f[j];
        avg /= Rat(static_cast<long>(width));
        REQUIRE(sk[c] == avg);
      }
    }
  }
}

TEST_CASE("S_M of a basis function keeps or drops it") {
  const int res = 4;
  for (std::uint64_t j = 0; j < 16; ++j) {
    auto wj = system_row(System::walsh_paley, j, res);
    for (std::uint64_t m : {std::uint64_t(0), j, j + 1, std::uint64_t(16)}) {
      auto s = partial_sum(wj, m, System::walsh_paley);
      if (j < m) {
        CHECK(s == wj);
      } else {
        CHECK(s == SampledFunction<Rat>(res));
      }
    }
  }
}

TEST_CASE("S_{2^n+1} in the Kaczmarz system picks out kappa_{2^n}") {
  const int n = 3, res = n + 2;
  auto d_hi = dirichlet_kernel<Rat>(16, System::walsh_paley, res);
  auto d_lo = dirichlet_kernel<Rat>(8, System::walsh_paley, res);
  SampledFunction<Rat> f(res);
  for (std::size_t c = 0; c < f.size(); ++c)
    f[c] = d_hi.data[c] - d_lo.data[c];
  auto s = partial_sum(f, (std::uint64_t{1} << n) + 1, System::walsh_kaczmarz);
  auto kappa = system_row(System::walsh_kaczmarz, std::uint64_t{1} << n, res);
  CHECK(s == kappa);
}

TEST_CASE("parseval holds exactly in both systems") {
  Rng rng(31);
  auto f = testutil::random_function(5, rng);
  Rat lhs(0);
  for (std::size_t c = 0; c < f.size(); ++c) lhs += f[c] * f[c];
  lhs /= Rat(static_cast<long>(f.size()));
  for (System s : {System::walsh_paley, System::walsh_kaczmarz}) {
    auto c = forward_transform(f, s);
    Rat rhs(0);
    for (const Rat& v : c.coeffs) rhs += v * v;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("transform is linear") {
  Rng rng(43);
  auto f = testutil::random_function(4, rng);
  auto g = testutil::random_function(4, rng);
  Rat a(3, 7), b(-5, 2);
  SampledFunction<Rat> combo(4);
  for (std::size_t c = 0; c < combo.size(); ++c)
    combo[c] = a * f[c] + b * g[c];
  for (System s : {System::walsh_paley, System::walsh_kaczmarz}) {
    auto cf = forward_transform(f, s);
    auto cg = forward_transform(g, s);
    auto cc = forward_transform(combo, s);
    for (std::size_t i = 0; i < combo.size(); ++i)
      REQUIRE(cc.coeffs[i] == a * cf.coeffs[i] + b * cg.coeffs[i]);
  }
}

TEST_CASE("embedding refines without changing the function") {
  Rng rng(53);
  auto f = testutil::random_function(3, rng);
  auto g = embed(f, 6);
  CHECK(g.resolution() == 6);
  for (std::size_t c = 0; c < g.size(); ++c) CHECK(g[c] == f[c >> 3]);
  // embedding does not change coefficients below 2^3
  auto cf = forward_transform(f, System::walsh_paley);
  auto cg = forward_transform(g, System::walsh_paley);
  for (std::size_t i = 0; i < 8; ++i) CHECK(cg.coeffs[i] == cf.coeffs[i]);
  for (std::size_t i = 8; i < 64; ++i) CHECK(cg.coeffs[i] == 0);
  CHECK_THROWS_AS(embed(g, 3), ResolutionError);
}

TEST_CASE("convolution with D_{2^k} is the partial sum S_{2^k}") {
  Rng rng(61);
  auto f = testutil::random_function(4, rng);
  for (int k = 0; k <= 4; ++k) {
    auto d = dirichlet_kernel<Rat>(std::uint64_t{1} << k, System::walsh_paley,
                                   4);
    CHECK(convolve(f, d.data) ==
          partial_sum(f, std::uint64_t{1} << k, System::walsh_paley));
  }
}

TEST_CASE("float transform stays within the documented tolerance") {
  Rng rng(71);
  auto f = testutil::random_function(8, rng);
  auto fd = to_float(f);
  auto exact = forward_transform(f, System::walsh_paley);
  auto approx = forward_transform(fd, System::walsh_paley);
  for (std::size_t i = 0; i < f.size(); ++i) {
    double e = to_double(exact.coeffs[i]);
    CHECK(std::abs(approx.coeffs[i] - e) <=
          1e-9 * std::max(1.0, std::abs(e)));
  }
}
