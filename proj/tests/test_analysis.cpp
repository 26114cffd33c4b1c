#include <doctest.h>

#include "dslab/analysis.hpp"
#include "dslab/kernels.hpp"
#include "dslab/verification.hpp"
#include "test_util.hpp"

using namespace dslab;
using dslab::testutil::Rng;

TEST_CASE("lp norm: constants, basis functions, dirichlet kernels") {
  SampledFunction<Rat> cf(4, std::vector<Rat>(16, Rat(-5, 2)));
  for (Rat p : {Rat(1, 2), Rat(2, 5), Rat(1), Rat(2)}) {
    auto norm = lp_norm(cf, p);
    REQUIRE(norm.exact.has_value());
    CHECK(*norm.exact == Pow2Value(Rat(5, 2)));
  }

  SampledFunction<Rat> w3(3);
  for (std::uint32_t c = 0; c < 8; ++c)
    w3[c] = Rat(walsh_eval(3, DyadicPoint(3, c)));
  CHECK(*lp_norm(w3, Rat(1, 2)).exact == Pow2Value(Rat(1)));
  CHECK(*lp_norm(w3, Rat(3)).exact == Pow2Value(Rat(1)));

  // ||D_{2^n}||_p = 2^{n(1-1/p)}; n=3, p=1/2 gives 2^{-3}
  auto d8 = dirichlet_kernel<Rat>(8, System::walsh_paley, 4);
  CHECK(*lp_norm(d8.data, Rat(1, 2)).exact == Pow2Value(Rat(1, 8)));
  CHECK(*lp_norm(d8.data, Rat(2, 5)).exact == Pow2Value::pow2(Rat(-9, 2)));

  CHECK_THROWS_AS(lp_norm(cf, Rat(0)), std::domain_error);
  CHECK_THROWS_AS(lp_norm(cf, Rat(-1)), std::domain_error);
}

TEST_CASE("weak lp norm: single level, dirichlet, chebyshev") {
  SampledFunction<Rat> cf(3, std::vector<Rat>(8, Rat(3, 7)));
  CHECK(*weak_lp_norm(cf, Rat(1, 2)).exact == Pow2Value(Rat(3, 7)));

  auto d8 = dirichlet_kernel<Rat>(8, System::walsh_paley, 4);
  CHECK(*weak_lp_norm(d8.data, Rat(1, 2)).exact == Pow2Value(Rat(1, 8)));
  CHECK(*weak_lp_norm(d8.data, Rat(1)).exact == Pow2Value(Rat(1)));

  // weak <= strong for random functions (checked exactly where both exist,
  // by approximation otherwise)
  Rng rng(211);
  for (int rep = 0; rep < 30; ++rep) {
    auto f = testutil::random_function(4, rng);
    for (Rat p : {Rat(1, 2), Rat(1)}) {
      auto weak = weak_lp_norm(f, p);
      auto strong = lp_norm(f, p);
      if (weak.exact && strong.exact) {
        REQUIRE(*weak.exact <= *strong.exact);
      } else {
        REQUIRE(weak.approx <= strong.approx * (1 + 1e-9));
      }
    }
  }

  SampledFunction<Rat> zero(3);
  CHECK(*weak_lp_norm(zero, Rat(1, 2)).exact == Pow2Value());
}

TEST_CASE("weak norm maximizes over levels, not just the top one") {
  // two levels: 4 on one cell (mu = 1/8), 1 on four cells (mu >= 5/8)
  SampledFunction<Rat> f(3);
  f[0] = 4;
  for (int c = 1; c <= 4; ++c) f[c] = 1;
  // p = 1/2: candidates 4*(1/8)^2 = 1/16 and 1*(5/8)^2 = 25/64 -> 25/64
  auto w = weak_lp_norm(f, Rat(1, 2));
  REQUIRE(w.exact.has_value());
  CHECK(*w.exact == Pow2Value(Rat(25, 64)));
}

TEST_CASE("hardy norm of the counterexample function is 2^{n(1-1/p)}") {
  for (int n : {2, 3, 4}) {
    auto f = counterexample_function(n, n + 2);
    for (Rat p : {Rat(2, 5), Rat(1, 2), Rat(1, 3)}) {
      auto h = hardy_norm(f, p);
      REQUIRE(h.exact.has_value());
      CHECK(*h.exact == Pow2Value::pow2(Rat(n) * (1 - 1 / p)));
    }
  }
  // pinned: n=2, p=2/5 gives 2^{-3}
  auto f2 = counterexample_function(2, 4);
  CHECK(*hardy_norm(f2, Rat(2, 5)).exact == Pow2Value(Rat(1, 8)));
}

TEST_CASE("hardy norm dominates the plain norm at p = 1") {
  Rng rng(223);
  for (int rep = 0; rep < 10; ++rep) {
    auto f = testutil::random_function(5, rng);
    auto h = hardy_norm(f, Rat(1));
    auto l = lp_norm(f, Rat(1));
    CHECK(h.approx >= l.approx * (1 - 1e-12));
    if (h.exact && l.exact) CHECK(*l.exact <= *h.exact);
  }
}

TEST_CASE("hardy norm agrees with a direct block-average oracle") {
  Rng rng(227);
  auto f = testutil::random_function(5, rng);
  // direct: averages over every dyadic interval containing the cell
  SampledFunction<Rat> direct(5);
  for (std::size_t c = 0; c < f.size(); ++c) {
    Rat best(0);
    for (int rank = 0; rank <= 5; ++rank) {
      std::size_t width = std::size_t{1} << (5 - rank);
      std::size_t base = (c / width) * width;
      Rat avg(0);
      for (std::size_t j = base; j < base + width; ++j) avg += f[j];
      avg /= Rat(static_cast<long>(width));
      if (rat_abs(avg) > best) best = rat_abs(avg);
    }
    direct[c] = best;
  }
  CHECK(martingale_maximal(f) == direct);
  auto via = lp_norm(direct, Rat(1, 2));
  auto h = hardy_norm(f, Rat(1, 2));
  CHECK(via.approx == h.approx);
}

TEST_CASE("float norms agree with exact values") {
  auto d8 = dirichlet_kernel<Rat>(8, System::walsh_paley, 4);
  auto fd = to_float(d8.data);
  CHECK(lp_norm(fd, 0.5) == doctest::Approx(1.0 / 8).epsilon(1e-12));
  CHECK(weak_lp_norm(fd, 0.5) == doctest::Approx(1.0 / 8).epsilon(1e-12));
  // f* of D_8 at N=4 is 2^k on each shell I_k \ I_{k+1}; its integral is 5/2
  auto exact_h = hardy_norm(d8.data, Rat(1));
  REQUIRE(exact_h.exact.has_value());
  CHECK(*exact_h.exact == Pow2Value(Rat(5, 2)));
  CHECK(hardy_norm(fd, 1.0) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("haar atoms: construction and validation") {
  // p=1/2, I = I_1, N=3: values +-4 on the two halves of I_1
  auto atom = make_atom(Rat(1, 2), DyadicInterval(1, 0), 3);
  CHECK(atom.data.values() ==
        std::vector<Rat>{Rat(4), Rat(4), Rat(-4), Rat(-4), Rat(0), Rat(0),
                         Rat(0), Rat(0)});
  CHECK(atom_is_valid(atom));

  // the atom's own L_p norm is at most 1
  for (Rat p : {Rat(1, 2), Rat(1, 3), Rat(1)}) {
    for (int rank : {0, 1, 2}) {
      auto a = make_atom(p, DyadicInterval(rank, 0), 4);
      CHECK(atom_is_valid(a));
      auto norm = lp_norm(a.data, p);
      REQUIRE(norm.exact.has_value());
      CHECK(*norm.exact <= Pow2Value(Rat(1)));
    }
  }

  CHECK_THROWS_AS(make_atom(Rat(1, 2), DyadicInterval(3, 0), 3),
                  std::domain_error);
  CHECK_THROWS_AS(make_atom(Rat(2), DyadicInterval(1, 0), 3),
                  std::domain_error);
}

TEST_CASE("atom validation rejects each violated requirement") {
  auto atom = make_atom(Rat(1, 2), DyadicInterval(1, 0), 3);

  auto leaky = atom;
  leaky.data[7] = 1;
  CHECK(atom_violation(leaky) == "support leaks outside the interval");

  auto biased = atom;
  biased.data[0] += 1;
  CHECK(atom_violation(biased) == "nonzero mean");

  auto loud = atom;
  loud.data[0] = Rat(5);
  loud.data[1] = Rat(3);  // keeps the mean zero, breaks the sup bound
  CHECK(atom_violation(loud) == "sup-norm exceeds mu(I)^{-1/p}");

  // fractional budget: p = 2/5, rank 1 gives cap 2^{5/2}; 5 < 2^{5/2} < 6
  auto frac = make_atom(Rat(2, 5), DyadicInterval(1, 0), 3);
  CHECK(atom_is_valid(frac));
  CHECK(frac.data[0] == 4);  // floor exponent
  auto over = frac;
  over.data[0] = Rat(6);
  over.data[1] = Rat(2);
  CHECK(atom_violation(over) == "sup-norm exceeds mu(I)^{-1/p}");
  auto under = frac;
  under.data[0] = Rat(5);
  under.data[1] = Rat(3);
  CHECK(atom_violation(under).empty());
}
