#include <doctest.h>

#include <atomic>
#include <cstdlib>

#include "dslab/report.hpp"

using namespace dslab;

TEST_CASE("verdict plumbing") {
  CHECK(verdict_name(Verdict::pass) == "pass");
  CHECK(worst_of(Verdict::pass, Verdict::inconclusive) ==
        Verdict::inconclusive);
  CHECK(worst_of(Verdict::inconclusive, Verdict::fail) == Verdict::fail);
  CHECK(verdict_exit_code(Verdict::pass) == 0);
  CHECK(verdict_exit_code(Verdict::fail) == 1);
  CHECK(verdict_exit_code(Verdict::inconclusive) == 2);
}

TEST_CASE("csv and json layout") {
  ExperimentReport r;
  r.id = "demo";
  r.params = {{"weights", "constant"}};
  r.columns = {"n", "value"};
  r.rows = {{"1", "1/2"}, {"2", "3/4"}};
  r.verdict = Verdict::pass;
  r.summary = {{"max", "3/4"}};
  CHECK(to_csv(r) == "n,value\n1,1/2\n2,3/4\n");
  std::string j = to_json(r);
  CHECK(j.find("\"experiment\": \"demo\"") != std::string::npos);
  CHECK(j.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(j.find("\"max\": \"3/4\"") != std::string::npos);
}

TEST_CASE("double formatting round-trips") {
  for (double v : {0.1, 1.0 / 3, 2.975781671210985, 1e-300, 0.0, -42.5}) {
    std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("DSLAB_THREADS overrides the requested count") {
  unsetenv("DSLAB_THREADS");
  CHECK(effective_threads(3) == 3);
  setenv("DSLAB_THREADS", "7", 1);
  CHECK(effective_threads(3) == 7);
  setenv("DSLAB_THREADS", "junk", 1);
  CHECK(effective_threads(3) == 3);
  unsetenv("DSLAB_THREADS");
}

TEST_CASE("parallel_for covers every index once and propagates errors") {
  std::vector<std::atomic<int>> hits(257);
  parallel_for(hits.size(), 8, [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) CHECK(h.load() == 1);

  CHECK_THROWS_AS(
      parallel_for(16, 4,
                   [](std::size_t i) {
                     if (i == 11) throw std::runtime_error("boom");
                   }),
      std::runtime_error);
}
