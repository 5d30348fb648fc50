#include <doctest.h>

#include <vector>

#include "hhnet/rng.hpp"

using namespace hhnet;

TEST_CASE("streams are deterministic and distinct") {
  RngStream a(42, 0), b(42, 0), c(42, 1);
  std::vector<std::uint64_t> va, vb, vc;
  for (int i = 0; i < 16; ++i) {
    va.push_back(a.next_u64());
    vb.push_back(b.next_u64());
    vc.push_back(c.next_u64());
  }
  CHECK(va == vb);
  CHECK(va != vc);
}

TEST_CASE("unit draws live in [0, 1)") {
  RngStream rng(7, 3);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("bounded draws cover the range uniformly enough") {
  RngStream rng(1, 1);
  std::vector<int> hist(7, 0);
  const int n = 70000;
  for (int i = 0; i < n; ++i) ++hist[rng.bounded(7)];
  for (int count : hist) {
    CHECK(count > 9000);  // expectation 10000, sd ~97
    CHECK(count < 11000);
  }
}

TEST_CASE("bernoulli and binomial edge probabilities") {
  RngStream rng(3, 9);
  for (int i = 0; i < 100; ++i) {
    CHECK(rng.bernoulli(1.0));
    CHECK_FALSE(rng.bernoulli(0.0));
    CHECK(rng.binomial(5, 1.0) == 5);
    CHECK(rng.binomial(5, 0.0) == 0);
    CHECK(rng.binomial(0, 0.5) == 0);
  }
  // mean of Binomial(10, 0.3) is 3
  double sum = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) sum += rng.binomial(10, 0.3);
  CHECK(sum / n == doctest::Approx(3.0).epsilon(0.02));
}
