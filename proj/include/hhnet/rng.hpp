#ifndef HHNET_RNG_HPP
#define HHNET_RNG_HPP

#include <cassert>
#include <cstdint>
#include <random>

namespace hhnet {

// Deterministic stream of pseudo-random draws.  Every consumer derives its own
// stream from (seed, stream_id) so replicates can run in any order, or in
// parallel, and still see the same draws.  All derived quantities (unit
// doubles, bounded ints, bernoulli, binomial) are computed here rather than
// with std::distributions, whose output is implementation defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed & 0xffffffffu),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream_id & 0xffffffffu),
        static_cast<std::uint32_t>(stream_id >> 32)};
    gen_.seed(seq);
  }

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1) with 53 random bits
  double next_unit() { return double(gen_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

  // uniform integer in [0, n); Lemire multiply-shift, no rejection bias worth
  // worrying about for the n used here
  std::size_t bounded(std::size_t n) {
    assert(n > 0);
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::size_t>(m >> 64);
  }

  // explicit bernoulli loop: n is a household size, so tiny
  int binomial(int n, double p) {
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (next_unit() < p) ++k;
    return k;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace hhnet

#endif
