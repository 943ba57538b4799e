#include <gtest/gtest.h>

#include <cstdint>
#include <cstdlib>

#include "ratebound/combinatorics.hpp"

using namespace ratebound;

namespace {

// Largest subset of F_q^n (q^n <= 16) with all pairwise distances satisfying
// `edge`, by enumerating every subset.
template <class Edge>
std::size_t brute_force(int q, int n, Edge edge) {
  const auto total = static_cast<std::uint32_t>(space_size(q, n));
  std::vector<Word> words;
  for (std::uint32_t c = 0; c < total; ++c) words.push_back(decode_word(q, n, c));
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t i = 0; i < total && ok; ++i)
      if (mask >> i & 1u)
        for (std::uint32_t j = i + 1; j < total && ok; ++j)
          if (mask >> j & 1u) ok = edge(hamming_distance(words[i], words[j]));
    if (ok) best = size;
  }
  return best;
}

}  // namespace

TEST(Exact, PowersBinomialsBalls) {
  EXPECT_EQ(big_pow(3, 40), BigInt("12157665459056928801"));
  EXPECT_EQ(binomial(50, 25), BigInt("126410606437752"));
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(ball_volume(2, 7, 1), 8);
  EXPECT_EQ(ball_volume(3, 4, 2), 1 + 8 + 24);
  EXPECT_THROW(ball_volume(3, 4, 5), DomainError);
}

TEST(Anticode, FrozenSizes) {
  // values from tests/oracles/frozen_values.py
  EXPECT_EQ(ak_size(2, 4, 2), 5);
  EXPECT_EQ(ak_size(2, 5, 1), 2);
  EXPECT_EQ(ak_size(3, 4, 2), 9);
  EXPECT_EQ(ak_size(3, 10, 4), 201);
  EXPECT_EQ(ak_size(4, 12, 5), 2116);
  EXPECT_EQ(ak_size(8, 20, 3), 1072);
  EXPECT_EQ(ak_size(3, 3, 3), 27);
  EXPECT_EQ(ak_size(5, 6, 0), 1);
}

TEST(Anticode, BinaryRadiusLimitConvention) {
  // n - d - 1 > 0 selects the ball, = 0 gives r = 0, < 0 (d = n) gives the full space
  EXPECT_EQ(ak_radius(2, 6, 2), 1);
  EXPECT_EQ(ak_radius(2, 6, 5), 0);
  EXPECT_EQ(ak_radius(2, 6, 6), 0);
  EXPECT_EQ(ak_size(2, 6, 6), 64);
}

TEST(Anticode, MembersHaveClaimedDiameterAndCount) {
  for (auto [q, n] : {std::pair{2, 5}, std::pair{3, 4}, std::pair{4, 3}, std::pair{5, 3}})
    for (int d = 0; d <= n; ++d) {
      std::vector<Word> words;
      for (auto c : ak_members(q, n, d)) words.push_back(decode_word(q, n, c));
      EXPECT_EQ(BigInt(words.size()), ak_size(q, n, d));
      EXPECT_LE(max_pairwise_distance(words), d);
    }
}

TEST(Anticode, LogSizeMatchesExact) {
  EXPECT_NEAR(log_ak_size(3, 40, 13), std::log(ak_size(3, 40, 13).convert_to<double>()), 1e-12);
  EXPECT_NEAR(log_ak_size(3, 40, 13), log_big(ak_size(3, 40, 13)), 1e-12);
  // past the exact range the log-space value agrees with the big integer
  EXPECT_NEAR(log_ak_size(3, 300, 120), log_big(ak_size(3, 300, 120)), 1e-9);
}

TEST(Oracle, MatchesBruteForceOnTinySpaces) {
  for (auto [q, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 2}, std::pair{4, 2}})
    for (int d = 0; d <= n; ++d) {
      EXPECT_EQ(oracle_max_anticode(q, n, d).size, brute_force(q, n, [d](int x) { return x <= d; }))
          << q << ' ' << n << ' ' << d;
      if (d >= 1) {
        EXPECT_EQ(oracle_max_code(q, n, d).size, brute_force(q, n, [d](int x) { return x >= d; }))
            << q << ' ' << n << ' ' << d;
      }
    }
}

TEST(Oracle, KnownCodeSizes) {
  EXPECT_EQ(oracle_max_code(2, 5, 3).size, 4u);
  EXPECT_EQ(oracle_max_code(2, 4, 3).size, 2u);
  EXPECT_EQ(oracle_max_code(2, 5, 2).size, 16u);
  EXPECT_EQ(oracle_max_code(3, 4, 3).size, 9u);
  EXPECT_EQ(oracle_max_code(3, 3, 2).size, 9u);
  EXPECT_EQ(oracle_max_code(2, 7, 3).size, 16u);
}

TEST(Oracle, WitnessesCertified) {
  const OracleResult a = oracle_max_anticode(3, 4, 2);
  EXPECT_EQ(a.witness.size(), a.size);
  EXPECT_LE(max_pairwise_distance(a.witness), 2);
  const OracleResult c = oracle_max_code(2, 5, 3);
  EXPECT_GE(min_pairwise_distance(c.witness), 3);
}

TEST(Oracle, EqualsFormulaAtDeskScale) {
  for (auto [q, nmax] : {std::pair{2, 5}, std::pair{3, 4}, std::pair{4, 3}, std::pair{8, 2}, std::pair{16, 2}})
    for (int n = 1; n <= nmax; ++n)
      for (int d = 0; d <= n; ++d)
        EXPECT_EQ(BigInt(oracle_max_anticode(q, n, d).size), ak_size(q, n, d)) << q << ' ' << n << ' ' << d;
}

TEST(Oracle, CapEnforced) {
  EXPECT_THROW(oracle_max_anticode(64, 3, 1), CapExceeded);
  ::setenv("RATEBOUND_VERTEX_CAP", "8", 1);
  EXPECT_THROW(oracle_max_anticode(2, 4, 1), CapExceeded);
  EXPECT_NO_THROW(oracle_max_anticode(2, 3, 1));
  ::unsetenv("RATEBOUND_VERTEX_CAP");
  EXPECT_NO_THROW(oracle_max_anticode(2, 4, 1));
}

TEST(Delsarte, InstancesHold) {
  const DelsarteReport r = delsarte_check(2, 4, 3);
  EXPECT_EQ(r.code_size, 2u);
  EXPECT_EQ(r.space / r.anticode_size, 3);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.bassalygo_elias.size(), 5u);
  for (auto [q, n] : {std::pair{2, 5}, std::pair{3, 4}, std::pair{4, 3}})
    for (int d = 1; d <= n; ++d) EXPECT_TRUE(delsarte_check(q, n, d).pass) << q << ' ' << n << ' ' << d;
}

TEST(RateConvergence, ApproachesAnticodeRate) {
  const QContext c(3);
  const std::vector<double> r = rate_convergence(c, 0.3, {100, 1000});
  EXPECT_NEAR(r[0], 0.46022847160017874, 1e-12);
  EXPECT_NEAR(r[1], 0.47644632223453524, 1e-12);
  const std::vector<double> s = rate_convergence(c, 0.7, {100, 1000});
  EXPECT_NEAR(s[0], 0.79126840466337727, 1e-12);
  EXPECT_NEAR(s[1], 0.80773431890984865, 1e-12);
  EXPECT_THROW(rate_convergence(QContext(8), 0.3, {5}), DomainError);
}
