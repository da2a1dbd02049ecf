#include <vector>

#include "cogrowth/counting.hpp"
#include "cogrowth/numeric.hpp"
#include "cogrowth/presets.hpp"
#include "doctest.h"

using namespace cogrowth;

namespace {

std::vector<Int> ints(std::initializer_list<long> v) {
  std::vector<Int> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("count table metadata") {
  const CountTable t = count_table(load_preset("s3"), 9);
  CHECK(t.group_id == "s3");
  CHECK(t.rank == 2);
  CHECK(t.q == 3);
  CHECK(t.n_max == 9);
  CHECK(t.complete());
  CHECK(t.gamma.size() == 10);
  CHECK(t.walk.size() == 10);
  CHECK(t.gamma[0] == 1);
  CHECK(t.walk[0] == 1);
}

TEST_CASE("frozen small tables for the presets") {
  SUBCASE("trivial group: every reduced word is in the kernel") {
    const CountTable t = count_table(load_preset("trivial"), 10);
    for (int n = 0; n <= 10; ++n) {
      CHECK(t.gamma[static_cast<std::size_t>(n)] == count_reduced(2, n));
      CHECK(t.walk[static_cast<std::size_t>(n)] == int_pow(Int(4), static_cast<unsigned long>(n)));
    }
  }
  SUBCASE("zsquared") {
    const CountTable t = count_table(load_preset("zsquared"), 8);
    CHECK(t.gamma == ints({1, 0, 0, 0, 8, 0, 40, 0, 312}));
    const CountTable w = count_table(load_preset("zsquared"), 6);
    CHECK(w.walk == ints({1, 0, 4, 0, 36, 0, 400}));
  }
  SUBCASE("z2xz2") {
    const CountTable t = count_table(load_preset("z2xz2"), 8);
    CHECK(t.gamma == ints({1, 0, 4, 0, 60, 0, 468, 0, 4428}));
    const CountTable w = count_table(load_preset("z2xz2"), 6);
    CHECK(w.walk == ints({1, 0, 8, 0, 128, 0, 2048}));
  }
  SUBCASE("s3") {
    const CountTable t = count_table(load_preset("s3"), 8);
    CHECK(t.gamma == ints({1, 0, 4, 0, 28, 0, 340, 0, 2956}));
    const CountTable w = count_table(load_preset("s3"), 6);
    CHECK(w.walk == ints({1, 0, 8, 0, 96, 0, 1408}));
  }
}

TEST_CASE("closed forms for even entries") {
  SUBCASE("z2xz2: gamma_2k = (9^k + (-3)^k) * 2/3, walk_2k = 16^k / 2") {
    const CountTable t = count_table(load_preset("z2xz2"), 20);
    for (int k = 1; k <= 10; ++k) {
      const Int nine = int_pow(Int(9), static_cast<unsigned long>(k));
      const Int m3 = int_pow(Int(-3), static_cast<unsigned long>(k));
      CHECK(Int(3) * t.gamma[static_cast<std::size_t>(2 * k)] == Int(2) * (nine + m3));
      CHECK(Int(2) * t.walk[static_cast<std::size_t>(2 * k)] ==
            int_pow(Int(16), static_cast<unsigned long>(k)));
    }
  }
  SUBCASE("s3: walk_2k = (2*16^k + 4*4^k) / 6") {
    const CountTable t = count_table(load_preset("s3"), 20);
    for (int k = 1; k <= 10; ++k) {
      const Int sixteen = int_pow(Int(16), static_cast<unsigned long>(k));
      const Int four = int_pow(Int(4), static_cast<unsigned long>(k));
      CHECK(Int(6) * t.walk[static_cast<std::size_t>(2 * k)] ==
            Int(2) * sixteen + Int(4) * four);
    }
  }
}

TEST_CASE("dynamic program agrees with direct enumeration") {
  for (const auto &info : list_presets()) {
    const MarkedGroup g = load_preset(info.id);
    const int n_top = 8;
    const std::vector<Int> gam = gamma_dp(g, n_top);
    const std::vector<Int> wlk = walk_counts(g, n_top);
    for (int n = 0; n <= n_top; ++n) {
      CAPTURE(info.id);
      CAPTURE(n);
      CHECK(gam[static_cast<std::size_t>(n)] == gamma_bruteforce(g, n));
      CHECK(wlk[static_cast<std::size_t>(n)] == walk_bruteforce(g, n));
    }
  }
}

TEST_CASE("parallel and serial kernels produce identical tables") {
  for (const auto &info : list_presets()) {
    const MarkedGroup g = load_preset(info.id);
    const CountTable par = count_table(g, 14);
    const CountTable ser = serial::count_table(g, 14);
    CAPTURE(info.id);
    CHECK(par.gamma == ser.gamma);
    CHECK(par.walk == ser.walk);
    CHECK(par.truncated_at == ser.truncated_at);
  }
}

TEST_CASE("declared parity: odd entries vanish") {
  for (const auto &info : list_presets()) {
    if (!info.even_parity) continue;
    const CountTable t = count_table(load_preset(info.id), 11);
    for (int n = 1; n <= 11; n += 2) {
      CAPTURE(info.id);
      CAPTURE(n);
      CHECK(t.gamma[static_cast<std::size_t>(n)] == 0);
      CHECK(t.walk[static_cast<std::size_t>(n)] == 0);
    }
  }
  // The trivial preset is the one genuinely odd-supported group here.
  const CountTable t = count_table(load_preset("trivial"), 3);
  CHECK(t.gamma[1] == 4);
  CHECK(t.walk[1] == 4);
}

TEST_CASE("walk counts are supermultiplicative over even splits") {
  for (const char *id : {"zsquared", "sl2z", "s3"}) {
    const CountTable t = count_table(load_preset(id), 16);
    for (int k = 2; k <= 8; k += 2) {
      for (int j = 2; k + j <= 16; j += 2) {
        CAPTURE(id);
        CHECK(t.walk[static_cast<std::size_t>(k + j)] >=
              t.walk[static_cast<std::size_t>(k)] * t.walk[static_cast<std::size_t>(j)]);
      }
    }
  }
}

TEST_CASE("gamma monotonicity against the free bound") {
  // gamma_n never exceeds the number of reduced words.
  const CountTable t = count_table(load_preset("sl2z"), 12);
  for (int n = 0; n <= 12; ++n)
    CHECK(t.gamma[static_cast<std::size_t>(n)] <= count_reduced(2, n));
}

TEST_CASE("ball budget: throwing and truncating forms") {
  const MarkedGroup g = load_preset("zsquared");
  CHECK_THROWS_AS(gamma_dp(g, 20, 10), BallBudgetExceeded);
  CHECK_THROWS_AS(walk_counts(g, 20, 10), BallBudgetExceeded);
  CHECK_THROWS_AS(serial::gamma_dp(g, 20, 10), BallBudgetExceeded);

  const CountTable full = count_table(g, 20);
  const CountTable cut = count_table(g, 20, 40);
  REQUIRE(!cut.complete());
  REQUIRE(cut.truncated_at.has_value());
  const int stop = *cut.truncated_at;
  CHECK(stop >= 1);
  CHECK(stop <= 20);
  CHECK(cut.gamma.size() == static_cast<std::size_t>(stop));
  CHECK(cut.walk.size() == static_cast<std::size_t>(stop));
  for (int n = 0; n < stop; ++n) {
    CHECK(cut.gamma[static_cast<std::size_t>(n)] == full.gamma[static_cast<std::size_t>(n)]);
    CHECK(cut.walk[static_cast<std::size_t>(n)] == full.walk[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("enumeration budget guards the oracles") {
  const MarkedGroup g = load_preset("z2xz2");
  CHECK_THROWS_AS(gamma_bruteforce(g, 12, 100), EnumerationBudgetExceeded);
  CHECK_THROWS_AS(walk_bruteforce(g, 12, 100), EnumerationBudgetExceeded);
  CHECK(gamma_bruteforce(g, 2, 100) == 4);
}

TEST_CASE("negative n is rejected") {
  const MarkedGroup g = load_preset("trivial");
  CHECK_THROWS_AS(count_table(g, -1), GroupSpecError);
  CHECK_THROWS_AS(gamma_bruteforce(g, -1), GroupSpecError);
  CHECK_THROWS_AS(walk_bruteforce(g, -1), GroupSpecError);
}

TEST_CASE("n_max zero and one") {
  const CountTable t0 = count_table(load_preset("s3"), 0);
  CHECK(t0.gamma == ints({1}));
  CHECK(t0.walk == ints({1}));
  const CountTable t1 = count_table(load_preset("trivial"), 1);
  CHECK(t1.gamma == ints({1, 4}));
  CHECK(t1.walk == ints({1, 4}));
}
