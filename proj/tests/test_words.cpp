#include <algorithm>
#include <random>
#include <vector>

#include "cogrowth/words.hpp"
#include "doctest.h"

using namespace cogrowth;

namespace {

Word random_word(std::mt19937 &rng, int r, int len) {
  std::uniform_int_distribution<int> dist(0, 2 * r - 1);
  Word w(static_cast<std::size_t>(len));
  for (auto &c : w) c = dist(rng);
  return w;
}

}  // namespace

TEST_CASE("letter codes and inverses") {
  CHECK(Letter{1, +1}.code() == 0);
  CHECK(Letter{1, -1}.code() == 1);
  CHECK(Letter{2, +1}.code() == 2);
  CHECK(Letter{2, -1}.code() == 3);
  for (int c = 0; c < 8; ++c) {
    const Letter l = Letter::from_code(c);
    CHECK(l.code() == c);
    CHECK(l.inverse().code() == inverse_code(c));
    CHECK(l.inverse().inverse() == l);
  }
}

TEST_CASE("check_rank rejects rank below two") {
  CHECK_THROWS_AS(check_rank(1), GroupSpecError);
  CHECK_THROWS_AS(check_rank(0), GroupSpecError);
  CHECK_NOTHROW(check_rank(2));
  CHECK_NOTHROW(check_rank(5));
}

TEST_CASE("word_valid checks the code range") {
  CHECK(word_valid(2, {}));
  CHECK(word_valid(2, {0, 1, 2, 3}));
  CHECK_FALSE(word_valid(2, {4}));
  CHECK_FALSE(word_valid(2, {-1}));
  CHECK(word_valid(3, {4, 5}));
}

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(reduce({}) == Word{});
  CHECK(reduce({0, 1}) == Word{});          // a a^-1
  CHECK(reduce({1, 0}) == Word{});          // a^-1 a
  CHECK(reduce({0, 0}) == Word{0, 0});      // a a stays
  CHECK(reduce({0, 2, 3, 1}) == Word{});    // a b b^-1 a^-1
  CHECK(reduce({0, 2, 3, 0}) == Word{0, 0});
  CHECK(reduce({2, 0, 1, 3, 2}) == Word{2});
}

TEST_CASE("reduce is total, idempotent and parity-preserving") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + trial % 2;
    const Word w = random_word(rng, r, 1 + trial % 17);
    const Word rw = reduce(w);
    CHECK(is_reduced(rw));
    CHECK(reduce(rw) == rw);
    CHECK(static_cast<int>(rw.size()) % 2 == static_cast<int>(w.size()) % 2);
    CHECK(rw.size() <= w.size());
  }
}

TEST_CASE("inverse_word composes to the empty word") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const Word w = random_word(rng, 2, trial % 13);
    const Word wi = inverse_word(w);
    CHECK(wi.size() == w.size());
    Word both = w;
    both.insert(both.end(), wi.begin(), wi.end());
    CHECK(reduce(both).empty());
  }
  CHECK(inverse_word({0, 2, 1}) == Word{0, 3, 1});
}

TEST_CASE("concat_reduce agrees with reduce on the concatenation") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const Word u = reduce(random_word(rng, 2, trial % 11));
    const Word v = reduce(random_word(rng, 2, (trial * 7) % 11));
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(concat_reduce(u, v) == reduce(uv));
  }
}

TEST_CASE("count_reduced closed form") {
  CHECK(count_reduced(2, 0) == Int(1));
  CHECK(count_reduced(2, 1) == Int(4));
  CHECK(count_reduced(2, 2) == Int(12));
  CHECK(count_reduced(2, 3) == Int(36));
  CHECK(count_reduced(3, 1) == Int(6));
  CHECK(count_reduced(3, 2) == Int(30));
  // 4 * 3^19
  CHECK(count_reduced(2, 20) == Int("4649045868"));
}

TEST_CASE("enumerate_reduced visits each reduced word once, in code order") {
  for (int n = 0; n <= 5; ++n) {
    std::vector<Word> seen;
    enumerate_reduced(2, n, [&](const Word &w) { seen.push_back(w); });
    CHECK(Int(static_cast<long>(seen.size())) == count_reduced(2, n));
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    for (const Word &w : seen) {
      CHECK(static_cast<int>(w.size()) == n);
      CHECK(is_reduced(w));
      CHECK(word_valid(2, w));
    }
  }
}

TEST_CASE("enumerate_reduced for rank three") {
  std::size_t count = 0;
  enumerate_reduced(3, 3, [&](const Word &w) {
    CHECK(is_reduced(w));
    ++count;
  });
  CHECK(Int(static_cast<long>(count)) == count_reduced(3, 3));
}

TEST_CASE("word_to_string rendering") {
  CHECK(word_to_string({}) == "e");
  CHECK(word_to_string({0}) == "a");
  CHECK(word_to_string({1}) == "A");
  CHECK(word_to_string({0, 2, 1}) == "abA");
  CHECK(word_to_string({2, 3}) == "bB");
}
