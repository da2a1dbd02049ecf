#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cogrowth/errors.hpp"
#include "cogrowth/numeric.hpp"

namespace cogrowth {

// A letter of the free group F_r is a generator index in [1, r] with a sign.
// Internally letters are integer codes in [0, 2r):
//   code = 2*(index - 1) + (sign < 0 ? 1 : 0)
// so a generator and its inverse occupy adjacent codes and inversion is
// code ^ 1.  Lexicographic order on codes puts each generator immediately
// before its inverse; all enumeration order guarantees refer to this order.
struct Letter {
  int index;  // 1-based generator index
  int sign;   // +1 or -1

  int code() const { return 2 * (index - 1) + (sign < 0 ? 1 : 0); }
  static Letter from_code(int c) { return Letter{c / 2 + 1, (c & 1) ? -1 : +1}; }
  Letter inverse() const { return Letter{index, -sign}; }
  friend bool operator==(const Letter &, const Letter &) = default;
};

inline int inverse_code(int c) { return c ^ 1; }

// A word is a sequence of letter codes.  Functions returning reduced words
// guarantee the no-adjacent-inverse-pair invariant.
using Word = std::vector<int>;

// Validates the rank; the whole library requires r >= 2 (q = 2r - 1 >= 3).
void check_rank(int r);

// True iff every code lies in [0, 2r).
bool word_valid(int r, const Word &w);

// True iff no adjacent pair of mutually inverse letters occurs.
bool is_reduced(const Word &w);

// Free reduction: cancels adjacent inverse pairs until none remain.
// Total and idempotent; result length has the same parity as the input.
Word reduce(const Word &w);

// The inverse word: reversed sequence of inverted letters.
Word inverse_word(const Word &w);

// reduce(u ++ v) computed from already-reduced u and v.
Word concat_reduce(const Word &u, const Word &v);

// Number of reduced words of length n over rank r:
// 1 for n = 0, else 2r * (2r-1)^(n-1).
Int count_reduced(int r, int n);

// Calls f once for every reduced word of length exactly n, in lexicographic
// (code) order.  Deterministic.  Throws GroupSpecError for r < 2.
void enumerate_reduced(int r, int n, const std::function<void(const Word &)> &f);

// Human-readable rendering: a..z for generators 1..26 (x<i> beyond),
// uppercase for inverses, e.g. "abA" = a b a^{-1}; empty word is "e".
std::string word_to_string(const Word &w);

}  // namespace cogrowth
