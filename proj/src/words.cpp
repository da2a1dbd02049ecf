#include "cogrowth/words.hpp"

namespace cogrowth {

void check_rank(int r) {
  if (r < 2) {
    throw GroupSpecError("rank must be at least 2 (got " + std::to_string(r) +
                         "); the q = 2r-1 = 1 case is degenerate");
  }
}

bool word_valid(int r, const Word &w) {
  for (int c : w) {
    if (c < 0 || c >= 2 * r) return false;
  }
  return true;
}

bool is_reduced(const Word &w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == inverse_code(w[i - 1])) return false;
  }
  return true;
}

Word reduce(const Word &w) {
  Word out;
  out.reserve(w.size());
  for (int c : w) {
    if (!out.empty() && out.back() == inverse_code(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Word inverse_word(const Word &w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_code(*it));
  return out;
}

Word concat_reduce(const Word &u, const Word &v) {
  Word out = u;
  for (int c : v) {
    if (!out.empty() && out.back() == inverse_code(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Int count_reduced(int r, int n) {
  check_rank(r);
  if (n < 0) throw GroupSpecError("word length must be nonnegative");
  if (n == 0) return 1;
  return Int(2 * r) * int_pow(Int(2 * r - 1), static_cast<unsigned long>(n - 1));
}

void enumerate_reduced(int r, int n, const std::function<void(const Word &)> &f) {
  check_rank(r);
  if (n < 0) throw GroupSpecError("word length must be nonnegative");
  Word w(static_cast<std::size_t>(n));
  if (n == 0) {
    f(w);
    return;
  }
  // Iterative odometer over letter codes; position i skips the inverse of
  // the letter at i-1, which keeps every emitted word reduced.
  const int m = 2 * r;
  int pos = 0;
  w[0] = 0;
  while (true) {
    if (pos == n - 1) {
      f(w);
      // advance
      while (pos >= 0) {
        int forbidden = pos > 0 ? inverse_code(w[pos - 1]) : -1;
        int c = w[pos] + 1;
        while (c < m && c == forbidden) ++c;
        if (c < m) {
          w[pos] = c;
          break;
        }
        --pos;
      }
      if (pos < 0) return;
    } else {
      int forbidden = inverse_code(w[pos]);
      int c = (forbidden == 0) ? 1 : 0;
      w[++pos] = c;
    }
  }
}

std::string word_to_string(const Word &w) {
  if (w.empty()) return "e";
  std::string s;
  for (int c : w) {
    Letter l = Letter::from_code(c);
    if (l.index <= 26) {
      char base = static_cast<char>('a' + l.index - 1);
      s += (l.sign > 0) ? base : static_cast<char>(base - 'a' + 'A');
    } else {
      s += (l.sign > 0 ? "x" : "X") + std::to_string(l.index);
    }
  }
  return s;
}

}  // namespace cogrowth
