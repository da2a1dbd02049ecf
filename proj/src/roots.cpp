#include "cogrowth/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace cogrowth {

namespace {

int sign_of(const Rat &v) { return sgn(v); }

int count_variations(const std::vector<int> &signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

std::vector<Poly> sturm_sequence(const Poly &p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_sequence of the zero polynomial");
  std::vector<Poly> chain;
  chain.push_back(p);
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations_at(const std::vector<Poly> &chain, const Rat &x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly &p : chain) signs.push_back(sign_of(p.eval(x)));
  return count_variations(signs);
}

int sign_variations_neg_inf(const std::vector<Poly> &chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly &p : chain) {
    if (p.is_zero()) {
      signs.push_back(0);
    } else {
      int s = sign_of(p.leading());
      signs.push_back(p.degree() % 2 == 0 ? s : -s);
    }
  }
  return count_variations(signs);
}

int sign_variations_pos_inf(const std::vector<Poly> &chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly &p : chain) signs.push_back(p.is_zero() ? 0 : sign_of(p.leading()));
  return count_variations(signs);
}

int count_real_roots(const Poly &p) {
  Poly sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  auto chain = sturm_sequence(sf);
  return sign_variations_neg_inf(chain) - sign_variations_pos_inf(chain);
}

int count_roots_in(const Poly &p, const Rat &a, const Rat &b) {
  if (!(a < b)) throw std::invalid_argument("count_roots_in: need a < b");
  Poly sf = squarefree_part(p);
  if (sf.degree() <= 0) return 0;
  if (sf.eval(a) == 0 || sf.eval(b) == 0)
    throw std::invalid_argument("count_roots_in: endpoint is a root");
  auto chain = sturm_sequence(sf);
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

Rat cauchy_root_bound(const Poly &p) {
  if (p.degree() <= 0) return Rat(1);
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat a = p[i] / p.leading();
    if (a < 0) a = -a;
    if (a > m) m = a;
  }
  return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const Poly &p, const Rat &width) {
  Poly sf = squarefree_part(p);
  std::vector<RootInterval> out;
  if (sf.degree() <= 0) return out;
  auto chain = sturm_sequence(sf);
  auto var = [&](const Rat &x) { return sign_variations_at(chain, x); };

  // Pick an enclosing interval with non-root endpoints.
  Rat bound = cauchy_root_bound(sf) + 1;

  // Recursive bisection: interval (a, b) with p(a), p(b) != 0 and va - vb
  // roots inside.
  struct Seg {
    Rat a, b;
    int va, vb;
  };
  std::vector<Seg> stack{{-bound, bound, var(-bound), var(bound)}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int roots = s.va - s.vb;
    if (roots <= 0) continue;
    if (roots == 1 && (s.b - s.a) < width) {
      out.push_back(RootInterval{s.a, s.b});
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    if (sf.eval(mid) == 0) {
      out.push_back(RootInterval{mid, mid});
      // Excise a punctured neighbourhood of the exact root, shrinking it
      // until it provably contains no other root (variation drop of 1).
      Rat eps = (s.b - s.a) / 1024;
      Rat lo, hi;
      while (true) {
        lo = mid - eps;
        hi = mid + eps;
        while (sf.eval(lo) == 0) lo = (mid + lo) / 2;
        while (sf.eval(hi) == 0) hi = (hi + mid) / 2;
        if (var(lo) - var(hi) == 1) break;
        eps /= 16;
      }
      stack.push_back(Seg{s.a, lo, s.va, var(lo)});
      stack.push_back(Seg{hi, s.b, var(hi), s.vb});
    } else {
      int vm = var(mid);
      stack.push_back(Seg{s.a, mid, s.va, vm});
      stack.push_back(Seg{mid, s.b, vm, s.vb});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval &x, const RootInterval &y) { return x.lo < y.lo; });
  return out;
}

std::vector<long> integer_roots_in(const Poly &p, long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) {
    if (p.eval(Rat(v)) == 0) out.push_back(v);
  }
  return out;
}

std::vector<Poly> squarefree_decomposition(const Poly &p) {
  if (p.degree() <= 0) return {};
  // Yun's algorithm over a field of characteristic zero.
  Poly a = p.monic();
  Poly g = Poly::gcd(a, a.derivative());
  std::vector<Poly> out;
  if (g.degree() == 0) {
    out.push_back(a);
    return out;
  }
  Poly b = a / g;
  Poly c = a.derivative() / g;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly f = Poly::gcd(b, d);
    out.push_back(f.monic());
    b = b / f;
    c = d / f;
    d = c - b.derivative();
  }
  return out;
}

Poly squarefree_part(const Poly &p) {
  if (p.degree() <= 0) return p.monic();
  Poly d = p.derivative();
  Poly g = Poly::gcd(p, d);
  if (g.degree() == 0) return p.monic();
  return (p / g).monic();
}

}  // namespace cogrowth
