#include "hkr/linalg.hpp"

#include <algorithm>

namespace hkr {

namespace {

std::vector<Integer> divisors(Integer n) {
  if (sgn(n) < 0) n = -n;
  std::vector<std::pair<Integer, int>> fac;
  for (unsigned long p = 2; p < 1000000 && Integer(p) * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e) fac.push_back({Integer(p), e});
  }
  if (n > 1) fac.push_back({n, 1});
  std::vector<Integer> out{1};
  for (auto& [p, e] : fac) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

Rational eval(const QVec& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

// Synthetic division by (t - r).
QVec deflate(const QVec& p, const Rational& r) {
  QVec q(p.size() - 1);
  Rational carry = 0;
  for (std::size_t k = p.size(); k-- > 1;) {
    carry = carry * r + p[k];
    q[k - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<Rational> rational_roots(const QVec& poly) {
  QVec p = poly;
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  std::vector<Rational> roots;
  auto push = [&](const Rational& r) {
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  };
  while (p.size() > 1 && sgn(p[0]) == 0) {
    push(Rational(0));
    p.erase(p.begin());
  }
  while (p.size() > 1) {
    Integer den = 1;
    for (auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Integer a0 = Integer(p.front() * den);
    Integer an = Integer(p.back() * den);
    bool found = false;
    for (const auto& num : divisors(a0)) {
      for (const auto& d : divisors(an)) {
        for (int s : {1, -1}) {
          Rational r(num * s, d);
          r.canonicalize();
          if (sgn(eval(p, r)) == 0) {
            push(r);
            p = deflate(p, r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hkr
