#include "hkr/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hkr/errors.hpp"

namespace hkr {

namespace {

struct Gauss {
  Rational re, im;
  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

Gauss gmul(const Gauss& a, const Gauss& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Gauss ginv(const Gauss& a) {
  Rational n = a.re * a.re + a.im * a.im;
  return {a.re / n, -a.im / n};
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p >> 63) throw Error("radicand overflow");
  return static_cast<std::uint64_t>(p);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

void squarefree_split(const Integer& n, Integer& root, Integer& squarefree) {
  if (sgn(n) <= 0) throw Error("squarefree_split needs a positive integer");
  Integer rest = n;
  root = 1;
  squarefree = 1;
  for (unsigned long p = 2; p < 1000000; ++p) {
    Integer pp = Integer(p) * p;
    if (pp > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        rest /= p;
        root *= p;
      } else {
        squarefree *= p;
      }
    }
  }
  // What remains is 1, a prime, a prime square, or a product of two large
  // primes; only the square case needs care.
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
    root *= r;
  } else {
    squarefree *= rest;
  }
}

Scalar::Scalar(const Rational& v) {
  if (sgn(v) != 0) terms_.push_back({1, v, 0});
}

Scalar::Scalar(const Rational& re, const Rational& im) {
  if (sgn(re) != 0 || sgn(im) != 0) terms_.push_back({1, re, im});
}

Scalar Scalar::i() { return Scalar(Rational(0), Rational(1)); }

Scalar Scalar::sqrt(const Rational& q) {
  if (sgn(q) == 0) return Scalar();
  if (sgn(q) < 0) return i() * sqrt(-q);
  Integer pq = q.get_num() * q.get_den();
  Integer root, free;
  squarefree_split(pq, root, free);
  if (!free.fits_ulong_p()) throw Error("radicand too large");
  Scalar out;
  out.terms_.push_back({free.get_ui(), Rational(root, q.get_den()), 0});
  out.terms_.back().re.canonicalize();
  return out;
}

Scalar Scalar::from_terms(std::vector<Term> terms) {
  std::map<std::uint64_t, Gauss> acc;
  for (auto& t : terms) {
    if (t.radicand == 0) continue;
    Integer root, free;
    squarefree_split(Integer(static_cast<unsigned long>(t.radicand)), root, free);
    auto& g = acc[free.get_ui()];
    g.re += t.re * root;
    g.im += t.im * root;
  }
  Scalar out;
  for (auto& [r, g] : acc)
    if (!g.zero()) out.terms_.push_back({r, g.re, g.im});
  return out;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].radicand == 1 && terms_[0].re == 1 &&
         sgn(terms_[0].im) == 0;
}

bool Scalar::is_rational() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].radicand == 1 && sgn(terms_[0].im) == 0);
}

bool Scalar::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return sgn(t.im) == 0; });
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw Error("scalar is not rational: " + str());
  return terms_.empty() ? Rational(0) : terms_[0].re;
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.im = -t.im;
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) {
    t.re = -t.re;
    t.im = -t.im;
  }
  return out;
}

void Scalar::add_scaled(const Scalar& o, int sign) {
  if (o.terms_.empty()) return;
  if (terms_.size() == 1 && o.terms_.size() == 1 &&
      terms_[0].radicand == o.terms_[0].radicand) {
    auto& t = terms_[0];
    if (sign > 0) {
      t.re += o.terms_[0].re;
      t.im += o.terms_[0].im;
    } else {
      t.re -= o.terms_[0].re;
      t.im -= o.terms_[0].im;
    }
    if (sgn(t.re) == 0 && sgn(t.im) == 0) terms_.clear();
    return;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t a = 0, b = 0;
  while (a < terms_.size() || b < o.terms_.size()) {
    if (b == o.terms_.size() ||
        (a < terms_.size() && terms_[a].radicand < o.terms_[b].radicand)) {
      out.push_back(std::move(terms_[a++]));
    } else if (a == terms_.size() || o.terms_[b].radicand < terms_[a].radicand) {
      const Term& t = o.terms_[b++];
      if (sign > 0)
        out.push_back(t);
      else
        out.push_back({t.radicand, -t.re, -t.im});
    } else {
      Term t = std::move(terms_[a++]);
      const Term& u = o.terms_[b++];
      if (sign > 0) {
        t.re += u.re;
        t.im += u.im;
      } else {
        t.re -= u.re;
        t.im -= u.im;
      }
      if (sgn(t.re) != 0 || sgn(t.im) != 0) out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  add_scaled(o, 1);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  add_scaled(o, -1);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    const auto& s = a.terms_[0];
    const auto& t = b.terms_[0];
    Rational re, im;
    if (sgn(s.im) == 0 && sgn(t.im) == 0) {
      re = s.re * t.re;
    } else {
      re = s.re * t.re - s.im * t.im;
      im = s.re * t.im + s.im * t.re;
    }
    std::uint64_t g = std::gcd(s.radicand, t.radicand);
    std::uint64_t r = mul_checked(s.radicand / g, t.radicand / g);
    if (g != 1) {
      re *= g;
      im *= g;
    }
    out.terms_.push_back({r, std::move(re), std::move(im)});
    return out;
  }
  std::map<std::uint64_t, Gauss> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      std::uint64_t g = std::gcd(s.radicand, t.radicand);
      std::uint64_t r = mul_checked(s.radicand / g, t.radicand / g);
      Gauss p = gmul({s.re, s.im}, {t.re, t.im});
      auto& slot = acc[r];
      slot.re += p.re * g;
      slot.im += p.im * g;
    }
  }
  for (auto& [r, g] : acc)
    if (!g.zero()) out.terms_.push_back({r, std::move(g.re), std::move(g.im)});
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& s = a.terms_[k];
    const auto& t = b.terms_[k];
    if (s.radicand != t.radicand || s.re != t.re || s.im != t.im) return false;
  }
  return true;
}

Scalar Scalar::inverse() const {
  if (terms_.empty()) throw ZeroDivision("inverse of 0");
  if (terms_.size() == 1) {
    const auto& t = terms_[0];
    Gauss g = ginv({t.re, t.im});
    Scalar out;
    out.terms_.push_back({t.radicand, g.re / t.radicand, g.im / t.radicand});
    return out;
  }
  // Linear solve a*x = 1 over the basis of square-free products of the
  // primes occurring in the radicands.
  std::vector<std::uint64_t> primes;
  for (const auto& t : terms_)
    for (auto p : prime_factors(t.radicand)) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const std::size_t k = primes.size();
  if (k > 12) throw Error("too many independent radicals");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::uint64_t> basis(n, 1);
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t mask = 0; mask < n; ++mask) {
    for (std::size_t j = 0; j < k; ++j)
      if (mask & (std::size_t{1} << j)) basis[mask] = mul_checked(basis[mask], primes[j]);
    index[basis[mask]] = mask;
  }
  // Column c of M is this * sqrt(basis[c]).
  std::vector<std::vector<Gauss>> m(n, std::vector<Gauss>(n + 1));
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& t : terms_) {
      std::uint64_t g = std::gcd(t.radicand, basis[c]);
      std::uint64_t r = (t.radicand / g) * (basis[c] / g);
      auto& slot = m[index.at(r)][c];
      slot.re += t.re * g;
      slot.im += t.im * g;
    }
  }
  m[0][n] = {1, 0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].zero()) ++piv;
    if (piv == n) throw ZeroDivision("singular multiplication matrix");
    std::swap(m[piv], m[col]);
    Gauss inv = ginv(m[col][col]);
    for (std::size_t j = col; j <= n; ++j) m[col][j] = gmul(m[col][j], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].zero()) continue;
      Gauss f = m[r][col];
      for (std::size_t j = col; j <= n; ++j) {
        Gauss p = gmul(f, m[col][j]);
        m[r][j].re -= p.re;
        m[r][j].im -= p.im;
      }
    }
  }
  std::vector<Term> out;
  for (std::size_t c = 0; c < n; ++c)
    if (!m[c][n].zero()) out.push_back({basis[c], m[c][n].re, m[c][n].im});
  std::sort(out.begin(), out.end(),
            [](const Term& x, const Term& y) { return x.radicand < y.radicand; });
  Scalar res;
  res.terms_ = std::move(out);
  return res;
}

namespace {

std::string coefficient(const Rational& re, const Rational& im, bool wrap) {
  auto imag = [](const Rational& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return v.get_str() + "*i";
  };
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) return imag(im);
  std::string s = re.get_str();
  std::string t = imag(abs(im));
  s += (sgn(im) < 0 ? "-" : "+") + t;
  return wrap ? "(" + s + ")" : s;
}

}  // namespace

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string piece;
    if (t.radicand == 1) {
      piece = coefficient(t.re, t.im, false);
    } else {
      std::string rad = "sqrt(" + std::to_string(t.radicand) + ")";
      if (sgn(t.im) == 0 && t.re == 1)
        piece = rad;
      else if (sgn(t.im) == 0 && t.re == -1)
        piece = "-" + rad;
      else
        piece = coefficient(t.re, t.im, true) + "*" + rad;
    }
    if (first) {
      out = piece;
      first = false;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v /= unary();
      else
        return v;
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    return factor();
  }

  Scalar factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (c == 'i') {
      ++pos_;
      return Scalar::i();
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) fail("expected '('");
      Scalar arg = expr();
      if (!eat(')')) fail("expected ')'");
      if (!arg.is_rational()) fail("sqrt argument must be rational");
      return Scalar::sqrt(arg.to_rational());
    }
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return Parser(text).run(); }

}  // namespace hkr
