#include "dca/qpoly.hpp"

#include <sstream>

#include "dca/config.hpp"

namespace dca {

namespace {
long long ll_of(__int128 v) {
  if (v > (__int128)INT64_MAX || v < (__int128)INT64_MIN)
    throw std::overflow_error("rational arithmetic overflow");
  return (long long)v;
}
__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) { __int128 t = a % b; a = b; b = t; }
  return a;
}
}  // namespace

Rat::Rat(long long n, long long d) { *this = checked(n, d); }

Rat Rat::checked(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) { n = -n; d = -d; }
  __int128 g = gcd128(n, d);
  if (g > 1) { n /= g; d /= g; }
  Rat r;
  r.num = ll_of(n);
  r.den = ll_of(d);
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  return checked((__int128)num * o.den + (__int128)o.num * den, (__int128)den * o.den);
}
Rat Rat::operator-(const Rat& o) const {
  return checked((__int128)num * o.den - (__int128)o.num * den, (__int128)den * o.den);
}
Rat Rat::operator*(const Rat& o) const {
  return checked((__int128)num * o.num, (__int128)den * o.den);
}
Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw std::domain_error("rational division by zero");
  return checked((__int128)num * o.den, (__int128)den * o.num);
}

std::string Rat::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

long long QPoly::eval(long long q) const {
  __int128 r = 0;
  for (size_t i = c.size(); i-- > 0;) r = r * q + c[i];
  if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("QPoly::eval overflow");
  return (long long)r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r;
  r.c.resize(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.trim();
  return r;
}
QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r;
  r.c.resize(std::max(c.size(), o.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
  r.trim();
  return r;
}
QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  QPoly r;
  r.c.assign(c.size() + o.c.size() - 1, 0);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.trim();
  return r;
}
QPoly QPoly::operator*(long long k) const {
  QPoly r = *this;
  for (auto& x : r.c) x *= k;
  r.trim();
  return r;
}

std::string QPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << (c[i] > 0 ? "+" : "");
    first = false;
    if (i == 0 || (c[i] != 1 && c[i] != -1)) os << c[i];
    else if (c[i] == -1) os << "-";
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::vector<Rat> lagrange_fit(const std::vector<long long>& xs,
                              const std::vector<long long>& ys) {
  const size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("lagrange_fit size mismatch");
  std::vector<Rat> coeffs(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = next[k + 1] + basis[k];
        next[k] = next[k] - basis[k] * Rat(xs[j]);
      }
      basis = std::move(next);
      denom = denom * Rat(xs[i] - xs[j]);
    }
    Rat scale = Rat(ys[i]) / denom;
    for (size_t k = 0; k < basis.size(); ++k) coeffs[k] = coeffs[k] + basis[k] * scale;
  }
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

PolyFit fit_integer_poly(const std::vector<long long>& xs,
                         const std::vector<long long>& ys, int deg_bound) {
  PolyFit out;
  if (xs.size() < 2 || xs.size() != ys.size()) {
    out.failure = "need at least two points";
    return out;
  }
  size_t nfit = std::min<size_t>(xs.size() - 1, size_t(deg_bound) + 1);
  if (nfit < 1) nfit = 1;
  std::vector<long long> fx(xs.begin(), xs.begin() + nfit), fy(ys.begin(), ys.begin() + nfit);
  std::vector<Rat> coeffs = lagrange_fit(fx, fy);
  QPoly p;
  for (const Rat& r : coeffs) {
    if (!r.is_integer()) {
      out.failure = "non-integer coefficient " + r.str();
      return out;
    }
    p.c.push_back(r.num);
  }
  p.trim();
  // validate on every point, including the held-out tail
  for (size_t i = 0; i < xs.size(); ++i) {
    if (p.eval(xs[i]) != ys[i]) {
      out.failure = "validation mismatch at q=" + std::to_string(xs[i]);
      out.poly = p;
      return out;
    }
  }
  out.poly = p;
  out.validated = true;
  return out;
}

long long lift_integer_crt(const std::vector<long long>& residues,
                           const std::vector<long long>& moduli) {
  if (residues.size() != moduli.size() || residues.empty())
    throw std::invalid_argument("lift_integer_crt size mismatch");
  // incremental CRT over possibly non-coprime moduli
  auto norm = [](long long a, long long m) { a %= m; if (a < 0) a += m; return a; };
  long long r = norm(residues[0], moduli[0]);
  long long m = moduli[0];
  for (size_t i = 1; i < residues.size(); ++i) {
    long long r2 = norm(residues[i], moduli[i]);
    long long m2 = moduli[i];
    long long g = std::gcd(m, m2);
    if ((r2 - r) % g != 0)
      throw verify_error("inconsistent residues in integer lift");
    // solve r + m t = r2 (mod m2)
    long long md = m2 / g;
    long long a = (m / g) % md;
    long long b = ((r2 - r) / g) % md;
    if (b < 0) b += md;
    // inverse of a mod md
    long long t = 0, inv = -1;
    for (t = 0; t < md; ++t)
      if ((__int128)a * t % md == 1 % md) { inv = t; break; }
    if (inv < 0) throw std::logic_error("crt inverse not found");
    long long k = (__int128)inv * b % md;
    __int128 rr = (__int128)r + (__int128)m * k;
    m = m / g * m2;  // lcm
    r = (long long)(rr % m);
    if (r < 0) r += m;
  }
  // center into (-m/2, m/2]
  if (r > m / 2) r -= m;
  return r;
}

}  // namespace dca
