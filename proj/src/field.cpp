#include "dca/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace dca {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; (long long)d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Dense polynomial over GF(p), coefficients c[0] + c[1] x + ...
using ppoly = std::vector<int>;

ppoly ptrim(ppoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ppoly pmod(ppoly a, const ppoly& m, int p) {
  a = ptrim(std::move(a));
  const int dm = (int)m.size() - 1;
  while ((int)a.size() - 1 >= dm) {
    int da = (int)a.size() - 1;
    int c = a.back();  // m monic
    for (int i = 0; i <= dm; ++i) {
      int& t = a[da - dm + i];
      t = (t - c * m[i]) % p;
      if (t < 0) t += p;
    }
    a = ptrim(std::move(a));
  }
  return a;
}

ppoly pmulmod(const ppoly& a, const ppoly& b, const ppoly& m, int p) {
  if (a.empty() || b.empty()) return {};
  ppoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(std::move(r), m, p);
}

long long pencode(const ppoly& a, int p) {
  long long n = 0;
  for (size_t i = a.size(); i-- > 0;) n = n * p + a[i];
  return n;
}

ppoly pdecode(long long n, int p) {
  ppoly a;
  while (n) { a.push_back(int(n % p)); n /= p; }
  return a;
}

bool divides(const ppoly& d, ppoly a, int p) {
  return pmod(std::move(a), d, p).empty();
}

// Monic irreducible of degree e over GF(p) with the smallest integer
// encoding.  Tested by trial division against all monic polynomials of
// degree 1..e/2 (tiny for the supported range).
ppoly lowest_irreducible(int p, int e) {
  if (e == 1) return ppoly{0, 1};
  long long pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  for (long long low = 0; low < pe; ++low) {
    ppoly cand = pdecode(low, p);
    cand.resize(e + 1, 0);
    cand[e] = 1;
    bool irred = true;
    for (int dd = 1; irred && 2 * dd <= e; ++dd) {
      long long pd = 1;
      for (int i = 0; i < dd; ++i) pd *= p;
      for (long long dl = 0; dl < pd; ++dl) {
        ppoly div = pdecode(dl, p);
        div.resize(dd + 1, 0);
        div[dd] = 1;
        if (divides(div, cand, p)) { irred = false; break; }
      }
    }
    if (irred) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Gf::Gf(int p, int e) : p_(p), e_(e) {
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 65536) throw std::invalid_argument("field too large (q > 2^16)");
  }
  q_ = int(q);
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
  if (q_ < 3) throw std::invalid_argument("q must be >= 3");
  mod_ = lowest_irreducible(p, e);

  // Discrete-log tables over a primitive element.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  for (long long gcode = 1; gcode < q_; ++gcode) {
    ppoly g = pdecode(gcode, p);
    ppoly acc{1};
    std::vector<fel> ex(q_ - 1, 0);
    std::vector<int> lg(q_, -1);
    bool primitive = true;
    for (int i = 0; i < q_ - 1; ++i) {
      long long code = pencode(acc, p);
      if (lg[code] != -1) { primitive = false; break; }
      ex[i] = fel(code);
      lg[code] = i;
      acc = pmulmod(acc, g, mod_, p);
    }
    if (primitive && pencode(acc, p) == 1) {
      exp_ = std::move(ex);
      log_ = std::move(lg);
      return;
    }
  }
  throw std::logic_error("no primitive element found");
}

fel Gf::add_ext(fel a, fel b) const {
  int r = 0, mul = 1;
  int x = a, y = b;
  for (int i = 0; i < e_; ++i) {
    int s = x % p_ + y % p_;
    if (s >= p_) s -= p_;
    r += s * mul;
    mul *= p_;
    x /= p_;
    y /= p_;
  }
  return fel(r);
}

fel Gf::neg_ext(fel a) const {
  int r = 0, mul = 1;
  int x = a;
  for (int i = 0; i < e_; ++i) {
    int d = x % p_;
    r += (d ? p_ - d : 0) * mul;
    mul *= p_;
    x /= p_;
  }
  return fel(r);
}

fel Gf::inv(fel a) const {
  if (a == 0) throw std::domain_error("division by zero in GF");
  int l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

fel Gf::pow(fel a, long long k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw std::domain_error("0 to a negative power");
    return 0;
  }
  long long m = q_ - 1;
  long long l = (log_[a] * (k % m)) % m;
  if (l < 0) l += m;
  return exp_[l];
}

fel Gf::of_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return fel(r);
}

std::vector<fel> Gf::elements() const {
  std::vector<fel> v(q_);
  for (int i = 0; i < q_; ++i) v[i] = fel(i);
  return v;
}

std::string Gf::modulus_str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = e_; i >= 0; --i) {
    if (mod_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || mod_[i] != 1) os << mod_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

const Gf& Gf::get(int p, int e) {
  static std::map<std::pair<int, int>, const Gf*> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  auto it = cache.find({p, e});
  if (it != cache.end()) return *it->second;
  const Gf* f = new Gf(p, e);
  cache[{p, e}] = f;
  return *f;
}

const Gf& Gf::get_q(int q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    int e = 0;
    long long t = q;
    while (t % p == 0) { t /= p; ++e; }
    if (t == 1) return get(p, e);
  }
  throw std::invalid_argument("q is not a prime power");
}

}  // namespace dca
