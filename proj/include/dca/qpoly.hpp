#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dca {

// Exact rational with overflow-checked arithmetic (intermediate products in
// __int128).  Enough headroom for Lagrange fits over small integer points.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d);

  static Rat checked(__int128 n, __int128 d);

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const { return Rat(-num, den); }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  std::string str() const;
};

// Integer polynomial in q (coefficients ascending).  Used for Lie-algebra
// coefficients that depend on the field cardinality, e.g. q + 1.
struct QPoly {
  std::vector<long long> c;  // c[0] + c[1] q + ...

  QPoly() = default;
  QPoly(long long constant) { if (constant) c = {constant}; }
  static QPoly var() { return QPoly::of({0, 1}); }
  static QPoly of(std::vector<long long> cc) { QPoly p; p.c = std::move(cc); p.trim(); return p; }

  void trim() { while (!c.empty() && c.back() == 0) c.pop_back(); }
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }
  long long eval(long long q) const;
  long long at_one() const { return eval(1); }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(long long k) const;
  bool operator==(const QPoly& o) const { return c == o.c; }
  std::string str() const;
};

// Exact Lagrange interpolation through integer points (x_i distinct).
// Returns rational coefficients, ascending.
std::vector<Rat> lagrange_fit(const std::vector<long long>& xs,
                              const std::vector<long long>& ys);

// Fit an integer polynomial of degree <= deg_bound through the given points,
// holding out the last point for validation.  Returns nullopt-like empty
// QPoly + false when no stable polynomial exists.
struct PolyFit {
  QPoly poly;
  bool validated = false;
  std::string failure;  // empty on success
};
PolyFit fit_integer_poly(const std::vector<long long>& xs,
                         const std::vector<long long>& ys, int deg_bound);

// Smallest-magnitude integer c with c = residues[i] (mod moduli[i]) for all
// i; throws verify_error if the congruences are inconsistent or the answer
// is ambiguous within (-L/2, L/2] where L = lcm of the moduli.
long long lift_integer_crt(const std::vector<long long>& residues,
                           const std::vector<long long>& moduli);

}  // namespace dca
