#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dca {

using fel = std::uint16_t;  // field element, encoded 0..q-1

// Exact arithmetic in GF(p^e), 3 <= p^e <= 2^16.  Elements are encoded as
// integers 0..q-1; for extension fields the base-p digits of the code are
// the coefficients of the residue polynomial (constant term = lowest digit),
// so 0 and 1 are the additive and multiplicative identities in every field.
//
// The modulus is the lowest irreducible monic polynomial of degree e in this
// encoding, which makes element codes deterministic across runs.
class Gf {
 public:
  // Cached accessor; throws std::invalid_argument for invalid (p, e).
  static const Gf& get(int p, int e);
  static const Gf& get_q(int q);  // q must be a prime power >= 3

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }

  // Modulus coefficients c0..ce (monic, ce = 1); size e+1.  For e = 1 this
  // is x - 0, i.e. {0, 1}.
  const std::vector<int>& modulus() const { return mod_; }
  std::string modulus_str() const;

  fel add(fel a, fel b) const {
    if (e_ == 1) { int s = a + b; return fel(s >= p_ ? s - p_ : s); }
    return add_ext(a, b);
  }
  fel neg(fel a) const {
    if (e_ == 1) return fel(a ? p_ - a : 0);
    return neg_ext(a);
  }
  fel sub(fel a, fel b) const { return add(a, neg(b)); }
  fel mul(fel a, fel b) const {
    if (a == 0 || b == 0) return 0;
    int s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  fel inv(fel a) const;
  fel div(fel a, fel b) const { return mul(a, inv(b)); }
  fel pow(fel a, long long k) const;

  fel of_int(long long n) const;  // image of an integer (n mod p in the prime subfield)

  // All elements, in code order 0..q-1.
  std::vector<fel> elements() const;

 private:
  Gf(int p, int e);
  fel add_ext(fel a, fel b) const;
  fel neg_ext(fel a) const;

  int p_, e_, q_;
  std::vector<int> mod_;
  std::vector<fel> exp_;  // exp_[i] = g^i, i in 0..q-2
  std::vector<int> log_;  // log_[a] for a != 0
};

bool is_prime(int p);

}  // namespace dca
