#pragma once

#include <map>
#include <string>
#include <vector>

#include "dca/modbuild.hpp"
#include "dca/qpoly.hpp"
#include "dca/rep.hpp"

namespace dca {

// F_{X,Y}^Z = #{submodules U of Z with U iso Y and Z/U iso X}, exact.
// Strategy is picked per triple: simple sub/quotient fast paths, counting
// distinct images of injective maps Y -> Z, or guided submodule search.
enum class HallMethod { Zero, SimpleSub, SimpleQuot, ViaHom, DimsSearch, FullLattice };

struct HallValue {
  long long count = 0;
  HallMethod method = HallMethod::Zero;
};

HallValue hall_number_ex(const Rep& X, const Rep& Y, const Rep& Z);
long long hall_number(const Rep& X, const Rep& Y, const Rep& Z);

// Independent brute-force count over the full submodule lattice.
long long hall_number_bruteforce(const Rep& X, const Rep& Y, const Rep& Z);

// W_{X,Y}^Z = #{(f, g) : 0 -> Y -f-> Z -g-> X -> 0 exact}.  Counts literal
// pairs when the Hom spaces are small enough, otherwise uses
// W = |Aut X| * #{injective f with coker iso X}.
long long w_number(const Rep& X, const Rep& Y, const Rep& Z);

// Riedtmann formula cross-check (eq. F = |Ext^1(X,Y)_Z| |Aut Z| /
// (|Hom(X,Y)| |Aut X| |Aut Y|)), with the brute-force F on the left.
struct RiedtmannReport {
  long long f_brute = 0;
  long long f_formula = 0;
  long long ext_classes_with_middle_z = 0;
  long long aut_z = 0, hom_xy = 0, aut_x = 0, aut_y = 0;
  bool pass = false;
  std::string str() const;
};
RiedtmannReport riedtmann_check(const Rep& X, const Rep& Y, const Rep& Z);

// Hall bracket coefficient F_{X,Y}^Z - F_{Y,X}^Z.
long long bracket_coeff(const Rep& X, const Rep& Y, const Rep& Z);

// Interpolated Hall polynomial from per-field counts (ascending q), with the
// last field held out for validation.
struct HallPoly {
  QPoly poly;
  std::vector<long long> fit_q;
  long long holdout_q = 0;
  std::vector<long long> counts;
  long long at_one = 0;
  bool validated = false;
  std::string failure;
};
HallPoly fit_hall_poly(const std::vector<long long>& qs, const std::vector<long long>& counts,
                       int degree_bound);

}  // namespace dca
