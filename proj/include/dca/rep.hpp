#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dca/canon.hpp"
#include "dca/field.hpp"
#include "dca/matrix.hpp"

namespace dca {

// A finite-field representation of the canonical quiver.  Every constructor
// in the repository produces relation-satisfying representations; callers
// that assemble maps by hand must go through check_relation.
struct Rep {
  const Gf* F = nullptr;
  const CanonQuiver* Q = nullptr;
  DimVec dims;
  std::vector<Mat> maps;  // indexed like Q->arrows()

  static Rep zero(const CanonQuiver& Q, const Gf& F, const DimVec& dims);

  int total_dim() const { return total(dims); }
  bool is_zero_module() const { return total_dim() == 0; }
  Mat arm_composite(int arm) const;  // M(a_i1) ... M(a_ip(i)) : M(inf) -> M(1)
  bool check_relation() const;

  std::string json() const;
  static Rep from_json(const std::string& text);
};

Rep direct_sum(const Rep& a, const Rep& b);

// Cheap isomorphism invariants used to refuse most non-isomorphic pairs
// before solving any linear system.
struct RepProfile {
  DimVec dims;
  std::vector<int> arrow_ranks;
  bool operator==(const RepProfile& o) const = default;
};
RepProfile profile(const Rep& X);

// Basis of the intertwiner space Hom(X, Y); elements are vertex-indexed
// matrix tuples.
struct HomSpace {
  const Rep* X = nullptr;
  const Rep* Y = nullptr;
  std::vector<std::vector<Mat>> basis;

  int dim() const { return (int)basis.size(); }
  std::vector<Mat> element(const std::vector<fel>& coeffs) const;
};

HomSpace hom(const Rep& X, const Rep& Y);
std::vector<Mat> hom_compose(const Rep& X, const Rep& Y, const Rep& Z,
                             const std::vector<Mat>& f, const std::vector<Mat>& g);  // g after f

bool tuple_is_iso(const std::vector<Mat>& phi);
bool tuple_is_injective(const std::vector<Mat>& phi);
bool tuple_is_surjective(const std::vector<Mat>& phi);
bool tuple_is_zero(const std::vector<Mat>& phi);
bool tuple_is_nilpotent(const std::vector<Mat>& phi);

// Exact isomorphism decision (throws undecided_error past caps, which does
// not happen at desk scale).
bool iso(const Rep& X, const Rep& Y);

// End(X) local?  Decided by: dim End = 1; else exhaustive unit-or-nilpotent
// scan when |End| is under the cap; else Fitting-splitting certificates on
// basis elements, pairwise sums and seeded samples (decomposable only);
// else undecided_error.
bool is_indecomposable(const Rep& X);

long long aut_count(const Rep& X);

// --- submodules ---

using SubTuple = std::vector<Subspace>;  // one subspace per vertex

bool is_submodule(const Rep& Z, const SubTuple& U);
SubTuple close_submodule(const Rep& Z, SubTuple U);  // arrow closure
DimVec sub_dims(const SubTuple& U);
SubTuple zero_sub(const Rep& Z);
SubTuple full_sub(const Rep& Z);

// Restriction of Z to an arrow-closed tuple, and the quotient Z/U.
Rep sub_rep(const Rep& Z, const SubTuple& U);
Rep quotient(const Rep& Z, const SubTuple& U);

// Full submodule lattice by closure, duplicate-free.
void submodules_all(const Rep& Z, long long cap, const std::function<void(const SubTuple&)>& fn);

// All submodules with the given dimension vector, by source-to-sink
// propagation of subspace choices.
void submodules_with_dims(const Rep& Z, const DimVec& target, long long cap,
                          const std::function<void(const SubTuple&)>& fn);

long long count_submodules_with_dims(const Rep& Z, const DimVec& target, long long cap);

// Image of a module map as a submodule tuple.
SubTuple image_tuple(const Rep& Y, const Rep& Z, const std::vector<Mat>& f);

// --- Ext^1 ---

// Ext^1(X, Y) presented by a basis of cocycle representatives complementary
// to the coboundaries.  Middle terms are lower-block-triangular with the
// submodule Y in the first block.
struct ExtGroup {
  const Rep* X = nullptr;
  const Rep* Y = nullptr;
  int cocycle_dim = 0;
  int coboundary_dim = 0;
  std::vector<std::vector<Mat>> basis;  // per arrow, complement representatives

  int dim() const { return (int)basis.size(); }
  std::vector<Mat> cocycle(const std::vector<fel>& coeffs) const;
};

ExtGroup ext1(const Rep& X, const Rep& Y);
Rep middle_term(const Rep& X, const Rep& Y, const std::vector<Mat>& cocycle);

// --- Gabriel-Roiter ---

struct GRMeasure {
  std::vector<int> lengths;  // l1 < ... < lt
  // exact dyadic value as a pair (numerator, 2^shift)
  long long num() const;
  static constexpr int kShift = 40;
  bool operator==(const GRMeasure& o) const { return lengths == o.lengths; }
  bool operator<(const GRMeasure& o) const { return num() < o.num(); }
  std::string str() const;
};

GRMeasure gr_measure(const Rep& M);
// Proper indecomposable submodules attaining the maximal GR measure.
std::vector<SubTuple> gr_submodule_tuples(const Rep& M);

}  // namespace dca
