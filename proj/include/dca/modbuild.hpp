#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dca/rep.hpp"

namespace dca {

// Canonical label for an isomorphism class of indecomposables.
//  Root      - unique indecomposable with root dimension vector v
//  TubeNH    - non-homogeneous tube module: (arm, top mouth index, quasi-length)
//  TubeHom   - homogeneous tube module W_c[m], c a degree-one point (field code)
//  TubeHomPoly - homogeneous point of degree >= 2: monic irreducible pi, W_pi[s]
//  HomSum    - formal sum over all degree-one homogeneous points of W_c[m]
struct IsoKey {
  enum class Kind { Root, TubeNH, TubeHom, TubeHomPoly, HomSum };
  Kind kind = Kind::Root;
  DimVec v;                  // Root
  int arm = 0, top = 0, len = 0;  // TubeNH; len also = quasi-length m for TubeHom/HomSum
  int c = 0;                 // TubeHom point (field element code)
  std::vector<int> pcoeffs;  // TubeHomPoly: monic irreducible, ascending coeffs

  static IsoKey root(DimVec vv) { IsoKey k; k.kind = Kind::Root; k.v = std::move(vv); return k; }
  static IsoKey tube_nh(int arm, int top, int len);
  static IsoKey tube_hom(int c, int len);
  static IsoKey tube_hom_poly(std::vector<int> pc, int len);
  static IsoKey hom_sum(int len);

  bool operator<(const IsoKey& o) const;
  bool operator==(const IsoKey& o) const;
  std::string str() const;
};

// The set E_Delta of excluded degree-one parameters: {0} for A_n, {0,-1}
// otherwise (these points carry the non-homogeneous tubes, together with
// the point at infinity).
std::vector<fel> e_delta(const CanonQuiver& Q, const Gf& F);

// Monic polynomials over GF(q), ascending coefficients.
using GfPoly = std::vector<fel>;
GfPoly gfpoly_mul(const Gf& F, const GfPoly& a, const GfPoly& b);
GfPoly gfpoly_pow(const Gf& F, const GfPoly& a, int s);
bool gfpoly_irreducible(const Gf& F, const GfPoly& a);
std::vector<GfPoly> monic_irreducibles(const Gf& F, int deg);
Mat companion(const Gf& F, const GfPoly& monic);

class ModuleFactory;

// One non-homogeneous tube: mouth modules indexed so that
// mouth[(j+1) mod p] = tau(mouth[j]), with mouth[0] the module
// W' = M(delta - sum of arm simples); modules are memoized ladders.
class TubeModel {
 public:
  TubeModel(ModuleFactory& mf, int arm);

  int arm() const { return arm_; }
  int rank() const { return p_; }
  const Rep& mouth(int j) const { return mouth_[((j % p_) + p_) % p_]; }
  const DimVec& mouth_dim(int j) const { return mouth_dims_[((j % p_) + p_) % p_]; }

  const Rep& module(int top, int len);
  DimVec dim_of(int top, int len) const;

  // (top, len) for a tube dimension vector not in Z*delta; nullopt if the
  // vector does not belong to this tube.
  std::optional<std::pair<int, int>> coords_for_dims(const DimVec& v) const;

  // top index of a concrete module with dim in Z*delta (Hom test against
  // the mouths).
  int top_of(const Rep& X) const;

 private:
  ModuleFactory& mf_;
  int arm_, p_;
  std::vector<Rep> mouth_;
  std::vector<DimVec> mouth_dims_;
  std::map<std::pair<int, int>, Rep> memo_;
};

// Constructors for the canonical indecomposables over one field, with a
// shared memo cache (mutex-guarded; inserts are idempotent up to iso).
class ModuleFactory {
 public:
  ModuleFactory(const CanonQuiver& Q, const Gf& F);

  const CanonQuiver& quiver() const { return *Q_; }
  const Gf& field() const { return *F_; }

  Rep simple(int vertex) const;
  Rep w_c(fel c) const;                       // dim delta
  Rep w_poly(const GfPoly& pi, int s) const;  // homogeneous point pi, quasi-length s
  Rep x_ij(int arm, int j) const;             // dim delta
  Rep t_x(int vertex);                        // M(delta - e_x)
  Rep thin_support_module(const std::vector<char>& support) const;

  const Rep& module_for_root(const DimVec& v);
  Rep module_for_root_alt(const DimVec& v);  // independent search order (for uniqueness tests)

  TubeModel& tube(int arm);

  // All indecomposable classes of dimension vector m*delta.
  struct LayerClass {
    IsoKey key;
    Rep rep;
  };
  const std::vector<LayerClass>& layer_delta(int m);

  // Classes of an arbitrary dimension vector: a single root class, a
  // delta-multiple layer, or nothing.
  std::vector<LayerClass> classes_of_dims(const DimVec& d);

  IsoKey tube_key(const Rep& X);
  Rep rep_for_key(const IsoKey& k);

  // degree-one homogeneous parameters (k minus E_Delta)
  std::vector<fel> homogeneous_params() const;

 private:
  Rep search_root_module(const DimVec& v, bool alt);
  Rep build_regular_root(const DimVec& v);

  const CanonQuiver* Q_;
  const Gf* F_;
  std::map<DimVec, Rep> root_memo_;
  std::map<int, std::unique_ptr<TubeModel>> tubes_;
  std::map<int, std::vector<LayerClass>> layer_memo_;
  std::mutex mx_;
};

}  // namespace dca
