#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dca/hall.hpp"
#include "dca/modbuild.hpp"
#include "dca/qpoly.hpp"

namespace dca {

// Sparse formal combination of iso-classes with integer-polynomial-in-q
// coefficients.  Symbolic elements only carry field-independent keys
// (Root, TubeNH, HomSum); per-field expansions work on concrete atoms.
struct LieElt {
  std::map<IsoKey, QPoly> terms;

  static LieElt single(IsoKey k, QPoly c = QPoly(1));
  LieElt operator+(const LieElt& o) const;
  LieElt operator-(const LieElt& o) const;
  LieElt scaled(const QPoly& c) const;
  bool is_zero() const { return terms.empty(); }
  void prune();
  std::string str() const;
};

// Per-field working context: module factory, atom registry, Hall memo.
class FieldCtx {
 public:
  FieldCtx(const CanonQuiver& Q, const Gf& F);

  const Gf& field() const { return *F_; }
  ModuleFactory& factory() { return MF_; }

  int id_for(const IsoKey& key);  // builds the module if needed
  const IsoKey& key_of(int id) const { return keys_[id]; }
  const Rep& rep_of(int id) const { return reps_[id]; }
  std::vector<int> layer_ids(const DimVec& d);

  long long hall(int ix, int iy, int iz);  // memoized F_{X,Y}^Z

 private:
  const CanonQuiver* Q_;
  const Gf* F_;
  ModuleFactory MF_;
  std::vector<IsoKey> keys_;
  std::vector<Rep> reps_;
  std::map<IsoKey, int> ids_;
  std::map<std::tuple<int, int, int>, long long> hall_memo_;
};

// Per-field sparse vector over atom ids; coefficients are exact integers
// (Hall-number differences before any reduction).
using FieldVec = std::map<int, long long>;

struct ShiftTable {
  std::map<DimVec, Rat> r;                   // u_{m(v+delta)} = r_v u_{m(v)}
  std::map<DimVec, std::string> provenance;  // anchor / edge description
  std::vector<DimVec> nonunit;               // |r_v| != 1 (notable findings)
  // shift product from the canonical lift of (deg v) up to v
  Rat product_to(const CanonQuiver& Q, const DimVec& v) const;
};

struct SerreItem {
  std::string eq;
  int x = -1, y = -1;
  std::string mode;  // "q=<n>" or "q=1"
  bool pass = false;
  std::string detail;
};

struct SerreReport {
  std::vector<SerreItem> items;
  bool all_pass = true;
  std::string str() const;
};

struct QuotientAlgebra {
  std::string type_name;
  int n = 0;       // Cartan dimension
  int nroots = 0;  // number of g-roots
  std::vector<std::string> labels;           // size n + nroots
  std::vector<DimVec> grades;                // deg root per basis element (zero rows for eta)
  std::map<std::pair<int, int>, std::map<int, Rat>> constants;  // [b_i, b_j]

  int dim() const { return n + nroots; }
  std::map<int, Rat> bracket(int i, int j) const;
  bool jacobi_holds(int i, int j, int k) const;
  // exhaustive when dim^3 <= budget, otherwise seeded random triples
  bool verify_jacobi(long long budget, std::uint64_t seed, long long* checked) const;
  std::string json(const std::string& config_hash) const;
};

// Orchestrates the per-field Lie algebras over a battery of fields and the
// q -> 1 structure extraction.
class LieContext {
 public:
  LieContext(const CanonicalType& t, std::vector<std::pair<int, int>> battery);

  const CanonQuiver& quiver() const { return *Q_; }
  int nfields() const { return (int)fctx_.size(); }
  FieldCtx& fctx(int i) { return *fctx_[i]; }

  // Chevalley generators
  LieElt eps(int x) const;         // x in Delta_0
  LieElt zeta(int x) const;        // sign -1 at x = vertex 1
  LieElt eta_closed(int x) const;  // closed forms for [eps_x, zeta_x]

  FieldVec expand(const LieElt& e, FieldCtx& fc) const;
  FieldVec bracket_field(const FieldVec& a, const FieldVec& b, FieldCtx& fc) const;

  // closed-form bracket inside one tube (both keys TubeNH of the same
  // tube, or TubeHom at the same point); throws for different tubes
  static LieElt tube_bracket(const IsoKey& a, const IsoKey& b);

  // eta recomputed from Hall numbers agrees with the closed form (mod q-1)
  bool eta_matches(int x, int field_index, std::string* why = nullptr);

  SerreReport serre_check(bool include_q1);

  ShiftTable shift_scalars(int t_max);

  QuotientAlgebra build_quotient();

  struct RootRow {
    DimVec droot;   // g(Delta) root (inf entry 0)
    DimVec lift;    // canonical lift, min entry 0
    Component comp;
    std::string tube;  // "arm i, interval [s..t]" for regular lifts
  };
  std::vector<RootRow> root_space_report() const;

  // integer lift of per-field values: equal integers pass through, else
  // centered CRT mod (q_i - 1)
  long long lift_values(const std::vector<long long>& vals) const;

  // coefficient of [u_{m(e_x)}, u_{m(v)}] on m(v + e_x) in one field
  long long edge_coeff(int x, const DimVec& v, FieldCtx& fc);

 private:
  const CanonQuiver* Q_;
  std::vector<std::pair<int, int>> battery_;
  std::vector<std::unique_ptr<FieldCtx>> fctx_;
};

}  // namespace dca
