#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dca/qpoly.hpp"

namespace dca {

using DimVec = std::vector<int>;  // one entry per vertex, canonical order

// Small dense integer matrix, row-major, exact arithmetic.
struct IMat {
  int nr = 0, nc = 0;
  std::vector<long long> a;

  IMat() = default;
  IMat(int r, int c) : nr(r), nc(c), a(size_t(r) * c, 0) {}
  static IMat identity(int n);

  long long& at(int i, int j) { return a[size_t(i) * nc + j]; }
  long long at(int i, int j) const { return a[size_t(i) * nc + j]; }
  IMat operator*(const IMat& o) const;
  IMat operator-() const;
  IMat transpose() const;
  // Exact inverse; throws if not invertible over the integers.
  IMat int_inverse() const;
  bool operator==(const IMat& o) const { return nr == o.nr && nc == o.nc && a == o.a; }
  std::string str() const;
};

DimVec row_times(const DimVec& v, const IMat& M);  // v M (v a row vector)

enum class Component { Preprojective, Regular, Preinjective };
std::string component_name(Component c);

// Weight data of a domestic canonical algebra.  r = 2 gives type A_n with
// no relation; r = 3 allows (d,2,2), (3,3,2), (4,3,2), (5,3,2).
struct CanonicalType {
  int r = 2;
  std::array<int, 3> p{1, 1, 0};

  static CanonicalType parse(const std::string& name);  // A1.., Dn, E6, E7, E8
  static CanonicalType an(int p1, int p2);
  std::string name() const;       // Dynkin name
  std::string weights_str() const;
  int n() const;                  // number of Dynkin vertices
  bool needs_odd_char() const { return r == 3 && p[0] == 5; }  // E8
};

struct Arrow {
  int arm;  // 1-based
  int j;    // 1..p(arm)
  int src, dst;
  std::string name;  // "a_<arm>_<j>"
};

// The canonical quiver with its lattice data: Cartan matrix (by path
// counting in the quotient algebra), Euler matrix C^{-T}, Coxeter matrix
// inverse, Dynkin Cartan entries, and root enumeration.
//
// Vertex order: 1, x_{1,2}..x_{1,p(1)}, x_{2,2}..x_{2,p(2)}, x_{3,2}.., inf.
// Arrows run from x_{i,j+1} to x_{i,j}; the vertex "inf" is the unique
// source and "1" the unique sink.  This orientation is the one forced by
// Corollary-level facts about tops and socles of preprojectives; all module
// constructors below are consistent with it (see README).
class CanonQuiver {
 public:
  explicit CanonQuiver(CanonicalType t);
  static const CanonQuiver& get(const CanonicalType& t);  // cached
  static const CanonQuiver& get(const std::string& name);

  const CanonicalType& type() const { return type_; }
  int nverts() const { return nverts_; }
  int n() const { return nverts_ - 1; }  // |Dynkin vertices|
  int vertex_one() const { return 0; }
  int vertex_inf() const { return nverts_ - 1; }
  int vertex_of(int arm, int j) const;  // j in 1..p(arm)+1
  std::string vertex_label(int v) const;
  std::optional<std::pair<int, int>> arm_coord(int v) const;  // (arm, j) for internal vertices

  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_index(int arm, int j) const;
  bool has_relation() const { return type_.r == 3; }

  const IMat& cartan() const { return C_; }       // dim e_x A e_y by path counting
  const IMat& euler_matrix() const { return E_; } // C^{-T}
  const IMat& coxeter_inv() const { return PhiInv_; }  // -C^{-1} C^T
  const IMat& coxeter() const { return Phi_; }

  int a_entry(int x, int y) const { return axy_.at(size_t(x) * n() + y); }  // Dynkin Cartan, x,y < n
  const std::vector<int>& dynkin_neighbors(int x) const { return nbr_[x]; }

  long long euler(const DimVec& v, const DimVec& w) const;  // B(v, w)
  long long euler_combinatorial(const DimVec& v, const DimVec& w) const;  // independent formula
  long long chi(const DimVec& v) const { return euler(v, v); }
  bool is_root(const DimVec& v) const { return chi(v) == 1; }
  bool is_radical(const DimVec& v) const { return chi(v) == 0; }

  long long rank(const DimVec& v) const;
  DimVec deg(const DimVec& v) const;  // v - v_inf * delta  (inf entry zero)
  DimVec org(const DimVec& v) const;  // v - (min entry) * delta; requires positive root
  DimVec delta() const { return DimVec(nverts_, 1); }
  DimVec rho() const;
  DimVec e(int x) const;

  DimVec coxeter_shift(const DimVec& v, long long t) const;  // v Phi^{-t}

  // Positive roots of the Dynkin restriction (chi of kQ^l), found by closing
  // the simple roots under single-simple increments.
  std::vector<DimVec> dynkin_positive_roots() const;

  // Positive chi_A-roots with minimal entry 0, one per Dynkin root (both
  // signs); `component` classifies by rank sign.
  struct ReducedRoot {
    DimVec v;
    DimVec degv;       // = deg v, a Dynkin root (inf entry 0)
    long long rank;
    Component comp;
  };
  std::vector<ReducedRoot> reduced_roots() const;

  // All positive roots with min entry <= t_max.
  std::vector<DimVec> roots_with_shift(int t_max) const;

  DimVec canonical_lift(const DimVec& dynkin_root) const;  // min entry 0

  static DimVec parse_dimvec(const std::string& s, int nverts);
  static std::string dimvec_str(const DimVec& v);

 private:
  CanonicalType type_;
  int nverts_;
  std::vector<Arrow> arrows_;
  std::vector<int> arm_offset_;  // index of x_{i,2}
  IMat C_, E_, PhiInv_, Phi_;
  std::vector<int> axy_;
  std::vector<std::vector<int>> nbr_;
};

DimVec add(const DimVec& a, const DimVec& b);
DimVec sub(const DimVec& a, const DimVec& b);
DimVec scale(const DimVec& a, int k);
bool is_positive(const DimVec& v);     // > 0: componentwise >= 0, not all zero
bool is_nonnegative(const DimVec& v);
int min_entry(const DimVec& v);
int total(const DimVec& v);
bool is_delta_multiple(const DimVec& v, int* m = nullptr);

}  // namespace dca
