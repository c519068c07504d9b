#include "dca/rep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dca/config.hpp"
#include "json.hpp"

namespace dca {

Rep Rep::zero(const CanonQuiver& Q, const Gf& F, const DimVec& dims) {
  Rep r;
  r.F = &F;
  r.Q = &Q;
  r.dims = dims;
  for (const Arrow& a : Q.arrows()) r.maps.push_back(Mat(F, dims[a.dst], dims[a.src]));
  return r;
}

Mat Rep::arm_composite(int arm) const {
  const auto& t = Q->type();
  Mat acc = Mat::identity(*F, dims[Q->vertex_of(arm, 1)]);
  // acc = M(a_{arm,1}) ... M(a_{arm,j}) after step j
  for (int j = 1; j <= t.p[arm - 1]; ++j) acc = acc * maps[Q->arrow_index(arm, j)];
  return acc;
}

bool Rep::check_relation() const {
  for (int k = 0; k < (int)maps.size(); ++k) {
    const Arrow& a = Q->arrows()[k];
    if (maps[k].rows() != dims[a.dst] || maps[k].cols() != dims[a.src]) return false;
  }
  if (!Q->has_relation()) return true;
  Mat s(*F, dims[Q->vertex_one()], dims[Q->vertex_inf()]);
  for (int arm = 1; arm <= 3; ++arm) s = s + arm_composite(arm);
  return s.is_zero();
}

Rep direct_sum(const Rep& a, const Rep& b) {
  Rep r;
  r.F = a.F;
  r.Q = a.Q;
  r.dims = add(a.dims, b.dims);
  for (int k = 0; k < (int)a.maps.size(); ++k) {
    const Arrow& ar = a.Q->arrows()[k];
    Mat m(*a.F, r.dims[ar.dst], r.dims[ar.src]);
    for (int i = 0; i < a.maps[k].rows(); ++i)
      for (int j = 0; j < a.maps[k].cols(); ++j) m.at(i, j) = a.maps[k].at(i, j);
    for (int i = 0; i < b.maps[k].rows(); ++i)
      for (int j = 0; j < b.maps[k].cols(); ++j)
        m.at(a.maps[k].rows() + i, a.maps[k].cols() + j) = b.maps[k].at(i, j);
    r.maps.push_back(std::move(m));
  }
  return r;
}

RepProfile profile(const Rep& X) {
  RepProfile p;
  p.dims = X.dims;
  for (const Mat& m : X.maps) p.arrow_ranks.push_back(m.rank());
  return p;
}

std::vector<Mat> HomSpace::element(const std::vector<fel>& coeffs) const {
  const Gf& F = *X->F;
  std::vector<Mat> phi;
  for (int z = 0; z < (int)X->dims.size(); ++z) phi.push_back(Mat(F, Y->dims[z], X->dims[z]));
  for (size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs[k]) continue;
    for (int z = 0; z < (int)phi.size(); ++z) phi[z] = phi[z] + basis[k][z].scaled(coeffs[k]);
  }
  return phi;
}

namespace {

// Variable layout for vertex-indexed matrix tuples.
struct VarLayout {
  std::vector<int> base;
  int total = 0;
  void init(const std::vector<std::pair<int, int>>& shapes) {
    base.clear();
    total = 0;
    for (auto [r, c] : shapes) {
      base.push_back(total);
      total += r * c;
    }
  }
  int idx(int block, int i, int j, int ncols) const { return base[block] + i * ncols + j; }
};

}  // namespace

HomSpace hom(const Rep& X, const Rep& Y) {
  const Gf& F = *X.F;
  const CanonQuiver& Q = *X.Q;
  const int nv = Q.nverts();
  VarLayout lay;
  std::vector<std::pair<int, int>> shapes;
  for (int z = 0; z < nv; ++z) shapes.push_back({Y.dims[z], X.dims[z]});
  lay.init(shapes);

  int neq = 0;
  for (const Arrow& a : Q.arrows()) neq += Y.dims[a.dst] * X.dims[a.src];
  Mat A(F, neq, lay.total);
  int row = 0;
  for (int k = 0; k < (int)Q.arrows().size(); ++k) {
    const Arrow& a = Q.arrows()[k];
    const Mat& Xa = X.maps[k];
    const Mat& Ya = Y.maps[k];
    // Y(a) phi_src - phi_dst X(a) = 0, entry (i, j) with i < Y.dims[dst], j < X.dims[src]
    for (int i = 0; i < Y.dims[a.dst]; ++i)
      for (int j = 0; j < X.dims[a.src]; ++j) {
        for (int k2 = 0; k2 < Y.dims[a.src]; ++k2) {
          fel c = Ya.at(i, k2);
          if (c) {
            int v = lay.idx(a.src, k2, j, X.dims[a.src]);
            A.at(row, v) = F.add(A.at(row, v), c);
          }
        }
        for (int k2 = 0; k2 < X.dims[a.dst]; ++k2) {
          fel c = Xa.at(k2, j);
          if (c) {
            int v = lay.idx(a.dst, i, k2, X.dims[a.dst]);
            A.at(row, v) = F.sub(A.at(row, v), c);
          }
        }
        ++row;
      }
  }
  Mat K = A.kernel();
  HomSpace H;
  H.X = &X;
  H.Y = &Y;
  for (int b = 0; b < K.rows(); ++b) {
    std::vector<Mat> phi;
    for (int z = 0; z < nv; ++z) {
      Mat m(F, Y.dims[z], X.dims[z]);
      for (int i = 0; i < Y.dims[z]; ++i)
        for (int j = 0; j < X.dims[z]; ++j) m.at(i, j) = K.at(b, lay.idx(z, i, j, X.dims[z]));
      phi.push_back(std::move(m));
    }
    H.basis.push_back(std::move(phi));
  }
  return H;
}

std::vector<Mat> hom_compose(const Rep& X, const Rep&, const Rep&,
                             const std::vector<Mat>& f, const std::vector<Mat>& g) {
  std::vector<Mat> out;
  for (int z = 0; z < (int)X.dims.size(); ++z) out.push_back(g[z] * f[z]);
  return out;
}

bool tuple_is_iso(const std::vector<Mat>& phi) {
  for (const Mat& m : phi) {
    if (m.rows() != m.cols()) return false;
    if (m.rank() != m.rows()) return false;
  }
  return true;
}

bool tuple_is_injective(const std::vector<Mat>& phi) {
  for (const Mat& m : phi)
    if (m.rank() != m.cols()) return false;
  return true;
}

bool tuple_is_surjective(const std::vector<Mat>& phi) {
  for (const Mat& m : phi)
    if (m.rank() != m.rows()) return false;
  return true;
}

bool tuple_is_zero(const std::vector<Mat>& phi) {
  for (const Mat& m : phi)
    if (!m.is_zero()) return false;
  return true;
}

bool tuple_is_nilpotent(const std::vector<Mat>& phi) {
  for (const Mat& m : phi) {
    if (m.rows() != m.cols()) return false;
    Mat p = m;
    int k = 1;
    while (k < m.rows()) {
      p = p * p;
      k *= 2;
    }
    if (!p.is_zero()) return false;
  }
  return true;
}

namespace {

// enumerate all coefficient vectors over F of length d (q^d of them)
template <class Fn>
void for_each_coeffs(const Gf& F, int d, long long cap, Fn&& fn) {
  long long totaln = q_pow(F.q(), d, cap);
  std::vector<fel> c(d, 0);
  for (long long n = 0; n < totaln; ++n) {
    fn(c);
    for (int i = 0; i < d; ++i) {
      if (c[i] + 1 < F.q()) { ++c[i]; break; }
      c[i] = 0;
    }
  }
}

std::uint64_t mix_seed(const Rep& X, const Rep& Y) {
  std::uint64_t h = config().seed;
  for (int v : X.dims) h = h * 1099511628211ull + (unsigned)v + 7;
  for (int v : Y.dims) h = h * 1099511628211ull + (unsigned)v + 13;
  return h;
}

}  // namespace

bool iso(const Rep& X, const Rep& Y) {
  if (X.dims != Y.dims) return false;
  if (X.is_zero_module()) return true;
  if (!(profile(X) == profile(Y))) return false;
  HomSpace H = hom(X, Y);
  int d = H.dim();
  if (d == 0) return false;
  // quick deterministic candidates
  std::vector<fel> c(d, 0);
  for (int i = 0; i < d; ++i) {
    std::fill(c.begin(), c.end(), 0);
    c[i] = 1;
    if (tuple_is_iso(H.element(c))) return true;
  }
  std::fill(c.begin(), c.end(), 1);
  if (tuple_is_iso(H.element(c))) return true;
  std::mt19937_64 rng(mix_seed(X, Y));
  const Gf& F = *X.F;
  for (int t = 0; t < 64; ++t) {
    for (int i = 0; i < d; ++i) c[i] = fel(rng() % F.q());
    if (tuple_is_iso(H.element(c))) return true;
  }
  long long cap = config().vector_enum_cap;
  bool found = false;
  try {
    for_each_coeffs(F, d, cap, [&](const std::vector<fel>& cc) {
      if (!found && tuple_is_iso(H.element(cc))) found = true;
    });
    return found;
  } catch (const cap_exceeded&) {
    for (int t = 0; t < 512; ++t) {
      for (int i = 0; i < d; ++i) c[i] = fel(rng() % F.q());
      if (tuple_is_iso(H.element(c))) return true;
    }
    throw undecided_error("iso: Hom space too large to search exhaustively");
  }
}

bool is_indecomposable(const Rep& X) {
  if (X.is_zero_module()) return false;
  HomSpace E = hom(X, X);
  int d = E.dim();
  if (d == 1) return true;  // End = k
  auto unit_or_nilpotent = [&](const std::vector<Mat>& phi) {
    return tuple_is_iso(phi) || tuple_is_nilpotent(phi);
  };
  // Fitting certificates: any element that is neither a unit nor nilpotent
  // splits X.
  for (int i = 0; i < d; ++i) {
    std::vector<fel> c(d, 0);
    c[i] = 1;
    if (!unit_or_nilpotent(E.element(c))) return false;
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::vector<fel> c(d, 0);
      c[i] = 1;
      c[j] = 1;
      if (!unit_or_nilpotent(E.element(c))) return false;
    }
  const Gf& F = *X.F;
  long long cap = config().vector_enum_cap;
  try {
    bool ok = true;
    for_each_coeffs(F, d, cap, [&](const std::vector<fel>& c) {
      if (ok && !unit_or_nilpotent(E.element(c))) ok = false;
    });
    return ok;
  } catch (const cap_exceeded&) {
  }
  std::mt19937_64 rng(mix_seed(X, X) ^ 0xf177);
  std::vector<fel> c(d);
  for (int t = 0; t < 2000; ++t) {
    for (int i = 0; i < d; ++i) c[i] = fel(rng() % F.q());
    if (!unit_or_nilpotent(E.element(c))) return false;
  }
  throw undecided_error("is_indecomposable: |End| above cap and no splitting found");
}

long long aut_count(const Rep& X) {
  if (X.is_zero_module()) return 1;
  HomSpace E = hom(X, X);
  int d = E.dim();
  const Gf& F = *X.F;
  long long q = F.q();
  if (d == 1) return q - 1;
  long long cap = config().vector_enum_cap;
  try {
    long long n = 0;
    for_each_coeffs(F, d, cap, [&](const std::vector<fel>& c) {
      if (tuple_is_iso(E.element(c))) ++n;
    });
    return n;
  } catch (const cap_exceeded&) {
  }
  if (!is_indecomposable(X)) throw cap_exceeded("aut_count: |End| above cap, module decomposable");
  // End local.  If End/rad = k then every basis element is congruent to a
  // scalar mod rad, and |Aut| = |End| - |rad| = q^d - q^(d-1).
  std::vector<Mat> id;
  for (int z = 0; z < (int)X.dims.size(); ++z) id.push_back(Mat::identity(F, X.dims[z]));
  for (int i = 0; i < d; ++i) {
    std::vector<fel> c(d, 0);
    c[i] = 1;
    auto phi = E.element(c);
    bool found = false;
    for (int s = 0; s < F.q(); ++s) {
      std::vector<Mat> shifted;
      for (int z = 0; z < (int)phi.size(); ++z) shifted.push_back(phi[z] - id[z].scaled(fel(s)));
      if (tuple_is_nilpotent(shifted)) { found = true; break; }
    }
    if (!found) throw undecided_error("aut_count: End/rad is a proper field extension");
  }
  long long r = q - 1;
  for (int i = 1; i < d; ++i) r *= q;
  return r;
}

// --- submodules ---

bool is_submodule(const Rep& Z, const SubTuple& U) {
  for (int k = 0; k < (int)Z.maps.size(); ++k) {
    const Arrow& a = Z.Q->arrows()[k];
    Subspace img = U[a.src].image_under(Z.maps[k]);
    if (!U[a.dst].contains(img)) return false;
  }
  return true;
}

SubTuple close_submodule(const Rep& Z, SubTuple U) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < (int)Z.maps.size(); ++k) {
      const Arrow& a = Z.Q->arrows()[k];
      Subspace img = U[a.src].image_under(Z.maps[k]);
      if (!U[a.dst].contains(img)) {
        U[a.dst] = U[a.dst].sum(img);
        changed = true;
      }
    }
  }
  return U;
}

DimVec sub_dims(const SubTuple& U) {
  DimVec d;
  for (const Subspace& s : U) d.push_back(s.dim());
  return d;
}

SubTuple zero_sub(const Rep& Z) {
  SubTuple U;
  for (int z = 0; z < (int)Z.dims.size(); ++z) U.push_back(Subspace(*Z.F, Z.dims[z]));
  return U;
}

SubTuple full_sub(const Rep& Z) {
  SubTuple U;
  for (int z = 0; z < (int)Z.dims.size(); ++z) U.push_back(Subspace::full(*Z.F, Z.dims[z]));
  return U;
}

namespace {

// change-of-basis data at one vertex: columns of S are first a basis of U_z,
// then a complement; P = S^{-1}
struct SplitBasis {
  Mat S, P;
  int u;  // dim of U_z
};

SplitBasis split_basis(const Gf& F, const Subspace& U, int ambient) {
  SplitBasis sb;
  sb.u = U.dim();
  std::vector<int> piv;
  Mat t = U.basis();
  t.rref(&piv);
  std::vector<char> is_piv(ambient, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat S(F, ambient, ambient);
  for (int b = 0; b < U.dim(); ++b)
    for (int i = 0; i < ambient; ++i) S.at(i, b) = U.basis().at(b, i);
  int col = U.dim();
  for (int j = 0; j < ambient; ++j) {
    if (is_piv[j]) continue;
    S.at(j, col) = 1;
    ++col;
  }
  sb.S = S;
  sb.P = S.inverse();
  return sb;
}

}  // namespace

Rep sub_rep(const Rep& Z, const SubTuple& U) {
  const Gf& F = *Z.F;
  Rep r;
  r.F = Z.F;
  r.Q = Z.Q;
  r.dims = sub_dims(U);
  std::vector<SplitBasis> sb;
  for (int z = 0; z < (int)Z.dims.size(); ++z) sb.push_back(split_basis(F, U[z], Z.dims[z]));
  for (int k = 0; k < (int)Z.maps.size(); ++k) {
    const Arrow& a = Z.Q->arrows()[k];
    Mat hat = sb[a.dst].P * Z.maps[k] * sb[a.src].S;
    // closure means the lower-left block vanishes
    for (int i = sb[a.dst].u; i < Z.dims[a.dst]; ++i)
      for (int j = 0; j < sb[a.src].u; ++j)
        if (hat.at(i, j)) throw std::invalid_argument("sub_rep: tuple not arrow-closed");
    r.maps.push_back(hat.block(0, 0, sb[a.dst].u, sb[a.src].u));
  }
  return r;
}

Rep quotient(const Rep& Z, const SubTuple& U) {
  const Gf& F = *Z.F;
  Rep r;
  r.F = Z.F;
  r.Q = Z.Q;
  r.dims = sub(Z.dims, sub_dims(U));
  std::vector<SplitBasis> sb;
  for (int z = 0; z < (int)Z.dims.size(); ++z) sb.push_back(split_basis(F, U[z], Z.dims[z]));
  for (int k = 0; k < (int)Z.maps.size(); ++k) {
    const Arrow& a = Z.Q->arrows()[k];
    Mat hat = sb[a.dst].P * Z.maps[k] * sb[a.src].S;
    for (int i = sb[a.dst].u; i < Z.dims[a.dst]; ++i)
      for (int j = 0; j < sb[a.src].u; ++j)
        if (hat.at(i, j)) throw std::invalid_argument("quotient: tuple not arrow-closed");
    r.maps.push_back(hat.block(sb[a.dst].u, sb[a.src].u, Z.dims[a.dst] - sb[a.dst].u,
                               Z.dims[a.src] - sb[a.src].u));
  }
  return r;
}

namespace {

std::vector<std::uint32_t> tuple_key(const SubTuple& U) {
  std::vector<std::uint32_t> key;
  for (const Subspace& s : U) {
    key.push_back(0x80000000u | s.dim());
    for (fel x : s.basis().data()) key.push_back(x);
  }
  return key;
}

}  // namespace

void submodules_all(const Rep& Z, long long cap, const std::function<void(const SubTuple&)>& fn) {
  const Gf& F = *Z.F;
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<SubTuple> queue;
  SubTuple zero = zero_sub(Z);
  seen.insert(tuple_key(zero));
  queue.push_back(zero);
  fn(zero);
  size_t qi = 0;
  while (qi < queue.size()) {
    SubTuple U = queue[qi++];
    for (int z = 0; z < (int)Z.dims.size(); ++z) {
      if (Z.dims[z] == 0) continue;
      enumerate_lines(F, Z.dims[z], config().subspace_enum_cap, [&](const Subspace& line) {
        if (U[z].contains(line)) return;
        SubTuple W = U;
        W[z] = W[z].sum(line);
        W = close_submodule(Z, W);
        auto key = tuple_key(W);
        if (seen.count(key)) return;
        if ((long long)seen.size() >= cap) throw cap_exceeded("submodule lattice exceeds cap");
        seen.insert(key);
        queue.push_back(W);
        fn(W);
      });
    }
  }
}

namespace {

struct DimsDfs {
  const Rep* Z;
  DimVec target;
  std::vector<int> order;                      // vertex processing order
  std::vector<std::vector<int>> in_arrows;     // arrows by dst
  long long nodes = 0, cap = 0;
  const std::function<void(const SubTuple&)>* fn;

  void run(int step, SubTuple& U) {
    if (step == (int)order.size()) {
      (*fn)(U);
      return;
    }
    int v = order[step];
    Subspace forced(*Z->F, Z->dims[v]);
    for (int k : in_arrows[v]) {
      const Arrow& a = Z->Q->arrows()[k];
      forced = forced.sum(U[a.src].image_under(Z->maps[k]));
    }
    if (forced.dim() > target[v]) return;
    enumerate_subspaces_over(*Z->F, Z->dims[v], target[v], forced, config().subspace_enum_cap,
                             [&](const Subspace& s) {
                               if (++nodes > cap) throw cap_exceeded("submodule search exceeds cap");
                               U[v] = s;
                               run(step + 1, U);
                             });
    U[v] = Subspace(*Z->F, Z->dims[v]);
  }
};

}  // namespace

void submodules_with_dims(const Rep& Z, const DimVec& target, long long cap,
                          const std::function<void(const SubTuple&)>& fn) {
  const CanonQuiver& Q = *Z.Q;
  for (int z = 0; z < (int)target.size(); ++z)
    if (target[z] < 0 || target[z] > Z.dims[z]) return;
  DimsDfs d;
  d.Z = &Z;
  d.target = target;
  d.cap = cap;
  d.fn = &fn;
  d.order.push_back(Q.vertex_inf());
  for (int arm = 1; arm <= Q.type().r; ++arm)
    for (int j = Q.type().p[arm - 1]; j >= 2; --j) d.order.push_back(Q.vertex_of(arm, j));
  d.order.push_back(Q.vertex_one());
  d.in_arrows.assign(Q.nverts(), {});
  for (int k = 0; k < (int)Q.arrows().size(); ++k) d.in_arrows[Q.arrows()[k].dst].push_back(k);
  SubTuple U = zero_sub(Z);
  d.run(0, U);
}

long long count_submodules_with_dims(const Rep& Z, const DimVec& target, long long cap) {
  long long n = 0;
  submodules_with_dims(Z, target, cap, [&](const SubTuple&) { ++n; });
  return n;
}

SubTuple image_tuple(const Rep& Y, const Rep& Z, const std::vector<Mat>& f) {
  SubTuple U;
  for (int z = 0; z < (int)Z.dims.size(); ++z)
    U.push_back(Subspace::full(*Y.F, Y.dims[z]).image_under(f[z]));
  return U;
}

// --- Ext^1 ---

ExtGroup ext1(const Rep& X, const Rep& Y) {
  const Gf& F = *X.F;
  const CanonQuiver& Q = *X.Q;
  VarLayout lay;
  std::vector<std::pair<int, int>> shapes;
  for (const Arrow& a : Q.arrows()) shapes.push_back({Y.dims[a.dst], X.dims[a.src]});
  lay.init(shapes);

  // cocycle constraint (only when the relation is present)
  Mat A(F, 0, lay.total);
  if (Q.has_relation()) {
    int y1 = Y.dims[Q.vertex_one()];
    int xinf = X.dims[Q.vertex_inf()];
    A = Mat(F, y1 * xinf, lay.total);
    for (int arm = 1; arm <= 3; ++arm) {
      int p = Q.type().p[arm - 1];
      // prefix_j = Y(a_1)...Y(a_{j-1}),  suffix_j = X(a_{j+1})...X(a_p)
      std::vector<Mat> prefix(p + 1), suffix(p + 2);
      prefix[1] = Mat::identity(F, Y.dims[Q.vertex_one()]);
      for (int j = 2; j <= p; ++j)
        prefix[j] = prefix[j - 1] * Y.maps[Q.arrow_index(arm, j - 1)];
      suffix[p + 1] = Mat::identity(F, X.dims[Q.vertex_inf()]);
      for (int j = p; j >= 1; --j)
        suffix[j] = X.maps[Q.arrow_index(arm, j)] * suffix[j + 1];
      for (int j = 1; j <= p; ++j) {
        int k = Q.arrow_index(arm, j);
        const Arrow& a = Q.arrows()[k];
        // term prefix[j] * eta_k * suffix[j+1]
        for (int r = 0; r < y1; ++r)
          for (int c = 0; c < xinf; ++c) {
            int row = r * xinf + c;
            for (int i = 0; i < Y.dims[a.dst]; ++i) {
              fel pf = prefix[j].at(r, i);
              if (!pf) continue;
              for (int jj = 0; jj < X.dims[a.src]; ++jj) {
                fel sf = suffix[j + 1].at(jj, c);
                if (!sf) continue;
                int v = lay.idx(k, i, jj, X.dims[a.src]);
                A.at(row, v) = F.add(A.at(row, v), F.mul(pf, sf));
              }
            }
          }
      }
    }
  }
  Mat Zc = A.cols() ? A.kernel() : Mat::identity(F, lay.total);
  if (lay.total == 0) Zc = Mat(F, 0, 0);

  // coboundaries d(phi)_a = Y(a) phi_src - phi_dst X(a)
  VarLayout play;
  std::vector<std::pair<int, int>> pshapes;
  for (int z = 0; z < Q.nverts(); ++z) pshapes.push_back({Y.dims[z], X.dims[z]});
  play.init(pshapes);
  Mat B(F, play.total, lay.total);
  for (int u = 0; u < play.total; ++u) {
    // unit phi with a single 1 at flat position u
    int z = 0;
    while (z + 1 < Q.nverts() && play.base[z + 1] <= u) ++z;
    int off = u - play.base[z];
    int pi = X.dims[z] ? off / X.dims[z] : 0;
    int pj = X.dims[z] ? off % X.dims[z] : 0;
    for (int k = 0; k < (int)Q.arrows().size(); ++k) {
      const Arrow& a = Q.arrows()[k];
      if (a.src == z) {
        // (Y(a) phi)_{i, pj} += Y(a)_{i, pi}
        for (int i = 0; i < Y.dims[a.dst]; ++i) {
          fel c = Y.maps[k].at(i, pi);
          if (c) {
            int v = lay.idx(k, i, pj, X.dims[a.src]);
            B.at(u, v) = F.add(B.at(u, v), c);
          }
        }
      }
      if (a.dst == z) {
        // -(phi X(a))_{pi, j} -= X(a)_{pj, j}
        for (int j = 0; j < X.dims[a.src]; ++j) {
          fel c = X.maps[k].at(pj, j);
          if (c) {
            int v = lay.idx(k, pi, j, X.dims[a.src]);
            B.at(u, v) = F.sub(B.at(u, v), c);
          }
        }
      }
    }
  }

  ExtGroup E;
  E.X = &X;
  E.Y = &Y;
  // span of coboundaries inside the cocycles; complement from Zc rows
  Mat span = B;
  int bdim = span.rref();
  span = span.block(0, 0, bdim, lay.total);
  E.coboundary_dim = bdim;
  E.cocycle_dim = Zc.rows();
  Mat acc = span;
  for (int r = 0; r < Zc.rows(); ++r) {
    Mat trym = acc.rows() ? Mat::vstack(acc, Zc.block(r, 0, 1, lay.total))
                          : Zc.block(r, 0, 1, lay.total);
    int newrank = trym.rref();
    if (newrank > acc.rows()) {
      acc = trym.block(0, 0, newrank, lay.total);
      // record the representative
      std::vector<Mat> eta;
      for (int k = 0; k < (int)Q.arrows().size(); ++k) {
        const Arrow& a = Q.arrows()[k];
        Mat m(F, Y.dims[a.dst], X.dims[a.src]);
        for (int i = 0; i < Y.dims[a.dst]; ++i)
          for (int j = 0; j < X.dims[a.src]; ++j)
            m.at(i, j) = Zc.at(r, lay.idx(k, i, j, X.dims[a.src]));
        eta.push_back(std::move(m));
      }
      E.basis.push_back(std::move(eta));
    }
  }
  if ((int)E.basis.size() != E.cocycle_dim - E.coboundary_dim)
    throw std::logic_error("ext1: complement dimension mismatch");
  return E;
}

std::vector<Mat> ExtGroup::cocycle(const std::vector<fel>& coeffs) const {
  const Gf& F = *X->F;
  const CanonQuiver& Q = *X->Q;
  std::vector<Mat> eta;
  for (const Arrow& a : Q.arrows()) eta.push_back(Mat(F, Y->dims[a.dst], X->dims[a.src]));
  for (size_t k = 0; k < basis.size(); ++k) {
    if (!coeffs[k]) continue;
    for (size_t m = 0; m < eta.size(); ++m) eta[m] = eta[m] + basis[k][m].scaled(coeffs[k]);
  }
  return eta;
}

Rep middle_term(const Rep& X, const Rep& Y, const std::vector<Mat>& cocycle) {
  const Gf& F = *X.F;
  const CanonQuiver& Q = *X.Q;
  Rep Z;
  Z.F = X.F;
  Z.Q = X.Q;
  Z.dims = add(Y.dims, X.dims);
  for (int k = 0; k < (int)Q.arrows().size(); ++k) {
    const Arrow& a = Q.arrows()[k];
    Mat m(F, Z.dims[a.dst], Z.dims[a.src]);
    for (int i = 0; i < Y.dims[a.dst]; ++i)
      for (int j = 0; j < Y.dims[a.src]; ++j) m.at(i, j) = Y.maps[k].at(i, j);
    for (int i = 0; i < Y.dims[a.dst]; ++i)
      for (int j = 0; j < X.dims[a.src]; ++j) m.at(i, Y.dims[a.src] + j) = cocycle[k].at(i, j);
    for (int i = 0; i < X.dims[a.dst]; ++i)
      for (int j = 0; j < X.dims[a.src]; ++j)
        m.at(Y.dims[a.dst] + i, Y.dims[a.src] + j) = X.maps[k].at(i, j);
    Z.maps.push_back(std::move(m));
  }
  if (!Z.check_relation()) throw std::logic_error("middle_term: relation violated");
  return Z;
}

// --- Gabriel-Roiter ---

long long GRMeasure::num() const {
  long long n = 0;
  for (int l : lengths) {
    if (l > kShift) throw std::logic_error("GR length exceeds fixed-point range");
    n += 1LL << (kShift - l);
  }
  return n;
}

std::string GRMeasure::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < lengths.size(); ++i) os << (i ? "," : "") << lengths[i];
  os << "}";
  return os.str();
}

namespace {

struct GRCache {
  std::vector<std::pair<Rep, GRMeasure>> entries;
  GRMeasure* find(const Rep& M) {
    for (auto& [r, g] : entries)
      if (r.dims == M.dims && iso(r, M)) return &g;
    return nullptr;
  }
};

GRMeasure gr_rec(const Rep& M, GRCache& cache) {
  if (M.is_zero_module()) return GRMeasure{};
  if (GRMeasure* hit = cache.find(M)) return *hit;
  GRMeasure best;  // empty = measure 0
  submodules_all(M, config().lattice_node_cap, [&](const SubTuple& U) {
    DimVec ud = sub_dims(U);
    if (ud == M.dims) return;  // proper submodules only
    GRMeasure g = gr_rec(sub_rep(M, U), cache);
    if (best < g) best = g;
  });
  if (is_indecomposable(M)) best.lengths.push_back(M.total_dim());
  cache.entries.push_back({M, best});
  return best;
}

}  // namespace

GRMeasure gr_measure(const Rep& M) {
  if (M.total_dim() > config().gr_dim_cap)
    throw cap_exceeded("gr_measure: total dimension above cap");
  GRCache cache;
  return gr_rec(M, cache);
}

std::vector<SubTuple> gr_submodule_tuples(const Rep& M) {
  if (M.total_dim() > config().gr_dim_cap)
    throw cap_exceeded("gr_submodules: total dimension above cap");
  if (!is_indecomposable(M))
    throw std::invalid_argument("gr_submodules requires an indecomposable module");
  GRCache cache;
  GRMeasure best;
  std::vector<std::pair<SubTuple, GRMeasure>> candidates;
  submodules_all(M, config().lattice_node_cap, [&](const SubTuple& U) {
    DimVec ud = sub_dims(U);
    if (ud == M.dims || total(ud) == 0) return;
    Rep R = sub_rep(M, U);
    if (!is_indecomposable(R)) return;
    GRMeasure g = gr_rec(R, cache);
    candidates.push_back({U, g});
    if (best < g) best = g;
  });
  std::vector<SubTuple> out;
  for (auto& [U, g] : candidates)
    if (g == best) out.push_back(U);
  return out;
}

// --- JSON ---

std::string Rep::json() const {
  nlohmann::json j;
  j["field"] = {{"p", F->p()}, {"e", F->e()}};
  j["type"] = Q->type().name();
  j["weights"] = std::vector<int>(Q->type().p.begin(), Q->type().p.begin() + Q->type().r);
  j["dims"] = dims;
  nlohmann::json m = nlohmann::json::object();
  for (int k = 0; k < (int)maps.size(); ++k) {
    std::vector<int> flat;
    for (fel x : maps[k].data()) flat.push_back(x);
    m[Q->arrows()[k].name] = flat;
  }
  j["maps"] = m;
  return j.dump(2);
}

Rep Rep::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const Gf& F = Gf::get(j["field"]["p"].get<int>(), j["field"]["e"].get<int>());
  CanonicalType t = CanonicalType::parse(j["type"].get<std::string>());
  if (j.contains("weights")) {
    auto w = j["weights"].get<std::vector<int>>();
    if ((int)w.size() == 2) t = CanonicalType::an(w[0], w[1]);
  }
  const CanonQuiver& Q = CanonQuiver::get(t);
  DimVec dims = j["dims"].get<DimVec>();
  Rep r = Rep::zero(Q, F, dims);
  for (int k = 0; k < (int)Q.arrows().size(); ++k) {
    auto flat = j["maps"][Q.arrows()[k].name].get<std::vector<int>>();
    if ((int)flat.size() != r.maps[k].rows() * r.maps[k].cols())
      throw std::invalid_argument("rep json: map size mismatch");
    for (size_t i = 0; i < flat.size(); ++i) r.maps[k].data()[i] = fel(flat[i]);
  }
  if (!r.check_relation()) throw std::invalid_argument("rep json: relation violated");
  return r;
}

}  // namespace dca
