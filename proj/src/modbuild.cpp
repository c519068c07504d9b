#include "dca/modbuild.hpp"

#include <algorithm>
#include <sstream>

#include "dca/config.hpp"

namespace dca {

IsoKey IsoKey::tube_nh(int arm, int top, int len) {
  IsoKey k;
  k.kind = Kind::TubeNH;
  k.arm = arm;
  k.top = top;
  k.len = len;
  return k;
}
IsoKey IsoKey::tube_hom(int c, int len) {
  IsoKey k;
  k.kind = Kind::TubeHom;
  k.c = c;
  k.len = len;
  return k;
}
IsoKey IsoKey::tube_hom_poly(std::vector<int> pc, int len) {
  IsoKey k;
  k.kind = Kind::TubeHomPoly;
  k.pcoeffs = std::move(pc);
  k.len = len;
  return k;
}
IsoKey IsoKey::hom_sum(int len) {
  IsoKey k;
  k.kind = Kind::HomSum;
  k.len = len;
  return k;
}

bool IsoKey::operator<(const IsoKey& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (v != o.v) return v < o.v;
  if (arm != o.arm) return arm < o.arm;
  if (top != o.top) return top < o.top;
  if (len != o.len) return len < o.len;
  if (c != o.c) return c < o.c;
  return pcoeffs < o.pcoeffs;
}
bool IsoKey::operator==(const IsoKey& o) const { return !(*this < o) && !(o < *this); }

std::string IsoKey::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Root: os << "M(" << CanonQuiver::dimvec_str(v) << ")"; break;
    case Kind::TubeNH: os << "T" << arm << "(" << top << ")[" << len << "]"; break;
    case Kind::TubeHom: os << "W_" << c << "[" << len << "]"; break;
    case Kind::TubeHomPoly: {
      os << "W_pi(";
      for (size_t i = 0; i < pcoeffs.size(); ++i) os << (i ? "," : "") << pcoeffs[i];
      os << ")[" << len << "]";
      break;
    }
    case Kind::HomSum: os << "HomSum[" << len << "]"; break;
  }
  return os.str();
}

std::vector<fel> e_delta(const CanonQuiver& Q, const Gf& F) {
  if (Q.type().r == 2) return {0};
  return {0, F.neg(1)};
}

GfPoly gfpoly_mul(const Gf& F, const GfPoly& a, const GfPoly& b) {
  GfPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return r;
}

GfPoly gfpoly_pow(const Gf& F, const GfPoly& a, int s) {
  GfPoly r{1};
  for (int i = 0; i < s; ++i) r = gfpoly_mul(F, r, a);
  return r;
}

namespace {
GfPoly gfpoly_mod(const Gf& F, GfPoly a, const GfPoly& m) {
  auto trim = [](GfPoly& x) { while (!x.empty() && x.back() == 0) x.pop_back(); };
  trim(a);
  int dm = (int)m.size() - 1;
  while ((int)a.size() - 1 >= dm) {
    int da = (int)a.size() - 1;
    fel c = a.back();
    for (int i = 0; i <= dm; ++i) a[da - dm + i] = F.sub(a[da - dm + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}
}  // namespace

bool gfpoly_irreducible(const Gf& F, const GfPoly& a) {
  int d = (int)a.size() - 1;
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int dd = 1; 2 * dd <= d; ++dd) {
    // trial division by all monic polynomials of degree dd
    long long combos = 1;
    for (int i = 0; i < dd; ++i) combos *= F.q();
    for (long long n = 0; n < combos; ++n) {
      GfPoly div(dd + 1, 0);
      long long t = n;
      for (int i = 0; i < dd; ++i) { div[i] = fel(t % F.q()); t /= F.q(); }
      div[dd] = 1;
      if (gfpoly_mod(F, a, div).empty()) return false;
    }
  }
  return true;
}

std::vector<GfPoly> monic_irreducibles(const Gf& F, int deg) {
  std::vector<GfPoly> out;
  long long combos = 1;
  for (int i = 0; i < deg; ++i) combos *= F.q();
  for (long long n = 0; n < combos; ++n) {
    GfPoly p(deg + 1, 0);
    long long t = n;
    for (int i = 0; i < deg; ++i) { p[i] = fel(t % F.q()); t /= F.q(); }
    p[deg] = 1;
    if (gfpoly_irreducible(F, p)) out.push_back(p);
  }
  return out;
}

Mat companion(const Gf& F, const GfPoly& monic) {
  int d = (int)monic.size() - 1;
  Mat m(F, d, d);
  for (int i = 1; i < d; ++i) m.at(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) m.at(i, d - 1) = F.neg(monic[i]);
  return m;
}

ModuleFactory::ModuleFactory(const CanonQuiver& Q, const Gf& F) : Q_(&Q), F_(&F) {
  if (Q.type().needs_odd_char() && F.p() == 2)
    throw std::invalid_argument("E8 requires odd characteristic");
}

Rep ModuleFactory::simple(int vertex) const {
  DimVec d(Q_->nverts(), 0);
  d[vertex] = 1;
  return Rep::zero(*Q_, *F_, d);
}

Rep ModuleFactory::w_poly(const GfPoly& pi, int s) const {
  const Gf& F = *F_;
  GfPoly full = gfpoly_pow(F, pi, s);
  Mat C = companion(F, full);
  int m = C.rows();
  DimVec d(Q_->nverts(), m);
  Rep r = Rep::zero(*Q_, F, d);
  Mat I = Mat::identity(F, m);
  for (int k = 0; k < (int)Q_->arrows().size(); ++k) {
    const Arrow& a = Q_->arrows()[k];
    if (a.arm == 2 && a.j == 1) r.maps[k] = C;
    else if (a.arm == 3 && a.j == 1) r.maps[k] = (I + C).scaled(F.neg(1));
    else r.maps[k] = I;
  }
  if (!r.check_relation()) throw std::logic_error("w_poly: relation violated");
  return r;
}

Rep ModuleFactory::w_c(fel c) const { return w_poly(GfPoly{F_->neg(c), 1}, 1); }

Rep ModuleFactory::x_ij(int arm, int j) const {
  const Gf& F = *F_;
  DimVec d(Q_->nverts(), 1);
  Rep r = Rep::zero(*Q_, F, d);
  for (int k = 0; k < (int)Q_->arrows().size(); ++k) {
    const Arrow& a = Q_->arrows()[k];
    fel val = 1;
    if (a.arm == arm && a.j == j) val = 0;
    else if ((arm == 1 && a.arm == 3 && a.j == 1) || (arm == 2 && a.arm == 3 && a.j == 1) ||
             (arm == 3 && a.arm == 2 && a.j == 1))
      val = F.neg(1);
    Mat m(F, 1, 1);
    m.at(0, 0) = val;
    r.maps[k] = m;
  }
  if (!r.check_relation()) throw std::logic_error("x_ij: relation violated");
  return r;
}

Rep ModuleFactory::thin_support_module(const std::vector<char>& support) const {
  const Gf& F = *F_;
  DimVec d(Q_->nverts(), 0);
  for (int z = 0; z < Q_->nverts(); ++z) d[z] = support[z] ? 1 : 0;
  Rep r = Rep::zero(*Q_, F, d);
  // all identities along supported chains; if both endpoints 1 and inf are
  // supported, the last fully-supported arm gets a -1 so the arm composites
  // cancel (two arms survive in the r = 3 case)
  int neg_arm = -1;
  if (Q_->has_relation() && support[Q_->vertex_one()] && support[Q_->vertex_inf()]) {
    std::vector<int> full_arms;
    for (int arm = 1; arm <= Q_->type().r; ++arm) {
      bool full = true;
      for (int j = 2; j <= Q_->type().p[arm - 1]; ++j)
        if (!support[Q_->vertex_of(arm, j)]) full = false;
      if (full) full_arms.push_back(arm);
    }
    if (full_arms.size() == 2) neg_arm = full_arms.back();
    else if (full_arms.size() == 3)
      throw std::invalid_argument("thin_support_module: fully sincere support needs W_c form");
  }
  for (int k = 0; k < (int)Q_->arrows().size(); ++k) {
    const Arrow& a = Q_->arrows()[k];
    if (d[a.src] && d[a.dst]) {
      Mat m(F, 1, 1);
      m.at(0, 0) = (a.arm == neg_arm && a.j == 1) ? F.neg(1) : 1;
      r.maps[k] = m;
    }
  }
  if (!r.check_relation()) throw std::logic_error("thin_support_module: relation violated");
  return r;
}

Rep ModuleFactory::t_x(int vertex) {
  DimVec v = Q_->delta();
  v[vertex] -= 1;
  return module_for_root(v);
}

std::vector<fel> ModuleFactory::homogeneous_params() const {
  std::vector<fel> excl = e_delta(*Q_, *F_);
  std::vector<fel> out;
  for (fel c : F_->elements())
    if (std::find(excl.begin(), excl.end(), c) == excl.end()) out.push_back(c);
  return out;
}

TubeModel& ModuleFactory::tube(int arm) {
  std::lock_guard<std::mutex> lock(mx_);
  auto it = tubes_.find(arm);
  if (it == tubes_.end())
    it = tubes_.emplace(arm, std::make_unique<TubeModel>(*this, arm)).first;
  return *it->second;
}

TubeModel::TubeModel(ModuleFactory& mf, int arm) : mf_(mf), arm_(arm) {
  const CanonQuiver& Q = mf.quiver();
  p_ = Q.type().p[arm - 1];
  std::vector<Rep> mouths;
  if (p_ == 1) {
    mouths.push_back(mf.x_ij(arm, 1));
  } else {
    // W' = M(delta - sum of the arm's internal simples): thin module
    std::vector<char> supp(Q.nverts(), 1);
    for (int j = 2; j <= p_; ++j) supp[Q.vertex_of(arm, j)] = 0;
    mouths.push_back(mf.thin_support_module(supp));
    for (int j = 2; j <= p_; ++j) mouths.push_back(mf.simple(Q.vertex_of(arm, j)));
  }
  // order by the AR translation: Ext^1(a, tau a) != 0
  mouth_.push_back(mouths[0]);
  std::vector<char> used(mouths.size(), 0);
  used[0] = 1;
  for (int step = 1; step < p_; ++step) {
    const Rep& cur = mouth_.back();
    int next = -1;
    for (int j = 0; j < (int)mouths.size(); ++j) {
      if (used[j]) continue;
      if (ext1(cur, mouths[j]).dim() > 0) {
        if (next != -1) throw verify_error("tube mouth tau-order is ambiguous");
        next = j;
      }
    }
    if (next < 0) throw verify_error("tube mouth tau-order not found");
    used[next] = 1;
    mouth_.push_back(mouths[next]);
  }
  // closing the cycle: tau(last) must be mouth_[0] (for p >= 2)
  if (p_ >= 2 && ext1(mouth_.back(), mouth_[0]).dim() == 0)
    throw verify_error("tube mouth cycle does not close");
  for (const Rep& m : mouth_) mouth_dims_.push_back(m.dims);
}

DimVec TubeModel::dim_of(int top, int len) const {
  DimVec d(mf_.quiver().nverts(), 0);
  for (int a = 0; a < len; ++a) d = add(d, mouth_dim(top + a));
  return d;
}

const Rep& TubeModel::module(int top, int len) {
  top = ((top % p_) + p_) % p_;
  auto it = memo_.find({top, len});
  if (it != memo_.end()) return it->second;
  Rep result;
  if (len == 1) {
    result = mouth_[top];
  } else {
    const Rep& below = module(top + 1, len - 1);
    const Rep& quot = mouth_[top];
    ExtGroup E = ext1(quot, below);
    if (E.dim() == 0) throw verify_error("tube ladder: vanishing Ext");
    std::vector<fel> coeffs(E.dim(), 0);
    coeffs[0] = 1;
    result = middle_term(quot, below, E.cocycle(coeffs));
    if (result.dims != dim_of(top, len)) throw verify_error("tube ladder: dimension mismatch");
  }
  return memo_.emplace(std::make_pair(top, len), std::move(result)).first->second;
}

std::optional<std::pair<int, int>> TubeModel::coords_for_dims(const DimVec& v) const {
  // multiplicities: c[0] for W' (only mouth with support at vertex 1 when
  // p >= 2), c[j] for the simple mouths
  std::vector<int> c(p_, 0);
  const CanonQuiver& Q = mf_.quiver();
  if (p_ == 1) {
    int m;
    if (!is_delta_multiple(v, &m) || m <= 0) return std::nullopt;
    return std::make_pair(0, m);
  }
  c[0] = v[Q.vertex_one()];
  for (int j = 1; j < p_; ++j) {
    // mouth_[j] is a simple at some internal vertex of this arm
    int vert = -1;
    for (int z = 0; z < Q.nverts(); ++z)
      if (mouth_dims_[j][z] == 1) vert = z;
    c[j] = v[vert] - c[0] * mouth_dims_[0][vert];
  }
  DimVec check(Q.nverts(), 0);
  int len = 0;
  for (int j = 0; j < p_; ++j) {
    if (c[j] < 0) return std::nullopt;
    check = add(check, scale(mouth_dims_[j], c[j]));
    len += c[j];
  }
  if (check != v || len == 0) return std::nullopt;
  int base = len / p_, rem = len % p_;
  if (rem == 0) return std::make_pair(-1, len);  // top needs a Hom test
  // multiplicities must be base+1 exactly on a cyclic window [top, top+rem)
  for (int top = 0; top < p_; ++top) {
    bool ok = true;
    for (int j = 0; j < p_; ++j) {
      int expect = base;
      int off = ((j - top) % p_ + p_) % p_;
      if (off < rem) expect = base + 1;
      if (c[j] != expect) { ok = false; break; }
    }
    if (ok) return std::make_pair(top, len);
  }
  return std::nullopt;
}

int TubeModel::top_of(const Rep& X) const {
  int found = -1;
  for (int j = 0; j < p_; ++j) {
    if (hom(X, mouth_[j]).dim() > 0) {
      if (found != -1) throw verify_error("tube top is ambiguous");
      found = j;
    }
  }
  if (found < 0) throw verify_error("tube top not found");
  return found;
}

const std::vector<ModuleFactory::LayerClass>& ModuleFactory::layer_delta(int m) {
  {
    std::lock_guard<std::mutex> lock(mx_);
    auto it = layer_memo_.find(m);
    if (it != layer_memo_.end()) return it->second;
  }
  std::vector<LayerClass> out;
  // non-homogeneous tubes: quasi-length m * p(i), one class per top
  for (int arm = 1; arm <= Q_->type().r; ++arm) {
    TubeModel& T = tube(arm);
    for (int top = 0; top < T.rank(); ++top) {
      LayerClass lc;
      lc.key = IsoKey::tube_nh(arm, top, m * T.rank());
      lc.rep = T.module(top, m * T.rank());
      out.push_back(std::move(lc));
    }
  }
  // homogeneous, degree-one points
  for (fel c : homogeneous_params()) {
    LayerClass lc;
    lc.key = IsoKey::tube_hom(c, m);
    lc.rep = w_poly(GfPoly{F_->neg(c), 1}, m);
    out.push_back(std::move(lc));
  }
  // homogeneous, higher-degree points: s * deg = m
  for (int d = 2; d <= m; ++d) {
    if (m % d != 0) continue;
    for (const GfPoly& pi : monic_irreducibles(*F_, d)) {
      LayerClass lc;
      std::vector<int> pc(pi.begin(), pi.end());
      lc.key = IsoKey::tube_hom_poly(pc, m / d);
      lc.rep = w_poly(pi, m / d);
      out.push_back(std::move(lc));
    }
  }
  std::lock_guard<std::mutex> lock(mx_);
  auto it = layer_memo_.find(m);
  if (it == layer_memo_.end()) it = layer_memo_.emplace(m, std::move(out)).first;
  return it->second;
}

std::vector<ModuleFactory::LayerClass> ModuleFactory::classes_of_dims(const DimVec& d) {
  std::vector<LayerClass> out;
  if (!is_positive(d)) return out;
  int m = 0;
  if (is_delta_multiple(d, &m)) {
    if (m >= 1) return layer_delta(m);
    return out;
  }
  if (Q_->chi(d) == 1) {
    LayerClass lc;
    lc.key = IsoKey::root(d);
    lc.rep = module_for_root(d);
    out.push_back(std::move(lc));
  }
  return out;
}

Rep ModuleFactory::build_regular_root(const DimVec& v) {
  // deg v determines the tube; multiplicities determine (top, len)
  DimVec d = Q_->deg(v);
  int arm = -1;
  for (int z = 0; z < Q_->nverts(); ++z) {
    if (d[z] == 0) continue;
    auto ac = Q_->arm_coord(z);
    if (!ac) throw std::logic_error("regular root with non-arm degree support");
    if (arm == -1) arm = ac->first;
    else if (arm != ac->first)
      throw std::logic_error("regular root degree spans two arms");
  }
  if (arm == -1) throw std::logic_error("regular root with zero degree");
  TubeModel& T = tube(arm);
  auto coords = T.coords_for_dims(v);
  if (!coords) throw std::logic_error("regular root not in expected tube");
  auto [top, len] = *coords;
  if (top < 0) throw std::logic_error("regular root with ambiguous top");
  Rep r = T.module(top, len);
  if (r.dims != v) throw std::logic_error("tube module dims mismatch");
  return r;
}

namespace {

// first indecomposable middle term over the nonzero classes of Ext^1(X, Y)
std::optional<Rep> indec_middle(const Rep& X, const Rep& Y, long long class_cap) {
  ExtGroup E = ext1(X, Y);
  if (E.dim() == 0) return std::nullopt;
  const Gf& F = *X.F;
  long long totaln = 1;
  for (int i = 0; i < E.dim(); ++i) {
    totaln *= F.q();
    if (totaln > class_cap) { totaln = class_cap; break; }
  }
  std::vector<fel> c(E.dim(), 0);
  for (long long n = 1; n < totaln; ++n) {
    long long t = n;
    for (int i = 0; i < E.dim(); ++i) { c[i] = fel(t % F.q()); t /= F.q(); }
    Rep Z = middle_term(X, Y, E.cocycle(c));
    if (is_indecomposable(Z)) return Z;
  }
  return std::nullopt;
}

}  // namespace

Rep ModuleFactory::search_root_module(const DimVec& v, bool alt) {
  if (total(v) == 1) {
    for (int z = 0; z < Q_->nverts(); ++z)
      if (v[z] == 1) return simple(z);
  }
  if (Q_->rank(v) == 0) return build_regular_root(v);

  // peel a simple: v = e_x + w with w a positive root
  std::vector<int> verts;
  for (int z = 0; z < Q_->nverts(); ++z) verts.push_back(z);
  if (alt) std::reverse(verts.begin(), verts.end());
  for (int x : verts) {
    if (v[x] == 0) continue;
    DimVec w = sub(v, Q_->e(x));
    if (!is_positive(w) || Q_->chi(w) != 1) continue;
    const Rep& N = module_for_root(w);
    Rep S = simple(x);
    auto z1 = alt ? indec_middle(N, S, 4096) : indec_middle(S, N, 4096);
    if (z1) return *z1;
    auto z2 = alt ? indec_middle(S, N, 4096) : indec_middle(N, S, 4096);
    if (z2) return *z2;
  }
  // peel a full delta layer: v = d + w, dim d = delta
  DimVec w = sub(v, Q_->delta());
  if (is_positive(w) && Q_->chi(w) == 1) {
    const Rep& N = module_for_root(w);
    for (const LayerClass& lc : layer_delta(1)) {
      auto z1 = indec_middle(lc.rep, N, 4096);
      if (z1) return *z1;
      auto z2 = indec_middle(N, lc.rep, 4096);
      if (z2) return *z2;
    }
  }
  // general splittings into two positive roots
  for (const auto& rr : Q_->reduced_roots()) {
    for (int t = 0;; ++t) {
      DimVec w1 = add(rr.v, scale(Q_->delta(), t));
      if (!is_nonnegative(sub(v, w1))) break;
      DimVec w2 = sub(v, w1);
      if (!is_positive(w2) || Q_->chi(w2) != 1 || w1 == v) continue;
      if (total(w1) >= total(v)) continue;
      const Rep& A = module_for_root(w1);
      const Rep& B = module_for_root(w2);
      auto z1 = indec_middle(A, B, 4096);
      if (z1) return *z1;
      auto z2 = indec_middle(B, A, 4096);
      if (z2) return *z2;
    }
  }
  throw verify_error("module_for_root: search exhausted for " + CanonQuiver::dimvec_str(v));
}

const Rep& ModuleFactory::module_for_root(const DimVec& v) {
  if (!is_positive(v) || Q_->chi(v) != 1)
    throw std::invalid_argument("module_for_root requires a positive root");
  {
    std::lock_guard<std::mutex> lock(mx_);
    auto it = root_memo_.find(v);
    if (it != root_memo_.end()) return it->second;
  }
  Rep r = search_root_module(v, false);
  if (r.dims != v) throw std::logic_error("module_for_root: dims mismatch");
  if (!r.check_relation()) throw std::logic_error("module_for_root: relation violated");
  std::lock_guard<std::mutex> lock(mx_);
  auto it = root_memo_.find(v);
  if (it == root_memo_.end()) it = root_memo_.emplace(v, std::move(r)).first;
  return it->second;
}

Rep ModuleFactory::module_for_root_alt(const DimVec& v) {
  if (!is_positive(v) || Q_->chi(v) != 1)
    throw std::invalid_argument("module_for_root requires a positive root");
  Rep r = search_root_module(v, true);
  if (r.dims != v) throw std::logic_error("module_for_root_alt: dims mismatch");
  return r;
}

IsoKey ModuleFactory::tube_key(const Rep& X) {
  if (Q_->rank(X.dims) != 0)
    throw std::invalid_argument("tube_key requires a regular module (rank 0)");
  int m = 0;
  if (!is_delta_multiple(X.dims, &m)) {
    // the degree names the tube and the coordinates
    DimVec v = X.dims;
    if (Q_->chi(v) != 1) throw std::invalid_argument("tube_key: not a root, not in Z*delta");
    DimVec d = Q_->deg(v);
    int arm = -1;
    for (int z = 0; z < Q_->nverts(); ++z)
      if (d[z] != 0) {
        auto ac = Q_->arm_coord(z);
        if (!ac) throw std::invalid_argument("tube_key: degree not supported on an arm");
        arm = ac->first;
      }
    auto coords = tube(arm).coords_for_dims(v);
    if (!coords || coords->first < 0) throw verify_error("tube_key: coordinates not found");
    return IsoKey::tube_nh(arm, coords->first, coords->second);
  }
  // dim = m * delta: classify by the arm-composite pencil
  Mat P1 = X.arm_composite(1);
  Mat P2 = X.arm_composite(2);
  const Gf& F = *F_;
  if (P1.rank() < P1.rows()) {
    TubeModel& T = tube(1);
    return IsoKey::tube_nh(1, T.top_of(X), m * T.rank());
  }
  Mat M = P2 * P1.inverse();
  // single eigenvalue c over k: (M - cI)^dim = 0
  int n = M.rows();
  for (fel c : F.elements()) {
    Mat D = M - Mat::identity(F, n).scaled(c);
    Mat p = D;
    int k = 1;
    while (k < n) { p = p * p; k *= 2; }
    if (p.is_zero()) {
      std::vector<fel> excl = e_delta(*Q_, F);
      for (size_t i = 0; i < excl.size(); ++i)
        if (c == excl[i]) {
          TubeModel& T = tube((int)i + 2);
          return IsoKey::tube_nh((int)i + 2, T.top_of(X), m * T.rank());
        }
      return IsoKey::tube_hom(c, m);
    }
  }
  // higher-degree point: find the irreducible pi with pi(M) nilpotent
  for (int d = 2; d <= m; ++d) {
    if (m % d != 0) continue;
    for (const GfPoly& pi : monic_irreducibles(F, d)) {
      Mat val(F, n, n);
      Mat power = Mat::identity(F, n);
      for (size_t i = 0; i < pi.size(); ++i) {
        val = val + power.scaled(pi[i]);
        if (i + 1 < pi.size()) power = power * M;
      }
      Mat p = val;
      int k = 1;
      while (k < n) { p = p * p; k *= 2; }
      if (p.is_zero()) {
        std::vector<int> pc(pi.begin(), pi.end());
        return IsoKey::tube_hom_poly(pc, m / d);
      }
    }
  }
  throw verify_error("tube_key: homogeneous point not identified");
}

Rep ModuleFactory::rep_for_key(const IsoKey& k) {
  switch (k.kind) {
    case IsoKey::Kind::Root: return module_for_root(k.v);
    case IsoKey::Kind::TubeNH: return tube(k.arm).module(k.top, k.len);
    case IsoKey::Kind::TubeHom: return w_poly(GfPoly{F_->neg(fel(k.c)), 1}, k.len);
    case IsoKey::Kind::TubeHomPoly: {
      GfPoly pi(k.pcoeffs.begin(), k.pcoeffs.end());
      return w_poly(pi, k.len);
    }
    case IsoKey::Kind::HomSum:
      throw std::invalid_argument("HomSum is a formal sum, not a single module");
  }
  throw std::logic_error("bad IsoKey");
}

}  // namespace dca
