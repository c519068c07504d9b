#include "dca/canon.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dca/config.hpp"

namespace dca {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::operator*(const IMat& o) const {
  if (nc != o.nr) throw std::invalid_argument("IMat shape mismatch");
  IMat r(nr, o.nc);
  for (int i = 0; i < nr; ++i)
    for (int k = 0; k < nc; ++k) {
      long long c = at(i, k);
      if (!c) continue;
      for (int j = 0; j < o.nc; ++j) r.at(i, j) += c * o.at(k, j);
    }
  return r;
}

IMat IMat::operator-() const {
  IMat r = *this;
  for (auto& x : r.a) x = -x;
  return r;
}

IMat IMat::transpose() const {
  IMat t(nc, nr);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) t.at(j, i) = at(i, j);
  return t;
}

IMat IMat::int_inverse() const {
  if (nr != nc) throw std::domain_error("IMat inverse of non-square");
  const int n = nr;
  // rational Gauss-Jordan, then integrality check
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(at(i, j));
    m[i][n + i] = Rat(1);
  }
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!m[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) throw std::domain_error("IMat singular");
    std::swap(m[piv], m[c]);
    Rat iv = Rat(1) / m[c][c];
    for (int j = 0; j < 2 * n; ++j) m[c][j] = m[c][j] * iv;
    for (int i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (int j = 0; j < 2 * n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  IMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!m[i][n + j].is_integer())
        throw std::domain_error("IMat inverse is not integral");
      inv.at(i, j) = m[i][n + j].num;
    }
  return inv;
}

std::string IMat::str() const {
  std::ostringstream os;
  for (int i = 0; i < nr; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < nc; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

DimVec row_times(const DimVec& v, const IMat& M) {
  if ((int)v.size() != M.nr) throw std::invalid_argument("row_times shape mismatch");
  DimVec r(M.nc, 0);
  for (int j = 0; j < M.nc; ++j) {
    long long s = 0;
    for (int i = 0; i < M.nr; ++i) s += (long long)v[i] * M.at(i, j);
    r[j] = (int)s;
  }
  return r;
}

std::string component_name(Component c) {
  switch (c) {
    case Component::Preprojective: return "preprojective";
    case Component::Regular: return "regular";
    case Component::Preinjective: return "preinjective";
  }
  return "?";
}

CanonicalType CanonicalType::an(int p1, int p2) {
  if (p1 < p2 || p2 < 1) throw std::invalid_argument("A_n weights must satisfy p1 >= p2 >= 1");
  CanonicalType t;
  t.r = 2;
  t.p = {p1, p2, 0};
  return t;
}

CanonicalType CanonicalType::parse(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty type name");
  // Optional explicit A_n weights: "An:p1,p2"
  auto colon = name.find(':');
  std::string base = name.substr(0, colon);
  char fam = base[0];
  int num = 0;
  if (base.size() < 2) throw std::invalid_argument("bad type name: " + name);
  num = std::stoi(base.substr(1));
  CanonicalType t;
  if (fam == 'A' || fam == 'a') {
    if (num < 1) throw std::invalid_argument("A_n needs n >= 1");
    if (colon != std::string::npos) {
      std::string w = name.substr(colon + 1);
      auto comma = w.find(',');
      if (comma == std::string::npos) throw std::invalid_argument("A_n weights: p1,p2");
      int p1 = std::stoi(w.substr(0, comma));
      int p2 = std::stoi(w.substr(comma + 1));
      if (p1 + p2 != num + 1) throw std::invalid_argument("A_n weights must sum to n+1");
      return an(p1, p2);
    }
    return an((num + 2) / 2, (num + 1) / 2);
  }
  t.r = 3;
  if (fam == 'D' || fam == 'd') {
    if (num < 4) throw std::invalid_argument("D_n needs n >= 4");
    t.p = {num - 2, 2, 2};
  } else if (fam == 'E' || fam == 'e') {
    if (num == 6) t.p = {3, 3, 2};
    else if (num == 7) t.p = {4, 3, 2};
    else if (num == 8) t.p = {5, 3, 2};
    else throw std::invalid_argument("E type must be E6, E7 or E8");
  } else {
    throw std::invalid_argument("unknown type family: " + name);
  }
  return t;
}

std::string CanonicalType::name() const {
  if (r == 2) return "A" + std::to_string(n());
  if (p[1] == 2 && p[2] == 2) return "D" + std::to_string(p[0] + 2);
  if (p[0] == 3) return "E6";
  if (p[0] == 4) return "E7";
  return "E8";
}

std::string CanonicalType::weights_str() const {
  std::ostringstream os;
  os << "(" << p[0] << "," << p[1];
  if (r == 3) os << "," << p[2];
  os << ")";
  return os.str();
}

int CanonicalType::n() const {
  int s = 1;  // vertex "1"
  for (int i = 0; i < r; ++i) s += p[i] - 1;
  return s;
}

CanonQuiver::CanonQuiver(CanonicalType t) : type_(t) {
  if (t.r == 3) {
    bool ok = (t.p[1] == 2 && t.p[2] == 2 && t.p[0] >= 2) ||
              (t.p[1] == 3 && t.p[2] == 2 && t.p[0] >= 3 && t.p[0] <= 5);
    if (!ok) throw std::invalid_argument("invalid weight triple " + t.weights_str());
  } else {
    if (t.p[0] < t.p[1] || t.p[1] < 1) throw std::invalid_argument("invalid A_n weights");
  }
  nverts_ = t.n() + 1;
  arm_offset_.assign(t.r, 0);
  int idx = 1;
  for (int i = 0; i < t.r; ++i) {
    arm_offset_[i] = idx;
    idx += t.p[i] - 1;
  }
  for (int i = 1; i <= t.r; ++i)
    for (int j = 1; j <= t.p[i - 1]; ++j) {
      Arrow a;
      a.arm = i;
      a.j = j;
      a.src = vertex_of(i, j + 1);
      a.dst = vertex_of(i, j);
      a.name = "a_" + std::to_string(i) + "_" + std::to_string(j);
      arrows_.push_back(a);
    }

  // Cartan matrix by path counting in the quotient algebra: C_{xy} = number
  // of paths y -> x, with the arm paths inf -> 1 reduced by the relation.
  IMat adj(nverts_, nverts_);
  for (const Arrow& a : arrows_) adj.at(a.src, a.dst) += 1;
  IMat paths = IMat::identity(nverts_);
  IMat pw = IMat::identity(nverts_);
  for (int len = 1; len < nverts_; ++len) {
    pw = pw * adj;
    for (int i = 0; i < nverts_; ++i)
      for (int j = 0; j < nverts_; ++j) paths.at(i, j) += pw.at(i, j);
  }
  C_ = IMat(nverts_, nverts_);
  for (int x = 0; x < nverts_; ++x)
    for (int y = 0; y < nverts_; ++y) C_.at(x, y) = paths.at(y, x);
  if (t.r == 3) C_.at(vertex_one(), vertex_inf()) -= 1;  // one relation inf -> 1

  E_ = C_.transpose().int_inverse();
  PhiInv_ = -(C_.int_inverse() * C_.transpose());
  Phi_ = -(E_ * C_);

  // Dynkin Cartan entries from quiver adjacency away from inf.
  int nn = n();
  axy_.assign(size_t(nn) * nn, 0);
  nbr_.assign(nn, {});
  for (int x = 0; x < nn; ++x) axy_[size_t(x) * nn + x] = 2;
  for (const Arrow& a : arrows_) {
    if (a.src == vertex_inf()) continue;
    axy_[size_t(a.src) * nn + a.dst] = -1;
    axy_[size_t(a.dst) * nn + a.src] = -1;
    nbr_[a.src].push_back(a.dst);
    nbr_[a.dst].push_back(a.src);
  }
}

int CanonQuiver::vertex_of(int arm, int j) const {
  if (j == 1) return vertex_one();
  if (j == type_.p[arm - 1] + 1) return vertex_inf();
  return arm_offset_[arm - 1] + (j - 2);
}

std::string CanonQuiver::vertex_label(int v) const {
  if (v == vertex_one()) return "1";
  if (v == vertex_inf()) return "inf";
  auto ac = arm_coord(v);
  return "x" + std::to_string(ac->first) + std::to_string(ac->second);
}

std::optional<std::pair<int, int>> CanonQuiver::arm_coord(int v) const {
  if (v == vertex_one() || v == vertex_inf()) return std::nullopt;
  for (int i = 0; i < type_.r; ++i) {
    int lo = arm_offset_[i], hi = lo + type_.p[i] - 2;
    if (v >= lo && v < hi + 1) return std::make_pair(i + 1, v - lo + 2);
  }
  return std::nullopt;
}

int CanonQuiver::arrow_index(int arm, int j) const {
  for (int k = 0; k < (int)arrows_.size(); ++k)
    if (arrows_[k].arm == arm && arrows_[k].j == j) return k;
  throw std::invalid_argument("no such arrow");
}

long long CanonQuiver::euler(const DimVec& v, const DimVec& w) const {
  if ((int)v.size() != nverts_ || (int)w.size() != nverts_)
    throw std::invalid_argument("dimension vector length mismatch");
  DimVec vm = row_times(v, E_);
  long long s = 0;
  for (int i = 0; i < nverts_; ++i) s += (long long)vm[i] * w[i];
  return s;
}

long long CanonQuiver::euler_combinatorial(const DimVec& v, const DimVec& w) const {
  long long s = 0;
  for (int x = 0; x < nverts_; ++x) s += (long long)v[x] * w[x];
  for (const Arrow& a : arrows_) s -= (long long)v[a.src] * w[a.dst];
  if (type_.r == 3) s += (long long)v[vertex_inf()] * w[vertex_one()];
  return s;
}

long long CanonQuiver::rank(const DimVec& v) const {
  return (long long)v[vertex_one()] - v[vertex_inf()];
}

DimVec CanonQuiver::deg(const DimVec& v) const {
  DimVec d = v;
  int t = v[vertex_inf()];
  for (auto& x : d) x -= t;
  return d;
}

DimVec CanonQuiver::org(const DimVec& v) const {
  if (!is_root(v) || !is_positive(v))
    throw std::invalid_argument("org requires a positive root");
  int m = min_entry(v);
  DimVec d = v;
  for (auto& x : d) x -= m;
  return d;
}

DimVec CanonQuiver::rho() const {
  DimVec r(nverts_, 0);
  r[vertex_one()] = 1;
  r[vertex_inf()] = -1;
  return r;
}

DimVec CanonQuiver::e(int x) const {
  DimVec r(nverts_, 0);
  r[x] = 1;
  return r;
}

DimVec CanonQuiver::coxeter_shift(const DimVec& v, long long t) const {
  DimVec r = v;
  const IMat& M = t >= 0 ? PhiInv_ : Phi_;
  long long steps = t >= 0 ? t : -t;
  for (long long s = 0; s < steps; ++s) r = row_times(r, M);
  return r;
}

std::vector<DimVec> CanonQuiver::dynkin_positive_roots() const {
  // chi restricted to vectors with zero inf entry; closure of the simples
  // under adding one simple at a time stays inside the root set and reaches
  // every positive root.
  std::set<DimVec> roots;
  std::vector<DimVec> frontier;
  for (int x = 0; x < n(); ++x) {
    DimVec v = e(x);
    roots.insert(v);
    frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<DimVec> next;
    for (const DimVec& v : frontier)
      for (int x = 0; x < n(); ++x) {
        DimVec w = v;
        w[x] += 1;
        if (chi(w) == 1 && !roots.count(w)) {
          roots.insert(w);
          next.push_back(w);
        }
      }
    frontier = std::move(next);
  }
  return std::vector<DimVec>(roots.begin(), roots.end());
}

DimVec CanonQuiver::canonical_lift(const DimVec& droot) const {
  DimVec v = droot;
  int m = *std::min_element(v.begin(), v.end());
  if (m < 0)
    for (auto& x : v) x -= m;
  return v;
}

std::vector<CanonQuiver::ReducedRoot> CanonQuiver::reduced_roots() const {
  std::vector<ReducedRoot> out;
  for (const DimVec& w : dynkin_positive_roots()) {
    for (int sign : {+1, -1}) {
      DimVec droot = sign > 0 ? w : scale(w, -1);
      ReducedRoot rr;
      rr.v = canonical_lift(droot);
      rr.degv = deg(rr.v);
      if (rr.degv != droot) throw std::logic_error("lift/deg mismatch");
      rr.rank = rank(rr.v);
      rr.comp = rr.rank > 0   ? Component::Preprojective
                : rr.rank < 0 ? Component::Preinjective
                              : Component::Regular;
      if (!is_root(rr.v) || min_entry(rr.v) != 0) throw std::logic_error("bad reduced root");
      out.push_back(std::move(rr));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ReducedRoot& a, const ReducedRoot& b) { return a.v < b.v; });
  return out;
}

std::vector<DimVec> CanonQuiver::roots_with_shift(int t_max) const {
  std::vector<DimVec> out;
  for (const ReducedRoot& rr : reduced_roots())
    for (int t = 0; t <= t_max; ++t) out.push_back(add(rr.v, scale(delta(), t)));
  return out;
}

DimVec CanonQuiver::parse_dimvec(const std::string& s, int nverts) {
  DimVec v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stoi(tok));
  if ((int)v.size() != nverts)
    throw std::invalid_argument("dimension vector needs " + std::to_string(nverts) + " entries");
  return v;
}

std::string CanonQuiver::dimvec_str(const DimVec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

const CanonQuiver& CanonQuiver::get(const CanonicalType& t) {
  static std::map<std::string, const CanonQuiver*> cache;
  static std::mutex mx;
  std::lock_guard<std::mutex> lock(mx);
  std::string key = t.name() + t.weights_str();
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  const CanonQuiver* q = new CanonQuiver(t);
  cache[key] = q;
  return *q;
}

const CanonQuiver& CanonQuiver::get(const std::string& name) {
  return get(CanonicalType::parse(name));
}

DimVec add(const DimVec& a, const DimVec& b) {
  DimVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
DimVec sub(const DimVec& a, const DimVec& b) {
  DimVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
DimVec scale(const DimVec& a, int k) {
  DimVec r = a;
  for (auto& x : r) x *= k;
  return r;
}
bool is_nonnegative(const DimVec& v) {
  for (int x : v)
    if (x < 0) return false;
  return true;
}
bool is_positive(const DimVec& v) {
  if (!is_nonnegative(v)) return false;
  for (int x : v)
    if (x > 0) return true;
  return false;
}
int min_entry(const DimVec& v) { return *std::min_element(v.begin(), v.end()); }
int total(const DimVec& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}
bool is_delta_multiple(const DimVec& v, int* m) {
  for (int x : v)
    if (x != v[0]) return false;
  if (m) *m = v.empty() ? 0 : v[0];
  return true;
}

}  // namespace dca
