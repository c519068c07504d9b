#include "dca/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dca/config.hpp"

namespace dca {

Mat Mat::identity(const Gf& F, int n) {
  Mat m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const Gf& F, const std::vector<std::vector<fel>>& rows, int ncols) {
  Mat m(F, (int)rows.size(), ncols);
  for (int i = 0; i < (int)rows.size(); ++i)
    for (int j = 0; j < ncols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<fel> Mat::row(int i) const {
  return std::vector<fel>(a_.begin() + size_t(i) * nc_, a_.begin() + size_t(i + 1) * nc_);
}

Mat Mat::transpose() const {
  Mat t(*F_, nc_, nr_);
  for (int i = 0; i < nr_; ++i)
    for (int j = 0; j < nc_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (nc_ != o.nr_) throw std::invalid_argument("matrix shape mismatch in product");
  const Gf& F = *F_;
  Mat r(F, nr_, o.nc_);
  for (int i = 0; i < nr_; ++i)
    for (int k = 0; k < nc_; ++k) {
      fel c = at(i, k);
      if (!c) continue;
      for (int j = 0; j < o.nc_; ++j) {
        fel t = F.mul(c, o.at(k, j));
        if (t) r.at(i, j) = F.add(r.at(i, j), t);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw std::invalid_argument("matrix shape mismatch in sum");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (nr_ != o.nr_ || nc_ != o.nc_) throw std::invalid_argument("matrix shape mismatch in difference");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_->sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::scaled(fel c) const {
  Mat r = *this;
  for (auto& x : r.a_) x = F_->mul(x, c);
  return r;
}

bool Mat::is_zero() const {
  for (fel x : a_)
    if (x) return false;
  return true;
}

std::vector<fel> Mat::apply(const std::vector<fel>& x) const {
  if ((int)x.size() != nc_) throw std::invalid_argument("vector length mismatch");
  std::vector<fel> y(nr_, 0);
  for (int i = 0; i < nr_; ++i) {
    fel s = 0;
    for (int j = 0; j < nc_; ++j) s = F_->add(s, F_->mul(at(i, j), x[j]));
    y[i] = s;
  }
  return y;
}

int Mat::rref(std::vector<int>* pivots) {
  const Gf& F = *F_;
  int r = 0;
  if (pivots) pivots->clear();
  for (int c = 0; c < nc_ && r < nr_; ++c) {
    int piv = -1;
    for (int i = r; i < nr_; ++i)
      if (at(i, c)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < nc_; ++j) std::swap(at(piv, j), at(r, j));
    fel iv = F.inv(at(r, c));
    for (int j = c; j < nc_; ++j) at(r, j) = F.mul(at(r, j), iv);
    for (int i = 0; i < nr_; ++i) {
      if (i == r) continue;
      fel f = at(i, c);
      if (!f) continue;
      for (int j = c; j < nc_; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

int Mat::rank() const {
  Mat t = *this;
  return t.rref();
}

Mat Mat::kernel() const {
  Mat R = *this;
  std::vector<int> piv;
  int r = R.rref(&piv);
  std::vector<char> is_piv(nc_, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat K(*F_, nc_ - r, nc_);
  int kr = 0;
  for (int c = 0; c < nc_; ++c) {
    if (is_piv[c]) continue;
    K.at(kr, c) = 1;
    for (int i = 0; i < r; ++i) K.at(kr, piv[i]) = F_->neg(R.at(i, c));
    ++kr;
  }
  return K;
}

Mat Mat::inverse() const {
  if (nr_ != nc_) throw std::domain_error("inverse of non-square matrix");
  Mat aug = hstack(*this, identity(*F_, nr_));
  int r = aug.rref();
  if (r != nr_) throw std::domain_error("matrix is singular");
  return aug.block(0, nc_, nr_, nc_);
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.nr_ != b.nr_) throw std::invalid_argument("hstack row mismatch");
  Mat r(*a.F_, a.nr_, a.nc_ + b.nc_);
  for (int i = 0; i < a.nr_; ++i) {
    for (int j = 0; j < a.nc_; ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.nc_; ++j) r.at(i, a.nc_ + j) = b.at(i, j);
  }
  return r;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.nc_ != b.nc_) throw std::invalid_argument("vstack column mismatch");
  Mat r(*a.F_, a.nr_ + b.nr_, a.nc_);
  for (int i = 0; i < a.nr_; ++i)
    for (int j = 0; j < a.nc_; ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.nr_; ++i)
    for (int j = 0; j < b.nc_; ++j) r.at(a.nr_ + i, j) = b.at(i, j);
  return r;
}

Mat Mat::block(int i0, int j0, int nr, int nc) const {
  Mat r(*F_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(i, j) = at(i0 + i, j0 + j);
  return r;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < nr_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < nc_; ++j) os << (j ? " " : "") << int(at(i, j));
  }
  os << "]";
  return os.str();
}

std::optional<LinSolution> solve_linear(const Mat& A, const std::vector<fel>& b) {
  if ((int)b.size() != A.rows()) throw std::invalid_argument("solve_linear shape mismatch");
  const Gf& F = A.field();
  Mat bb(F, A.rows(), 1);
  for (int i = 0; i < A.rows(); ++i) bb.at(i, 0) = b[i];
  Mat aug = Mat::hstack(A, bb);
  std::vector<int> piv;
  aug.rref(&piv);
  for (int c : piv)
    if (c == A.cols()) return std::nullopt;  // pivot in the constant column
  std::vector<fel> x(A.cols(), 0);
  for (int i = 0; i < (int)piv.size(); ++i) x[piv[i]] = aug.at(i, A.cols());
  return LinSolution{std::move(x), A.kernel()};
}

Subspace::Subspace(const Gf& F, int ambient) : ambient_(ambient), basis_(F, 0, ambient) {}

Subspace::Subspace(const Mat& spanning_rows, int ambient) : ambient_(ambient) {
  Mat m = spanning_rows;
  int r = m.rref();
  basis_ = m.block(0, 0, r, ambient);
}

Subspace Subspace::full(const Gf& F, int ambient) {
  return Subspace(Mat::identity(F, ambient), ambient);
}

bool Subspace::contains(const std::vector<fel>& v) const {
  // Reduce v against the RREF basis.
  const Gf& F = basis_.field();
  std::vector<fel> w = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
      if (basis_.at(i, j)) { pc = j; break; }
    if (pc < 0) continue;
    fel f = w[pc];
    if (!f) continue;
    for (int j = pc; j < ambient_; ++j) w[j] = F.sub(w[j], F.mul(f, basis_.at(i, j)));
  }
  for (fel x : w)
    if (x) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (int i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspace ambient mismatch");
  if (basis_.rows() == 0) return other;
  if (other.basis_.rows() == 0) return *this;
  return Subspace(Mat::vstack(basis_, other.basis_), ambient_);
}

Subspace Subspace::image_under(const Mat& M) const {
  // rows of (basis * M^T) span the image
  return Subspace(basis_ * M.transpose(), M.rows());
}

bool Subspace::operator<(const Subspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (basis_.rows() != o.basis_.rows()) return basis_.rows() < o.basis_.rows();
  return basis_.data() < o.basis_.data();
}

std::string Subspace::str() const {
  return "span" + basis_.str();
}

long long q_pow(int q, int d, long long cap) {
  long long r = 1;
  for (int i = 0; i < d; ++i) {
    r *= q;
    if (r > cap) throw cap_exceeded("q^d exceeds cap");
  }
  return r;
}

long long gauss_binom(int q, int d, int k) {
  if (k < 0 || k > d) return 0;
  // [d k]_q = prod_{i=0}^{k-1} (q^{d-i}-1)/(q^{i+1}-1), computed exactly
  long long num = 1;
  for (int i = 0; i < k; ++i) {
    long long top = 1;
    for (int j = 0; j < d - i; ++j) top *= q;
    top -= 1;
    long long bot = 1;
    for (int j = 0; j < i + 1; ++j) bot *= q;
    bot -= 1;
    num *= top;
    if (num % bot != 0) throw std::logic_error("gauss_binom rounding");
    num /= bot;
  }
  return num;
}

void enumerate_vectors(const Gf& F, int d, long long cap,
                       const std::function<void(const std::vector<fel>&)>& fn) {
  long long total = q_pow(F.q(), d, cap);
  std::vector<fel> v(d, 0);
  for (long long n = 0; n < total; ++n) {
    fn(v);
    for (int i = 0; i < d; ++i) {
      if (v[i] + 1 < F.q()) { ++v[i]; break; }
      v[i] = 0;
    }
  }
}

void enumerate_lines(const Gf& F, int d, long long cap,
                     const std::function<void(const Subspace&)>& fn) {
  if (d == 0) return;
  long long count = (q_pow(F.q(), d, cap * (F.q() - 1) + 1) - 1) / (F.q() - 1);
  if (count > cap) throw cap_exceeded("line enumeration exceeds cap");
  // canonical representatives: first nonzero coordinate equals 1
  std::vector<fel> v(d, 0);
  for (int lead = d - 1; lead >= 0; --lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    int tail = d - lead - 1;
    long long combos = 1;
    for (int i = 0; i < tail; ++i) combos *= F.q();
    for (long long n = 0; n < combos; ++n) {
      long long t = n;
      for (int i = 0; i < tail; ++i) { v[lead + 1 + i] = fel(t % F.q()); t /= F.q(); }
      Mat m(F, 1, d);
      for (int j = 0; j < d; ++j) m.at(0, j) = v[j];
      fn(Subspace(m, d));
    }
  }
}

void enumerate_hyperplanes(const Gf& F, int d, long long cap,
                           const std::function<void(const Subspace&)>& fn) {
  if (d == 0) return;
  enumerate_lines(F, d, cap, [&](const Subspace& covector) {
    Mat c(F, 1, d);
    for (int j = 0; j < d; ++j) c.at(0, j) = covector.basis().at(0, j);
    fn(Subspace(c.kernel(), d));
  });
}

namespace {

// Recursively fill the free entries of an RREF profile with given pivot
// columns; yields each subspace of that profile exactly once.
void rref_profiles(const Gf& F, int d, int k, long long cap, long long& seen,
                   const std::function<void(const Mat&)>& fn) {
  std::vector<int> piv(k);
  std::function<void(int, int)> choose = [&](int idx, int from) {
    if (idx == k) {
      std::vector<char> is_piv(d, 0);
      for (int c : piv) is_piv[c] = 1;
      // free positions: row i, column j with j > piv[i] and j not a pivot
      std::vector<std::pair<int, int>> freepos;
      for (int i = 0; i < k; ++i)
        for (int j = piv[i] + 1; j < d; ++j)
          if (!is_piv[j]) freepos.push_back({i, j});
      long long combos = 1;
      for (size_t i = 0; i < freepos.size(); ++i) {
        combos *= F.q();
        if (combos > cap) throw cap_exceeded("subspace enumeration exceeds cap");
      }
      Mat m(F, k, d);
      for (int i = 0; i < k; ++i) m.at(i, piv[i]) = 1;
      for (long long n = 0; n < combos; ++n) {
        long long t = n;
        for (auto [i, j] : freepos) { m.at(i, j) = fel(t % F.q()); t /= F.q(); }
        if (++seen > cap) throw cap_exceeded("subspace enumeration exceeds cap");
        fn(m);
      }
      return;
    }
    for (int c = from; c <= d - (k - idx); ++c) {
      piv[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  if (k >= 0) choose(0, 0);
}

}  // namespace

void enumerate_subspaces_over(const Gf& F, int d, int k, const Subspace& lower,
                              long long cap, const std::function<void(const Subspace&)>& fn) {
  int w = lower.dim();
  if (k < w || k > d) return;
  if (k == w) { fn(lower); return; }
  // Work in coordinates of F^d / lower: pick any complement spanned by the
  // non-pivot standard vectors of lower's RREF basis.
  std::vector<int> piv;
  Mat lb = lower.basis();
  {
    Mat t = lb;
    t.rref(&piv);
  }
  std::vector<char> is_piv(d, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<int> comp;  // standard coordinates spanning a complement
  for (int j = 0; j < d; ++j)
    if (!is_piv[j]) comp.push_back(j);
  int m = (int)comp.size();
  long long seen = 0;
  rref_profiles(F, m, k - w, cap, seen, [&](const Mat& small) {
    // lift rows of `small` into F^d through the complement coordinates
    Mat rows(F, small.rows() + lb.rows(), d);
    for (int i = 0; i < small.rows(); ++i)
      for (int j = 0; j < m; ++j) rows.at(i, comp[j]) = small.at(i, j);
    for (int i = 0; i < lb.rows(); ++i)
      for (int j = 0; j < d; ++j) rows.at(small.rows() + i, j) = lb.at(i, j);
    fn(Subspace(rows, d));
  });
}

}  // namespace dca
