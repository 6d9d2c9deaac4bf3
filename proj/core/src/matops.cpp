#include "qpurify/matops.hpp"

#include <algorithm>
#include <numeric>

namespace qpurify {

namespace {

long long product(const std::vector<int>& dims) {
  long long p = 1;
  for (int d : dims) p *= d;
  return p;
}

void check_dims(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("operator needs at least one site");
  for (int d : dims)
    if (d < 1) throw std::invalid_argument("site dimensions must be positive");
}

void check_sites(const std::vector<int>& sites, int n) {
  for (int s : sites)
    if (s < 1 || s > n) throw std::invalid_argument("site index out of range");
}

// digits[k] = index of site k+1, site 1 most significant
void to_digits(long long idx, const std::vector<int>& dims, std::vector<int>& digits) {
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(idx % dims[k]);
    idx /= dims[k];
  }
}

long long from_digits(const std::vector<int>& digits, const std::vector<int>& dims) {
  long long idx = 0;
  for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

}  // namespace

HermitianOperator::HermitianOperator(std::vector<int> dims, Matrix entries)
    : dims_(std::move(dims)), m_(std::move(entries)) {
  check_dims(dims_);
  const long long n = product(dims_);
  if (m_.rows() != n || m_.cols() != n)
    throw std::invalid_argument("matrix side does not match the product of site dimensions");
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  const double defect = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermTol * scale)
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
  m_ = ((m_ + m_.adjoint()) / 2.0).eval();
}

HermitianOperator HermitianOperator::identity(std::vector<int> dims) {
  check_dims(dims);
  const long long n = product(dims);
  return HermitianOperator(std::move(dims), Matrix::Identity(n, n));
}

HermitianOperator HermitianOperator::zero(std::vector<int> dims) {
  check_dims(dims);
  const long long n = product(dims);
  return HermitianOperator(std::move(dims), Matrix::Zero(n, n));
}

SitePermutation SitePermutation::identity(int n) {
  SitePermutation p;
  p.n = n;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 1);
  return p;
}

SitePermutation SitePermutation::from_cycle(int n, const std::vector<int>& cycle) {
  SitePermutation p = identity(n);
  for (size_t k = 0; k < cycle.size(); ++k) {
    int from = cycle[k];
    int to = cycle[(k + 1) % cycle.size()];
    if (from < 1 || from > n) throw std::invalid_argument("cycle entry out of range");
    p.image[from - 1] = to;
  }
  if (!p.is_valid()) throw std::invalid_argument("cycle entries must be distinct");
  return p;
}

SitePermutation SitePermutation::compose(const SitePermutation& other) const {
  if (n != other.n) throw std::invalid_argument("permutation size mismatch");
  SitePermutation r;
  r.n = n;
  r.image.resize(n);
  for (int k = 1; k <= n; ++k) r.image[k - 1] = image[other.image[k - 1] - 1];
  return r;
}

bool SitePermutation::is_valid() const {
  if (static_cast<int>(image.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : image) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

Matrix SparseHermitian::dense() const {
  Matrix m = Matrix::Zero(side, side);
  for (const auto& e : entries) m(e.i, e.j) += e.v;
  return m;
}

double SparseHermitian::eval(const Matrix& x) const {
  Complex acc = 0;
  for (const auto& e : entries) acc += std::conj(e.v) * x(e.i, e.j);
  return acc.real();
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  const Matrix& A = a.entries();
  const Matrix& B = b.entries();
  Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return HermitianOperator(std::move(dims), std::move(out));
}

Matrix partial_trace(const Matrix& x, const std::vector<int>& dims,
                     const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  check_sites(keep, n);
  std::vector<int> keep_sorted = keep;
  std::sort(keep_sorted.begin(), keep_sorted.end());
  if (std::adjacent_find(keep_sorted.begin(), keep_sorted.end()) != keep_sorted.end())
    throw std::invalid_argument("duplicate site index in keep set");

  std::vector<int> drop;
  for (int s = 1; s <= n; ++s)
    if (!std::binary_search(keep_sorted.begin(), keep_sorted.end(), s)) drop.push_back(s);

  std::vector<int> kdims, ddims;
  for (int s : keep_sorted) kdims.push_back(dims[s - 1]);
  for (int s : drop) ddims.push_back(dims[s - 1]);
  const long long nk = product(kdims.empty() ? std::vector<int>{1} : kdims);
  const long long nd = product(ddims.empty() ? std::vector<int>{1} : ddims);

  Matrix out = Matrix::Zero(nk, nk);
  std::vector<int> row(n), col(n), kr(keep_sorted.size()), kc(keep_sorted.size()),
      dr(drop.size());
  for (long long a = 0; a < nk; ++a) {
    if (!kdims.empty()) to_digits(a, kdims, kr);
    for (long long b = 0; b < nk; ++b) {
      if (!kdims.empty()) to_digits(b, kdims, kc);
      Complex acc = 0;
      for (long long t = 0; t < nd; ++t) {
        if (!ddims.empty()) to_digits(t, ddims, dr);
        for (size_t k = 0; k < keep_sorted.size(); ++k) {
          row[keep_sorted[k] - 1] = kr[k];
          col[keep_sorted[k] - 1] = kc[k];
        }
        for (size_t k = 0; k < drop.size(); ++k) {
          row[drop[k] - 1] = dr[k];
          col[drop[k] - 1] = dr[k];
        }
        acc += x(from_digits(row, dims), from_digits(col, dims));
      }
      out(a, b) = acc;
    }
  }
  return out;
}

HermitianOperator partial_trace(const HermitianOperator& x, const std::vector<int>& keep) {
  std::vector<int> keep_sorted = keep;
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<int> kdims;
  for (int s : keep_sorted) {
    if (s < 1 || s > x.num_sites()) throw std::invalid_argument("site index out of range");
    kdims.push_back(x.dims()[s - 1]);
  }
  if (kdims.empty()) throw std::invalid_argument("keep set must be nonempty");
  return HermitianOperator(std::move(kdims), partial_trace(x.entries(), x.dims(), keep));
}

Matrix partial_transpose(const Matrix& x, const std::vector<int>& dims,
                         const std::vector<int>& sites) {
  const int n = static_cast<int>(dims.size());
  check_sites(sites, n);
  std::vector<bool> flip(n, false);
  for (int s : sites) flip[s - 1] = true;

  const long long N = product(dims);
  Matrix out(N, N);
  std::vector<int> r(n), c(n), rr(n), cc(n);
  for (long long i = 0; i < N; ++i) {
    to_digits(i, dims, r);
    for (long long j = 0; j < N; ++j) {
      to_digits(j, dims, c);
      for (int k = 0; k < n; ++k) {
        rr[k] = flip[k] ? c[k] : r[k];
        cc[k] = flip[k] ? r[k] : c[k];
      }
      out(from_digits(rr, dims), from_digits(cc, dims)) = x(i, j);
    }
  }
  return out;
}

HermitianOperator partial_transpose(const HermitianOperator& x, const std::vector<int>& sites) {
  return HermitianOperator(x.dims(), partial_transpose(x.entries(), x.dims(), sites));
}

Matrix permutation_matrix(const SitePermutation& p, int d) {
  if (!p.is_valid()) throw std::invalid_argument("invalid permutation");
  const int n = p.n;
  std::vector<int> dims(n, d);
  const long long N = product(dims);
  Matrix out = Matrix::Zero(N, N);
  std::vector<int> in(n), moved(n);
  for (long long j = 0; j < N; ++j) {
    to_digits(j, dims, in);
    for (int k = 0; k < n; ++k) moved[p.image[k] - 1] = in[k];
    out(from_digits(moved, dims), j) = 1.0;
  }
  return out;
}

namespace {

void permutations_rec(std::vector<int>& cur, std::vector<bool>& used, int n,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v - 1]) continue;
    used[v - 1] = true;
    cur.push_back(v);
    permutations_rec(cur, used, n, out);
    cur.pop_back();
    used[v - 1] = false;
  }
}

}  // namespace

HermitianOperator symmetric_projector(int n, int d) {
  if (n < 1) throw std::invalid_argument("need at least one copy");
  std::vector<std::vector<int>> perms;
  std::vector<int> cur;
  std::vector<bool> used(n, false);
  permutations_rec(cur, used, n, perms);

  std::vector<int> dims(n, d);
  const long long N = product(dims);
  Matrix acc = Matrix::Zero(N, N);
  for (const auto& img : perms) {
    SitePermutation p{n, img};
    acc += permutation_matrix(p, d);
  }
  acc /= static_cast<double>(perms.size());
  return HermitianOperator(std::move(dims), std::move(acc));
}

double min_eigenvalue(const Matrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double min_eigenvalue(const HermitianOperator& x) { return min_eigenvalue(x.entries()); }

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double symmetric_dimension(int n, int d) { return binomial(n + d - 1, n); }

}  // namespace qpurify
