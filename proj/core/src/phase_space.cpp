#include "qpurify/phase_space.hpp"

#include <map>
#include <mutex>
#include <numbers>

namespace qpurify {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int mod(int a, int d) {
  int r = a % d;
  return r < 0 ? r + d : r;
}

void require_odd_prime(int d) {
  if (!is_odd_prime(d)) throw std::invalid_argument("dimension must be an odd prime");
}

// A^u on one site: sum_k w^{2 a1 k} |k+a2><-k+a2|, w = e^{2 pi i/d}
std::vector<SparseEntry> single_site_entries(int d, int a1, int a2) {
  std::vector<SparseEntry> es;
  es.reserve(d);
  for (int k = 0; k < d; ++k) {
    const double ph = kTwoPi * 2.0 * a1 * k / d;
    es.push_back({mod(k + a2, d), mod(-k + a2, d), Complex(std::cos(ph), std::sin(ph))});
  }
  return es;
}

std::vector<SparseEntry> sparse_kron(const std::vector<SparseEntry>& a, int bside,
                                     const std::vector<SparseEntry>& b) {
  std::vector<SparseEntry> out;
  out.reserve(a.size() * b.size());
  for (const auto& ea : a)
    for (const auto& eb : b)
      out.push_back({ea.i * bside + eb.i, ea.j * bside + eb.j, ea.v * eb.v});
  return out;
}

std::vector<SparseEntry> transpose_entries(const std::vector<SparseEntry>& a) {
  std::vector<SparseEntry> out;
  out.reserve(a.size());
  for (const auto& e : a) out.push_back({e.j, e.i, e.v});
  return out;
}

}  // namespace

bool is_odd_prime(int d) {
  if (d < 3 || d % 2 == 0) return false;
  for (int f = 3; f * f <= d; f += 2)
    if (d % f == 0) return false;
  return true;
}

PhasePoint::PhasePoint(int d_, std::vector<std::pair<int, int>> comps)
    : d(d_), components(std::move(comps)) {
  require_odd_prime(d);
  for (auto& [a1, a2] : components) {
    a1 = mod(a1, d);
    a2 = mod(a2, d);
  }
}

int PhasePoint::index() const {
  int idx = 0;
  for (const auto& [a1, a2] : components) idx = idx * d * d + (a1 * d + a2);
  return idx;
}

PhasePoint PhasePoint::from_index(int d, int sites, int index) {
  std::vector<std::pair<int, int>> comps(sites);
  for (int s = sites - 1; s >= 0; --s) {
    const int u = index % (d * d);
    comps[s] = {u / d, u % d};
    index /= d * d;
  }
  return PhasePoint(d, std::move(comps));
}

Matrix weyl_operator(int d, int a1, int a2) {
  require_odd_prime(d);
  a1 = mod(a1, d);
  a2 = mod(a2, d);
  // tau = e^{(d+1) pi i / d}; tau^2 = w
  Matrix t = Matrix::Zero(d, d);
  const Complex phase = std::polar(1.0, -(d + 1) * std::numbers::pi * a1 * a2 / d);
  for (int j = 0; j < d; ++j) {
    // Z^{a1} X^{a2} |j> = w^{a1 (j+a2)} |j+a2>
    const double ph = kTwoPi * a1 * mod(j + a2, d) / d;
    t(mod(j + a2, d), j) = phase * Complex(std::cos(ph), std::sin(ph));
  }
  return t;
}

HermitianOperator phase_point_operator(const PhasePoint& u) {
  SparseHermitian s = sparse_phase_point_operator(u);
  return HermitianOperator(std::vector<int>(u.sites(), u.d), s.dense());
}

SparseHermitian sparse_phase_point_operator(const PhasePoint& u) {
  const int d = u.d;
  std::vector<SparseEntry> acc{{0, 0, 1.0}};
  int side = 1;
  for (const auto& [a1, a2] : u.components) {
    acc = sparse_kron(acc, d, single_site_entries(d, a1, a2));
    side *= d;
  }
  return SparseHermitian{side, std::move(acc)};
}

PhasePointBasis::PhasePointBasis(int d, int sites) : d_(d), sites_(sites) {
  require_odd_prime(d);
  if (sites < 1 || sites > 2)
    throw std::invalid_argument("dense phase-point bases are kept for 1 or 2 sites only");
  const int count = static_cast<int>(std::pow(d, 2 * sites));
  ops_.reserve(count);
  for (int idx = 0; idx < count; ++idx)
    ops_.push_back(phase_point_operator(PhasePoint::from_index(d, sites, idx)));
}

const HermitianOperator& PhasePointBasis::op(const PhasePoint& u) const {
  if (u.d != d_ || u.sites() != sites_)
    throw std::invalid_argument("phase point does not match basis");
  return ops_.at(u.index());
}

const PhasePointBasis& phase_point_basis(int d, int sites) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<PhasePointBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{d, sites}];
  if (!slot) slot = std::make_unique<PhasePointBasis>(d, sites);
  return *slot;
}

double WignerFunction::sum() const {
  double s = 0;
  for (double v : values) s += v;
  return s;
}

double WignerFunction::min() const {
  double m = values.empty() ? 0.0 : values.front();
  for (double v : values) m = std::min(m, v);
  return m;
}

WignerFunction wigner_of_state(const HermitianOperator& rho, const PhasePointBasis& basis) {
  if (rho.side() != basis.op(0).side())
    throw std::invalid_argument("state dimension does not match basis");
  WignerFunction w;
  w.d = basis.d();
  w.sites = basis.sites();
  const double norm = std::pow(static_cast<double>(basis.d()), basis.sites());
  w.values.reserve(basis.size());
  for (int idx = 0; idx < basis.size(); ++idx) {
    const Complex t = (basis.op(idx).entries() * rho.entries()).trace();
    w.values.push_back(t.real() / norm);
  }
  return w;
}

Complex triple_product_phase(const PhasePoint& r, const PhasePoint& w, const PhasePoint& v) {
  if (r.d != w.d || r.d != v.d) throw std::invalid_argument("mismatched dimensions");
  if (r.sites() != 1 || w.sites() != 1 || v.sites() != 1)
    throw std::invalid_argument("triple product phase is a single-site identity");
  const auto [a1r, a2r] = r.components[0];
  const auto [a1w, a2w] = w.components[0];
  const auto [a1v, a2v] = v.components[0];
  const long long f = static_cast<long long>(a1r) * (a2v - a2w) +
                      static_cast<long long>(a1w) * (a2r - a2v) +
                      static_cast<long long>(a1v) * (a2w - a2r);
  return std::polar(1.0, 2.0 * kTwoPi * static_cast<double>(f) / r.d);
}

std::vector<SparseHermitian> wigner_constraint_rows(int n_in, int d) {
  require_odd_prime(d);
  if (n_in < 1) throw std::invalid_argument("need at least one input copy");

  // single-site entry lists and their transposes, indexed by a1*d + a2
  std::vector<std::vector<SparseEntry>> site(d * d), site_t(d * d);
  for (int a1 = 0; a1 < d; ++a1)
    for (int a2 = 0; a2 < d; ++a2) {
      site[a1 * d + a2] = single_site_entries(d, a1, a2);
      site_t[a1 * d + a2] = transpose_entries(site[a1 * d + a2]);
    }

  const long long n_u = static_cast<long long>(std::pow(d, 2 * n_in));
  std::vector<SparseHermitian> rows;
  rows.reserve(n_u * d * d);
  std::vector<int> us(n_in);
  for (long long uidx = 0; uidx < n_u; ++uidx) {
    long long t = uidx;
    for (int s = n_in - 1; s >= 0; --s) {
      us[s] = static_cast<int>(t % (d * d));
      t /= d * d;
    }
    std::vector<SparseEntry> acc{{0, 0, 1.0}};
    int side = 1;
    for (int s = 0; s < n_in; ++s) {
      acc = sparse_kron(acc, d, site_t[us[s]]);
      side *= d;
    }
    for (int vidx = 0; vidx < d * d; ++vidx)
      rows.push_back(SparseHermitian{side * d, sparse_kron(acc, d, site[vidx])});
  }
  return rows;
}

}  // namespace qpurify
