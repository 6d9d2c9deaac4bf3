#pragma once

#include "qpurify/matops.hpp"

namespace qpurify {

bool is_odd_prime(int d);

/// Point of the discrete phase space (Z_d x Z_d)^sites, one (a1,a2) pair per site.
struct PhasePoint {
  int d = 0;
  std::vector<std::pair<int, int>> components;

  PhasePoint() = default;
  PhasePoint(int d_, std::vector<std::pair<int, int>> comps);
  int sites() const { return static_cast<int>(components.size()); }
  /// Site-major linear index in [0, d^(2*sites)); per site a1*d + a2.
  int index() const;
  static PhasePoint from_index(int d, int sites, int index);
};

/// Heisenberg-Weyl operator T_u = tau^{-a1 a2} Z^{a1} X^{a2} on a single site.
Matrix weyl_operator(int d, int a1, int a2);

/// Phase-space point operator A^u; composite points are tensor products of
/// the single-site operators.
HermitianOperator phase_point_operator(const PhasePoint& u);

/// A^u in sparse form (exactly d nonzeros per site factor).
SparseHermitian sparse_phase_point_operator(const PhasePoint& u);

/// Full set {A^u} for a given (d, sites), cached after first construction.
class PhasePointBasis {
 public:
  PhasePointBasis(int d, int sites);

  int d() const { return d_; }
  int sites() const { return sites_; }
  int size() const { return static_cast<int>(ops_.size()); }
  const HermitianOperator& op(const PhasePoint& u) const;
  const HermitianOperator& op(int index) const { return ops_.at(index); }

 private:
  int d_, sites_;
  std::vector<HermitianOperator> ops_;
};

/// Shared cache; bases are immutable once built.
const PhasePointBasis& phase_point_basis(int d, int sites);

struct WignerFunction {
  int d = 0;
  int sites = 0;
  std::vector<double> values;  // indexed like PhasePoint::index()

  double value(const PhasePoint& u) const { return values.at(u.index()); }
  double sum() const;
  double min() const;
};

/// W_rho(u) = tr[A^u rho] / d^sites
WignerFunction wigner_of_state(const HermitianOperator& rho, const PhasePointBasis& basis);

/// tr[A^r A^w A^v] = e^{4 pi i f / d} for single-site points, with
/// f = a1^r(a2^v - a2^w) + a1^w(a2^r - a2^v) + a1^v(a2^w - a2^r).
Complex triple_product_phase(const PhasePoint& r, const PhasePoint& w, const PhasePoint& v);

/// Functionals J -> tr[((A^u)^T ox A^v) J] for all u on n_in sites and
/// single-site v, ordered by u.index()*d^2 + v.index(). A nonnegative value on
/// every row is the CPWP membership condition for the Choi operator J.
std::vector<SparseHermitian> wigner_constraint_rows(int n_in, int d);

}  // namespace qpurify
