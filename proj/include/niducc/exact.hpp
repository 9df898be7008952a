#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <optional>
#include <unordered_map>
#include <vector>

#include "niducc/statevector.hpp"

namespace niducc {

/// Particle/spin sector filter: determinants with fixed alpha and beta
/// electron counts under the interleaved spin-orbital layout.
struct Sector {
  int n_elec;
  int ms2;
};

/// Enumerated basis of one (n_alpha, n_beta) sector with index lookup and
/// projection of Pauli sums onto the sector subspace.
class SectorBasis {
 public:
  SectorBasis(int n_so, Sector sec) : n_(n_so) {
    if (n_so % 2 != 0) throw ConfigError("sector basis needs an even qubit count");
    const int n_sp = n_so / 2;
    const int na = (sec.n_elec + sec.ms2) / 2;
    const int nb = (sec.n_elec - sec.ms2) / 2;
    if ((sec.n_elec + sec.ms2) % 2 != 0 || na < 0 || nb < 0 || na > n_sp || nb > n_sp)
      throw ConfigError("infeasible particle/spin sector");
    auto combos = [n_sp](int k) {
      std::vector<mask_t> out;
      std::vector<int> idx(k);
      for (int i = 0; i < k; ++i) idx[i] = i;
      if (k == 0) {
        out.push_back(0);
        return out;
      }
      while (true) {
        mask_t m = 0;
        for (int i : idx) m |= mask_t{1} << i;
        out.push_back(m);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n_sp - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
      }
      return out;
    };
    auto alphas = combos(na), betas = combos(nb);
    dets_.reserve(alphas.size() * betas.size());
    for (mask_t a : alphas)
      for (mask_t b : betas) dets_.push_back(spread(a) | (spread(b) << 1));
    std::sort(dets_.begin(), dets_.end());
    for (std::size_t i = 0; i < dets_.size(); ++i) index_[dets_[i]] = i;
  }

  int num_qubits() const { return n_; }
  std::size_t dim() const { return dets_.size(); }
  const std::vector<mask_t>& determinants() const { return dets_; }

  std::optional<std::size_t> index_of(mask_t det) const {
    auto it = index_.find(det);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Dense sector matrix of a PauliSum; real when every term has a real
  /// basis action (even y_count + phase_exp parity), complex otherwise.
  Eigen::MatrixXcd dense(const PauliSum& op) const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
    for (std::size_t j = 0; j < dets_.size(); ++j) {
      for (const auto& [c, p] : op.terms()) {
        auto [det2, ph] = apply_to_basis(p, dets_[j]);
        if (auto i = index_of(det2)) m(*i, j) += c * ph;
      }
    }
    return m;
  }

  bool real_valued(const PauliSum& op) const {
    for (const auto& [c, p] : op.terms())
      if ((p.phase_exp() + p.y_count()) % 2 != 0) return false;
    return true;
  }

  Eigen::MatrixXd dense_real(const PauliSum& op) const {
    if (!real_valued(op))
      throw ContractError("operator has imaginary basis action in this sector");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim(), dim());
    for (std::size_t j = 0; j < dets_.size(); ++j) {
      for (const auto& [c, p] : op.terms()) {
        auto [det2, sgn] = apply_to_basis_sign(p, dets_[j]);
        if (auto i = index_of(det2)) m(*i, j) += c * sgn;
      }
    }
    return m;
  }

  StateVector embed(const Eigen::VectorXcd& v) const {
    StateVector s(n_);
    for (std::size_t i = 0; i < dets_.size(); ++i) s[dets_[i]] = v(i);
    return s;
  }
  StateVector embed(const Eigen::VectorXd& v) const {
    StateVector s(n_);
    for (std::size_t i = 0; i < dets_.size(); ++i) s[dets_[i]] = v(i);
    return s;
  }
  Eigen::VectorXcd restrict(const StateVector& s) const {
    Eigen::VectorXcd v(dim());
    for (std::size_t i = 0; i < dets_.size(); ++i) v(i) = s[dets_[i]];
    return v;
  }

 private:
  // spread spatial-orbital mask bits i -> qubit 2i
  static mask_t spread(mask_t m) {
    mask_t out = 0;
    int q = 0;
    while (m) {
      if (m & 1) out |= mask_t{1} << (2 * q);
      m >>= 1;
      ++q;
    }
    return out;
  }

  int n_;
  std::vector<mask_t> dets_;
  std::unordered_map<mask_t, std::size_t> index_;
};

namespace detail {

inline std::pair<double, StateVector> ground_state_dense(const PauliSum& h) {
  const int n = h.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (const auto& [c, p] : h.terms()) {
      auto [i, ph] = apply_to_basis(p, j);
      m(i, j) += c * ph;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  StateVector s(n);
  for (std::size_t v = 0; v < dim; ++v) s[v] = es.eigenvectors()(v, 0);
  return {es.eigenvalues()(0), s};
}

/// Lanczos with full reorthogonalization for the smallest eigenpair.
inline std::pair<double, StateVector> ground_state_lanczos(const PauliSum& h) {
  const int n = h.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  const int max_iter = static_cast<int>(std::min<std::size_t>(dim, 400));
  std::vector<StateVector> basis;
  StateVector v(n);
  // deterministic pseudo-random start vector
  mask_t s = 0x243f6a8885a308d3ull;
  for (std::size_t i = 0; i < dim; ++i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    v[i] = cplx(static_cast<double>(s >> 11) / static_cast<double>(1ull << 53) - 0.5, 0);
  }
  double nv = v.norm();
  for (std::size_t i = 0; i < dim; ++i) v[i] /= nv;
  std::vector<double> alpha, beta;
  StateVector w(n);
  double prev = 1e300;
  for (int it = 0; it < max_iter; ++it) {
    basis.push_back(v);
    apply_pauli_sum(h, v, w);
    alpha.push_back(std::real(overlap(v, w)));
    // full reorthogonalization, two passes
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        cplx ov = overlap(b, w);
        for (std::size_t i = 0; i < dim; ++i) w[i] -= ov * b[i];
      }
    const double nb = w.norm();
    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const double e0 = es.eigenvalues()(0);
    if (std::abs(e0 - prev) < 1e-13 || nb < 1e-12) {
      Eigen::VectorXd ritz = es.eigenvectors().col(0);
      StateVector ground(n);
      for (int i = 0; i < m; ++i)
        for (std::size_t q = 0; q < dim; ++q) ground[q] += ritz(i) * basis[i][q];
      double ng = ground.norm();
      for (std::size_t q = 0; q < dim; ++q) ground[q] /= ng;
      return {e0, ground};
    }
    prev = e0;
    beta.push_back(nb);
    for (std::size_t i = 0; i < dim; ++i) w[i] /= nb;
    v = w;
  }
  throw Error("Lanczos did not converge");
}

}  // namespace detail

/// Lowest eigenpair of a Hermitian PauliSum: dense diagonalization up to 10
/// qubits (or within a particle/spin sector), Lanczos above.
inline std::pair<double, StateVector> exact_ground_state(
    const PauliSum& h, std::optional<Sector> sector = std::nullopt,
    int dense_limit = 10) {
  if (!h.is_hermitian()) throw ContractError("exact_ground_state needs Hermitian input");
  if (sector) {
    SectorBasis basis(h.num_qubits(), *sector);
    if (basis.dim() == 0) throw ConfigError("empty sector");
    if (basis.real_valued(h)) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(basis.dense_real(h));
      return {es.eigenvalues()(0), basis.embed(Eigen::VectorXd(es.eigenvectors().col(0)))};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(basis.dense(h));
    return {es.eigenvalues()(0), basis.embed(Eigen::VectorXcd(es.eigenvectors().col(0)))};
  }
  if (h.num_qubits() <= dense_limit) return detail::ground_state_dense(h);
  if (h.num_qubits() > 24)
    throw DimensionError("qubit count beyond the configured solver limit");
  return detail::ground_state_lanczos(h);
}

}  // namespace niducc
