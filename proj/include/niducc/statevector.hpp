#pragma once

#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "niducc/pauli_sum.hpp"

namespace niducc {

using cplx = std::complex<double>;

/// Exact 2^n-amplitude statevector.  Amplitude index bit q corresponds to
/// qubit q, matching the PauliString mask layout.
class StateVector {
 public:
  explicit StateVector(int n) : n_(n) {
    if (n < 1 || n > 30) throw DimensionError("statevector qubit count out of range");
    amp_.assign(std::size_t{1} << n, cplx(0, 0));
  }

  static StateVector basis_state(int n, mask_t bits) {
    StateVector s(n);
    if (n < 64 && (bits >> n) != 0)
      throw DimensionError("basis state bits beyond qubit count");
    s.amp_[bits] = 1.0;
    return s;
  }

  int num_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  cplx& operator[](std::size_t i) { return amp_[i]; }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }
  std::vector<cplx>& amplitudes() { return amp_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
  }

 private:
  int n_;
  std::vector<cplx> amp_;
};

inline void check_same_n(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw DimensionError("statevectors have different qubit counts");
}

namespace detail {

/// Deterministic pairwise-tree reduction; independent of evaluation order
/// used to fill `parts`.
inline cplx tree_sum(std::vector<cplx>& parts) {
  if (parts.empty()) return {0, 0};
  std::size_t n = parts.size();
  while (n > 1) {
    std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) parts[i] += parts[i + half];
    n = half;
  }
  return parts[0];
}

inline cplx phase_on_basis(const PauliString& p, mask_t bits) {
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cplx ph = ipow[(p.phase_exp() + p.y_count()) & 3];
  return (popcount(p.z_bits() & bits) & 1) ? -ph : ph;
}

}  // namespace detail

/// out = P|in>.
inline void apply_pauli(const PauliString& p, const StateVector& in,
                        StateVector& out) {
  check_same_n(in, out);
  if (p.num_qubits() != in.num_qubits())
    throw DimensionError("Pauli string / state qubit count mismatch");
  const std::size_t dim = in.dim();
  const mask_t x = p.x_bits();
#pragma omp parallel for schedule(static)
  for (std::size_t v = 0; v < dim; ++v) {
    mask_t w = v ^ x;
    out[v] = detail::phase_on_basis(p, w) * in[w];
  }
}

/// In-place state <- exp(i theta P) state for phase-free P (so P^2 = I):
/// cos(theta) I + i sin(theta) P applied over index pairs linked by P's
/// x-mask, one pass, each pair visited once.
inline void apply_pauli_exponential(StateVector& state, const PauliString& p,
                                    double theta) {
  if (!p.is_phase_free())
    throw ContractError("apply_pauli_exponential requires a phase-free string");
  if (p.num_qubits() != state.num_qubits())
    throw DimensionError("Pauli string / state qubit count mismatch");
  const double c = std::cos(theta), s = std::sin(theta);
  const std::size_t dim = state.dim();
  const mask_t x = p.x_bits();
  const mask_t z = p.z_bits();
  if (x == 0) {
    // diagonal string: amp[v] *= cos + i s_v sin with s_v = (-1)^{|z&v|}
    const cplx ep(c, s), em(c, -s);
#pragma omp parallel for schedule(static)
    for (std::size_t v = 0; v < dim; ++v)
      state[v] *= (popcount(z & v) & 1) ? em : ep;
    return;
  }
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cplx base = ipow[p.y_count() & 3];
  const mask_t pivot = x & (~x + 1);  // lowest set bit of x
#pragma omp parallel for schedule(static)
  for (std::size_t v = 0; v < dim; ++v) {
    if (v & pivot) continue;  // visit each pair from its pivot-low member
    const mask_t w = v ^ x;
    cplx ph_v = (popcount(z & v) & 1) ? -base : base;   // P|v> phase
    cplx ph_w = (popcount(z & w) & 1) ? -base : base;   // P|w> phase
    const cplx av = state[v], aw = state[w];
    state[v] = c * av + cplx(0, s) * ph_w * aw;
    state[w] = c * aw + cplx(0, s) * ph_v * av;
  }
}

/// out = A|in> for a PauliSum A; each output amplitude accumulates its terms
/// in a fixed order, so results are independent of thread count.
inline void apply_pauli_sum(const PauliSum& a, const StateVector& in,
                            StateVector& out) {
  check_same_n(in, out);
  if (a.num_qubits() != in.num_qubits())
    throw DimensionError("PauliSum / state qubit count mismatch");
  const std::size_t dim = in.dim();
  const auto& terms = a.terms();
  struct TermData {
    mask_t x, z;
    cplx base;
  };
  std::vector<TermData> td;
  td.reserve(terms.size());
  static constexpr cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& [cf, p] : terms)
    td.push_back({p.x_bits(), p.z_bits(), cf * ipow[(p.phase_exp() + p.y_count()) & 3]});
#pragma omp parallel for schedule(static)
  for (std::size_t v = 0; v < dim; ++v) {
    cplx acc(0, 0);
    for (const auto& t : td) {
      const mask_t w = v ^ t.x;
      cplx c = t.base * in[w];
      acc += (popcount(t.z & w) & 1) ? -c : c;
    }
    out[v] = acc;
  }
}

/// <bra|P|ket>, accumulated over fixed-size chunks combined in index order.
inline cplx matrix_element(const StateVector& bra, const PauliString& p,
                           const StateVector& ket) {
  check_same_n(bra, ket);
  const std::size_t dim = ket.dim();
  const mask_t x = p.x_bits();
  constexpr std::size_t kChunk = 4096;
  const std::size_t nchunks = (dim + kChunk - 1) / kChunk;
  std::vector<cplx> parts(nchunks, cplx(0, 0));
#pragma omp parallel for schedule(static)
  for (std::size_t ci = 0; ci < nchunks; ++ci) {
    cplx acc(0, 0);
    const std::size_t lo = ci * kChunk, hi = std::min(dim, lo + kChunk);
    for (std::size_t w = lo; w < hi; ++w)
      acc += std::conj(bra[w ^ x]) * detail::phase_on_basis(p, w) * ket[w];
    parts[ci] = acc;
  }
  return detail::tree_sum(parts);
}

/// <state|H|state> for Hermitian-intent H.  Throws if the imaginary residue
/// exceeds 1e-8; residues below that are checked against 1e-12 by callers'
/// tests and discarded.
inline double expectation(const StateVector& state, const PauliSum& h) {
  if (h.num_qubits() != state.num_qubits())
    throw DimensionError("PauliSum / state qubit count mismatch");
  const auto& terms = h.terms();
  std::vector<cplx> parts(terms.size(), cplx(0, 0));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [cf, p] = terms[k];
    const mask_t x = p.x_bits();
    cplx acc(0, 0);
    const std::size_t dim = state.dim();
    for (std::size_t w = 0; w < dim; ++w)
      acc += std::conj(state[w ^ x]) * detail::phase_on_basis(p, w) * state[w];
    parts[k] = cf * acc;
  }
  cplx total = detail::tree_sum(parts);
  if (std::abs(total.imag()) > 1e-8)
    throw ContractError("expectation has non-real value; operator not Hermitian");
  return total.real();
}

/// state <- exp(A) state for an anti-Hermitian PauliSum A, via uniform
/// scaling (unit 1-norm bound per step) and a truncated Taylor series with
/// term-norm stopping at tol.
inline void apply_antihermitian_exponential(StateVector& state, const PauliSum& a,
                                            double tol = 1e-12) {
  if (tol <= 0) throw ConfigError("Taylor tolerance must be positive");
  if (a.num_qubits() != state.num_qubits())
    throw DimensionError("PauliSum / state qubit count mismatch");
  if (a.size() == 0) return;
  if (!a.is_anti_hermitian())
    throw ContractError("apply_antihermitian_exponential requires an anti-Hermitian sum");
  const int steps = std::max(1, static_cast<int>(std::ceil(a.one_norm())));
  const double inv = 1.0 / steps;
  StateVector term = state, tmp(state.num_qubits());
  const std::size_t dim = state.dim();
  for (int rep = 0; rep < steps; ++rep) {
    term = state;
    for (int k = 1; k <= 64; ++k) {
      apply_pauli_sum(a, term, tmp);
      const double f = inv / k;
#pragma omp parallel for schedule(static)
      for (std::size_t v = 0; v < dim; ++v) {
        term[v] = f * tmp[v];
        state[v] += term[v];
      }
      if (term.norm() < tol / steps) break;
      if (k == 64)
        throw Error("Taylor series for exp(A) did not converge in 64 terms");
    }
  }
  const double nrm = state.norm();
  if (std::abs(nrm - 1.0) > 1e-9)
    throw ContractError("exponential application broke normalization");
#pragma omp parallel for schedule(static)
  for (std::size_t v = 0; v < dim; ++v) state[v] /= nrm;
}

/// |<a|b>|^2; invariant under global phases of either argument.
inline double fidelity(const StateVector& a, const StateVector& b) {
  check_same_n(a, b);
  constexpr std::size_t kChunk = 4096;
  const std::size_t dim = a.dim();
  const std::size_t nchunks = (dim + kChunk - 1) / kChunk;
  std::vector<cplx> parts(nchunks, cplx(0, 0));
  for (std::size_t ci = 0; ci < nchunks; ++ci) {
    cplx acc(0, 0);
    const std::size_t lo = ci * kChunk, hi = std::min(dim, lo + kChunk);
    for (std::size_t w = lo; w < hi; ++w) acc += std::conj(a[w]) * b[w];
    parts[ci] = acc;
  }
  return std::norm(detail::tree_sum(parts));
}

inline cplx overlap(const StateVector& a, const StateVector& b) {
  check_same_n(a, b);
  cplx acc(0, 0);
  for (std::size_t w = 0; w < a.dim(); ++w) acc += std::conj(a[w]) * b[w];
  return acc;
}

}  // namespace niducc
