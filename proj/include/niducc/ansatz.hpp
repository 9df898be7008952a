#pragma once

#include <span>
#include <string>
#include <vector>

#include "niducc/statevector.hpp"

namespace niducc {

enum class Protocol { weak, weak_lie, strong, strong_lie };

inline const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::weak: return "weak";
    case Protocol::weak_lie: return "weak-lie";
    case Protocol::strong: return "strong";
    case Protocol::strong_lie: return "strong-lie";
  }
  return "?";
}

inline Protocol protocol_from_name(const std::string& s) {
  if (s == "weak") return Protocol::weak;
  if (s == "weak-lie") return Protocol::weak_lie;
  if (s == "strong") return Protocol::strong;
  if (s == "strong-lie") return Protocol::strong_lie;
  throw ConfigError("unknown protocol '" + s + "'");
}

/// k layers of the pool exponentials; parameter index = layer * L + position,
/// evaluated in parameter order (pool[0] of layer 0 acts on |HF> first).
struct AnsatzSpec {
  std::vector<PauliString> pool;
  int k = 1;
  Protocol protocol = Protocol::strong_lie;

  std::size_t parameter_count() const { return pool.size() * static_cast<std::size_t>(k); }

  std::vector<PauliString> flattened_ops() const {
    std::vector<PauliString> ops;
    ops.reserve(parameter_count());
    for (int layer = 0; layer < k; ++layer)
      for (const auto& p : pool) ops.push_back(p);
    return ops;
  }
};

inline AnsatzSpec build_ansatz(std::vector<PauliString> pool, int k,
                               Protocol protocol) {
  if (pool.empty()) throw ConfigError("ansatz pool must not be empty");
  if (k < 1) throw ConfigError("layer count must be at least 1");
  for (const auto& p : pool)
    if (!p.is_phase_free())
      throw ContractError("ansatz pool strings must be phase-free");
  return AnsatzSpec{std::move(pool), k, protocol};
}

/// |psi(theta)> = prod_{l=M..1} e^{i theta_l P_l} |ref> (op 0 applied first).
inline StateVector apply_exponential_product(std::span<const PauliString> ops,
                                             std::span<const double> theta,
                                             const StateVector& ref) {
  if (ops.size() != theta.size())
    throw DimensionError("operator/parameter count mismatch");
  StateVector state = ref;
  for (std::size_t l = 0; l < ops.size(); ++l)
    apply_pauli_exponential(state, ops[l], theta[l]);
  return state;
}

/// Exact dE/dtheta_l for E = <psi|H|psi> via one forward sweep and one
/// backward co-state sweep: O(M) exponential applications total.
/// Optionally returns the energy and the prepared state.
inline std::vector<double> analytic_gradient(std::span<const PauliString> ops,
                                             std::span<const double> theta,
                                             const PauliSum& h,
                                             const StateVector& ref,
                                             double* energy_out = nullptr,
                                             StateVector* state_out = nullptr) {
  if (ops.size() != theta.size())
    throw DimensionError("operator/parameter count mismatch");
  const std::size_t m = ops.size();
  StateVector fwd = apply_exponential_product(ops, theta, ref);
  StateVector back(ref.num_qubits());
  apply_pauli_sum(h, fwd, back);
  if (energy_out) {
    cplx e = overlap(fwd, back);
    if (std::abs(e.imag()) > 1e-8)
      throw ContractError("energy has non-real value; operator not Hermitian");
    *energy_out = e.real();
  }
  if (state_out) *state_out = fwd;

  std::vector<double> grad(m, 0.0);
  for (std::size_t l = m; l-- > 0;) {
    // grad_l = 2 Re( i <back| P_l |fwd> ) with fwd = U_l..U_1|ref>,
    // back = U_{l+1}^+..U_M^+ H |psi>
    grad[l] = -2.0 * matrix_element(back, ops[l], fwd).imag();
    if (l > 0) {
      apply_pauli_exponential(fwd, ops[l], -theta[l]);
      apply_pauli_exponential(back, ops[l], -theta[l]);
    }
  }
  return grad;
}

struct ResourceEstimate {
  std::size_t parameters = 0;
  std::size_t cnots = 0;
};

/// parameters = k|pool|; CNOTs = k * sum_l (2 weight(P_l) - 2), the staircase
/// cost of one Pauli-string exponential.
inline ResourceEstimate estimate_resources(const AnsatzSpec& spec) {
  ResourceEstimate est;
  est.parameters = spec.parameter_count();
  std::size_t per_layer = 0;
  for (const auto& p : spec.pool)
    per_layer += 2 * static_cast<std::size_t>(p.weight()) - 2;
  est.cnots = per_layer * static_cast<std::size_t>(spec.k);
  return est;
}

}  // namespace niducc
