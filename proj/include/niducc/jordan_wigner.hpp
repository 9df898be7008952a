#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "niducc/fcidump.hpp"
#include "niducc/pauli_sum.hpp"

namespace niducc {

namespace detail {

/// Accumulate coeff * (ladder product) into `out` under Jordan-Wigner.
/// ops are (spin-orbital, is_creation) applied right-to-left as written,
/// i.e. the product op[0] op[1] ... acts with op.back() first on a ket.
inline void jw_ladder_product(PauliSum& out,
                              std::span<const std::pair<int, bool>> ops,
                              std::complex<double> coeff) {
  const int n = out.num_qubits();
  std::vector<std::pair<std::complex<double>, PauliString>> acc;
  acc.emplace_back(coeff, PauliString::identity(n));
  for (const auto& [q, creation] : ops) {
    mask_t chain = (mask_t{1} << q) - 1;  // Z on qubits below q
    PauliString xs(n, mask_t{1} << q, chain);
    PauliString ys(n, mask_t{1} << q, chain | (mask_t{1} << q));
    std::complex<double> yc = creation ? std::complex<double>(0, -0.5)
                                       : std::complex<double>(0, 0.5);
    std::vector<std::pair<std::complex<double>, PauliString>> next;
    next.reserve(acc.size() * 2);
    for (const auto& [c, p] : acc) {
      next.emplace_back(c * 0.5, multiply(p, xs));
      next.emplace_back(c * yc, multiply(p, ys));
    }
    acc.swap(next);
  }
  for (const auto& [c, p] : acc) out.add(c, p);
}

}  // namespace detail

/// Jordan-Wigner image of the anti-Hermitian double-excitation generator
/// a+_k a+_l a_j a_i - h.c. (all indices are spin-orbitals).
inline PauliSum excitation_generator(int n_so, int i, int j, int k, int l) {
  PauliSum g(n_so);
  std::pair<int, bool> fwd[4] = {{k, true}, {l, true}, {j, false}, {i, false}};
  std::pair<int, bool> rev[4] = {{i, true}, {j, true}, {l, false}, {k, false}};
  detail::jw_ladder_product(g, fwd, 1.0);
  detail::jw_ladder_product(g, rev, -1.0);
  g.compress();
  return g;
}

/// Total-number operator sum_q (I - Z_q)/2.
inline PauliSum number_operator(int n_so) {
  PauliSum num(n_so);
  for (int q = 0; q < n_so; ++q) {
    num.add(0.5, PauliString::identity(n_so));
    num.add(-0.5, PauliString::single(n_so, q, 'Z'));
  }
  num.compress();
  return num;
}

/// Qubit Hamiltonian sum_pq h_pq a+_p a_q + 1/2 sum (pq|rs) a+ a+ a a
/// + core under Jordan-Wigner with interleaved spin-orbital ordering.
inline PauliSum build_qubit_hamiltonian(const MolecularSystem& sys) {
  const int n = sys.n_spatial;
  PauliSum ham(sys.n_so);
  ham.add(sys.core_energy, PauliString::identity(sys.n_so));

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      double hpq = sys.h1(p, q);
      if (hpq == 0.0) continue;
      for (int s = 0; s < 2; ++s) {
        std::pair<int, bool> ops[2] = {
            {MolecularSystem::so_index(p, s), true},
            {MolecularSystem::so_index(q, s), false}};
        detail::jw_ladder_product(ham, ops, hpq);
      }
    }

  // 1/2 sum_pqrs (pq|rs) sum_{s1,s2} a+_{p s1} a+_{r s2} a_{s s2} a_{q s1}
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double vpqrs = sys.eri(p, q, r, s);
          if (vpqrs == 0.0) continue;
          for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2) {
              int a = MolecularSystem::so_index(p, s1);
              int b = MolecularSystem::so_index(r, s2);
              int c = MolecularSystem::so_index(s, s2);
              int d = MolecularSystem::so_index(q, s1);
              if (a == b || c == d) continue;  // a+a+ / aa on same mode vanish
              std::pair<int, bool> ops[4] = {
                  {a, true}, {b, true}, {c, false}, {d, false}};
              detail::jw_ladder_product(ham, ops, 0.5 * vpqrs);
            }
        }

  ham.compress();
  if (!ham.is_hermitian())
    throw ContractError("qubit Hamiltonian failed Hermiticity check");
  return ham;
}

}  // namespace niducc
