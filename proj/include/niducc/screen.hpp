#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <sstream>
#include <vector>

#include "niducc/jordan_wigner.hpp"
#include "niducc/statevector.hpp"

namespace niducc {

/// Occupied-pair to virtual-pair fermionic double excitation relative to the
/// Hartree-Fock determinant (spin-orbital indices, i<j, k<l).
struct DoubleExcitation {
  int i = 0, j = 0, k = 0, l = 0;
  double v = 0.0;                 // coupling matrix element (Hartree)
  std::optional<double> t_star;   // optimized amplitude, set by UsCCD-VQE

  friend bool operator==(const DoubleExcitation& a, const DoubleExcitation& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k && a.l == b.l;
  }
};

/// Symmetry-preserving odd-Y qubit excitation with its screening strength
/// |<HF|[H,P]|HF>|.
struct Starter {
  PauliString pauli;
  DoubleExcitation source;
  double strength = 0.0;
};

struct StarterCandidate {
  PauliString pauli;
  DoubleExcitation source;
};

enum class StarterMode { strong, weak };

/// All S_z-conserving occupied->virtual double excitations whose coupling
/// |<D_{ij->kl}|H|D_HF>| is at least epsilon, in lexicographic (i,j,k,l)
/// order.  Closed-shell references only.
inline std::vector<DoubleExcitation> prescreen_doubles(const MolecularSystem& sys,
                                                       double epsilon = 1e-2) {
  if (epsilon <= 0) throw ConfigError("prescreening threshold must be positive");
  if (sys.ms2 != 0)
    throw ConfigError("open-shell references are out of scope for screening");
  const mask_t hf = hartree_fock_state(sys);
  std::vector<int> occ, vir;
  for (int q = 0; q < sys.n_so; ++q)
    ((hf >> q) & 1 ? occ : vir).push_back(q);

  auto spatial = [](int so) { return so / 2; };
  auto spin = [](int so) { return so % 2; };
  // antisymmetrized <kl||ij> over spin-orbitals from chemists' integrals
  auto coupling = [&](int i, int j, int k, int l) {
    double direct = 0.0, exch = 0.0;
    if (spin(k) == spin(i) && spin(l) == spin(j))
      direct = sys.eri(spatial(k), spatial(i), spatial(l), spatial(j));
    if (spin(k) == spin(j) && spin(l) == spin(i))
      exch = sys.eri(spatial(k), spatial(j), spatial(l), spatial(i));
    return direct - exch;
  };

  std::vector<DoubleExcitation> out;
  for (std::size_t a = 0; a < occ.size(); ++a)
    for (std::size_t b = a + 1; b < occ.size(); ++b)
      for (std::size_t c = 0; c < vir.size(); ++c)
        for (std::size_t d = c + 1; d < vir.size(); ++d) {
          int i = occ[a], j = occ[b], k = vir[c], l = vir[d];
          if (spin(i) + spin(j) != spin(k) + spin(l)) continue;
          double v = coupling(i, j, k, l);
          if (std::abs(v) >= epsilon) out.push_back({i, j, k, l, v, std::nullopt});
        }
  return out;
}

/// Keep excitations whose |v * t*| meets the dominance threshold; order
/// preserved.  Every entry must carry an optimized amplitude.
inline std::vector<DoubleExcitation> select_dominant(
    std::span<const DoubleExcitation> doubles, double epsilon = 1e-3) {
  if (epsilon <= 0) throw ConfigError("dominance threshold must be positive");
  std::vector<DoubleExcitation> out;
  for (const auto& d : doubles) {
    if (!d.t_star)
      throw StateError("select_dominant requires optimized amplitudes (run UsCCD first)");
    if (std::abs(d.v * *d.t_star) >= epsilon) out.push_back(d);
  }
  return out;
}

/// The eight odd-Y Pauli strings of the Jordan-Wigner expansion of
/// a+_k a+_l a_j a_i - h.c., phase-free, in canonical order.
inline std::vector<PauliString> paulis_from_double(int n_so,
                                                   const DoubleExcitation& exc) {
  PauliSum g = excitation_generator(n_so, exc.i, exc.j, exc.k, exc.l);
  std::vector<PauliString> out;
  for (const auto& [c, p] : g.terms()) out.push_back(p.phase_free());
  std::sort(out.begin(), out.end());
  return out;
}

/// Swap the alpha/beta spin-orbital of every spatial orbital.
inline PauliString spin_complement(const PauliString& p) {
  auto swap_pairs = [](mask_t m) {
    return ((m & 0x5555555555555555ull) << 1) | ((m >> 1) & 0x5555555555555555ull);
  };
  return PauliString(p.num_qubits(), swap_pairs(p.x_bits()), swap_pairs(p.z_bits()),
                     p.phase_exp());
}

namespace detail {

/// <HF|[H,P]|HF> has magnitude 2|Im <HF|H P|HF>| for Hermitian H and
/// phase-free P; the matrix element only needs the H terms whose x-mask
/// matches P's.
inline double starter_strength(const PauliSum& h, const PauliString& p, mask_t hf) {
  auto [det, ph] = apply_to_basis(p, hf);
  cplx me(0, 0);
  for (const auto& [c, t] : h.terms()) {
    if (t.x_bits() != p.x_bits()) continue;
    auto [back, tph] = apply_to_basis(t, det);
    (void)back;  // back == hf by construction of the x-mask match
    me += c * tph;
  }
  return 2.0 * std::abs((me * ph).imag());
}

struct StarterSymmetry {
  mask_t hf, amask, bmask;
  std::array<mask_t, 3> imasks;

  explicit StarterSymmetry(const MolecularSystem& sys)
      : hf(hartree_fock_state(sys)), amask(sys.alpha_mask()), bmask(sys.beta_mask()) {
    imasks = {0, 0, 0};
    for (int i = 0; i < sys.n_spatial; ++i) {
      int lbl = sys.irrep_of(i);
      for (int b = 0; b < 3; ++b)
        if ((lbl >> b) & 1) imasks[b] |= mask_t{3} << (2 * i);
    }
  }

  /// conditions (a)-(c): spin-count preservation, trivial irrep product,
  /// double rank (Hamming distance 4).
  bool structural(const PauliString& p) const {
    const mask_t x = p.x_bits();
    if (popcount(x) != 4) return false;
    if (popcount(x & amask & hf) != popcount(x & amask & ~hf)) return false;
    if (popcount(x & bmask & hf) != popcount(x & bmask & ~hf)) return false;
    for (mask_t m : imasks)
      if (popcount(x & m) & 1) return false;
    return true;
  }
};

}  // namespace detail

/// Protocol step 2: keep candidates that preserve particle number, S_z and
/// spatial symmetry on |HF>, act at double rank, and pass the strength test
/// (strong: |<HF|[H,P]|HF>| > eps; weak: <= eps, with the source excitation
/// below the dominance cut when its amplitude is known).  Kept starters are
/// closed under spin complementation and ordered by descending strength.
inline std::vector<Starter> symmetry_filter(std::span<const StarterCandidate> candidates,
                                            const MolecularSystem& sys,
                                            const PauliSum& h,
                                            double strength_epsilon = 1e-3,
                                            StarterMode mode = StarterMode::strong,
                                            double eps_dominant = 1e-3) {
  if (sys.ms2 != 0)
    throw ConfigError("open-shell references are out of scope for screening");
  detail::StarterSymmetry sym(sys);
  std::vector<Starter> kept;
  auto already_kept = [&](const PauliString& p) {
    for (const auto& s : kept)
      if (s.pauli.x_bits() == p.x_bits() && s.pauli.z_bits() == p.z_bits())
        return true;
    return false;
  };

  for (const auto& cand : candidates) {
    const PauliString p = cand.pauli.phase_free();
    if (p.y_count() % 2 == 0) continue;  // real generators only
    if (!sym.structural(p)) continue;
    const double strength = detail::starter_strength(h, p, sym.hf);
    bool pass;
    if (mode == StarterMode::strong) {
      pass = strength > strength_epsilon;
    } else {
      bool below_dominance = !cand.source.t_star ||
                             std::abs(cand.source.v * *cand.source.t_star) < eps_dominant;
      pass = strength <= strength_epsilon && below_dominance;
    }
    if (!pass || already_kept(p)) continue;
    kept.push_back({p, cand.source, strength});
    // spin-complement closure keeps the set an S^2-consistent pair set
    const PauliString comp = spin_complement(p).phase_free();
    if (!(comp == p) && sym.structural(comp) && comp.y_count() % 2 == 1 &&
        !already_kept(comp))
      kept.push_back({comp, cand.source, detail::starter_strength(h, comp, sym.hf)});
  }

  std::sort(kept.begin(), kept.end(), [](const Starter& a, const Starter& b) {
    if (a.strength != b.strength) return a.strength > b.strength;
    return a.pauli < b.pauli;
  });
  return kept;
}

/// One line per starter: "<string> <strength>".
inline std::string starters_to_text(std::span<const Starter> starters) {
  std::ostringstream out;
  out.precision(15);
  for (const auto& s : starters) out << s.pauli.str() << ' ' << s.strength << '\n';
  return out.str();
}

inline std::vector<Starter> starters_from_text(std::istream& in) {
  std::vector<Starter> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string text;
    if (!(ss >> text)) continue;
    Starter s;
    s.pauli = PauliString::parse(text);
    ss >> s.strength;
    out.push_back(s);
  }
  return out;
}

}  // namespace niducc
