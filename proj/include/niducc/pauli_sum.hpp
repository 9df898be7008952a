#pragma once

#include <algorithm>
#include <complex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "niducc/pauli.hpp"

namespace niducc {

/// Weighted sum of Pauli strings.  Stored terms carry a real coefficient
/// and fold any imaginary unit into the string's phase_exp, so Hermitian
/// operators hold phase_exp=0 strings only and anti-Hermitian ones
/// phase_exp=1 strings only.  No two stored terms share (x,z).
class PauliSum {
 public:
  using Term = std::pair<double, PauliString>;

  explicit PauliSum(int n) : n_(n) {}

  int num_qubits() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Accumulate coeff * p (p's own phase_exp is folded into the coefficient).
  void add(std::complex<double> coeff, const PauliString& p) {
    if (p.num_qubits() != n_)
      throw DimensionError("PauliSum term has mismatched qubit count");
    acc_[pack(p)] += coeff * p.phase_factor();
    dirty_ = true;
  }

  void add(const PauliSum& other, std::complex<double> scale = 1.0) {
    if (other.n_ != n_) throw DimensionError("PauliSum size mismatch");
    for (const auto& [c, p] : other.terms_) add(scale * c, p);
  }

  /// Merge duplicates, split real/imaginary parts onto phase_exp 0/1 strings,
  /// drop magnitudes below tol, and order terms canonically.
  void compress(double tol = 1e-12) {
    for (const auto& [c, p] : terms_) acc_[pack(p)] += c * p.phase_factor();
    terms_.clear();
    for (const auto& [key, c] : acc_) {
      auto [x, z] = unpack(key);
      if (std::abs(c.real()) >= tol)
        terms_.emplace_back(c.real(), PauliString(n_, x, z, 0));
      if (std::abs(c.imag()) >= tol)
        terms_.emplace_back(c.imag(), PauliString(n_, x, z, 1));
    }
    acc_.clear();
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.second < b.second; });
    dirty_ = false;
  }

  bool compressed() const { return !dirty_; }

  bool is_hermitian() const {
    for (const auto& [c, p] : terms_)
      if (p.phase_exp() % 2 != 0) return false;
    return true;
  }

  bool is_anti_hermitian() const {
    for (const auto& [c, p] : terms_)
      if (p.phase_exp() % 2 == 0) return false;
    return true;
  }

  /// Sum of |coefficients|; upper bound on the operator norm.
  double one_norm() const {
    double s = 0.0;
    for (const auto& [c, p] : terms_) s += std::abs(c);
    return s;
  }

  PauliSum scaled(double f) const {
    PauliSum out(n_);
    out.terms_ = terms_;
    for (auto& [c, p] : out.terms_) c *= f;
    return out;
  }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<mask_t, mask_t>& k) const {
      std::uint64_t h = k.first * 0x9e3779b97f4a7c15ull;
      h ^= k.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  static std::pair<mask_t, mask_t> pack(const PauliString& p) {
    return {p.x_bits(), p.z_bits()};
  }
  static std::pair<mask_t, mask_t> unpack(const std::pair<mask_t, mask_t>& k) {
    return k;
  }

  int n_;
  std::vector<Term> terms_;
  std::unordered_map<std::pair<mask_t, mask_t>, std::complex<double>, KeyHash> acc_;
  bool dirty_ = false;
};

/// Symbolic product a*b, compressed.
inline PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("PauliSum size mismatch");
  PauliSum out(a.num_qubits());
  for (const auto& [ca, pa] : a.terms())
    for (const auto& [cb, pb] : b.terms())
      out.add(std::complex<double>(ca) * cb, multiply(pa, pb));
  out.compress();
  return out;
}

/// Symbolic commutator [a,b], compressed; empty iff a and b commute.
inline PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  if (a.num_qubits() != b.num_qubits()) throw DimensionError("PauliSum size mismatch");
  PauliSum out(a.num_qubits());
  for (const auto& [ca, pa] : a.terms())
    for (const auto& [cb, pb] : b.terms())
      if (auto c = commutator(pa, pb))
        out.add(2.0 * ca * cb, *c);
  out.compress();
  return out;
}

}  // namespace niducc
