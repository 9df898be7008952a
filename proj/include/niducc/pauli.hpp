#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "niducc/errors.hpp"

namespace niducc {

using mask_t = std::uint64_t;

inline int popcount(mask_t m) { return std::popcount(m); }

/// An n-qubit Pauli string i^phase * (O_0 x O_1 x ... x O_{n-1}) in the
/// symplectic (x,z) representation: qubit q carries X iff only bit q of x
/// is set, Z iff only bit q of z, Y iff both.  Immutable value type.
class PauliString {
 public:
  static constexpr int kMaxQubits = 64;

  PauliString() = default;

  PauliString(int n, mask_t x, mask_t z, int phase_exp = 0)
      : n_(n), x_(x), z_(z), phase_(static_cast<std::uint8_t>(phase_exp & 3)) {
    if (n < 1 || n > kMaxQubits) throw DimensionError("qubit count out of range");
    if (n < kMaxQubits && ((x | z) >> n) != 0)
      throw DimensionError("mask bits beyond qubit count");
  }

  static PauliString identity(int n) { return PauliString(n, 0, 0, 0); }

  static PauliString single(int n, int qubit, char op) {
    if (qubit < 0 || qubit >= n) throw DimensionError("qubit index out of range");
    mask_t b = mask_t{1} << qubit;
    switch (op) {
      case 'X': return PauliString(n, b, 0);
      case 'Y': return PauliString(n, b, b);
      case 'Z': return PauliString(n, 0, b);
      case 'I': return identity(n);
    }
    throw ParseError(std::string("unknown Pauli letter '") + op + "'");
  }

  int num_qubits() const { return n_; }
  mask_t x_bits() const { return x_; }
  mask_t z_bits() const { return z_; }
  int phase_exp() const { return phase_; }

  int weight() const { return popcount(x_ | z_); }
  int y_count() const { return popcount(x_ & z_); }
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_phase_free() const { return phase_ == 0; }

  PauliString phase_free() const { return PauliString(n_, x_, z_, 0); }

  /// i^phase as a complex number.
  std::complex<double> phase_factor() const {
    static constexpr std::complex<double> table[4] = {
        {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_];
  }

  char letter(int qubit) const {
    bool xb = (x_ >> qubit) & 1, zb = (z_ >> qubit) & 1;
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }

  /// "XIZY" with qubit 0 leftmost; phase prefix "+i"/"-1"/"-i" when nonzero.
  std::string str() const {
    static const char* prefix[4] = {"", "+i", "-1", "-i"};
    std::string out = prefix[phase_];
    for (int q = 0; q < n_; ++q) out += letter(q);
    return out;
  }

  static PauliString parse(std::string_view text) {
    int phase = 0;
    if (text.size() >= 2) {
      std::string_view head = text.substr(0, 2);
      if (head == "+i") { phase = 1; text.remove_prefix(2); }
      else if (head == "-1") { phase = 2; text.remove_prefix(2); }
      else if (head == "-i") { phase = 3; text.remove_prefix(2); }
      else if (head == "+1") { text.remove_prefix(2); }
    }
    if (text.empty() || text.size() > kMaxQubits)
      throw ParseError("Pauli string length out of range");
    mask_t x = 0, z = 0;
    for (size_t q = 0; q < text.size(); ++q) {
      mask_t b = mask_t{1} << q;
      switch (text[q]) {
        case 'I': break;
        case 'X': x |= b; break;
        case 'Y': x |= b; z |= b; break;
        case 'Z': z |= b; break;
        default:
          throw ParseError(std::string("unknown Pauli letter '") + text[q] + "'");
      }
    }
    return PauliString(static_cast<int>(text.size()), x, z, phase);
  }

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.n_ == b.n_ && a.x_ == b.x_ && a.z_ == b.z_ && a.phase_ == b.phase_;
  }
  friend bool operator!=(const PauliString& a, const PauliString& b) {
    return !(a == b);
  }
  /// Order on (x,z,phase); used for deterministic pool ordering.
  friend bool operator<(const PauliString& a, const PauliString& b) {
    if (a.x_ != b.x_) return a.x_ < b.x_;
    if (a.z_ != b.z_) return a.z_ < b.z_;
    return a.phase_ < b.phase_;
  }

 private:
  int n_ = 1;
  mask_t x_ = 0;
  mask_t z_ = 0;
  std::uint8_t phase_ = 0;
};

inline void check_same_n(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits())
    throw DimensionError("Pauli strings act on different qubit counts");
}

/// Exact operator product a*b.  Masks XOR; the i-power is accumulated with
/// popcounts over the per-qubit product table rather than a per-qubit loop.
inline PauliString multiply(const PauliString& a, const PauliString& b) {
  check_same_n(a, b);
  mask_t x3 = a.x_bits() ^ b.x_bits();
  mask_t z3 = a.z_bits() ^ b.z_bits();
  // sigma(x,z) = i^{x z} X^x Z^z, so sigma_a sigma_b = i^(ya + yb - y3) *
  // (-1)^{za.xb} sigma_3 with y* the Y counts.
  int delta = popcount(a.x_bits() & a.z_bits()) + popcount(b.x_bits() & b.z_bits())
            - popcount(x3 & z3) + 2 * popcount(a.z_bits() & b.x_bits());
  int phase = (a.phase_exp() + b.phase_exp() + delta) & 3;
  return PauliString(a.num_qubits(), x3, z3, phase);
}

/// true iff the binary symplectic form <a.x,b.z> + <a.z,b.x> vanishes;
/// independent of phases.
inline bool commutes(const PauliString& a, const PauliString& b) {
  check_same_n(a, b);
  int form = popcount(a.x_bits() & b.z_bits()) + popcount(a.z_bits() & b.x_bits());
  return (form & 1) == 0;
}

/// [a,b] = 2*mat(c) for anticommuting pairs (phase folded into c); otherwise none.
inline std::optional<PauliString> commutator(const PauliString& a,
                                             const PauliString& b) {
  if (commutes(a, b)) return std::nullopt;
  return multiply(a, b);
}

/// Action on a computational basis state: a|bits> = phase * |bits ^ a.x>.
inline std::pair<mask_t, std::complex<double>> apply_to_basis(
    const PauliString& a, mask_t bits) {
  int e = (a.phase_exp() + a.y_count()) & 3;
  static constexpr std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> phase = ipow[e];
  if (popcount(a.z_bits() & bits) & 1) phase = -phase;
  return {bits ^ a.x_bits(), phase};
}

/// Same action restricted to phases that are exactly real (even-Y strings
/// with phase_exp in {0,2}); used by hot loops that stay in real arithmetic.
inline std::pair<mask_t, int> apply_to_basis_sign(const PauliString& a, mask_t bits) {
  int e = (a.phase_exp() + a.y_count()) & 3;
  int sign = (e == 0) ? 1 : -1;
  if (popcount(a.z_bits() & bits) & 1) sign = -sign;
  return {bits ^ a.x_bits(), sign};
}

}  // namespace niducc
