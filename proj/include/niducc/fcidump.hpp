#pragma once

#include <cctype>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "niducc/errors.hpp"
#include "niducc/pauli.hpp"

namespace niducc {

/// Electronic-structure problem in a spatial-orbital basis.  Spin-orbitals
/// are interleaved: spatial orbital i maps to qubit 2i (alpha) and 2i+1
/// (beta), so qubit count n_so = 2*n_spatial.
struct MolecularSystem {
  int n_spatial = 0;
  int n_so = 0;
  int n_elec = 0;
  int ms2 = 0;
  int isym = 1;
  std::vector<int> orbsym;    // MOLPRO-convention irrep labels, 1-based
  double core_energy = 0.0;
  std::vector<double> h;      // n_spatial^2 one-electron integrals
  std::vector<double> v;      // n_spatial^4 two-electron (ij|kl), chemists'

  double h1(int i, int j) const { return h[i * n_spatial + j]; }
  double eri(int i, int j, int k, int l) const {
    return v[((i * n_spatial + j) * n_spatial + k) * n_spatial + l];
  }

  static int so_index(int spatial, int spin) { return 2 * spatial + spin; }
  static int so_spatial(int so) { return so / 2; }
  static int so_spin(int so) { return so % 2; }

  int n_alpha() const {
    if ((n_elec + ms2) % 2 != 0 || n_elec + ms2 < 0)
      throw ConfigError("electron count and MS2 give non-integer n_alpha");
    return (n_elec + ms2) / 2;
  }
  int n_beta() const {
    if ((n_elec - ms2) % 2 != 0 || n_elec - ms2 < 0)
      throw ConfigError("electron count and MS2 give non-integer n_beta");
    return (n_elec - ms2) / 2;
  }

  mask_t alpha_mask() const {
    mask_t m = 0;
    for (int i = 0; i < n_spatial; ++i) m |= mask_t{1} << (2 * i);
    return m;
  }
  mask_t beta_mask() const { return alpha_mask() << 1; }

  /// 0-based irrep of a spatial orbital in XOR-composable form (label-1).
  int irrep_of(int spatial) const { return orbsym[spatial] - 1; }
};

namespace detail {

inline bool parse_int_field(const std::string& header, const std::string& key,
                            long& out) {
  auto pos = header.find(key);
  while (pos != std::string::npos) {
    // avoid matching e.g. the NORB inside IUHF-like keys
    if (pos == 0 || !std::isalpha(static_cast<unsigned char>(header[pos - 1]))) {
      auto eq = header.find('=', pos);
      if (eq == std::string::npos) return false;
      try {
        out = std::stol(header.substr(eq + 1));
      } catch (const std::exception&) {
        return false;
      }
      return true;
    }
    pos = header.find(key, pos + 1);
  }
  return false;
}

}  // namespace detail

/// Parse an FCIDUMP stream: namelist header (NORB, NELEC, MS2, ORBSYM, ISYM)
/// followed by "value i j k l" records with 1-based indices.  Core energy is
/// the i=j=k=l=0 record; k=l=0 records populate h; the rest populate v with
/// the 8-fold real-orbital permutational symmetry expanded.
inline MolecularSystem parse_fcidump(std::istream& in) {
  MolecularSystem sys;
  std::string header;
  std::string line;
  int line_no = 0;
  bool header_done = false;
  while (std::getline(in, line)) {
    ++line_no;
    header += ' ' + line;
    auto end = header.find("&END");
    if (end == std::string::npos) end = header.find("/");
    if (end != std::string::npos) {
      header = header.substr(0, end);
      header_done = true;
      break;
    }
  }
  if (!header_done) throw ParseError("FCIDUMP header: missing &END terminator");

  long norb = 0, nelec = 0, ms2 = 0, isym = 1;
  if (!detail::parse_int_field(header, "NORB", norb))
    throw ParseError("FCIDUMP header: missing or malformed NORB");
  if (!detail::parse_int_field(header, "NELEC", nelec))
    throw ParseError("FCIDUMP header: missing or malformed NELEC");
  if (!detail::parse_int_field(header, "MS2", ms2))
    throw ParseError("FCIDUMP header: missing or malformed MS2");
  if (!detail::parse_int_field(header, "ISYM", isym))
    throw ParseError("FCIDUMP header: missing or malformed ISYM");

  if (norb < 1 || norb > PauliString::kMaxQubits / 2)
    throw ParseError("FCIDUMP header: NORB out of supported range");
  if (nelec < 1 || nelec > 2 * norb)
    throw ParseError("FCIDUMP header: NELEC must satisfy 0 < NELEC <= 2*NORB");

  sys.n_spatial = static_cast<int>(norb);
  sys.n_so = 2 * sys.n_spatial;
  sys.n_elec = static_cast<int>(nelec);
  sys.ms2 = static_cast<int>(ms2);
  sys.isym = static_cast<int>(isym);

  {
    auto pos = header.find("ORBSYM");
    if (pos == std::string::npos)
      throw ParseError("FCIDUMP header: missing ORBSYM");
    auto eq = header.find('=', pos);
    if (eq == std::string::npos)
      throw ParseError("FCIDUMP header: malformed ORBSYM");
    std::string rest = header.substr(eq + 1);
    std::istringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',') &&
           static_cast<int>(sys.orbsym.size()) < sys.n_spatial) {
      try {
        size_t used = 0;
        int lbl = std::stoi(tok, &used);
        sys.orbsym.push_back(lbl);
      } catch (const std::exception&) {
        break;
      }
    }
    if (static_cast<int>(sys.orbsym.size()) != sys.n_spatial)
      throw ParseError("FCIDUMP header: ORBSYM needs one label per orbital");
  }

  const int n = sys.n_spatial;
  sys.h.assign(static_cast<size_t>(n) * n, 0.0);
  sys.v.assign(static_cast<size_t>(n) * n * n * n, 0.0);

  auto set_v = [&](int i, int j, int k, int l, double val) {
    auto at = [&](int a, int b, int c, int d) -> double& {
      return sys.v[((static_cast<size_t>(a) * n + b) * n + c) * n + d];
    };
    at(i, j, k, l) = at(j, i, k, l) = at(i, j, l, k) = at(j, i, l, k) = val;
    at(k, l, i, j) = at(l, k, i, j) = at(k, l, j, i) = at(l, k, j, i) = val;
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    double val;
    long i, j, k, l;
    if (!(ss >> val)) {
      // allow blank trailing lines
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      throw ParseError("FCIDUMP line " + std::to_string(line_no) +
                       ": non-numeric record");
    }
    if (!(ss >> i >> j >> k >> l))
      throw ParseError("FCIDUMP line " + std::to_string(line_no) +
                       ": expected four indices");
    if (i < 0 || j < 0 || k < 0 || l < 0 || i > norb || j > norb || k > norb ||
        l > norb)
      throw ParseError("FCIDUMP line " + std::to_string(line_no) +
                       ": orbital index out of range");
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      sys.core_energy = val;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0)
        throw ParseError("FCIDUMP line " + std::to_string(line_no) +
                         ": malformed one-electron record");
      sys.h[(i - 1) * n + (j - 1)] = val;
      sys.h[(j - 1) * n + (i - 1)] = val;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      set_v(static_cast<int>(i - 1), static_cast<int>(j - 1),
            static_cast<int>(k - 1), static_cast<int>(l - 1), val);
    } else {
      throw ParseError("FCIDUMP line " + std::to_string(line_no) +
                       ": unrecognized index pattern");
    }
  }
  return sys;
}

inline MolecularSystem parse_fcidump(const std::string& text) {
  std::istringstream ss(text);
  return parse_fcidump(ss);
}

/// Occupation bitstring of the Hartree-Fock determinant: the n_alpha lowest
/// alpha spin-orbitals and n_beta lowest beta spin-orbitals.
inline mask_t hartree_fock_state(const MolecularSystem& sys) {
  int na = sys.n_alpha(), nb = sys.n_beta();
  if (na > sys.n_spatial || nb > sys.n_spatial)
    throw ConfigError("electron count exceeds orbital capacity");
  mask_t bits = 0;
  for (int i = 0; i < na; ++i) bits |= mask_t{1} << (2 * i);
  for (int i = 0; i < nb; ++i) bits |= mask_t{1} << (2 * i + 1);
  return bits;
}

}  // namespace niducc
