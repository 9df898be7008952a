#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "niducc/fcidump.hpp"
#include "niducc/packed_set.hpp"

namespace niducc {

/// Symmetry sector descriptor for pool generation: per-spin parities and the
/// Abelian spatial irrep structure, plus the reference determinant data used
/// for the starter census.
struct SymmetrySector {
  int n = 0;        // qubits
  int n_elec = 0;
  int ms2 = 0;
  std::vector<int> orbsym;  // 1-based MOLPRO labels per spatial orbital

  static SymmetrySector from_system(const MolecularSystem& sys) {
    return SymmetrySector{sys.n_so, sys.n_elec, sys.ms2, sys.orbsym};
  }

  /// Hydrogen-chain-like model: sigma_g / sigma_u orbitals alternating in
  /// energy order (Ag=1, B1u=5 in the D2h MOLPRO convention).
  static SymmetrySector chain_model(int qubits, int electrons) {
    if (qubits < 2 || qubits % 2 != 0)
      throw ConfigError("chain model needs an even qubit count >= 2");
    SymmetrySector sec;
    sec.n = qubits;
    sec.n_elec = electrons;
    sec.ms2 = electrons % 2;
    for (int i = 0; i < qubits / 2; ++i) sec.orbsym.push_back(i % 2 == 0 ? 1 : 5);
    return sec;
  }

  mask_t alpha_mask() const {
    mask_t m = 0;
    for (int i = 0; i < n; i += 2) m |= mask_t{1} << i;
    return m;
  }
  mask_t beta_mask() const { return alpha_mask() << 1; }

  /// Qubit masks for each bit of the XOR-composable irrep label (label-1).
  std::array<mask_t, 3> irrep_masks() const {
    std::array<mask_t, 3> masks{0, 0, 0};
    for (int i = 0; i < static_cast<int>(orbsym.size()); ++i) {
      int lbl = orbsym[i] - 1;
      for (int b = 0; b < 3; ++b)
        if ((lbl >> b) & 1)
          masks[b] |= (mask_t{3} << (2 * i));  // both spin qubits of orbital i
    }
    return masks;
  }

  int n_alpha() const { return (n_elec + ms2) / 2; }
  int n_beta() const { return (n_elec - ms2) / 2; }

  mask_t hf_mask() const {
    if ((n_elec + ms2) % 2 != 0 || n_alpha() < 0 || n_beta() < 0 ||
        2 * n_alpha() > n || 2 * n_beta() > n)
      throw ConfigError("infeasible electron/spin configuration");
    mask_t bits = 0;
    for (int i = 0; i < n_alpha(); ++i) bits |= mask_t{1} << (2 * i);
    for (int i = 0; i < n_beta(); ++i) bits |= mask_t{1} << (2 * i + 1);
    return bits;
  }

  /// FullGroup membership: commutes with both per-spin parity operators and
  /// maps the trivial irrep to itself.  Depends on the x-mask only.
  bool group_symmetric(mask_t x, const std::array<mask_t, 3>& imasks,
                       mask_t amask, mask_t bmask) const {
    if (popcount(x & amask) & 1) return false;
    if (popcount(x & bmask) & 1) return false;
    for (mask_t m : imasks)
      if (popcount(x & m) & 1) return false;
    return true;
  }

  /// Starter census predicate: double-rank action on the reference
  /// determinant that preserves per-spin electron counts and spatial irrep.
  bool starter_x(mask_t x, mask_t hf, const std::array<mask_t, 3>& imasks,
                 mask_t amask, mask_t bmask) const {
    if (popcount(x) != 4) return false;
    if (popcount(x & amask & hf) != popcount(x & amask & ~hf)) return false;
    if (popcount(x & bmask & hf) != popcount(x & bmask & ~hf)) return false;
    for (mask_t m : imasks)
      if (popcount(x & m) & 1) return false;
    return true;
  }
};

/// The 2n-2 generators {Z_0..Z_{n-3}, Y_0..Y_{n-2}, Z_{n-2}Y_{n-1}} whose
/// product group is the complete pool of size 2^{2(n-1)}.
inline std::vector<PauliString> base_generating_set(int n) {
  if (n < 3) throw DimensionError("base generating set needs n >= 3");
  if (n > 31) throw DimensionError("base generating set supports n <= 31");
  std::vector<PauliString> gens;
  for (int i = 0; i <= n - 3; ++i) gens.push_back(PauliString::single(n, i, 'Z'));
  for (int i = 0; i <= n - 2; ++i) gens.push_back(PauliString::single(n, i, 'Y'));
  mask_t yx = mask_t{1} << (n - 1);
  mask_t zz = (mask_t{1} << (n - 2)) | yx;
  gens.push_back(PauliString(n, yx, zz));  // Z_{n-2} Y_{n-1}
  return gens;
}

/// GF(2) row-reduced basis over packed (x,z) words.  Since phase-free Pauli
/// multiplication is key XOR, group order = 2^rank and span membership is a
/// reduction to zero.
class SymplecticBasis {
 public:
  bool add(std::uint64_t v) {
    v = reduce(v);
    if (v == 0) return false;
    basis_.push_back(v);
    // keep descending pivot order
    for (std::size_t i = basis_.size(); i-- > 1;) {
      if (pivot(basis_[i]) > pivot(basis_[i - 1]))
        std::swap(basis_[i], basis_[i - 1]);
      else
        break;
    }
    return true;
  }

  std::uint64_t reduce(std::uint64_t v) const {
    for (std::uint64_t b : basis_) {
      if (v == 0) break;
      if (pivot(v) == pivot(b)) v ^= b;
    }
    return v;
  }

  bool in_span(std::uint64_t v) const { return reduce(v) == 0; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::uint64_t>& vectors() const { return basis_; }

 private:
  static int pivot(std::uint64_t v) { return 63 - std::countl_zero(v); }
  std::vector<std::uint64_t> basis_;
};

/// Order of the product group (modulo phase, identity included) generated by
/// a set of Pauli strings: 2^rank of their packed words.
inline std::uint64_t product_group_order(std::span<const PauliString> members) {
  if (members.empty()) throw ConfigError("empty generator list");
  const int n = members.front().num_qubits();
  PackedPauliSet packer(n);
  SymplecticBasis basis;
  for (const auto& p : members) {
    if (p.num_qubits() != n) throw DimensionError("mixed qubit counts in pool");
    basis.add(packer.pack(p));
  }
  return std::uint64_t{1} << basis.rank();
}

struct GroupOptions {
  std::uint64_t byte_budget = 0;  // 0 = unlimited
  PackedPauliSet::Mode mode = PackedPauliSet::Mode::hash;
};

namespace detail {

/// Visit every element of the span of `basis` exactly once (Gray-code walk;
/// the zero word, i.e. the identity string, comes first).
template <typename Fn>
void enumerate_span(const SymplecticBasis& basis, Fn&& fn) {
  const auto& vecs = basis.vectors();
  const int r = basis.rank();
  if (r >= 62) throw ResourceError("span too large to enumerate", ~std::uint64_t{0});
  std::uint64_t cur = 0;
  fn(cur);
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= vecs[std::countr_zero(i)];
    fn(cur);
  }
}

}  // namespace detail

/// Closure of the generators under multiplication, modulo phase, identity
/// included.  The span is enumerated through an independent basis, one
/// product per element.
inline PackedPauliSet product_group(std::span<const PauliString> generators,
                                    const GroupOptions& opts = {}) {
  if (generators.empty()) throw ConfigError("empty generator list");
  const int n = generators.front().num_qubits();
  PackedPauliSet group(n, opts.mode, opts.byte_budget);
  SymplecticBasis basis;
  for (const auto& p : generators) {
    if (p.num_qubits() != n) throw DimensionError("mixed qubit counts in generators");
    basis.add(group.pack(p));
  }
  const std::uint64_t order = std::uint64_t{1} << basis.rank();
  group.reserve(order);  // throws ResourceError against the byte budget
  detail::enumerate_span(basis, [&](std::uint64_t key) { group.insert_key(key); });
  group.finalize();
  return group;
}

struct SymmetricSets {
  PackedPauliSet full_group;      // symmetry-preserving subgroup
  PackedPauliSet full_set;        // its odd-Y members (generator candidates)
  std::uint64_t starter_candidates = 0;  // census of double-rank weak+strong starters
};

namespace detail {

template <typename Emit>
void classify_symmetric(const SymmetrySector& sector, std::uint64_t key, mask_t xmask,
                        int n, mask_t hf, const std::array<mask_t, 3>& imasks,
                        mask_t amask, mask_t bmask, Emit&& emit) {
  const mask_t x = key & xmask;
  if (!sector.group_symmetric(x, imasks, amask, bmask)) return;
  const mask_t z = key >> n;
  const bool odd_y = popcount(x & z) & 1;
  const bool starter = odd_y && sector.starter_x(x, hf, imasks, amask, bmask);
  emit(key, odd_y, starter);
}

}  // namespace detail

/// Filter a materialized complete pool by the sector symmetries.
inline SymmetricSets restrict_by_symmetry(const PackedPauliSet& pool,
                                          const SymmetrySector& sector,
                                          std::uint64_t byte_budget = 0) {
  const int n = sector.n;
  if (pool.num_qubits() != n) throw DimensionError("pool/sector qubit mismatch");
  SymmetricSets out{PackedPauliSet(n, PackedPauliSet::Mode::sorted, byte_budget),
                    PackedPauliSet(n, PackedPauliSet::Mode::sorted, byte_budget), 0};
  const mask_t xmask = (mask_t{1} << n) - 1;
  const mask_t hf = sector.hf_mask();
  const auto imasks = sector.irrep_masks();
  const mask_t amask = sector.alpha_mask(), bmask = sector.beta_mask();
  pool.for_each_key([&](std::uint64_t key) {
    detail::classify_symmetric(sector, key, xmask, n, hf, imasks, amask, bmask,
                               [&](std::uint64_t k, bool odd_y, bool starter) {
                                 out.full_group.insert_key(k);
                                 if (odd_y) out.full_set.insert_key(k);
                                 if (starter) ++out.starter_candidates;
                               });
  });
  out.full_group.finalize();
  out.full_set.finalize();
  return out;
}

/// Generate FullGroup/FullSet directly from the base generating set without
/// materializing the complete pool: one counting pass sizes the storage
/// exactly, a second pass fills it.  Peak memory is the output itself.
inline SymmetricSets generate_symmetric_sets(const SymmetrySector& sector,
                                             std::uint64_t byte_budget = 0) {
  const int n = sector.n;
  auto gens = base_generating_set(n);
  PackedPauliSet packer(n);
  SymplecticBasis basis;
  for (const auto& g : gens) basis.add(packer.pack(g));

  const mask_t xmask = (mask_t{1} << n) - 1;
  const mask_t hf = sector.hf_mask();
  const auto imasks = sector.irrep_masks();
  const mask_t amask = sector.alpha_mask(), bmask = sector.beta_mask();

  std::uint64_t count_group = 0, count_set = 0, count_starters = 0;
  detail::enumerate_span(basis, [&](std::uint64_t key) {
    detail::classify_symmetric(sector, key, xmask, n, hf, imasks, amask, bmask,
                               [&](std::uint64_t, bool odd_y, bool starter) {
                                 ++count_group;
                                 if (odd_y) ++count_set;
                                 if (starter) ++count_starters;
                               });
  });

  if (byte_budget != 0 && (count_group + count_set) * 8 > byte_budget)
    throw ResourceError("symmetric set generation exceeds memory budget",
                        count_group + count_set);

  SymmetricSets out{PackedPauliSet(n, PackedPauliSet::Mode::sorted, byte_budget),
                    PackedPauliSet(n, PackedPauliSet::Mode::sorted, byte_budget),
                    count_starters};
  out.full_group.reserve(count_group);
  out.full_set.reserve(count_set);
  detail::enumerate_span(basis, [&](std::uint64_t key) {
    detail::classify_symmetric(sector, key, xmask, n, hf, imasks, amask, bmask,
                               [&](std::uint64_t k, bool odd_y, bool) {
                                 out.full_group.insert_key(k);
                                 if (odd_y) out.full_set.insert_key(k);
                               });
  });
  out.full_group.finalize();
  out.full_set.finalize();
  return out;
}

namespace detail {

inline bool keys_anticommute(std::uint64_t a, std::uint64_t b, int n) {
  const mask_t xmask = (mask_t{1} << n) - 1;
  const mask_t ax = a & xmask, az = a >> n;
  const mask_t bx = b & xmask, bz = b >> n;
  return (popcount(ax & bz) + popcount(az & bx)) & 1;
}

}  // namespace detail

/// Smallest superset closed under commutators: for every anticommuting pair
/// the Pauli part of [a,b] (their product modulo phase) is added, iterated
/// to a fixpoint.
inline PackedPauliSet lie_closure(std::span<const PauliString> seed,
                                  const GroupOptions& opts = {}) {
  if (seed.empty()) throw ConfigError("empty seed set");
  const int n = seed.front().num_qubits();
  PackedPauliSet set(n, PackedPauliSet::Mode::hash, opts.byte_budget);
  std::vector<std::uint64_t> members;
  std::vector<std::size_t> queue;
  for (const auto& p : seed) {
    if (p.num_qubits() != n) throw DimensionError("mixed qubit counts in seed");
    std::uint64_t key = set.pack(p.x_bits(), p.z_bits());
    if (set.insert_key(key)) {
      members.push_back(key);
      queue.push_back(members.size() - 1);
    }
  }
  std::size_t head = 0;
  while (head < queue.size()) {
    const std::size_t ei = queue[head++];
    const std::uint64_t e = members[ei];
    const std::size_t snapshot = members.size();
    for (std::size_t mi = 0; mi < snapshot; ++mi) {
      const std::uint64_t m = members[mi];
      if (!detail::keys_anticommute(e, m, n)) continue;
      const std::uint64_t c = e ^ m;
      if (set.insert_key(c)) {
        members.push_back(c);
        queue.push_back(members.size() - 1);
      }
    }
  }
  return set;
}

/// true iff the anticommutation graph over the members is connected, i.e.
/// the set cannot be split into two mutually commuting parts.
inline bool is_inseparable(std::span<const PauliString> members) {
  if (members.empty()) throw ConfigError("empty set");
  const int n = members.front().num_qubits();
  PackedPauliSet packer(n);
  std::vector<std::uint64_t> keys;
  keys.reserve(members.size());
  for (const auto& p : members) keys.push_back(packer.pack(p));
  std::vector<std::size_t> parent(keys.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j)
      if (detail::keys_anticommute(keys[i], keys[j], n))
        parent[find(i)] = find(j);
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < keys.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

/// Candidate operator pool: starters first, random fills after.
struct PoolCandidate {
  std::vector<PauliString> members;
  std::size_t starter_count = 0;
  std::vector<PauliString> dropped_starters;  // outside the closure target group
  std::uint64_t seed = 0;
  std::uint64_t fills = 0;
  std::uint64_t verification_rounds = 0;
  bool complete = false;
  std::string failure_reason;
};

/// Completeness check: the candidate's product group must reach the full
/// symmetric group, and the candidate must be inseparable.
inline bool is_complete(std::span<const PauliString> members,
                        const PackedPauliSet& full_group) {
  if (members.empty()) return false;
  return product_group_order(members) == full_group.count() &&
         is_inseparable(members);
}

inline bool is_complete(const PoolCandidate& candidate,
                        const PackedPauliSet& full_group) {
  return is_complete(std::span<const PauliString>(candidate.members), full_group);
}

/// Grow starters into a minimal complete pool by drawing random FullSet
/// strings (uniform, without replacement, seeded 64-bit generator) until the
/// candidate reaches at least min_size members, generates the FullGroup and
/// is inseparable.  Starters outside the FullGroup cannot participate in the
/// closure target and are set aside in dropped_starters.
inline PoolCandidate build_mcp(std::span<const PauliString> starters,
                               const PackedPauliSet& full_set,
                               const PackedPauliSet& full_group,
                               std::uint64_t rng_seed,
                               std::uint64_t max_attempts = 10000,
                               std::size_t min_size = 0) {
  const int n = full_group.num_qubits();
  if (full_set.num_qubits() != n) throw DimensionError("set/group qubit mismatch");
  if (min_size == 0) min_size = static_cast<std::size_t>(2 * n - 2);

  PoolCandidate cand;
  cand.seed = rng_seed;
  PackedPauliSet chosen(n);
  for (const auto& p : starters) {
    const PauliString pf = p.phase_free();
    if (!full_group.contains(pf)) {
      cand.dropped_starters.push_back(pf);
      continue;
    }
    if (chosen.insert(pf)) cand.members.push_back(pf);
  }
  cand.starter_count = cand.members.size();

  std::vector<std::uint64_t> keys = full_set.sorted_keys();
  if (keys.empty()) throw ConfigError("empty FullSet");

  // feasibility: the draw universe must be able to reach the FullGroup rank
  // and the minimal pool size at all
  {
    SymplecticBasis reach;
    PackedPauliSet packer(n);
    for (const auto& p : cand.members) reach.add(packer.pack(p));
    std::size_t available = cand.members.size();
    for (std::uint64_t key : keys)
      if (!chosen.contains_key(key)) ++available;
    for (std::uint64_t key : keys) reach.add(key);
    std::uint64_t reachable = std::uint64_t{1} << reach.rank();
    if (reachable != full_group.count() || available < min_size) {
      cand.complete = false;
      cand.failure_reason =
          reachable != full_group.count()
              ? "starters and FullSet span a proper subgroup of the FullGroup"
              : "fewer candidate strings exist than the minimal pool size";
      return cand;
    }
  }

  std::mt19937_64 rng(rng_seed);
  auto draw = [&]() -> std::uint64_t { return rng() % keys.size(); };

  while (true) {
    if (cand.members.size() >= min_size) {
      ++cand.verification_rounds;
      if (is_complete(cand, full_group)) {
        cand.complete = true;
        return cand;
      }
    }
    if (cand.fills >= max_attempts) {
      cand.complete = false;
      cand.failure_reason = "verification attempts exhausted";
      return cand;
    }
    // uniform without replacement; re-draw on collision
    std::uint64_t key;
    std::size_t guard = 0;
    do {
      key = keys[draw()];
      if (++guard > 64 * keys.size())
        throw ResourceError("FullSet exhausted while drawing fills",
                            cand.members.size());
    } while (!chosen.insert_key(key));
    cand.members.push_back(full_set.unpack(key));
    ++cand.fills;
  }
}

}  // namespace niducc
