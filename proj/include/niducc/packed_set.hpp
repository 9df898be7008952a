#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "niducc/pauli.hpp"

namespace niducc {

/// Phase-free set of Pauli strings packed as single 64-bit words
/// (x in the low n bits, z in the next n).  Two storage modes:
///   - hash: open addressing with linear probing, O(1) insert/lookup;
///   - sorted: a sorted array at exactly 8 bytes per element, lookups by
///     binary search (slower, minimal memory).
/// Supports n <= 31 so that the all-ones word stays free as the empty slot.
class PackedPauliSet {
 public:
  enum class Mode { hash, sorted };
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  explicit PackedPauliSet(int n, Mode mode = Mode::hash,
                          std::uint64_t byte_budget = 0)
      : n_(n), mode_(mode), budget_(byte_budget) {
    if (n < 1 || n > 31)
      throw DimensionError("packed set supports 1..31 qubits");
    if (mode_ == Mode::hash) rehash(1024);
  }

  int num_qubits() const { return n_; }
  std::uint64_t count() const { return count_; }
  Mode mode() const { return mode_; }

  std::uint64_t pack(mask_t x, mask_t z) const { return x | (z << n_); }
  std::uint64_t pack(const PauliString& p) const {
    return pack(p.x_bits(), p.z_bits());
  }
  mask_t unpack_x(std::uint64_t key) const { return key & ((mask_t{1} << n_) - 1); }
  mask_t unpack_z(std::uint64_t key) const { return key >> n_; }
  PauliString unpack(std::uint64_t key) const {
    return PauliString(n_, unpack_x(key), unpack_z(key), 0);
  }

  /// Pre-size for an expected number of elements; throws ResourceError if
  /// the projected allocation exceeds the byte budget.
  void reserve(std::uint64_t n_elements) {
    if (mode_ == Mode::sorted) {
      check_budget(n_elements * 8, n_elements);
      sorted_.reserve(n_elements);
    } else {
      std::uint64_t cap = 1024;
      while (cap * kMaxLoadNum < n_elements * kMaxLoadDen) cap *= 2;
      if (cap > slots_.size()) {
        check_budget(cap * 8, n_elements);
        rehash(cap);
      }
    }
  }

  bool insert(mask_t x, mask_t z) { return insert_key(pack(x, z)); }
  bool insert(const PauliString& p) { return insert_key(pack(p)); }

  bool insert_key(std::uint64_t key) {
    if (mode_ == Mode::sorted) {
      // append-only; duplicates resolved by finalize()
      check_budget((sorted_.size() + 1) * 8, count_ + 1);
      sorted_.push_back(key);
      ++count_;
      dirty_ = true;
      return true;
    }
    if ((count_ + 1) * kMaxLoadDen > slots_.size() * kMaxLoadNum) {
      check_budget(slots_.size() * 2 * 8, count_ + 1);
      rehash(slots_.size() * 2);
    }
    std::uint64_t i = probe_start(key);
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return false;
      i = (i + 1) & (slots_.size() - 1);
    }
    slots_[i] = key;
    ++count_;
    return true;
  }

  bool contains(mask_t x, mask_t z) const { return contains_key(pack(x, z)); }
  bool contains(const PauliString& p) const { return contains_key(pack(p)); }

  bool contains_key(std::uint64_t key) const {
    if (mode_ == Mode::sorted) {
      return std::binary_search(sorted_.begin(), sorted_.end(), key);
    }
    std::uint64_t i = probe_start(key);
    while (slots_[i] != kEmpty) {
      if (slots_[i] == key) return true;
      i = (i + 1) & (slots_.size() - 1);
    }
    return false;
  }

  /// Sorted-mode bookkeeping: sort, dedupe, shrink.  No-op in hash mode.
  void finalize() {
    if (mode_ != Mode::sorted || !dirty_) return;
    std::sort(sorted_.begin(), sorted_.end());
    sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
    sorted_.shrink_to_fit();
    count_ = sorted_.size();
    dirty_ = false;
  }

  /// Keys in ascending order (canonical across storage modes).
  std::vector<std::uint64_t> sorted_keys() const {
    std::vector<std::uint64_t> keys;
    keys.reserve(count_);
    if (mode_ == Mode::sorted) {
      keys = sorted_;
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    } else {
      for (std::uint64_t s : slots_)
        if (s != kEmpty) keys.push_back(s);
      std::sort(keys.begin(), keys.end());
    }
    return keys;
  }

  template <typename Fn>
  void for_each_key(Fn&& fn) const {
    if (mode_ == Mode::sorted) {
      for (std::uint64_t k : sorted_) fn(k);
    } else {
      for (std::uint64_t s : slots_)
        if (s != kEmpty) fn(s);
    }
  }

  std::vector<PauliString> to_strings() const {
    std::vector<PauliString> out;
    out.reserve(count_);
    for (std::uint64_t k : sorted_keys()) out.push_back(unpack(k));
    return out;
  }

  std::uint64_t memory_bytes() const {
    return mode_ == Mode::sorted ? sorted_.capacity() * 8 : slots_.size() * 8;
  }

  void set_budget(std::uint64_t bytes) { budget_ = bytes; }

 private:
  static constexpr std::uint64_t kMaxLoadNum = 5;  // max load factor 5/8
  static constexpr std::uint64_t kMaxLoadDen = 8;

  std::uint64_t probe_start(std::uint64_t key) const {
    std::uint64_t h = key * 0x9e3779b97f4a7c15ull;
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return h & (slots_.size() - 1);
  }

  void rehash(std::uint64_t new_cap) {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(new_cap, kEmpty);
    for (std::uint64_t key : old) {
      if (key == kEmpty) continue;
      std::uint64_t i = probe_start(key);
      while (slots_[i] != kEmpty) i = (i + 1) & (new_cap - 1);
      slots_[i] = key;
    }
  }

  void check_budget(std::uint64_t projected_bytes, std::uint64_t cardinality) const {
    if (budget_ != 0 && projected_bytes > budget_)
      throw ResourceError("Pauli set memory budget exceeded", cardinality);
  }

  int n_;
  Mode mode_;
  std::uint64_t budget_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> slots_;   // hash mode
  std::vector<std::uint64_t> sorted_;  // sorted mode
  bool dirty_ = false;
};

}  // namespace niducc
