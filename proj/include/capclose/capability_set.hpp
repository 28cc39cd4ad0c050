#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace capclose {

using CapabilityId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Dense bitset over a fixed universe {0, ..., universe-1}.
///
/// Binary operations require both operands to share the same universe and
/// throw ValidationError otherwise. Equality is set equality.
class CapabilitySet {
 public:
  CapabilitySet() = default;
  explicit CapabilitySet(std::size_t universe);
  CapabilitySet(std::size_t universe, std::initializer_list<CapabilityId> ids);

  static CapabilitySet from_ids(std::size_t universe,
                                std::span<const CapabilityId> ids);
  static CapabilitySet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(CapabilityId id) const {
    return id < universe_ && ((words_[id >> 6] >> (id & 63)) & 1u);
  }
  // Returns true when the id was not already present.
  bool insert(CapabilityId id);
  void erase(CapabilityId id);
  void clear();

  bool is_subset_of(const CapabilitySet& other) const;
  bool intersects(const CapabilitySet& other) const;

  CapabilitySet& operator|=(const CapabilitySet& other);
  CapabilitySet& operator&=(const CapabilitySet& other);
  CapabilitySet& operator-=(const CapabilitySet& other);

  friend CapabilitySet operator|(CapabilitySet a, const CapabilitySet& b) {
    return a |= b;
  }
  friend CapabilitySet operator&(CapabilitySet a, const CapabilitySet& b) {
    return a &= b;
  }
  friend CapabilitySet operator-(CapabilitySet a, const CapabilitySet& b) {
    return a -= b;
  }

  // Ascending member ids.
  std::vector<CapabilityId> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<CapabilityId>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

  friend bool operator==(const CapabilitySet&, const CapabilitySet&) = default;

  // Canonical order: by cardinality, then lexicographic on ascending members.
  friend bool operator<(const CapabilitySet& a, const CapabilitySet& b);

 private:
  void require_same_universe(const CapabilitySet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CapabilitySetHash {
  std::size_t operator()(const CapabilitySet& s) const { return s.hash(); }
};

}  // namespace capclose
