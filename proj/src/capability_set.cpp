#include "capclose/capability_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "capclose/error.hpp"

namespace capclose {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

[[noreturn]] void out_of_range(CapabilityId id, std::size_t universe) {
  throw ValidationError("capability id " + std::to_string(id) +
                        " out of range for universe of size " +
                        std::to_string(universe));
}

}  // namespace

CapabilitySet::CapabilitySet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

CapabilitySet::CapabilitySet(std::size_t universe,
                             std::initializer_list<CapabilityId> ids)
    : CapabilitySet(universe) {
  for (CapabilityId id : ids) insert(id);
}

CapabilitySet CapabilitySet::from_ids(std::size_t universe,
                                      std::span<const CapabilityId> ids) {
  CapabilitySet set(universe);
  for (CapabilityId id : ids) set.insert(id);
  return set;
}

CapabilitySet CapabilitySet::full(std::size_t universe) {
  CapabilitySet set(universe);
  std::fill(set.words_.begin(), set.words_.end(), ~std::uint64_t{0});
  if (universe % 64 != 0 && !set.words_.empty()) {
    set.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return set;
}

std::size_t CapabilitySet::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool CapabilitySet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

bool CapabilitySet::insert(CapabilityId id) {
  if (id >= universe_) out_of_range(id, universe_);
  std::uint64_t& word = words_[id >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (id & 63);
  const bool added = (word & mask) == 0;
  word |= mask;
  return added;
}

void CapabilitySet::erase(CapabilityId id) {
  if (id >= universe_) out_of_range(id, universe_);
  words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
}

void CapabilitySet::clear() { std::fill(words_.begin(), words_.end(), 0); }

void CapabilitySet::require_same_universe(const CapabilitySet& other) const {
  if (universe_ != other.universe_) {
    throw ValidationError("capability sets over different universes (" +
                          std::to_string(universe_) + " vs " +
                          std::to_string(other.universe_) + ")");
  }
}

bool CapabilitySet::is_subset_of(const CapabilitySet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool CapabilitySet::intersects(const CapabilitySet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

CapabilitySet& CapabilitySet::operator|=(const CapabilitySet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

CapabilitySet& CapabilitySet::operator&=(const CapabilitySet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

CapabilitySet& CapabilitySet::operator-=(const CapabilitySet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<CapabilityId> CapabilitySet::members() const {
  std::vector<CapabilityId> out;
  out.reserve(size());
  for_each([&](CapabilityId id) { out.push_back(id); });
  return out;
}

std::size_t CapabilitySet::hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool operator<(const CapabilitySet& a, const CapabilitySet& b) {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

}  // namespace capclose
