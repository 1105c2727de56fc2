#pragma once

#include <cstdint>
#include <vector>

#include "growthlab/error.hpp"
#include "growthlab/numeric.hpp"

namespace growthlab::detail {

/// Open-addressed set of packed matrix keys. The all-ones word is the empty
/// marker; it never occurs as a packed group element (it would need either an
/// out-of-range coefficient or the singular all-ones GF(2) matrix).
class PackedKeySet {
 public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  explicit PackedKeySet(std::size_t expected = 16, std::uint64_t memory_cap = UINT64_MAX)
      : memory_cap_(memory_cap) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    allocate(cap);
  }

  bool insert(std::uint64_t key) {
    if ((size_ + 1) * 2 > slots_.size()) grow();
    std::size_t i = mix64(key) & mask_;
    while (true) {
      const std::uint64_t s = slots_[i];
      if (s == key) return false;
      if (s == kEmpty) {
        slots_[i] = key;
        ++size_;
        return true;
      }
      i = (i + 1) & mask_;
    }
  }

  bool contains(std::uint64_t key) const {
    std::size_t i = mix64(key) & mask_;
    while (true) {
      const std::uint64_t s = slots_[i];
      if (s == key) return true;
      if (s == kEmpty) return false;
      i = (i + 1) & mask_;
    }
  }

  std::size_t size() const { return size_; }
  std::size_t bytes() const { return slots_.size() * sizeof(std::uint64_t); }

  std::vector<std::uint64_t> keys() const {
    std::vector<std::uint64_t> out;
    out.reserve(size_);
    for (auto s : slots_) {
      if (s != kEmpty) out.push_back(s);
    }
    return out;
  }

 private:
  void allocate(std::size_t cap) {
    if (cap * sizeof(std::uint64_t) > memory_cap_) {
      throw Error(Errc::MemoryCapExceeded,
                  "key table of " + std::to_string(cap * sizeof(std::uint64_t)) +
                      " bytes exceeds the memory cap");
    }
    slots_.assign(cap, kEmpty);
    mask_ = cap - 1;
  }

  void grow() {
    std::vector<std::uint64_t> old = std::move(slots_);
    allocate(old.size() * 2);
    size_ = 0;
    for (auto s : old) {
      if (s != kEmpty) insert(s);
    }
  }

  std::vector<std::uint64_t> slots_;
  std::size_t size_ = 0;
  std::size_t mask_ = 0;
  std::uint64_t memory_cap_;
};

}  // namespace growthlab::detail
