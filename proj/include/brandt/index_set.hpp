#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace brandt {

/// Fixed-universe bit set over [0, universe). Used for subsets of a carrier.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe);
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static IndexSet full(std::size_t universe);
  static IndexSet from_vector(std::size_t universe, const std::vector<std::size_t>& members);

  std::size_t universe() const noexcept { return universe_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == universe_; }
  bool subset_of(const IndexSet& other) const;
  bool intersects(const IndexSet& other) const;

  IndexSet complement() const;
  IndexSet& operator|=(const IndexSet& other);
  IndexSet& operator&=(const IndexSet& other);
  IndexSet& operator-=(const IndexSet& other);

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }
  friend bool operator==(const IndexSet& a, const IndexSet& b) = default;

  /// Members in increasing order.
  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order: by cardinality, then lexicographically on sorted members.
bool canonical_less(const IndexSet& a, const IndexSet& b);

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

}  // namespace brandt
