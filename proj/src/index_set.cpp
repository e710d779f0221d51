#include "brandt/index_set.hpp"

#include <algorithm>

#include "brandt/error.hpp"

namespace brandt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadZero: return "BadZero";
    case ErrorKind::BadOne: return "BadOne";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NoZero: return "NoZero";
    case ErrorKind::NoOne: return "NoOne";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::EmptyCover: return "EmptyCover";
    case ErrorKind::BadTopology: return "BadTopology";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::NotZeroPreserving: return "NotZeroPreserving";
    case ErrorKind::UOutsideSubgroup: return "UOutsideSubgroup";
    case ErrorKind::PhiNotInjective: return "PhiNotInjective";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::BracketOutsideSubgroup: return "BracketOutsideSubgroup";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

IndexSet::IndexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

IndexSet::IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : IndexSet(universe) {
  for (auto m : members) set(m);
}

IndexSet IndexSet::full(std::size_t universe) {
  IndexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.set(i);
  return s;
}

IndexSet IndexSet::from_vector(std::size_t universe, const std::vector<std::size_t>& members) {
  IndexSet s(universe);
  for (auto m : members) {
    if (m >= universe) throw Error(ErrorKind::IndexOutOfRange, "subset member out of range", {m});
    s.set(m);
  }
  return s;
}

std::size_t IndexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

bool IndexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool IndexSet::subset_of(const IndexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool IndexSet::intersects(const IndexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

IndexSet IndexSet::complement() const {
  IndexSet c = full(universe_);
  c -= *this;
  return c;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

IndexSet& IndexSet::operator&=(const IndexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::size_t> IndexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t IndexSet::hash() const noexcept {
  std::size_t h = universe_;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

bool canonical_less(const IndexSet& a, const IndexSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return a.members() < b.members();
}

}  // namespace brandt
