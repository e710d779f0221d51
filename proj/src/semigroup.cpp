#include "brandt/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

#include "brandt/error.hpp"

namespace brandt {

namespace {

constexpr Index kUnset = std::numeric_limits<Index>::max();

}  // namespace

FiniteSemigroup FiniteSemigroup::validate(std::vector<std::string> elements,
                                          const std::vector<std::vector<Index>>& table,
                                          std::optional<Index> zero,
                                          std::optional<Index> one) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "a semigroup needs at least one element");
  if (table.size() != n) throw Error(ErrorKind::ShapeMismatch, "table must have one row per element");
  {
    std::set<std::string> seen;
    for (Index i = 0; i < n; ++i)
      if (!seen.insert(elements[i]).second)
        throw Error(ErrorKind::DuplicateName, "duplicate element name '" + elements[i] + "'", {i});
  }

  FiniteSemigroup s;
  s.names_ = std::move(elements);
  s.table_.resize(n * n);
  for (Index i = 0; i < n; ++i) {
    if (table[i].size() != n) throw Error(ErrorKind::ShapeMismatch, "table row has wrong length", {i});
    for (Index j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw Error(ErrorKind::IndexOutOfRange, "table entry out of range", {i, j});
      s.table_[i * n + j] = table[i][j];
    }
  }

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Index ij = s.mul(i, j);
      for (Index k = 0; k < n; ++k)
        if (s.mul(ij, k) != s.mul(i, s.mul(j, k)))
          throw Error(ErrorKind::NonAssociative, "(xy)z != x(yz)", {i, j, k});
    }

  if (zero) {
    if (*zero >= n) throw Error(ErrorKind::IndexOutOfRange, "zero index out of range", {*zero});
    for (Index i = 0; i < n; ++i)
      if (s.mul(*zero, i) != *zero || s.mul(i, *zero) != *zero)
        throw Error(ErrorKind::BadZero, "declared zero does not annihilate", {*zero, i});
  }
  if (one) {
    if (*one >= n) throw Error(ErrorKind::IndexOutOfRange, "identity index out of range", {*one});
    for (Index i = 0; i < n; ++i)
      if (s.mul(*one, i) != i || s.mul(i, *one) != i)
        throw Error(ErrorKind::BadOne, "declared identity does not act trivially", {*one, i});
  }
  s.zero_ = zero;
  s.one_ = one;
  return s;
}

std::optional<Index> FiniteSemigroup::index_of(std::string_view name) const {
  for (Index i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Index FiniteSemigroup::require_zero() const {
  if (!zero_) throw Error(ErrorKind::NoZero, "semigroup has no declared zero");
  return *zero_;
}

Index FiniteSemigroup::require_one() const {
  if (!one_) throw Error(ErrorKind::NoOne, "semigroup has no declared identity");
  return *one_;
}

std::vector<std::vector<Index>> FiniteSemigroup::rows() const {
  const std::size_t n = size();
  std::vector<std::vector<Index>> out(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out[i][j] = mul(i, j);
  return out;
}

bool GroupView::contains(Index x) const { return std::binary_search(members.begin(), members.end(), x); }

Index GroupView::inverse(Index x) const {
  const auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) throw Error(ErrorKind::UOutsideSubgroup, "element not in subgroup", {x});
  return inverses[static_cast<std::size_t>(it - members.begin())];
}

// --- queries -----------------------------------------------------------------

bool is_idempotent(const FiniteSemigroup& s, Index x) { return s.mul(x, x) == x; }

std::vector<Index> idempotents(const FiniteSemigroup& s) {
  std::vector<Index> out;
  for (Index x = 0; x < s.size(); ++x)
    if (is_idempotent(s, x)) out.push_back(x);
  return out;
}

GroupView maximal_subgroup(const FiniteSemigroup& s, Index e) {
  if (e >= s.size() || !is_idempotent(s, e))
    throw Error(ErrorKind::NotIdempotent, "maximal subgroups are indexed by idempotents", {e});
  // Elements of the local monoid eSe.
  std::vector<Index> local;
  for (Index x = 0; x < s.size(); ++x)
    if (s.mul(x, e) == x && s.mul(e, x) == x) local.push_back(x);

  GroupView g;
  g.unit = e;
  for (Index x : local)
    for (Index y : local)
      if (s.mul(x, y) == e && s.mul(y, x) == e) {
        g.members.push_back(x);
        g.inverses.push_back(y);
        break;
      }
  return g;
}

InverseCheck is_inverse(const FiniteSemigroup& s) {
  InverseCheck out;
  out.inversion.assign(s.size(), 0);
  for (Index x = 0; x < s.size(); ++x) {
    std::size_t found = 0;
    for (Index y = 0; y < s.size(); ++y)
      if (s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y) {
        out.inversion[x] = y;
        ++found;
      }
    if (found != 1) {
      out.witness = x;
      out.inversion.clear();
      return out;
    }
  }
  out.inverse = true;
  return out;
}

CentralityCheck idempotents_central(const FiniteSemigroup& s) {
  CentralityCheck out;
  for (Index e : idempotents(s))
    for (Index x = 0; x < s.size(); ++x)
      if (s.mul(e, x) != s.mul(x, e)) {
        out.central = false;
        out.witness = {e, x};
        return out;
      }
  return out;
}

bool is_commutative(const FiniteSemigroup& s) {
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = x + 1; y < s.size(); ++y)
      if (s.mul(x, y) != s.mul(y, x)) return false;
  return true;
}

std::optional<Index> find_zero(const FiniteSemigroup& s) {
  for (Index z = 0; z < s.size(); ++z) {
    bool ok = true;
    for (Index x = 0; x < s.size() && ok; ++x) ok = s.mul(z, x) == z && s.mul(x, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::optional<Index> find_identity(const FiniteSemigroup& s) {
  for (Index u = 0; u < s.size(); ++u) {
    bool ok = true;
    for (Index x = 0; x < s.size() && ok; ++x) ok = s.mul(u, x) == x && s.mul(x, u) == x;
    if (ok) return u;
  }
  return std::nullopt;
}

std::optional<std::pair<Index, Index>> ideal_violation(const FiniteSemigroup& s, const IndexSet& ideal) {
  std::optional<std::pair<Index, Index>> out;
  ideal.for_each([&](Index x) {
    if (out) return;
    for (Index y = 0; y < s.size(); ++y)
      if (!ideal.test(s.mul(x, y)) || !ideal.test(s.mul(y, x))) {
        out = std::pair{x, y};
        return;
      }
  });
  return out;
}

bool is_subsemigroup(const FiniteSemigroup& s, const IndexSet& members) {
  bool ok = !members.empty();
  members.for_each([&](Index x) {
    members.for_each([&](Index y) { ok = ok && members.test(s.mul(x, y)); });
  });
  return ok;
}

IndexSet closure(const FiniteSemigroup& s, const IndexSet& seed) {
  IndexSet out = seed;
  std::vector<Index> frontier = seed.members();
  std::vector<Index> all = frontier;
  while (!frontier.empty()) {
    std::vector<Index> next;
    for (Index a : frontier)
      for (std::size_t k = 0; k < all.size(); ++k) {
        const Index b = all[k];
        for (Index p : {s.mul(a, b), s.mul(b, a)})
          if (!out.test(p)) {
            out.set(p);
            next.push_back(p);
            all.push_back(p);
          }
      }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Index> generators(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  IndexSet products(n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) products.set(s.mul(x, y));

  std::vector<Index> gens;
  IndexSet seed(n);
  for (Index x = 0; x < n; ++x)
    if (!products.test(x)) {
      gens.push_back(x);
      seed.set(x);
    }
  IndexSet generated = seed.empty() ? IndexSet(n) : closure(s, seed);
  // Greedy: add the element whose closure grows the generated part the most.
  while (!generated.is_full()) {
    Index best = n;
    IndexSet best_closure;
    for (Index x = 0; x < n; ++x) {
      if (generated.test(x)) continue;
      IndexSet trial = seed;
      trial.set(x);
      IndexSet c = closure(s, trial);
      if (best == n || c.count() > best_closure.count()) {
        best = x;
        best_closure = std::move(c);
      }
    }
    gens.push_back(best);
    seed.set(best);
    generated = std::move(best_closure);
  }
  // Drop generators made redundant by later choices.
  for (std::size_t k = gens.size(); k-- > 0;) {
    IndexSet rest = seed;
    rest.reset(gens[k]);
    if (!rest.empty() && closure(s, rest).is_full()) {
      seed = rest;
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return gens;
}

std::pair<std::size_t, std::size_t> index_period(const FiniteSemigroup& s, Index x) {
  // Powers x, x^2, ... until the first repeat.
  std::vector<Index> first_seen(s.size(), kUnset);
  Index p = x;
  for (std::size_t k = 1;; ++k) {
    if (first_seen[p] != kUnset) return {first_seen[p], k - first_seen[p]};
    first_seen[p] = k;
    p = s.mul(p, x);
  }
}

std::pair<FiniteSemigroup, std::vector<Index>> restrict_to(const FiniteSemigroup& s,
                                                           const IndexSet& members,
                                                           std::optional<Index> zero,
                                                           std::optional<Index> one) {
  if (!is_subsemigroup(s, members)) throw Error(ErrorKind::ShapeMismatch, "subset is not closed under the product");
  const std::vector<Index> parent = members.members();
  std::vector<Index> local(s.size(), kUnset);
  for (Index i = 0; i < parent.size(); ++i) local[parent[i]] = i;

  std::vector<std::string> names;
  std::vector<std::vector<Index>> table(parent.size(), std::vector<Index>(parent.size()));
  for (Index i = 0; i < parent.size(); ++i) {
    names.push_back(s.name(parent[i]));
    for (Index j = 0; j < parent.size(); ++j) table[i][j] = local[s.mul(parent[i], parent[j])];
  }
  auto carry = [&](std::optional<Index> x) -> std::optional<Index> {
    if (x && members.test(*x)) return local[*x];
    return std::nullopt;
  };
  return {FiniteSemigroup::validate(std::move(names), table, carry(zero), carry(one)), parent};
}

// --- constructions -----------------------------------------------------------

FiniteSemigroup matrix_units(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "matrix units need n >= 1");
  std::vector<std::string> names{"0"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  const std::size_t size = n * n + 1;
  auto idx = [n](std::size_t i, std::size_t j) { return 1 + i * n + j; };
  std::vector<std::vector<Index>> table(size, std::vector<Index>(size, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) table[idx(i, j)][idx(j, l)] = idx(i, l);
  std::optional<Index> one;
  if (n == 1) one = 1;
  return FiniteSemigroup::validate(std::move(names), table, Index{0}, one);
}

FiniteSemigroup chain(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ShapeMismatch, "a chain needs n >= 1");
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("m" + std::to_string(i));
  if (n > 1) names.push_back("1");
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) table[i][j] = std::min(i, j);
  return FiniteSemigroup::validate(std::move(names), table, Index{0}, Index{n - 1});
}

FiniteSemigroup cyclic_group(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::ShapeMismatch, "a cyclic group needs order >= 1");
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < k; ++i) names.push_back(i == 1 ? "a" : "a^" + std::to_string(i));
  std::vector<std::vector<Index>> table(k, std::vector<Index>(k));
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) table[i][j] = (i + j) % k;
  return FiniteSemigroup::validate(std::move(names), table, std::nullopt, Index{0});
}

FiniteSemigroup adjoin_identity(const FiniteSemigroup& s) {
  std::string one_name = "1";
  while (s.index_of(one_name)) one_name += "'";
  const std::size_t n = s.size() + 1;
  std::vector<std::string> names = s.elements();
  names.push_back(one_name);
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      table[i][j] = i == n - 1 ? j : (j == n - 1 ? i : s.mul(i, j));
  return FiniteSemigroup::validate(std::move(names), table, s.zero(), Index{n - 1});
}

FiniteSemigroup left_zero_band(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::ShapeMismatch, "a band needs k >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("l" + std::to_string(i + 1));
  std::vector<std::vector<Index>> table(k, std::vector<Index>(k));
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) table[i][j] = i;
  return FiniteSemigroup::validate(std::move(names), table);
}

FiniteSemigroup cyclic_group_with_zero(std::size_t k) { return adjoin_zero(cyclic_group(k)); }

FiniteSemigroup adjoin_zero(const FiniteSemigroup& s) {
  std::string zero_name = "0";
  while (s.index_of(zero_name)) zero_name += "'";
  const std::size_t n = s.size() + 1;
  std::vector<std::string> names{zero_name};
  names.insert(names.end(), s.elements().begin(), s.elements().end());
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n, 0));
  for (Index i = 1; i < n; ++i)
    for (Index j = 1; j < n; ++j) table[i][j] = s.mul(i - 1, j - 1) + 1;
  std::optional<Index> one;
  if (s.one()) one = *s.one() + 1;
  return FiniteSemigroup::validate(std::move(names), table, Index{0}, one);
}

FiniteSemigroup trivial_with_zero() { return chain(2); }

// --- embedding search ----------------------------------------------------------

namespace {

class MapSearch {
 public:
  MapSearch(const FiniteSemigroup& src, const FiniteSemigroup& dst, bool injective)
      : src_(src), dst_(dst), injective_(injective), image_(src.size(), kUnset), used_(dst.size(), 0) {}

  // Assigns x -> t and propagates every product between assigned elements.
  bool assign(Index x, Index t) {
    std::vector<std::pair<Index, Index>> queue{{x, t}};
    while (!queue.empty()) {
      auto [a, ta] = queue.back();
      queue.pop_back();
      if (image_[a] != kUnset) {
        if (image_[a] != ta) return false;
        continue;
      }
      if (injective_ && used_[ta]) return false;
      image_[a] = ta;
      used_[ta] = 1;
      trail_.push_back(a);
      for (Index b : trail_) {
        const Index ab = src_.mul(a, b);
        const Index ba = src_.mul(b, a);
        const Index tab = dst_.mul(ta, image_[b]);
        const Index tba = dst_.mul(image_[b], ta);
        if (image_[ab] != kUnset) {
          if (image_[ab] != tab) return false;
        } else {
          queue.emplace_back(ab, tab);
        }
        if (image_[ba] != kUnset) {
          if (image_[ba] != tba) return false;
        } else {
          queue.emplace_back(ba, tba);
        }
      }
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Index a = trail_.back();
      trail_.pop_back();
      used_[image_[a]] = 0;
      image_[a] = kUnset;
    }
  }

  Index image(Index x) const { return image_[x]; }
  const std::vector<Index>& image() const { return image_; }

 private:
  const FiniteSemigroup& src_;
  const FiniteSemigroup& dst_;
  bool injective_;
  std::vector<Index> image_;
  std::vector<char> used_;
  std::vector<Index> trail_;
};

}  // namespace

void search_homomorphisms(const FiniteSemigroup& src,
                          const FiniteSemigroup& dst,
                          const MapSearchOptions& options,
                          const std::function<bool(const std::vector<Index>&)>& visit) {
  if (options.injective && src.size() > dst.size()) return;
  MapSearch search(src, dst, options.injective);
  for (const auto& [a, t] : options.anchors) {
    if (a >= src.size() || t >= dst.size()) throw Error(ErrorKind::IndexOutOfRange, "anchor out of range", {a, t});
    if (!search.assign(a, t)) return;
  }

  const std::vector<Index> gens = generators(src);
  std::vector<std::vector<Index>> candidates(gens.size());
  double space = 1.0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (Index t = 0; t < dst.size(); ++t)
      if (!options.admissible || options.admissible(gens[g], t)) candidates[g].push_back(t);
    if (search.image(gens[g]) == kUnset) space *= static_cast<double>(std::max<std::size_t>(1, candidates[g].size()));
  }
  if (space > options.max_search_space)
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "generator-image search space of " + std::to_string(static_cast<long double>(space)) + " exceeds limit");

  bool stop = false;
  std::function<void(std::size_t)> recurse = [&](std::size_t g) {
    if (stop) return;
    if (g == gens.size()) {
      if (!visit(search.image())) stop = true;
      return;
    }
    const Index x = gens[g];
    if (search.image(x) != kUnset) {
      recurse(g + 1);
      return;
    }
    for (Index t : candidates[g]) {
      const auto m = search.mark();
      if (search.assign(x, t)) recurse(g + 1);
      search.undo(m);
      if (stop) return;
    }
  };
  recurse(0);
}

bool verify_map(const FiniteSemigroup& src, const FiniteSemigroup& dst, const std::vector<Index>& map, bool injective) {
  if (map.size() != src.size()) return false;
  for (Index t : map)
    if (t >= dst.size()) return false;
  if (injective) {
    std::unordered_set<Index> seen(map.begin(), map.end());
    if (seen.size() != map.size()) return false;
  }
  for (Index x = 0; x < src.size(); ++x)
    for (Index y = 0; y < src.size(); ++y)
      if (map[src.mul(x, y)] != dst.mul(map[x], map[y])) return false;
  return true;
}

std::optional<std::vector<Index>> find_embedding(const FiniteSemigroup& a,
                                                 const FiniteSemigroup& s,
                                                 const std::vector<Anchor>& anchors,
                                                 std::size_t max_order) {
  if (s.size() > max_order)
    throw Error(ErrorKind::CapExceeded, "embedding target exceeds the order cap of " + std::to_string(max_order));
  if (a.size() > s.size()) return std::nullopt;

  // Injective homomorphisms preserve monogenic structure and idempotent counts.
  std::vector<std::pair<std::size_t, std::size_t>> profile_a(a.size()), profile_s(s.size());
  for (Index x = 0; x < a.size(); ++x) profile_a[x] = index_period(a, x);
  for (Index y = 0; y < s.size(); ++y) profile_s[y] = index_period(s, y);
  {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> need, have;
    for (const auto& p : profile_a) ++need[p];
    for (const auto& p : profile_s) ++have[p];
    for (const auto& [p, c] : need)
      if (have[p] < c) return std::nullopt;
  }

  MapSearchOptions options;
  options.injective = true;
  options.anchors = anchors;
  options.admissible = [&](Index x, Index y) { return profile_a[x] == profile_s[y]; };

  std::optional<std::vector<Index>> best;
  search_homomorphisms(a, s, options, [&](const std::vector<Index>& map) {
    if (!best || map < *best) best = map;
    return true;
  });
  return best;
}

std::optional<std::vector<Index>> find_isomorphism(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  if (a.size() != b.size()) return std::nullopt;
  return find_embedding(a, b, {}, std::max(b.size(), kDefaultMaxOrder));
}

BStarCheck has_B_star_property(const FiniteSemigroup& s, std::size_t lambda) {
  const Index zero = s.require_zero();
  if (lambda < 2) throw Error(ErrorKind::ShapeMismatch, "the B*-property is defined for lambda >= 2");
  BStarCheck out;

  if (auto w = find_embedding(matrix_units(lambda), s)) {
    out.no_matrix_units = false;
    out.witness = std::move(w);
  }
  // B_2 with its zero (index 0) pinned to the zero of S.
  if (auto w = find_embedding(matrix_units(2), s, {{Index{0}, zero}})) {
    out.no_zero_sharing_b2 = false;
    if (!out.witness) out.witness = std::move(w);
  }
  out.holds = out.no_matrix_units && out.no_zero_sharing_b2;
  return out;
}

}  // namespace brandt
