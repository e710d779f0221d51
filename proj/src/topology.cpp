#include "brandt/topology.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "brandt/error.hpp"

namespace brandt {

// --- construction --------------------------------------------------------------

FiniteTopology FiniteTopology::from_opens(std::size_t n, const std::vector<IndexSet>& opens) {
  std::unordered_set<IndexSet, IndexSetHash> family;
  for (const auto& u : opens) {
    if (u.universe() != n) throw Error(ErrorKind::CarrierMismatch, "open set is over a different carrier");
    family.insert(u);
  }
  if (!family.count(IndexSet(n))) throw Error(ErrorKind::BadTopology, "the empty set must be open");
  if (!family.count(IndexSet::full(n))) throw Error(ErrorKind::BadTopology, "the carrier must be open");
  const std::vector<IndexSet> members(family.begin(), family.end());
  for (const auto& a : members)
    for (const auto& b : members) {
      if (!family.count(a | b))
        throw Error(ErrorKind::BadTopology, "opens not closed under union: " + a.to_string() + " | " + b.to_string());
      if (!family.count(a & b))
        throw Error(ErrorKind::BadTopology, "opens not closed under intersection: " + a.to_string() + " & " + b.to_string());
    }
  std::vector<IndexSet> nbhd(n, IndexSet::full(n));
  for (const auto& u : members) u.for_each([&](std::size_t x) { nbhd[x] &= u; });
  return FiniteTopology(std::move(nbhd));
}

FiniteTopology FiniteTopology::from_minimal_neighborhoods(std::vector<IndexSet> neighborhoods) {
  const std::size_t n = neighborhoods.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (neighborhoods[x].universe() != n) throw Error(ErrorKind::CarrierMismatch, "neighbourhood over a different carrier", {x});
    if (!neighborhoods[x].test(x)) throw Error(ErrorKind::BadTopology, "a point must lie in its own neighbourhood", {x});
  }
  for (std::size_t x = 0; x < n; ++x)
    neighborhoods[x].for_each([&](std::size_t y) {
      if (!neighborhoods[y].subset_of(neighborhoods[x]))
        throw Error(ErrorKind::BadTopology, "minimal neighbourhoods are not transitive", {x, y});
    });
  return FiniteTopology(std::move(neighborhoods));
}

FiniteTopology FiniteTopology::from_preorder(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::vector<IndexSet> nbhd(n, IndexSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (leq[x].size() != n) throw Error(ErrorKind::ShapeMismatch, "preorder matrix must be square", {x});
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x][y]) nbhd[x].set(y);
  }
  return from_minimal_neighborhoods(std::move(nbhd));
}

FiniteTopology FiniteTopology::discrete(std::size_t n) {
  std::vector<IndexSet> nbhd;
  for (std::size_t x = 0; x < n; ++x) nbhd.push_back(IndexSet(n, {x}));
  return FiniteTopology(std::move(nbhd));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t n) {
  return FiniteTopology(std::vector<IndexSet>(n, IndexSet::full(n)));
}

FiniteTopology FiniteTopology::sierpinski() {
  return FiniteTopology({IndexSet(2, {0, 1}), IndexSet(2, {1})});
}

bool FiniteTopology::is_open(const IndexSet& a) const {
  bool open = true;
  a.for_each([&](std::size_t x) { open = open && nbhd_[x].subset_of(a); });
  return open;
}

bool FiniteTopology::is_discrete() const {
  for (const auto& u : nbhd_)
    if (u.count() != 1) return false;
  return true;
}

IndexSet FiniteTopology::open_hull(const IndexSet& a) const {
  IndexSet out(size());
  a.for_each([&](std::size_t x) { out |= nbhd_[x]; });
  return out;
}

std::vector<IndexSet> FiniteTopology::opens(std::size_t cap) const {
  const std::size_t n = size();
  std::unordered_set<IndexSet, IndexSetHash> seen{IndexSet(n)};
  std::vector<IndexSet> family{IndexSet(n)};
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t existing = family.size();
    for (std::size_t k = 0; k < existing; ++k) {
      IndexSet u = family[k] | nbhd_[x];
      if (seen.insert(u).second) {
        family.push_back(std::move(u));
        if (family.size() > cap)
          throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " open sets");
      }
    }
  }
  std::sort(family.begin(), family.end(), canonical_less);
  return family;
}

std::vector<IndexSet> FiniteTopology::open_neighborhoods(std::size_t x, std::size_t cap) const {
  std::vector<IndexSet> out;
  for (auto& u : opens(cap))
    if (u.test(x)) out.push_back(std::move(u));
  return out;
}

// --- closure, interior, regular opens ------------------------------------------

IndexSet closure(const FiniteTopology& t, const IndexSet& a) {
  IndexSet out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t.minimal_open(x).intersects(a)) out.set(x);
  return out;
}

IndexSet interior(const FiniteTopology& t, const IndexSet& a) {
  IndexSet out(t.size());
  for (std::size_t x = 0; x < t.size(); ++x)
    if (t.minimal_open(x).subset_of(a)) out.set(x);
  return out;
}

bool is_regular_open(const FiniteTopology& t, const IndexSet& a) { return interior(t, closure(t, a)) == a; }

std::vector<IndexSet> regular_opens(const FiniteTopology& t, std::size_t cap) {
  std::vector<IndexSet> out;
  for (auto& u : t.opens(cap))
    if (is_regular_open(t, u)) out.push_back(std::move(u));
  return out;
}

SemiregularCheck is_semiregular(const FiniteTopology& t) {
  // A regular open set containing x contains U(x), so regular opens form a
  // base exactly when every U(x) is itself regular open.
  SemiregularCheck out;
  for (std::size_t x = 0; x < t.size(); ++x)
    if (!is_regular_open(t, t.minimal_open(x))) {
      out.semiregular = false;
      out.witness = t.minimal_open(x);
      break;
    }
  return out;
}

SeparationReport separation(const FiniteTopology& t) {
  const std::size_t n = t.size();
  SeparationReport r;
  r.t0 = r.t1 = r.hausdorff = r.regular = r.normal = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const auto& ux = t.minimal_open(x);
      const auto& uy = t.minimal_open(y);
      if (ux.test(y) && uy.test(x)) r.t0 = false;
      if (ux.test(y)) r.t1 = false;
      if (ux.intersects(uy)) r.hausdorff = false;
    }
  // x and the largest closed set missing x, X \ U(x), must have disjoint hulls.
  for (std::size_t x = 0; x < n; ++x) {
    const IndexSet far = t.minimal_open(x).complement();
    if (t.minimal_open(x).intersects(t.open_hull(far))) r.regular = false;
  }
  // Two disjoint closed sets fail to separate iff some pair of their points
  // has disjoint point closures but overlapping neighbourhoods.
  std::vector<IndexSet> point_closure;
  for (std::size_t x = 0; x < n; ++x) point_closure.push_back(closure(t, IndexSet(n, {x})));
  for (std::size_t x = 0; x < n && r.normal; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (!point_closure[x].intersects(point_closure[y]) && t.minimal_open(x).intersects(t.minimal_open(y))) {
        r.normal = false;
        break;
      }
  return r;
}

FiniteTopology subspace(const FiniteTopology& t, const IndexSet& subset) {
  const auto members = subset.members();
  std::vector<std::size_t> local(t.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = i;
  std::vector<IndexSet> nbhd;
  for (std::size_t m : members) {
    IndexSet u(members.size());
    (t.minimal_open(m) & subset).for_each([&](std::size_t y) { u.set(local[y]); });
    nbhd.push_back(std::move(u));
  }
  return FiniteTopology::from_minimal_neighborhoods(std::move(nbhd));
}

// --- continuity ----------------------------------------------------------------

ContinuityCheck is_continuous(const std::vector<std::size_t>& f, const FiniteTopology& dom, const FiniteTopology& cod) {
  if (f.size() != dom.size()) throw Error(ErrorKind::CarrierMismatch, "map is not total on the domain");
  ContinuityCheck out;
  for (std::size_t x = 0; x < dom.size(); ++x) {
    const auto& target = cod.minimal_open(f[x]);
    bool ok = true;
    dom.minimal_open(x).for_each([&](std::size_t y) { ok = ok && target.test(f[y]); });
    if (!ok) {
      out.continuous = false;
      out.witness = target;
      return out;
    }
  }
  return out;
}

bool is_continuous_between(const std::vector<std::size_t>& f,
                           const FiniteTopology& dom,
                           const IndexSet& from,
                           const FiniteTopology& cod,
                           const IndexSet& to) {
  bool ok = true;
  from.for_each([&](std::size_t x) {
    if (!ok) return;
    if (!to.test(f[x])) {
      ok = false;
      return;
    }
    const IndexSet target = cod.minimal_open(f[x]) & to;
    (dom.minimal_open(x) & from).for_each([&](std::size_t y) { ok = ok && target.test(f[y]); });
  });
  return ok;
}

bool is_homeomorphism_between(const std::vector<std::size_t>& f,
                              const std::vector<std::size_t>& g,
                              const FiniteTopology& t,
                              const IndexSet& from,
                              const IndexSet& to) {
  bool inverse = true;
  from.for_each([&](std::size_t x) { inverse = inverse && to.test(f[x]) && g[f[x]] == x; });
  to.for_each([&](std::size_t y) { inverse = inverse && from.test(g[y]) && f[g[y]] == y; });
  return inverse && is_continuous_between(f, t, from, t, to) && is_continuous_between(g, t, to, t, from);
}

SemitopCheck is_semitopological(const FiniteSemigroup& s, const FiniteTopology& t) {
  if (s.size() != t.size()) throw Error(ErrorKind::CarrierMismatch, "semigroup and topology carriers differ");
  SemitopCheck out;
  for (Index a = 0; a < s.size(); ++a)
    for (bool right : {false, true}) {
      for (Index x = 0; x < s.size(); ++x) {
        const Index ax = right ? s.mul(x, a) : s.mul(a, x);
        const auto& target = t.minimal_open(ax);
        bool ok = true;
        t.minimal_open(x).for_each([&](Index y) { ok = ok && target.test(right ? s.mul(y, a) : s.mul(a, y)); });
        if (!ok) {
          out.holds = false;
          out.translation_witness = std::pair{a, right};
          return out;
        }
      }
    }
  return out;
}

SemitopCheck is_topological(const FiniteSemigroup& s, const FiniteTopology& t) {
  if (s.size() != t.size()) throw Error(ErrorKind::CarrierMismatch, "semigroup and topology carriers differ");
  // In the product of two finite spaces, U(x) x U(y) is the smallest open box at (x, y).
  SemitopCheck out;
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y) {
      const auto& target = t.minimal_open(s.mul(x, y));
      bool ok = true;
      t.minimal_open(x).for_each([&](Index a) {
        t.minimal_open(y).for_each([&](Index b) { ok = ok && target.test(s.mul(a, b)); });
      });
      if (!ok) {
        out.holds = false;
        out.product_witness = std::pair{x, y};
        return out;
      }
    }
  return out;
}

GeneratedTopology generate_from_base(std::size_t n, const std::vector<IndexSet>& base) {
  std::vector<IndexSet> nbhd(n, IndexSet::full(n));
  std::vector<bool> covered(n, false);
  for (const auto& b : base) {
    if (b.universe() != n) throw Error(ErrorKind::CarrierMismatch, "base member over a different carrier");
    b.for_each([&](std::size_t x) {
      nbhd[x] &= b;
      covered[x] = true;
    });
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!covered[x]) throw Error(ErrorKind::EmptyCover, "point not covered by the base", {x});

  // The base axiom holds iff each intersection U(x) is itself a member.
  std::unordered_set<IndexSet, IndexSetHash> members(base.begin(), base.end());
  GenerationMode mode = GenerationMode::Base;
  for (const auto& u : nbhd)
    if (!members.count(u)) mode = GenerationMode::Subbase;
  return {FiniteTopology::from_minimal_neighborhoods(std::move(nbhd)), mode};
}

// --- enumeration ---------------------------------------------------------------

namespace {

using Rows = std::vector<std::uint64_t>;

// Extends every preorder on m points to m+1 points, appending to `out`.
void extend_preorders(const std::vector<Rows>& previous, std::size_t m, std::vector<Rows>& out) {
  const std::uint64_t subsets = std::uint64_t{1} << m;
  const std::uint64_t p = std::uint64_t{1} << m;
  for (const auto& rows : previous) {
    // rows[x] is the up-set of x. Down-closed D: x in D and z <= x implies z in D.
    std::vector<std::uint64_t> downs, ups;
    for (std::uint64_t d = 0; d < subsets; ++d) {
      bool ok = true;
      for (std::size_t z = 0; z < m && ok; ++z)
        if (!((d >> z) & 1U) && (rows[z] & d) != 0) ok = false;
      if (ok) downs.push_back(d);
    }
    for (std::uint64_t u = 0; u < subsets; ++u) {
      bool ok = true;
      for (std::size_t y = 0; y < m && ok; ++y)
        if (((u >> y) & 1U) && (rows[y] & ~u) != 0) ok = false;
      if (ok) ups.push_back(u);
    }
    for (auto d : downs)
      for (auto u : ups) {
        bool ok = true;
        for (std::size_t x = 0; x < m && ok; ++x)
          if (((d >> x) & 1U) && (rows[x] & u) != u) ok = false;
        if (!ok) continue;
        Rows next(rows);
        for (std::size_t x = 0; x < m; ++x)
          if ((d >> x) & 1U) next[x] |= p;
        next.push_back(u | p);
        out.push_back(std::move(next));
      }
  }
}

}  // namespace

TopologyEnumerator::TopologyEnumerator(std::size_t n, std::size_t cap) : n_(n) {
  if (n > cap) throw Error(ErrorKind::CapExceeded, "topology enumeration is capped at " + std::to_string(cap) + " points");
  if (n > 62) throw Error(ErrorKind::CapExceeded, "topology enumeration supports at most 62 points");
  std::vector<Rows> current{Rows{}};
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<Rows> next;
    extend_preorders(current, m, next);
    current = std::move(next);
  }
  levels_.clear();
  for (auto& rows : current) levels_.push_back(std::move(rows));
}

std::optional<FiniteTopology> TopologyEnumerator::next() {
  if (cursor_ >= levels_.size()) return std::nullopt;
  const auto& rows = levels_[cursor_++];
  std::vector<IndexSet> nbhd;
  for (std::size_t x = 0; x < n_; ++x) {
    IndexSet u(n_);
    for (std::size_t y = 0; y < n_; ++y)
      if ((rows[x] >> y) & 1U) u.set(y);
    nbhd.push_back(std::move(u));
  }
  return FiniteTopology::from_minimal_neighborhoods(std::move(nbhd));
}

void TopologyEnumerator::seek(std::size_t cursor) { cursor_ = std::min(cursor, levels_.size()); }

std::vector<FiniteTopology> enumerate_topologies(std::size_t n, std::size_t cap) {
  TopologyEnumerator e(n, cap);
  std::vector<FiniteTopology> out;
  while (auto t = e.next()) out.push_back(std::move(*t));
  return out;
}

std::string to_dot(const FiniteTopology& t, const std::vector<std::string>& names) {
  const std::size_t n = t.size();
  auto strictly_below = [&](std::size_t x, std::size_t y) { return t.specializes(x, y) && !t.specializes(y, x); };
  std::ostringstream os;
  os << "digraph specialization {\n";
  for (std::size_t x = 0; x < n; ++x) {
    os << "  n" << x << " [label=\"" << (x < names.size() ? names[x] : std::to_string(x)) << "\"];\n";
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (t.specializes(x, y) && t.specializes(y, x)) {
        if (x < y) os << "  n" << x << " -> n" << y << " [dir=both];\n";
        continue;
      }
      if (!strictly_below(x, y)) continue;
      bool covering = true;
      for (std::size_t z = 0; z < n && covering; ++z)
        if (strictly_below(x, z) && strictly_below(z, y)) covering = false;
      if (covering) os << "  n" << x << " -> n" << y << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace brandt
