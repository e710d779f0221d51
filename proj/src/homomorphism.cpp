#include "brandt/homomorphism.hpp"

#include <algorithm>
#include <set>

#include "brandt/error.hpp"

namespace brandt {

namespace {

void require_total(const FiniteSemigroup& src, const FiniteSemigroup& dst, const HomMap& f) {
  if (f.size() != src.size())
    throw Error(ErrorKind::ShapeMismatch, "map has " + std::to_string(f.size()) + " entries, source has " +
                                              std::to_string(src.size()));
  for (Index x = 0; x < f.size(); ++x)
    if (f[x] >= dst.size()) throw Error(ErrorKind::IndexOutOfRange, "image of " + src.name(x) + " is out of range", {x});
}

// Odometer over every tuple in choices^length.
template <typename F>
void for_each_tuple(const std::vector<Index>& choices, std::size_t length, F&& f) {
  if (choices.empty()) return;
  std::vector<std::size_t> digit(length, 0);
  std::vector<Index> tuple(length, choices[0]);
  while (true) {
    f(tuple);
    std::size_t k = length;
    while (k > 0) {
      --k;
      if (++digit[k] < choices.size()) {
        tuple[k] = choices[digit[k]];
        break;
      }
      digit[k] = 0;
      tuple[k] = choices[0];
      if (k == 0) return;
    }
    if (length == 0) return;
  }
}

void apply_injections(std::size_t m, std::size_t n, std::vector<std::size_t>& cur, std::vector<bool>& used,
                      std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    cur.push_back(j);
    apply_injections(m, n, cur, used, out);
    cur.pop_back();
    used[j] = false;
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> injections(std::size_t m, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (m > n) return out;
  std::vector<std::size_t> cur;
  std::vector<bool> used(n, false);
  apply_injections(m, n, cur, used, out);
  return out;
}

HomCheck is_hom(const FiniteSemigroup& src, const FiniteSemigroup& dst, const HomMap& f) {
  require_total(src, dst, f);
  for (Index x = 0; x < src.size(); ++x)
    for (Index y = 0; y < src.size(); ++y)
      if (f[src.mul(x, y)] != dst.mul(f[x], f[y])) return {false, std::make_pair(x, y)};
  return {};
}

bool is_continuous_hom(const FiniteSemigroup& src,
                       const FiniteSemigroup& dst,
                       const HomMap& f,
                       const FiniteTopology& tau_src,
                       const FiniteTopology& tau_dst) {
  if (tau_src.size() != src.size() || tau_dst.size() != dst.size())
    throw Error(ErrorKind::CarrierMismatch, "topology does not match the semigroup carrier");
  return is_hom(src, dst, f).hom && is_continuous(f, tau_src, tau_dst).continuous;
}

HomMap annihilator(const FiniteSemigroup& src, const FiniteSemigroup& dst) {
  return HomMap(src.size(), dst.require_zero());
}

bool is_annihilating(const FiniteSemigroup& dst, const HomMap& f) {
  const Index zero = dst.require_zero();
  return std::all_of(f.begin(), f.end(), [&](Index y) { return y == zero; });
}

std::vector<HomMap> enumerate_homs(const FiniteSemigroup& src, const FiniteSemigroup& dst, const HomConstraints& c) {
  MapSearchOptions options;
  options.max_search_space = c.max_search_space;
  if (c.zero_preserving) options.anchors.push_back({src.require_zero(), dst.require_zero()});
  const bool topological = c.source_topology != nullptr && c.target_topology != nullptr;
  if (topological && (c.source_topology->size() != src.size() || c.target_topology->size() != dst.size()))
    throw Error(ErrorKind::CarrierMismatch, "topology does not match the semigroup carrier");

  std::vector<HomMap> out;
  search_homomorphisms(src, dst, options, [&](const std::vector<Index>& f) {
    if (!topological || is_continuous(f, *c.source_topology, *c.target_topology).continuous) out.push_back(f);
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HomMap sigma_construct(const BrandtExtension& src, const BrandtExtension& dst, const SigmaData& d) {
  const FiniteSemigroup& s = src.base();
  const FiniteSemigroup& t = dst.base();
  const Index zero_t = t.require_zero();
  require_total(s, t, d.h);
  if (d.h[s.require_zero()] != zero_t) throw Error(ErrorKind::NotZeroPreserving, "h(0_S) is not 0_T");
  if (!is_hom(s, t, d.h).hom) throw Error(ErrorKind::NotAHomomorphism, "h is not a homomorphism");
  if (d.e >= t.size() || d.e == zero_t || !is_idempotent(t, d.e))
    throw Error(ErrorKind::NotIdempotent, "e must be a non-zero idempotent of T", {d.e});

  const std::size_t l1 = src.lambda();
  const std::size_t l2 = dst.lambda();
  if (d.u.size() != l1 || d.phi.size() != l1)
    throw Error(ErrorKind::ShapeMismatch, "u and phi must be defined on all of lambda_1");
  const GroupView group = maximal_subgroup(t, d.e);
  for (std::size_t a = 0; a < l1; ++a)
    if (d.u[a] >= t.size() || !group.contains(d.u[a]))
      throw Error(ErrorKind::UOutsideSubgroup, "u(" + std::to_string(a + 1) + ") is not in H(e)", {a});
  std::vector<bool> hit(l2, false);
  for (std::size_t a = 0; a < l1; ++a) {
    if (d.phi[a] >= l2) throw Error(ErrorKind::IndexOutOfRange, "phi value out of range", {a});
    if (hit[d.phi[a]]) throw Error(ErrorKind::PhiNotInjective, "phi is not injective", {a});
    hit[d.phi[a]] = true;
  }

  std::vector<Index> inv(l1);
  for (std::size_t a = 0; a < l1; ++a) inv[a] = group.inverse(d.u[a]);

  HomMap sigma(src.size(), dst.zero());
  for (Index x = 0; x < src.size(); ++x) {
    const BrandtLabel& l = src.label(x);
    if (l.is_zero) continue;
    const Index hs = d.h[l.element];
    if (hs == zero_t) continue;
    const Index middle = t.mul(t.mul(d.u[l.alpha], hs), inv[l.beta]);
    sigma[x] = dst.index(d.phi[l.alpha], middle, d.phi[l.beta]);
  }
  const HomCheck check = is_hom(src.semigroup(), dst.semigroup(), sigma);
  if (!check.hom)
    throw Error(ErrorKind::NotAHomomorphism, "constructed sigma is not multiplicative",
                {check.witness->first, check.witness->second});
  return sigma;
}

IndexSet kernel_ideal(const FiniteSemigroup& src, const FiniteSemigroup& dst, const HomMap& h) {
  require_total(src, dst, h);
  const Index zero_t = dst.require_zero();
  if (h[src.require_zero()] != zero_t) throw Error(ErrorKind::NotZeroPreserving, "h(0_S) is not 0_T");
  IndexSet kernel(src.size());
  for (Index x = 0; x < src.size(); ++x)
    if (h[x] == zero_t) kernel.set(x);
  if (auto w = ideal_violation(src, kernel))
    throw Error(ErrorKind::NotAnIdeal, "preimage of zero is not an ideal", {w->first, w->second});
  return kernel;
}

std::optional<SigmaData> decompose(const BrandtExtension& src,
                                   const BrandtExtension& dst,
                                   const HomMap& sigma,
                                   const std::vector<HomMap>* homs) {
  const FiniteSemigroup& s = src.base();
  const FiniteSemigroup& t = dst.base();
  if (sigma.size() != src.size() || is_annihilating(dst.semigroup(), sigma)) return std::nullopt;

  // sigma(a,1,a) is a non-zero diagonal idempotent, which pins phi(a).
  const Index one_s = s.require_one();
  std::vector<std::size_t> phi(src.lambda());
  std::vector<bool> hit(dst.lambda(), false);
  for (std::size_t a = 0; a < src.lambda(); ++a) {
    const BrandtLabel& l = dst.label(sigma[src.index(a, one_s, a)]);
    if (l.is_zero || l.alpha != l.beta || hit[l.alpha]) return std::nullopt;
    phi[a] = l.alpha;
    hit[l.alpha] = true;
  }

  std::vector<HomMap> own;
  if (homs == nullptr) {
    own = enumerate_homs(s, t, {.zero_preserving = true});
    homs = &own;
  }

  std::optional<SigmaData> best;
  const Index zero_t = t.require_zero();
  for (Index e : idempotents(t)) {
    if (e == zero_t) continue;
    const GroupView group = maximal_subgroup(t, e);
    for_each_tuple(group.members, src.lambda(), [&](const std::vector<Index>& u) {
      for (const HomMap& h : *homs) {
        SigmaData candidate{h, u, phi, e};
        if (best && !(candidate < *best)) continue;
        try {
          if (sigma_construct(src, dst, candidate) == sigma) best = std::move(candidate);
        } catch (const Error&) {
        }
      }
    });
  }
  return best;
}

Report image_structure(const BrandtExtension& src,
                       const BrandtExtension& dst,
                       const HomMap& sigma,
                       const FiniteTopology* tau) {
  Report report;
  report.title = "image structure";
  const FiniteSemigroup& tb = dst.semigroup();
  if (is_annihilating(tb, sigma)) {
    report.skip("image_subsemigroup", "trivial image");
    report.skip("image_is_brandt_extension", "trivial image");
    report.skip("image_blocks_homeomorphic", "trivial image");
    return report;
  }

  IndexSet image(dst.size());
  for (Index y : sigma) image.set(y);
  const bool sub = is_subsemigroup(tb, image);
  report.add("image_subsemigroup", sub, "image is not closed under the product");

  const Index one_s = src.base().require_one();
  IndexSet diag(dst.size());
  src.block(0, 0).for_each([&](Index x) { diag.set(sigma[x]); });
  bool iso = false;
  std::string witness = "image is not isomorphic to B^0_lambda of the image of S_{1,1}";
  if (sub) {
    try {
      const auto monoid = restrict_to(tb, diag, dst.zero(), sigma[src.index(0, one_s, 0)]).first;
      const auto expected = brandt_lambda_extension(monoid, src.lambda()).semigroup();
      const auto actual = restrict_to(tb, image).first;
      iso = find_isomorphism(expected, actual).has_value();
    } catch (const Error& err) {
      witness = err.what();
    }
  }
  report.add("image_is_brandt_extension", iso, witness);

  if (tau == nullptr) {
    report.skip("image_blocks_homeomorphic", "no topology attached");
    return report;
  }
  if (tau->size() != dst.size()) throw Error(ErrorKind::CarrierMismatch, "topology is not over the target extension");

  auto image_of = [&](const IndexSet& a) {
    IndexSet out(dst.size());
    a.for_each([&](Index x) { out.set(sigma[x]); });
    return out;
  };
  auto translate = [&](Index left, Index right) {
    std::vector<Index> f(dst.size());
    for (Index x = 0; x < dst.size(); ++x) f[x] = tb.mul(tb.mul(left, x), right);
    return f;
  };
  std::string homeo_witness;
  const std::size_t l = src.lambda();
  for (std::size_t a = 0; a < l && homeo_witness.empty(); ++a)
    for (std::size_t b = 0; b < l && homeo_witness.empty(); ++b)
      for (std::size_t c = 0; c < l && homeo_witness.empty(); ++c)
        for (std::size_t d = 0; d < l && homeo_witness.empty(); ++d) {
          const auto f = translate(sigma[src.index(c, one_s, a)], sigma[src.index(b, one_s, d)]);
          const auto g = translate(sigma[src.index(a, one_s, c)], sigma[src.index(d, one_s, b)]);
          if (!is_homeomorphism_between(f, g, *tau, image_of(src.block(a, b)), image_of(src.block(c, d))))
            homeo_witness = "h(S(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")) -> h(S(" +
                            std::to_string(c + 1) + "," + std::to_string(d + 1) + "))";
        }
  report.add("image_blocks_homeomorphic", homeo_witness.empty(), homeo_witness);
  return report;
}

CompletenessResult completeness_check(const FiniteSemigroup& s,
                                      const FiniteSemigroup& t,
                                      std::size_t lambda1,
                                      std::size_t lambda2) {
  const BrandtExtension b1(s, lambda1);
  const BrandtExtension b2(t, lambda2);
  CompletenessResult result;
  result.lambda1 = lambda1;
  result.lambda2 = lambda2;
  result.idempotents_central = idempotents_central(t).central;
  result.b_star = has_B_star_property(t, std::max<std::size_t>(lambda1, 2)).holds;

  const auto homs = enumerate_homs(s, t, {.zero_preserving = true});
  const auto phis = injections(lambda1, lambda2);
  const Index zero_t = t.require_zero();

  std::set<HomMap> constructed{annihilator(b1.semigroup(), b2.semigroup())};
  for (const HomMap& h : homs)
    for (Index e : idempotents(t)) {
      if (e == zero_t) continue;
      const GroupView group = maximal_subgroup(t, e);
      for_each_tuple(group.members, lambda1, [&](const std::vector<Index>& u) {
        for (const auto& phi : phis) {
          ++result.tuples;
          try {
            constructed.insert(sigma_construct(b1, b2, {h, u, phi, e}));
          } catch (const Error& err) {
            if (err.kind() != ErrorKind::NotAHomomorphism) throw;
            ++result.rejected;
          }
        }
      });
    }

  const auto enumerated = enumerate_homs(b1.semigroup(), b2.semigroup(), {.zero_preserving = true});
  result.constructed = constructed.size();
  result.enumerated = enumerated.size();
  const std::set<HomMap> direct(enumerated.begin(), enumerated.end());
  std::set_difference(direct.begin(), direct.end(), constructed.begin(), constructed.end(),
                      std::back_inserter(result.missing));
  std::set_difference(constructed.begin(), constructed.end(), direct.begin(), direct.end(),
                      std::back_inserter(result.extra));
  return result;
}

}  // namespace brandt
