#include "brandt/category.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "brandt/error.hpp"
#include "brandt/ext_topology.hpp"

namespace brandt {

namespace {

constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

std::string object_label(const TpcbObject& a) { return a.name + "/" + std::to_string(a.lambda); }

void check_shape(const TpcbObject& a, const TpcbObject& b, const TpcbMorphism& f) {
  bool ok = f.h.size() == a.s.size() && f.u.size() == a.lambda && f.phi.size() == a.lambda;
  for (Index y : f.h) ok = ok && y < b.s.size();
  for (Index y : f.u) ok = ok && y < b.s.size();
  for (std::size_t p : f.phi) ok = ok && p < b.lambda;
  if (!ok) throw Error(ErrorKind::DomainMismatch, "morphism does not fit " + object_label(a) + " -> " + object_label(b));
}

// All morphism sets of a corpus with lookup from morphism to position.
struct MorphismTable {
  std::vector<std::vector<std::vector<TpcbMorphism>>> sets;
  std::vector<std::vector<std::map<TpcbMorphism, std::size_t>>> position;

  MorphismTable(const std::vector<TpcbObject>& corpus, UnitChoice choice) {
    const std::size_t n = corpus.size();
    sets.assign(n, std::vector<std::vector<TpcbMorphism>>(n));
    position.assign(n, std::vector<std::map<TpcbMorphism, std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        sets[i][j] = enumerate_morphisms(corpus[i], corpus[j], choice);
        for (std::size_t k = 0; k < sets[i][j].size(); ++k) position[i][j][sets[i][j][k]] = k;
      }
  }

  std::size_t find(std::size_t i, std::size_t j, const TpcbMorphism& m) const {
    auto it = position[i][j].find(m);
    return it == position[i][j].end() ? kAbsent : it->second;
  }
};

std::string render_morphism(const TpcbMorphism& m) {
  auto list = [](const auto& v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out + "]";
  };
  return "h=" + list(m.h) + " u=" + list(m.u) + " phi=" + list(m.phi);
}

}  // namespace

TpcbObject make_object(std::string name, FiniteSemigroup s, std::size_t lambda) {
  FiniteTopology tau = FiniteTopology::discrete(s.size());
  return make_object(std::move(name), std::move(s), lambda, std::move(tau));
}

TpcbObject make_object(std::string name, FiniteSemigroup s, std::size_t lambda, FiniteTopology tau) {
  s.require_zero();
  s.require_one();
  if (lambda == 0) throw Error(ErrorKind::ShapeMismatch, "lambda must be at least 1");
  if (tau.size() != s.size()) throw Error(ErrorKind::CarrierMismatch, "topology is not over the semigroup");
  TpcbObject out{std::move(name), std::move(s), lambda, std::move(tau)};
  out.central_idempotents = idempotents_central(out.s).central;
  out.b_star = has_B_star_property(out.s, std::max<std::size_t>(lambda, 2)).holds;
  out.semiregular = is_semiregular(out.tau).semiregular;
  return out;
}

bool same_object(const TpcbObject& a, const TpcbObject& b) {
  if (a.trivial() && b.trivial()) return true;
  return a.s == b.s && a.lambda == b.lambda && a.tau == b.tau;
}

std::vector<Index> eligible_units(const TpcbObject& a, const TpcbObject& b) {
  const Index one = a.s.require_one();
  std::set<Index> units;
  for (const HomMap& g : enumerate_homs(a.s, b.s, {.zero_preserving = true, .source_topology = &a.tau, .target_topology = &b.tau}))
    units.insert(g[one]);
  return {units.begin(), units.end()};
}

TpcbMorphism identity_morphism(const TpcbObject& a) {
  TpcbMorphism m;
  m.h.resize(a.s.size());
  for (Index x = 0; x < a.s.size(); ++x) m.h[x] = x;
  m.e = a.s.require_one();
  m.u.assign(a.lambda, m.e);
  m.phi.resize(a.lambda);
  for (std::size_t k = 0; k < a.lambda; ++k) m.phi[k] = k;
  return m;
}

TpcbMorphism compose(const TpcbObject& a,
                     const TpcbObject& b,
                     const TpcbObject& c,
                     const TpcbMorphism& f,
                     const TpcbMorphism& g) {
  check_shape(a, b, f);
  check_shape(b, c, g);
  TpcbMorphism out;
  out.h.resize(a.s.size());
  for (Index x = 0; x < a.s.size(); ++x) out.h[x] = g.h[f.h[x]];
  out.u.resize(a.lambda);
  out.phi.resize(a.lambda);
  for (std::size_t k = 0; k < a.lambda; ++k) {
    out.u[k] = c.s.mul(g.u[f.phi[k]], g.h[f.u[k]]);
    out.phi[k] = g.phi[f.phi[k]];
  }
  for (Index e : idempotents(c.s)) {
    const GroupView group = maximal_subgroup(c.s, e);
    if (std::all_of(out.u.begin(), out.u.end(), [&](Index x) { return group.contains(x); })) {
      out.e = e;
      return out;
    }
  }
  throw Error(ErrorKind::BracketOutsideSubgroup, "bracket values do not lie in a single maximal subgroup", out.u);
}

std::vector<TpcbMorphism> enumerate_morphisms(const TpcbObject& a, const TpcbObject& b, UnitChoice choice) {
  std::vector<TpcbMorphism> out;
  const auto phis = injections(a.lambda, b.lambda);
  if (phis.empty()) return out;
  const auto homs =
      enumerate_homs(a.s, b.s, {.zero_preserving = true, .source_topology = &a.tau, .target_topology = &b.tau});
  const auto eligible = eligible_units(a, b);
  const Index one = a.s.require_one();
  for (const HomMap& h : homs)
    for (Index e : choice == UnitChoice::HomImage ? std::vector<Index>{h[one]} : eligible) {
      const GroupView group = maximal_subgroup(b.s, e);
      std::vector<std::size_t> digit(a.lambda, 0);
      while (true) {
        std::vector<Index> u(a.lambda);
        for (std::size_t k = 0; k < a.lambda; ++k) u[k] = group.members[digit[k]];
        for (const auto& phi : phis) out.push_back({h, u, phi, e});
        std::size_t k = a.lambda;
        while (k > 0 && ++digit[k - 1] == group.members.size()) digit[--k] = 0;
        if (k == 0) break;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

BrandtExtension functor_obj(const TpcbObject& a) { return brandt_lambda_extension(a.s, a.lambda); }

HomMap functor_mor(const BrandtExtension& src, const BrandtExtension& dst, const TpcbMorphism& m) {
  if (m.e == dst.base().require_zero()) return annihilator(src.semigroup(), dst.semigroup());
  return sigma_construct(src, dst, {m.h, m.u, m.phi, m.e});
}

Report verify_category_laws(const std::vector<TpcbObject>& corpus, UnitChoice choice) {
  Report report;
  report.title = "category laws";
  const std::size_t n = corpus.size();
  const MorphismTable table(corpus, choice);

  std::size_t morphisms = 0;
  std::string id_witness, left_witness, right_witness;
  for (std::size_t i = 0; i < n; ++i) {
    const TpcbMorphism id = identity_morphism(corpus[i]);
    if (id_witness.empty() && table.find(i, i, id) == kAbsent) id_witness = object_label(corpus[i]);
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& f : table.sets[i][j]) {
        ++morphisms;
        if (left_witness.empty() && compose(corpus[i], corpus[i], corpus[j], id, f) != f)
          left_witness = object_label(corpus[i]) + " -> " + object_label(corpus[j]) + ": " + render_morphism(f);
        if (right_witness.empty() &&
            compose(corpus[i], corpus[j], corpus[j], f, identity_morphism(corpus[j])) != f)
          right_witness = object_label(corpus[i]) + " -> " + object_label(corpus[j]) + ": " + render_morphism(f);
      }
  }
  report.add("identity_enumerated", id_witness.empty(), id_witness);
  report.add("left_identity", left_witness.empty(), left_witness);
  report.add("right_identity", right_witness.empty(), right_witness);

  // comp[i][j][k][f * |M_jk| + g] = position of f then g in M_ik.
  std::size_t pairs = 0;
  std::size_t bracket_failures = 0;
  std::string bracket_witness, closed_witness;
  std::vector<std::vector<std::vector<std::vector<std::size_t>>>> comp(
      n, std::vector<std::vector<std::vector<std::size_t>>>(n, std::vector<std::vector<std::size_t>>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto& fs = table.sets[i][j];
        const auto& gs = table.sets[j][k];
        auto& cell = comp[i][j][k];
        cell.assign(fs.size() * gs.size(), kAbsent);
        for (std::size_t a = 0; a < fs.size(); ++a)
          for (std::size_t b = 0; b < gs.size(); ++b) {
            ++pairs;
            try {
              const TpcbMorphism fg = compose(corpus[i], corpus[j], corpus[k], fs[a], gs[b]);
              cell[a * gs.size() + b] = table.find(i, k, fg);
              if (cell[a * gs.size() + b] == kAbsent && closed_witness.empty())
                closed_witness = render_morphism(fs[a]) + " then " + render_morphism(gs[b]);
            } catch (const Error& err) {
              if (err.kind() != ErrorKind::BracketOutsideSubgroup) throw;
              ++bracket_failures;
              if (bracket_witness.empty())
                bracket_witness = object_label(corpus[i]) + " -> " + object_label(corpus[j]) + " -> " +
                                  object_label(corpus[k]) + ": " + render_morphism(fs[a]) + " then " +
                                  render_morphism(gs[b]);
            }
          }
      }
  report.add("bracket_in_single_subgroup", bracket_failures == 0, bracket_witness,
             std::to_string(bracket_failures) + " of " + std::to_string(pairs) + " composable pairs rejected");
  report.add("composition_closed", closed_witness.empty(), closed_witness,
             std::to_string(pairs) + " composable pairs");

  std::size_t triples = 0;
  std::size_t unchecked = 0;
  std::string assoc_witness;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const std::size_t nf = table.sets[i][j].size();
          const std::size_t ng = table.sets[j][k].size();
          const std::size_t nh = table.sets[k][l].size();
          if (nf == 0 || ng == 0 || nh == 0) continue;
          const auto& ijk = comp[i][j][k];
          const auto& ikl = comp[i][k][l];
          const auto& jkl = comp[j][k][l];
          const auto& ijl = comp[i][j][l];
          const std::size_t njl = table.sets[j][l].size();
          for (std::size_t a = 0; a < nf; ++a)
            for (std::size_t b = 0; b < ng; ++b) {
              const std::size_t fg = ijk[a * ng + b];
              for (std::size_t c = 0; c < nh; ++c) {
                ++triples;
                const std::size_t gh = jkl[b * nh + c];
                if (fg == kAbsent || gh == kAbsent) {
                  ++unchecked;
                  continue;
                }
                const std::size_t left = ikl[fg * nh + c];
                const std::size_t right = ijl[a * njl + gh];
                if (left != right && assoc_witness.empty())
                  assoc_witness = object_label(corpus[i]) + " -> " + object_label(corpus[j]) + " -> " +
                                  object_label(corpus[k]) + " -> " + object_label(corpus[l]);
              }
            }
        }
  report.add("associativity", assoc_witness.empty() && unchecked == 0, assoc_witness,
             std::to_string(triples) + " composable triples, " + std::to_string(unchecked) + " without a composite");
  report.add("morphism_count", true, {}, std::to_string(morphisms) + " morphisms over " + std::to_string(n) + " objects");
  return report;
}

Report verify_functor_laws(const std::vector<TpcbObject>& corpus) {
  Report report;
  report.title = "functor laws";
  const std::size_t n = corpus.size();
  const MorphismTable table(corpus, UnitChoice::HomImage);
  std::vector<BrandtExtension> ext;
  for (const auto& a : corpus) ext.push_back(functor_obj(a));

  std::vector<std::vector<std::vector<HomMap>>> image(n, std::vector<std::vector<HomMap>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& m : table.sets[i][j]) image[i][j].push_back(functor_mor(ext[i], ext[j], m));

  std::string id_witness;
  for (std::size_t i = 0; i < n; ++i) {
    const HomMap id = functor_mor(ext[i], ext[i], identity_morphism(corpus[i]));
    for (Index x = 0; x < id.size(); ++x)
      if (id[x] != x && id_witness.empty()) id_witness = object_label(corpus[i]) + " at " + ext[i].render(x);
  }
  report.add("preserves_identity", id_witness.empty(), id_witness);

  std::size_t pairs = 0;
  std::string comp_witness;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < table.sets[i][j].size(); ++a)
          for (std::size_t b = 0; b < table.sets[j][k].size(); ++b) {
            TpcbMorphism fg;
            try {
              fg = compose(corpus[i], corpus[j], corpus[k], table.sets[i][j][a], table.sets[j][k][b]);
            } catch (const Error& err) {
              if (err.kind() != ErrorKind::BracketOutsideSubgroup) throw;
              continue;
            }
            ++pairs;
            const HomMap direct = functor_mor(ext[i], ext[k], fg);
            const HomMap& bf = image[i][j][a];
            const HomMap& bg = image[j][k][b];
            for (Index x = 0; x < direct.size(); ++x)
              if (direct[x] != bg[bf[x]] && comp_witness.empty())
                comp_witness = render_morphism(table.sets[i][j][a]) + " then " +
                               render_morphism(table.sets[j][k][b]) + " at " + ext[i].render(x);
          }
  report.add("preserves_composition", comp_witness.empty(), comp_witness, std::to_string(pairs) + " composable pairs");
  return report;
}

Report verify_fullness(const std::vector<TpcbObject>& corpus) {
  Report report;
  report.title = "fullness";
  const std::size_t n = corpus.size();
  std::vector<BrandtExtension> ext;
  std::vector<FiniteTopology> tau_b;
  for (const auto& a : corpus) {
    ext.push_back(functor_obj(a));
    tau_b.push_back(extension_topology(ext.back(), a.tau, BaseMode::FiniteBase));
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::string name = "fullness:" + object_label(corpus[i]) + "->" + object_label(corpus[j]);
      const TpcbObject& t = corpus[j];
      const bool b_star = has_B_star_property(t.s, std::max<std::size_t>(corpus[i].lambda, 2)).holds;
      if (!t.central_idempotents || !b_star || !t.semiregular) {
        std::string reason = "target outside the admissible class:";
        if (!t.central_idempotents) reason += " idempotents not central;";
        if (!b_star) reason += " B*-property fails;";
        if (!t.semiregular) reason += " not semiregular;";
        report.skip(name, reason);
        continue;
      }
      const auto morphisms = enumerate_morphisms(corpus[i], t);
      std::set<HomMap> images;
      for (const auto& m : morphisms) images.insert(functor_mor(ext[i], ext[j], m));
      const auto homs = enumerate_homs(ext[i].semigroup(), ext[j].semigroup(),
                                       {.zero_preserving = true, .source_topology = &tau_b[i], .target_topology = &tau_b[j]});
      const auto base_homs = enumerate_homs(corpus[i].s, t.s, {.zero_preserving = true});

      std::size_t nontrivial = 0;
      std::string witness;
      for (const HomMap& sigma : homs) {
        if (is_annihilating(ext[j].semigroup(), sigma)) continue;
        ++nontrivial;
        if (!witness.empty()) continue;
        if (!images.count(sigma)) {
          witness = "hom not in the image of the functor";
          continue;
        }
        const auto d = decompose(ext[i], ext[j], sigma, &base_homs);
        if (!d || sigma_construct(ext[i], ext[j], *d) != sigma) witness = "hom does not decompose";
      }
      const std::set<HomMap> direct(homs.begin(), homs.end());
      for (const HomMap& img : images)
        if (!direct.count(img) && witness.empty()) witness = "functor image is not a continuous hom";
      report.add(name, witness.empty(), witness,
                 std::to_string(nontrivial) + " non-annihilating homs, " + std::to_string(morphisms.size()) +
                     " morphisms");
    }
  report.add("representative", true, {}, "every corpus extension is the image of its defining pair by construction");
  return report;
}

}  // namespace brandt
