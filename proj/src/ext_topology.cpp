#include "brandt/ext_topology.hpp"

#include <sstream>

#include "brandt/error.hpp"

namespace brandt {

namespace {

// Cofinite-mode bases range over every subset of lambda x lambda.
constexpr std::size_t kMaxCofiniteBlocks = 16;

std::string render_set(const FiniteSemigroup& s, const IndexSet& a) {
  std::string out = "{";
  bool first = true;
  a.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += s.name(i);
    first = false;
  });
  return out + "}";
}

std::string pair_name(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

IndexSet lift_everywhere(const BrandtExtension& ext, const IndexSet& u) {
  IndexSet out(ext.size());
  for (std::size_t a = 0; a < ext.lambda(); ++a)
    for (std::size_t b = 0; b < ext.lambda(); ++b) out |= ext.lift(u, a, b);
  return out;
}

void require_same_carrier(const BrandtExtension& ext, const FiniteTopology& tau) {
  if (tau.size() != ext.base().size())
    throw Error(ErrorKind::CarrierMismatch, "topology is not over the base semigroup");
}

}  // namespace

std::string_view to_string(BaseMode mode) {
  return mode == BaseMode::FiniteBase ? "finite_base" : "cofinite_base";
}

BaseMode parse_base_mode(std::string_view text) {
  if (text == "finite_base") return BaseMode::FiniteBase;
  if (text == "cofinite_base") return BaseMode::CofiniteBase;
  throw Error(ErrorKind::Parse, "unknown base mode '" + std::string(text) + "'");
}

std::string_view to_string(ClassFilter filter) {
  return filter == ClassFilter::HausdorffSemitop ? "hausdorff_semitop" : "semitop";
}

std::vector<IndexSet> extension_base(const BrandtExtension& ext, const FiniteTopology& tau, BaseMode mode) {
  require_same_carrier(ext, tau);
  const FiniteSemigroup& s = ext.base();
  const Index zero = s.require_zero();
  const std::size_t lambda = ext.lambda();
  std::vector<IndexSet> base;

  for (Index x = 0; x < s.size(); ++x) {
    if (x == zero) continue;
    const auto nbhds = tau.open_neighborhoods(x);
    for (std::size_t a = 0; a < lambda; ++a)
      for (std::size_t b = 0; b < lambda; ++b)
        for (const auto& u : nbhds) base.push_back(ext.lift(u, a, b, /*starred=*/true));
  }

  const auto zero_nbhds = tau.open_neighborhoods(zero);
  if (mode == BaseMode::FiniteBase) {
    for (const auto& u : zero_nbhds) base.push_back(lift_everywhere(ext, u));
    return base;
  }

  const std::size_t blocks = lambda * lambda;
  if (blocks > kMaxCofiniteBlocks)
    throw Error(ErrorKind::CapExceeded, "cofinite_base mode enumerates subsets of lambda x lambda; lambda too large");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << blocks); ++mask)
    for (const auto& u : zero_nbhds) {
      IndexSet w(ext.size());
      for (std::size_t k = 0; k < blocks; ++k) {
        const std::size_t a = k / lambda;
        const std::size_t b = k % lambda;
        w |= ((mask >> k) & 1U) ? ext.lift(u, a, b) : ext.block(a, b);
      }
      base.push_back(std::move(w));
    }
  return base;
}

FiniteTopology extension_topology(const BrandtExtension& ext, const FiniteTopology& tau, BaseMode mode) {
  return generate_from_base(ext.size(), extension_base(ext, tau, mode)).topology;
}

bool restricts_to(const BrandtExtension& ext, const FiniteTopology& tau, const FiniteTopology& tau_b, std::size_t alpha) {
  const auto map = ext.block_map(alpha, alpha);
  const IndexSet block = ext.block(alpha, alpha);
  for (Index s = 0; s < tau.size(); ++s) {
    IndexSet expected(ext.size());
    tau.minimal_open(s).for_each([&](Index y) { expected.set(map[y]); });
    if ((tau_b.minimal_open(map[s]) & block) != expected) return false;
  }
  return true;
}

Report verify_extension(const BrandtExtension& ext, const FiniteTopology& tau, const FiniteTopology& tau_b) {
  require_same_carrier(ext, tau);
  if (tau_b.size() != ext.size()) throw Error(ErrorKind::CarrierMismatch, "candidate topology is not over the extension");

  const FiniteSemigroup& s = ext.base();
  const FiniteSemigroup& b = ext.semigroup();
  const Index zero = s.require_zero();
  const std::size_t lambda = ext.lambda();

  Report report;
  report.title = "extension structure (lambda=" + std::to_string(lambda) + ")";

  const auto semitop = is_semitopological(b, tau_b);
  const auto sep_b = separation(tau_b);
  const auto sep_s = separation(tau);
  bool some_diagonal = false;
  for (std::size_t a = 0; a < lambda; ++a) some_diagonal = some_diagonal || restricts_to(ext, tau, tau_b, a);

  const bool ext_hyp = semitop.holds && some_diagonal;
  const std::string basis_ext = ext_hyp ? "basis=theorem" : "basis=construction (tau_B is not a semitopological extension of tau)";
  const std::string basis_hausdorff = (semitop.holds && sep_b.hausdorff)
                                          ? "basis=theorem"
                                          : "basis=construction (Hausdorff hypothesis absent)";

  // (a) every diagonal block carries tau.
  {
    std::string witness;
    for (std::size_t a = 0; a < lambda && witness.empty(); ++a)
      if (!restricts_to(ext, tau, tau_b, a)) witness = "block " + pair_name(a, a) + " does not carry tau";
    report.add("diagonal_restriction", witness.empty(), witness);
  }

  // (b) S*_{a,b} open and S_{a,b} closed.
  {
    std::string witness;
    for (std::size_t a = 0; a < lambda && witness.empty(); ++a)
      for (std::size_t c = 0; c < lambda && witness.empty(); ++c) {
        if (!tau_b.is_open(ext.block_star(a, c))) witness = "S*" + pair_name(a, c) + " is not open";
        else if (!tau_b.is_closed(ext.block(a, c))) witness = "S" + pair_name(a, c) + " is not closed";
      }
    report.add("blocks_open_closed", witness.empty(), witness, basis_hausdorff);
  }

  // (c) translations between blocks are homeomorphisms; diagonal blocks are isomorphic.
  {
    std::string witness;
    std::string iso_witness;
    for (std::size_t a = 0; a < lambda; ++a)
      for (std::size_t c = 0; c < lambda; ++c)
        for (std::size_t g = 0; g < lambda; ++g)
          for (std::size_t d = 0; d < lambda; ++d) {
            const auto f = ext.translation(a, c, g, d);
            const auto inv = ext.translation(g, d, a, c);
            if (witness.empty() && !is_homeomorphism_between(f, inv, tau_b, ext.block(a, c), ext.block(g, d)))
              witness = "S" + pair_name(a, c) + " -> S" + pair_name(g, d);
            if (a == c && g == d && iso_witness.empty()) {
              const auto diag = ext.block(a, a).members();
              for (Index x : diag)
                for (Index y : diag)
                  if (iso_witness.empty() && f[b.mul(x, y)] != b.mul(f[x], f[y]))
                    iso_witness = "S" + pair_name(a, a) + " -> S" + pair_name(g, g) + " at " + b.name(x) + "," + b.name(y);
            }
          }
    report.add("block_homeomorphisms", witness.empty(), witness, semitop.holds ? "basis=theorem" : basis_ext);
    report.add("diagonal_isomorphisms", iso_witness.empty(), iso_witness);
  }

  // (d) lifting of open / closed sets and local bases, for finite lambda.
  {
    const auto opens = tau.opens();
    std::string w_open_nz, w_open_z, w_closed_nz, w_closed_z;
    for (const auto& u : opens) {
      if (u.empty()) continue;
      if (!u.test(zero)) {
        for (std::size_t a = 0; a < lambda; ++a)
          for (std::size_t c = 0; c < lambda; ++c)
            if (w_open_nz.empty() && !tau_b.is_open(ext.lift(u, a, c)))
              w_open_nz = render_set(s, u) + " lifted to " + pair_name(a, c);
      } else if (w_open_z.empty() && !tau_b.is_open(lift_everywhere(ext, u))) {
        w_open_z = render_set(s, u);
      }
    }
    for (const auto& u : opens) {
      const IndexSet f = u.complement();
      if (f.empty()) continue;
      if (!f.test(zero)) {
        for (std::size_t a = 0; a < lambda; ++a)
          for (std::size_t c = 0; c < lambda; ++c)
            if (w_closed_nz.empty() && !tau_b.is_closed(ext.lift(f, a, c)))
              w_closed_nz = render_set(s, f) + " lifted to " + pair_name(a, c);
      } else if (w_closed_z.empty() && !tau_b.is_closed(lift_everywhere(ext, f))) {
        w_closed_z = render_set(s, f);
      }
    }
    report.add("lift_open_without_zero", w_open_nz.empty(), w_open_nz, basis_ext);
    report.add("lift_open_with_zero", w_open_z.empty(), w_open_z, basis_ext);
    report.add("lift_closed_without_zero", w_closed_nz.empty(), w_closed_nz, basis_ext);
    report.add("lift_closed_with_zero", w_closed_z.empty(), w_closed_z, basis_ext);

    // Local bases: the minimal neighbourhood U(x) is a base of tau at x; its
    // lift must be open and be the minimal neighbourhood of the lifted point.
    std::string w_point, w_zero;
    for (Index x = 0; x < s.size(); ++x) {
      if (x == zero) continue;
      for (std::size_t a = 0; a < lambda; ++a)
        for (std::size_t c = 0; c < lambda; ++c) {
          const IndexSet lifted = ext.lift(tau.minimal_open(x), a, c);
          if (w_point.empty() && (!tau_b.is_open(lifted) || lifted != tau_b.minimal_open(ext.index(a, x, c))))
            w_point = ext.render(ext.index(a, x, c));
        }
    }
    const IndexSet zero_lift = lift_everywhere(ext, tau.minimal_open(zero));
    if (!tau_b.is_open(zero_lift) || zero_lift != tau_b.minimal_open(ext.zero())) w_zero = "0";
    report.add("local_base_nonzero", w_point.empty(), w_point, basis_ext);
    report.add("local_base_zero", w_zero.empty(), w_zero, basis_ext);
  }

  // (e) separate continuity.
  {
    std::string witness;
    if (semitop.translation_witness)
      witness = std::string(semitop.translation_witness->second ? "right" : "left") + " translation by " +
                b.name(semitop.translation_witness->first);
    report.add("semitopological", semitop.holds, witness);
  }

  // (f), (g) separation transfer.
  auto transfer = [&](const std::string& name, bool ext_value, bool base_value) {
    std::ostringstream note;
    note << "extension=" << (ext_value ? "true" : "false") << " base=" << (base_value ? "true" : "false");
    report.add(name, ext_value == base_value, note.str(), note.str());
  };
  transfer("hausdorff_transfer", sep_b.hausdorff, sep_s.hausdorff);
  transfer("regular_transfer", sep_b.regular, sep_s.regular);
  transfer("normal_transfer", sep_b.normal, sep_s.normal);
  return report;
}

UniquenessResult uniqueness_search(const BrandtExtension& ext,
                                   const FiniteTopology& tau,
                                   ClassFilter filter,
                                   std::size_t cap) {
  require_same_carrier(ext, tau);
  UniquenessResult result;
  TopologyEnumerator topologies(ext.size(), cap);
  while (auto t = topologies.next()) {
    ++result.enumerated;
    if (filter == ClassFilter::HausdorffSemitop && !separation(*t).hausdorff) continue;
    bool restricts = false;
    for (std::size_t a = 0; a < ext.lambda() && !restricts; ++a) restricts = restricts_to(ext, tau, *t, a);
    if (!restricts) continue;
    if (!is_semitopological(ext.semigroup(), *t).holds) continue;
    result.survivors.push_back(std::move(*t));
  }
  return result;
}

}  // namespace brandt
