#include "brandt/extension.hpp"

#include <limits>

#include "brandt/error.hpp"

namespace brandt {

namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

std::string block_name(std::size_t alpha, const std::string& s, std::size_t beta) {
  return "(" + std::to_string(alpha + 1) + "," + s + "," + std::to_string(beta + 1) + ")";
}

}  // namespace

BrandtExtension::BrandtExtension(FiniteSemigroup base, std::size_t lambda)
    : base_(std::move(base)),
      lambda_(lambda),
      base_zero_(base_.require_zero()),
      base_one_(base_.require_one()),
      ext_(base_) {
  if (lambda_ == 0) throw Error(ErrorKind::ShapeMismatch, "lambda must be at least 1");

  rank_in_nonzero_.assign(base_.size(), kNone);
  for (Index s = 0; s < base_.size(); ++s)
    if (s != base_zero_) {
      rank_in_nonzero_[s] = nonzero_.size();
      nonzero_.push_back(s);
    }

  labels_.push_back(BrandtLabel::zero());
  std::vector<std::string> names{"0"};
  for (std::size_t a = 0; a < lambda_; ++a)
    for (Index s : nonzero_)
      for (std::size_t b = 0; b < lambda_; ++b) {
        labels_.push_back(BrandtLabel::triple(a, s, b));
        names.push_back(block_name(a, base_.name(s), b));
      }

  const std::size_t n = labels_.size();
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n, 0));
  for (Index i = 1; i < n; ++i)
    for (Index j = 1; j < n; ++j) {
      const auto& x = labels_[i];
      const auto& y = labels_[j];
      if (x.beta == y.alpha) table[i][j] = index(x.alpha, base_.mul(x.element, y.element), y.beta);
    }
  std::optional<Index> one;
  if (lambda_ == 1 && base_one_ != base_zero_) one = index(0, base_one_, 0);
  ext_ = FiniteSemigroup::validate(std::move(names), table, Index{0}, one);
}

Index BrandtExtension::index(std::size_t alpha, Index s, std::size_t beta) const {
  if (alpha >= lambda_ || beta >= lambda_ || s >= base_.size())
    throw Error(ErrorKind::IndexOutOfRange, "Brandt label out of range", {alpha, s, beta});
  if (s == base_zero_) return 0;
  const std::size_t k = nonzero_.size();
  return 1 + (alpha * k + rank_in_nonzero_[s]) * lambda_ + beta;
}

Index BrandtExtension::index(const BrandtLabel& label) const {
  return label.is_zero ? 0 : index(label.alpha, label.element, label.beta);
}

IndexSet BrandtExtension::block(std::size_t alpha, std::size_t beta) const {
  IndexSet out = block_star(alpha, beta);
  out.set(0);
  return out;
}

IndexSet BrandtExtension::block_star(std::size_t alpha, std::size_t beta) const {
  IndexSet out(size());
  for (Index s : nonzero_) out.set(index(alpha, s, beta));
  return out;
}

IndexSet BrandtExtension::lift(const IndexSet& subset, std::size_t alpha, std::size_t beta, bool starred) const {
  if (subset.universe() != base_.size()) throw Error(ErrorKind::CarrierMismatch, "subset is not over the base semigroup");
  IndexSet out(size());
  subset.for_each([&](Index s) {
    if (s != base_zero_) out.set(index(alpha, s, beta));
  });
  if (subset.test(base_zero_) && !starred) out.set(0);
  return out;
}

std::vector<Index> BrandtExtension::block_map(std::size_t alpha, std::size_t beta) const {
  std::vector<Index> out(base_.size());
  for (Index s = 0; s < base_.size(); ++s) out[s] = index(alpha, s, beta);
  return out;
}

std::vector<Index> BrandtExtension::translation(std::size_t alpha,
                                                std::size_t beta,
                                                std::size_t gamma,
                                                std::size_t delta) const {
  const Index left = index(gamma, base_one_, alpha);
  const Index right = index(beta, base_one_, delta);
  std::vector<Index> out(size());
  for (Index x = 0; x < size(); ++x) out[x] = ext_.mul(ext_.mul(left, x), right);
  return out;
}

BrandtExtension brandt_lambda_extension(const FiniteSemigroup& s, std::size_t lambda) {
  return BrandtExtension(s, lambda);
}

FullBrandtExtension brandt_full_extension(const FiniteSemigroup& s, std::size_t lambda) {
  const Index zero = s.require_zero();
  s.require_one();
  if (lambda == 0) throw Error(ErrorKind::ShapeMismatch, "lambda must be at least 1");
  const std::size_t m = s.size();
  const std::size_t n = 1 + lambda * m * lambda;
  auto idx = [&](std::size_t a, Index x, std::size_t b) { return 1 + (a * m + x) * lambda + b; };

  std::vector<std::string> names{"0"};
  for (std::size_t a = 0; a < lambda; ++a)
    for (Index x = 0; x < m; ++x)
      for (std::size_t b = 0; b < lambda; ++b) names.push_back(block_name(a, s.name(x), b));

  std::vector<std::vector<Index>> table(n, std::vector<Index>(n, 0));
  for (std::size_t a = 0; a < lambda; ++a)
    for (Index x = 0; x < m; ++x)
      for (std::size_t b = 0; b < lambda; ++b)
        for (Index y = 0; y < m; ++y)
          for (std::size_t d = 0; d < lambda; ++d) table[idx(a, x, b)][idx(b, y, d)] = idx(a, s.mul(x, y), d);

  IndexSet ideal(n);
  ideal.set(0);
  for (std::size_t a = 0; a < lambda; ++a)
    for (std::size_t b = 0; b < lambda; ++b) ideal.set(idx(a, zero, b));
  return {FiniteSemigroup::validate(std::move(names), table, Index{0}), ideal};
}

ReesQuotient rees_quotient(const FiniteSemigroup& s, const IndexSet& ideal) {
  if (ideal.universe() != s.size() || ideal.empty())
    throw Error(ErrorKind::NotAnIdeal, "ideal must be a non-empty subset of the carrier");
  if (auto w = ideal_violation(s, ideal))
    throw Error(ErrorKind::NotAnIdeal, "subset is not a two-sided ideal", {w->first, w->second});

  const Index representative = ideal.members().front();
  std::vector<Index> projection(s.size(), kNone);
  std::vector<std::string> names;
  for (Index x = 0; x < s.size(); ++x) {
    if (ideal.test(x) && x != representative) continue;
    projection[x] = names.size();
    names.push_back(s.name(x));
  }
  for (Index x = 0; x < s.size(); ++x)
    if (ideal.test(x)) projection[x] = projection[representative];

  const std::size_t n = names.size();
  const Index zero = projection[representative];
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n, zero));
  for (Index x = 0; x < s.size(); ++x)
    for (Index y = 0; y < s.size(); ++y) table[projection[x]][projection[y]] = projection[s.mul(x, y)];

  std::optional<Index> one;
  if (s.one() && !ideal.test(*s.one())) one = projection[*s.one()];
  return {FiniteSemigroup::validate(std::move(names), table, zero, one), projection};
}

}  // namespace brandt
