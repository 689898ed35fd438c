#include "grodiag/finab.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "grodiag/snf.hpp"

namespace grodiag {

FinAbObject FinAbObject::from_factors(std::vector<std::pair<std::int64_t, int>> factors) {
  for (const auto& [p, k] : factors) {
    if (!is_prime(p)) fail(Errc::input, "factor base " + std::to_string(p) + " is not prime");
    if (k < 1) fail(Errc::input, "factor exponent must be >= 1");
    std::int64_t order = 1;
    for (int i = 0; i < k; ++i) {
      order *= p;
      if (order >= (std::int64_t(1) << 31))
        fail(Errc::input, "factor order p^k exceeds the supported range");
    }
  }
  std::sort(factors.begin(), factors.end());
  FinAbObject obj;
  obj.factors = std::move(factors);
  return obj;
}

std::int64_t FinAbObject::factor_order(std::size_t i) const {
  std::int64_t order = 1;
  for (int j = 0; j < factors[i].second; ++j) order *= factors[i].first;
  return order;
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

} // namespace

FinAbMorphism FinAbMorphism::make(FinAbObject source, FinAbObject target,
                                  std::vector<std::vector<std::int64_t>> entries) {
  const std::size_t rows = target.generator_count();
  const std::size_t cols = source.generator_count();
  if (entries.size() != rows)
    fail(Errc::input, "morphism has " + std::to_string(entries.size()) + " rows, target has " +
                          std::to_string(rows) + " generators");
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols)
      fail(Errc::input, "morphism row " + std::to_string(i) + " has " +
                            std::to_string(entries[i].size()) + " columns, source has " +
                            std::to_string(cols) + " generators");
    const std::int64_t ti = target.factor_order(i);
    for (std::size_t j = 0; j < cols; ++j) entries[i][j] = mod_reduce(entries[i][j], ti);
  }
  // well-definedness: order(source_j) * column_j == 0 in the target
  for (std::size_t j = 0; j < cols; ++j) {
    const std::int64_t sj = source.factor_order(j);
    for (std::size_t i = 0; i < rows; ++i) {
      const std::int64_t ti = target.factor_order(i);
      if ((static_cast<__int128>(sj) * entries[i][j]) % ti != 0)
        fail(Errc::input, "ill-defined morphism: generator " + std::to_string(j) + " of order " +
                              std::to_string(sj) + " maps to an element of larger order");
    }
  }
  FinAbMorphism f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.entries = std::move(entries);
  return f;
}

FinAbMorphism FinAbMorphism::identity(const FinAbObject& obj) {
  const std::size_t n = obj.generator_count();
  std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) e[i][i] = 1;
  return make(obj, obj, std::move(e));
}

FinAbMorphism FinAbMorphism::zero(const FinAbObject& source, const FinAbObject& target) {
  std::vector<std::vector<std::int64_t>> e(target.generator_count(),
                                           std::vector<std::int64_t>(source.generator_count(), 0));
  return make(source, target, std::move(e));
}

FinAbMorphism compose(const FinAbMorphism& g, const FinAbMorphism& f) {
  if (!(g.source == f.target))
    fail(Errc::composition, "composition endpoints do not match");
  const std::size_t rows = g.target.generator_count();
  const std::size_t mid = f.target.generator_count();
  const std::size_t cols = f.source.generator_count();
  std::vector<std::vector<std::int64_t>> e(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    const std::int64_t ti = g.target.factor_order(i);
    for (std::size_t j = 0; j < cols; ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < mid; ++k)
        acc += static_cast<__int128>(g.entries[i][k]) * f.entries[k][j] % ti;
      e[i][j] = static_cast<std::int64_t>(acc % ti);
    }
  }
  return FinAbMorphism::make(f.source, g.target, std::move(e));
}

GroupElement classify(const FinAbObject& obj) {
  std::vector<GroupElement::Term> terms;
  for (const auto& [p, k] : obj.factors) terms.emplace_back(GeneratorKey::prime(p), k);
  return GroupElement::from_terms(Backend::finab, std::move(terms));
}

namespace {

// Class of Z/d for d >= 1, factored over the given candidate primes. d
// divides the target order, so the candidates always suffice.
void classify_cyclic(BigInt d, const std::vector<std::int64_t>& primes,
                     std::vector<GroupElement::Term>& out) {
  for (std::int64_t p : primes) {
    int k = 0;
    while (d % p == 0) {
      d /= p;
      ++k;
    }
    if (k > 0) out.emplace_back(GeneratorKey::prime(p), k);
  }
  if (d != 1) fail(Errc::domain, "image order not supported by target primes");
}

} // namespace

GroupElement image_class(const FinAbMorphism& f) {
  const std::size_t t = f.target.generator_count();
  const std::size_t s = f.source.generator_count();
  if (t == 0) return GroupElement::zero(Backend::finab);

  // Lattice spanned by the image columns together with the target
  // relations diag(orders); the image subgroup is that lattice modulo the
  // relations.
  ZMat a(t, s + t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < s; ++j) a.at(i, j) = f.entries[i][j];
    a.at(i, s + i) = f.target.factor_order(i);
  }
  SmithResult snf = smith_normal_form(a);

  // Basis of the lattice: columns of u_inv * diag(d). Expressing the
  // relation lattice in that basis gives x[i][j] = u[i][j] * order_j / d_i,
  // integral because the relations sit inside the lattice.
  ZMat x(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    const BigInt& di = snf.d.at(i, i);
    for (std::size_t j = 0; j < t; ++j) {
      BigInt num = snf.u.at(i, j) * f.target.factor_order(j);
      if (num % di != 0) fail(Errc::domain, "internal: relation lattice not contained in image lattice");
      x.at(i, j) = num / di;
    }
  }
  SmithResult quot = smith_normal_form(x);

  std::vector<std::int64_t> primes;
  for (const auto& [p, k] : f.target.factors) {
    (void)k;
    if (primes.empty() || primes.back() != p) primes.push_back(p);
  }

  std::vector<GroupElement::Term> terms;
  for (std::size_t i = 0; i < t; ++i) classify_cyclic(quot.d.at(i, i), primes, terms);
  return GroupElement::from_terms(Backend::finab, std::move(terms));
}

} // namespace grodiag
