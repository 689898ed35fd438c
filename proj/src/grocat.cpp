#include "grodiag/grocat.hpp"

#include <algorithm>
#include <sstream>

namespace grodiag {

std::string backend_name(Backend b) { return b == Backend::vect ? "vect" : "finab"; }

Backend backend_from_name(const std::string& name) {
  if (name == "vect") return Backend::vect;
  if (name == "finab") return Backend::finab;
  fail(Errc::input, "unknown backend '" + name + "' (expected \"vect\" or \"finab\")");
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

GeneratorKey GeneratorKey::prime(std::int64_t p) {
  if (!is_prime(p)) fail(Errc::input, "generator key " + std::to_string(p) + " is not prime");
  return GeneratorKey(p);
}

std::int64_t GeneratorKey::prime_value() const {
  if (is_dim()) fail(Errc::domain, "dim generator has no prime value");
  return p_;
}

GroupElement GroupElement::single(GeneratorKey k, std::int64_t c) {
  GroupElement e(k.backend());
  if (c != 0) e.terms_.emplace_back(k, c);
  return e;
}

GroupElement GroupElement::from_terms(Backend b, std::vector<Term> terms) {
  for (const auto& [k, c] : terms) {
    (void)c;
    if (k.backend() != b)
      fail(Errc::backend_mismatch, "generator key does not belong to backend " + backend_name(b));
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  GroupElement e(b);
  for (const auto& [k, c] : terms) {
    if (!e.terms_.empty() && e.terms_.back().first == k)
      e.terms_.back().second += c;
    else
      e.terms_.emplace_back(k, c);
  }
  std::erase_if(e.terms_, [](const Term& t) { return t.second == 0; });
  return e;
}

std::int64_t GroupElement::coeff(const GeneratorKey& k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, const GeneratorKey& key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) return it->second;
  return 0;
}

namespace {

void require_same_backend(const GroupElement& a, const GroupElement& b) {
  if (a.backend() != b.backend())
    fail(Errc::backend_mismatch, "cannot combine " + backend_name(a.backend()) + " and " +
                                     backend_name(b.backend()) + " elements");
}

} // namespace

GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_backend(a, b);
  std::vector<GroupElement::Term> merged;
  merged.reserve(a.terms().size() + b.terms().size());
  merged.insert(merged.end(), a.terms().begin(), a.terms().end());
  merged.insert(merged.end(), b.terms().begin(), b.terms().end());
  return GroupElement::from_terms(a.backend(), std::move(merged));
}

GroupElement negate(const GroupElement& a) {
  std::vector<GroupElement::Term> terms = a.terms();
  for (auto& [k, c] : terms) {
    (void)k;
    c = -c;
  }
  return GroupElement::from_terms(a.backend(), std::move(terms));
}

GroupElement subtract(const GroupElement& a, const GroupElement& b) { return add(a, negate(b)); }

bool partial_leq(const GroupElement& a, const GroupElement& b) {
  require_same_backend(a, b);
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
      if (ia->second > 0) return false; // b has coefficient 0 here
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      if (ib->second < 0) return false; // a has coefficient 0 here
      ++ib;
    } else {
      if (ia->second > ib->second) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

std::string to_string(const GroupElement& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, c] : a.terms()) {
    if (!first) os << ", ";
    first = false;
    if (k.is_dim())
      os << "dim";
    else
      os << k.prime_value();
    os << ": " << c;
  }
  os << '}';
  return os.str();
}

} // namespace grodiag
