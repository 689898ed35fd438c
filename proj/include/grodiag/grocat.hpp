#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grodiag/error.hpp"

namespace grodiag {

// The two concrete value groups: Z (finite dimensional vector spaces, one
// generator `dim`) and the direct sum of one copy of Z per prime (finite
// abelian groups, one generator per prime p).
enum class Backend : std::uint8_t { vect, finab };

std::string backend_name(Backend b);
Backend backend_from_name(const std::string& name);

bool is_prime(std::int64_t n);

// One generator of the value group. `dim` sorts before every prime key.
class GeneratorKey {
public:
  static GeneratorKey dim() { return GeneratorKey(0); }
  static GeneratorKey prime(std::int64_t p);

  bool is_dim() const { return p_ == 0; }
  std::int64_t prime_value() const;
  Backend backend() const { return p_ == 0 ? Backend::vect : Backend::finab; }

  friend auto operator<=>(const GeneratorKey&, const GeneratorKey&) = default;

private:
  explicit GeneratorKey(std::int64_t p) : p_(p) {}
  std::int64_t p_; // 0 encodes dim
};

// Finitely supported integer combination of generators, kept canonical:
// terms sorted by key, no zero coefficients, all keys from one backend.
class GroupElement {
public:
  using Term = std::pair<GeneratorKey, std::int64_t>;

  static GroupElement zero(Backend b) { return GroupElement(b); }
  static GroupElement single(GeneratorKey k, std::int64_t c);
  // Canonicalizes: sorts, merges duplicate keys, drops zeros.
  static GroupElement from_terms(Backend b, std::vector<Term> terms);

  Backend backend() const { return backend_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::int64_t coeff(const GeneratorKey& k) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
  explicit GroupElement(Backend b) : backend_(b) {}
  Backend backend_;
  std::vector<Term> terms_;
};

GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupElement& a);
GroupElement subtract(const GroupElement& a, const GroupElement& b);

// Componentwise order on coefficients (missing key = 0). Partial: returns
// false when some coefficient of a exceeds b's.
bool partial_leq(const GroupElement& a, const GroupElement& b);

inline GroupElement operator+(const GroupElement& a, const GroupElement& b) { return add(a, b); }
inline GroupElement operator-(const GroupElement& a, const GroupElement& b) { return subtract(a, b); }
inline GroupElement operator-(const GroupElement& a) { return negate(a); }

std::string to_string(const GroupElement& a);

} // namespace grodiag
