#ifndef SHRINKCA_GF2POLY_HPP
#define SHRINKCA_GF2POLY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shrinkca {

/// Polynomial over GF(2), coefficients packed ascending (bit i of the packed
/// words is the coefficient of x^i). Always kept in canonical form: no zero
/// words above the leading term, so equality is word equality.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly zero() { return {}; }
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly monomial(std::size_t k);
  /// Low 64 coefficients given as a mask; bit i is x^i.
  static Gf2Poly from_mask(std::uint64_t mask);

  /// Accepts "101001" (ascending bits) or "1+x^2+x^5" (duplicate terms cancel).
  static Gf2Poly parse(std::string_view text);

  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool coeff(std::size_t i) const;
  void set_coeff(std::size_t i, bool value);
  std::size_t weight() const;

  /// Low 64 coefficients as a mask. Throws if degree >= 64.
  std::uint64_t to_mask() const;

  /// Canonical ascending bit string; "0" for the zero polynomial.
  std::string to_bits() const;
  /// "1+x^2+x^5" style; "0" for the zero polynomial.
  std::string to_human() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  Gf2Poly& operator+=(const Gf2Poly& other);
  /// Adds other * x^shift in place.
  void add_shifted(const Gf2Poly& other, std::size_t shift);

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

Gf2Poly poly_add(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b);

struct Gf2DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

/// Throws std::domain_error for a zero divisor.
Gf2DivMod poly_divmod(const Gf2Poly& a, const Gf2Poly& m);
Gf2Poly poly_rem(const Gf2Poly& a, const Gf2Poly& m);
Gf2Poly poly_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m);
Gf2Poly poly_powmod(const Gf2Poly& base, std::uint64_t k, const Gf2Poly& m);
Gf2Poly poly_pow(const Gf2Poly& base, std::uint64_t k);
Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b);

/// x^n * p(1/x). n must be >= degree(p).
Gf2Poly poly_reciprocal(const Gf2Poly& p, int n);

inline Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) { return poly_add(a, b); }
inline Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) { return poly_mul(a, b); }

/// Ben-Or test: gcd(x^(2^i) - x mod p, p) = 1 for i = 1..deg/2.
/// Throws std::invalid_argument for constant polynomials.
bool is_irreducible(const Gf2Poly& p);
/// Trial division by every polynomial of degree <= deg/2. Degree <= 24.
bool is_irreducible_by_trial_division(const Gf2Poly& p);
/// Irreducible and x has order 2^r - 1 modulo p. Degree <= 63.
bool is_primitive(const Gf2Poly& p);

/// Distinct prime factors in ascending order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace shrinkca

#endif  // SHRINKCA_GF2POLY_HPP
