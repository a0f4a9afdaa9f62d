#ifndef SHRINKCA_GF2FIELD_HPP
#define SHRINKCA_GF2FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "shrinkca/gf2poly.hpp"

namespace shrinkca {

/// GF(2^r) realized as GF(2)[x] / (modulus). The class of x is the
/// distinguished root alpha of the modulus.
class FieldContext {
 public:
  /// Throws std::invalid_argument unless modulus is irreducible with 1 <= r <= 32.
  static std::shared_ptr<const FieldContext> create(const Gf2Poly& modulus);

  const Gf2Poly& modulus() const { return modulus_; }
  int degree() const { return degree_; }
  /// 2^r - 1, the order of the multiplicative group.
  std::uint64_t order() const { return order_; }
  bool primitive_modulus() const { return primitive_; }

 private:
  FieldContext(Gf2Poly modulus, bool primitive);

  Gf2Poly modulus_;
  int degree_;
  std::uint64_t order_;
  bool primitive_;
};

using FieldContextPtr = std::shared_ptr<const FieldContext>;

class FieldElement {
 public:
  /// rep is reduced modulo the context's modulus.
  FieldElement(FieldContextPtr ctx, const Gf2Poly& rep);

  static FieldElement zero(FieldContextPtr ctx) { return {std::move(ctx), Gf2Poly{}}; }
  static FieldElement one(FieldContextPtr ctx) { return {std::move(ctx), Gf2Poly::one()}; }
  /// The class of x.
  static FieldElement alpha(FieldContextPtr ctx) { return {std::move(ctx), Gf2Poly::monomial(1)}; }

  const Gf2Poly& rep() const { return rep_; }
  const FieldContextPtr& context() const { return ctx_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const { return rep_ == Gf2Poly::one(); }

  FieldElement pow(std::uint64_t k) const;
  FieldElement square() const { return *this * *this; }
  /// Sum of the r conjugates a^(2^j); always 0 or 1.
  bool trace() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldContextPtr ctx_;
  Gf2Poly rep_;
};

/// {N * 2^j mod order}, in doubling order starting at N.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t n, std::uint64_t order);

/// prod over e in coset(N) of (x + alpha^e), alpha a root of the primitive p2.
/// Requires 1 <= N < 2^deg(p2) - 1.
Gf2Poly minimal_polynomial_of_power(const Gf2Poly& p2, std::uint64_t n);

/// Parity of C(n, m), by Lucas: odd iff the bits of m are a subset of those of n.
constexpr bool binomial_parity(std::uint64_t n, std::uint64_t m) { return (n & m) == m; }

/// a_n = sum_{m<p} C(n,m) * Tr(A_m alpha^n), the general solution of
/// P(E)^p a = 0 where P is the (primitive) modulus of ctx. Throws when
/// amplitudes.size() != multiplicity.
bool evaluate_solution(const FieldContextPtr& ctx, std::size_t multiplicity,
                       std::span<const FieldElement> amplitudes, std::uint64_t n);

}  // namespace shrinkca

#endif  // SHRINKCA_GF2FIELD_HPP
