#include "shrinkca/gf2field.hpp"

#include <stdexcept>
#include <string>

namespace shrinkca {

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.context() != b.context()) {
    throw std::invalid_argument("field elements from different contexts");
  }
}

// Polynomial with GF(2^r) coefficients, ascending.
using FieldPoly = std::vector<FieldElement>;

FieldPoly multiply_by_linear(const FieldPoly& f, const FieldElement& root) {
  // f * (x + root)
  FieldPoly out(f.size() + 1, FieldElement::zero(root.context()));
  for (std::size_t i = 0; i < f.size(); ++i) {
    out[i + 1] = out[i + 1] + f[i];
    out[i] = out[i] + f[i] * root;
  }
  return out;
}

}  // namespace

FieldContext::FieldContext(Gf2Poly modulus, bool primitive)
    : modulus_(std::move(modulus)),
      degree_(modulus_.degree()),
      order_((std::uint64_t{1} << degree_) - 1),
      primitive_(primitive) {}

FieldContextPtr FieldContext::create(const Gf2Poly& modulus) {
  const int r = modulus.degree();
  if (r < 1 || r > 32) throw std::invalid_argument("field modulus degree must be in [1, 32]");
  if (!is_irreducible(modulus)) {
    throw std::invalid_argument("field modulus " + modulus.to_human() + " is reducible");
  }
  return FieldContextPtr(new FieldContext(modulus, is_primitive(modulus)));
}

FieldElement::FieldElement(FieldContextPtr ctx, const Gf2Poly& rep)
    : ctx_(std::move(ctx)), rep_(poly_rem(rep, ctx_->modulus())) {}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.ctx_, a.rep_ + b.rep_};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.ctx_, poly_mul(a.rep_, b.rep_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.ctx_ == b.ctx_ && a.rep_ == b.rep_;
}

FieldElement FieldElement::pow(std::uint64_t k) const {
  return {ctx_, poly_powmod(rep_, k, ctx_->modulus())};
}

bool FieldElement::trace() const {
  FieldElement conj = *this;
  FieldElement sum = zero(ctx_);
  for (int j = 0; j < ctx_->degree(); ++j) {
    sum = sum + conj;
    conj = conj.square();
  }
  if (sum.rep_.degree() > 0) throw std::logic_error("trace left the prime field");
  return sum.is_one();
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t n, std::uint64_t order) {
  if (order == 0) throw std::invalid_argument("coset modulus must be positive");
  std::vector<std::uint64_t> coset;
  std::uint64_t e = n % order;
  do {
    coset.push_back(e);
    e = (e * 2) % order;
  } while (e != coset.front());
  return coset;
}

Gf2Poly minimal_polynomial_of_power(const Gf2Poly& p2, std::uint64_t n) {
  if (p2.degree() < 1 || !is_primitive(p2)) {
    throw std::invalid_argument("minimal polynomial requires a primitive polynomial, got " +
                                p2.to_human());
  }
  auto ctx = FieldContext::create(p2);
  if (n < 1 || n >= ctx->order()) {
    throw std::invalid_argument("power " + std::to_string(n) + " outside [1, " +
                                std::to_string(ctx->order()) + ")");
  }
  const auto alpha = FieldElement::alpha(ctx);
  FieldPoly acc{FieldElement::one(ctx)};
  for (auto e : cyclotomic_coset(n, ctx->order())) {
    acc = multiply_by_linear(acc, alpha.pow(e));
  }
  Gf2Poly out;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i].rep().degree() > 0) {
      throw std::logic_error("minimal polynomial coefficient outside GF(2)");
    }
    if (acc[i].is_one()) out.set_coeff(i, true);
  }
  return out;
}

bool evaluate_solution(const FieldContextPtr& ctx, std::size_t multiplicity,
                       std::span<const FieldElement> amplitudes, std::uint64_t n) {
  if (amplitudes.size() != multiplicity) {
    throw std::invalid_argument("expected " + std::to_string(multiplicity) + " amplitudes, got " +
                                std::to_string(amplitudes.size()));
  }
  if (multiplicity == 0) throw std::invalid_argument("multiplicity must be at least 1");
  if (!ctx->primitive_modulus()) throw std::invalid_argument("solution form needs a primitive modulus");
  const auto alpha_n = FieldElement::alpha(ctx).pow(n % ctx->order());
  bool bit = false;
  for (std::size_t m = 0; m < multiplicity; ++m) {
    if (amplitudes[m].context() != ctx) throw std::invalid_argument("amplitude from another field");
    if (!binomial_parity(n, m)) continue;
    bit ^= (amplitudes[m] * alpha_n).trace();
  }
  return bit;
}

}  // namespace shrinkca
