#include "shrinkca/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace shrinkca {

namespace {

constexpr std::size_t kWordBits = 64;

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_term(std::string_view term, std::string_view whole) {
  term = strip(term);
  auto fail = [&]() -> std::size_t {
    throw std::invalid_argument("malformed polynomial '" + std::string(whole) + "'");
  };
  if (term == "1") return 0;
  if (term == "x") return 1;
  if (term.size() < 3 || term[0] != 'x' || term[1] != '^') return fail();
  std::size_t k = 0;
  auto digits = term.substr(2);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return fail();
  if (k > (1u << 20)) throw std::invalid_argument("polynomial exponent too large");
  return k;
}

}  // namespace

Gf2Poly Gf2Poly::monomial(std::size_t k) {
  Gf2Poly p;
  p.set_coeff(k, true);
  return p;
}

Gf2Poly Gf2Poly::from_mask(std::uint64_t mask) {
  Gf2Poly p;
  if (mask != 0) p.words_.push_back(mask);
  return p;
}

Gf2Poly Gf2Poly::parse(std::string_view text) {
  auto body = strip(text);
  if (body.empty()) throw std::invalid_argument("empty polynomial");
  Gf2Poly p;
  if (body.find_first_not_of("01") == std::string_view::npos) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '1') p.set_coeff(i, true);
    }
    return p;
  }
  std::size_t start = 0;
  while (true) {
    auto plus = body.find('+', start);
    auto term = body.substr(start, plus == std::string_view::npos ? body.npos : plus - start);
    auto k = parse_term(term, text);
    p.set_coeff(k, !p.coeff(k));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return p;
}

int Gf2Poly::degree() const {
  if (words_.empty()) return -1;
  auto top = words_.back();
  return static_cast<int>((words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(top)));
}

bool Gf2Poly::coeff(std::size_t i) const {
  auto w = i / kWordBits;
  if (w >= words_.size()) return false;
  return (words_[w] >> (i % kWordBits)) & 1u;
}

void Gf2Poly::set_coeff(std::size_t i, bool value) {
  auto w = i / kWordBits;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  auto bit = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[w] |= bit;
  } else {
    words_[w] &= ~bit;
    trim();
  }
}

std::size_t Gf2Poly::weight() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::uint64_t Gf2Poly::to_mask() const {
  if (words_.size() > 1) throw std::out_of_range("polynomial does not fit in 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::string Gf2Poly::to_bits() const {
  if (is_zero()) return "0";
  std::string out(static_cast<std::size_t>(degree()) + 1, '0');
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (coeff(i)) out[i] = '1';
  }
  return out;
}

std::string Gf2Poly::to_human() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (!coeff(static_cast<std::size_t>(i))) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += '1';
    } else if (i == 1) {
      out += 'x';
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

void Gf2Poly::add_shifted(const Gf2Poly& other, std::size_t shift) {
  if (other.is_zero()) return;
  auto word_shift = shift / kWordBits;
  auto bit_shift = shift % kWordBits;
  auto needed = other.words_.size() + word_shift + 1;
  if (words_.size() < needed) words_.resize(needed, 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    auto w = other.words_[i];
    words_[i + word_shift] ^= w << bit_shift;
    if (bit_shift != 0) words_[i + word_shift + 1] ^= w >> (kWordBits - bit_shift);
  }
  trim();
}

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly poly_add(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly r = a;
  r += b;
  return r;
}

Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b) {
  const Gf2Poly& small = a.weight() <= b.weight() ? a : b;
  const Gf2Poly& big = &small == &a ? b : a;
  Gf2Poly r;
  const auto& words = small.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    auto bits = words[w];
    while (bits != 0) {
      auto j = static_cast<std::size_t>(std::countr_zero(bits));
      r.add_shifted(big, w * kWordBits + j);
      bits &= bits - 1;
    }
  }
  return r;
}

Gf2DivMod poly_divmod(const Gf2Poly& a, const Gf2Poly& m) {
  if (m.is_zero()) throw std::domain_error("division by the zero polynomial");
  Gf2DivMod out{Gf2Poly{}, a};
  const int dm = m.degree();
  for (int d = out.remainder.degree(); d >= dm; d = out.remainder.degree()) {
    auto shift = static_cast<std::size_t>(d - dm);
    out.quotient.set_coeff(shift, true);
    out.remainder.add_shifted(m, shift);
  }
  return out;
}

Gf2Poly poly_rem(const Gf2Poly& a, const Gf2Poly& m) {
  if (m.is_zero()) throw std::domain_error("division by the zero polynomial");
  Gf2Poly r = a;
  const int dm = m.degree();
  for (int d = r.degree(); d >= dm; d = r.degree()) {
    r.add_shifted(m, static_cast<std::size_t>(d - dm));
  }
  return r;
}

Gf2Poly poly_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& m) {
  return poly_rem(poly_mul(a, b), m);
}

Gf2Poly poly_powmod(const Gf2Poly& base, std::uint64_t k, const Gf2Poly& m) {
  if (m.is_zero()) throw std::domain_error("division by the zero polynomial");
  Gf2Poly result = poly_rem(Gf2Poly::one(), m);
  Gf2Poly b = poly_rem(base, m);
  while (k != 0) {
    if (k & 1u) result = poly_mulmod(result, b, m);
    k >>= 1;
    if (k != 0) b = poly_mulmod(b, b, m);
  }
  return result;
}

Gf2Poly poly_pow(const Gf2Poly& base, std::uint64_t k) {
  Gf2Poly result = Gf2Poly::one();
  Gf2Poly b = base;
  while (k != 0) {
    if (k & 1u) result = poly_mul(result, b);
    k >>= 1;
    if (k != 0) b = poly_mul(b, b);
  }
  return result;
}

Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    auto r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly poly_reciprocal(const Gf2Poly& p, int n) {
  if (n < p.degree()) throw std::invalid_argument("reciprocal length below degree");
  Gf2Poly r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(static_cast<std::size_t>(i))) r.set_coeff(static_cast<std::size_t>(n - i), true);
  }
  return r;
}

bool is_irreducible(const Gf2Poly& p) {
  const int r = p.degree();
  if (r < 1) throw std::invalid_argument("irreducibility is undefined for constant polynomials");
  const Gf2Poly x = Gf2Poly::monomial(1);
  Gf2Poly frob = poly_rem(x, p);
  for (int i = 1; i <= r / 2; ++i) {
    frob = poly_mulmod(frob, frob, p);
    if (poly_gcd(p, frob + x).degree() != 0) return false;
  }
  return true;
}

bool is_irreducible_by_trial_division(const Gf2Poly& p) {
  const int r = p.degree();
  if (r < 1) throw std::invalid_argument("irreducibility is undefined for constant polynomials");
  if (r > 24) throw std::invalid_argument("trial division limited to degree 24");
  const std::uint64_t limit = std::uint64_t{1} << (r / 2 + 1);
  for (std::uint64_t d = 2; d < limit; ++d) {
    if (poly_rem(p, Gf2Poly::from_mask(d)).is_zero()) return false;
  }
  return true;
}

bool is_primitive(const Gf2Poly& p) {
  const int r = p.degree();
  if (r < 1) throw std::invalid_argument("primitivity is undefined for constant polynomials");
  if (r > 63) throw std::invalid_argument("primitivity test limited to degree 63");
  if (!is_irreducible(p)) return false;
  const std::uint64_t order = (std::uint64_t{1} << r) - 1;
  const Gf2Poly x = Gf2Poly::monomial(1);
  const Gf2Poly one = Gf2Poly::one();
  if (poly_powmod(x, order, p) != one) return false;
  for (auto q : prime_factors(order)) {
    if (poly_powmod(x, order / q, p) == one) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace shrinkca
