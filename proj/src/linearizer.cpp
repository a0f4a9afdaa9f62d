#include "shrinkca/linearizer.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "shrinkca/gf2field.hpp"

namespace shrinkca {

namespace {

constexpr int kMaxSearchDegree = 26;
constexpr int kMaxControlLength = 16;

struct SearchState {
  std::uint64_t target;
  std::size_t length;
  std::vector<std::uint8_t> prefix;
  std::vector<RuleVector> found;
};

// Continuant recurrence on 64-bit masks; before = P_(k-2), current = P_(k-1).
void search(SearchState& s, std::uint64_t before, std::uint64_t current) {
  if (s.prefix.size() == s.length) {
    if (current == s.target) s.found.emplace_back(BitSequence(s.prefix));
    return;
  }
  for (std::uint8_t d : {0, 1}) {
    const std::uint64_t next = ((current << 1) ^ (d ? current : 0)) ^ before;
    s.prefix.push_back(d);
    search(s, current, next);
    s.prefix.pop_back();
  }
}

}  // namespace

RuleVector concat_double(const RuleVector& rules) {
  BitSequence flipped = rules;
  flipped.set(flipped.size() - 1, !flipped[flipped.size() - 1]);
  BitSequence out = flipped;
  for (auto it = flipped.bits().rbegin(); it != flipped.bits().rend(); ++it) out.push_back(*it);
  return RuleVector(std::move(out));
}

std::vector<RuleVector> find_rule_vectors(const Gf2Poly& p) {
  const int r = p.degree();
  if (r < 1) throw std::invalid_argument("target polynomial must have degree >= 1");
  if (r > kMaxSearchDegree) {
    throw std::invalid_argument("exhaustive synthesis limited to degree " +
                                std::to_string(kMaxSearchDegree));
  }
  SearchState s{p.to_mask(), static_cast<std::size_t>(r), {}, {}};
  s.prefix.reserve(s.length);
  search(s, 0, 1);
  return std::move(s.found);
}

CaPair synthesize_ca_pair(const Gf2Poly& p) {
  if (p.degree() < 1 || !is_irreducible(p)) {
    throw std::invalid_argument("synthesis needs an irreducible polynomial, got " + p.to_human());
  }
  auto found = find_rule_vectors(p);
  if (found.size() == 1 && found[0] == found[0].reversed()) {
    return CaPair{found[0], found[0], true};
  }
  if (found.size() != 2 || found[0].reversed() != found[1]) {
    std::string listing;
    for (const auto& v : found) listing += " " + v.to_string();
    throw std::runtime_error("expected one reversal pair for " + p.to_human() + ", found " +
                             std::to_string(found.size()) + " vectors:" + listing);
  }
  return CaPair{found[0], found[1], false};
}

LinearizationResult linearize_shrinking_generator(int l1, const Gf2Poly& p2) {
  if (l1 < 1 || l1 > kMaxControlLength) {
    throw std::invalid_argument("control length must be in [1, " +
                                std::to_string(kMaxControlLength) + "]");
  }
  const int l2 = p2.degree();
  if (l2 < 1 || !is_primitive(p2)) {
    throw std::invalid_argument("data polynomial " + p2.to_human() + " is not primitive");
  }
  if (std::gcd(l1, l2) != 1) {
    throw std::invalid_argument("register lengths " + std::to_string(l1) + " and " +
                                std::to_string(l2) + " are not coprime");
  }

  const std::uint64_t coset_n = (std::uint64_t{1} << l1) - 1;
  const std::uint64_t order = (std::uint64_t{1} << l2) - 1;
  // Minimal polynomial of alpha^N; in GF(2) the exponent reduces to zero.
  Gf2Poly base = order == 1 ? p2 : minimal_polynomial_of_power(p2, coset_n % order);

  CaPair pair = synthesize_ca_pair(base);

  // One doubling per control bit after the first.
  for (int i = 1; i < l1; ++i) {
    pair.first = concat_double(pair.first);
    pair.second = concat_double(pair.second);
  }

  const std::uint64_t multiplicity = std::uint64_t{1} << (l1 - 1);
  return LinearizationResult{std::move(pair),
                             std::move(base),
                             multiplicity,
                             static_cast<std::size_t>(l2) * multiplicity,
                             coset_n,
                             l1,
                             l2};
}

nlohmann::json LinearizationResult::to_json() const {
  return {
      {"rules_a", ca_pair.first.to_string()},
      {"rules_b", ca_pair.second.to_string()},
      {"degenerate_pair", ca_pair.degenerate},
      {"base_poly", base_poly.to_bits()},
      {"base_poly_human", base_poly.to_human()},
      {"p", multiplicity},
      {"L", length},
      {"N", coset_n},
      {"L1", l1},
      {"L2", l2},
  };
}

}  // namespace shrinkca
