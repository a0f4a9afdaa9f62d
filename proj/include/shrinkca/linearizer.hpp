#ifndef SHRINKCA_LINEARIZER_HPP
#define SHRINKCA_LINEARIZER_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "shrinkca/automata.hpp"
#include "shrinkca/gf2poly.hpp"

namespace shrinkca {

/// Complements the last rule, then appends the mirror image of the result.
/// ca_char_poly(concat_double(d)) == ca_char_poly(d)^2.
RuleVector concat_double(const RuleVector& rules);

/// Two 90/150 automata sharing a characteristic polynomial; mutual reversals.
/// For degree one both slots hold the same vector and `degenerate` is set.
struct CaPair {
  RuleVector first;
  RuleVector second;
  bool degenerate = false;
};

/// Every rule vector of length deg(p) whose characteristic polynomial is p,
/// found by depth-first search over rule prefixes. Lexicographic order.
std::vector<RuleVector> find_rule_vectors(const Gf2Poly& p);

/// Synthesis for an irreducible p. Throws std::invalid_argument if p is
/// reducible and std::runtime_error if the search does not find exactly one
/// reversal pair.
CaPair synthesize_ca_pair(const Gf2Poly& p);

struct LinearizationResult {
  CaPair ca_pair;
  Gf2Poly base_poly;          // P(x)
  std::uint64_t multiplicity;  // p = 2^(L1-1)
  std::size_t length;          // L = L2 * p
  std::uint64_t coset_n;       // N = 2^L1 - 1
  int l1;
  int l2;

  nlohmann::json to_json() const;
};

/// Builds the CA pair modelling every shrinking generator with control length
/// l1 and data polynomial p2. P1 is not an input.
LinearizationResult linearize_shrinking_generator(int l1, const Gf2Poly& p2);

}  // namespace shrinkca

#endif  // SHRINKCA_LINEARIZER_HPP
