#ifndef SHRINKCA_ANALYSIS_HPP
#define SHRINKCA_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "shrinkca/automata.hpp"
#include "shrinkca/generators.hpp"
#include "shrinkca/gf2poly.hpp"
#include "shrinkca/linearizer.hpp"

namespace shrinkca {

struct BmResult {
  /// Minimal characteristic polynomial, same convention as Lfsr: it
  /// annihilates the window as an operator in the shift E. 1 for all-zero input.
  Gf2Poly connection_poly;
  std::size_t linear_complexity = 0;
};

BmResult berlekamp_massey(const BitSequence& s);

/// q(E)^p applied at every index where it fits yields zero.
/// Throws if s is shorter than deg(q) * p + 1.
bool check_annihilation(const Gf2Poly& q, std::size_t multiplicity, const BitSequence& s);

/// Linear complexity bounds (lower exclusive, upper inclusive) for the
/// shrunken sequence: (L2 * 2^(L1-2), L2 * 2^(L1-1)]. Requires L1 >= 2.
std::pair<std::uint64_t, std::uint64_t> lc_bounds(int l1, int l2);

struct AttackReport {
  // generator
  Gf2Poly p1;
  BitSequence seed1;
  Gf2Poly p2;
  BitSequence seed2;
  std::uint64_t expected_period = 0;

  LinearizationResult linearization;

  // measurement
  std::size_t window_length = 0;
  BmResult bm{};
  std::optional<std::pair<std::uint64_t, std::uint64_t>> lc_range{};
  bool lc_within_bounds = false;
  /// p-hat with connection_poly == base_poly^p-hat, if any power matches.
  std::optional<std::uint64_t> measured_multiplicity{};
  bool factorization_holds = false;

  // linear model
  std::optional<int> matched_automaton{};  // 0 = rules_a, 1 = rules_b
  std::optional<CellFit> fit{};
  std::size_t verified_period = 0;
  bool verdict = false;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Linearizes gen, measures its shrunken sequence over two full periods and
/// checks that one of the synthesized automata reproduces it bit for bit.
AttackReport verify_linearization(const ShrinkingGenerator& gen);

}  // namespace shrinkca

#endif  // SHRINKCA_ANALYSIS_HPP
