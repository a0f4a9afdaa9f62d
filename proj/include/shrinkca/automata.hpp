#ifndef SHRINKCA_AUTOMATA_HPP
#define SHRINKCA_AUTOMATA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shrinkca/generators.hpp"
#include "shrinkca/gf2poly.hpp"

namespace shrinkca {

// Cells are numbered 1..L in prose (d_1 .. d_L) and 0..L-1 in code and text forms.

/// Hybrid 90/150 rule assignment: 0 = rule 90, 1 = rule 150. Text form "01111",
/// cell 1 leftmost.
class RuleVector : public BitSequence {
 public:
  RuleVector() = default;
  explicit RuleVector(BitSequence bits);
  RuleVector(std::initializer_list<int> bits) : RuleVector(BitSequence(bits)) {}

  static RuleVector parse(std::string_view text) { return RuleVector(BitSequence::parse(text)); }
  /// Comma separated rule numbers, e.g. "90,150,150".
  std::string to_rule_numbers() const;
  RuleVector reversed() const { return RuleVector(BitSequence::reversed()); }
};

/// Cell contents x_i^n at a fixed instant.
class CaState : public BitSequence {
 public:
  CaState() = default;
  explicit CaState(std::size_t n) : BitSequence(n) {}
  explicit CaState(BitSequence bits) : BitSequence(std::move(bits)) {}
  CaState(std::initializer_list<int> bits) : BitSequence(bits) {}

  static CaState parse(std::string_view text) { return CaState(BitSequence::parse(text)); }
};

/// Tridiagonal L x L matrix with the rule bits on the diagonal and ones beside it.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(const RuleVector& rules);

  std::size_t size() const { return size_; }
  bool at(std::size_t row, std::size_t col) const { return entries_[row * size_ + col] != 0; }
  CaState apply(const CaState& state) const;

 private:
  std::size_t size_;
  std::vector<std::uint8_t> entries_;
};

TransitionMatrix transition_matrix(const RuleVector& rules);

/// One synchronous update with null boundary cells. Throws on length mismatch.
CaState ca_step(const RuleVector& rules, const CaState& state);
/// States at times 0..steps inclusive.
std::vector<CaState> ca_run(const RuleVector& rules, const CaState& state, std::size_t steps);
/// Output sequence of one cell over n instants, starting at time 0.
BitSequence ca_cell_output(const RuleVector& rules, const CaState& state, std::size_t cell,
                           std::size_t n);

/// det(xI + M) by the continuant recurrence P_k = (x + d_k) P_(k-1) + P_(k-2).
Gf2Poly ca_char_poly(const RuleVector& rules);

struct CellFit {
  std::size_t cell = 0;
  CaState state;
};

/// Finds a cell and initial state whose output reproduces target exactly.
/// Cells are tried in ascending order. Requires target.size() >= 2L.
std::optional<CellFit> fit_initial_state(const RuleVector& rules, const BitSequence& target);

}  // namespace shrinkca

#endif  // SHRINKCA_AUTOMATA_HPP
