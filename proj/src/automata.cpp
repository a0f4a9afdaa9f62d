#include "shrinkca/automata.hpp"

#include <stdexcept>

namespace shrinkca {

namespace {

void require_length(const RuleVector& rules, const BitSequence& state) {
  if (rules.size() != state.size()) {
    throw std::invalid_argument("state has " + std::to_string(state.size()) +
                                " cells, rule vector has " + std::to_string(rules.size()));
  }
}

// Dense GF(2) system with packed rows; the last column is the right-hand side.
class Gf2System {
 public:
  explicit Gf2System(std::size_t unknowns) : unknowns_(unknowns), words_((unknowns + 64) / 64) {}

  void add_row(const BitSequence& coeffs, bool rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (std::size_t j = 0; j < unknowns_; ++j) {
      if (coeffs[j]) row[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    if (rhs) row[unknowns_ / 64] |= std::uint64_t{1} << (unknowns_ % 64);
    rows_.push_back(std::move(row));
  }

  // Gauss-Jordan; free unknowns are set to zero.
  std::optional<BitSequence> solve() {
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns_ && rank < rows_.size(); ++col) {
      std::size_t pivot = rank;
      while (pivot < rows_.size() && !bit(rows_[pivot], col)) ++pivot;
      if (pivot == rows_.size()) continue;
      std::swap(rows_[pivot], rows_[rank]);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r != rank && bit(rows_[r], col)) xor_into(rows_[r], rows_[rank]);
      }
      pivot_cols.push_back(col);
      ++rank;
    }
    for (std::size_t r = rank; r < rows_.size(); ++r) {
      if (bit(rows_[r], unknowns_)) return std::nullopt;
    }
    BitSequence x(unknowns_);
    for (std::size_t r = 0; r < rank; ++r) x.set(pivot_cols[r], bit(rows_[r], unknowns_));
    return x;
  }

 private:
  static bool bit(const std::vector<std::uint64_t>& row, std::size_t j) {
    return (row[j / 64] >> (j % 64)) & 1u;
  }
  static void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
  }

  std::size_t unknowns_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace

RuleVector::RuleVector(BitSequence bits) : BitSequence(std::move(bits)) {
  if (empty()) throw std::invalid_argument("rule vector must have at least one cell");
}

std::string RuleVector::to_rule_numbers() const {
  std::string out;
  for (auto d : *this) {
    if (!out.empty()) out += ',';
    out += d ? "150" : "90";
  }
  return out;
}

TransitionMatrix::TransitionMatrix(const RuleVector& rules)
    : size_(rules.size()), entries_(size_ * size_, 0) {
  for (std::size_t i = 0; i < size_; ++i) {
    entries_[i * size_ + i] = rules[i];
    if (i > 0) entries_[i * size_ + i - 1] = 1;
    if (i + 1 < size_) entries_[i * size_ + i + 1] = 1;
  }
}

CaState TransitionMatrix::apply(const CaState& state) const {
  if (state.size() != size_) throw std::invalid_argument("state length does not match matrix");
  CaState out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    std::uint8_t acc = 0;
    for (std::size_t j = 0; j < size_; ++j) acc ^= entries_[i * size_ + j] & state[j];
    out.set(i, acc);
  }
  return out;
}

TransitionMatrix transition_matrix(const RuleVector& rules) { return TransitionMatrix(rules); }

CaState ca_step(const RuleVector& rules, const CaState& state) {
  require_length(rules, state);
  const auto n = state.size();
  CaState next(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t v = rules[i] & state[i];
    if (i > 0) v ^= state[i - 1];
    if (i + 1 < n) v ^= state[i + 1];
    next.set(i, v);
  }
  return next;
}

std::vector<CaState> ca_run(const RuleVector& rules, const CaState& state, std::size_t steps) {
  require_length(rules, state);
  std::vector<CaState> states;
  states.reserve(steps + 1);
  states.push_back(state);
  for (std::size_t t = 0; t < steps; ++t) states.push_back(ca_step(rules, states.back()));
  return states;
}

BitSequence ca_cell_output(const RuleVector& rules, const CaState& state, std::size_t cell,
                           std::size_t n) {
  require_length(rules, state);
  if (cell >= rules.size()) throw std::out_of_range("cell index out of range");
  BitSequence out;
  CaState s = state;
  for (std::size_t t = 0; t < n; ++t) {
    out.push_back(s[cell]);
    if (t + 1 < n) s = ca_step(rules, s);
  }
  return out;
}

Gf2Poly ca_char_poly(const RuleVector& rules) {
  Gf2Poly before;                 // P_(k-2), starts as P_(-1) = 0
  Gf2Poly current = Gf2Poly::one();  // P_(k-1), starts as P_0 = 1
  const Gf2Poly x = Gf2Poly::monomial(1);
  for (auto d : rules) {
    Gf2Poly next = poly_mul(d ? x + Gf2Poly::one() : x, current);
    next += before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

std::optional<CellFit> fit_initial_state(const RuleVector& rules, const BitSequence& target) {
  const auto length = rules.size();
  if (target.size() < 2 * length) {
    throw std::invalid_argument("target needs at least " + std::to_string(2 * length) + " bits");
  }
  for (std::size_t cell = 0; cell < length; ++cell) {
    // M is symmetric, so row `cell` of M^n is M^n applied to the unit vector e_cell.
    Gf2System system(length);
    CaState row(length);
    row.set(cell, true);
    for (std::size_t n = 0; n < 2 * length; ++n) {
      system.add_row(row, target[n]);
      row = ca_step(rules, row);
    }
    auto solution = system.solve();
    if (!solution) continue;
    CaState state(std::move(*solution));
    if (ca_cell_output(rules, state, cell, target.size()) == target) {
      return CellFit{cell, std::move(state)};
    }
  }
  return std::nullopt;
}

}  // namespace shrinkca
