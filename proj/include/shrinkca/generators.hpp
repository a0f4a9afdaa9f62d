#ifndef SHRINKCA_GENERATORS_HPP
#define SHRINKCA_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "shrinkca/gf2poly.hpp"

namespace shrinkca {

/// Finite binary sequence, index 0 first. Text form is "0110...", index 0 leftmost.
class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(std::size_t n) : bits_(n, 0) {}
  BitSequence(std::initializer_list<int> bits);
  explicit BitSequence(std::vector<std::uint8_t> bits);

  /// Accepts ^[01]+$; with allow_whitespace, blanks between symbols are skipped.
  static BitSequence parse(std::string_view text, bool allow_whitespace = false);
  std::string to_string() const;

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool v) { bits_.at(i) = v ? 1 : 0; }
  void push_back(bool v) { bits_.push_back(v ? 1 : 0); }
  bool is_all_zero() const;
  std::size_t count_ones() const;

  BitSequence prefix(std::size_t n) const;
  BitSequence reversed() const;

  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Fibonacci LFSR in the convention P(E) a = 0: for charpoly
/// x^r + c_1 x^(r-1) + ... + c_r, a_n = c_1 a_(n-1) + ... + c_r a_(n-r).
/// state holds the first r output bits (a_0 .. a_(r-1)).
class Lfsr {
 public:
  /// Throws std::invalid_argument if degree is outside [1, 64] or state length != degree.
  Lfsr(Gf2Poly charpoly, BitSequence state);

  const Gf2Poly& charpoly() const { return charpoly_; }
  const BitSequence& state() const { return state_; }
  int length() const { return charpoly_.degree(); }

 private:
  Gf2Poly charpoly_;
  BitSequence state_;
};

/// Incremental generator over an Lfsr; value type, copy to fork.
class LfsrStream {
 public:
  explicit LfsrStream(const Lfsr& reg);
  bool next();

 private:
  std::uint64_t window_ = 0;
  std::uint64_t taps_ = 0;
  int length_ = 0;
};

BitSequence lfsr_sequence(const Lfsr& reg, std::size_t n);

/// R1 (control) keeps bit b_i of R2 (data) iff a_i = 1.
class ShrinkingGenerator {
 public:
  /// Throws std::invalid_argument unless gcd(L1, L2) = 1.
  ShrinkingGenerator(Lfsr control, Lfsr data);

  const Lfsr& control() const { return control_; }
  const Lfsr& data() const { return data_; }

  /// (2^L2 - 1) * 2^(L1 - 1) for primitive registers with nonzero seeds.
  std::uint64_t expected_period() const;

 private:
  Lfsr control_;
  Lfsr data_;
};

/// First n kept bits. Throws std::runtime_error if the control register
/// stops producing ones (e.g. zero seed) before n bits are kept.
BitSequence shrunken_sequence(const ShrinkingGenerator& gen, std::size_t n);

/// Smallest T >= 1 with s[i+T] = s[i] throughout the window.
std::size_t sequence_period(const BitSequence& s);

/// s[offset], s[offset + stride], ...
BitSequence decimate_by_stride(const BitSequence& s, std::size_t stride, std::size_t offset = 0);

}  // namespace shrinkca

#endif  // SHRINKCA_GENERATORS_HPP
