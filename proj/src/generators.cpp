#include "shrinkca/generators.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace shrinkca {

BitSequence::BitSequence(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("bit values must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitSequence::BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
  }
}

BitSequence BitSequence::parse(std::string_view text, bool allow_whitespace) {
  BitSequence out;
  out.bits_.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (allow_whitespace && std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      throw std::invalid_argument("invalid bit string '" + std::string(text) + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty bit string");
  return out;
}

std::string BitSequence::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

bool BitSequence::is_all_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
}

std::size_t BitSequence::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

BitSequence BitSequence::prefix(std::size_t n) const {
  n = std::min(n, bits_.size());
  return BitSequence(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

BitSequence BitSequence::reversed() const {
  return BitSequence(std::vector<std::uint8_t>(bits_.rbegin(), bits_.rend()));
}

Lfsr::Lfsr(Gf2Poly charpoly, BitSequence state)
    : charpoly_(std::move(charpoly)), state_(std::move(state)) {
  const int r = charpoly_.degree();
  if (r < 1 || r > 64) throw std::invalid_argument("LFSR length must be in [1, 64]");
  if (state_.size() != static_cast<std::size_t>(r)) {
    throw std::invalid_argument("initial state has " + std::to_string(state_.size()) +
                                " bits, register length is " + std::to_string(r));
  }
}

LfsrStream::LfsrStream(const Lfsr& reg) : length_(reg.length()) {
  // Bit k of the window is a_(t+k); the tap on bit k is the coefficient of x^k.
  for (int k = 0; k < length_; ++k) {
    auto idx = static_cast<std::size_t>(k);
    if (reg.state()[idx]) window_ |= std::uint64_t{1} << k;
    if (reg.charpoly().coeff(idx)) taps_ |= std::uint64_t{1} << k;
  }
}

bool LfsrStream::next() {
  const bool out = window_ & 1u;
  const std::uint64_t fb = static_cast<std::uint64_t>(std::popcount(window_ & taps_) & 1);
  window_ = (window_ >> 1) | (fb << (length_ - 1));
  return out;
}

BitSequence lfsr_sequence(const Lfsr& reg, std::size_t n) {
  LfsrStream stream(reg);
  BitSequence out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stream.next());
  return out;
}

ShrinkingGenerator::ShrinkingGenerator(Lfsr control, Lfsr data)
    : control_(std::move(control)), data_(std::move(data)) {
  if (std::gcd(control_.length(), data_.length()) != 1) {
    throw std::invalid_argument("register lengths " + std::to_string(control_.length()) + " and " +
                                std::to_string(data_.length()) + " are not coprime");
  }
}

std::uint64_t ShrinkingGenerator::expected_period() const {
  return ((std::uint64_t{1} << data_.length()) - 1) << (control_.length() - 1);
}

BitSequence shrunken_sequence(const ShrinkingGenerator& gen, std::size_t n) {
  BitSequence out;
  if (n == 0) return out;
  LfsrStream a(gen.control());
  LfsrStream b(gen.data());
  // L1 consecutive zeros from the control register means its state is zero.
  const int limit = gen.control().length();
  int zero_run = 0;
  while (out.size() < n) {
    const bool keep = a.next();
    const bool bit = b.next();
    if (keep) {
      out.push_back(bit);
      zero_run = 0;
    } else if (++zero_run >= limit) {
      throw std::runtime_error("control register produces no ones");
    }
  }
  return out;
}

std::size_t sequence_period(const BitSequence& s) {
  if (s.empty()) throw std::invalid_argument("period of an empty sequence");
  const auto n = s.size();
  for (std::size_t t = 1; t < n; ++t) {
    bool ok = true;
    for (std::size_t i = 0; i + t < n; ++i) {
      if (s[i] != s[i + t]) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return n;
}

BitSequence decimate_by_stride(const BitSequence& s, std::size_t stride, std::size_t offset) {
  if (stride == 0) throw std::invalid_argument("stride must be positive");
  if (offset >= stride) throw std::invalid_argument("offset must be below stride");
  BitSequence out;
  for (std::size_t i = offset; i < s.size(); i += stride) out.push_back(s[i]);
  return out;
}

}  // namespace shrinkca
