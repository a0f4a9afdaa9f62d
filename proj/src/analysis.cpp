#include "shrinkca/analysis.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace shrinkca {

BmResult berlekamp_massey(const BitSequence& s) {
  const std::size_t n = s.size();
  // Connection polynomials C(x) = 1 + c_1 x + ... with s_k + sum c_i s_(k-i) = 0.
  std::vector<std::uint8_t> c(n + 1, 0);
  std::vector<std::uint8_t> b(n + 1, 0);
  c[0] = b[0] = 1;
  std::size_t lc = 0;
  std::size_t shift = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::uint8_t discrepancy = s[k];
    for (std::size_t i = 1; i <= lc; ++i) discrepancy ^= c[i] & s[k - i];
    if (discrepancy == 0) {
      ++shift;
      continue;
    }
    auto previous = c;
    for (std::size_t i = 0; i + shift <= n; ++i) c[i + shift] ^= b[i];
    if (2 * lc <= k) {
      lc = k + 1 - lc;
      b = std::move(previous);
      shift = 1;
    } else {
      ++shift;
    }
  }
  Gf2Poly connection;
  for (std::size_t i = 0; i <= lc; ++i) {
    if (c[i]) connection.set_coeff(i, true);
  }
  return BmResult{poly_reciprocal(connection, static_cast<int>(lc)), lc};
}

bool check_annihilation(const Gf2Poly& q, std::size_t multiplicity, const BitSequence& s) {
  if (q.is_zero()) throw std::invalid_argument("annihilator must be nonzero");
  const auto op = poly_pow(q, multiplicity);
  const auto span = static_cast<std::size_t>(op.degree());
  if (s.size() < span + 1) {
    throw std::invalid_argument("window of " + std::to_string(s.size()) +
                                " bits is too short for an operator of degree " +
                                std::to_string(span));
  }
  std::vector<std::size_t> taps;
  for (std::size_t k = 0; k <= span; ++k) {
    if (op.coeff(k)) taps.push_back(k);
  }
  for (std::size_t n = 0; n + span < s.size(); ++n) {
    std::uint8_t acc = 0;
    for (auto k : taps) acc ^= s[n + k];
    if (acc != 0) return false;
  }
  return true;
}

std::pair<std::uint64_t, std::uint64_t> lc_bounds(int l1, int l2) {
  if (l1 < 2) throw std::invalid_argument("complexity bounds need L1 >= 2");
  if (l2 < 1) throw std::invalid_argument("complexity bounds need L2 >= 1");
  const auto l2u = static_cast<std::uint64_t>(l2);
  return {l2u << (l1 - 2), l2u << (l1 - 1)};
}

AttackReport verify_linearization(const ShrinkingGenerator& gen) {
  const auto& r1 = gen.control();
  const auto& r2 = gen.data();
  if (!is_primitive(r1.charpoly()) || !is_primitive(r2.charpoly())) {
    throw std::invalid_argument("both register polynomials must be primitive");
  }
  if (r1.state().is_all_zero() || r2.state().is_all_zero()) {
    throw std::invalid_argument("both register seeds must be nonzero");
  }

  AttackReport report{.p1 = r1.charpoly(),
                      .seed1 = r1.state(),
                      .p2 = r2.charpoly(),
                      .seed2 = r2.state(),
                      .expected_period = gen.expected_period(),
                      .linearization = linearize_shrinking_generator(r1.length(), r2.charpoly())};

  report.window_length = static_cast<std::size_t>(2 * report.expected_period);
  const auto window = shrunken_sequence(gen, report.window_length);

  report.bm = berlekamp_massey(window);
  if (r1.length() >= 2) {
    report.lc_range = lc_bounds(r1.length(), r2.length());
    report.lc_within_bounds = report.bm.linear_complexity > report.lc_range->first &&
                              report.bm.linear_complexity <= report.lc_range->second;
  }

  const auto& base = report.linearization.base_poly;
  const auto base_degree = static_cast<std::size_t>(base.degree());
  if (report.bm.linear_complexity % base_degree == 0) {
    const auto p_hat = report.bm.linear_complexity / base_degree;
    if (poly_pow(base, p_hat) == report.bm.connection_poly) report.measured_multiplicity = p_hat;
  }
  if (report.measured_multiplicity) {
    const auto p_hat = *report.measured_multiplicity;
    const auto upper = report.linearization.multiplicity;
    report.factorization_holds = p_hat <= upper && (r1.length() < 2 || 2 * p_hat > upper);
  }

  const auto& pair = report.linearization.ca_pair;
  for (int which = 0; which < 2 && !report.fit; ++which) {
    const auto& rules = which == 0 ? pair.first : pair.second;
    if (auto fit = fit_initial_state(rules, window)) {
      report.matched_automaton = which;
      report.fit = std::move(fit);
    }
  }
  if (report.fit) {
    const auto& rules = *report.matched_automaton == 0 ? pair.first : pair.second;
    const auto replay = ca_cell_output(rules, report.fit->state, report.fit->cell, window.size());
    if (replay == window) {
      report.verified_period = sequence_period(window);
      report.verdict = report.verified_period <= window.size() / 2;
    }
  }
  return report;
}

nlohmann::json AttackReport::to_json() const {
  nlohmann::json j;
  j["generator"] = {{"p1", p1.to_bits()},
                    {"s1", seed1.to_string()},
                    {"p2", p2.to_bits()},
                    {"s2", seed2.to_string()},
                    {"L1", p1.degree()},
                    {"L2", p2.degree()},
                    {"expected_period", expected_period}};
  j["linearization"] = linearization.to_json();
  j["window_length"] = window_length;
  j["linear_complexity"] = bm.linear_complexity;
  j["connection_poly"] = bm.connection_poly.to_bits();
  if (lc_range) {
    j["lc_bounds"] = {lc_range->first, lc_range->second};
  } else {
    j["lc_bounds"] = nullptr;
  }
  j["lc_within_bounds"] = lc_within_bounds;
  j["minimal_poly_factorization"] = {
      {"base_poly", linearization.base_poly.to_bits()},
      {"measured_multiplicity",
       measured_multiplicity ? nlohmann::json(*measured_multiplicity) : nlohmann::json(nullptr)},
      {"holds", factorization_holds}};
  if (fit) {
    j["matched_automaton"] = *matched_automaton == 0 ? "rules_a" : "rules_b";
    j["matched_cell"] = fit->cell;
    j["initial_state"] = fit->state.to_string();
  } else {
    j["matched_automaton"] = nullptr;
    j["matched_cell"] = nullptr;
    j["initial_state"] = nullptr;
  }
  j["verified_period"] = verified_period;
  j["verdict"] = verdict;
  return j;
}

std::string AttackReport::to_text() const {
  std::ostringstream out;
  out << "generator       P1=" << p1.to_human() << " IS1=" << seed1.to_string()
      << " P2=" << p2.to_human() << " IS2=" << seed2.to_string() << '\n';
  out << "period          " << expected_period << '\n';
  out << "P(x)            " << linearization.base_poly.to_human() << " (N=" << linearization.coset_n
      << ")\n";
  out << "rules_a         " << linearization.ca_pair.first.to_string() << '\n';
  out << "rules_b         " << linearization.ca_pair.second.to_string() << '\n';
  out << "CA length       " << linearization.length << " (p=" << linearization.multiplicity << ")\n";
  out << "LC              " << bm.linear_complexity;
  if (lc_range) {
    out << " in (" << lc_range->first << ", " << lc_range->second << "]: "
        << (lc_within_bounds ? "yes" : "no");
  }
  out << " (window " << window_length << ")\n";
  out << "minimal poly    ";
  if (measured_multiplicity) {
    out << "P(x)^" << *measured_multiplicity << (factorization_holds ? "" : " (outside bounds)");
  } else {
    out << bm.connection_poly.to_human() << " (not a power of P)";
  }
  out << '\n';
  if (fit) {
    out << "matched         " << (*matched_automaton == 0 ? "rules_a" : "rules_b") << " cell "
        << fit->cell << " state " << fit->state.to_string() << '\n';
  } else {
    out << "matched         none\n";
  }
  out << "verified period " << verified_period << '\n';
  out << "verdict         " << (verdict ? "linearized" : "FAILED") << '\n';
  return out.str();
}

}  // namespace shrinkca
