#include "shrinkca/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "shrinkca/analysis.hpp"
#include "shrinkca/linearizer.hpp"

namespace shrinkca::cli {

namespace {

using nlohmann::json;

struct RawFlags {
  std::string format = "text";
  std::string poly, state, p1, s1, p2, s2, rules, seq, seq_file;
  std::size_t count = 0;
  std::size_t steps = 0;
  int l1 = 0;
};

template <typename T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

int emit_json(std::ostream& out, const json& j) {
  out << j.dump(2) << '\n';
  return kOk;
}

int run_lfsr(const CommandRequest& req, std::ostream& out) {
  Lfsr reg(need(req.poly, "--poly"), need(req.state, "--state"));
  auto seq = lfsr_sequence(reg, need(req.count, "--count"));
  if (req.format == OutputFormat::json) {
    return emit_json(out, {{"poly", reg.charpoly().to_bits()},
                           {"state", reg.state().to_string()},
                           {"count", seq.size()},
                           {"sequence", seq.to_string()}});
  }
  out << seq.to_string() << '\n';
  return kOk;
}

ShrinkingGenerator make_generator(const CommandRequest& req) {
  return ShrinkingGenerator(Lfsr(need(req.p1, "--p1"), need(req.s1, "--s1")),
                            Lfsr(need(req.p2, "--p2"), need(req.s2, "--s2")));
}

int run_shrink(const CommandRequest& req, std::ostream& out) {
  auto gen = make_generator(req);
  auto seq = shrunken_sequence(gen, need(req.count, "--count"));
  if (req.format == OutputFormat::json) {
    return emit_json(out, {{"p1", gen.control().charpoly().to_bits()},
                           {"s1", gen.control().state().to_string()},
                           {"p2", gen.data().charpoly().to_bits()},
                           {"s2", gen.data().state().to_string()},
                           {"count", seq.size()},
                           {"sequence", seq.to_string()}});
  }
  out << seq.to_string() << '\n';
  return kOk;
}

int run_ca_run(const CommandRequest& req, std::ostream& out) {
  const auto& rules = need(req.rules, "--rules");
  auto states = ca_run(rules, need(req.ca_state, "--state"), need(req.steps, "--steps"));
  if (req.format == OutputFormat::json) {
    json rows = json::array();
    for (const auto& s : states) rows.push_back(s.to_string());
    return emit_json(out, {{"rules", rules.to_string()}, {"states", rows}});
  }
  for (const auto& s : states) out << s.to_string() << '\n';
  return kOk;
}

int run_ca_charpoly(const CommandRequest& req, std::ostream& out) {
  const auto& rules = need(req.rules, "--rules");
  auto poly = ca_char_poly(rules);
  if (req.format == OutputFormat::json) {
    return emit_json(out, {{"rules", rules.to_string()},
                           {"charpoly", poly.to_bits()},
                           {"charpoly_human", poly.to_human()}});
  }
  out << poly.to_bits() << '\n';
  return kOk;
}

int run_linearize(const CommandRequest& req, std::ostream& out) {
  auto result = linearize_shrinking_generator(need(req.l1, "--l1"), need(req.p2, "--p2"));
  if (req.format == OutputFormat::json) return emit_json(out, result.to_json());
  out << result.ca_pair.first.to_string() << '\n' << result.ca_pair.second.to_string() << '\n';
  return kOk;
}

int run_bm(const CommandRequest& req, std::ostream& out) {
  const auto& seq = need(req.sequence, "--seq or --seq-file");
  auto bm = berlekamp_massey(seq);
  if (req.format == OutputFormat::json) {
    return emit_json(out, {{"length", seq.size()},
                           {"linear_complexity", bm.linear_complexity},
                           {"connection_poly", bm.connection_poly.to_bits()},
                           {"connection_poly_human", bm.connection_poly.to_human()}});
  }
  out << "poly " << bm.connection_poly.to_bits() << '\n' << "lc " << bm.linear_complexity << '\n';
  return kOk;
}

int run_attack(const CommandRequest& req, std::ostream& out) {
  auto report = verify_linearization(make_generator(req));
  if (req.format == OutputFormat::json) {
    emit_json(out, report.to_json());
  } else {
    out << report.to_text();
  }
  return report.verdict ? kOk : kVerdictFalse;
}

BitSequence read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return BitSequence::parse(text, true);
}

CommandRequest build_request(const std::string& name, const RawFlags& raw, const CLI::App& sub) {
  CommandRequest req;
  req.subcommand = name;
  req.format = raw.format == "json" ? OutputFormat::json : OutputFormat::text;
  auto given = [&](const char* flag) {
    const auto* opt = sub.get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--poly")) req.poly = Gf2Poly::parse(raw.poly);
  if (given("--state")) {
    if (name == "ca run") {
      req.ca_state = CaState::parse(raw.state);
    } else {
      req.state = BitSequence::parse(raw.state);
    }
  }
  if (given("--p1")) req.p1 = Gf2Poly::parse(raw.p1);
  if (given("--s1")) req.s1 = BitSequence::parse(raw.s1);
  if (given("--p2")) req.p2 = Gf2Poly::parse(raw.p2);
  if (given("--s2")) req.s2 = BitSequence::parse(raw.s2);
  if (given("--rules")) req.rules = RuleVector::parse(raw.rules);
  if (given("--seq")) req.sequence = BitSequence::parse(raw.seq);
  if (given("--seq-file")) req.sequence = read_sequence_file(raw.seq_file);
  if (given("--count")) req.count = raw.count;
  if (given("--steps")) req.steps = raw.steps;
  if (given("--l1")) req.l1 = raw.l1;
  return req;
}

}  // namespace

int run_command(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  try {
    const auto& name = request.subcommand;
    if (name == "lfsr") return run_lfsr(request, out);
    if (name == "shrink") return run_shrink(request, out);
    if (name == "ca run") return run_ca_run(request, out);
    if (name == "ca charpoly") return run_ca_charpoly(request, out);
    if (name == "linearize") return run_linearize(request, out);
    if (name == "bm") return run_bm(request, out);
    if (name == "attack") return run_attack(request, out);
    err << "error: unknown subcommand '" << name << "'\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shrinking generator linearization toolkit"};
  app.name("shrinkca");
  app.require_subcommand(1);
  RawFlags raw;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", raw.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* lfsr = app.add_subcommand("lfsr", "Emit an LFSR sequence");
  lfsr->add_option("--poly", raw.poly, "Characteristic polynomial")->required();
  lfsr->add_option("--state", raw.state, "Initial state a_0..a_(r-1)")->required();
  lfsr->add_option("--count", raw.count, "Number of bits")->required();

  auto add_generator = [&](CLI::App* sub) {
    sub->add_option("--p1", raw.p1, "Control register polynomial")->required();
    sub->add_option("--s1", raw.s1, "Control register seed")->required();
    sub->add_option("--p2", raw.p2, "Data register polynomial")->required();
    sub->add_option("--s2", raw.s2, "Data register seed")->required();
  };

  auto* shrink = app.add_subcommand("shrink", "Emit the shrunken sequence");
  add_generator(shrink);
  shrink->add_option("--count", raw.count, "Number of output bits")->required();

  auto* ca = app.add_subcommand("ca", "90/150 cellular automata");
  ca->require_subcommand(1);
  auto* ca_run_cmd = ca->add_subcommand("run", "Print the state orbit");
  ca_run_cmd->add_option("--rules", raw.rules, "Rule vector, 0=90 1=150")->required();
  ca_run_cmd->add_option("--state", raw.state, "Initial state")->required();
  ca_run_cmd->add_option("--steps", raw.steps, "Number of steps")->required();
  auto* ca_poly_cmd = ca->add_subcommand("charpoly", "Characteristic polynomial");
  ca_poly_cmd->add_option("--rules", raw.rules, "Rule vector, 0=90 1=150")->required();

  auto* linearize = app.add_subcommand("linearize", "Synthesize the CA pair for a generator");
  linearize->add_option("--l1", raw.l1, "Control register length")->required();
  linearize->add_option("--p2", raw.p2, "Data register polynomial")->required();

  auto* bm = app.add_subcommand("bm", "Berlekamp-Massey linear complexity");
  auto* seq_opt = bm->add_option("--seq", raw.seq, "Bit string");
  auto* file_opt = bm->add_option("--seq-file", raw.seq_file, "File holding a bit stream");
  seq_opt->excludes(file_opt);

  auto* attack = app.add_subcommand("attack", "Linearize a generator and verify the CA model");
  add_generator(attack);

  for (auto* sub : {lfsr, shrink, ca_run_cmd, ca_poly_cmd, linearize, bm, attack}) add_format(sub);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  std::string name = chosen->get_name();
  if (chosen == ca) {
    chosen = ca->get_subcommands().front();
    name = "ca " + chosen->get_name();
  }

  CommandRequest request;
  try {
    request = build_request(name, raw, *chosen);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return run_command(request, out, err);
}

}  // namespace shrinkca::cli
