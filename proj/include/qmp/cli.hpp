#pragma once

// Command-line front end: `reduce`, `verify` and `modular` subcommands.
// Exit codes: 0 all relations hold, 1 unexpected violation or engine error,
// 2 parse or usage error.

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmp/parser.hpp"
#include "qmp/suites.hpp"

namespace qmp::cli {

enum Exit : int { Ok = 0, Violation = 1, Usage = 2 };

inline std::optional<Family> family_from(const std::string& t) {
  if (t == "I") return Family::TypeI;
  if (t == "II") return Family::TypeII;
  if (t == "III") return Family::TypeIII;
  return std::nullopt;
}

inline int print_reports(const std::vector<RelationReport>& reports, const std::string& format, std::ostream& out) {
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (format == "json") {
    out << json_lines(reports);
    return ok ? Ok : Violation;
  }
  // Text: every deviating or expected-violation record, then one summary per suite and family.
  struct Tally {
    std::size_t total = 0, holds = 0, expected = 0, unexpected = 0;
  };
  std::vector<std::pair<std::string, Tally>> tallies;
  for (const auto& rep : reports) {
    const std::string key = rep.suite + " " + rep.family;
    auto it = std::find_if(tallies.begin(), tallies.end(), [&key](const auto& kv) { return kv.first == key; });
    if (it == tallies.end()) it = tallies.insert(tallies.end(), {key, Tally{}});
    Tally& t = it->second;
    for (const auto& rec : rep.records) {
      ++t.total;
      if (rec.holds) ++t.holds;
      if (rec.expected_violation && !rec.holds) ++t.expected;
      if (!rec.ok()) ++t.unexpected;
      if (!rec.ok() || rec.expected_violation) out << text_line(rep, rec) << "\n";
    }
  }
  for (const auto& [key, t] : tallies) {
    out << (t.unexpected == 0 ? "OK   " : "FAIL ") << key << ": " << t.total << " relations, " << t.holds
        << " hold";
    if (t.expected) out << ", " << t.expected << " expected violations";
    if (t.unexpected) out << ", " << t.unexpected << " unexpected";
    out << "\n";
  }
  return ok ? Ok : Violation;
}

/// Run with argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum matrix pair verification"};
  app.require_subcommand(1);

  std::string type, format = "text", expression, suite, word;
  int range = 3;

  auto* reduce = app.add_subcommand("reduce", "Reduce an expression to normal form");
  reduce->add_option("--type", type, "Relation family I, II, III, or GL for the quantum group")
      ->required()
      ->check(CLI::IsMember({"I", "II", "III", "GL"}));
  reduce->add_option("expression", expression, "Expression to reduce")->required();
  reduce->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite to run")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--type", type, "Relation family")->check(CLI::IsMember({"I", "II", "III"}));
  verify->add_option("--range", range, "Exponent range")->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* modular = app.add_subcommand("modular", "Apply a modular word to the generator pair");
  modular->add_option("--type", type, "Relation family")->required()->check(CLI::IsMember({"I", "II", "III"}));
  modular->add_option("--word", word, "Letters S S' T T', rightmost applied first")->required();
  modular->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  }

  try {
    if (reduce->parsed()) {
      const Value v = parse_expression(expression, family_from(type));
      if (format == "json") {
        nlohmann::ordered_json j;
        j["type"] = type;
        j["expression"] = expression;
        j["result"] = to_string(v);
        out << j.dump() << "\n";
      } else {
        out << to_string(v) << "\n";
      }
      return Ok;
    }
    if (verify->parsed()) {
      if (type.empty() && suite != "mq2") {
        err << "usage error: --type is required for suite " << suite << "\n";
        return Usage;
      }
      const Family f = type.empty() ? Family::TypeII : *family_from(type);
      return print_reports(run_suite(suite, f, range), format, out);
    }
    const Family f = *family_from(type);
    const ModularWord w = ModularWord::parse(word);
    const QPair p = QPair::generators(f);
    const QPair image = apply_word(w, p);
    const RelationReport rep = check_correspondence(w, p);
    if (format != "json") {
      out << "V1 = " << to_string(image.u1) << "\nV2 = " << to_string(image.u2)
          << "\nmatrix = " << to_string(word_to_matrix(w)) << "\n";
    }
    return print_reports({rep}, format, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return Usage;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << "\n";
    return Usage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << "\n";
    return Violation;
  }
}

}  // namespace qmp::cli
