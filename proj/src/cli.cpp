#include "mirror/cli.hpp"

#include <iostream>
#include <iterator>
#include <optional>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "mirror/completion.hpp"
#include "mirror/metacheck.hpp"
#include "mirror/semantics.hpp"
#include "mirror/structured.hpp"
#include "mirror/syntax.hpp"
#include "mirror/term.hpp"

namespace mirror {

namespace {

void emit(std::ostream& out, const nlohmann::json& doc) {
  out << doc.dump(2) << '\n';
}

int run_check(const CliConfig& config, std::ostream& out) {
  EnumSpec spec{config.check_max_size, config.check_labels};
  std::vector<CheckReport> reports = run_all_checks(spec);
  bool all_passed = true;
  if (config.output_mode == OutputMode::Structured) {
    nlohmann::json docs = nlohmann::json::array();
    for (const CheckReport& r : reports) {
      docs.push_back(to_structured(r));
      all_passed = all_passed && r.passed;
    }
    emit(out, docs);
  } else {
    for (const CheckReport& r : reports) {
      out << (r.passed ? "PASS" : "FAIL") << ' ' << r.property << ": " << r.detail << '\n';
      all_passed = all_passed && r.passed;
    }
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == Command::Check) {
    return run_check(config, out);
  }

  ParseResult parsed = parse(config.term_text);
  if (const ParseError* e = std::get_if<ParseError>(&parsed)) {
    err << "error: " << describe(*e) << '\n';
    return 2;
  }
  const Term& term = std::get<Term>(parsed);
  const bool structured = config.output_mode == OutputMode::Structured;

  switch (config.command) {
    case Command::Parse:
      if (structured) {
        emit(out, to_structured(term));
      } else {
        out << print(term) << '\n';
      }
      return 0;

    case Command::Step: {
      StepOutcome outcome = step(term);
      if (structured) {
        nlohmann::json doc;
        if (outcome) {
          doc["outcome"] = "stepped";
          doc["rule"] = rule_name(outcome->rule);
          doc["term"] = to_structured(outcome->result);
        } else {
          doc["outcome"] = "value";
        }
        emit(out, doc);
      } else if (outcome) {
        out << print(outcome->result) << "  [" << rule_name(outcome->rule) << "]\n";
      } else {
        out << "value\n";
      }
      return 0;
    }

    case Command::Trace: {
      Trace tr = trace(term, config.fuel);
      if (structured) {
        emit(out, to_structured(tr));
      } else {
        for (const TraceEntry& entry : tr.entries) {
          out << "Step " << entry.index << ": " << print(entry.term) << '\n';
        }
      }
      return 0;
    }

    case Command::Classify:
      if (structured) {
        emit(out, nlohmann::json{{"state", to_string(classify(term))}});
      } else {
        out << to_string(classify(term)) << '\n';
      }
      return 0;

    case Command::Complete: {
      CompletionResult result = complete(term);
      if (structured) {
        nlohmann::json doc;
        doc["canonical"] = to_structured(result.canonical);
        doc["rewrites_applied"] = result.rewrites_applied;
        emit(out, doc);
      } else {
        out << print(result.canonical) << '\n';
        out << "rewrites applied: " << result.rewrites_applied << '\n';
      }
      return 0;
    }

    case Command::Check:
      break;  // handled above
  }
  return 0;
}

int main_with_args(int argc, const char* const* argv, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{"mirror calculus tools: parse, reduce and check terms"};
  app.require_subcommand(1);

  CliConfig config;
  bool structured = false;

  struct TermCommand {
    CLI::App* sub;
    Command command;
    std::optional<std::string> term_arg;
  };
  std::vector<TermCommand> term_commands;
  term_commands.reserve(8);  // CLI11 keeps references into the elements

  auto add_term_command = [&](const char* name, const char* desc, Command cmd) {
    CLI::App* sub = app.add_subcommand(name, desc);
    term_commands.push_back({sub, cmd, std::nullopt});
    TermCommand& tc = term_commands.back();
    sub->add_option("term", tc.term_arg, "term in the concrete syntax (reads stdin when omitted)");
    sub->add_flag("--structured", structured, "emit the machine-readable document instead of plain text");
    return sub;
  };

  add_term_command("parse", "parse a term and echo its canonical form", Command::Parse);
  add_term_command("step", "apply one reduction step", Command::Step);
  CLI::App* trace_cmd =
      add_term_command("trace", "reduce step by step under a fuel bound", Command::Trace);
  trace_cmd->add_option("--fuel", config.fuel, "maximum number of steps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_term_command("classify", "report the state of a term", Command::Classify);
  add_term_command("complete", "canonicalize by resolving paradox occurrences", Command::Complete);

  CLI::App* check_cmd =
      app.add_subcommand("check", "run the bounded-exhaustive property suites");
  check_cmd->add_option("--max-size", config.check_max_size, "term size bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  check_cmd
      ->add_option("--labels", config.check_labels, "labels used for named terms")
      ->delimiter(',')
      ->capture_default_str();
  check_cmd->add_flag("--structured", structured,
                      "emit the machine-readable document instead of plain text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  config.output_mode = structured ? OutputMode::Structured : OutputMode::Plain;
  if (check_cmd->parsed()) {
    config.command = Command::Check;
    return run(config, out, err);
  }
  for (const TermCommand& tc : term_commands) {
    if (!tc.sub->parsed()) continue;
    config.command = tc.command;
    if (tc.term_arg) {
      config.term_text = *tc.term_arg;
    } else {
      config.term_text.assign(std::istreambuf_iterator<char>(in),
                              std::istreambuf_iterator<char>());
    }
    return run(config, out, err);
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace mirror
