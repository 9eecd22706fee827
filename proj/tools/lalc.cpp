// Copyright 2026 The lalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <unistd.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lalc/classify.hpp"
#include "lalc/json_io.hpp"
#include "lalc/oracle.hpp"
#include "lalc/prelude_text.hpp"
#include "lalc/session.hpp"

namespace {

enum Exit : int { kOk = 0, kInputError = 1, kBudget = 2, kOracleFailure = 3 };

struct RunConfig {
  std::optional<std::string> eval;
  std::optional<std::string> file;
  std::string strategy = "innermost";
  std::uint64_t max_steps = lalc::kDefaultBudget;
  bool trace = false;
  std::string format = "text";
  bool oracle_check = false;
  bool no_prelude = false;
};

int evaluate(const lalc::Session& session, const lalc::Term& t, const RunConfig& cfg) {
  const bool json = cfg.format == "json";
  const lalc::NormalResult r = session.normalize(t, cfg.trace);
  if (r.trace) {
    std::ostream& log = json ? std::cerr : std::cout;
    for (std::size_t k = 0; k < r.trace->size(); ++k) {
      log << lalc::format_step(k + 1, (*r.trace)[k]) << "\n";
    }
  }
  if (json) {
    std::cout << lalc::to_json(r.term).dump() << "\n";
  } else {
    std::cout << lalc::pretty(r.term) << "\n";
  }
  if (!r.normal()) {
    std::cerr << "step budget exceeded after " << r.steps << " steps\n";
    return kBudget;
  }
  const lalc::Classification c = lalc::classify_normal_form(r.term, session.rules());
  if (c.shape == lalc::Shape::Stuck) {
    std::cerr << "stuck: " << c.reason << "\n";
  }
  if (cfg.oracle_check) {
    const lalc::CheckResult chk = lalc::check(t, r.term);
    std::cerr << "oracle: " << lalc::to_string(chk.verdict) << " " << chk.detail << "\n";
    if (chk.verdict == lalc::Verdict::Fail) {
      return kOracleFailure;
    }
  }
  return kOk;
}

int run_text(lalc::Session& session, const std::string& text, const RunConfig& cfg) {
  std::optional<lalc::Term> main;
  try {
    main = session.load(text);
  } catch (const lalc::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const lalc::DefinitionBudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (!main) {
    return kOk;
  }
  return evaluate(session, *main, cfg);
}

int repl(lalc::Session& session, RunConfig cfg) {
  const bool tty = isatty(STDIN_FILENO) != 0;
  std::string line;
  while (true) {
    if (tty) std::cout << "lalc> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line == ":quit" || line == ":q") break;
    if (line == ":trace on") {
      cfg.trace = true;
      continue;
    }
    if (line == ":trace off") {
      cfg.trace = false;
      continue;
    }
    if (line.front() == ':') {
      std::cerr << "unknown command " << line << "\n";
      continue;
    }
    if (line.rfind("let", 0) == 0 && line.find_last_not_of(" \t") != std::string::npos &&
        line[line.find_last_not_of(" \t")] != ';') {
      line += ';';
    }
    run_text(session, line, cfg);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpreter for the linear-algebraic lambda-calculus"};
  RunConfig cfg;
  auto* eval = app.add_option("--eval", cfg.eval, "Evaluate a program given as a string");
  app.add_option("--file", cfg.file, "Evaluate a .lal file")->excludes(eval);
  app.add_flag("--trace", cfg.trace, "Print every rewrite step");
  app.add_option("--max-steps", cfg.max_steps, "Step budget")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  app.add_option("--strategy", cfg.strategy, "innermost, outermost or random:<seed>");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--oracle-check", cfg.oracle_check, "Compare the result with the dense semantics");
  app.add_flag("--no-prelude", cfg.no_prelude, "Do not load the standard gates");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  lalc::Strategy strategy;
  try {
    strategy = lalc::Strategy::parse(cfg.strategy);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  lalc::Session session(strategy, cfg.max_steps);
  if (!cfg.no_prelude) {
    lalc::Session library;
    try {
      library.load(lalc::kPreludeText);
    } catch (const lalc::DefinitionBudgetExceeded& e) {
      std::cerr << "prelude: " << e.what() << "\n";
      return kBudget;
    }
    session.import(library.environment());
  }

  if (cfg.eval) {
    return run_text(session, *cfg.eval, cfg);
  }
  if (cfg.file) {
    std::ifstream in(*cfg.file);
    if (!in) {
      std::cerr << "cannot read " << *cfg.file << "\n";
      return kInputError;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return run_text(session, buf.str(), cfg);
  }
  return repl(session, cfg);
}
