#pragma once

// Command-line driver. Exit codes: 0 decided, 2 syntax or usage error,
// 3 budget exhausted (or an undecided enumeration), 4 internal cross-check
// failure.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magnus/oracles.hpp"

namespace magnus::cli {

enum ExitCode : int { kDecided = 0, kUsage = 2, kExhausted = 3, kInvariant = 4 };

namespace detail {

struct Options {
  std::size_t max_depth = SolverLimits{}.max_depth;
  std::size_t max_word_len = SolverLimits{}.max_word_len;
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;

  std::string presentation;
  std::string word;
  std::string subset;
  std::string root;
  std::string relator;
  std::string alphabet = "a,b";
  std::string suite;
  std::optional<std::size_t> max_len;
  std::size_t conj_len = 2;
  std::size_t factors = 2;

  SolverLimits limits() const {
    SolverLimits l;
    l.max_depth = max_depth;
    l.max_word_len = max_word_len;
    return l;
  }
};

// Reported offsets refer to the argument they occurred in.
struct ArgumentError {
  std::string argument;
  std::string message;
  std::optional<std::size_t> offset;
};

template <class F>
auto parsing(const std::string& argument, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SyntaxError& e) {
    throw ArgumentError{argument, e.what(), e.offset()};
  } catch (const UnknownGenerator& e) {
    throw ArgumentError{argument, e.what(), e.offset()};
  } catch (const EmptyRelator& e) {
    throw ArgumentError{argument, e.what(), std::nullopt};
  } catch (const PreconditionViolated& e) {
    throw ArgumentError{argument, e.what(), std::nullopt};
  }
}

inline nlohmann::json stats_json(const SolverStats& s) {
  return {{"depth_reached", s.depth_reached},
          {"memo_hits", s.memo_hits},
          {"words_allocated", s.words_allocated},
          {"membership_calls", s.membership_calls}};
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::parsing;
  detail::Options o;
  CLI::App app{"Word problem and Magnus subgroup membership for one-relator groups", "magnus"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-depth", o.max_depth, "hierarchy depth budget")->check(CLI::PositiveNumber);
  app.add_option("--max-word-len", o.max_word_len, "intermediate word length budget")->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json, "emit one JSON document");
  app.add_option("--seed", o.seed, "seed for randomized suites");
  app.add_option("--jobs", o.jobs, "worker threads for check suites")->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "decide whether WORD is trivial");
  solve->add_option("presentation", o.presentation)->required();
  solve->add_option("word", o.word)->required();

  auto* member = app.add_subcommand("member", "decide membership of WORD in the subgroup generated by --subset");
  member->add_option("presentation", o.presentation)->required();
  member->add_option("word", o.word)->required();
  member->add_option("--subset", o.subset, "comma-separated generators")->required();

  auto* hierarchy = app.add_subcommand("hierarchy", "print the breakdown tree");
  hierarchy->add_option("presentation", o.presentation)->required();

  auto* is_root_cmd = app.add_subcommand("is-root", "is S a root of R");
  is_root_cmd->add_option("s", o.root)->required();
  is_root_cmd->add_option("r", o.relator)->required();
  is_root_cmd->add_option("--alphabet", o.alphabet, "comma-separated generators");

  auto* oracle = app.add_subcommand("oracle", "independent oracles");
  oracle->require_subcommand(1);
  auto* ncl = oracle->add_subcommand("ncl", "search for WORD in the normal closure of the relator");
  ncl->add_option("presentation", o.presentation)->required();
  ncl->add_option("word", o.word)->required();
  ncl->add_option("--conj-len", o.conj_len, "maximum conjugator length");
  ncl->add_option("--factors", o.factors, "maximum number of conjugates");

  auto* check = app.add_subcommand("check", "run a check suite");
  check->add_option("suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"conjugacy", "commutator-roots", "freiheitssatz", "modular-group"}));
  check->add_option("--max-len", o.max_len, "enumeration bound");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kDecided;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  nlohmann::json doc;
  doc["command"] = args;
  auto finish = [&](int code) {
    if (o.json) {
      doc["exit_code"] = code;
      doc["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out << doc.dump(2) << '\n';
    }
    return code;
  };
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    err << "error: " << message << '\n';
    doc["error"] = {{"kind", kind}, {"message", message}};
    return finish(code);
  };

  Solver solver(o.limits());
  try {
    if (*solve || *member) {
      const auto p = parsing("presentation", [&] { return parse_presentation(o.presentation); });
      const auto w = parsing("word", [&] { return parse_word(o.word, p.alphabet()); });
      if (*solve) {
        const bool t = solver.word_problem(p, w).trivial();
        doc["verdict"] = t ? "trivial" : "nontrivial";
        if (!o.json) out << (t ? "trivial" : "nontrivial") << '\n';
      } else {
        const auto s = parsing("--subset", [&] { return parse_subset(o.subset, p.alphabet()); });
        const auto v = solver.magnus_membership(p, w, s);
        if (v.member()) {
          const Word& e = v.witness->expression;
          if (!solver.word_problem(p, w * e.inverse()).trivial()) {
            throw InvariantViolation("membership witness does not equal the query word");
          }
          doc["verdict"] = "member";
          doc["witness"] = format_word(e, p.alphabet());
          if (!o.json) out << "member " << format_word(e, p.alphabet()) << '\n';
        } else {
          doc["verdict"] = "not-member";
          if (!o.json) out << "not-member\n";
        }
      }
      doc["stats"] = detail::stats_json(solver.stats());
      return finish(kDecided);
    }

    if (*hierarchy) {
      const auto p = parsing("presentation", [&] { return parse_presentation(o.presentation); });
      const auto tree = solver.hierarchy_tree(p);
      doc["hierarchy"] = hierarchy_json(tree);
      doc["depth"] = tree.depth();
      if (!o.json) print_hierarchy(out, tree);
      return finish(kDecided);
    }

    if (*is_root_cmd) {
      const auto a = parsing("--alphabet", [&] { return parse_alphabet(o.alphabet); });
      const auto s = parsing("s", [&] { return parse_word(o.root, a); });
      const auto r = parsing("r", [&] { return parse_word(o.relator, a); });
      if (s.empty()) throw detail::ArgumentError{"s", "a root must be a nontrivial word", std::nullopt};
      const bool root = is_root(s, r, a, solver);
      doc["verdict"] = root;
      doc["stats"] = detail::stats_json(solver.stats());
      if (!o.json) out << (root ? "true" : "false") << '\n';
      return finish(kDecided);
    }

    if (*ncl) {
      const auto p = parsing("presentation", [&] { return parse_presentation(o.presentation); });
      const auto w = parsing("word", [&] { return parse_word(o.word, p.alphabet()); });
      const auto cert = ncl_semidecide(p, w, o.conj_len, o.factors);
      if (!cert) {
        doc["verdict"] = "unknown";
        if (!o.json) out << "unknown\n";
        return finish(kExhausted);
      }
      nlohmann::json factors = nlohmann::json::array();
      if (!o.json) out << "certificate " << cert->factors.size() << '\n';
      for (const auto& f : cert->factors) {
        factors.push_back({{"conjugator", format_word(f.conjugator, p.alphabet())}, {"exponent", f.exponent}});
        if (!o.json) out << "  " << format_word(f.conjugator, p.alphabet()) << " r^" << f.exponent << '\n';
      }
      doc["verdict"] = "certificate";
      doc["factors"] = factors;
      return finish(kDecided);
    }

    if (*check) {
      CheckReport rep;
      if (o.suite == "conjugacy") {
        rep = check_conjugacy_theorem(o.max_len.value_or(4), o.limits(), o.jobs);
      } else if (o.suite == "commutator-roots") {
        rep = check_commutator_roots(o.max_len.value_or(4), o.limits(), o.jobs);
      } else if (o.suite == "freiheitssatz") {
        FreiheitssatzParams params;
        params.seed = o.seed;
        params.max_len = o.max_len.value_or(params.max_len);
        rep = check_freiheitssatz(params, o.limits(), o.jobs);
      } else {
        rep = check_modular_group(o.max_len.value_or(12));
      }
      doc["report"] = rep.to_json();
      if (!o.json) rep.write(out);
      if (!rep.violations.empty()) return finish(kInvariant);
      return finish(rep.exhausted.empty() ? kDecided : kExhausted);
    }
  } catch (const detail::ArgumentError& e) {
    if (e.offset) doc["offset"] = *e.offset;
    doc["argument"] = e.argument;
    return fail(kUsage, "syntax", e.argument + ": " + e.message);
  } catch (const ResourceExhausted& e) {
    doc["stats"] = detail::stats_json(solver.stats());
    return fail(kExhausted, "resource-exhausted", e.what());
  } catch (const InvariantViolation& e) {
    return fail(kInvariant, "invariant-violation", e.what());
  } catch (const PreconditionViolated& e) {
    return fail(kUsage, "usage", e.what());
  }
  return fail(kUsage, "usage", "no command");
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace magnus::cli
