#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

#include "easycat/acceptance.hpp"
#include "easycat/catalog.hpp"
#include "easycat/category_ops.hpp"
#include "easycat/closure.hpp"
#include "easycat/error.hpp"
#include "easycat/linmap.hpp"
#include "easycat/moments.hpp"

namespace easycat {

namespace {

// Partition text, or a catalog name such as "fourblock" or "h:3".
Partition parse_arg(const std::string& text) {
  if (text.rfind("P(", 0) == 0 || text.rfind("P (", 0) == 0) return parse_partition(text);
  return named_partition(parse_named_partition(text));
}

std::vector<Partition> parse_args(const std::vector<std::string>& texts) {
  std::vector<Partition> out;
  for (const auto& t : texts) out.push_back(parse_arg(t));
  return out;
}

Rotation parse_rotation(const std::string& name) {
  static const std::pair<const char*, Rotation> table[] = {
      {"UpLeft", Rotation::UpLeft},         {"DownLeft", Rotation::DownLeft},
      {"UpRight", Rotation::UpRight},       {"DownRight", Rotation::DownRight},
      {"CycleLeft", Rotation::CycleLeft},   {"CycleRight", Rotation::CycleRight},
  };
  for (const auto& [n, r] : table)
    if (name == n) return r;
  throw UnknownName("unknown rotation '" + name +
                    "' (UpLeft, DownLeft, UpRight, DownRight, CycleLeft, CycleRight)");
}

CategoryId classical_category_for(RepKind kind) {
  switch (kind) {
    case RepKind::SymmetricGroup: return CategoryId::S;
    case RepKind::Hyperoctahedral: return CategoryId::H;
    case RepKind::Bistochastic: return CategoryId::B;
    case RepKind::OrthogonalSample: return CategoryId::O;
  }
  return CategoryId::S;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of two-row partition categories", "easycat"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for sampled orthogonal matrices")->capture_default_str();

  // parse
  auto* parse = app.add_subcommand("parse", "Print the canonical form of a partition");
  std::string parse_text;
  parse->add_option("partition", parse_text)->required();

  // op
  auto* op = app.add_subcommand("op", "Apply a category operation");
  std::string op_name;
  std::vector<std::string> op_args;
  op->add_option("operation", op_name)
      ->required()
      ->check(CLI::IsMember({"tensor", "compose", "involute", "rotate"}));
  op->add_option("arguments", op_args,
                 "Partitions; for rotate: <partition> <direction>")
      ->required();

  // closure
  auto* closure = app.add_subcommand("closure", "Bounded categorial hull of generators");
  std::vector<std::string> gens;
  std::size_t budget = kDefaultPointBudget, ibudget = kDefaultIntermediateBudget;
  closure->add_option("--gen", gens, "Generator (partition text or name)");
  closure->add_option("--budget", budget, "Point budget")->capture_default_str();
  closure->add_option("--ibudget", ibudget, "Intermediate budget")->capture_default_str();

  // classify
  auto* classify = app.add_subcommand("classify", "Classify the category generated by --gen");
  std::string mode = "easy";
  classify->add_option("--gen", gens, "Generator (partition text or name)");
  classify->add_option("--budget", budget, "Point budget")->capture_default_str();
  classify->add_option("--ibudget", ibudget, "Intermediate budget")->capture_default_str();
  classify->add_option("--mode", mode)
      ->check(CLI::IsMember({"easy", "noncrossing", "classical"}))
      ->capture_default_str();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List P(0,K) members of a category");
  std::string category;
  std::size_t points = 0;
  enumerate->add_option("--category", category)->required();
  enumerate->add_option("--points", points)->required();

  // count
  auto* count = app.add_subcommand("count", "Partition counts per category as CSV");
  std::size_t kmax = 8;
  count->add_option("--category", category)->required();
  count->add_option("--kmax", kmax)->capture_default_str();

  // verify-tp
  auto* verify = app.add_subcommand("verify-tp", "Check T_p against a classical group");
  std::string rep_name;
  std::size_t n = 3, samples = 20;
  verify->add_option("--rep", rep_name, "symmetric, hyperoctahedral, bistochastic, orthogonal")
      ->required();
  verify->add_option("--n", n)->capture_default_str();
  verify->add_option("--points", points, "All partitions with at most this many points")
      ->required();
  verify->add_option("--samples", samples)->capture_default_str();

  // moments
  auto* moments = app.add_subcommand("moments", "Moments of a named law as CSV");
  std::string law;
  bool squeeze = false, symmetrize = false;
  moments->add_option("--law", law)->required();
  moments->add_option("--kmax", kmax)->capture_default_str();
  moments->add_flag("--squeeze", squeeze);
  moments->add_flag("--symmetrize", symmetrize);

  // report
  auto* report = app.add_subcommand("report", "Run the acceptance suite");
  std::vector<int> only;
  report->add_option("--only", only, "Criterion ids to run");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (parse->parsed()) {
      out << canonical_text(parse_arg(parse_text)) << '\n';
    } else if (op->parsed()) {
      auto need = [&](std::size_t k) {
        if (op_args.size() != k)
          throw CLI::ValidationError(op_name + " takes " + std::to_string(k) + " arguments");
      };
      if (op_name == "tensor") {
        need(2);
        out << canonical_text(tensor(parse_arg(op_args[0]), parse_arg(op_args[1]))) << '\n';
      } else if (op_name == "compose") {
        need(2);
        const auto r = compose(parse_arg(op_args[0]), parse_arg(op_args[1]));
        out << canonical_text(r.result) << '\n' << "loops=" << r.removed_loops << '\n';
      } else if (op_name == "involute") {
        need(1);
        out << canonical_text(involute(parse_arg(op_args[0]))) << '\n';
      } else {
        need(2);
        out << canonical_text(rotate(parse_arg(op_args[0]), parse_rotation(op_args[1])))
            << '\n';
      }
    } else if (closure->parsed()) {
      const ClosureSet c = generate_closure(parse_args(gens), budget, ibudget);
      for (const auto& p : c.elements) out << canonical_text(p) << '\n';
      err << "elements=" << c.elements.size() << " classes=" << c.linear_forms.size()
          << " saturated=" << (c.saturated ? "true" : "false") << " rounds=" << c.rounds
          << " point_budget=" << budget << " intermediate_budget=" << ibudget << '\n';
    } else if (classify->parsed()) {
      const auto g = parse_args(gens);
      Classification cl;
      if (mode == "noncrossing")
        cl = classify_noncrossing(g);
      else if (mode == "classical")
        cl = classify_classical(g);
      else
        cl = classify_easy(g, {budget, ibudget});
      out << to_record(cl);
    } else if (enumerate->parsed()) {
      for (const auto& p : enumerate_category(parse_category(category), points))
        out << canonical_text(p) << '\n';
    } else if (count->parsed()) {
      const CategoryId id = parse_category(category);
      write_csv(out, category_name(id), count_moments(id, kmax));
    } else if (verify->parsed()) {
      const RepKind kind = parse_rep_kind(rep_name);
      const GroupRep rep = classical_rep(kind, n, samples, seed);
      const CategoryId cat = classical_category_for(kind);
      std::size_t total = 0, agree = 0;
      for (std::size_t size = 0; size <= points; ++size) {
        for (std::size_t k = 0; k <= size; ++k) {
          for_each_partition(k, size - k, false, [&](const Partition& p) {
            const bool pass = check_intertwiner(rep, p);
            const bool member = in_category(cat, p);
            ++total;
            agree += pass == member;
            out << canonical_text(p) << " | intertwiner=" << (pass ? "pass" : "fail")
                << " " << category_name(cat) << "=" << (member ? "in" : "out")
                << " agree=" << (pass == member ? "yes" : "no") << '\n';
          });
        }
      }
      err << "rep=" << to_string(kind) << " n=" << n << " partitions=" << total
          << " agree=" << agree << '\n';
    } else if (moments->parsed()) {
      const NamedLaw& l = named_law(law);
      MomentSequence seq = moments_from_cumulants(l.spec, l.unit, kmax);
      if (squeeze) seq = transform(seq, Transform::Squeeze);
      if (symmetrize) seq = transform(seq, Transform::Symmetrize);
      write_csv(out, l.name, seq);
    } else if (report->parsed()) {
      AcceptanceOptions opt;
      opt.seed = seed;
      opt.only = only;
      opt.on_result = [&](const CriterionResult& r) { out << format_result(r) << std::endl; };
      const auto results = run_acceptance(opt);
      const auto passed = std::count_if(results.begin(), results.end(),
                                        [](const CriterionResult& r) { return r.passed; });
      out << passed << "/" << results.size() << " criteria passed\n";
      return passed == static_cast<long>(results.size()) ? kExitOk : kExitCheckFailed;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitError& e) {
    err << "limit: " << e.what() << '\n';
    return kExitLimit;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace easycat
