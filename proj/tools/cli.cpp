#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "zinbiel/audit.hpp"
#include "zinbiel/bialgebra.hpp"
#include "zinbiel/bimodule.hpp"
#include "zinbiel/catalog.hpp"
#include "zinbiel/coalgebra.hpp"
#include "zinbiel/identity.hpp"
#include "zinbiel/io.hpp"
#include "zinbiel/matched_pair.hpp"
#include "zinbiel/models.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/tensor_map.hpp"

namespace zinbiel::cli {

namespace {

struct Common {
  std::string format = "text";
  unsigned parallel = 1;
  std::string model;
  std::string out_file;
};

struct Input {
  AnyObject object;
  std::string subject;
};

Input load_input(const std::string& file, const std::string& model) {
  if (!model.empty()) {
    if (!file.empty()) throw InputError("give either an input file or --model, not both");
    return Input{build_model(model), model};
  }
  if (file.empty()) throw InputError("no input: give a JSON file or --model SPEC");
  return Input{load_any(read_file(file)), file};
}

const AlgebraTable& need_algebra(const Input& in, const std::string& what) {
  if (const auto* a = std::get_if<AlgebraTable>(&in.object)) return *a;
  throw InputError(what + " needs an algebra, got " + kind_of(in.object));
}

Identity resolve_identity(const std::string& text) {
  const auto& cat = catalog();
  if (auto it = cat.find(text); it != cat.end()) return it->second;
  const bool looks_like_expression =
      text.find_first_of("()=") != std::string::npos || text.find(' ') != std::string::npos;
  if (!looks_like_expression) throw InputError("unknown identity '" + text + "'");
  try {
    return parse_identity(text);
  } catch (const ParseError& first) {
    try {
      return expand_to_identity(parse_map_equation(text));
    } catch (const InputError&) {
      throw first;
    }
  }
}

std::vector<Verdict> check_verdicts(const Input& in, const std::vector<std::string>& names,
                                    unsigned workers) {
  std::vector<Verdict> out;
  const std::string kind = kind_of(in.object);
  auto mismatch = [&](const std::string& name) {
    return InputError("check '" + name + "' does not apply to a " + kind);
  };

  if (const auto* a = std::get_if<AlgebraTable>(&in.object)) {
    if (names.empty()) throw InputError("name at least one identity to check");
    for (const auto& name : names) {
      out.push_back(check_identity(*a, resolve_identity(name), name, workers));
    }
    return out;
  }
  if (const auto* c = std::get_if<CoalgebraTable>(&in.object)) {
    if (names.empty()) throw InputError("name at least one coalgebra law to check");
    for (const auto& name : names) {
      if (name == "cocomm_coassoc") {
        out.push_back(check_cocomm_coassoc(*c, workers));
      } else if (name == "lie_coalgebra") {
        out.push_back(check_lie_coalgebra(*c, workers));
      } else if (coalgebra_laws().count(name)) {
        out.push_back(check_coalgebra_law(*c, name, workers));
      } else if (name.find('=') != std::string::npos) {
        const MapEvaluator ev(nullptr, c);
        out.push_back(check_map_equation(ev, parse_map_equation(name), name, name, workers));
      } else if (catalog().count(name)) {
        throw mismatch(name);
      } else {
        throw InputError("unknown coalgebra law '" + name + "'");
      }
    }
    return out;
  }

  std::vector<std::string> wanted = names;
  if (const auto* b = std::get_if<Bimodule>(&in.object)) {
    if (wanted.empty()) wanted = {"bimodule"};
    for (const auto& name : wanted) {
      if (name == "bimodule") {
        for (auto& v : bimodule_axiom_verdicts(*b)) out.push_back(std::move(v));
      } else if (name == "semidirect") {
        out.push_back(check_identity(semidirect_sum(*b), catalog_identity("right_zinbiel"),
                                     "semidirect_right_zinbiel", workers));
      } else {
        throw mismatch(name);
      }
    }
    return out;
  }
  if (const auto* mp = std::get_if<MatchedPairData>(&in.object)) {
    if (wanted.empty()) wanted = {"matched_pair"};
    for (const auto& name : wanted) {
      if (name == "matched_pair") {
        for (auto& v : matched_pair_verdicts(*mp)) out.push_back(std::move(v));
      } else if (name == "double") {
        out.push_back(check_identity(double_algebra(*mp), catalog_identity("right_zinbiel"),
                                     "double_right_zinbiel", workers));
      } else {
        throw mismatch(name);
      }
    }
    return out;
  }
  const auto& bc = std::get<BialgebraCandidate>(in.object);
  if (wanted.empty()) wanted = {"manin_triple"};
  for (const auto& name : wanted) {
    if (name == "manin_triple") {
      const AuditReport r = check_manin_triple(bc, workers);
      out.insert(out.end(), r.premises.begin(), r.premises.end());
      out.insert(out.end(), r.claims.begin(), r.claims.end());
    } else if (name == "matched_pair") {
      for (auto& v : matched_pair_verdicts(dual_reps(bc))) out.push_back(std::move(v));
    } else {
      throw mismatch(name);
    }
  }
  return out;
}

void emit(const std::string& text, const Common& common, std::ostream& out) {
  if (common.out_file.empty()) {
    out << text;
  } else {
    write_file(common.out_file, text);
  }
}

std::string render(const AuditReport& report, const Common& common) {
  return common.format == "json" ? render_json(report) : render_text(report);
}

int cmd_check(const std::string& file, const std::vector<std::string>& names, const Common& common,
              std::ostream& out) {
  const Input in = load_input(file, common.model);
  AuditReport report;
  report.subject = in.subject;
  report.kind = "check of " + kind_of(in.object);
  report.claims = check_verdicts(in, names, common.parallel);
  if (common.format == "json") {
    emit(render_json(report), common, out);
  } else {
    std::string text;
    for (const auto& v : report.claims) text += render_text(v);
    emit(text, common, out);
  }
  const bool ok = std::all_of(report.claims.begin(), report.claims.end(),
                              [](const Verdict& v) { return v.holds; });
  return ok ? kOk : kViolation;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_audit(const std::string& file, const std::string& claims, const std::string& orientation,
              const Common& common, std::ostream& out) {
  const Input in = load_input(file, common.model);
  AuditReport report;
  if (const auto* a = std::get_if<AlgebraTable>(&in.object)) {
    Orientation o = Orientation::Right;
    if (orientation != "auto") {
      o = parse_orientation(orientation);
    } else if (!common.model.empty()) {
      o = parse_model_spec(common.model).orientation;
    } else if (!is_right_zinbiel(*a) && is_left_zinbiel(*a)) {
      o = Orientation::Left;
    }
    std::optional<std::vector<std::string>> only;
    if (claims != "all") only = split_list(claims);
    report = audit_claims(*a, o, in.subject, common.parallel, only);
  } else {
    if (claims != "all") throw InputError("--claims applies to algebra audits only");
    if (const auto* b = std::get_if<Bimodule>(&in.object)) {
      report = audit_bimodule(*b, in.subject, common.parallel);
    } else if (const auto* mp = std::get_if<MatchedPairData>(&in.object)) {
      report = audit_matched_pair(*mp, in.subject, common.parallel);
    } else if (const auto* c = std::get_if<CoalgebraTable>(&in.object)) {
      report = audit_coalgebra(*c, in.subject, common.parallel);
    } else {
      report = equivalence_audit(std::get<BialgebraCandidate>(in.object), common.parallel);
      report.subject = in.subject + " " + report.subject;
    }
  }
  emit(render(report, common), common, out);
  return kOk;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& files,
                  const Common& common, std::ostream& out) {
  std::vector<Input> inputs;
  if (!common.model.empty()) inputs.push_back(load_input("", common.model));
  for (const auto& f : files) inputs.push_back(load_input(f, ""));
  auto single = [&]() -> const Input& {
    if (inputs.size() != 1) throw InputError("construct " + kind + " takes exactly one input");
    return inputs.front();
  };

  std::string text;
  if (kind == "opposite") {
    const Input& in = single();
    if (const auto* c = std::get_if<CoalgebraTable>(&in.object)) {
      text = to_json(opposite_coproduct(*c));
    } else {
      text = to_json(opposite(need_algebra(in, kind)));
    }
  } else if (kind == "symmetrize") {
    text = to_json(symmetrize(need_algebra(single(), kind)));
  } else if (kind == "commutator") {
    text = to_json(commutator(need_algebra(single(), kind)));
  } else if (kind == "regular-bimodule") {
    text = to_json(regular_bimodule(need_algebra(single(), kind)));
  } else if (kind == "semidirect") {
    const Input& in = single();
    if (const auto* b = std::get_if<Bimodule>(&in.object)) {
      text = to_json(semidirect_sum(*b));
    } else {
      text = to_json(semidirect_sum(regular_bimodule(need_algebra(in, kind))));
    }
  } else if (kind == "double") {
    const Input& in = single();
    const auto* mp = std::get_if<MatchedPairData>(&in.object);
    if (!mp) throw InputError("construct double needs a matched_pair, got " + kind_of(in.object));
    text = to_json(double_algebra(*mp));
  } else if (kind == "dual") {
    const Input& in = single();
    if (const auto* c = std::get_if<CoalgebraTable>(&in.object)) {
      text = to_json(dualize_co(*c));
    } else {
      text = to_json(dualize(need_algebra(in, kind)));
    }
  } else if (kind == "bialgebra-double") {
    const Input& in = single();
    const auto* bc = std::get_if<BialgebraCandidate>(&in.object);
    if (!bc) {
      throw InputError("construct bialgebra-double needs a bialgebra_candidate, got " +
                       kind_of(in.object));
    }
    text = to_json(double_algebra(dual_reps(*bc)));
  } else if (kind == "direct-sum") {
    if (inputs.size() != 2) throw InputError("construct direct-sum takes exactly two inputs");
    text = to_json(direct_sum(need_algebra(inputs[0], kind), need_algebra(inputs[1], kind)));
  } else {
    throw InputError("unknown construction '" + kind + "'");
  }
  emit(text, common, out);
  return kOk;
}

int cmd_catalog(std::ostream& out) {
  for (const auto& e : catalog_entries()) {
    out << e.name << "\n    " << e.description << "\n    " << e.source << "\n";
  }
  for (const auto& [name, source] : coalgebra_laws()) {
    out << name << " (coalgebra)\n    " << source << "\n";
  }
  return kOk;
}

void add_common(CLI::App* cmd, Common& common, bool with_model, bool with_format) {
  if (with_format) {
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  }
  cmd->add_option("--parallel", common.parallel, "Worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--out", common.out_file, "Write output to FILE instead of stdout");
  if (with_model) {
    cmd->add_option("--model", common.model,
                    "Built-in model: trunc-int:right:N, trunc-int:left:N, free:K:M, zero:N");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for Zinbiel algebras, bimodules, matched pairs and coalgebras",
               "zinbiel"};
  app.require_subcommand(1);
  Common common;

  std::vector<std::string> check_args;
  auto* check = app.add_subcommand("check", "Check identities or structural laws on an object");
  check->add_option("args", check_args, "[FILE] IDENTITY...");
  add_common(check, common, true, true);

  std::string audit_file, claims = "all", orientation = "auto";
  auto* audit = app.add_subcommand("audit", "Evaluate every stated property and report findings");
  audit->add_option("file", audit_file, "Input JSON");
  audit->add_option("--claims", claims, "Comma-separated claim names, or all");
  audit->add_option("--orientation", orientation, "left, right or auto")
      ->check(CLI::IsMember({"left", "right", "auto"}));
  add_common(audit, common, true, true);

  std::string construct_kind;
  std::vector<std::string> construct_files;
  auto* construct = app.add_subcommand("construct", "Build a derived object as canonical JSON");
  construct->add_option("kind", construct_kind,
                        "opposite, symmetrize, commutator, regular-bimodule, semidirect, double, "
                        "dual, bialgebra-double, direct-sum")
      ->required();
  construct->add_option("inputs", construct_files, "Input JSON files");
  add_common(construct, common, true, false);

  std::string model_spec;
  auto* model = app.add_subcommand("model", "Write a built-in model as algebra JSON");
  model->add_option("spec", model_spec, "trunc-int:right:N, trunc-int:left:N, free:K:M, zero:N")
      ->required();
  model->add_option("--out", common.out_file, "Write output to FILE instead of stdout");

  auto* list = app.add_subcommand("catalog", "List built-in identities and coalgebra laws");

  std::vector<std::string> argv_storage{"zinbiel"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (check->parsed()) {
      std::string file;
      std::vector<std::string> names = check_args;
      if (common.model.empty()) {
        if (names.empty()) throw InputError("no input: give a JSON file or --model SPEC");
        file = names.front();
        names.erase(names.begin());
      }
      return cmd_check(file, names, common, out);
    }
    if (audit->parsed()) return cmd_audit(audit_file, claims, orientation, common, out);
    if (construct->parsed()) return cmd_construct(construct_kind, construct_files, common, out);
    if (model->parsed()) {
      emit(to_json(build_model(model_spec)), common, out);
      return kOk;
    }
    if (list->parsed()) return cmd_catalog(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at offset " << e.position() << ")\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace zinbiel::cli
