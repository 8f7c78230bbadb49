#include "gammainf/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gammainf/correspond.hpp"
#include "gammainf/derive.hpp"
#include "gammainf/ginf_check.hpp"
#include "gammainf/parse.hpp"
#include "gammainf/print.hpp"
#include "gammainf/pts_check.hpp"

namespace gammainf {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFuel = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::SyntaxError, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Collects one command's result; rendered as text or as the stable JSON
// object {status, type, diagnostics, ...}.
struct Output {
  bool json = false;
  std::string status = "ok";
  Json extra = Json::object();
  std::vector<std::string> diagnostics;
  std::vector<std::string> lines;

  void diagnose(const std::string& message) { diagnostics.push_back(message); }

  int finish(int code, std::ostream& out, std::ostream& err) const {
    if (json) {
      Json doc;
      doc["status"] = status;
      doc["type"] = extra.contains("type") ? extra["type"] : Json(nullptr);
      doc["diagnostics"] = diagnostics;
      for (const auto& [key, value] : extra.items()) {
        if (key != "type") doc[key] = value;
      }
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& line : lines) out << line << "\n";
      for (const auto& d : diagnostics) err << d << "\n";
    }
    return code;
  }
};

struct CommonArgs {
  Fuel fuel = kDefaultFuel;
  bool json = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--fuel", fuel, "maximum beta steps per conversion question");
    cmd->add_flag("--json", json, "machine-readable output");
  }
};

ParseOptions options_for(const PtsSpec& spec) {
  ParseOptions opts;
  opts.sorts.clear();
  for (const auto& s : spec.sorts()) opts.sorts.insert(s.str());
  opts.sorts.insert("*");
  opts.sorts.insert("#");
  return opts;
}

int run_parsed(const std::string& command, const CommonArgs& common,
               const std::string& spec_path, const std::string& ctx_path, bool annotated,
               const std::vector<std::string>& files, std::size_t size,
               std::size_t tag_depth, std::size_t names, std::size_t ctx_decls,
               std::size_t ctx_tag_size, std::ostream& out, std::ostream& err) {
  Output output;
  output.json = common.json;

  try {
    if (command == "normalize" || command == "hfv" || command == "hfvt") {
      ParseOptions opts;
      TermPtr term = parse_term(read_file(files.at(0)), opts);
      if (command == "normalize") {
        TermPtr nf = normalize(term, common.fuel);
        output.extra["term"] = print_term(nf);
        output.lines.push_back(print_term(nf));
        return output.finish(kExitOk, out, err);
      }
      VarSet vars = command == "hfv" ? hfv(term) : hfvt(term);
      Json list = Json::array();
      for (const FreeVar& v : vars) {
        list.push_back(print_var(v));
        output.lines.push_back(print_var(v));
      }
      output.extra["variables"] = list;
      return output.finish(kExitOk, out, err);
    }

    PtsSpec spec = PtsSpec::load_file(spec_path);
    ParseOptions opts = options_for(spec);

    if (command == "enumerate") {
      EnumBudget budget;
      budget.max_term_size = size;
      budget.max_tag_depth = tag_depth;
      budget.max_names_per_tag = names;
      budget.sort_alphabet.assign(spec.sorts().begin(), spec.sorts().end());
      budget.fuel = common.fuel;
      CorrespondenceReport report =
          correspondence_report(spec, budget, ctx_decls, ctx_tag_size);
      Json rep;
      rep["terms_enumerated"] = report.terms_enumerated;
      rep["ginf_derivable"] = report.ginf_derivable;
      rep["contexts_enumerated"] = report.contexts_enumerated;
      rep["pts_judgments_checked"] = report.pts_judgments_checked;
      rep["pts_judgments_derivable"] = report.pts_judgments_derivable;
      rep["violations_to_pts"] = report.violations_to_pts;
      rep["violations_to_ginf"] = report.violations_to_ginf;
      rep["budget_exhausted"] = report.budget_exhausted;
      output.extra["report"] = rep;
      std::istringstream text(format_report(report));
      for (std::string line; std::getline(text, line);) output.lines.push_back(line);
      if (!report.ok()) {
        output.status = "fail";
        return output.finish(kExitFail, out, err);
      }
      return output.finish(kExitOk, out, err);
    }

    if (command == "check-ginf" || command == "synth") {
      TermPtr term = parse_term(read_file(files.at(0)), opts);
      if (command == "check-ginf" && files.size() == 2) {
        TermPtr type = parse_term(read_file(files.at(1)), opts);
        bool ok = ginf_check(spec, GinfJudgment(term, type), common.fuel);
        output.status = ok ? "ok" : "fail";
        output.lines.push_back(ok ? "true" : "false");
        return output.finish(ok ? kExitOk : kExitFail, out, err);
      }
      TermPtr type;
      try {
        type = ginf_infer(spec, term, common.fuel);
      } catch (const FuelExhaustedError&) {
        throw;
      } catch (const Error& e) {
        output.status = "fail";
        output.diagnose(e.what());
        return output.finish(kExitFail, out, err);
      }
      if (command == "check-ginf") {
        output.extra["type"] = print_term(type);
        output.lines.push_back(print_term(type));
        return output.finish(kExitOk, out, err);
      }
      // synth: recover the annotated context
      AnnotatedJudgment annotated =
          synthesize_context(GinfJudgment(term, type), spec, common.fuel);
      Json ctx_list = Json::array();
      for (const auto& d : annotated.ctx().decls()) {
        std::string line = print_var(d.var) + " : " + print_term(d.type);
        ctx_list.push_back(line);
        output.lines.push_back(line);
      }
      output.extra["type"] = print_term(type);
      output.extra["context"] = ctx_list;
      output.lines.push_back(print_judgment(annotated.judgment()));
      return output.finish(kExitOk, out, err);
    }

    if (command == "check-pts" || command == "annotate") {
      Context ctx = parse_context(read_file(ctx_path), annotated, opts);
      ParseOptions ctx_opts = opts;
      ctx_opts.context = &ctx;
      TermPtr term = parse_term(read_file(files.at(0)), ctx_opts);

      if (command == "annotate") {
        TermPtr type = parse_term(read_file(files.at(1)), ctx_opts);
        AnnotatedJudgment result = annotate(ContextfulJudgment(ctx, term, type));
        Json ctx_list = Json::array();
        for (const auto& d : result.ctx().decls()) {
          std::string line = print_var(d.var) + " : " + print_term(d.type);
          ctx_list.push_back(line);
          output.lines.push_back(line);
        }
        output.extra["type"] = print_term(result.type());
        output.extra["subject"] = print_term(result.subject());
        output.extra["context"] = ctx_list;
        output.lines.push_back(print_judgment(result.judgment()));
        return output.finish(kExitOk, out, err);
      }

      if (files.size() == 2) {
        TermPtr type = parse_term(read_file(files.at(1)), ctx_opts);
        bool ok = check_judgment(spec, ContextfulJudgment(ctx, term, type), common.fuel);
        output.status = ok ? "ok" : "fail";
        output.lines.push_back(ok ? "true" : "false");
        return output.finish(ok ? kExitOk : kExitFail, out, err);
      }
      TermPtr type;
      try {
        type = infer_type(spec, ctx, term, common.fuel);
      } catch (const FuelExhaustedError&) {
        throw;
      } catch (const Error& e) {
        output.status = "fail";
        output.diagnose(e.what());
        return output.finish(kExitFail, out, err);
      }
      output.extra["type"] = print_term(type);
      output.lines.push_back(print_term(type));
      return output.finish(kExitOk, out, err);
    }

    output.status = "error";
    output.diagnose("unknown command '" + command + "'");
    return output.finish(kExitUsage, out, err);
  } catch (const FuelExhaustedError& e) {
    output.status = "fuel-exhausted";
    output.diagnose(e.what());
    return output.finish(kExitFuel, out, err);
  } catch (const BudgetExhaustedError& e) {
    output.status = "fuel-exhausted";
    output.diagnose(e.what());
    return output.finish(kExitFuel, out, err);
  } catch (const Error& e) {
    output.status = "error";
    output.diagnose(e.what());
    return output.finish(kExitUsage, out, err);
  } catch (const std::exception& e) {
    output.status = "error";
    output.diagnose(e.what());
    return output.finish(kExitUsage, out, err);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dual-presentation Pure Type System kernel"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string spec_path;
  std::string ctx_path;
  bool annotated = false;
  std::vector<std::string> files;
  std::size_t size = 4;
  std::size_t tag_depth = 2;
  std::size_t names = 1;
  std::size_t ctx_decls = 2;
  std::size_t ctx_tag_size = 3;

  auto* check_pts = app.add_subcommand("check-pts", "check or infer under a context");
  check_pts->add_option("--spec", spec_path, "spec file")->required();
  check_pts->add_option("--ctx", ctx_path, "context file")->required();
  check_pts->add_flag("--annotated", annotated, "untagged declarations get tag = type");
  check_pts->add_option("files", files, "TERMFILE [TYPEFILE]")->expected(1, 2);
  common.attach(check_pts);

  auto* check_ginf = app.add_subcommand("check-ginf", "check or infer context-free");
  check_ginf->add_option("--spec", spec_path, "spec file")->required();
  check_ginf->add_option("files", files, "TERMFILE [TYPEFILE]")->expected(1, 2);
  common.attach(check_ginf);

  auto* synth = app.add_subcommand("synth", "synthesize an annotated context");
  synth->add_option("--spec", spec_path, "spec file")->required();
  synth->add_option("files", files, "TERMFILE")->expected(1);
  common.attach(synth);

  auto* annotate_cmd = app.add_subcommand("annotate", "rename a judgment to annotated form");
  annotate_cmd->add_option("--spec", spec_path, "spec file")->required();
  annotate_cmd->add_option("--ctx", ctx_path, "context file")->required();
  annotate_cmd->add_option("files", files, "TERMFILE TYPEFILE")->expected(2);
  common.attach(annotate_cmd);

  auto* normalize_cmd = app.add_subcommand("normalize", "beta-normalize a term");
  normalize_cmd->add_option("files", files, "TERMFILE")->expected(1);
  common.attach(normalize_cmd);

  auto* hfv_cmd = app.add_subcommand("hfv", "hereditarily free variables");
  hfv_cmd->add_option("files", files, "TERMFILE")->expected(1);
  common.attach(hfv_cmd);

  auto* hfvt_cmd = app.add_subcommand("hfvt", "hereditarily free variables of the tags");
  hfvt_cmd->add_option("files", files, "TERMFILE")->expected(1);
  common.attach(hfvt_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "oracle correspondence report");
  enum_cmd->add_option("--spec", spec_path, "spec file")->required();
  enum_cmd->add_option("--size", size, "maximum term size")->required();
  enum_cmd->add_option("--tag-depth", tag_depth, "maximum tag nesting");
  enum_cmd->add_option("--names", names, "free-variable name pool size");
  enum_cmd->add_option("--ctx-decls", ctx_decls, "maximum context declarations");
  enum_cmd->add_option("--ctx-tag-size", ctx_tag_size, "maximum context tag size");
  common.attach(enum_cmd);

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("gammainf"));
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  return run_parsed(command, common, spec_path, ctx_path, annotated, files, size, tag_depth,
                    names, ctx_decls, ctx_tag_size, out, err);
}

}  // namespace gammainf
