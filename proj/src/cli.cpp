#include "mdl/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mdl/api.hpp"
#include "mdl/sidecar.hpp"

namespace mdl::cli {

namespace {

struct UsageFailure {
  std::string message;
};

std::string trim(std::string s) {
  auto is_ws = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_ws(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && is_ws(static_cast<unsigned char>(s[start]))) ++start;
  return s.substr(start);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageFailure{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// An expression argument: literal text, `@path`, or `-` (the default) for stdin.
std::string resolve_expression(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return trim(buf.str());
  }
  if (arg.front() == '@') return trim(read_file(arg.substr(1)));
  return arg;
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  const Environment& env;
};

// Parses or reports the caret-annotated error; nullopt means exit kInvalid.
std::optional<GrantSet> parse_or_report(const std::string& text, Context& ctx) {
  try {
    return parse_grant(text);
  } catch (const ParseError& e) {
    ctx.err << e.annotate(text);
    return std::nullopt;
  }
}

LicenseTemplate select_template(bool corrected, const Environment& env) {
  if (env.template_dir) {
    auto file = std::filesystem::path(*env.template_dir) / (corrected ? "corrected.json" : "verbatim.json");
    try {
      return LicenseTemplate::load(file);
    } catch (const std::exception& e) {
      throw UsageFailure{"MDL_TEMPLATE_DIR: " + std::string(e.what())};
    }
  }
  return corrected ? LicenseTemplate::corrected() : LicenseTemplate::verbatim();
}

struct ParseArgs {
  std::string expression = "-";
  bool canonical = false;
  bool json = false;
};

int cmd_parse(const ParseArgs& a, Context& ctx) {
  std::string text = resolve_expression(a.expression, ctx.in);
  auto g = parse_or_report(text, ctx);
  if (!g) return kInvalid;
  if (a.json)
    ctx.out << to_text(api::parse_document(*g));
  else
    ctx.out << serialize(*g) << '\n';
  return kOk;
}

struct GenerateArgs {
  std::string expression = "-";
  bool corrected = false;
  std::string out_file;
  bool json = false;
};

int cmd_generate(const GenerateArgs& a, Context& ctx) {
  std::string text = resolve_expression(a.expression, ctx.in);
  auto g = parse_or_report(text, ctx);
  if (!g) return kInvalid;
  LicenseDocument doc = generate_license(*g, select_template(a.corrected, ctx.env));
  if (a.json) {
    ctx.out << to_text(api::license_document(doc));
    return kOk;
  }
  if (!a.out_file.empty()) {
    std::ofstream f(a.out_file, std::ios::binary);
    if (!f) throw UsageFailure{"cannot write '" + a.out_file + "'"};
    f << doc.text;
    ctx.out << "sha256:" << doc.content_hash << "  " << a.out_file << '\n';
  } else {
    ctx.out << doc.text;
    ctx.err << "sha256:" << doc.content_hash << '\n';
  }
  return kOk;
}

struct CheckArgs {
  std::string expression = "-";
  std::string action;
  std::string asset;
  std::string actor;
  std::string domain;
  bool sublicense = false;
  bool json = false;
};

int cmd_check(const CheckArgs& a, Context& ctx) {
  auto cap = capability_from_token(a.action);
  if (!cap) throw UsageFailure{"unknown action '" + a.action + "'"};
  ActionQuery q = neutral_query(*cap);
  if (!a.asset.empty()) {
    auto asset = asset_from_token(a.asset);
    if (!asset) throw UsageFailure{"unknown asset '" + a.asset + "'"};
    q.asset = *asset;
  }
  if (!a.actor.empty()) q.actor = a.actor;
  if (!a.domain.empty()) q.target_domain = a.domain;
  q.involves_sublicense = a.sublicense;
  try {
    validate(q);
  } catch (const QueryError& e) {
    throw UsageFailure{e.what()};
  }

  std::string text = resolve_expression(a.expression, ctx.in);
  auto g = parse_or_report(text, ctx);
  if (!g) return kInvalid;

  Decision d = check(*g, q);
  if (a.json) {
    ctx.out << to_text(api::decision_document(d));
  } else {
    ctx.out << "verdict: " << token(d.verdict) << '\n';
    ctx.out << "reason: " << d.reason << '\n';
    for (Obligation o : d.obligations) ctx.out << "obligation: " << token(o) << " - " << description(o) << '\n';
    for (const auto& t : d.trace) ctx.out << "trace: " << token(t.right) << " -> " << token(t.capability) << '\n';
  }
  return d.permitted() ? kOk : kForbidden;
}

struct CombineArgs {
  std::vector<std::string> expressions;
  bool json = false;
};

int cmd_combine(const CombineArgs& a, Context& ctx) {
  if (a.expressions.size() < 2) throw UsageFailure{"combine needs at least two expressions"};
  std::vector<GrantSet> grants;
  bool failed = false;
  for (const auto& arg : a.expressions) {
    std::string text = resolve_expression(arg, ctx.in);
    if (auto g = parse_or_report(text, ctx))
      grants.push_back(*g);
    else
      failed = true;
  }
  if (failed) return kInvalid;
  CombinationReport report = combine(grants);
  if (a.json) {
    ctx.out << to_text(api::combination_document(report));
  } else {
    ctx.out << serialize(report.effective) << '\n';
    for (const auto& c : report.conflicts) ctx.out << "conflict: " << token(c.kind) << ": " << c.message << '\n';
  }
  return kOk;
}

struct TopsheetArgs {
  std::string expression = "-";
  std::string format = "md";
};

int cmd_topsheet(const TopsheetArgs& a, Context& ctx) {
  auto format = top_sheet_format_from_token(a.format);
  if (!format) throw UsageFailure{"unknown format '" + a.format + "' (expected md, html, json)"};
  std::string text = resolve_expression(a.expression, ctx.in);
  auto g = parse_or_report(text, ctx);
  if (!g) return kInvalid;
  ctx.out << render_top_sheet(*g, *format);
  return kOk;
}

struct SidecarArgs {
  std::string path;
  bool strict = false;
};

int cmd_validate_sidecar(const SidecarArgs& a, Context& ctx) {
  std::string bytes = read_file(a.path);
  try {
    Sidecar s = read_sidecar(bytes, a.strict ? ReadMode::Strict : ReadMode::Lenient);
    ctx.out << "valid: " << a.path << '\n';
    ctx.out << "expression: " << s.expression << '\n';
    ctx.out << "licensor: " << s.licensor.name << '\n';
    for (auto it = s.extra.begin(); it != s.extra.end(); ++it)
      ctx.out << "note: unknown member '" << it.key() << "' preserved\n";
    if (write_sidecar(s) != bytes) ctx.out << "note: file is not in canonical layout\n";
    return kOk;
  } catch (const SidecarError& e) {
    ctx.err << "invalid: " << a.path << ": " << (e.path().empty() ? "/" : e.path()) << ": "
            << e.message() << '\n';
    return kInvalid;
  }
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  if (const char* dir = std::getenv("MDL_TEMPLATE_DIR"); dir && *dir) env.template_dir = dir;
  return env;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Montreal Data License toolkit: parse, check, combine and generate MDL grants", "mdl"};
  app.require_subcommand(1);

  ParseArgs parse_args;
  auto* parse_cmd = app.add_subcommand("parse", "Validate an expression and print its canonical form");
  parse_cmd->add_option("expression", parse_args.expression, "Expression, @file, or - for stdin");
  parse_cmd->add_flag("--canonical", parse_args.canonical, "Print the canonical expression (default)");
  parse_cmd->add_flag("--json", parse_args.json, "Print grant and closure as JSON");

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Generate the license text for an expression");
  gen_cmd->add_option("expression", gen_args.expression, "Expression, @file, or - for stdin");
  gen_cmd->add_flag("--corrected", gen_args.corrected, "Use the corrected template wording");
  gen_cmd->add_option("--out", gen_args.out_file, "Write the license text to FILE");
  gen_cmd->add_flag("--json", gen_args.json, "Print text, hash and template version as JSON");

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Decide whether an act is permitted");
  check_cmd->add_option("expression", check_args.expression, "Expression, @file, or - for stdin");
  check_cmd->add_option("--action", check_args.action, "Capability token, e.g. train-model")->required();
  check_cmd->add_option("--asset", check_args.asset, "Asset kind, e.g. trained-model");
  check_cmd->add_option("--actor", check_args.actor, "Party performing the act");
  check_cmd->add_option("--domain", check_args.domain, "Field of use, e.g. military");
  check_cmd->add_flag("--sublicense", check_args.sublicense, "The act involves sub-licensing");
  check_cmd->add_flag("--json", check_args.json, "Print the decision as JSON");

  CombineArgs combine_args;
  auto* combine_cmd = app.add_subcommand("combine", "Effective grant of a dataset built from several sources");
  combine_cmd->add_option("expressions", combine_args.expressions, "Two or more expressions or @files")
      ->required();
  combine_cmd->add_flag("--json", combine_args.json, "Print the combination report as JSON");

  TopsheetArgs topsheet_args;
  auto* topsheet_cmd = app.add_subcommand("topsheet", "Render the Top Sheet rights summary");
  topsheet_cmd->add_option("expression", topsheet_args.expression, "Expression, @file, or - for stdin");
  topsheet_cmd->add_option("--format", topsheet_args.format, "md, html or json");

  SidecarArgs sidecar_args;
  auto* sidecar_cmd = app.add_subcommand("validate-sidecar", "Validate an MDL.json sidecar file");
  sidecar_cmd->add_option("path", sidecar_args.path, "Sidecar file")->required();
  sidecar_cmd->add_flag("--strict", sidecar_args.strict, "Reject unknown members");

  bool template_corrected = false;
  auto* template_cmd = app.add_subcommand("template", "Print a license template as JSON");
  template_cmd->add_flag("--corrected", template_corrected, "Print the corrected variant");
  template_cmd->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "mdl: " << e.what() << '\n';
    return kUsage;
  }

  Context ctx{in, out, err, env};
  try {
    if (*parse_cmd) return cmd_parse(parse_args, ctx);
    if (*gen_cmd) return cmd_generate(gen_args, ctx);
    if (*check_cmd) return cmd_check(check_args, ctx);
    if (*combine_cmd) return cmd_combine(combine_args, ctx);
    if (*topsheet_cmd) return cmd_topsheet(topsheet_args, ctx);
    if (*sidecar_cmd) return cmd_validate_sidecar(sidecar_args, ctx);
    if (*template_cmd) {
      out << to_text(select_template(template_corrected, env).to_json());
      return kOk;
    }
  } catch (const UsageFailure& f) {
    err << "mdl: " << f.message << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mdl::cli
