#include "binderkit/cliapp.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "binderkit/cyclic.hpp"
#include "binderkit/nbe.hpp"
#include "binderkit/printing.hpp"
#include "binderkit/relations.hpp"
#include "binderkit/sexpr.hpp"
#include "binderkit/sugar.hpp"
#include "binderkit/typing.hpp"

namespace binderkit::cli {

namespace {

constexpr int kOk = 0;
constexpr int kScopeError = 1;
constexpr int kTypeError = 2;
constexpr int kParseError = 3;
constexpr int kCounterexample = 4;
constexpr int kUsageError = 5;

struct CommandFailure {
  int code;
  std::string kind;
  std::string message;
  int line = 0;
  int col = 0;
};

struct Output {
  std::vector<std::string> lines;
  void emit(std::string line) { lines.push_back(std::move(line)); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandFailure{kUsageError, "usage", "cannot open file " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const Syntax& syntax_by_extension(const std::string& path) {
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "let") ext = "utlc+let";
  const Syntax* s = find_syntax(ext);
  if (!s)
    throw CommandFailure{kUsageError, "usage",
                         "cannot infer a syntax from the extension of " + path};
  return *s;
}

Term load_term(const Syntax& syntax, const std::string& path) {
  auto raw = parse(syntax, slurp(path));
  if (!raw)
    throw CommandFailure{kParseError, "parse", raw.error().message, raw.error().line,
                         raw.error().col};
  auto term = to_tm(syntax.desc, {}, Ctx(), syntax.top_sort, raw.value());
  if (!term) {
    const auto& e = term.error();
    std::string kind = e.kind == ScopeError::Kind::OutOfScope  ? "OutOfScope"
                       : e.kind == ScopeError::Kind::WrongSort ? "WrongSort"
                                                               : "ShapeMismatch";
    throw CommandFailure{kScopeError, kind, e.show(), e.pos.line, e.pos.col};
  }
  return term.value();
}

int cmd_check(const std::string& syntax_name, const std::string& path, Output& out) {
  const Syntax* syntax = find_syntax(syntax_name);
  if (!syntax)
    throw CommandFailure{kUsageError, "usage", "unknown syntax " + syntax_name};
  Term t = load_term(*syntax, path);
  if (syntax->name == "bidi") {
    auto type = infer_closed(t);
    if (!type) {
      out.emit("ill-typed");
      throw CommandFailure{kTypeError, "type", "ill-typed"};
    }
    out.emit(type->show());
    return kOk;
  }
  out.emit("ok");
  return kOk;
}

int cmd_elab(const std::string& path, Output& out) {
  Term t = load_term(bidi_syntax(), path);
  auto result = elaborate_closed(t);
  if (!result) {
    out.emit("ill-typed");
    throw CommandFailure{kTypeError, "type", "ill-typed"};
  }
  out.emit(result->first.show());
  out.emit(render_stlc(result->second));
  return kOk;
}

int cmd_unlet(const std::string& path, Output& out) {
  Term t = load_term(utlc_let_syntax(), path);
  Term plain = unlet(utlc_desc(), Ctx(), t);
  out.emit(render_sexpr(utlc_syntax(), {}, plain));
  return kOk;
}

int cmd_inline(const std::string& path, Output& out) {
  Term t = load_term(utlc_let_syntax(), path);
  auto [annotated, count] = annotate(utlc_desc(), Ctx(), t);
  (void)count;
  Term slim = inline_lets(utlc_desc(), Ctx(), annotated);
  out.emit(render_sexpr(utlc_let_syntax(), {}, slim));
  return kOk;
}

struct FuelExhausted {};

int cmd_norm(const std::string& path, long long fuel, Output& out) {
  Term t = load_term(utlc_syntax(), path);
  DmAlg alg = utlc_alg;
  if (fuel >= 0) {
    auto remaining = std::make_shared<long long>(fuel);
    alg = [remaining](const Sort& sort, const Layer<Kripke<Dm, Dm>>& layer) {
      if (--*remaining < 0) throw FuelExhausted{};
      return utlc_alg(sort, layer);
    };
  }
  try {
    auto result = norm(utlc_desc(), alg, t);
    if (!result) throw CommandFailure{kTypeError, "evaluation", "reification failed"};
    out.emit(render_sexpr(utlc_syntax(), {}, *result));
    return kOk;
  } catch (const FuelExhausted&) {
    throw CommandFailure{kTypeError, "evaluation", "fuel exhausted"};
  }
}

int cmd_print(const std::string& path, Output& out) {
  const Syntax& syntax = syntax_by_extension(path);
  Term t = load_term(syntax, path);
  out.emit(print(syntax.desc, display_for(syntax), Ctx(), t));
  return kOk;
}

int cmd_eq(const std::string& a_path, const std::string& b_path, Output& out) {
  const Syntax& syntax = syntax_by_extension(a_path);
  const Syntax& other = syntax_by_extension(b_path);
  if (syntax.name != other.name)
    throw CommandFailure{kUsageError, "usage", "files use different syntaxes"};
  Term a = load_term(syntax, a_path);
  Term b = load_term(syntax, b_path);
  auto diff = term_diff(syntax.desc, a, b);
  if (!diff) {
    out.emit("equal");
    return kOk;
  }
  out.emit("not equal: " + diff->show());
  return kCounterexample;
}

int cmd_unfold(const std::string& path, std::size_t depth, Output& out) {
  Term t = load_term(clist_syntax(), path);
  CoTree tree = unfold(clist_desc(), t);
  // the forced spine: heads in order, "nil" when the list ends, "..." when
  // the depth runs out first
  std::string line;
  CoTree cursor = tree;
  for (std::size_t k = 0;; ++k) {
    if (k == depth) {
      line += line.empty() ? "..." : " ...";
      break;
    }
    const auto& layer = cursor.force();
    if (std::get<PayloadValue>(layer.events[0]).as_bool()) {
      line += line.empty() ? "nil" : " nil";
      break;
    }
    const auto& head = std::get<PayloadValue>(layer.events[1]);
    line += (line.empty() ? "" : " ") + head.show();
    cursor = std::get<CoSub>(layer.events[2]).child;
  }
  out.emit(line);
  return kOk;
}

int cmd_prop(const std::string& suite, std::size_t samples, std::size_t depth, std::uint64_t seed,
             Output& out) {
  SuiteConfig config{samples, depth, seed};
  std::vector<PropReport> reports;
  if (suite == "simulation")
    reports = run_simulation_suite(config);
  else if (suite == "fusion")
    reports = run_fusion_suite(config);
  else
    throw CommandFailure{kUsageError, "usage", "unknown suite " + suite};
  bool all_pass = true;
  for (const auto& r : reports) {
    out.emit(r.show());
    all_pass = all_pass && r.passed();
  }
  if (!all_pass)
    throw CommandFailure{kCounterexample, "counterexample", "a property check found a counterexample"};
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out_stream, std::ostream& err_stream) {
  CLI::App app{"generic programming over syntaxes with binding"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit a single-line JSON object");

  std::string syntax_name, file_a, file_b, suite;
  long long fuel = -1;
  std::size_t depth = 0, samples = 1000, prop_depth = 8;
  std::uint64_t seed = 42;

  auto* check = app.add_subcommand("check", "scope check a file (and type check bidi)");
  check->add_option("--syntax", syntax_name, "syntax name")->required();
  check->add_option("file", file_a)->required();

  auto* elab = app.add_subcommand("elab", "type check a bidi file and elaborate it");
  elab->add_option("file", file_a)->required();

  auto* unlet_cmd = app.add_subcommand("unlet", "inline every let of a utlc+let file");
  unlet_cmd->add_option("file", file_a)->required();

  auto* inline_cmd = app.add_subcommand("inline", "inline lets used at most once");
  inline_cmd->add_option("file", file_a)->required();

  auto* norm_cmd = app.add_subcommand("norm", "normalise a utlc file by evaluation");
  norm_cmd->add_option("--fuel", fuel, "abort after this many evaluation steps");
  norm_cmd->add_option("file", file_a)->required();

  auto* print_cmd = app.add_subcommand("print", "pretty-print with generated names");
  print_cmd->add_option("file", file_a)->required();

  auto* eq_cmd = app.add_subcommand("eq", "decide structural equality of two files");
  eq_cmd->add_option("file1", file_a)->required();
  eq_cmd->add_option("file2", file_b)->required();

  auto* unfold_cmd = app.add_subcommand("unfold", "print the forced spine of a clist file");
  unfold_cmd->add_option("--depth", depth, "layers to force")->required();
  unfold_cmd->add_option("file", file_a)->required();

  auto* prop_cmd = app.add_subcommand("prop", "run a sampled law suite");
  prop_cmd->add_option("--suite", suite, "simulation|fusion")->required();
  prop_cmd->add_option("--samples", samples, "samples per instance");
  prop_cmd->add_option("--depth", prop_depth, "generator depth bound");
  prop_cmd->add_option("--seed", seed, "generator seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_stream << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (json) {
      nlohmann::json j{{"status", "error"},
                       {"error",
                        {{"kind", "usage"}, {"message", e.what()}, {"line", 0}, {"col", 0}}}};
      out_stream << j.dump() << "\n";
    } else {
      err_stream << e.what() << "\n";
    }
    return kUsageError;
  }

  Output out;
  int code = kOk;
  CommandFailure failure{kOk, "", ""};
  try {
    if (check->parsed()) code = cmd_check(syntax_name, file_a, out);
    else if (elab->parsed()) code = cmd_elab(file_a, out);
    else if (unlet_cmd->parsed()) code = cmd_unlet(file_a, out);
    else if (inline_cmd->parsed()) code = cmd_inline(file_a, out);
    else if (norm_cmd->parsed()) code = cmd_norm(file_a, fuel, out);
    else if (print_cmd->parsed()) code = cmd_print(file_a, out);
    else if (eq_cmd->parsed()) code = cmd_eq(file_a, file_b, out);
    else if (unfold_cmd->parsed()) code = cmd_unfold(file_a, depth, out);
    else if (prop_cmd->parsed()) code = cmd_prop(suite, samples, prop_depth, seed, out);
  } catch (const CommandFailure& f) {
    failure = f;
    code = f.code;
  } catch (const std::exception& e) {
    failure = CommandFailure{kUsageError, "internal", e.what()};
    code = kUsageError;
  }

  if (json) {
    nlohmann::json j;
    if (code == kOk || (code == kCounterexample && failure.kind.empty())) {
      std::string text;
      for (std::size_t i = 0; i < out.lines.size(); ++i)
        text += (i ? "\n" : "") + out.lines[i];
      j = {{"status", code == kOk ? "ok" : "counterexample"}, {"result", text}};
    } else {
      j = {{"status", "error"},
           {"error",
            {{"kind", failure.kind},
             {"message", failure.message},
             {"line", failure.line},
             {"col", failure.col}}}};
    }
    out_stream << j.dump() << "\n";
    return code;
  }

  for (const auto& line : out.lines) out_stream << line << "\n";
  if (code != kOk && !failure.kind.empty())
    err_stream << failure.kind << ": " << failure.message << "\n";
  return code;
}

}  // namespace binderkit::cli
