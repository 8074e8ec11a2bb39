#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "binderkit/cliapp.hpp"
#include "binderkit/equality.hpp"
#include "binderkit/sexpr.hpp"
#include "binderkit/gen.hpp"
#include "testutil.hpp"

using namespace binderkit;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Writes a fixture file and removes it when the test is done.
class TempFile {
 public:
  TempFile(std::string name, const std::string& contents) : path_("bk_test_" + std::move(name)) {
    std::ofstream f(path_, std::ios::binary);
    f << contents;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("parse handles the grammar and reports positions") {
  auto ok = parse(utlc_syntax(), "(lam x x)");
  REQUIRE(ok.has_value());

  auto bad_head = parse(utlc_syntax(), "(emb x)");
  REQUIRE(!bad_head.has_value());
  CHECK(bad_head.error().col == 2);

  auto unclosed = parse(utlc_syntax(), "(app x");
  CHECK(!unclosed.has_value());

  auto trailing = parse(utlc_syntax(), "x y");
  CHECK(!trailing.has_value());

  // the worked bidirectional example parses
  auto bidi_example = parse(
      bidi_syntax(),
      "(app (ann (lam x (emb x)) (-> (-> alpha alpha) (-> alpha alpha))) (lam x (emb x)))");
  REQUIRE(bidi_example.has_value());

  // the cyclic list notation
  auto cyc = parse(clist_syntax(), "(cons 0 s (cons 1 t (ptr s)))");
  REQUIRE(cyc.has_value());
  auto term = to_tm(clist_desc(), {}, Ctx(), Sort::unit(), cyc.value());
  REQUIRE(term.has_value());
  CHECK(eq_term(clist_desc(), term.value(),
                clist::cons(0, clist::cons(1, clist::backptr(1)))));

  // let files
  auto let_ok = parse(utlc_let_syntax(), "(let (x (lam y y)) (app x x))");
  CHECK(let_ok.has_value());

  // the annotated syntax has no input grammar
  CHECK(!parse(stlc_syntax(), "(lam alpha x)").has_value());
}

TEST_CASE("generated terms render to s-expressions that reparse to the same term") {
  Rng rng(201);
  for (const Syntax* syntax : {&utlc_syntax(), &bidi_syntax(), &utlc_let_syntax(),
                               &clist_syntax()}) {
    for (int i = 0; i < 150; ++i) {
      Rng sample = rng.fork(i);
      Term t = testutil::must_gen(*syntax, sample, Ctx(), syntax->top_sort, 6);
      std::string text = render_sexpr(*syntax, {}, t);
      auto raw = parse(*syntax, text);
      if (!raw.has_value()) FAIL(syntax->name << ": " << text << ": " << raw.error().show());
      auto back = to_tm(syntax->desc, {}, Ctx(), syntax->top_sort, raw.value());
      if (!back.has_value()) FAIL(syntax->name << ": " << back.error().show());
      CHECK(eq_term(syntax->desc, back.value(), t));
    }
  }
}

TEST_CASE("at the depth limit only variables and recursion-free paths remain") {
  // in a unit scope at depth 1 the untyped calculus can only produce the
  // variable itself
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_depth = 1;
    cfg.context = testutil::unit_ctx(1);
    cfg.sort = Sort::unit();
    auto t = gen_term(utlc_syntax(), cfg);
    REQUIRE(t.has_value());
    REQUIRE(t.value().is_var());
    CHECK(t.value().as_var().index == 0);
  }

  // closed at depth 1 nothing works, and that is reported, not looped on
  GenConfig closed_cfg;
  closed_cfg.max_depth = 1;
  closed_cfg.sort = Sort::unit();
  auto nope = gen_term(utlc_syntax(), closed_cfg);
  REQUIRE(!nope.has_value());
  CHECK(nope.error().message.find("no constructor path nor variable") != std::string::npos);
}

TEST_CASE("fixed seeds reproduce terms exactly") {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.max_depth = 6;
  cfg.context = testutil::unit_ctx(1);
  cfg.sort = Sort::unit();
  auto a = gen_term(utlc_syntax(), cfg);
  auto b = gen_term(utlc_syntax(), cfg);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(eq_term(utlc_desc(), a.value(), b.value()));
}

TEST_CASE("binderkit print") {
  TempFile id("id.utlc", "(lam x x)");
  auto r = run_cli({"print", id.path()});
  CHECK(r.code == 0);
  CHECK(r.out == "\xce\xbb"
                 "a. a\n");
}

TEST_CASE("binderkit check") {
  TempFile id("id.utlc", "(lam x x)");
  auto ok = run_cli({"check", "--syntax", "utlc", id.path()});
  CHECK(ok.code == 0);
  CHECK(ok.out == "ok\n");

  TempFile unbound("unbound.utlc", "x");
  auto scope = run_cli({"check", "--syntax", "utlc", unbound.path()});
  CHECK(scope.code == 1);
  CHECK(scope.err.find("OutOfScope") != std::string::npos);
  CHECK(scope.err.find("1:1") != std::string::npos);

  TempFile example("example.bidi",
                   "(app (ann (lam x (emb x)) (-> (-> alpha alpha) (-> alpha alpha))) "
                   "(lam x (emb x)))");
  auto typed = run_cli({"check", "--syntax", "bidi", example.path()});
  CHECK(typed.code == 0);
  CHECK(typed.out == "(-> alpha alpha)\n");

  TempFile illtyped("ill.bidi", "(ann (lam x (emb x)) alpha)");
  auto bad = run_cli({"check", "--syntax", "bidi", illtyped.path()});
  CHECK(bad.code == 2);
  CHECK(bad.out == "ill-typed\n");

  TempFile broken("broken.utlc", "(lam x");
  auto parse_fail = run_cli({"check", "--syntax", "utlc", broken.path()});
  CHECK(parse_fail.code == 3);

  auto usage = run_cli({"check", "--syntax", "nope", id.path()});
  CHECK(usage.code == 5);
}

TEST_CASE("binderkit elab") {
  TempFile example("elab.bidi",
                   "(app (ann (lam x (emb x)) (-> (-> alpha alpha) (-> alpha alpha))) "
                   "(lam x (emb x)))");
  auto r = run_cli({"elab", example.path()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "(-> alpha alpha)\n(app (lam (-> alpha alpha) #0) (lam alpha #0))\n");
}

TEST_CASE("binderkit unlet and inline") {
  TempFile simple("simple.let", "(let (x (lam y y)) x)");
  auto un = run_cli({"unlet", simple.path()});
  CHECK(un.code == 0);
  CHECK(un.out == "(lam x0 x0)\n");

  TempFile shared("shared.let", "(let (x (lam y y)) (app x x))");
  auto in = run_cli({"inline", shared.path()});
  CHECK(in.code == 0);
  // used twice: the let survives
  CHECK(in.out.find("(let (") == 0);

  auto once = run_cli({"inline", simple.path()});
  CHECK(once.code == 0);
  CHECK(once.out == "(lam x0 x0)\n");
}

TEST_CASE("binderkit norm with and without fuel") {
  TempFile chain("chain.utlc", "(app (lam x x) (app (lam x x) (lam x x)))");
  auto r = run_cli({"norm", chain.path()});
  CHECK(r.code == 0);
  CHECK(r.out == "(lam x0 x0)\n");

  auto fueled = run_cli({"norm", "--fuel", "1000", chain.path()});
  CHECK(fueled.code == 0);

  TempFile omega("omega.utlc", "(app (lam x (app x x)) (lam x (app x x)))");
  auto exhausted = run_cli({"norm", "--fuel", "500", omega.path()});
  CHECK(exhausted.code == 2);
  CHECK(exhausted.err.find("fuel") != std::string::npos);
}

TEST_CASE("binderkit eq") {
  TempFile a("eqa.utlc", "(lam x x)");
  TempFile b("eqb.utlc", "(lam y y)");
  TempFile c("eqc.utlc", "(lam x (app x x))");
  auto same = run_cli({"eq", a.path(), b.path()});
  CHECK(same.code == 0);
  CHECK(same.out == "equal\n");
  auto differ = run_cli({"eq", a.path(), c.path()});
  CHECK(differ.code == 4);
  CHECK(differ.out.find("not equal") == 0);
}

TEST_CASE("binderkit unfold") {
  TempFile cyc("cycle.clist", "(cons 0 s (cons 1 t (ptr s)))");
  auto r = run_cli({"unfold", "--depth", "4", cyc.path()});
  CHECK(r.code == 0);
  CHECK(r.out == "0 1 0 1 ...\n");

  TempFile fin("finite.clist", "(cons 0 s (cons 1 t nil))");
  auto f = run_cli({"unfold", "--depth", "10", fin.path()});
  CHECK(f.code == 0);
  CHECK(f.out == "0 1 nil\n");
}

TEST_CASE("binderkit prop at reduced scale") {
  auto r = run_cli({"prop", "--suite", "simulation", "--samples", "60", "--depth", "5",
                    "--seed", "9"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rensub/utlc: pass") != std::string::npos);

  auto bad_suite = run_cli({"prop", "--suite", "nonsense"});
  CHECK(bad_suite.code == 5);
}

TEST_CASE("--json emits a single-line object") {
  TempFile id("json.utlc", "(lam x x)");
  auto ok = run_cli({"--json", "print", id.path()});
  CHECK(ok.code == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j["status"] == "ok");
  CHECK(j["result"] == "\xce\xbb"
                       "a. a");

  TempFile unbound("json_unbound.utlc", "x");
  auto bad = run_cli({"--json", "check", "--syntax", "utlc", unbound.path()});
  CHECK(bad.code == 1);
  auto je = nlohmann::json::parse(bad.out);
  CHECK(je["status"] == "error");
  CHECK(je["error"]["kind"] == "OutOfScope");
  CHECK(je["error"]["line"] == 1);
  CHECK(je["error"]["col"] == 1);
}

TEST_CASE("commands are deterministic") {
  TempFile cyc("det.clist", "(cons 3 s (ptr s))");
  auto once = run_cli({"unfold", "--depth", "7", cyc.path()});
  auto twice = run_cli({"unfold", "--depth", "7", cyc.path()});
  CHECK(once.out == twice.out);
  CHECK(once.code == twice.code);
}
