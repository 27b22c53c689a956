#include <gtest/gtest.h>

#include <sstream>

#include "cli/checks.hpp"
#include "cli/commands.hpp"
#include "cli/eval.hpp"
#include "cli/expr.hpp"
#include "cli/render.hpp"
#include "jhall/oracle.hpp"

using namespace jhall;
using namespace jhall::cli;

namespace {

Value ev(const std::string& text) { return Evaluator().eval(*parse(text)); }

std::string text_of(const std::string& expr, const OutputBasis& basis = {}) {
  const Evaluator e;
  return render_text(to_output_basis(e.eval(*parse(expr)), basis, e.ring()));
}

struct CmdResult {
  int rc;
  std::string out;
  std::string err;
};

CmdResult eval_cmd(const std::string& expr, Options o = {}) {
  std::ostringstream out, err;
  const int rc = run_eval(expr, o, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST(Parse, Examples) {
  const ExprPtr e = parse("u[2,1] * u[1 ; 1]");
  ASSERT_EQ(e->kind, Expr::Kind::Binary);
  EXPECT_EQ(e->text, "*");
  EXPECT_EQ(e->args[0]->h0, Partition({2, 1}));
  EXPECT_FALSE(e->args[0]->shifted_part);
  EXPECT_EQ(e->args[1]->h0, Partition({1}));
  EXPECT_EQ(e->args[1]->h1, Partition({1}));
  EXPECT_TRUE(e->args[1]->shifted_part);

  const ExprPtr p = parse("pair(u[1], u[1])");
  EXPECT_EQ(p->kind, Expr::Kind::Call);
  EXPECT_EQ(p->text, "pair");
  EXPECT_EQ(p->args.size(), 2u);

  const ExprPtr empty = parse("u[;]");
  EXPECT_TRUE(empty->h0.empty());
  EXPECT_TRUE(empty->h1.empty());
}

TEST(Parse, Precedence) {
  const ExprPtr e = parse("1 + q * u[1] @ u[2]");
  EXPECT_EQ(e->text, "+");
  EXPECT_EQ(e->args[1]->text, "@");
  EXPECT_EQ(e->args[1]->args[0]->text, "*");
  EXPECT_EQ(parse("-q^2")->kind, Expr::Kind::Negate);
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse("u[1,2]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position().line, 1);
    EXPECT_NE(std::string(e.what()).find("decreasing"), std::string::npos);
    EXPECT_EQ(e.hint(), "write u[2,1]");
  }
  try {
    parse("u[1] +\n  foo(u[1])");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position().line, 2);
    EXPECT_EQ(e.position().column, 3);
  }
  EXPECT_THROW(parse("u[1"), ParseError);
  EXPECT_THROW(parse("e[1;1]"), ParseError);
  EXPECT_THROW(parse("u[0]"), ParseError);
  EXPECT_THROW(parse("pair(u[1])"), ParseError);
  EXPECT_THROW(parse("u[1] u[1]"), ParseError);
}

TEST(Eval, Examples) {
  EXPECT_EQ(text_of("u[1] * u[ ;1]"), "u[1;1] + (q-1)·u[;]");
  OutputBasis e;
  e.sym = SymBasis::Elementary;
  EXPECT_EQ(text_of("psi(u[1])", e), "(q-1)·e[1]");
  EXPECT_EQ(render_text(substitute_q(ev("q^2 - q"), 3)), "6");
  EXPECT_EQ(text_of("straighten(u[1;1])"), "u[1]*u[;1] - (q-1)·u[;]");
  EXPECT_EQ(text_of("0 * u[1]"), "0");
}

TEST(Eval, TypeErrors) {
  EXPECT_THROW(ev("pair(u[1], e[1])"), TypeError);
  EXPECT_THROW(ev("u[1] / u[1]"), TypeError);
  EXPECT_THROW(ev("psi(u[1;1])"), TypeError);
}

TEST(Eval, DegreeBound) {
  EXPECT_THROW(Evaluator(2).eval(*parse("hl(e[3])")), DegreeBoundExceeded);
}

TEST(Eval, NumericAgreesWithSymbolic) {
  const std::vector<std::string> exprs = {"u[1] * u[;1]", "u[2] * u[;1,1]", "theta(u[1;1])", "pair(u[1,1], u[1,1])",
                                          "delta(u[2,1])", "T(1,1)", "psi(u[1]*u[1])"};
  for (const auto& s : exprs)
    for (int p : {2, 3}) {
      Options o;
      o.q = std::to_string(p);
      const CmdResult numeric = eval_cmd(s, o);
      ASSERT_EQ(numeric.rc, kSuccess) << s << numeric.err;
      EXPECT_EQ(numeric.out, render_text(substitute_q(ev(s), p)) + "\n") << s;
    }
}

TEST(Eval, VPowersNeedSquareRoots) {
  Options o;
  o.q = "2";
  EXPECT_EQ(eval_cmd("v", o).rc, kUsageError);
  o.q = "4";
  EXPECT_EQ(eval_cmd("v", o).out, "2\n");
}

TEST(Render, ParseRoundTrip) {
  const std::vector<std::string> exprs = {"u[1] * u[;1]",   "u[2] * u[;1] * u[;1]", "straighten(u[2,1;1])",
                                          "delta(u[1,1])",  "psi(u[2,1])",          "hl(e[2] * p[1])",
                                          "u[1]*u[1] - q/2", "theta(u[1;1])"};
  // reparsing a normal-basis rendering yields the same element in the natural basis
  const Evaluator e;
  const OutputBasis fixed{DerivedBasis::Natural, SymBasis::Monomial};
  for (const auto& s : exprs) {
    const Value a = ev(s);
    const std::string printed = render_text(a);
    EXPECT_EQ(render_text(to_output_basis(ev(printed), fixed, e.ring())),
              render_text(to_output_basis(a, fixed, e.ring())))
        << s << " printed as " << printed;
  }
}

TEST(Render, JsonRecords) {
  const auto recs = render_json(ev("u[1] * u[;1]"));
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0]["h0"], nlohmann::json::array({1}));
  EXPECT_EQ(recs[0]["h1"], nlohmann::json::array({1}));
  EXPECT_EQ(recs[0]["num"], nlohmann::json::array({1}));
  EXPECT_EQ(recs[0]["den"], nlohmann::json::array({1}));
  // q - 1 as v-coefficients, lowest first
  EXPECT_EQ(recs[1]["num"], nlohmann::json::array({-1, 0, 1}));
  EXPECT_EQ(recs[1]["h0"], nlohmann::json::array());
}

TEST(Checks, SuitesPassAtSmallBounds) {
  CheckOptions o;
  o.trials = 50;
  for (const std::string s : {"associativity", "commutativity", "dd", "straighten", "psi", "pairing"}) {
    o.bound = 2;
    const CheckReport r = run_check(s, o);
    EXPECT_TRUE(r.passed()) << r.summary();
    EXPECT_GT(r.cases, 0);
  }
  o.bound = 3;
  EXPECT_TRUE(run_check("oracle-hall", o).passed());
  EXPECT_TRUE(run_check("oracle-morphisms", o).passed());
  EXPECT_TRUE(run_check("appendix", o).passed());
}

TEST(Checks, Errors) {
  CheckOptions o;
  EXPECT_THROW(run_check("nope", o), std::invalid_argument);
  o.p = 5;
  EXPECT_THROW(run_check("dd", o), std::invalid_argument);
  o.p = 2;
  o.bound = 9;
  EXPECT_THROW(run_check("dd", o), oracle::BudgetExceeded);
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(eval_cmd("u[1] * u[;1]").rc, kSuccess);
  const CmdResult bad = eval_cmd("u[1,2]");
  EXPECT_EQ(bad.rc, kUsageError);
  EXPECT_NE(bad.err.find("hint: write u[2,1]"), std::string::npos);
  EXPECT_NE(bad.err.find("^"), std::string::npos);
  EXPECT_EQ(eval_cmd("pair(u[1], e[1])").rc, kUsageError);
  Options small;
  small.degree_bound = 2;
  EXPECT_EQ(eval_cmd("psi(u[3])", small).rc, kResourceCap);

  std::ostringstream out, err;
  Options o;
  EXPECT_EQ(run_check("dd", 10, o, out, err), kResourceCap);
  EXPECT_EQ(run_table(6, o, out, err), kResourceCap);
  EXPECT_EQ(run_check("commutativity", 2, o, out, err), kSuccess);
}

TEST(Commands, TableAndExport) {
  std::ostringstream out, err;
  Options o;
  ASSERT_EQ(run_table(1, o, out, err), kSuccess);
  std::istringstream lines(out.str());
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_TRUE(j.contains("terms"));
    ++n;
  }
  EXPECT_EQ(n, 9);

  std::ostringstream hl;
  o.format = Format::Text;
  ASSERT_EQ(run_export_hl(2, o, hl, err), kSuccess);
  EXPECT_NE(hl.str().find("P[2] = m[2] + (-t+1)·m[1,1]"), std::string::npos);
}
