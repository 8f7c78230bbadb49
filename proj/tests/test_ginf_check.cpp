#include <doctest.h>

#include <functional>

#include "gammainf/enumerate.hpp"
#include "gammainf/ginf_check.hpp"
#include "support.hpp"

using namespace gammainf;
using namespace testsupport;

namespace {
const PtsSpec kCoc = PtsSpec::coc();
const PtsSpec kF = PtsSpec::system_f();

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
    return Errc::InvalidTerm;
  } catch (const Error& e) {
    return e.code();
  }
}
}  // namespace

TEST_CASE("eigen_open picks the first fresh standard name") {
  Vars v;
  auto [fresh, opened] = eigen_open(v.A, Term::bound(0), {});
  CHECK(fresh.name().str() == "x0");
  CHECK(*opened == *Term::free(fresh));

  VarSet avoid{FreeVar(Name("x0"), v.A)};
  CHECK(eigen_open(v.A, Term::bound(0), avoid).first.name().str() == "x1");

  VarSet avoid_other_tag{FreeVar(Name("x0"), v.B)};
  CHECK(eigen_open(v.A, Term::bound(0), avoid_other_tag).first.name().str() == "x0");
}

TEST_CASE("context-free inference on the basic examples") {
  CHECK(*ginf_infer(kCoc, star()) == *box());
  WorkedExample ex;
  CHECK(*ginf_infer(kCoc, ex.subject) == *ex.A);
}

TEST_CASE("the counterexample is rejected with the side condition") {
  CounterExample ce;
  CHECK(code_of([&] { ginf_infer(kCoc, ce.term); }) == Errc::SideConditionViolated);
  CHECK_FALSE(ginf_check(kCoc, GinfJudgment(ce.term, star())));

  // while both premises of the offending rule instance are accepted
  CHECK(ginf_check(kCoc, GinfJudgment(ce.A, star())));
  CHECK(ginf_check(kCoc, GinfJudgment(ce.premise_body, star())));
}

TEST_CASE("ginf_check on sorts and the identity") {
  CHECK(ginf_check(kCoc, GinfJudgment(star(), box())));
  CHECK_FALSE(ginf_check(kCoc, GinfJudgment(star(), star())));

  TermPtr id2 = Term::lam(star(), Term::lam(Term::bound(0), Term::bound(0)));
  TermPtr id2_type = Term::pi(star(), Term::pi(Term::bound(0), Term::bound(1)));
  CHECK(ginf_check(kF, GinfJudgment(id2, id2_type)));
}

TEST_CASE("conversion in the stated type") {
  Vars v;
  // (\x:*. x) A reduces to A
  TermPtr roundabout = Term::app(Term::lam(star(), Term::bound(0)), v.A);
  CHECK(ginf_check(kCoc, GinfJudgment(v.a, roundabout)));
  CHECK_FALSE(ginf_check(kCoc, GinfJudgment(v.a, star())));
}

TEST_CASE("tag typing failures are reported as TagNotASort") {
  TermPtr bad = Term::free("x", box());  // # has no type
  CHECK(code_of([&] { ginf_infer(kCoc, bad); }) == Errc::TagNotASort);
  TermPtr deep = Term::free("y", Term::free("x", box()));
  CHECK(code_of([&] { ginf_infer(kCoc, deep); }) == Errc::TagNotASort);
}

TEST_CASE("fuel exhaustion is distinct from rejection") {
  CHECK_THROWS_AS(ginf_check(kCoc, GinfJudgment(star(), omega()), 30), FuelExhaustedError);
}

TEST_CASE("inference never leaks eigenvariables") {
  EnumBudget budget;
  budget.max_term_size = 4;
  for (const TermPtr& m : enumerate_terms(budget)) {
    try {
      TermPtr type = ginf_infer(kCoc, m);
      VarSet scope = hfv(m);
      for (const FreeVar& v : hfv(type)) CHECK(scope.count(v) == 1);
    } catch (const Error&) {
      continue;
    }
  }
}

TEST_CASE("every well-sorted type is inhabited by a variable") {
  EnumBudget budget;
  budget.max_term_size = 5;
  std::size_t inhabited = 0;
  for (const TermPtr& m : enumerate_terms(budget)) {
    TermPtr type;
    try {
      type = ginf_infer(kCoc, m);
    } catch (const Error&) {
      continue;
    }
    if (!type->is(Term::Kind::Sort)) continue;
    CHECK(ginf_check(kCoc, GinfJudgment(Term::free("x0", m), m)));
    ++inhabited;
  }
  CHECK(inhabited > 10);  // the property must not hold vacuously
}
