#include <doctest.h>

#include "gammainf/term.hpp"
#include "support.hpp"

using namespace gammainf;
using namespace testsupport;

TEST_CASE("names and sorts are validated") {
  CHECK_THROWS_AS(Name(""), Error);
  CHECK_THROWS_AS(Name("x y"), Error);
  CHECK_THROWS_AS(Name("1x"), Error);
  CHECK_NOTHROW(Name("x_17"));
  CHECK_NOTHROW(SortName("*"));
  CHECK_NOTHROW(SortName("#"));
  CHECK_NOTHROW(SortName("Delta"));
  CHECK_THROWS_AS(SortName("{"), Error);
}

TEST_CASE("free variable identity includes the tag") {
  Vars v;
  FreeVar a_on_A(Name("a"), v.A);
  FreeVar a_on_B(Name("a"), v.B);
  CHECK(a_on_A == FreeVar(Name("a"), Term::free("A", star())));
  CHECK(a_on_A == v.a->var());
  CHECK(a_on_A != a_on_B);
  CHECK_THROWS_AS(FreeVar(Name("a"), Term::bound(0)), Error);
}

TEST_CASE("open instantiates the outermost dangling level") {
  Vars v;
  CHECK(*open(Term::bound(0), star()) == *star());
  CHECK(*open(star(), v.A) == *star());

  TermPtr f = Term::free("f", Term::pi(v.A, v.A));
  TermPtr body = Term::app(Term::bound(0), v.a);
  CHECK(*open(body, f) == *Term::app(f, v.a));

  // deeper dangling levels shift down
  TermPtr two_loose = Term::app(Term::bound(0), Term::bound(1));
  CHECK(*open(two_loose, v.a) == *Term::app(v.a, Term::bound(0)));
}

TEST_CASE("close abstracts by full identity and skips tag interiors") {
  Vars v;
  FreeVar target = v.a->var();
  CHECK(*close(v.a, target) == *Term::bound(0));
  CHECK(*close(Term::free("b", v.A), target) == *Term::free("b", v.A));

  CounterExample ce;
  // h's tag mentions a, but tags are labels: closing leaves h alone
  TermPtr closed = close(ce.h, ce.a->var());
  CHECK(*closed == *ce.h);
  CHECK(hfvt(closed).count(ce.a->var()) == 1);

  // under a binder the new reference points past it
  TermPtr body = Term::lam(v.A, v.a);
  CHECK(*close(body, target) == *Term::lam(v.A, Term::bound(1)));
}

TEST_CASE("subst_free replaces standalone occurrences only") {
  Vars v;
  TermPtr x = Term::free("x", star());
  CHECK(*subst_free(x, x->var(), star()) == *star());
  TermPtr pi = Term::pi(star(), Term::bound(0));
  CHECK(*subst_free(pi, x->var(), v.A) == *pi);
  TermPtr f = Term::free("f", v.B);
  TermPtr app = Term::app(f, x);
  CHECK(*subst_free(app, x->var(), star()) == *Term::app(f, star()));
  // tag interiors untouched
  TermPtr tagged = Term::free("h", Term::app(f, x));
  CHECK(*subst_free(tagged, x->var(), star()) == *tagged);
}

TEST_CASE("fv is shallow") {
  Vars v;
  CHECK(fv(star()).empty());
  TermPtr x = Term::free("x", v.B);
  CHECK(fv(x) == VarSet{x->var()});
  TermPtr lam = Term::lam(v.A, Term::bound(0));
  CHECK(fv(lam) == VarSet{v.A->var()});
}

TEST_CASE("hfv traverses tags hereditarily") {
  Vars v;
  TermPtr x = Term::free("x", v.B);
  CHECK(hfv(x) == VarSet{x->var(), v.B->var()});
  CHECK(hfv(star()).empty());

  CounterExample ce;
  VarSet expected{ce.h->var(), ce.P->var(), ce.a->var(), ce.A->var()};
  CHECK(hfv(ce.h) == expected);
}

TEST_CASE("hfvt of the paper example is exact") {
  CounterExample ce;
  VarSet expected{ce.P->var(), ce.a->var(), ce.A->var()};
  CHECK(hfvt(ce.h) == expected);
  CHECK(hfvt(star()).empty());
  CHECK(hfvt(Term::free("x", star())).empty());
}

TEST_CASE("beta_step is leftmost-outermost and never enters tags") {
  Vars v;
  TermPtr redex = Term::app(Term::lam(star(), Term::bound(0)), v.B);
  auto step = beta_step(redex);
  REQUIRE(step.has_value());
  CHECK(**step == *v.B);

  TermPtr tagged = Term::free("x", redex);
  CHECK(!beta_step(tagged).has_value());
  CHECK(!beta_step(star()).has_value());

  // outer redex before inner ones
  TermPtr inner = Term::app(Term::lam(star(), Term::bound(0)), star());
  TermPtr outer = Term::app(Term::lam(star(), star()), inner);
  auto first = beta_step(outer);
  REQUIRE(first.has_value());
  CHECK(**first == *star());
}

TEST_CASE("beta_eq matches the tag-opacity examples") {
  Vars v;
  TermPtr redex = Term::app(Term::lam(star(), Term::bound(0)), v.B);
  CHECK(beta_eq(redex, v.B, 100));
  CHECK_FALSE(beta_eq(Term::free("x", redex), Term::free("x", v.B), 100));
}

TEST_CASE("beta_eq is reflexive even without fuel to reduce") {
  Vars v;
  CHECK(beta_eq(v.a, v.a, 1));
  CHECK(beta_eq(omega(), omega(), 1));
}

TEST_CASE("beta_eq finds common reducts and reports unknowns") {
  TermPtr id_omega = Term::app(Term::lam(star(), Term::bound(0)), omega());
  CHECK(beta_eq(id_omega, omega(), 20));
  CHECK_THROWS_AS(beta_eq(omega(), star(), 10), FuelExhaustedError);
  CHECK_THROWS_AS(normalize(omega(), 50), FuelExhaustedError);
}

TEST_CASE("normalize reaches the normal form") {
  Vars v;
  TermPtr redex = Term::app(Term::lam(star(), Term::bound(0)), v.B);
  CHECK(*normalize(redex, 10) == *v.B);
  CHECK(is_beta_normal(normalize(redex, 10)));
}

TEST_CASE("close/open round-trips") {
  RandomTermGen gen(20260810);
  for (int i = 0; i < 300; ++i) {
    TermPtr m = gen.term(9);
    REQUIRE(m->locally_closed());
    FreeVar y(Name("fresh"), gen.term(4, 0, 1));
    if (hfv(m).count(y) > 0) continue;
    CHECK(*open(close(m, y), Term::free(y)) == *m);
  }
}

TEST_CASE("open/close round-trips for fresh variables") {
  RandomTermGen gen(917);
  for (int i = 0; i < 300; ++i) {
    TermPtr body = gen.term(9, 1);  // up to one dangling level
    FreeVar y(Name("fresh"), gen.term(4, 0, 1));
    if (hfv(body).count(y) > 0) continue;
    CHECK(*close(open(body, Term::free(y)), y) == *body);
  }
}

TEST_CASE("hfvt and fv are contained in hfv") {
  RandomTermGen gen(42);
  for (int i = 0; i < 500; ++i) {
    TermPtr m = gen.term(10);
    VarSet big = hfv(m);
    for (const FreeVar& v : hfvt(m)) CHECK(big.count(v) == 1);
    for (const FreeVar& v : fv(m)) CHECK(big.count(v) == 1);
  }
}

TEST_CASE("substitution is the identity off the support") {
  RandomTermGen gen(7);
  Vars v;
  for (int i = 0; i < 300; ++i) {
    TermPtr m = gen.term(8);
    FreeVar x(Name("zz"), v.A);
    if (fv(m).count(x) > 0) continue;
    CHECK(*subst_free(m, x, star()) == *m);
  }
}

TEST_CASE("beta steps never alter tags") {
  RandomTermGen gen(5150);
  for (int i = 0; i < 400; ++i) {
    TermPtr m = gen.reducible(10);
    TermPtr cur = m;
    for (int s = 0; s < 10; ++s) {
      auto next = beta_step(cur);
      if (!next) break;
      CHECK(tag_subset(*next, m));
      cur = *next;
    }
  }
}

TEST_CASE("structural order distinguishes distinct terms") {
  Vars v;
  CHECK(Term::compare(*star(), *star()) == 0);
  CHECK(Term::compare(*star(), *box()) != 0);
  CHECK(Term::compare(*v.A, *v.B) != 0);
  CHECK(Term::compare(*v.A, *v.A) == 0);
}
