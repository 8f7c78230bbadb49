#include <doctest.h>

#include <functional>

#include <thread>

#include "gammainf/kernel.hpp"
#include "support.hpp"

using namespace gammainf;
using namespace testsupport;

namespace {

const SpecPtr kCoc = std::make_shared<PtsSpec>(PtsSpec::coc());
const SpecPtr kStlc = std::make_shared<PtsSpec>(PtsSpec::simply_typed());

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
    return Errc::InvalidTerm;
  } catch (const Error& e) {
    return e.code();
  }
}

// * : #, A^{*} : *, a^{A} : A
struct Basics {
  Thm star_sort = mk_sort(kCoc, SortName("*"));
  Thm A = mk_var(star_sort, Name("A"));
  Thm a = mk_var(A, Name("a"));
};

}  // namespace

TEST_CASE("mk_sort follows the axiom") {
  Thm t = mk_sort(kCoc, SortName("*"));
  CHECK(*t.subject() == *star());
  CHECK(*t.type() == *box());
  CHECK(code_of([&] { mk_sort(kCoc, SortName("#")); }) == Errc::NoAxiom);

  auto multi = std::make_shared<PtsSpec>(
      PtsSpec({SortName("*"), SortName("#"), SortName("D")},
              {{SortName("*"), SortName("#")}, {SortName("*"), SortName("D")}}, {}));
  CHECK(code_of([&] { mk_sort(multi, SortName("*")); }) == Errc::AmbiguousAxiom);
}

TEST_CASE("mk_var tags the variable with the subject") {
  Basics b;
  CHECK(*b.A.subject() == *Term::free("A", star()));
  CHECK(*b.A.type() == *star());
  CHECK(*b.a.subject() == *Term::free("a", Term::free("A", star())));
  CHECK(code_of([&] { mk_var(b.a, Name("x")); }) == Errc::NotASort);
}

TEST_CASE("mk_pi builds products under the matching rule") {
  Basics b;
  // * -> * : # via (#,#,#)
  Thm star_to_star =
      mk_pi(b.star_sort, b.star_sort, FreeVar(Name("x0"), star()));
  CHECK(*star_to_star.subject() == *Term::pi(star(), star()));
  CHECK(*star_to_star.type() == *box());

  // A -> A : * via (*,*,*)
  Thm arrow = mk_pi(b.A, b.A, FreeVar(Name("a"), b.A.subject()));
  CHECK(*arrow.subject() == *Term::pi(b.A.subject(), b.A.subject()));
  CHECK(*arrow.type() == *star());

  // no rule in the simply typed fragment for (#,#,s3)
  Thm stlc_star = mk_sort(kStlc, SortName("*"));
  CHECK(code_of([&] { mk_pi(stlc_star, stlc_star, FreeVar(Name("x0"), star())); }) ==
        Errc::NoRule);
  CHECK(code_of([&] { mk_pi(b.A, b.A, FreeVar(Name("a"), star())); }) == Errc::TagMismatch);
}

TEST_CASE("mk_pi rejects the counterexample assembly") {
  Basics b;
  // P : A -> *
  Thm a_to_star = mk_pi(b.A, b.star_sort, FreeVar(Name("x0"), b.A.subject()));
  Thm P = mk_var(a_to_star, Name("P"));
  // P x0 : * and (P x0) -> * : #
  Thm x0 = mk_var(b.A, Name("x0"));
  Thm P_x0 = mk_app(P, x0);
  Thm family = mk_pi(P_x0, b.star_sort, FreeVar(Name("h0"), P_x0.subject()));
  // T_Q = !x:A. (P x) -> * : #
  Thm q_type = mk_pi(b.A, family, FreeVar(Name("x0"), b.A.subject()));
  Thm Q = mk_var(q_type, Name("Q"));
  Thm h = mk_var(mk_app(P, b.a), Name("h"));
  Thm Q_a_h = mk_app(mk_app(Q, b.a), h);
  CHECK(*Q_a_h.type() == *star());

  // the premises hold, but a^{A} survives inside h's tag after closing
  CHECK(code_of([&] { mk_pi(b.A, Q_a_h, FreeVar(Name("a"), b.A.subject())); }) ==
        Errc::SideConditionViolated);
  // a genuinely fresh eigenvariable cannot rescue it either: the premise
  // would then need Q y h with a domain mismatch, which mk_app already
  // refused to build
  CHECK(code_of([&] { mk_app(mk_app(Q, x0), h); }) == Errc::DomainMismatch);
}

TEST_CASE("mk_lam builds the identity") {
  Basics b;
  Thm arrow = mk_pi(b.A, b.A, FreeVar(Name("a"), b.A.subject()));
  Thm id = mk_lam(b.a, arrow, FreeVar(Name("a"), b.A.subject()));
  CHECK(*id.subject() == *Term::lam(b.A.subject(), Term::bound(0)));
  CHECK(*id.type() == *arrow.subject());

  // constant function: eigenvariable unused
  Thm const_star = mk_lam(b.A, mk_pi(b.star_sort, b.star_sort, FreeVar(Name("x0"), star())),
                          FreeVar(Name("x0"), star()));
  CHECK(*const_star.subject() == *Term::lam(star(), b.A.subject()));
}

TEST_CASE("mk_lam enforces the side condition and the Pi premise") {
  Basics b;
  Thm a_to_star = mk_pi(b.A, b.star_sort, FreeVar(Name("x0"), b.A.subject()));
  Thm P = mk_var(a_to_star, Name("P"));
  Thm h = mk_var(mk_app(P, b.a), Name("h"));
  // \y:A. h would need a's occurrence inside h's tag to be bound
  Thm pa_thm = mk_app(P, b.a);
  Thm bad_pi = mk_pi(b.A, pa_thm, FreeVar(Name("y9"), b.A.subject()));
  CHECK(code_of([&] { mk_lam(h, bad_pi, FreeVar(Name("a"), b.A.subject())); }) ==
        Errc::SideConditionViolated);

  Thm arrow = mk_pi(b.A, b.A, FreeVar(Name("a"), b.A.subject()));
  CHECK(code_of([&] { mk_lam(b.a, arrow, FreeVar(Name("b"), star())); }) == Errc::PiMismatch);
}

TEST_CASE("mk_app instantiates the codomain") {
  Basics b;
  Thm arrow = mk_pi(b.A, b.A, FreeVar(Name("a"), b.A.subject()));
  Thm id = mk_lam(b.a, arrow, FreeVar(Name("a"), b.A.subject()));
  Thm applied = mk_app(id, b.a);
  CHECK(*applied.subject() == *Term::app(id.subject(), b.a.subject()));
  CHECK(*applied.type() == *b.A.subject());

  CHECK(code_of([&] { mk_app(b.a, b.a); }) == Errc::NotAFunction);
}

TEST_CASE("mk_app accepts beta-equal but distinct domains") {
  Basics b;
  // identity on * applied to A gives the redex (\x:*. x) A : *
  Thm star_to_star = mk_pi(b.star_sort, b.star_sort, FreeVar(Name("x0"), star()));
  Thm id_star = mk_lam(mk_var(b.star_sort, Name("x0")), star_to_star,
                       FreeVar(Name("x0"), star()));
  Thm redex_type = mk_app(id_star, b.A);  // subject (\x0:*. x0) A : *
  // !y:((\x0:*. x0) A). A : * with a reducible domain annotation
  Thm weird_pi = mk_pi(redex_type, b.A, FreeVar(Name("y0"), redex_type.subject()));
  Thm arrow = mk_pi(b.A, b.A, FreeVar(Name("a"), b.A.subject()));
  Thm id_A = mk_lam(b.a, arrow, FreeVar(Name("a"), b.A.subject()));
  Thm converted = mk_conv(id_A, weird_pi);
  Thm applied = mk_app(converted, b.a);  // domain (\x0:*. x0) A, argument : A
  CHECK(*applied.type() == *b.A.subject());
}

TEST_CASE("mk_conv retypes along beta equality") {
  Basics b;
  Thm same = mk_conv(b.a, b.A);
  CHECK(*same.subject() == *b.a.subject());
  CHECK(*same.type() == *b.A.subject());

  // x : (\y:*. y) B retyped at B
  Thm star_to_star = mk_pi(b.star_sort, b.star_sort, FreeVar(Name("x0"), star()));
  Thm id_star = mk_lam(mk_var(b.star_sort, Name("x0")), star_to_star,
                       FreeVar(Name("x0"), star()));
  Thm B = mk_var(b.star_sort, Name("B"));
  Thm redex = mk_app(id_star, B);
  Thm x = mk_var(redex, Name("x"));
  Thm retyped = mk_conv(x, B);
  CHECK(*retyped.type() == *B.subject());
  CHECK(ginf_check(*kCoc, retyped.judgment()));

  CHECK(code_of([&] { mk_conv(b.a, b.star_sort); }) == Errc::NotConvertible);
}

TEST_CASE("theorems from different specs do not mix") {
  Thm coc_star = mk_sort(kCoc, SortName("*"));
  Thm stlc_star = mk_sort(kStlc, SortName("*"));
  CHECK(code_of([&] { mk_pi(coc_star, stlc_star, FreeVar(Name("x0"), star())); }) ==
        Errc::SpecMismatch);
}

TEST_CASE("constructed theorems pass the checker") {
  Basics b;
  Thm arrow = mk_pi(b.A, b.A, FreeVar(Name("a"), b.A.subject()));
  Thm id = mk_lam(b.a, arrow, FreeVar(Name("a"), b.A.subject()));
  Thm applied = mk_app(id, b.a);
  for (const Thm* t : {&b.star_sort, &b.A, &b.a, &arrow, &id, &applied}) {
    CHECK(ginf_check(*kCoc, t->judgment()));
  }
}

TEST_CASE("interleaved constructions do not interfere") {
  auto build = [] {
    Basics b;
    Thm arrow = mk_pi(b.A, b.A, FreeVar(Name("a"), b.A.subject()));
    Thm id = mk_lam(b.a, arrow, FreeVar(Name("a"), b.A.subject()));
    return ginf_check(*kCoc, mk_app(id, b.a).judgment());
  };
  std::vector<std::thread> workers;
  std::vector<int> results(4, 0);
  for (int i = 0; i < 4; ++i) {
    workers.emplace_back([&, i] { results[i] = build() ? 1 : 0; });
  }
  for (auto& w : workers) w.join();
  for (int r : results) CHECK(r == 1);
}
