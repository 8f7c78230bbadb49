#pragma once

#include <random>
#include <vector>

#include "gammainf/context.hpp"
#include "gammainf/term.hpp"

namespace testsupport {

using namespace gammainf;

inline TermPtr star() { return Term::sort("*"); }
inline TermPtr box() { return Term::sort("#"); }

// A^{*}, a^{A^{*}} and friends used across the suites.
struct Vars {
  TermPtr A = Term::free("A", star());
  TermPtr a = Term::free("a", A);
  TermPtr B = Term::free("B", star());
  TermPtr b = Term::free("b", B);
};

// The ill-formed product over a dependent family: Pi y:A. Q y h, where
// h's tag still mentions a. Rejected context-free by the side condition.
struct CounterExample {
  TermPtr A = Term::free("A", star());
  TermPtr P = Term::free("P", Term::pi(A, star()));
  TermPtr a = Term::free("a", A);
  TermPtr h = Term::free("h", Term::app(P, a));
  TermPtr q_type =
      Term::pi(A, Term::pi(Term::app(P, Term::bound(0)), star()));
  TermPtr Q = Term::free("Q", q_type);
  TermPtr body = Term::app(Term::app(Q, Term::bound(0)), h);
  TermPtr term = Term::pi(A, body);
  TermPtr premise_body = Term::app(Term::app(Q, a), h);
};

// The worked identity-application example, in readable names:
// A^{*} : *, a^{A^{*}} : A^{*} |- (\x:A. x) a : A.
struct WorkedExample {
  TermPtr A = Term::free("A", star());
  TermPtr a = Term::free("a", A);
  TermPtr subject = Term::app(Term::lam(A, Term::bound(0)), a);
  TermPtr type = A;
  Context ctx = Context({{A->var(), star()}, {a->var(), A}});
};

// Same judgment with standard names x1, x2.
struct WorkedExampleStandard {
  TermPtr x1 = Term::free("x1", star());
  TermPtr x2 = Term::free("x2", x1);
  TermPtr subject = Term::app(Term::lam(x1, Term::bound(0)), x2);
  TermPtr type = x1;
  Context ctx = Context({{x1->var(), star()}, {x2->var(), x1}});
};

// Omega = (\x:*. x x)(\x:*. x x): locally closed, never normalizes.
inline TermPtr omega() {
  TermPtr w = Term::lam(star(), Term::app(Term::bound(0), Term::bound(0)));
  return Term::app(w, w);
}

// Seeded generator of locally closed pseudo-terms (not necessarily
// well-typed).
class RandomTermGen {
 public:
  explicit RandomTermGen(std::uint64_t seed) : rng_(seed) {}

  TermPtr term(std::size_t max_size, std::size_t depth = 0, std::size_t tag_depth = 2) {
    if (max_size <= 1) return leaf(depth);
    switch (pick(6)) {
      case 0:
        return leaf(depth);
      case 1: {
        if (tag_depth == 0) return leaf(depth);
        TermPtr tag = term(split(max_size - 1), 0, tag_depth - 1);
        return Term::free(name(), tag);
      }
      case 2:
        return Term::pi(term(split(max_size - 1), depth, tag_depth),
                        term(split(max_size - 1), depth + 1, tag_depth));
      case 3:
        return Term::lam(term(split(max_size - 1), depth, tag_depth),
                         term(split(max_size - 1), depth + 1, tag_depth));
      default:
        return Term::app(term(split(max_size - 1), depth, tag_depth),
                         term(split(max_size - 1), depth, tag_depth));
    }
  }

  // Biased towards redexes, for reduction-sequence properties.
  TermPtr reducible(std::size_t max_size) {
    TermPtr fun = Term::lam(term(split(max_size / 2), 0), term(split(max_size / 2), 1));
    TermPtr arg = term(split(max_size / 2), 0);
    TermPtr redex = Term::app(fun, arg);
    switch (pick(3)) {
      case 0:
        return redex;
      case 1:
        return Term::app(redex, term(split(max_size / 2), 0));
      default:
        return Term::lam(term(3, 0), Term::app(Term::lam(term(3, 1), term(3, 2)), term(3, 1)));
    }
  }

  std::size_t pick(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

 private:
  TermPtr leaf(std::size_t depth) {
    std::size_t choice = pick(depth > 0 ? 3 : 2);
    if (choice == 0) return star();
    if (choice == 1) return box();
    return Term::bound(pick(depth));
  }

  std::string name() {
    static const char* names[] = {"u", "v", "w"};
    return names[pick(3)];
  }

  std::size_t split(std::size_t max_size) { return max_size == 0 ? 1 : 1 + pick(max_size); }

  std::mt19937_64 rng_;
};

// All tags reachable through variables, hereditarily.
inline std::vector<TermPtr> all_tags(const TermPtr& t) {
  std::vector<TermPtr> out;
  for (const FreeVar& v : hfv(t)) out.push_back(v.tag());
  return out;
}

inline bool tag_subset(const TermPtr& reduced, const TermPtr& original) {
  std::vector<TermPtr> before = all_tags(original);
  for (const TermPtr& tag : all_tags(reduced)) {
    bool found = false;
    for (const TermPtr& have : before) {
      if (*have == *tag) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace testsupport
