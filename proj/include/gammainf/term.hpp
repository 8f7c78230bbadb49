#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include "gammainf/error.hpp"

namespace gammainf {

using Fuel = std::uint64_t;
inline constexpr Fuel kDefaultFuel = 10'000;

class Term;
using TermPtr = std::shared_ptr<const Term>;

// A variable name: letters, digits, underscores. Carets, braces and
// whitespace are reserved by the surface syntax.
class Name {
 public:
  explicit Name(std::string text);

  const std::string& str() const { return text_; }

  friend bool operator==(const Name& a, const Name& b) { return a.text_ == b.text_; }
  friend auto operator<=>(const Name& a, const Name& b) { return a.text_ <=> b.text_; }

 private:
  std::string text_;
};

// A sort constant. Validity as a *sort of the active system* is a use-time
// check against the PtsSpec; here we only enforce lexical sanity.
class SortName {
 public:
  explicit SortName(std::string text);

  const std::string& str() const { return text_; }

  friend bool operator==(const SortName& a, const SortName& b) { return a.text_ == b.text_; }
  friend auto operator<=>(const SortName& a, const SortName& b) { return a.text_ <=> b.text_; }

 private:
  std::string text_;
};

// A tagged free variable x^A. The tag is part of the variable's identity:
// two variables are equal iff both name and tag (structurally) agree.
// Tags must be locally closed; they are labels, never scopes.
class FreeVar {
 public:
  FreeVar(Name name, TermPtr tag);

  const Name& name() const { return name_; }
  const TermPtr& tag() const { return tag_; }
  std::size_t hash() const { return hash_; }

  friend bool operator==(const FreeVar& a, const FreeVar& b);
  friend bool operator!=(const FreeVar& a, const FreeVar& b) { return !(a == b); }
  friend bool operator<(const FreeVar& a, const FreeVar& b) { return compare(a, b) < 0; }

  static int compare(const FreeVar& a, const FreeVar& b);

 private:
  Name name_;
  TermPtr tag_;
  std::size_t hash_;
};

using VarSet = std::set<FreeVar>;

// Immutable pseudo-term tree. Bound variables are de Bruijn indices, so
// alpha-equivalent terms are represented identically. Subtrees are shared;
// every node caches its hash, node count (tags included) and the number of
// dangling binder levels.
class Term {
 public:
  enum class Kind { Sort, Bound, Free, Pi, Lam, App };

  static TermPtr sort(SortName s);
  static TermPtr sort(const std::string& text) { return sort(SortName(text)); }
  static TermPtr bound(std::size_t index);
  static TermPtr free(FreeVar var);
  static TermPtr free(const std::string& name, TermPtr tag);
  static TermPtr pi(TermPtr domain, TermPtr codomain);
  static TermPtr lam(TermPtr domain, TermPtr body);
  static TermPtr app(TermPtr fun, TermPtr arg);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }

  const SortName& sort_name() const;
  std::size_t bound_index() const;
  const FreeVar& var() const;
  const TermPtr& domain() const;  // Pi | Lam
  const TermPtr& body() const;    // Pi codomain | Lam body
  const TermPtr& fun() const;     // App
  const TermPtr& arg() const;     // App

  std::size_t hash() const { return hash_; }
  std::size_t size() const { return size_; }
  std::size_t loose_levels() const { return loose_; }
  bool locally_closed() const { return loose_ == 0; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  // Total structural order (used for deterministic set iteration).
  static int compare(const Term& a, const Term& b);

 private:
  struct Binder {
    TermPtr domain;
    TermPtr body;
  };
  struct Apply {
    TermPtr fun;
    TermPtr arg;
  };
  using Payload = std::variant<SortName, std::size_t, FreeVar, Binder, Apply>;

  Term(Kind kind, Payload payload);

  Kind kind_;
  Payload payload_;
  std::size_t hash_ = 0;
  std::size_t size_ = 1;
  std::size_t loose_ = 0;
};

struct TermPtrHash {
  std::size_t operator()(const TermPtr& t) const { return t->hash(); }
};
struct TermPtrEq {
  bool operator()(const TermPtr& a, const TermPtr& b) const { return *a == *b; }
};

inline bool equal(const TermPtr& a, const TermPtr& b) { return *a == *b; }

// Instantiates the outermost dangling binder level of `body` with
// `replacement`; deeper dangling levels shift down by one. Total; the usual
// call has `replacement` locally closed and `body` with one dangling level.
TermPtr open(const TermPtr& body, const TermPtr& replacement);

// Abstracts every standalone occurrence of `target` (full identity: name and
// tag) as a reference to a new outermost binder level. Occurrences inside
// other variables' tags are left alone: tags are labels, not scopes.
TermPtr close(const TermPtr& term, const FreeVar& target);

// Capture-free substitution of a free variable. Tag interiors untouched.
TermPtr subst_free(const TermPtr& term, const FreeVar& target, const TermPtr& replacement);

// Shallow free variables: tags are not traversed.
VarSet fv(const TermPtr& term);

// Hereditarily free variables: each free variable together with,
// recursively, the free variables of its tag.
VarSet hfv(const TermPtr& term);

// Hereditarily free variables of the tags of the free variables.
VarSet hfvt(const TermPtr& term);

VarSet hfv_union(const TermPtr& a, const TermPtr& b);

// One leftmost-outermost beta step; redexes inside tags are never
// contracted. Returns nullopt iff the term is beta-normal outside tags.
std::optional<TermPtr> beta_step(const TermPtr& term);

bool is_beta_normal(const TermPtr& term);

// Leftmost-outermost reduction to normal form. Throws FuelExhaustedError
// after `fuel` steps without reaching one.
TermPtr normalize(const TermPtr& term, Fuel fuel = kDefaultFuel);

// True iff the leftmost-outermost reduction sequences of `a` and `b` meet
// within `fuel` steps each; false iff both normalize to distinct normal
// forms. Otherwise the answer is unknown and FuelExhaustedError is thrown.
bool beta_eq(const TermPtr& a, const TermPtr& b, Fuel fuel = kDefaultFuel);

// True iff the codomain/body refers to its binder (index 0 at depth 0).
bool uses_binder(const TermPtr& body);

// Reduces leftmost-outermost until the head constructor is Pi (resp. the
// term is a sort). nullopt means a normal form was reached without one;
// FuelExhaustedError means the question is undecided.
std::optional<TermPtr> reduce_to_pi(const TermPtr& term, Fuel fuel);
std::optional<SortName> reduce_to_sort(const TermPtr& term, Fuel fuel);

}  // namespace gammainf
