#include "gammainf/term.hpp"

#include <cctype>
#include <string_view>
#include <unordered_set>
#include <utility>

namespace gammainf {

namespace {

constexpr std::size_t kFnvOffset = 14695981039346656037ull;
constexpr std::size_t kFnvPrime = 1099511628211ull;

std::size_t fnv1a(std::string_view s) {
  std::size_t h = kFnvOffset;
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::size_t hash_combine(std::size_t seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
  return seed;
}

bool identifier_like(std::string_view text) {
  if (text.empty()) return false;
  unsigned char first = static_cast<unsigned char>(text[0]);
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : text) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (!std::isalnum(uc) && uc != '_') return false;
  }
  return true;
}

}  // namespace

Name::Name(std::string text) : text_(std::move(text)) {
  if (!identifier_like(text_)) {
    throw Error(Errc::InvalidName, "'" + text_ + "' is not a valid variable name");
  }
}

SortName::SortName(std::string text) : text_(std::move(text)) {
  if (text_ != "*" && text_ != "#" && !identifier_like(text_)) {
    throw Error(Errc::InvalidSort, "'" + text_ + "' is not a valid sort name");
  }
}

FreeVar::FreeVar(Name name, TermPtr tag) : name_(std::move(name)), tag_(std::move(tag)) {
  if (!tag_->locally_closed()) {
    throw Error(Errc::InvalidTerm,
                "tag of variable '" + name_.str() + "' has dangling bound indices");
  }
  hash_ = hash_combine(fnv1a(name_.str()), tag_->hash());
}

bool operator==(const FreeVar& a, const FreeVar& b) {
  return a.hash_ == b.hash_ && a.name_ == b.name_ && *a.tag_ == *b.tag_;
}

int FreeVar::compare(const FreeVar& a, const FreeVar& b) {
  if (int c = a.name_.str().compare(b.name_.str()); c != 0) return c < 0 ? -1 : 1;
  return Term::compare(*a.tag_, *b.tag_);
}

Term::Term(Kind kind, Payload payload) : kind_(kind), payload_(std::move(payload)) {
  const auto rank = static_cast<std::size_t>(kind_);
  switch (kind_) {
    case Kind::Sort:
      hash_ = hash_combine(rank, fnv1a(std::get<SortName>(payload_).str()));
      break;
    case Kind::Bound: {
      std::size_t index = std::get<std::size_t>(payload_);
      hash_ = hash_combine(rank, index);
      loose_ = index + 1;
      break;
    }
    case Kind::Free: {
      const auto& v = std::get<FreeVar>(payload_);
      hash_ = hash_combine(rank, v.hash());
      size_ = 1 + v.tag()->size();
      break;
    }
    case Kind::Pi:
    case Kind::Lam: {
      const auto& b = std::get<Binder>(payload_);
      hash_ = hash_combine(rank, hash_combine(b.domain->hash(), b.body->hash()));
      size_ = 1 + b.domain->size() + b.body->size();
      std::size_t body_loose = b.body->loose_levels();
      loose_ = std::max(b.domain->loose_levels(), body_loose > 0 ? body_loose - 1 : 0);
      break;
    }
    case Kind::App: {
      const auto& a = std::get<Apply>(payload_);
      hash_ = hash_combine(rank, hash_combine(a.fun->hash(), a.arg->hash()));
      size_ = 1 + a.fun->size() + a.arg->size();
      loose_ = std::max(a.fun->loose_levels(), a.arg->loose_levels());
      break;
    }
  }
}

TermPtr Term::sort(SortName s) {
  return TermPtr(new Term(Kind::Sort, Payload(std::move(s))));
}

TermPtr Term::bound(std::size_t index) {
  return TermPtr(new Term(Kind::Bound, Payload(index)));
}

TermPtr Term::free(FreeVar var) {
  return TermPtr(new Term(Kind::Free, Payload(std::move(var))));
}

TermPtr Term::free(const std::string& name, TermPtr tag) {
  return free(FreeVar(Name(name), std::move(tag)));
}

TermPtr Term::pi(TermPtr domain, TermPtr codomain) {
  return TermPtr(new Term(Kind::Pi, Payload(Binder{std::move(domain), std::move(codomain)})));
}

TermPtr Term::lam(TermPtr domain, TermPtr body) {
  return TermPtr(new Term(Kind::Lam, Payload(Binder{std::move(domain), std::move(body)})));
}

TermPtr Term::app(TermPtr fun, TermPtr arg) {
  return TermPtr(new Term(Kind::App, Payload(Apply{std::move(fun), std::move(arg)})));
}

const SortName& Term::sort_name() const { return std::get<SortName>(payload_); }
std::size_t Term::bound_index() const { return std::get<std::size_t>(payload_); }
const FreeVar& Term::var() const { return std::get<FreeVar>(payload_); }
const TermPtr& Term::domain() const { return std::get<Binder>(payload_).domain; }
const TermPtr& Term::body() const { return std::get<Binder>(payload_).body; }
const TermPtr& Term::fun() const { return std::get<Apply>(payload_).fun; }
const TermPtr& Term::arg() const { return std::get<Apply>(payload_).arg; }

bool operator==(const Term& a, const Term& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || a.hash_ != b.hash_ || a.size_ != b.size_) return false;
  switch (a.kind_) {
    case Term::Kind::Sort:
      return a.sort_name() == b.sort_name();
    case Term::Kind::Bound:
      return a.bound_index() == b.bound_index();
    case Term::Kind::Free:
      return a.var() == b.var();
    case Term::Kind::Pi:
    case Term::Kind::Lam:
      return *a.domain() == *b.domain() && *a.body() == *b.body();
    case Term::Kind::App:
      return *a.fun() == *b.fun() && *a.arg() == *b.arg();
  }
  return false;
}

int Term::compare(const Term& a, const Term& b) {
  if (&a == &b) return 0;
  if (a.kind_ != b.kind_) {
    return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ? -1 : 1;
  }
  switch (a.kind_) {
    case Kind::Sort: {
      int c = a.sort_name().str().compare(b.sort_name().str());
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Bound:
      if (a.bound_index() != b.bound_index()) return a.bound_index() < b.bound_index() ? -1 : 1;
      return 0;
    case Kind::Free:
      return FreeVar::compare(a.var(), b.var());
    case Kind::Pi:
    case Kind::Lam:
      if (int c = compare(*a.domain(), *b.domain()); c != 0) return c;
      return compare(*a.body(), *b.body());
    case Kind::App:
      if (int c = compare(*a.fun(), *b.fun()); c != 0) return c;
      return compare(*a.arg(), *b.arg());
  }
  return 0;
}

namespace {

// Shifts dangling indices (those >= depth) up by `by`. Tags hold no
// dangling indices, so they are never entered.
TermPtr shift_loose(const TermPtr& t, std::size_t by, std::size_t depth) {
  if (by == 0 || t->loose_levels() <= depth) return t;
  switch (t->kind()) {
    case Term::Kind::Bound: {
      std::size_t i = t->bound_index();
      return i >= depth ? Term::bound(i + by) : t;
    }
    case Term::Kind::Pi:
    case Term::Kind::Lam: {
      TermPtr d = shift_loose(t->domain(), by, depth);
      TermPtr b = shift_loose(t->body(), by, depth + 1);
      if (d == t->domain() && b == t->body()) return t;
      return t->is(Term::Kind::Pi) ? Term::pi(d, b) : Term::lam(d, b);
    }
    case Term::Kind::App: {
      TermPtr f = shift_loose(t->fun(), by, depth);
      TermPtr a = shift_loose(t->arg(), by, depth);
      if (f == t->fun() && a == t->arg()) return t;
      return Term::app(f, a);
    }
    default:
      return t;  // Sort/Free are closed, pruned above
  }
}

TermPtr open_at(const TermPtr& t, const TermPtr& replacement, std::size_t depth) {
  if (t->loose_levels() <= depth) return t;
  switch (t->kind()) {
    case Term::Kind::Bound: {
      std::size_t i = t->bound_index();
      if (i == depth) return shift_loose(replacement, depth, 0);
      if (i > depth) return Term::bound(i - 1);
      return t;
    }
    case Term::Kind::Pi:
    case Term::Kind::Lam: {
      TermPtr d = open_at(t->domain(), replacement, depth);
      TermPtr b = open_at(t->body(), replacement, depth + 1);
      if (d == t->domain() && b == t->body()) return t;
      return t->is(Term::Kind::Pi) ? Term::pi(d, b) : Term::lam(d, b);
    }
    case Term::Kind::App: {
      TermPtr f = open_at(t->fun(), replacement, depth);
      TermPtr a = open_at(t->arg(), replacement, depth);
      if (f == t->fun() && a == t->arg()) return t;
      return Term::app(f, a);
    }
    default:
      return t;
  }
}

TermPtr close_at(const TermPtr& t, const FreeVar& target, std::size_t depth) {
  switch (t->kind()) {
    case Term::Kind::Sort:
    case Term::Kind::Bound:
      return t;
    case Term::Kind::Free:
      return t->var() == target ? Term::bound(depth) : t;
    case Term::Kind::Pi:
    case Term::Kind::Lam: {
      TermPtr d = close_at(t->domain(), target, depth);
      TermPtr b = close_at(t->body(), target, depth + 1);
      if (d == t->domain() && b == t->body()) return t;
      return t->is(Term::Kind::Pi) ? Term::pi(d, b) : Term::lam(d, b);
    }
    case Term::Kind::App: {
      TermPtr f = close_at(t->fun(), target, depth);
      TermPtr a = close_at(t->arg(), target, depth);
      if (f == t->fun() && a == t->arg()) return t;
      return Term::app(f, a);
    }
  }
  return t;
}

}  // namespace

TermPtr open(const TermPtr& body, const TermPtr& replacement) {
  return open_at(body, replacement, 0);
}

TermPtr close(const TermPtr& term, const FreeVar& target) {
  return close_at(term, target, 0);
}

TermPtr subst_free(const TermPtr& term, const FreeVar& target, const TermPtr& replacement) {
  switch (term->kind()) {
    case Term::Kind::Sort:
    case Term::Kind::Bound:
      return term;
    case Term::Kind::Free:
      return term->var() == target ? replacement : term;
    case Term::Kind::Pi:
    case Term::Kind::Lam: {
      TermPtr d = subst_free(term->domain(), target, replacement);
      TermPtr b = subst_free(term->body(), target, replacement);
      if (d == term->domain() && b == term->body()) return term;
      return term->is(Term::Kind::Pi) ? Term::pi(d, b) : Term::lam(d, b);
    }
    case Term::Kind::App: {
      TermPtr f = subst_free(term->fun(), target, replacement);
      TermPtr a = subst_free(term->arg(), target, replacement);
      if (f == term->fun() && a == term->arg()) return term;
      return Term::app(f, a);
    }
  }
  return term;
}

namespace {

void fv_into(const TermPtr& t, VarSet& out) {
  switch (t->kind()) {
    case Term::Kind::Free:
      out.insert(t->var());
      break;
    case Term::Kind::Pi:
    case Term::Kind::Lam:
      fv_into(t->domain(), out);
      fv_into(t->body(), out);
      break;
    case Term::Kind::App:
      fv_into(t->fun(), out);
      fv_into(t->arg(), out);
      break;
    default:
      break;
  }
}

void hfv_into(const TermPtr& t, VarSet& out) {
  switch (t->kind()) {
    case Term::Kind::Free:
      if (out.insert(t->var()).second) hfv_into(t->var().tag(), out);
      break;
    case Term::Kind::Pi:
    case Term::Kind::Lam:
      hfv_into(t->domain(), out);
      hfv_into(t->body(), out);
      break;
    case Term::Kind::App:
      hfv_into(t->fun(), out);
      hfv_into(t->arg(), out);
      break;
    default:
      break;
  }
}

void hfvt_into(const TermPtr& t, VarSet& out) {
  switch (t->kind()) {
    case Term::Kind::Free:
      hfv_into(t->var().tag(), out);
      break;
    case Term::Kind::Pi:
    case Term::Kind::Lam:
      hfvt_into(t->domain(), out);
      hfvt_into(t->body(), out);
      break;
    case Term::Kind::App:
      hfvt_into(t->fun(), out);
      hfvt_into(t->arg(), out);
      break;
    default:
      break;
  }
}

}  // namespace

VarSet fv(const TermPtr& term) {
  VarSet out;
  fv_into(term, out);
  return out;
}

VarSet hfv(const TermPtr& term) {
  VarSet out;
  hfv_into(term, out);
  return out;
}

VarSet hfvt(const TermPtr& term) {
  VarSet out;
  hfvt_into(term, out);
  return out;
}

VarSet hfv_union(const TermPtr& a, const TermPtr& b) {
  VarSet out;
  hfv_into(a, out);
  hfv_into(b, out);
  return out;
}

std::optional<TermPtr> beta_step(const TermPtr& term) {
  switch (term->kind()) {
    case Term::Kind::Sort:
    case Term::Kind::Bound:
    case Term::Kind::Free:
      return std::nullopt;
    case Term::Kind::Pi:
    case Term::Kind::Lam: {
      if (auto d = beta_step(term->domain())) {
        return term->is(Term::Kind::Pi) ? Term::pi(*d, term->body())
                                        : Term::lam(*d, term->body());
      }
      if (auto b = beta_step(term->body())) {
        return term->is(Term::Kind::Pi) ? Term::pi(term->domain(), *b)
                                        : Term::lam(term->domain(), *b);
      }
      return std::nullopt;
    }
    case Term::Kind::App: {
      if (term->fun()->is(Term::Kind::Lam)) {
        return open_at(term->fun()->body(), term->arg(), 0);
      }
      if (auto f = beta_step(term->fun())) return Term::app(*f, term->arg());
      if (auto a = beta_step(term->arg())) return Term::app(term->fun(), *a);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool is_beta_normal(const TermPtr& term) {
  switch (term->kind()) {
    case Term::Kind::Sort:
    case Term::Kind::Bound:
    case Term::Kind::Free:
      return true;
    case Term::Kind::Pi:
    case Term::Kind::Lam:
      return is_beta_normal(term->domain()) && is_beta_normal(term->body());
    case Term::Kind::App:
      return !term->fun()->is(Term::Kind::Lam) && is_beta_normal(term->fun()) &&
             is_beta_normal(term->arg());
  }
  return true;
}

TermPtr normalize(const TermPtr& term, Fuel fuel) {
  TermPtr current = term;
  for (Fuel step = 0; step < fuel; ++step) {
    auto next = beta_step(current);
    if (!next) return current;
    current = *next;
  }
  if (is_beta_normal(current)) return current;
  throw FuelExhaustedError("no normal form within " + std::to_string(fuel) + " steps");
}

bool beta_eq(const TermPtr& a, const TermPtr& b, Fuel fuel) {
  if (*a == *b) return true;
  std::unordered_set<TermPtr, TermPtrHash, TermPtrEq> seen_a{a};
  std::unordered_set<TermPtr, TermPtrHash, TermPtrEq> seen_b{b};
  TermPtr cur_a = a;
  TermPtr cur_b = b;
  bool normal_a = false;
  bool normal_b = false;
  Fuel used_a = 0;
  Fuel used_b = 0;
  while (true) {
    bool progressed = false;
    if (!normal_a && used_a < fuel) {
      if (auto next = beta_step(cur_a)) {
        cur_a = *next;
        ++used_a;
        progressed = true;
        if (seen_b.count(cur_a) > 0) return true;
        seen_a.insert(cur_a);
      } else {
        normal_a = true;
      }
    } else if (!normal_a && is_beta_normal(cur_a)) {
      normal_a = true;
    }
    if (!normal_b && used_b < fuel) {
      if (auto next = beta_step(cur_b)) {
        cur_b = *next;
        ++used_b;
        progressed = true;
        if (seen_a.count(cur_b) > 0) return true;
        seen_b.insert(cur_b);
      } else {
        normal_b = true;
      }
    } else if (!normal_b && is_beta_normal(cur_b)) {
      normal_b = true;
    }
    if (normal_a && normal_b) return *cur_a == *cur_b;
    if (!progressed) {
      throw FuelExhaustedError("beta equality undecided within " + std::to_string(fuel) +
                               " steps per side");
    }
  }
}

namespace {

bool uses_binder_at(const TermPtr& t, std::size_t depth) {
  if (t->loose_levels() <= depth) return false;
  switch (t->kind()) {
    case Term::Kind::Bound:
      return t->bound_index() == depth;
    case Term::Kind::Pi:
    case Term::Kind::Lam:
      return uses_binder_at(t->domain(), depth) || uses_binder_at(t->body(), depth + 1);
    case Term::Kind::App:
      return uses_binder_at(t->fun(), depth) || uses_binder_at(t->arg(), depth);
    default:
      return false;
  }
}

}  // namespace

bool uses_binder(const TermPtr& body) { return uses_binder_at(body, 0); }

std::optional<TermPtr> reduce_to_pi(const TermPtr& term, Fuel fuel) {
  TermPtr cur = term;
  for (Fuel used = 0;; ++used) {
    if (cur->is(Term::Kind::Pi)) return cur;
    auto next = beta_step(cur);
    if (!next) return std::nullopt;
    if (used >= fuel) {
      throw FuelExhaustedError("no Pi head within " + std::to_string(fuel) + " steps");
    }
    cur = *next;
  }
}

std::optional<SortName> reduce_to_sort(const TermPtr& term, Fuel fuel) {
  TermPtr cur = term;
  for (Fuel used = 0;; ++used) {
    if (cur->is(Term::Kind::Sort)) return cur->sort_name();
    auto next = beta_step(cur);
    if (!next) return std::nullopt;
    if (used >= fuel) {
      throw FuelExhaustedError("no sort within " + std::to_string(fuel) + " steps");
    }
    cur = *next;
  }
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidName: return "InvalidName";
    case Errc::InvalidSort: return "InvalidSort";
    case Errc::InvalidTerm: return "InvalidTerm";
    case Errc::InvalidContext: return "InvalidContext";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnboundName: return "UnboundName";
    case Errc::NonFunctionalSpec: return "NonFunctionalSpec";
    case Errc::NoAxiom: return "NoAxiom";
    case Errc::AmbiguousAxiom: return "AmbiguousAxiom";
    case Errc::NoRule: return "NoRule";
    case Errc::AmbiguousRule: return "AmbiguousRule";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::NotAFunction: return "NotAFunction";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::IllegalDomain: return "IllegalDomain";
    case Errc::IllegalCodomain: return "IllegalCodomain";
    case Errc::TagNotASort: return "TagNotASort";
    case Errc::NotASort: return "NotASort";
    case Errc::SideConditionViolated: return "SideConditionViolated";
    case Errc::TagMismatch: return "TagMismatch";
    case Errc::PiMismatch: return "PiMismatch";
    case Errc::NotConvertible: return "NotConvertible";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::NotDerivable: return "NotDerivable";
    case Errc::CyclicTags: return "CyclicTags";
    case Errc::UndeclaredFreeVariable: return "UndeclaredFreeVariable";
    case Errc::FuelExhausted: return "FuelExhausted";
    case Errc::BudgetExhausted: return "BudgetExhausted";
  }
  return "UnknownError";
}

}  // namespace gammainf
