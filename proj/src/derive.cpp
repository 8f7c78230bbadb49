#include "gammainf/derive.hpp"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "gammainf/correspond.hpp"
#include "gammainf/ginf_check.hpp"
#include "gammainf/print.hpp"

namespace gammainf {

namespace {

constexpr std::size_t kMaxExpansions = 500'000;

// Candidate types found for one subject. `complete` is false when some
// branch below was cut by a depth, expansion or fuel cap.
struct TypeSet {
  std::vector<TermPtr> types;
  bool complete = true;

  void add(const TermPtr& t) {
    for (const auto& existing : types) {
      if (*existing == *t) return;
    }
    types.push_back(t);
  }
};

// Shared search machinery: rule-agnostic bookkeeping plus the bounded
// conversion closure both rule sets use.
class SearchBase {
 public:
  SearchBase(const PtsSpec& spec, const EnumBudget& budget)
      : spec_(spec), fuel_(budget.fuel) {}

 protected:
  bool spend() {
    if (expansions_ >= kMaxExpansions) return false;
    ++expansions_;
    return true;
  }

  // The first Pi-headed term in the reduction chain of `t`, if any; used by
  // the (app) rules. `converted` reports whether a (conv) step is needed.
  std::optional<TermPtr> pi_reduct(const TermPtr& t, bool& converted, bool& complete) {
    converted = false;
    TermPtr cur = t;
    for (Fuel used = 0;; ++used) {
      if (cur->is(Term::Kind::Pi)) {
        converted = used > 0;
        return cur;
      }
      auto next = beta_step(cur);
      if (!next) return std::nullopt;
      if (used >= fuel_) {
        complete = false;
        return std::nullopt;
      }
      cur = *next;
    }
  }

  // Sorts s with t ->beta* s. Retyping at s by (conv) also needs s : s'
  // derivable, i.e. an axiom for s; `direct` reports t == s already.
  std::optional<SortName> sort_reduct(const TermPtr& t, bool& direct, bool& complete) {
    direct = t->is(Term::Kind::Sort);
    try {
      return reduce_to_sort(t, fuel_);
    } catch (const FuelExhaustedError&) {
      complete = false;
      return std::nullopt;
    }
  }

  bool beta_eq_bounded(const TermPtr& a, const TermPtr& b, bool& complete) {
    try {
      return beta_eq(a, b, fuel_);
    } catch (const FuelExhaustedError&) {
      complete = false;
      return false;
    }
  }

  const PtsSpec& spec_;
  Fuel fuel_;
  std::size_t expansions_ = 0;
};

// Declarative search over the context-free rules.
class GinfSearch : public SearchBase {
 public:
  using SearchBase::SearchBase;

  TypeSet derive(const TermPtr& m, std::size_t depth) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    if (depth == 0 || !spend() || in_progress_.count(m) > 0) {
      TypeSet cut;
      cut.complete = false;
      return cut;
    }
    in_progress_.insert(m);
    TypeSet out = derive_rules(m, depth);
    in_progress_.erase(m);
    if (out.complete) memo_.emplace(m, out);
    return out;
  }

  // m : target, allowing one explicit (conv) at the root.
  Verdict checks(const TermPtr& m, const TermPtr& target, std::size_t depth) {
    TypeSet ts = derive(m, depth);
    for (const auto& t : ts.types) {
      if (*t == *target) return Verdict::Yes;
    }
    bool complete = ts.complete;
    for (const auto& t : ts.types) {
      if (!beta_eq_bounded(t, target, complete)) continue;
      if (sort_typable(target, depth - 1, complete)) return Verdict::Yes;
    }
    return complete ? Verdict::No : Verdict::Unknown;
  }

  // Sorts s with m : s derivable (one conv step allowed).
  std::vector<SortName> sorts_of(const TermPtr& m, std::size_t depth, bool& complete) {
    TypeSet ts = derive(m, depth);
    complete = complete && ts.complete;
    std::vector<SortName> out;
    auto push = [&](const SortName& s) {
      for (const auto& have : out) {
        if (have == s) return;
      }
      out.push_back(s);
    };
    for (const auto& t : ts.types) {
      bool direct = false;
      auto s = sort_reduct(t, direct, complete);
      if (!s) continue;
      if (direct || !spec_.axiom(*s).empty()) push(*s);
    }
    return out;
  }

  bool sort_typable(const TermPtr& m, std::size_t depth, bool& complete) {
    return !sorts_of(m, depth, complete).empty();
  }

 private:
  TypeSet derive_rules(const TermPtr& m, std::size_t depth) {
    TypeSet out;
    switch (m->kind()) {
      case Term::Kind::Sort:
        for (const auto& s2 : spec_.axiom(m->sort_name())) out.add(Term::sort(s2));
        break;
      case Term::Kind::Bound:
        break;
      case Term::Kind::Free: {
        if (!sorts_of(m->var().tag(), depth - 1, out.complete).empty()) {
          out.add(m->var().tag());
        }
        break;
      }
      case Term::Kind::Pi: {
        auto s1s = sorts_of(m->domain(), depth - 1, out.complete);
        if (s1s.empty()) break;
        // one fresh eigenvariable suffices: instances differ only by a
        // tag-preserving renaming, and non-fresh candidates are blocked by
        // the side condition y not-in hfv(codomain)
        auto [eigen, opened] =
            eigen_open(m->domain(), m->body(), hfv_union(m->domain(), m->body()));
        (void)eigen;
        auto s2s = sorts_of(opened, depth - 1, out.complete);
        for (const auto& s1 : s1s) {
          for (const auto& s2 : s2s) {
            for (const auto& s3 : spec_.rule(s1, s2)) out.add(Term::sort(s3));
          }
        }
        break;
      }
      case Term::Kind::Lam: {
        auto [eigen, opened] =
            eigen_open(m->domain(), m->body(), hfv_union(m->domain(), m->body()));
        TypeSet body = derive(opened, depth - 1);
        out.complete = out.complete && body.complete;
        for (const auto& body_type : body.types) {
          TermPtr codomain = close(body_type, eigen);
          if (hfv(codomain).count(eigen) > 0) continue;  // side condition
          TermPtr pi_type = Term::pi(m->domain(), codomain);
          if (!sorts_of(pi_type, depth - 1, out.complete).empty()) out.add(pi_type);
        }
        break;
      }
      case Term::Kind::App: {
        TypeSet funs = derive(m->fun(), depth - 1);
        out.complete = out.complete && funs.complete;
        for (const auto& fun_type : funs.types) {
          bool converted = false;
          auto pi = pi_reduct(fun_type, converted, out.complete);
          if (!pi) continue;
          if (converted && !sort_typable(*pi, depth - 1, out.complete)) continue;
          Verdict arg = checks(m->arg(), (*pi)->domain(), depth - 1);
          if (arg == Verdict::Unknown) out.complete = false;
          if (arg == Verdict::Yes) out.add(open((*pi)->body(), m->arg()));
        }
        break;
      }
    }
    return out;
  }

  std::unordered_map<TermPtr, TypeSet, TermPtrHash, TermPtrEq> memo_;
  std::unordered_set<TermPtr, TermPtrHash, TermPtrEq> in_progress_;
};

struct CtxTermKey {
  Context ctx;
  TermPtr term;

  bool operator==(const CtxTermKey& other) const {
    return *term == *other.term && ctx == other.ctx;
  }
};

struct CtxTermKeyHash {
  std::size_t operator()(const CtxTermKey& key) const {
    std::size_t h = key.term->hash();
    for (const auto& d : key.ctx.decls()) {
      h ^= d.var.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h ^= d.type->hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Declarative search over the traditional rules, (weak) and (conv)
// included.
class PtsSearch : public SearchBase {
 public:
  using SearchBase::SearchBase;

  TypeSet derive(const Context& ctx, const TermPtr& m, std::size_t depth) {
    CtxTermKey key{ctx, m};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (depth == 0 || !spend() || in_progress_.count(key) > 0) {
      TypeSet cut;
      cut.complete = false;
      return cut;
    }
    in_progress_.insert(key);
    TypeSet out = derive_rules(ctx, m, depth);
    in_progress_.erase(key);
    if (out.complete) memo_.emplace(std::move(key), out);
    return out;
  }

  Verdict checks(const Context& ctx, const TermPtr& m, const TermPtr& target,
                 std::size_t depth) {
    TypeSet ts = derive(ctx, m, depth);
    for (const auto& t : ts.types) {
      if (*t == *target) return Verdict::Yes;
    }
    bool complete = ts.complete;
    for (const auto& t : ts.types) {
      if (!beta_eq_bounded(t, target, complete)) continue;
      if (sort_typable(ctx, target, depth - 1, complete)) return Verdict::Yes;
    }
    return complete ? Verdict::No : Verdict::Unknown;
  }

  std::vector<SortName> sorts_of(const Context& ctx, const TermPtr& m, std::size_t depth,
                                 bool& complete) {
    TypeSet ts = derive(ctx, m, depth);
    complete = complete && ts.complete;
    std::vector<SortName> out;
    auto push = [&](const SortName& s) {
      for (const auto& have : out) {
        if (have == s) return;
      }
      out.push_back(s);
    };
    for (const auto& t : ts.types) {
      bool direct = false;
      auto s = sort_reduct(t, direct, complete);
      if (!s) continue;
      if (direct || !spec_.axiom(*s).empty()) push(*s);
    }
    return out;
  }

  bool sort_typable(const Context& ctx, const TermPtr& m, std::size_t depth, bool& complete) {
    return !sorts_of(ctx, m, depth, complete).empty();
  }

 private:
  TypeSet derive_rules(const Context& ctx, const TermPtr& m, std::size_t depth) {
    TypeSet out;

    if (ctx.empty()) {
      if (m->is(Term::Kind::Sort)) {
        for (const auto& s2 : spec_.axiom(m->sort_name())) out.add(Term::sort(s2));
      }
    } else {
      // (var) on the last declaration, (weak) for everything else
      const Declaration& last = ctx.decls().back();
      Context prefix = ctx.prefix(ctx.size() - 1);
      if (!sorts_of(prefix, last.type, depth - 1, out.complete).empty()) {
        if (m->is(Term::Kind::Free) && m->var() == last.var) out.add(last.type);
        TypeSet weakened = derive(prefix, m, depth - 1);
        out.complete = out.complete && weakened.complete;
        for (const auto& t : weakened.types) out.add(t);
      }
    }

    switch (m->kind()) {
      case Term::Kind::Pi: {
        auto s1s = sorts_of(ctx, m->domain(), depth - 1, out.complete);
        if (s1s.empty()) break;
        auto [eigen, opened] = fresh_open(ctx, m->domain(), m->body());
        auto s2s =
            sorts_of(ctx.extended(eigen, m->domain()), opened, depth - 1, out.complete);
        for (const auto& s1 : s1s) {
          for (const auto& s2 : s2s) {
            for (const auto& s3 : spec_.rule(s1, s2)) out.add(Term::sort(s3));
          }
        }
        break;
      }
      case Term::Kind::Lam: {
        auto [eigen, opened] = fresh_open(ctx, m->domain(), m->body());
        TypeSet body = derive(ctx.extended(eigen, m->domain()), opened, depth - 1);
        out.complete = out.complete && body.complete;
        for (const auto& body_type : body.types) {
          TermPtr codomain = close(body_type, eigen);
          if (hfv(codomain).count(eigen) > 0) continue;  // checker-invented leak
          TermPtr pi_type = Term::pi(m->domain(), codomain);
          if (!sorts_of(ctx, pi_type, depth - 1, out.complete).empty()) out.add(pi_type);
        }
        break;
      }
      case Term::Kind::App: {
        TypeSet funs = derive(ctx, m->fun(), depth - 1);
        out.complete = out.complete && funs.complete;
        for (const auto& fun_type : funs.types) {
          bool converted = false;
          auto pi = pi_reduct(fun_type, converted, out.complete);
          if (!pi) continue;
          if (converted && !sort_typable(ctx, *pi, depth - 1, out.complete)) continue;
          Verdict arg = checks(ctx, m->arg(), (*pi)->domain(), depth - 1);
          if (arg == Verdict::Unknown) out.complete = false;
          if (arg == Verdict::Yes) out.add(open((*pi)->body(), m->arg()));
        }
        break;
      }
      default:
        break;
    }
    return out;
  }

  std::pair<FreeVar, TermPtr> fresh_open(const Context& ctx, const TermPtr& domain,
                                         const TermPtr& body) {
    VarSet avoid = hfv_union(domain, body);
    for (const auto& d : ctx.decls()) {
      avoid.insert(d.var);
      VarSet tag_vars = hfv(d.var.tag());
      avoid.insert(tag_vars.begin(), tag_vars.end());
      VarSet type_vars = hfv(d.type);
      avoid.insert(type_vars.begin(), type_vars.end());
    }
    return eigen_open(domain, body, avoid);
  }

  std::unordered_map<CtxTermKey, TypeSet, CtxTermKeyHash> memo_;
  std::unordered_set<CtxTermKey, CtxTermKeyHash> in_progress_;
};

}  // namespace

std::optional<TermPtr> derive_ginf(const PtsSpec& spec, const TermPtr& m,
                                   const EnumBudget& budget, std::size_t max_depth) {
  GinfSearch search(spec, budget);
  TypeSet ts = search.derive(m, max_depth);
  if (!ts.types.empty()) return ts.types.front();
  if (!ts.complete) throw BudgetExhaustedError("context-free search was cut");
  return std::nullopt;
}

std::optional<TermPtr> derive_pts(const PtsSpec& spec, const Context& ctx, const TermPtr& m,
                                  const EnumBudget& budget, std::size_t max_depth) {
  PtsSearch search(spec, budget);
  TypeSet ts = search.derive(ctx, m, max_depth);
  if (!ts.types.empty()) return ts.types.front();
  if (!ts.complete) throw BudgetExhaustedError("contextful search was cut");
  return std::nullopt;
}

Verdict derive_ginf_checks(const PtsSpec& spec, const TermPtr& m, const TermPtr& type,
                           const EnumBudget& budget, std::size_t max_depth) {
  GinfSearch search(spec, budget);
  return search.checks(m, type, max_depth);
}

Verdict derive_pts_checks(const PtsSpec& spec, const Context& ctx, const TermPtr& m,
                          const TermPtr& type, const EnumBudget& budget,
                          std::size_t max_depth) {
  PtsSearch search(spec, budget);
  return search.checks(ctx, m, type, max_depth);
}

CorrespondenceReport correspondence_report(const PtsSpec& spec, const EnumBudget& budget,
                                           std::size_t max_context_decls,
                                           std::size_t max_context_tag_size) {
  CorrespondenceReport report;
  GinfSearch ginf_search(spec, budget);
  PtsSearch pts_search(spec, budget);

  auto record_violation = [&](std::size_t& counter, const std::string& detail) {
    ++counter;
    if (report.violation_details.size() < 20) report.violation_details.push_back(detail);
  };

  std::vector<TermPtr> terms = enumerate_terms(budget);
  report.terms_enumerated = terms.size();

  // Direction (a): context-free derivations re-checked contextfully under
  // the synthesized annotated context.
  for (const auto& term : terms) {
    TypeSet ts = ginf_search.derive(term, kDefaultSearchDepth);
    if (ts.types.empty()) {
      if (!ts.complete) ++report.budget_exhausted;
      continue;
    }
    ++report.ginf_derivable;
    const TermPtr& type = ts.types.front();
    try {
      AnnotatedJudgment annotated = synthesize_context(GinfJudgment(term, type), spec,
                                                       budget.fuel);
      VarSet expected = hfv_union(term, type);
      if (annotated.ctx().domain() != expected) {
        record_violation(report.violations_to_pts,
                         "domain of synthesized context differs from hfv for " +
                             print_term(term));
        continue;
      }
      Verdict verdict = pts_search.checks(annotated.ctx(), term, type, kDefaultSearchDepth);
      if (verdict == Verdict::No) {
        record_violation(report.violations_to_pts,
                         "synthesized judgment not derivable contextfully: " +
                             print_judgment(annotated.judgment()));
      } else if (verdict == Verdict::Unknown) {
        ++report.budget_exhausted;
      }
    } catch (const BudgetExhaustedError&) {
      ++report.budget_exhausted;
    } catch (const FuelExhaustedError&) {
      ++report.budget_exhausted;
    } catch (const Error& e) {
      record_violation(report.violations_to_pts,
                       "context synthesis failed for " + print_term(term) + " : " +
                           print_term(type) + " (" + e.what() + ")");
    }
  }

  // Direction (b): derivable annotated judgments stay derivable with the
  // context dropped.
  std::vector<Context> contexts =
      enumerate_annotated_contexts(budget, max_context_decls, max_context_tag_size);
  report.contexts_enumerated = contexts.size();
  for (const auto& ctx : contexts) {
    VarSet dom = ctx.domain();
    for (const auto& term : terms) {
      bool scoped = true;
      for (const FreeVar& v : fv(term)) {
        if (dom.count(v) == 0) {
          scoped = false;
          break;
        }
      }
      if (!scoped) continue;  // free variables must be declared to derive
      ++report.pts_judgments_checked;
      TypeSet ts = pts_search.derive(ctx, term, kDefaultSearchDepth);
      if (ts.types.empty()) {
        if (!ts.complete) ++report.budget_exhausted;
        continue;
      }
      ++report.pts_judgments_derivable;
      const TermPtr& type = ts.types.front();
      bool annotated_form = true;
      for (const FreeVar& v : fv(type)) {
        if (dom.count(v) == 0) annotated_form = false;
      }
      if (!annotated_form) {
        record_violation(report.violations_to_ginf,
                         "derived type leaks undeclared variables for " + print_term(term));
        continue;
      }
      Verdict verdict = ginf_search.checks(term, type, kDefaultSearchDepth);
      if (verdict == Verdict::No) {
        record_violation(report.violations_to_ginf,
                         "derivable annotated judgment lost by dropping the context: " +
                             print_term(term) + " : " + print_term(type));
      } else if (verdict == Verdict::Unknown) {
        ++report.budget_exhausted;
      }
    }
  }
  return report;
}

AgreementReport agreement_report(const PtsSpec& spec, const EnumBudget& budget,
                                 std::size_t max_context_decls,
                                 std::size_t max_context_tag_size) {
  AgreementReport report;
  GinfSearch ginf_search(spec, budget);
  PtsSearch pts_search(spec, budget);

  auto disagree = [&](const std::string& detail) {
    ++report.disagreements;
    if (report.details.size() < 20) report.details.push_back(detail);
  };

  std::vector<TermPtr> terms = enumerate_terms(budget);
  for (const auto& term : terms) {
    std::optional<TermPtr> algo;
    try {
      algo = ginf_infer(spec, term, budget.fuel);
    } catch (const FuelExhaustedError&) {
      ++report.budget_exhausted;
      continue;
    } catch (const Error&) {
      algo = std::nullopt;
    }
    TypeSet oracle = ginf_search.derive(term, kDefaultSearchDepth);
    if (oracle.types.empty() && !oracle.complete) {
      ++report.budget_exhausted;
      continue;
    }
    ++report.ginf_instances;
    if (algo.has_value() != !oracle.types.empty()) {
      disagree("context-free checker and oracle disagree on " + print_term(term));
      continue;
    }
    if (algo) {
      bool matched = false;
      for (const auto& t : oracle.types) {
        try {
          if (beta_eq(t, *algo, budget.fuel)) matched = true;
        } catch (const FuelExhaustedError&) {
        }
      }
      if (!matched) {
        disagree("context-free types disagree on " + print_term(term));
      }
    }
  }

  std::vector<Context> contexts =
      enumerate_annotated_contexts(budget, max_context_decls, max_context_tag_size);
  for (const auto& ctx : contexts) {
    VarSet dom = ctx.domain();
    for (const auto& term : terms) {
      bool scoped = true;
      for (const FreeVar& v : fv(term)) {
        if (dom.count(v) == 0) scoped = false;
      }
      if (!scoped) continue;
      std::optional<TermPtr> algo;
      try {
        algo = infer_type(spec, ctx, term, budget.fuel);
      } catch (const FuelExhaustedError&) {
        ++report.budget_exhausted;
        continue;
      } catch (const Error&) {
        // ill-formed context or untypable term: nothing derivable
        algo = std::nullopt;
      }
      TypeSet oracle = pts_search.derive(ctx, term, kDefaultSearchDepth);
      if (oracle.types.empty() && !oracle.complete) {
        ++report.budget_exhausted;
        continue;
      }
      ++report.pts_instances;
      if (algo.has_value() != !oracle.types.empty()) {
        disagree("contextful checker and oracle disagree on " + print_term(term));
        continue;
      }
      if (algo) {
        bool matched = false;
        for (const auto& t : oracle.types) {
          try {
            if (beta_eq(t, *algo, budget.fuel)) matched = true;
          } catch (const FuelExhaustedError&) {
          }
        }
        if (!matched) disagree("contextful types disagree on " + print_term(term));
      }
    }
  }
  return report;
}

std::string format_report(const CorrespondenceReport& report) {
  std::ostringstream out;
  out << "terms enumerated:            " << report.terms_enumerated << "\n"
      << "context-free derivable:      " << report.ginf_derivable << "\n"
      << "annotated contexts:          " << report.contexts_enumerated << "\n"
      << "contextful judgments tried:  " << report.pts_judgments_checked << "\n"
      << "contextful derivable:        " << report.pts_judgments_derivable << "\n"
      << "violations (to contextful):  " << report.violations_to_pts << "\n"
      << "violations (to context-free): " << report.violations_to_ginf << "\n"
      << "budget exhausted entries:    " << report.budget_exhausted << "\n";
  for (const auto& detail : report.violation_details) {
    out << "  violation: " << detail << "\n";
  }
  return out.str();
}

}  // namespace gammainf
