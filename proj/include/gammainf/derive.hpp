#pragma once

#include <optional>
#include <string>

#include "gammainf/context.hpp"
#include "gammainf/enumerate.hpp"
#include "gammainf/pts_spec.hpp"

namespace gammainf {

// Small-scale ground truth: the typing rules of both presentations are
// re-implemented here as naive declarative searches (explicit conversion
// steps, memoized), sharing no rule logic with the syntax-directed
// checkers. Searches answer "no" only when complete; a cut branch raises
// BudgetExhaustedError instead.

enum class Verdict { Yes, No, Unknown };

inline constexpr std::size_t kDefaultSearchDepth = 48;

// A type derivable for m in the context-free rules, if any.
// Throws BudgetExhaustedError when nothing was found but the search was cut.
std::optional<TermPtr> derive_ginf(const PtsSpec& spec, const TermPtr& m,
                                   const EnumBudget& budget,
                                   std::size_t max_depth = kDefaultSearchDepth);

// Same for the traditional contextful rules.
std::optional<TermPtr> derive_pts(const PtsSpec& spec, const Context& ctx, const TermPtr& m,
                                  const EnumBudget& budget,
                                  std::size_t max_depth = kDefaultSearchDepth);

// Is m : type derivable?
Verdict derive_ginf_checks(const PtsSpec& spec, const TermPtr& m, const TermPtr& type,
                           const EnumBudget& budget,
                           std::size_t max_depth = kDefaultSearchDepth);
Verdict derive_pts_checks(const PtsSpec& spec, const Context& ctx, const TermPtr& m,
                          const TermPtr& type, const EnumBudget& budget,
                          std::size_t max_depth = kDefaultSearchDepth);

struct CorrespondenceReport {
  std::size_t terms_enumerated = 0;
  std::size_t ginf_derivable = 0;
  std::size_t contexts_enumerated = 0;
  std::size_t pts_judgments_checked = 0;
  std::size_t pts_judgments_derivable = 0;
  std::size_t violations_to_pts = 0;   // context synthesis direction
  std::size_t violations_to_ginf = 0;  // context dropping direction
  std::size_t budget_exhausted = 0;
  std::vector<std::string> violation_details;

  std::size_t violations() const { return violations_to_pts + violations_to_ginf; }
  bool ok() const { return violations() == 0; }
};

// Validates both correspondence directions over the enumerated space:
// (a) every context-free derivable m : A admits a synthesized annotated
//     context accepted by the contextful search, with domain exactly
//     hfv(m, A);
// (b) every derivable judgment over an enumerated annotated context remains
//     derivable context-free after dropping the context.
CorrespondenceReport correspondence_report(const PtsSpec& spec, const EnumBudget& budget,
                                           std::size_t max_context_decls = 2,
                                           std::size_t max_context_tag_size = 3);

std::string format_report(const CorrespondenceReport& report);

struct AgreementReport {
  std::size_t ginf_instances = 0;
  std::size_t pts_instances = 0;
  std::size_t disagreements = 0;
  std::size_t budget_exhausted = 0;
  std::vector<std::string> details;

  bool ok() const { return disagreements == 0; }
};

// Compares the syntax-directed checkers against the declarative searches on
// every enumerated term (context-free) and every scoped (context, term)
// pair (contextful). Fuel/budget-exhausted instances are counted apart and
// never as disagreements.
AgreementReport agreement_report(const PtsSpec& spec, const EnumBudget& budget,
                                 std::size_t max_context_decls = 2,
                                 std::size_t max_context_tag_size = 3);

}  // namespace gammainf
