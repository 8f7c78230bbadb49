#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gammainf/term.hpp"

namespace gammainf {

// One PTS instance: a sort set, an axiom relation over sorts, and a rule
// relation over sort triples. Immutable once built; every sort mentioned by
// an axiom or rule must be in the sort set.
class PtsSpec {
 public:
  using Axiom = std::pair<SortName, SortName>;
  using Rule = std::tuple<SortName, SortName, SortName>;

  PtsSpec(std::set<SortName> sorts, std::set<Axiom> axioms, std::set<Rule> rules);

  const std::set<SortName>& sorts() const { return sorts_; }
  const std::set<Axiom>& axioms() const { return axioms_; }
  const std::set<Rule>& rules() const { return rules_; }

  bool has_sort(const SortName& s) const { return sorts_.count(s) > 0; }

  // All s2 with (s1, s2) an axiom; possibly several for non-functional specs.
  std::vector<SortName> axiom(const SortName& s1) const;

  // All s3 with (s1, s2, s3) a rule.
  std::vector<SortName> rule(const SortName& s1, const SortName& s2) const;

  // True iff axioms and rules are partial functions of their first /
  // first-two components. Syntax-directed inference requires this.
  bool is_functional() const;

  // Content hash; used by the LCF kernel to detect mixed-spec theorems.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const PtsSpec& a, const PtsSpec& b) {
    return a.sorts_ == b.sorts_ && a.axioms_ == b.axioms_ && a.rules_ == b.rules_;
  }

  // The lambda cube presets, all over sorts {*, #} with axiom (*, #).
  static PtsSpec simply_typed();  // stlc: (*,*,*)
  static PtsSpec system_f();      // f: + (#,*,*)
  static PtsSpec lambda_p();      // p: + (*,#,#)
  static PtsSpec f_omega();       // omega: + (#,*,*) (#,#,#)
  static PtsSpec coc();           // coc: all four rules

  static std::optional<PtsSpec> preset(const std::string& name);

  // Line-oriented spec text: `sorts: ...`, `axiom: s1 s2`, `rule: s1 s2 s3`,
  // `preset: name`; lines starting with `;` are comments.
  static PtsSpec parse(const std::string& text);
  static PtsSpec load_file(const std::string& path);

 private:
  std::set<SortName> sorts_;
  std::set<Axiom> axioms_;
  std::set<Rule> rules_;
  std::uint64_t fingerprint_;
};

using SpecPtr = std::shared_ptr<const PtsSpec>;

// Requires a functional spec and returns the unique axiom / rule target.
SortName unique_axiom(const PtsSpec& spec, const SortName& s1);
SortName unique_rule(const PtsSpec& spec, const SortName& s1, const SortName& s2);

}  // namespace gammainf
