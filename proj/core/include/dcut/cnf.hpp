#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace dcut {

// The two restricted CNF families the hardness gadgets consume.
//   NaeAllPositive: every clause = three distinct positive literals; the
//     question is for a not-all-equal satisfying assignment.
//   SplitPosNeg: every clause all-positive or all-negative with three
//     distinct variables; every variable occurs in exactly two positive and
//     exactly two negative clauses; plain satisfiability.
enum class CnfFlavour { NaeAllPositive, SplitPosNeg };

// One clause: three variables (0-based), all literals carrying the same sign.
struct Clause {
  std::array<int, 3> vars{};
  bool positive = true;
};

struct CnfInstance {
  int n_vars = 0;
  std::vector<Clause> clauses;
  CnfFlavour flavour = CnfFlavour::NaeAllPositive;
};

// Truth value per variable; length n_vars.
using Assignment = std::vector<bool>;

struct CnfValidation {
  bool ok = true;
  std::vector<std::string> violations;  // one message per violated constraint
};

CnfValidation validate_instance(const CnfInstance& inst);

// Satisfaction test matching the flavour: not-all-equal per clause for
// NaeAllPositive, at-least-one-true-literal per clause for SplitPosNeg.
bool satisfies(const CnfInstance& inst, const Assignment& a);

// Exhaustive search over all 2^n assignments (mask order, bit h = variable h);
// first satisfying assignment wins. Throws GuardError above `max_vars`.
std::optional<Assignment> sat_oracle(const CnfInstance& inst, int max_vars = 24);

// DIMACS-style input: optional 'c' comment lines, one "p cnf <vars> <clauses>"
// header, then 0-terminated clauses (1-based literals, free layout). Flavour
// is inferred from the signs -- any negative literal means SplitPosNeg -- and
// the parsed instance must validate. Mixed-sign clauses are rejected outright
// since Clause carries one polarity per clause.
CnfInstance parse_dimacs(const std::string& text);
std::string emit_dimacs(const CnfInstance& inst);

}  // namespace dcut
