#include "dcut/cnf.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "dcut/errors.hpp"

namespace dcut {

namespace {

std::string clause_text(const Clause& c) {
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < 3; ++i) {
    if (i) os << ",";
    if (!c.positive) os << "~";
    os << "x" << c.vars[i] + 1;
  }
  os << "}";
  return os.str();
}

}  // namespace

CnfValidation validate_instance(const CnfInstance& inst) {
  CnfValidation v;
  auto fail = [&](const std::string& msg) {
    v.ok = false;
    v.violations.push_back(msg);
  };

  if (inst.n_vars < 1) fail("instance has no variables");
  if (inst.clauses.empty()) fail("instance has no clauses");

  for (std::size_t i = 0; i < inst.clauses.size(); ++i) {
    const Clause& c = inst.clauses[i];
    bool in_range = true;
    for (int x : c.vars)
      if (x < 0 || x >= inst.n_vars) in_range = false;
    if (!in_range) {
      fail("clause " + std::to_string(i + 1) + " uses a variable out of range");
      continue;
    }
    if (c.vars[0] == c.vars[1] || c.vars[0] == c.vars[2] ||
        c.vars[1] == c.vars[2])
      fail("clause " + std::to_string(i + 1) + " " + clause_text(c) +
           ": literals not distinct");
    if (inst.flavour == CnfFlavour::NaeAllPositive && !c.positive)
      fail("clause " + std::to_string(i + 1) +
           ": negative literals not allowed in an all-positive NAE instance");
  }

  if (inst.flavour == CnfFlavour::SplitPosNeg && inst.n_vars >= 1) {
    std::vector<int> pos(inst.n_vars, 0), neg(inst.n_vars, 0);
    int p = 0, q = 0;
    for (const Clause& c : inst.clauses) {
      bool in_range = true;
      for (int x : c.vars)
        if (x < 0 || x >= inst.n_vars) in_range = false;
      if (!in_range) continue;
      (c.positive ? p : q) += 1;
      for (int x : c.vars) (c.positive ? pos : neg)[x] += 1;
    }
    for (int x = 0; x < inst.n_vars; ++x) {
      if (pos[x] != 2)
        fail("variable x" + std::to_string(x + 1) + " occurs in " +
             std::to_string(pos[x]) + " positive clauses, expected exactly 2");
      if (neg[x] != 2)
        fail("variable x" + std::to_string(x + 1) + " occurs in " +
             std::to_string(neg[x]) + " negative clauses, expected exactly 2");
    }
    if (p < 4)
      fail("only " + std::to_string(p) + " positive clauses, need at least 4");
    if (q < 4)
      fail("only " + std::to_string(q) + " negative clauses, need at least 4");
  }
  return v;
}

bool satisfies(const CnfInstance& inst, const Assignment& a) {
  if (static_cast<int>(a.size()) != inst.n_vars) return false;
  for (const Clause& c : inst.clauses) {
    int made_true = 0;
    for (int x : c.vars)
      if (a[x] == c.positive) ++made_true;
    if (inst.flavour == CnfFlavour::NaeAllPositive) {
      if (made_true == 0 || made_true == 3) return false;  // all equal
    } else {
      if (made_true == 0) return false;
    }
  }
  return true;
}

std::optional<Assignment> sat_oracle(const CnfInstance& inst, int max_vars) {
  if (inst.n_vars > max_vars)
    throw GuardError("sat_oracle: " + std::to_string(inst.n_vars) +
                     " variables exceed the exhaustive guard of " +
                     std::to_string(max_vars));
  Assignment a(inst.n_vars, false);
  const std::uint64_t end = std::uint64_t{1} << inst.n_vars;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    for (int h = 0; h < inst.n_vars; ++h) a[h] = (mask >> h) & 1;
    if (satisfies(inst, a)) return a;
  }
  return std::nullopt;
}

CnfInstance parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, m = -1;
  std::vector<long> literals;
  bool saw_header = false;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "c" || first[0] == 'c') continue;
    if (first == "p") {
      if (saw_header) throw ParseError("duplicate DIMACS header");
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 0 || m < 0)
        throw ParseError("malformed DIMACS header, expected \"p cnf <vars> <clauses>\"");
      saw_header = true;
      continue;
    }
    if (!saw_header) throw ParseError("clause data before the \"p cnf\" header");
    // clause data; `first` is already a literal token
    std::istringstream rest(line);
    long lit;
    while (rest >> lit) literals.push_back(lit);
    if (rest.fail() && !rest.eof()) throw ParseError("non-numeric token in clause data: " + line);
  }
  if (!saw_header) throw ParseError("missing \"p cnf\" header");

  CnfInstance inst;
  inst.n_vars = n;
  bool any_negative = false;
  std::vector<long> current;
  for (long lit : literals) {
    if (lit != 0) {
      current.push_back(lit);
      continue;
    }
    if (current.size() != 3)
      throw ParseError("clause " + std::to_string(inst.clauses.size() + 1) +
                       " has " + std::to_string(current.size()) +
                       " literals, expected exactly 3");
    Clause c;
    c.positive = current[0] > 0;
    for (int i = 0; i < 3; ++i) {
      if ((current[i] > 0) != c.positive)
        throw ParseError("clause " + std::to_string(inst.clauses.size() + 1) +
                         " mixes positive and negative literals");
      long var = std::abs(current[i]);
      if (var < 1 || var > n)
        throw ParseError("literal " + std::to_string(current[i]) +
                         " out of range in clause " +
                         std::to_string(inst.clauses.size() + 1));
      c.vars[i] = static_cast<int>(var) - 1;
    }
    if (!c.positive) any_negative = true;
    inst.clauses.push_back(c);
    current.clear();
  }
  if (!current.empty()) throw ParseError("last clause is not 0-terminated");
  if (static_cast<int>(inst.clauses.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " clauses, found " +
                     std::to_string(inst.clauses.size()));

  inst.flavour =
      any_negative ? CnfFlavour::SplitPosNeg : CnfFlavour::NaeAllPositive;
  CnfValidation v = validate_instance(inst);
  if (!v.ok) {
    std::string msg = "instance violates the ";
    msg += any_negative ? "split positive/negative" : "all-positive NAE";
    msg += " restrictions:";
    for (const std::string& s : v.violations) msg += "\n  - " + s;
    throw ParseError(msg);
  }
  return inst;
}

std::string emit_dimacs(const CnfInstance& inst) {
  std::ostringstream os;
  os << "p cnf " << inst.n_vars << " " << inst.clauses.size() << "\n";
  for (const Clause& c : inst.clauses) {
    for (int x : c.vars) os << (c.positive ? x + 1 : -(x + 1)) << " ";
    os << "0\n";
  }
  return os.str();
}

}  // namespace dcut
