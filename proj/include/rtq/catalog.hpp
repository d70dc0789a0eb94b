#pragma once
// The built-in case setups (the five groups with p_g = 0, the Calabi-Yau
// groups, and the Heisenberg verification rows) plus the golden table data
// shipped in data/golden_tables.json.

#include <rtq/classify.hpp>

namespace rtq {

// parse a sum of terms  [+-] [num] [* ] [z[^k]] [/den]  over Q(zeta_n),
// e.g. "z^4", "-1/3-2*z/3", "2/3", "0"
Cyclo parse_cyclo(int n, const std::string& s);

CaseSpec case_z9();
CaseSpec case_z14();
CaseSpec case_z3cube();
CaseSpec case_z3sq_rho1();
CaseSpec case_z3sq_rho2();
CaseSpec case_z9_semidirect();

CaseSpec case_z3_cy();
CaseSpec case_z7_cy();
CaseSpec case_z3sq_cy();
CaseSpec case_he3_cy();  // verification only

std::vector<CaseSpec> pg0_cases();        // the five groups of the main table
const CaseSpec* case_by_name(const std::string& name);

struct GoldenRow {
  std::string name;       // "Z1".."Z8", "Y1".."Y11" (primed: "Y4p", "Y10p")
  std::string case_name;  // which CaseSpec the action belongs to
  KernelCode kernel;      // empty for CM-lattice and trivial-kernel rows
  std::vector<CycloVec> gen_trans;  // per presentation generator, complex coords
  std::vector<std::string> basket;
  std::string pi1;
  int pg = 0;
};

struct GoldenWitness {
  std::string from, to;
  SemilinearMap map;
};

struct GoldenData {
  std::vector<GoldenRow> table1, table2;
  std::vector<GoldenWitness> witnesses;
};

GoldenData load_golden();  // reads golden_tables.json from the data directory

// the row's action on its own torus (kernel lattice built on demand)
AffineAction build_golden_action(const GoldenRow& row);

}  // namespace rtq
