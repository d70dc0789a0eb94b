#pragma once
// Smith / Hermite normal forms over Z and congruence solving on Q^k / Z^k.

#include <rtq/matrix.hpp>

namespace rtq {

struct SmithForm {
  IMat d;  // diagonal, non-negative, d1 | d2 | ...
  IMat u;  // unimodular, rows x rows
  IMat v;  // unimodular, cols x cols;  u * a * v = d
};

SmithForm smith_form(IMat a);

// row-style Hermite normal form of the lattice spanned by the rows of a;
// returns a full-rank r x cols basis (r = rank), rows in echelon order
IMat hermite_row_basis(const IMat& a);

// Solutions of  A x == b  (mod Z^rows),  x in Q^cols taken modulo Z^cols.
enum class CongStatus { Empty, Finite, PositiveDim };

struct CongSolution {
  CongStatus status = CongStatus::Empty;
  Int count = 0;             // number of solutions mod Z^cols (Finite only)
  std::vector<QVec> reps;    // all solutions, coordinates in [0,1), sorted
  QVec particular;           // one solution (Finite or PositiveDim)
};

// enumerate_all: when false only count/particular are produced (still exact)
CongSolution solve_congruence(const IMat& a, const QVec& b, bool enumerate_all = true);

// Spec-shaped interface: solutions of A x == b (mod lattice spanned by the
// columns of the invertible integer matrix L).  Reduces to the Z^rows case.
CongSolution solve_linear_congruence(const IMat& a, const QVec& b, const IMat& l,
                                     bool enumerate_all = true);

}  // namespace rtq
