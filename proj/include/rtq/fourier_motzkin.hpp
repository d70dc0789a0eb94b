#pragma once
// Rational feasibility of small linear inequality systems by
// Fourier-Motzkin elimination.  Rows are a . x >= b.  Strict constraints are
// not represented directly; callers on integer-valued functionals tighten
// "a . x > b" to "a . x >= b + 1" before building the system.

#include <rtq/matrix.hpp>

namespace rtq {

struct Ineq {
  QVec a;
  Rat b;
};

struct IneqSystem {
  size_t dim = 0;
  std::vector<Ineq> rows;

  void ge(QVec a, Rat b) { rows.push_back({std::move(a), std::move(b)}); }
  void le(QVec a, Rat b) {
    for (auto& x : a) x = -x;
    rows.push_back({std::move(a), -b});
  }
  void eq(QVec a, Rat b) {
    ge(a, b);
    le(a, b);
  }
};

bool fm_feasible(const IneqSystem& sys);

}  // namespace rtq
