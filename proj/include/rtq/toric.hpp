#pragma once
// Toric certificates: quotient-type computation for simplicial cones in a
// rank-3 lattice Z^3 + Z q, crepancy of subdivisions, Cartier data,
// basepoint-freeness, pushforward of sections, and an H^1-vanishing check
// via connected-support patterns.

#include <rtq/fourier_motzkin.hpp>
#include <rtq/snf.hpp>
#include <array>

namespace rtq {

using QVec3 = std::array<Rat, 3>;

class QLattice {
 public:
  QLattice() : QLattice(QVec3{Rat(0), Rat(0), Rat(0)}) {}  // plain Z^3
  explicit QLattice(QVec3 q);

  const QVec3& q() const { return q_; }
  const QMat& basis() const { return basis_; }  // columns are a Z-basis
  Rat covolume() const;                         // |det basis|

  bool contains(const QVec3& v) const;
  bool dual_contains(const QVec3& x) const;  // x in Z^3 with <x,q> integral
  // smallest positive multiple of v lying in the lattice
  QVec3 primitive(const QVec3& v) const;

 private:
  QVec3 q_;
  QMat basis_, inv_;
};

struct Fan {
  QLattice lattice;
  std::vector<QVec3> rays;                  // primitive in the lattice
  std::vector<std::array<int, 3>> cones;    // index triples into rays
};

// per-ray divisor coefficients a_rho for D = sum a_rho D_rho
using Divisor = std::vector<Rat>;

struct ConeType {
  Int index = 1;                 // 1 means smooth
  std::array<long, 3> weights{}; // normalized, all zero when smooth
};
ConeType cone_type(const Fan& fan, int cone_idx);

// every ray beyond the standard basis vectors lies on x1+x2+x3 = 1
bool is_crepant_subdivision(const Fan& fan);

struct CartierData {
  Int ell = 1;                    // minimal multiple making ell*D Cartier
  std::vector<QVec3> m;           // per-cone functionals for ell*D
};
CartierData cartier_data(const Divisor& a, const Fan& fan);

bool is_basepoint_free(const Divisor& a, const Fan& fan);

// sections of D_i agree with sections of its image divisor downstairs:
// no x in the coarse polyhedron violates an added-ray constraint
bool pushforward_sections_equal(int i, const Fan& fan);

bool h1_vanishes(const Divisor& a, const Fan& fan);

struct TerminalizeResult {
  Fan fan;
  bool crepant = false;
  std::vector<ConeType> types;
  bool all_terminal = false;  // every cone smooth or strictly terminal
};
TerminalizeResult terminalize(long d, std::array<long, 3> weights);

}  // namespace rtq
