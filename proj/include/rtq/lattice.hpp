#pragma once
// Rank-6 period lattices inside C^3, represented exactly.
//
// A lattice is given by six basis vectors with entries in a cyclotomic field.
// All torus computations happen in lattice coordinates: the torus is Q^6/Z^6
// and a self-map of the torus is a rational 6x6 matrix plus a translation
// vector.  The complex structure is carried along as the rational matrix S of
// multiplication by a fixed imaginary quadratic scalar s with s^2 = -c for an
// integer c > 0 (s = 2*lambda + 1 for lambda = zeta_3 resp. the period
// eta = z7 + z7^2 + z7^4); a self-map is holomorphic exactly when its
// coordinate matrix commutes with S, antiholomorphic when it anticommutes.

#include <rtq/cyclotomic.hpp>
#include <rtq/matrix.hpp>
#include <rtq/snf.hpp>
#include <array>
#include <memory>

namespace rtq {

class PeriodLattice {
 public:
  // basis: six vectors of length 3 over Q(zeta_conductor);
  // cm_scalar: lambda whose scalar multiplication preserves the rational
  // span of the basis (verified on construction)
  PeriodLattice(int conductor, std::vector<CycloVec> basis, Cyclo cm_scalar);

  static PeriodLattice product_zeta3();  // Z[z3]^3
  // span of (z^{k e_1}, z^{k e_2}, z^{k e_3}) for k = 0..5, z = zeta_n
  static PeriodLattice cm_embedding(int n, std::array<int, 3> exps);

  int conductor() const { return n_; }
  const std::vector<CycloVec>& basis() const { return basis_; }
  const QMat& complex_structure() const { return smat_; }
  const Int& structure_norm() const { return c_; }

  // rational coordinates with respect to the basis; nullopt when the vector
  // is outside the rational span
  std::optional<QVec> coords(const CycloVec& v) const;
  CycloVec from_coords(const QVec& x) const;
  bool contains(const CycloVec& v) const;

 private:
  int n_;
  std::vector<CycloVec> basis_;
  Cyclo lambda_;
  Int c_;
  QMat smat_;
  QMat flat_;       // (3 phi(n)) x 6 flattened basis
  QMat left_inv_;   // 6 x (3 phi(n)) with left_inv * flat = I
};

// z -> M . sigma(z) + shift, sigma conjugating the flagged coordinates
struct SemilinearMap {
  CycloMat m;
  std::array<bool, 3> conj{false, false, false};
  CycloVec shift;

  static SemilinearMap linear(CycloMat mat);
  CycloVec apply(const CycloVec& z) const;
  SemilinearMap after(const SemilinearMap& g) const;  // this ∘ g
  bool is_linear() const { return !conj[0] && !conj[1] && !conj[2]; }
};

// the 6x6 coordinate matrix of the linear part of f, mapping src coords to
// dst coords; nullopt when f does not even preserve the rational spans
std::optional<QMat> matrix_of(const SemilinearMap& f, const PeriodLattice& src,
                              const PeriodLattice& dst);

// lowered torus self-map: x -> lin x + trans on Q^6/Z^6
struct RealTorusMap {
  QMat lin;
  QVec trans;

  QVec apply_pt(const QVec& x) const {
    QVec y = lin.apply(x);
    for (size_t i = 0; i < y.size(); ++i) y[i] = frac(y[i] + trans[i]);
    return y;
  }
};

// does the coordinate matrix preserve the lattice (integral and unimodular)?
bool preserves_lattice(const QMat& lin);

bool is_holomorphic(const QMat& lin, const PeriodLattice& src, const PeriodLattice& dst);
bool is_antiholomorphic(const QMat& lin, const PeriodLattice& src, const PeriodLattice& dst);

// fixed points of x -> A x + t on the torus: (A - I) x == -t (mod Z^6)
CongSolution fixed_locus(const QMat& lin, const QVec& trans);

// subgroup of torus points fixed by every map in the list; throws when the
// subgroup is positive dimensional.  Divisors are the elementary divisors
// (> 1) of the finite group, reps its full point list.
struct FiniteSubgroup {
  std::vector<Int> divisors;
  std::vector<QVec> reps;
  Int order() const {
    Int o = 1;
    for (const auto& d : divisors) o *= d;
    return o;
  }
};
FiniteSubgroup invariant_subgroup(const std::vector<QMat>& lins);

// lattice generated by base and the given torsion points; returns the new
// lattice together with the index [new : base]
struct QuotientLattice {
  std::shared_ptr<PeriodLattice> lattice;
  Int index;
};
QuotientLattice make_quotient_lattice(const PeriodLattice& base,
                                      const std::vector<CycloVec>& gens);

}  // namespace rtq
