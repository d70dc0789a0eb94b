#pragma once
// Singular locus of a good action, cyclic quotient singularity typing,
// baskets, the counting-formula verifiers, and fundamental groups.

#include <rtq/action.hpp>
#include <map>

namespace rtq {

struct SingularOrbit {
  QVec rep;                      // orbit representative, lattice coordinates
  long stab_order = 1;
  std::array<long, 3> weights{}; // normalized type (first weight 1)
  Int orbit_size = 0;
};

// weight normalization: lexicographically minimal sorted tuple over all
// generator powers coprime to d
std::array<long, 3> normalize_weights(long d, std::array<long, 3> w);

struct CqsClass {
  bool canonical = false, terminal = false, gorenstein = false;
  std::string morrison_label;  // empty when not canonical
};
CqsClass classify_cqs(long d, std::array<long, 3> weights);

// the orbit list; throws on non-cyclic stabilizers or bad actions
std::vector<SingularOrbit> singular_locus(const AffineAction& a);

struct Basket {
  std::map<std::pair<long, std::array<long, 3>>, long> types;

  void add(long d, std::array<long, 3> w, long count = 1) { types[{d, w}] += count; }
  std::vector<std::string> serialized() const;  // sorted "d/(a,b,c)xcount"
  // exact orbifold Riemann-Roch sum over the non-Gorenstein types
  Rat riemann_roch_sum() const;
};

Basket basket_of(const std::vector<SingularOrbit>& orbits);

// all solutions of the degree-one constraint within the stated bounds,
// as vectors (N2, N3, N4, N6, N9, N14)
std::vector<std::array<long, 6>> riemann_roch_baskets();

struct LefschetzResult {
  Int count_snf = 0;
  Int count_formula = 0;
  bool agree = false;
};
// g = element index of the action; error when 1 is an eigenvalue
LefschetzResult lefschetz_check(const AffineAction& a, int g);

// orbit-counting identity for the maximal order m
bool burnside_check(const AffineAction& a, long m);

struct Pi1Result {
  std::vector<int> gfix;   // element indices of the fixed-point subgroup
  bool shortcut = false;
  long quotient_order = 0;
  std::string descriptor;  // "1", "Z3", "Z3^2", "Z9", ...
  std::string cover;       // universal cover description when the shortcut applies
};
Pi1Result fundamental_group(const AffineAction& a);

}  // namespace rtq
