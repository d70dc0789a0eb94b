#pragma once
// Cocycle enumeration on the candidate tori, cohomology classes, normalizer
// actions, and the orbit classification of the quotients up to biholomorphism
// and diffeomorphism, together with checkable equivalence witnesses.

#include <rtq/action.hpp>
#include <rtq/singular.hpp>

namespace rtq {

// A translation datum for every presentation generator, in lattice
// coordinates of the torus it lives on, entries in [0,1).
struct Cocycle {
  std::vector<QVec> t;
  std::string key() const;
  bool operator==(const Cocycle& o) const { return t == o.t; }
};

// A finite subgroup of the 3-torsion points t*(Z_3)^3 of E^3, stored as the
// sorted list of its elements in exponent coordinates (multiples of t).
using KernelCode = std::vector<std::array<int, 3>>;

std::string kernel_str(const KernelCode& k);

struct CaseSpec {
  std::string name;
  Presentation pres;
  std::vector<CycloMat> gen_mats;  // analytic representation on the base torus
  int pinned = -1;                 // generator whose translation is fixed to 0
  std::vector<int> free_gens;      // generators carrying translation parameters
  std::shared_ptr<const PeriodLattice> base;

  // kernel enumeration (product tori E^3/K only): a candidate K is any
  // subgroup of the t-points that is invariant under every generator matrix
  // and contains no nonzero element whose support equals a forbidden set
  bool uses_kernels = false;
  std::vector<std::vector<int>> forbidden_supports;

  // normalizer source: monomial enumeration with unit entries, or an explicit
  // generator catalog (repeated-character block case)
  bool monomial_normalizer = true;
  std::vector<SemilinearMap> catalog;
  std::vector<SemilinearMap> diffeo_extra;  // semilinear candidates for the catalog case
};

// --- normalizer pools -------------------------------------------------------

// monomial case: all matrices P * diag(units) (times coordinatewise
// conjugation on a subset when diffeo is set) normalizing the image of the
// representation as a group of real torus maps; catalog case: the stored
// generator list (plus the semilinear candidates when diffeo is set)
std::vector<SemilinearMap> normalizer(const CaseSpec& c, bool diffeo = false);

// --- kernels ----------------------------------------------------------------

struct KernelInfo {
  KernelCode code;
  int rep = -1;             // index (into `all`) of the orbit representative
  SemilinearMap witness;    // maps this kernel onto its representative
};

struct KernelOrbits {
  std::vector<KernelInfo> all;  // admissible kernels, sorted by (order, code)
  std::vector<int> reps;        // indices of the orbit representatives
  int index_of(const KernelCode& k) const;
};

KernelOrbits kernel_orbits(const CaseSpec& c, bool diffeo = false);

// --- per-torus data ---------------------------------------------------------

struct TorusSetup {
  KernelCode kernel;
  std::shared_ptr<const PeriodLattice> lat;
  std::vector<QMat> gen_lins;    // lowered generator matrices
  long n_actions = 0;            // good cocycles in standard form
  std::vector<Cocycle> classes;  // representatives of the good classes
};

TorusSetup make_setup(const CaseSpec& c, const KernelCode& kernel);

AffineAction build_action(const CaseSpec& c, const TorusSetup& s, const Cocycle& tau);

// all good cocycles in standard form: free parameters range over the fixed
// locus of the pinned generator, relators must evaluate to the identity and
// the resulting action must have isolated fixed points only
std::vector<Cocycle> enumerate_standard_cocycles(const CaseSpec& c, const TorusSetup& s,
                                                 long* n_candidates = nullptr);

// witness d with (lin_i - id) d == tau_i - tau'_i  mod Z^6 for all generators
std::optional<QVec> cohomologous(const Cocycle& tau, const Cocycle& tau2,
                                 const std::vector<QMat>& gen_lins);

// transport a cocycle along the torus map with coordinate matrix c6 (source
// coords -> destination coords): the new generator translations are
// c6 * tau(phi^{-1}(gen)) read off from the source action's element table;
// throws when c6 does not conjugate the source linear parts onto dst_gen_lins
Cocycle act_on_cocycle(const QMat& c6, const AffineAction& src,
                       const std::vector<QMat>& dst_gen_lins);

// --- classification ---------------------------------------------------------

struct MergeRecord {
  int torus_a, class_a, torus_b, class_b;
  SemilinearMap map;  // base-torus map realizing the merge
  QVec d;             // coboundary witness on the target torus
};

struct OrbitInfo {
  std::vector<std::pair<int, int>> members;  // (torus index, class index)
  int torus() const { return members.front().first; }
  int rep_class() const { return members.front().second; }
  std::vector<std::string> basket;
  std::string pi1, h0;
  Rat pg;
};

struct ClassificationReport {
  std::string case_name;
  KernelOrbits kernels;
  std::vector<TorusSetup> setups;          // one per kernel representative
  std::vector<OrbitInfo> biholo;           // orbits with invariants
  std::vector<std::vector<int>> diffeo;    // partition of biholo orbit indices
  std::vector<MergeRecord> merges;         // certified merges (both modes)
  long biholo_count() const { return (long)biholo.size(); }
  long diffeo_count() const { return (long)diffeo.size(); }
};

// full pipeline: kernels, censuses, classes, orbits in both modes, invariants
// (with a hard error when an invariant is not constant on an orbit)
ClassificationReport classify_case(const CaseSpec& c);

// orbit index of the standard-form cocycle tau on the admissible kernel k
// (transported to the orbit representative torus first); -1 when not found
int locate_orbit(const CaseSpec& c, const ClassificationReport& r,
                 const KernelCode& k, const Cocycle& tau);

// --- witnesses --------------------------------------------------------------

struct WitnessCheck {
  bool ok = false;
  bool holomorphic = false;
  bool antiholomorphic = false;
  QVec d;
  std::vector<int> phi;  // element map a -> b induced by conjugation
  std::string diagnostic;
};

// checks that z -> c(z) + d induces an equivalence between the two actions:
// the coordinate matrix must carry lattice onto lattice unimodularly,
// conjugation must map the source linear parts onto the target ones (this
// defines phi), and the translation parts must differ by the coboundary of d
// (d is solved for when absent)
WitnessCheck verify_witness(const AffineAction& a, const AffineAction& b,
                            const SemilinearMap& c, std::optional<QVec> d = {});

}  // namespace rtq
