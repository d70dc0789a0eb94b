#pragma once
// Finite groups acting holomorphically on a torus by affine maps.
//
// A group element is identified with its affine map modulo the lattice:
// the closure is built by breadth-first multiplication and two words are the
// same element exactly when their (matrix, translation) pairs agree.

#include <rtq/lattice.hpp>
#include <map>

namespace rtq {

using Word = std::vector<int>;  // 1-based generator indices, negative = inverse

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;
};

struct GroupElement {
  CycloMat m;   // exact 3x3 linear part
  QMat lin;     // 6x6 coordinate matrix on the lattice
  QVec trans;   // translation in lattice coordinates, entries in [0,1)
  Word word;    // one witness word
};

enum class ElementKind { Identity, Free, Isolated, Bad };

struct ElementStatus {
  ElementKind kind;
  Int fixed_count = 0;
};

struct Validation {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

struct CharacterInvariants {
  Rat q1, q2, pg;
  bool rigid = false;
};

class AffineAction {
 public:
  // gen_trans are translations in lattice coordinates
  AffineAction(std::shared_ptr<const PeriodLattice> lat, Presentation pres,
               std::vector<CycloMat> gen_mats, std::vector<QVec> gen_trans,
               size_t bound = 512);

  const PeriodLattice& lattice() const { return *lat_; }
  std::shared_ptr<const PeriodLattice> lattice_ptr() const { return lat_; }
  const Presentation& presentation() const { return pres_; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  size_t order() const { return elems_.size(); }
  const QVec& gen_trans(size_t i) const { return gtrans_[i]; }
  const CycloMat& gen_mat(size_t i) const { return gmats_[i]; }

  int compose_index(int i, int j) const;  // elements[i] after elements[j]
  int index_of(const QMat& lin, const QVec& trans) const;  // -1 if absent
  int index_of_linear(const QMat& lin) const;  // unique by faithfulness; -1 if absent
  long element_order(int i) const;
  int power_index(int i, long e) const;
  int inverse_index(int i) const;

  Validation validate() const;
  std::pair<bool, std::vector<ElementStatus>> goodness() const;
  CharacterInvariants character_invariants() const;

  // evaluate a word in the generators as an affine torus map
  RealTorusMap word_map(const Word& w) const;

 private:
  std::shared_ptr<const PeriodLattice> lat_;
  Presentation pres_;
  std::vector<CycloMat> gmats_;
  std::vector<QVec> gtrans_;
  std::vector<GroupElement> elems_;
  std::map<std::string, int> index_;
  std::vector<std::pair<QMat, QVec>> gen_affine_, gen_affine_inv_;
};

// closure of a matrix group given by generators (no lattice involved)
std::vector<CycloMat> close_matrix_group(const std::vector<CycloMat>& gens,
                                         size_t bound = 512);

// the standard conditions on a finite group: element orders in
// {1,...,10,12,14} and existence of a faithful rigid 3-dimensional
// representation with integral characteristic polynomials and the
// eigenvalue-1 constraints by element order
bool standard_conditions_abelian(const std::vector<long>& invariants);
bool standard_conditions_reps(const std::vector<std::vector<CycloMat>>& reps,
                              size_t group_order);

}  // namespace rtq
