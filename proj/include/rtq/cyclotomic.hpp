#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element is a rational coefficient vector of length phi(n) with respect
// to the power basis 1, z, ..., z^{phi(n)-1}, reduced modulo the n-th
// cyclotomic polynomial.  Mixed conductors are handled by embedding into the
// field of conductor lcm(n,m) via zeta_m = zeta_N^{N/m}.

#include <rtq/rational.hpp>
#include <map>
#include <optional>

namespace rtq {

// cyclotomic polynomial Phi_n as dense integer coefficient vector, low first
const std::vector<Int>& cyclo_poly(int n);

int euler_phi(int n);

class Cyclo {
 public:
  Cyclo() : n_(1), c_(1, Rat(0)) {}
  explicit Cyclo(const Rat& r) : n_(1), c_(1, r) {}
  explicit Cyclo(long v) : n_(1), c_(1, Rat(v)) {}
  Cyclo(int n, std::vector<Rat> coeffs);  // coeffs length phi(n)

  static Cyclo zeta(int n, long k = 1);  // zeta_n^k

  int conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat as_rational() const;  // throws if not rational

  Cyclo embedded(int m) const;  // into Q(zeta_m), requires n_ | m

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo inverse() const;  // throws on zero
  Cyclo pow(long e) const;

  // Galois substitution zeta -> zeta^k, gcd(k, n) = 1
  Cyclo galois(long k) const;
  Cyclo conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int n_;
  std::vector<Rat> c_;
};

inline Cyclo operator*(const Rat& r, const Cyclo& a) { return Cyclo(r) * a; }

using CycloVec = std::vector<Cyclo>;
using CycloMat = std::vector<std::vector<Cyclo>>;  // row major

CycloMat cyclo_identity(int dim);
CycloMat cyclo_mul(const CycloMat& a, const CycloMat& b);
CycloVec cyclo_apply(const CycloMat& a, const CycloVec& v);
Cyclo cyclo_trace(const CycloMat& a);
Cyclo cyclo_det3(const CycloMat& a);
bool cyclo_mat_eq(const CycloMat& a, const CycloMat& b);

// characteristic polynomial of a 3x3 matrix: x^3 - tr x^2 + s2 x - det,
// returned as coefficients {c0, c1, c2, c3}, low degree first
std::vector<Cyclo> cyclo_charpoly3(const CycloMat& a);

// rank over the field, Gaussian elimination with exact inverses
int cyclo_rank(CycloMat a);

}  // namespace rtq
