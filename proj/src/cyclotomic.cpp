#include <rtq/cyclotomic.hpp>
#include <algorithm>
#include <numeric>
#include <sstream>

namespace rtq {

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

// divide a by monic b in Z[x], returns quotient (exact division expected
// for cyclotomic factors of x^n - 1)
std::vector<Int> poly_divide_exact(std::vector<Int> a, const std::vector<Int>& b) {
  int db = (int)b.size() - 1;
  std::vector<Int> q(a.size() - db, 0);
  for (int i = (int)a.size() - 1; i >= db; --i) {
    Int c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (auto& c : a)
    if (c != 0) throw std::runtime_error("poly_divide_exact: not divisible");
  return q;
}

std::map<int, std::vector<Int>>& cyclo_cache() {
  static std::map<int, std::vector<Int>> cache;
  return cache;
}

}  // namespace

const std::vector<Int>& cyclo_poly(int n) {
  auto& cache = cyclo_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // x^n - 1 divided by all Phi_d, d | n, d < n
  std::vector<Int> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclo_poly(d));
  return cache.emplace(n, std::move(p)).first->second;
}

namespace {

// reduce rational polynomial modulo Phi_n, producing phi(n) coefficients
std::vector<Rat> reduce_mod_phi(std::vector<Rat> a, int n) {
  const auto& phi = cyclo_poly(n);
  int d = (int)phi.size() - 1;
  for (int i = (int)a.size() - 1; i >= d; --i) {
    Rat c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= d; ++j) a[i - d + j] -= c * Rat(phi[j]);
  }
  a.resize(d, Rat(0));
  return a;
}

// representation of zeta_n^k (0 <= k < n) in the power basis
const std::vector<Rat>& zeta_power(int n, int k) {
  static std::map<std::pair<int, int>, std::vector<Rat>> cache;
  auto key = std::make_pair(n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Rat> a(k + 1, Rat(0));
  a[k] = 1;
  return cache.emplace(key, reduce_mod_phi(std::move(a), n)).first->second;
}

// extended Euclid in Q[x]: returns (g, s) with s*a = g mod m, g = gcd(a, m)
std::pair<std::vector<Rat>, std::vector<Rat>> poly_half_xgcd(std::vector<Rat> a,
                                                            std::vector<Rat> m) {
  auto deg = [](const std::vector<Rat>& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  std::vector<Rat> r0 = std::move(m), r1 = std::move(a);
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
  while (deg(r1) >= 0) {
    int d0 = deg(r0), d1 = deg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(s0, s1);
      continue;
    }
    // r0 -= (lead) x^{d0-d1} r1
    Rat c = r0[d0] / r1[d1];
    int sh = d0 - d1;
    for (int j = 0; j <= d1; ++j) r0[j + sh] -= c * r1[j];
    if (s0.size() < s1.size() + sh) s0.resize(s1.size() + sh, Rat(0));
    for (size_t j = 0; j < s1.size(); ++j) s0[j + sh] -= c * s1[j];
  }
  return {r0, s0};
}

}  // namespace

Cyclo::Cyclo(int n, std::vector<Rat> coeffs) : n_(n), c_(std::move(coeffs)) {
  if ((int)c_.size() != euler_phi(n)) throw std::invalid_argument("Cyclo: bad coeff length");
}

Cyclo Cyclo::zeta(int n, long k) {
  k %= n;
  if (k < 0) k += n;
  return Cyclo(n, zeta_power(n, (int)k));
}

bool Cyclo::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::as_rational() const {
  if (!is_rational()) throw std::runtime_error("Cyclo: not rational: " + str());
  return c_[0];
}

Cyclo Cyclo::embedded(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("Cyclo::embedded: conductor mismatch");
  int phi_m = euler_phi(m);
  std::vector<Rat> out(phi_m, Rat(0));
  int step = m / n_;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& zp = zeta_power(m, (int)(i * step) % m);
    for (size_t j = 0; j < zp.size(); ++j) out[j] += c_[i] * zp[j];
  }
  return Cyclo(m, std::move(out));
}

Cyclo Cyclo::operator-() const {
  std::vector<Rat> out(c_);
  for (auto& r : out) r = -r;
  return Cyclo(n_, std::move(out));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  int m = std::lcm(n_, o.n_);
  Cyclo a = embedded(m), b = o.embedded(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  int m = std::lcm(n_, o.n_);
  Cyclo a = embedded(m), b = o.embedded(m);
  std::vector<Rat> prod(a.c_.size() + b.c_.size(), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return Cyclo(m, reduce_mod_phi(std::move(prod), m));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::runtime_error("Cyclo: division by zero");
  const auto& phi = cyclo_poly(n_);
  std::vector<Rat> m(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) m[i] = Rat(phi[i]);
  auto [g, s] = poly_half_xgcd(c_, m);
  // g must be a nonzero constant (Phi_n irreducible)
  Rat g0;
  bool found = false;
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] != 0) {
      if (found || i > 0) throw std::runtime_error("Cyclo::inverse: gcd not constant");
      g0 = g[i];
      found = true;
    }
  }
  if (!found) throw std::runtime_error("Cyclo::inverse: zero gcd");
  for (auto& r : s) r /= g0;
  return Cyclo(n_, reduce_mod_phi(std::move(s), n_));
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo r(Rat(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Cyclo Cyclo::galois(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  if (n_ == 1) return *this;
  if (std::gcd((long)n_, k) != 1) throw std::invalid_argument("Cyclo::galois: k not coprime");
  std::vector<Rat> out(c_.size(), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& zp = zeta_power(n_, (int)((i * k) % n_));
    for (size_t j = 0; j < zp.size(); ++j) out[j] += c_[i] * zp[j];
  }
  return Cyclo(n_, std::move(out));
}

bool Cyclo::operator==(const Cyclo& o) const {
  int m = std::lcm(n_, o.n_);
  return embedded(m).c_ == o.embedded(m).c_;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i].get_str();
    if (i > 0) os << "*z" << n_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycloMat cyclo_identity(int dim) {
  CycloMat m(dim, CycloVec(dim, Cyclo(Rat(0))));
  for (int i = 0; i < dim; ++i) m[i][i] = Cyclo(Rat(1));
  return m;
}

CycloMat cyclo_mul(const CycloMat& a, const CycloMat& b) {
  size_t r = a.size(), k = b.size(), c = b[0].size();
  CycloMat out(r, CycloVec(c, Cyclo(Rat(0))));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (size_t l = 0; l < c; ++l)
        if (!b[j][l].is_zero()) out[i][l] = out[i][l] + a[i][j] * b[j][l];
    }
  return out;
}

CycloVec cyclo_apply(const CycloMat& a, const CycloVec& v) {
  CycloVec out(a.size(), Cyclo(Rat(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] = out[i] + a[i][j] * v[j];
  return out;
}

Cyclo cyclo_trace(const CycloMat& a) {
  Cyclo t(Rat(0));
  for (size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
  return t;
}

Cyclo cyclo_det3(const CycloMat& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

bool cyclo_mat_eq(const CycloMat& a, const CycloMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

std::vector<Cyclo> cyclo_charpoly3(const CycloMat& a) {
  Cyclo tr = cyclo_trace(a);
  Cyclo det = cyclo_det3(a);
  // second elementary symmetric function = sum of principal 2x2 minors
  Cyclo s2 = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) +
             (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
             (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
  return {-det, s2, -tr, Cyclo(Rat(1))};
}

int cyclo_rank(CycloMat a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t piv = rows;
    for (size_t i = pr; i < rows; ++i)
      if (!a[i][pc].is_zero()) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[pr], a[piv]);
    Cyclo inv = a[pr][pc].inverse();
    for (size_t j = pc; j < cols; ++j) a[pr][j] = a[pr][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr || a[i][pc].is_zero()) continue;
      Cyclo f = a[i][pc];
      for (size_t j = pc; j < cols; ++j) a[i][j] = a[i][j] - f * a[pr][j];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

}  // namespace rtq
