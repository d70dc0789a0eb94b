#include <rtq/toric.hpp>
#include <rtq/singular.hpp>
#include <algorithm>
#include <numeric>

namespace rtq {

namespace {

QMat mat_from_cols(const QVec3& a, const QVec3& b, const QVec3& c) {
  QMat m(3, 3);
  for (int i = 0; i < 3; ++i) {
    m(i, 0) = a[i];
    m(i, 1) = b[i];
    m(i, 2) = c[i];
  }
  return m;
}

Rat dot(const QVec3& a, const QVec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

QLattice::QLattice(QVec3 q) : q_(std::move(q)) {
  // Z-basis from the Hermite form of the rows {e1,e2,e3,q} scaled integral
  Int den = 1;
  for (const auto& x : q_) den = lcm(den, rat_den(x));
  IMat rows(4, 3);
  for (int i = 0; i < 3; ++i) rows(i, i) = den;
  for (int j = 0; j < 3; ++j) rows(3, j) = rat_num(q_[j] * Rat(den));
  IMat h = hermite_row_basis(rows);
  if (h.rows != 3) throw std::invalid_argument("QLattice: degenerate");
  basis_ = QMat(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) basis_(j, i) = Rat(h(i, j)) / Rat(den);
  auto inv = q_inverse(basis_);
  if (!inv) throw std::logic_error("QLattice: singular basis");
  inv_ = *inv;
}

Rat QLattice::covolume() const {
  Rat d = q_det(basis_);
  return d < 0 ? -d : d;
}

bool QLattice::contains(const QVec3& v) const {
  QVec x = inv_.apply({v[0], v[1], v[2]});
  return std::all_of(x.begin(), x.end(), [](const Rat& r) { return is_integer(r); });
}

bool QLattice::dual_contains(const QVec3& x) const {
  for (const auto& c : x)
    if (!is_integer(c)) return false;
  return is_integer(dot(x, q_));
}

QVec3 QLattice::primitive(const QVec3& v) const {
  QVec w = inv_.apply({v[0], v[1], v[2]});
  // minimal s > 0 with s*w integral and content 1
  Int den = 1;
  for (const auto& x : w) den = lcm(den, rat_den(x));
  Int g = 0;
  for (const auto& x : w) g = gcd(g, rat_num(x * Rat(den)));
  if (g == 0) throw std::invalid_argument("QLattice::primitive: zero vector");
  Rat s = Rat(den) / Rat(g);
  if (s < 0) s = -s;
  return {v[0] * s, v[1] * s, v[2] * s};
}

ConeType cone_type(const Fan& fan, int cone_idx) {
  const auto& c = fan.cones[cone_idx];
  const QVec3 &u0 = fan.rays[c[0]], &u1 = fan.rays[c[1]], &u2 = fan.rays[c[2]];
  QMat b = mat_from_cols(u0, u1, u2);
  if (q_det(b) == 0) throw std::invalid_argument("cone_type: non-simplicial cone");
  // generator coordinates of the u-span inside the lattice
  auto binv = q_inverse(fan.lattice.basis());
  QMat cm = *binv * b;
  auto ci = to_imat(cm);
  if (!ci) throw std::invalid_argument("cone_type: ray outside the lattice");
  SmithForm s = smith_form(*ci);
  ConeType out;
  int nontrivial = -1;
  Int m = 1;
  for (int i = 0; i < 3; ++i) {
    if (s.d(i, i) > 1) {
      if (nontrivial >= 0) throw std::runtime_error("cone_type: non-cyclic quotient");
      nontrivial = i;
      m = s.d(i, i);
    }
  }
  out.index = m;
  if (m == 1) return out;
  // generator of the quotient: lattice point with U-coordinates e_nontrivial
  auto uinv = q_inverse(to_qmat(s.u));
  QVec e(3, Rat(0));
  e[nontrivial] = 1;
  QVec x = uinv->apply(e);                   // in lattice-basis coordinates
  QVec g = fan.lattice.basis().apply(x);     // ambient coordinates
  // weights: g = sum (w_j / m) u_j
  auto w = q_solve(b, g);
  if (!w) throw std::logic_error("cone_type: generator outside the cone span");
  std::array<long, 3> weights{};
  for (int j = 0; j < 3; ++j) {
    Rat wj = (*w)[j] * Rat(m);
    if (!is_integer(wj)) throw std::logic_error("cone_type: non-integral weight");
    Int v = rat_num(wj) % m;
    if (v < 0) v += m;
    weights[j] = v.get_si();
  }
  out.weights = normalize_weights(m.get_si(), weights);
  return out;
}

bool is_crepant_subdivision(const Fan& fan) {
  for (const auto& r : fan.rays) {
    bool basis_vec = false;
    for (int i = 0; i < 3; ++i)
      if (r[i] == 1 && r[(i + 1) % 3] == 0 && r[(i + 2) % 3] == 0) basis_vec = true;
    if (basis_vec) continue;
    if (r[0] + r[1] + r[2] != 1) return false;
  }
  return true;
}

CartierData cartier_data(const Divisor& a, const Fan& fan) {
  CartierData out;
  std::vector<QVec3> ms;
  for (const auto& c : fan.cones) {
    QMat b(3, 3);
    QVec rhs(3);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) b(i, j) = fan.rays[c[i]][j];
      rhs[i] = -a[c[i]];
    }
    auto m = q_solve(b, rhs);
    if (!m) throw std::runtime_error("cartier_data: inconsistent system");
    ms.push_back({(*m)[0], (*m)[1], (*m)[2]});
  }
  // minimal ell with ell*m integral on the dual lattice for every cone
  Int ell = 1;
  for (const auto& m : ms) {
    Int k = 1;
    for (const auto& x : m) k = lcm(k, rat_den(x));
    k = lcm(k, rat_den(dot(m, fan.lattice.q())));
    ell = lcm(ell, k);
  }
  out.ell = ell;
  for (const auto& m : ms)
    out.m.push_back({m[0] * Rat(ell), m[1] * Rat(ell), m[2] * Rat(ell)});
  return out;
}

bool is_basepoint_free(const Divisor& a, const Fan& fan) {
  CartierData cd = cartier_data(a, fan);
  for (const auto& m : cd.m)
    for (size_t r = 0; r < fan.rays.size(); ++r)
      if (dot(m, fan.rays[r]) < -Rat(cd.ell) * a[r]) return false;
  return true;
}

bool pushforward_sections_equal(int i, const Fan& fan) {
  // coarse constraints <x, e_j> >= -delta_ij; one violated added-ray
  // constraint at a time, tightened to <= -1 by integrality
  std::vector<int> added;
  for (size_t r = 0; r < fan.rays.size(); ++r) {
    const auto& v = fan.rays[r];
    bool basis_vec = (v == QVec3{1, 0, 0}) || (v == QVec3{0, 1, 0}) || (v == QVec3{0, 0, 1});
    if (!basis_vec) added.push_back((int)r);
  }
  for (int r : added)
    if (!fan.lattice.contains(fan.rays[r]))
      throw std::invalid_argument("pushforward_sections_equal: tightening unjustified, "
                                  "added ray outside the lattice");
  for (int r : added) {
    IneqSystem sys;
    sys.dim = 3;
    for (int j = 0; j < 3; ++j) {
      QVec row(3, Rat(0));
      row[j] = 1;
      sys.ge(row, Rat(j == i - 1 ? -1 : 0));
    }
    const auto& v = fan.rays[r];
    sys.le({v[0], v[1], v[2]}, Rat(-1));
    if (fm_feasible(sys)) return false;
  }
  return true;
}

bool h1_vanishes(const Divisor& a, const Fan& fan) {
  size_t n = fan.rays.size();
  if (n > 16) throw std::invalid_argument("h1_vanishes: too many rays");
  // adjacency: rays sharing a maximal cone span a common 2-face
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& c : fan.cones)
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t)
        if (s != t) adj[c[s]][c[t]] = true;
  for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
    // connectivity of the induced subgraph
    std::vector<int> members;
    for (size_t r = 0; r < n; ++r)
      if (mask & (size_t(1) << r)) members.push_back((int)r);
    if (members.size() <= 1) continue;  // connected by convention
    std::vector<bool> seen(members.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    size_t cnt = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < members.size(); ++j)
        if (!seen[j] && adj[members[cur]][members[j]]) {
          seen[j] = true;
          ++cnt;
          stack.push_back((int)j);
        }
    }
    if (cnt == members.size()) continue;  // connected pattern is fine
    // disconnected support pattern: must be infeasible
    IneqSystem sys;
    sys.dim = 3;
    for (size_t r = 0; r < n; ++r) {
      const auto& u = fan.rays[r];
      if (!fan.lattice.contains(u))
        throw std::invalid_argument("h1_vanishes: ray outside the lattice");
      if (mask & (size_t(1) << r))
        sys.le({u[0], u[1], u[2]}, -a[r] - 1);  // strict, tightened
      else
        sys.ge({u[0], u[1], u[2]}, -a[r]);
    }
    if (fm_feasible(sys)) return false;
  }
  return true;
}

TerminalizeResult terminalize(long d, std::array<long, 3> weights) {
  Fan fan{QLattice({Rat(weights[0], d), Rat(weights[1], d), Rat(weights[2], d)}), {}, {}};
  auto key = std::make_pair(d, weights);
  if (key == std::make_pair(9L, std::array<long, 3>{1, 4, 7}) ||
      key == std::make_pair(3L, std::array<long, 3>{1, 1, 1})) {
    fan.rays = {{Rat(1), Rat(0), Rat(0)},
                {Rat(0), Rat(1), Rat(0)},
                {Rat(0), Rat(0), Rat(1)},
                {Rat(1, 3), Rat(1, 3), Rat(1, 3)}};
    fan.cones = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  } else if (key == std::make_pair(14L, std::array<long, 3>{1, 9, 11}) ||
             key == std::make_pair(7L, std::array<long, 3>{1, 2, 4})) {
    fan.rays = {{Rat(1), Rat(0), Rat(0)},
                {Rat(0), Rat(1), Rat(0)},
                {Rat(0), Rat(0), Rat(1)},
                {Rat(1, 7), Rat(2, 7), Rat(4, 7)},
                {Rat(4, 7), Rat(1, 7), Rat(2, 7)},
                {Rat(2, 7), Rat(4, 7), Rat(1, 7)}};
    fan.cones = {{3, 4, 5}, {0, 4, 5}, {1, 5, 3}, {2, 3, 4}, {0, 1, 5}, {1, 2, 3}, {2, 0, 4}};
  } else {
    throw std::invalid_argument("terminalize: unsupported type");
  }
  for (const auto& r : fan.rays)
    if (!fan.lattice.contains(r)) throw std::logic_error("terminalize: ray outside lattice");
  TerminalizeResult out;
  out.fan = fan;
  out.crepant = is_crepant_subdivision(fan);
  out.all_terminal = true;
  for (size_t c = 0; c < fan.cones.size(); ++c) {
    ConeType t = cone_type(out.fan, (int)c);
    if (t.index > 1) {
      auto cls = classify_cqs(t.index.get_si(), t.weights);
      if (!cls.terminal) out.all_terminal = false;
    }
    out.types.push_back(t);
  }
  return out;
}

}  // namespace rtq
