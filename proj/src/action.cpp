#include <rtq/action.hpp>
#include <algorithm>
#include <numeric>
#include <sstream>

namespace rtq {

namespace {

std::string affine_key(const QMat& lin, const QVec& trans) {
  std::ostringstream os;
  for (const auto& x : lin.a) os << x.get_str() << ',';
  os << '|';
  for (const auto& x : trans) os << x.get_str() << ',';
  return os.str();
}

QVec reduce01(QVec v) {
  for (auto& x : v) x = frac(x);
  return v;
}

CycloMat cyclo_inv3(const CycloMat& m) {
  Cyclo det = cyclo_det3(m);
  Cyclo id = det.inverse();
  auto minor = [&](int i, int j) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
    return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
  };
  CycloMat out(3, CycloVec(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = minor(j, i) * id;
  return out;
}

}  // namespace

AffineAction::AffineAction(std::shared_ptr<const PeriodLattice> lat, Presentation pres,
                           std::vector<CycloMat> gen_mats, std::vector<QVec> gen_trans,
                           size_t bound)
    : lat_(std::move(lat)), pres_(std::move(pres)), gmats_(std::move(gen_mats)),
      gtrans_(std::move(gen_trans)) {
  size_t ng = gmats_.size();
  if (pres_.gens.size() != ng || gtrans_.size() != ng)
    throw std::invalid_argument("AffineAction: generator data mismatch");
  for (size_t i = 0; i < ng; ++i) {
    auto m = matrix_of(SemilinearMap::linear(gmats_[i]), *lat_, *lat_);
    if (!m) throw std::invalid_argument("AffineAction: generator outside rational span");
    gen_affine_.push_back({*m, reduce01(gtrans_[i])});
    auto inv = q_inverse(*m);
    if (!inv) throw std::invalid_argument("AffineAction: singular generator");
    QVec ti(6);
    QVec it = inv->apply(gen_affine_.back().second);
    for (int k = 0; k < 6; ++k) ti[k] = -it[k];
    gen_affine_inv_.push_back({*inv, reduce01(ti)});
  }
  // breadth-first closure
  GroupElement e{cyclo_identity(3), QMat::identity(6), QVec(6, Rat(0)), {}};
  elems_.push_back(e);
  index_[affine_key(e.lin, e.trans)] = 0;
  for (size_t head = 0; head < elems_.size(); ++head) {
    GroupElement cur = elems_[head];
    for (size_t g = 0; g < ng; ++g) {
      GroupElement nxt;
      nxt.m = cyclo_mul(cur.m, gmats_[g]);
      nxt.lin = cur.lin * gen_affine_[g].first;
      nxt.trans = reduce01(cur.lin.apply(gen_affine_[g].second));
      for (int k = 0; k < 6; ++k) nxt.trans[k] = frac(nxt.trans[k] + cur.trans[k]);
      nxt.word = cur.word;
      nxt.word.push_back((int)g + 1);
      std::string key = affine_key(nxt.lin, nxt.trans);
      if (index_.count(key)) continue;
      if (elems_.size() >= bound)
        throw std::runtime_error("AffineAction: closure bound exceeded");
      index_[key] = (int)elems_.size();
      elems_.push_back(std::move(nxt));
    }
  }
}

int AffineAction::compose_index(int i, int j) const {
  const auto& a = elems_[i];
  const auto& b = elems_[j];
  QMat lin = a.lin * b.lin;
  QVec t = a.lin.apply(b.trans);
  for (int k = 0; k < 6; ++k) t[k] = frac(t[k] + a.trans[k]);
  return index_of(lin, t);
}

int AffineAction::index_of(const QMat& lin, const QVec& trans) const {
  auto it = index_.find(affine_key(lin, reduce01(trans)));
  return it == index_.end() ? -1 : it->second;
}

int AffineAction::index_of_linear(const QMat& lin) const {
  for (size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].lin == lin) return (int)i;
  return -1;
}

long AffineAction::element_order(int i) const {
  long o = 1;
  int cur = i;
  while (cur != 0) {
    cur = compose_index(cur, i);
    ++o;
    if (o > (long)elems_.size()) throw std::logic_error("element_order: runaway");
  }
  return o;
}

int AffineAction::power_index(int i, long e) const {
  long o = element_order(i);
  e %= o;
  if (e < 0) e += o;
  int cur = 0;
  for (long k = 0; k < e; ++k) cur = compose_index(cur, i);
  return cur;
}

int AffineAction::inverse_index(int i) const { return power_index(i, element_order(i) - 1); }

RealTorusMap AffineAction::word_map(const Word& w) const {
  QMat lin = QMat::identity(6);
  QVec trans(6, Rat(0));
  for (int s : w) {
    const auto& [gm, gt] = s > 0 ? gen_affine_[s - 1] : gen_affine_inv_[-s - 1];
    QVec t = lin.apply(gt);
    for (int k = 0; k < 6; ++k) t[k] = frac(t[k] + trans[k]);
    lin = lin * gm;
    trans = t;
  }
  return {lin, trans};
}

Validation AffineAction::validate() const {
  Validation v;
  for (size_t i = 0; i < gmats_.size(); ++i) {
    if (!preserves_lattice(gen_affine_[i].first))
      v.fail("generator " + pres_.gens[i] + " does not preserve the lattice");
    if (!is_holomorphic(gen_affine_[i].first, *lat_, *lat_))
      v.fail("generator " + pres_.gens[i] + " is not holomorphic");
  }
  for (size_t r = 0; r < pres_.relators.size(); ++r) {
    RealTorusMap m = word_map(pres_.relators[r]);
    bool lin_ok = m.lin == QMat::identity(6);
    bool tr_ok = std::all_of(m.trans.begin(), m.trans.end(),
                             [](const Rat& x) { return frac(x) == 0; });
    if (!lin_ok || !tr_ok) v.fail("relator " + std::to_string(r) + " does not act as identity");
  }
  // faithful linear part: distinct elements never share a matrix
  for (size_t i = 0; i < elems_.size() && v.ok; ++i)
    for (size_t j = i + 1; j < elems_.size(); ++j)
      if (elems_[i].lin == elems_[j].lin) {
        v.fail("action contains a nontrivial translation (non-faithful linear part)");
        break;
      }
  return v;
}

std::pair<bool, std::vector<ElementStatus>> AffineAction::goodness() const {
  std::vector<ElementStatus> st(elems_.size());
  bool good = true;
  st[0] = {ElementKind::Identity, 0};
  for (size_t i = 1; i < elems_.size(); ++i) {
    const auto& e = elems_[i];
    bool has_ev1 = cyclo_det3([&] {
                     CycloMat d = e.m;
                     for (int k = 0; k < 3; ++k) d[k][k] = d[k][k] - Cyclo(Rat(1));
                     return d;
                   }()).is_zero();
    auto fx = fixed_locus(e.lin, e.trans);
    if (has_ev1) {
      if (fx.status == CongStatus::Empty) {
        st[i] = {ElementKind::Free, 0};
      } else {
        st[i] = {ElementKind::Bad, 0};
        good = false;
      }
    } else {
      if (fx.status != CongStatus::Finite)
        throw std::logic_error("goodness: expected finite fixed locus");
      // cross-check against the determinant formula
      Rat d6 = q_det(e.lin - QMat::identity(6));
      if (d6 < 0) d6 = -d6;
      if (!is_integer(d6) || rat_num(d6) != fx.count)
        throw std::logic_error("goodness: fixed count disagrees with det");
      st[i] = {ElementKind::Isolated, fx.count};
    }
  }
  return {good, st};
}

CharacterInvariants AffineAction::character_invariants() const {
  size_t n = elems_.size();
  Cyclo q1(Rat(0)), q2(Rat(0)), pg(Rat(0)), rig(Rat(0));
  for (size_t i = 0; i < n; ++i) {
    Cyclo chi = cyclo_trace(elems_[i].m);
    Cyclo c1 = chi.conj();
    Cyclo c2 = cyclo_trace(elems_[compose_index((int)i, (int)i)].m).conj();
    Cyclo c3 = cyclo_trace(elems_[power_index((int)i, 3)].m).conj();
    q1 = q1 + c1;
    q2 = q2 + (c1 * c1 - c2) * Cyclo(Rat(1, 2));
    pg = pg + (c1 * c1 * c1 - Cyclo(Rat(3)) * c1 * c2 + Cyclo(Rat(2)) * c3) * Cyclo(Rat(1, 6));
    rig = rig + chi * chi;
  }
  Rat sz((long)n);
  CharacterInvariants out;
  out.q1 = q1.as_rational() / sz;
  out.q2 = q2.as_rational() / sz;
  out.pg = pg.as_rational() / sz;
  out.rigid = rig.is_zero();
  return out;
}

std::vector<CycloMat> close_matrix_group(const std::vector<CycloMat>& gens, size_t bound) {
  std::vector<CycloMat> elems{cyclo_identity(3)};
  for (size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      CycloMat nxt = cyclo_mul(elems[head], g);
      bool known = false;
      for (const auto& e : elems)
        if (cyclo_mat_eq(e, nxt)) {
          known = true;
          break;
        }
      if (known) continue;
      if (elems.size() >= bound) throw std::runtime_error("close_matrix_group: bound exceeded");
      elems.push_back(std::move(nxt));
    }
  return elems;
}

namespace {

const std::vector<long> kAllowedOrders = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14};

bool order_allowed(long o) {
  return std::find(kAllowedOrders.begin(), kAllowedOrders.end(), o) != kAllowedOrders.end();
}

long matrix_order(const CycloMat& m, size_t bound = 600) {
  CycloMat p = m;
  long o = 1;
  while (!cyclo_mat_eq(p, cyclo_identity(3))) {
    p = cyclo_mul(p, m);
    ++o;
    if (o > (long)bound) throw std::runtime_error("matrix_order: runaway");
  }
  return o;
}

// integrality of the characteristic polynomial of m ⊕ conj(m)
bool charpoly_doubles_integral(const CycloMat& m) {
  auto p = cyclo_charpoly3(m);
  CycloMat mc = m;
  for (auto& row : mc)
    for (auto& e : row) e = e.conj();
  auto q = cyclo_charpoly3(mc);
  // product of the two cubics
  std::vector<Cyclo> prod(7, Cyclo(Rat(0)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) prod[i + j] = prod[i + j] + p[i] * q[j];
  for (const auto& c : prod) {
    if (!c.is_rational()) return false;
    if (!is_integer(c.as_rational())) return false;
  }
  return true;
}

bool has_eigenvalue_one(const CycloMat& m) {
  CycloMat d = m;
  for (int k = 0; k < 3; ++k) d[k][k] = d[k][k] - Cyclo(Rat(1));
  return cyclo_det3(d).is_zero();
}

}  // namespace

bool standard_conditions_reps(const std::vector<std::vector<CycloMat>>& reps,
                              size_t group_order) {
  for (const auto& gens : reps) {
    auto elems = close_matrix_group(gens);
    if (elems.size() != group_order) continue;  // not faithful
    bool ok = true;
    Cyclo rig(Rat(0));
    for (const auto& m : elems) {
      long o = matrix_order(m);
      if (!order_allowed(o)) {
        ok = false;
        break;
      }
      if (!charpoly_doubles_integral(m)) {
        ok = false;
        break;
      }
      bool ev1 = has_eigenvalue_one(m);
      if ((o == 5 || o == 8 || o == 10 || o == 12) && !ev1) {
        ok = false;
        break;
      }
      if ((o == 7 || o == 9 || o == 14) && ev1) {
        ok = false;
        break;
      }
      Cyclo chi = cyclo_trace(m);
      rig = rig + chi * chi;
    }
    if (ok && rig.is_zero()) return true;
  }
  return false;
}

bool standard_conditions_abelian(const std::vector<long>& invariants) {
  // elements of G = prod Z_{m_i} as exponent tuples; characters likewise;
  // everything runs on integer exponents modulo the group exponent N
  long n_inv = (long)invariants.size();
  long size = 1, expo = 1;
  for (long m : invariants) {
    size *= m;
    expo = std::lcm(expo, m);
  }
  long n = expo;  // eigenvalues live in mu_N
  // all group elements, their orders must be allowed regardless of rep
  std::vector<std::vector<long>> elems;
  {
    std::vector<long> cur(n_inv, 0);
    while (true) {
      elems.push_back(cur);
      long t = 0;
      for (; t < n_inv; ++t) {
        if (++cur[t] < invariants[t]) break;
        cur[t] = 0;
      }
      if (t == n_inv) break;
    }
  }
  for (const auto& a : elems) {
    long o = 1;
    for (long i = 0; i < n_inv; ++i) o = std::lcm(o, invariants[i] / std::gcd(invariants[i], a[i]));
    if (!order_allowed(o)) return false;
  }
  // character k: a -> zeta_N ^ (sum k_i a_i N/m_i); precompute exponents
  long nchars = size;
  std::vector<std::vector<long>> chi_exp(nchars, std::vector<long>(elems.size()));
  for (long c = 0; c < nchars; ++c) {
    // decode character index into a tuple
    std::vector<long> k(n_inv);
    long rem = c;
    for (long i = 0; i < n_inv; ++i) {
      k[i] = rem % invariants[i];
      rem /= invariants[i];
    }
    for (size_t e = 0; e < elems.size(); ++e) {
      long s = 0;
      for (long i = 0; i < n_inv; ++i) s = (s + k[i] * elems[e][i] % n * (n / invariants[i])) % n;
      chi_exp[c][e] = ((s % n) + n) % n;
    }
  }
  const auto& phi_n = cyclo_poly((int)n);
  long phi_deg = (long)phi_n.size() - 1;
  auto sum_is_zero = [&](const std::vector<long>& counts) {
    // reduce sum of counts[e] * zeta^e modulo Phi_N over the integers
    std::vector<Int> acc(n, 0);
    for (long e = 0; e < n; ++e) acc[e] = counts[e];
    for (long i = n - 1; i >= phi_deg; --i) {
      Int c = acc[i];
      if (c == 0) continue;
      for (long j = 0; j <= phi_deg; ++j) acc[i - phi_deg + j] -= c * phi_n[j];
    }
    for (long i = 0; i < phi_deg; ++i)
      if (acc[i] != 0) return false;
    return true;
  };
  for (long c1 = 0; c1 < nchars; ++c1)
    for (long c2 = c1; c2 < nchars; ++c2)
      for (long c3 = c2; c3 < nchars; ++c3) {
        bool ok = true;
        std::vector<long> rig_counts(n, 0);
        for (size_t e = 0; e < elems.size() && ok; ++e) {
          long e1 = chi_exp[c1][e], e2 = chi_exp[c2][e], e3 = chi_exp[c3][e];
          bool nontriv = false;
          for (long i = 0; i < n_inv; ++i)
            if (elems[e][i] != 0) nontriv = true;
          if (nontriv && e1 == 0 && e2 == 0 && e3 == 0) {
            ok = false;  // not faithful
            break;
          }
          // element order equals the matrix order under faithfulness
          long o = 1;
          for (long i = 0; i < n_inv; ++i)
            o = std::lcm(o, invariants[i] / std::gcd(invariants[i], elems[e][i]));
          bool ev1 = e1 == 0 || e2 == 0 || e3 == 0;
          if ((o == 5 || o == 8 || o == 10 || o == 12) && !ev1) ok = false;
          if ((o == 7 || o == 9 || o == 14) && ev1) ok = false;
          // integral characteristic polynomial of rho(g) + conj:
          // the multiset {±e1,±e2,±e3} must be Galois stable mod n
          if (ok) {
            std::array<long, 6> ms{e1, e2, e3, (n - e1) % n, (n - e2) % n, (n - e3) % n};
            std::sort(ms.begin(), ms.end());
            for (long k = 2; k < n && ok; ++k) {
              if (std::gcd(k, n) != 1) continue;
              std::array<long, 6> im;
              for (int t = 0; t < 6; ++t) im[t] = ms[t] * k % n;
              std::sort(im.begin(), im.end());
              if (im != ms) ok = false;
            }
          }
          // rigidity accumulator: chi(g)^2 exponents
          if (ok) {
            std::array<long, 3> ex{e1, e2, e3};
            for (int s = 0; s < 3; ++s)
              for (int t = 0; t < 3; ++t) ++rig_counts[(ex[s] + ex[t]) % n];
          }
        }
        if (ok && sum_is_zero(rig_counts)) return true;
      }
  return false;
}

}  // namespace rtq
