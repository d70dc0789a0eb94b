#include <rtq/singular.hpp>
#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rtq {

std::array<long, 3> normalize_weights(long d, std::array<long, 3> w) {
  std::array<long, 3> best{0, 0, 0};
  bool have = false;
  for (long k = 1; k < d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    std::array<long, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = (w[i] * k % d + d) % d;
    std::sort(c.begin(), c.end());
    if (!have || c < best) {
      best = c;
      have = true;
    }
  }
  return best;
}

CqsClass classify_cqs(long d, std::array<long, 3> weights) {
  for (long x : weights)
    if (x % d == 0 || std::gcd(x, d) != 1)
      throw std::invalid_argument("classify_cqs: weight shares a factor with the order");
  CqsClass out;
  bool cano = true, term = true;
  for (long k = 1; k < d; ++k) {
    // age of the k-th power; skip powers equal to the identity
    if (std::all_of(weights.begin(), weights.end(),
                    [&](long w) { return k * w % d == 0; }))
      continue;
    long num = 0;
    for (long w : weights) num += (k * w % d + d) % d;
    if (num < d) cano = false;
    if (num <= d) term = false;
  }
  out.canonical = cano;
  out.terminal = cano && term;
  long s = (weights[0] + weights[1] + weights[2]) % d;
  out.gorenstein = s == 0;
  if (!cano) return out;
  auto norm = normalize_weights(d, weights);
  std::ostringstream os;
  if (norm == std::array<long, 3>{1, 4, 7} && d == 9)
    os << "exceptional 1/9(1,4,7)";
  else if (norm == std::array<long, 3>{1, 9, 11} && d == 14)
    os << "exceptional 1/14(1,9,11)";
  else if (out.terminal)
    os << "terminal 1/" << d << "(1," << norm[1] << "," << norm[2] << ")";
  else
    os << "gorenstein 1/" << d << "(1," << norm[1] << "," << norm[2] << ")";
  out.morrison_label = os.str();
  return out;
}

namespace {

std::string pt_key(const QVec& v) {
  std::string s;
  for (const auto& x : v) {
    s += x.get_str();
    s += ',';
  }
  return s;
}

// multiplicity of zeta_d^j as an eigenvalue of m
int eigen_multiplicity(const CycloMat& m, long d, long j) {
  CycloMat s = m;
  Cyclo lam = Cyclo::zeta((int)d, j);
  for (int i = 0; i < 3; ++i) s[i][i] = s[i][i] - lam;
  return 3 - cyclo_rank(s);
}

std::array<long, 3> weights_of(const CycloMat& m, long d) {
  std::array<long, 3> w{};
  int filled = 0;
  for (long j = 0; j < d && filled < 3; ++j) {
    int mult = eigen_multiplicity(m, d, j);
    for (int t = 0; t < mult; ++t) {
      if (filled == 3) throw std::logic_error("weights_of: too many eigenvalues");
      w[filled++] = j;
    }
  }
  if (filled != 3) throw std::logic_error("weights_of: eigenvalue multiplicities do not sum to 3");
  return w;
}

}  // namespace

std::vector<SingularOrbit> singular_locus(const AffineAction& a) {
  auto [good, st] = a.goodness();
  if (!good) throw std::invalid_argument("singular_locus: action is not good");
  // all fixed points of all isolated elements
  std::set<QVec> pts;
  for (size_t i = 1; i < a.order(); ++i) {
    if (st[i].kind != ElementKind::Isolated) continue;
    auto fx = fixed_locus(a.elements()[i].lin, a.elements()[i].trans);
    pts.insert(fx.reps.begin(), fx.reps.end());
  }
  // group into orbits
  std::set<std::string> used;
  std::vector<SingularOrbit> orbits;
  for (const auto& p : pts) {
    if (used.count(pt_key(p))) continue;
    std::set<QVec> orbit;
    std::vector<int> stab;
    for (size_t i = 0; i < a.order(); ++i) {
      RealTorusMap f{a.elements()[i].lin, a.elements()[i].trans};
      QVec q = f.apply_pt(p);
      orbit.insert(q);
      if (q == p) stab.push_back((int)i);
    }
    for (const auto& q : orbit) used.insert(pt_key(q));
    SingularOrbit so;
    so.rep = p;
    so.stab_order = (long)stab.size();
    so.orbit_size = Int((long)a.order() / so.stab_order);
    if ((long)a.order() % so.stab_order != 0)
      throw std::logic_error("singular_locus: stabilizer order does not divide group order");
    // cyclic generator of the stabilizer
    int gen = -1;
    for (int i : stab)
      if (a.element_order(i) == so.stab_order) {
        gen = i;
        break;
      }
    if (gen < 0) throw std::runtime_error("singular_locus: non-cyclic stabilizer");
    auto w = weights_of(a.elements()[gen].m, so.stab_order);
    for (long x : w)
      if (x == 0) throw std::runtime_error("singular_locus: eigenvalue 1 at a fixed point");
    so.weights = normalize_weights(so.stab_order, w);
    orbits.push_back(std::move(so));
  }
  std::sort(orbits.begin(), orbits.end(), [](const SingularOrbit& x, const SingularOrbit& y) {
    if (x.stab_order != y.stab_order) return x.stab_order < y.stab_order;
    if (x.weights != y.weights) return x.weights < y.weights;
    return x.rep < y.rep;
  });
  return orbits;
}

std::vector<std::string> Basket::serialized() const {
  std::vector<std::string> out;
  for (const auto& [type, count] : types) {
    std::ostringstream os;
    os << type.first << "/(" << type.second[0] << "," << type.second[1] << ","
       << type.second[2] << ")x" << count;
    out.push_back(os.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rat Basket::riemann_roch_sum() const {
  // contributions of the non-Gorenstein types of the classification list
  Rat s(0);
  for (const auto& [type, count] : types) {
    auto [d, w] = type;
    if ((w[0] + w[1] + w[2]) % d == 0) continue;  // Gorenstein: no contribution
    Rat c;
    if (d == 2)
      c = Rat(1, 16);
    else if (d == 3)
      c = Rat(1, 9);
    else if (d == 4)
      c = Rat(5, 32);
    else if (d == 6)
      c = Rat(35, 144);
    else if (d == 9)
      c = Rat(1, 3);
    else if (d == 14)
      c = Rat(7, 16);
    else
      throw std::invalid_argument("riemann_roch_sum: unexpected type order");
    s += c * Rat(count);
  }
  return s;
}

Basket basket_of(const std::vector<SingularOrbit>& orbits) {
  Basket b;
  for (const auto& o : orbits) b.add(o.stab_order, o.weights);
  return b;
}

std::vector<std::array<long, 6>> riemann_roch_baskets() {
  std::vector<std::array<long, 6>> out;
  for (long n2 = 0; n2 <= 16; ++n2)
    for (long n3 = 0; n3 <= 9; ++n3)
      for (long n4 = 0; n4 <= 6; ++n4)
        for (long n6 = 0; n6 <= 4; ++n6)
          for (long n9 = 0; n9 <= 3; ++n9)
            for (long n14 = 0; n14 <= 2; ++n14) {
              Rat s = Rat(n2, 16) + Rat(n3, 9) + Rat(5 * n4, 32) + Rat(35 * n6, 144) +
                      Rat(n9, 3) + Rat(7 * n14, 16);
              s.canonicalize();
              if (s == 1) out.push_back({n2, n3, n4, n6, n9, n14});
            }
  return out;
}

LefschetzResult lefschetz_check(const AffineAction& a, int g) {
  const auto& e = a.elements()[g];
  long d = a.element_order(g);
  auto w = weights_of(e.m, d);
  for (long x : w)
    if (x == 0) throw std::invalid_argument("lefschetz_check: eigenvalue 1 present");
  LefschetzResult r;
  auto fx = fixed_locus(e.lin, e.trans);
  if (fx.status != CongStatus::Finite) throw std::logic_error("lefschetz_check: not finite");
  r.count_snf = fx.count;
  // formula: p^(6/phi(d)) when d = p^s and all eigenvalues primitive, else 1
  bool primitive = std::all_of(w.begin(), w.end(), [&](long x) { return std::gcd(x, d) == 1; });
  long p = 0;
  {
    long m = d;
    for (long q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        p = q;
        while (m % q == 0) m /= q;
        break;
      }
    if (p == 0) p = m;       // d prime
    else if (m != 1) p = 0;  // not a prime power
  }
  if (p != 0 && primitive) {
    long ex = 6 / euler_phi((int)d);
    Int f = 1;
    for (long i = 0; i < ex; ++i) f *= p;
    r.count_formula = f;
  } else {
    r.count_formula = 1;
  }
  r.agree = r.count_snf == r.count_formula;
  return r;
}

bool burnside_check(const AffineAction& a, long m) {
  auto [good, st] = a.goodness();
  if (!good) throw std::invalid_argument("burnside_check: action is not good");
  // hypothesis: no fixed-point element of order a proper multiple of m
  long s_m = 0;
  Int ell = -1;
  for (size_t i = 1; i < a.order(); ++i) {
    if (st[i].kind != ElementKind::Isolated) continue;
    long o = a.element_order((int)i);
    if (o != m && o % m == 0)
      throw std::invalid_argument("burnside_check: fixed-point element of order " +
                                  std::to_string(o) + ", a proper multiple of m");
    if (o == m) {
      ++s_m;
      if (ell < 0)
        ell = st[i].fixed_count;
      else if (ell != st[i].fixed_count)
        throw std::logic_error("burnside_check: unequal fixed counts at order m");
    }
  }
  if (s_m == 0) return false;
  auto orbits = singular_locus(a);
  long lhs_orbits = 0;
  for (const auto& o : orbits)
    if (o.stab_order == m) ++lhs_orbits;
  Rat lhs = Rat(lhs_orbits) * Rat((long)a.order()) / Rat(m);
  Rat rhs = Rat(ell) * Rat(s_m) / Rat(euler_phi((int)m));
  return lhs == rhs;
}

Pi1Result fundamental_group(const AffineAction& a) {
  auto [good, st] = a.goodness();
  if (!good) throw std::invalid_argument("fundamental_group: action is not good");
  Pi1Result r;
  // subgroup generated by the elements with fixed points
  std::set<int> gfix;
  std::vector<int> queue;
  gfix.insert(0);
  queue.push_back(0);
  std::vector<int> gens;
  for (size_t i = 1; i < a.order(); ++i)
    if (st[i].kind == ElementKind::Isolated) gens.push_back((int)i);
  for (size_t head = 0; head < queue.size(); ++head)
    for (int g : gens) {
      int n = a.compose_index(queue[head], g);
      if (gfix.insert(n).second) queue.push_back(n);
    }
  r.gfix.assign(gfix.begin(), gfix.end());
  // shortcut: some fixed-point element has no eigenvalue 1 -- the generators
  // themselves qualify (isolated means no eigenvalue 1)
  r.shortcut = !gens.empty();
  if (!r.shortcut) return r;
  long q = (long)a.order() / (long)gfix.size();
  r.quotient_order = q;
  // coset orders
  auto coset_order = [&](int i) {
    long o = 1;
    int cur = i;
    while (!gfix.count(cur)) {
      cur = a.compose_index(cur, i);
      ++o;
    }
    return o;
  };
  if (q == 1) {
    r.descriptor = "1";
  } else {
    long maxo = 1;
    for (size_t i = 0; i < a.order(); ++i) maxo = std::max(maxo, coset_order((int)i));
    if (maxo == q) {
      r.descriptor = "Z" + std::to_string(q);
    } else {
      // abelian-invariant style descriptor for small elementary cases
      bool abelian = true;
      for (size_t i = 0; i < a.order() && abelian; ++i)
        for (size_t j = i + 1; j < a.order() && abelian; ++j) {
          int ij = a.compose_index((int)i, (int)j);
          int ji = a.compose_index((int)j, (int)i);
          int d = a.compose_index(ij, a.inverse_index(ji));
          if (!gfix.count(d)) abelian = false;
        }
      if (abelian && q == maxo * maxo)
        r.descriptor = "Z" + std::to_string(maxo) + "^2";
      else
        r.descriptor = "order " + std::to_string(q) + (abelian ? " abelian" : " nonabelian");
    }
  }
  r.cover = "T/G_fix with |G_fix| = " + std::to_string(gfix.size());
  return r;
}

}  // namespace rtq
