#include <rtq/classify.hpp>
#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rtq {

namespace {

Cyclo tpoint() {
  return (Cyclo(Rat(1)) + Cyclo(Rat(2)) * Cyclo::zeta(3)) * Cyclo(Rat(1, 3));
}

std::string qvec_key(const QVec& v) {
  std::string s;
  for (const auto& x : v) {
    s += rat_str(x);
    s += ',';
  }
  return s;
}

std::string qmat_key(const QMat& m) { return qvec_key(m.a); }

// reduction Z[zeta_3] -> Z_3 sending zeta_3 to 1 (valid on the t-points:
// u * t == reduce(u) * t for integral u)
int reduce_mod3(const Cyclo& u) {
  Cyclo e = u.conductor() == 1 ? u : u.embedded(3);
  Int s = 0;
  for (const auto& c : e.coeffs()) {
    if (!is_integer(c)) throw std::logic_error("reduce_mod3: non-integral entry");
    s += rat_num(c);
  }
  s %= 3;
  if (s < 0) s += 3;
  return (int)s.get_si();
}

// action of a semilinear map on the t-points, as a matrix over Z_3
std::array<std::array<int, 3>, 3> t_matrix(const SemilinearMap& f) {
  std::array<std::array<int, 3>, 3> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int v = reduce_mod3(f.m[i][j]);
      if (f.conj[j]) v = (3 - v) % 3;  // conj t = -t
      r[i][j] = v;
    }
  return r;
}

KernelCode apply_t_matrix(const std::array<std::array<int, 3>, 3>& r, const KernelCode& k) {
  KernelCode out;
  for (const auto& v : k) {
    std::array<int, 3> w{};
    for (int i = 0; i < 3; ++i)
      w[i] = (r[i][0] * v[0] + r[i][1] * v[1] + r[i][2] * v[2]) % 3;
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycloVec zero3() { return CycloVec(3, Cyclo(Rat(0))); }

CycloMat cyclo_inverse3(const CycloMat& m) {
  Cyclo det = cyclo_det3(m);
  if (det.is_zero()) throw std::invalid_argument("cyclo_inverse3: singular");
  Cyclo dinv = det.inverse();
  CycloMat adj(3, CycloVec(3, Cyclo(Rat(0))));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // cofactor with the cyclic index trick keeping signs positive
      adj[j][i] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) * dinv;
    }
  return adj;
}

SemilinearMap semilinear_inverse(const SemilinearMap& f) {
  if (f.is_linear()) {
    SemilinearMap g = SemilinearMap::linear(cyclo_inverse3(f.m));
    return g;
  }
  // monomial case: row i holds its single entry at column p(i)
  std::array<int, 3> p{-1, -1, -1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!f.m[i][j].is_zero()) {
        if (p[i] >= 0) throw std::invalid_argument("semilinear_inverse: not monomial");
        p[i] = j;
      }
  SemilinearMap g = SemilinearMap::linear(CycloMat(3, CycloVec(3, Cyclo(Rat(0)))));
  for (int j = 0; j < 3; ++j) {
    int i = -1;  // i = p^{-1}(j)
    for (int k = 0; k < 3; ++k)
      if (p[k] == j) i = k;
    if (i < 0) throw std::invalid_argument("semilinear_inverse: not monomial");
    Cyclo e = f.m[i][j].inverse();
    g.m[j][i] = f.conj[j] ? e.conj() : e;
    g.conj[i] = f.conj[p[i]];
  }
  return g;
}

// affine evaluation of a relator word over generator pairs; true when the
// result is the identity modulo Z^6
bool relator_holds(const Word& w, const std::vector<QMat>& lins, const std::vector<QVec>& trans) {
  size_t n = lins.empty() ? 0 : lins[0].rows;
  QMat l = QMat::identity(n);
  QVec v(n, Rat(0));
  for (int g : w) {
    size_t i = (size_t)(g > 0 ? g : -g) - 1;
    QMat gl = lins[i];
    QVec gt = trans[i];
    if (g < 0) {
      auto inv = q_inverse(lins[i]);
      gl = *inv;
      QVec it = inv->apply(gt);
      for (auto& x : it) x = -x;
      gt = std::move(it);
    }
    // compose: (l, v) after (gl, gt)... accumulate left to right: w = g1 g2 ...
    // maintained pair is the product of the prefix
    QVec nv = l.apply(gt);
    for (size_t k = 0; k < n; ++k) nv[k] += v[k];
    l = l * gl;
    v = std::move(nv);
  }
  if (!(l == QMat::identity(n))) return false;
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return frac(x) == 0; });
}

std::vector<SemilinearMap> monomial_pool(bool with_conj) {
  std::vector<Cyclo> units;
  for (int s = 0; s < 2; ++s)
    for (int j = 0; j < 3; ++j) {
      Cyclo u = Cyclo::zeta(3, j);
      units.push_back(s ? -u : u);
    }
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<SemilinearMap> out;
  for (const auto& p : perms)
    for (const auto& u0 : units)
      for (const auto& u1 : units)
        for (const auto& u2 : units)
          for (int f = 0; f < (with_conj ? 8 : 1); ++f) {
            SemilinearMap c = SemilinearMap::linear(CycloMat(3, zero3()));
            c.m[0][p[0]] = u0;
            c.m[1][p[1]] = u1;
            c.m[2][p[2]] = u2;
            c.conj = {(f & 1) != 0, (f & 2) != 0, (f & 4) != 0};
            out.push_back(std::move(c));
          }
  return out;
}

// closure of the lowered generator matrices under multiplication
std::set<std::string> linear_image(const std::vector<QMat>& gens) {
  std::set<std::string> seen;
  std::vector<QMat> frontier{QMat::identity(gens.empty() ? 0 : gens[0].rows)};
  seen.insert(qmat_key(frontier[0]));
  while (!frontier.empty()) {
    std::vector<QMat> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        QMat p = g * m;
        if (seen.insert(qmat_key(p)).second) next.push_back(std::move(p));
      }
    frontier = std::move(next);
    if (seen.size() > 4096) throw std::runtime_error("linear_image: runaway closure");
  }
  return seen;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(size_t n) : up(n) {
    for (size_t i = 0; i < n; ++i) up[i] = (int)i;
  }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::string h0_descriptor(const FiniteSubgroup& h) {
  std::map<Int, int> mult;
  for (const auto& d : h.divisors) ++mult[d];
  if (mult.empty()) return "1";
  std::string s;
  for (const auto& [d, e] : mult) {
    if (!s.empty()) s += " x ";
    s += "Z" + d.get_str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Cocycle::key() const {
  std::string s;
  for (const auto& v : t) {
    s += qvec_key(v);
    s += ';';
  }
  return s;
}

std::string kernel_str(const KernelCode& k) {
  if (k.size() <= 1) return "{0}";
  // a small generating set: greedily extend by points outside the span
  std::vector<std::array<int, 3>> gens;
  std::set<std::array<int, 3>> span{{0, 0, 0}};
  for (const auto& v : k) {
    if (span.count(v)) continue;
    gens.push_back(v);
    std::set<std::array<int, 3>> next;
    for (const auto& a : span)
      for (int c = 0; c < 3; ++c)
        next.insert({(a[0] + c * v[0]) % 3, (a[1] + c * v[1]) % 3, (a[2] + c * v[2]) % 3});
    span = std::move(next);
  }
  auto coord = [](int x) { return x == 0 ? "0" : (x == 1 ? "t" : "-t"); };
  std::string s = "<";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::string(coord(gens[i][0])) + "," + coord(gens[i][1]) + "," +
         coord(gens[i][2]) + ")";
  }
  return s + ">";
}

std::vector<SemilinearMap> normalizer(const CaseSpec& c, bool diffeo) {
  if (c.free_gens.empty()) return {SemilinearMap::linear(cyclo_identity(3))};
  if (!c.monomial_normalizer) {
    std::vector<SemilinearMap> out = c.catalog;
    if (diffeo) out.insert(out.end(), c.diffeo_extra.begin(), c.diffeo_extra.end());
    return out;
  }
  std::vector<QMat> gen6;
  for (const auto& g : c.gen_mats) {
    auto m = matrix_of(SemilinearMap::linear(g), *c.base, *c.base);
    gen6.push_back(*m);
  }
  std::set<std::string> image = linear_image(gen6);
  std::vector<SemilinearMap> out;
  for (auto& cand : monomial_pool(diffeo)) {
    auto c6 = matrix_of(cand, *c.base, *c.base);
    if (!c6 || !preserves_lattice(*c6)) continue;
    auto inv = q_inverse(*c6);
    bool ok = true;
    for (const auto& g : gen6)
      if (!image.count(qmat_key(*c6 * g * *inv))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(cand));
  }
  return out;
}

int KernelOrbits::index_of(const KernelCode& k) const {
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i].code == k) return (int)i;
  return -1;
}

KernelOrbits kernel_orbits(const CaseSpec& c, bool diffeo) {
  KernelOrbits out;
  if (!c.uses_kernels) {
    KernelInfo k;
    k.code = {{0, 0, 0}};
    k.rep = 0;
    k.witness = SemilinearMap::linear(cyclo_identity(3));
    out.all.push_back(std::move(k));
    out.reps = {0};
    return out;
  }
  // all subgroups of the t-points, as sorted element lists
  std::set<KernelCode> subs;
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int d = 0; d < 3; ++d) pts.push_back({a, b, d});
  for (const auto& v : pts)
    for (const auto& w : pts) {
      std::set<std::array<int, 3>> span;
      for (int s = 0; s < 3; ++s)
        for (int r = 0; r < 3; ++r)
          span.insert({(s * v[0] + r * w[0]) % 3, (s * v[1] + r * w[1]) % 3,
                       (s * v[2] + r * w[2]) % 3});
      subs.insert(KernelCode(span.begin(), span.end()));
    }
  subs.insert(KernelCode{{0, 0, 0}});
  // admissibility: invariant under every generator, no forbidden supports
  std::vector<std::array<std::array<int, 3>, 3>> gen_t;
  for (const auto& g : c.gen_mats) gen_t.push_back(t_matrix(SemilinearMap::linear(g)));
  std::vector<KernelCode> admissible;
  for (const auto& k : subs) {
    bool ok = true;
    for (const auto& r : gen_t)
      if (apply_t_matrix(r, k) != k) ok = false;
    for (const auto& v : k) {
      if (v == std::array<int, 3>{0, 0, 0}) continue;
      std::vector<int> supp;
      for (int i = 0; i < 3; ++i)
        if (v[i] != 0) supp.push_back(i);
      for (const auto& f : c.forbidden_supports)
        if (supp == f) ok = false;
    }
    if (ok) admissible.push_back(k);
  }
  std::sort(admissible.begin(), admissible.end(),
            [](const KernelCode& a, const KernelCode& b) {
              return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
            });
  auto pool = normalizer(c, diffeo);
  std::vector<std::pair<std::array<std::array<int, 3>, 3>, const SemilinearMap*>> moves;
  for (const auto& p : pool) moves.push_back({t_matrix(p), &p});
  out.all.resize(admissible.size());
  for (size_t i = 0; i < admissible.size(); ++i) out.all[i].code = admissible[i];
  auto idx = [&](const KernelCode& k) {
    for (size_t i = 0; i < admissible.size(); ++i)
      if (admissible[i] == k) return (int)i;
    return -1;
  };
  for (size_t i = 0; i < out.all.size(); ++i) {
    if (out.all[i].rep >= 0) continue;
    out.reps.push_back((int)i);
    out.all[i].rep = (int)i;
    out.all[i].witness = SemilinearMap::linear(cyclo_identity(3));
    // breadth-first orbit; each discovered kernel stores a map onto the rep
    std::vector<int> frontier{(int)i};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int cur : frontier)
        for (const auto& [r, p] : moves) {
          int j = idx(apply_t_matrix(r, out.all[cur].code));
          if (j < 0 || out.all[j].rep >= 0) continue;
          out.all[j].rep = (int)i;
          out.all[j].witness = out.all[cur].witness.after(semilinear_inverse(*p));
          next.push_back(j);
        }
      frontier = std::move(next);
    }
  }
  return out;
}

TorusSetup make_setup(const CaseSpec& c, const KernelCode& kernel) {
  TorusSetup s;
  s.kernel = kernel;
  std::vector<CycloVec> gens;
  Cyclo t = tpoint();
  for (const auto& v : kernel) {
    if (v == std::array<int, 3>{0, 0, 0}) continue;
    gens.push_back({Cyclo(Rat(v[0])) * t, Cyclo(Rat(v[1])) * t, Cyclo(Rat(v[2])) * t});
  }
  if (gens.empty()) {
    s.lat = std::make_shared<PeriodLattice>(*c.base);
  } else {
    s.lat = make_quotient_lattice(*c.base, gens).lattice;
  }
  for (const auto& g : c.gen_mats) {
    auto m = matrix_of(SemilinearMap::linear(g), *s.lat, *s.lat);
    if (!m || !preserves_lattice(*m))
      throw std::logic_error("make_setup: generator does not preserve the lattice");
    s.gen_lins.push_back(*m);
  }
  return s;
}

AffineAction build_action(const CaseSpec& c, const TorusSetup& s, const Cocycle& tau) {
  return AffineAction(s.lat, c.pres, c.gen_mats, tau.t);
}

std::vector<Cocycle> enumerate_standard_cocycles(const CaseSpec& c, const TorusSetup& s,
                                                 long* n_candidates) {
  size_t ng = c.gen_mats.size();
  std::vector<QVec> domain{QVec(6, Rat(0))};
  if (!c.free_gens.empty()) {
    CongSolution fix = fixed_locus(s.gen_lins[c.pinned], QVec(6, Rat(0)));
    if (fix.status != CongStatus::Finite)
      throw std::logic_error("enumerate_standard_cocycles: pinned fixed locus not finite");
    domain = fix.reps;
  }
  std::vector<Cocycle> good;
  long candidates = 0;
  std::vector<size_t> pick(c.free_gens.size(), 0);
  bool done = false;
  std::set<std::string> seen;
  while (!done) {
    Cocycle tau;
    tau.t.assign(ng, QVec(6, Rat(0)));
    for (size_t i = 0; i < c.free_gens.size(); ++i) tau.t[c.free_gens[i]] = domain[pick[i]];
    bool well = true;
    for (const auto& r : c.pres.relators)
      if (!relator_holds(r, s.gen_lins, tau.t)) {
        well = false;
        break;
      }
    if (well) {
      ++candidates;
      AffineAction a = build_action(c, s, tau);
      if (a.order() == 0 || !a.validate().ok)
        throw std::logic_error("enumerate_standard_cocycles: relator check disagrees");
      if (a.goodness().first && seen.insert(tau.key()).second) good.push_back(std::move(tau));
    }
    // odometer over the free-generator picks
    done = true;
    for (size_t i = 0; i < pick.size(); ++i) {
      if (++pick[i] < domain.size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (pick.empty()) break;
  }
  if (n_candidates) *n_candidates = candidates;
  return good;
}

std::optional<QVec> cohomologous(const Cocycle& tau, const Cocycle& tau2,
                                 const std::vector<QMat>& gen_lins) {
  size_t ng = gen_lins.size();
  IMat a(6 * ng, 6);
  QVec b(6 * ng, Rat(0));
  for (size_t r = 0; r < ng; ++r) {
    QMat block = gen_lins[r] - QMat::identity(6);
    auto bi = to_imat(block);
    if (!bi) throw std::invalid_argument("cohomologous: non-integral generator matrix");
    for (size_t i = 0; i < 6; ++i) {
      for (size_t j = 0; j < 6; ++j) a(6 * r + i, j) = (*bi)(i, j);
      b[6 * r + i] = tau.t[r][i] - tau2.t[r][i];
    }
  }
  CongSolution sol = solve_congruence(a, b, false);
  if (sol.status == CongStatus::Empty) return std::nullopt;
  QVec d = sol.particular;
  for (auto& x : d) x = frac(x);
  return d;
}

Cocycle act_on_cocycle(const QMat& c6, const AffineAction& src,
                       const std::vector<QMat>& dst_gen_lins) {
  auto inv = q_inverse(c6);
  if (!inv) throw std::invalid_argument("act_on_cocycle: singular matrix");
  Cocycle out;
  for (const auto& l : dst_gen_lins) {
    QMat m = *inv * l * c6;  // linear part of phi^{-1}(generator)
    int e = src.index_of_linear(m);
    if (e < 0) throw std::runtime_error("act_on_cocycle: map does not normalize the group");
    QVec v = c6.apply(src.elements()[e].trans);
    for (auto& x : v) x = frac(x);
    out.t.push_back(std::move(v));
  }
  return out;
}

namespace {

struct OrbitContext {
  const CaseSpec& spec;
  const KernelOrbits& kernels;
  const std::vector<TorusSetup>& setups;
  std::vector<std::vector<AffineAction>> actions;  // per setup, per class
  std::map<int, int> rep_to_setup;                 // kernel index -> setup index

  // class of an arbitrary (possibly non-standard) cocycle on setup js
  std::map<std::string, std::pair<int, QVec>> memo;
  std::pair<int, QVec> find_class(int js, const Cocycle& tau) {
    std::string k = std::to_string(js) + "|" + tau.key();
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    std::pair<int, QVec> res{-1, {}};
    for (size_t c2 = 0; c2 < setups[js].classes.size(); ++c2) {
      auto d = cohomologous(tau, setups[js].classes[c2], setups[js].gen_lins);
      if (d) {
        res = {(int)c2, *d};
        break;
      }
    }
    memo[k] = res;
    return res;
  }
};

void run_orbits(OrbitContext& ctx, const std::vector<SemilinearMap>& pool, UnionFind& uf,
                std::vector<MergeRecord>* merges,
                const std::vector<int>& node_base) {
  for (size_t i = 0; i < ctx.setups.size(); ++i) {
    if (ctx.setups[i].classes.empty()) continue;
    for (const auto& c : pool) {
      KernelCode kimg = apply_t_matrix(t_matrix(c), ctx.setups[i].kernel);
      int j_all = ctx.kernels.index_of(kimg);
      if (j_all < 0) throw std::logic_error("orbit: image kernel not admissible");
      const KernelInfo& info = ctx.kernels.all[j_all];
      SemilinearMap d = info.witness.after(c);
      int js = ctx.rep_to_setup.at(info.rep);
      auto c6 = matrix_of(d, *ctx.setups[i].lat, *ctx.setups[js].lat);
      if (!c6 || !preserves_lattice(*c6))
        throw std::logic_error("orbit: transport is not a lattice isomorphism");
      for (size_t cls = 0; cls < ctx.setups[i].classes.size(); ++cls) {
        Cocycle moved = act_on_cocycle(*c6, ctx.actions[i][cls], ctx.setups[js].gen_lins);
        auto [c2, wd] = ctx.find_class(js, moved);
        if (c2 < 0) throw std::logic_error("orbit: transported class missing from census");
        int na = node_base[i] + (int)cls, nb = node_base[js] + c2;
        if (uf.unite(na, nb) && merges)
          merges->push_back({(int)i, (int)cls, js, c2, d, wd});
      }
    }
  }
}

}  // namespace

ClassificationReport classify_case(const CaseSpec& c) {
  ClassificationReport rep;
  rep.case_name = c.name;
  rep.kernels = kernel_orbits(c, false);
  OrbitContext ctx{c, rep.kernels, rep.setups, {}, {}, {}};
  for (size_t r = 0; r < rep.kernels.reps.size(); ++r) {
    int ki = rep.kernels.reps[r];
    TorusSetup s = make_setup(c, rep.kernels.all[ki].code);
    std::vector<Cocycle> good = enumerate_standard_cocycles(c, s);
    s.n_actions = (long)good.size();
    // plain cohomology classes among the good cocycles
    std::vector<int> cls(good.size(), -1);
    for (size_t i = 0; i < good.size(); ++i) {
      for (size_t j = 0; j < i && cls[i] < 0; ++j)
        if (cls[j] == (int)j && cohomologous(good[i], good[j], s.gen_lins)) cls[i] = (int)j;
      if (cls[i] < 0) cls[i] = (int)i;
    }
    for (size_t i = 0; i < good.size(); ++i)
      if (cls[i] == (int)i) s.classes.push_back(good[i]);
    rep.setups.push_back(std::move(s));
    ctx.rep_to_setup[ki] = (int)r;
  }
  std::vector<int> node_base;
  int n_nodes = 0;
  for (const auto& s : rep.setups) {
    node_base.push_back(n_nodes);
    n_nodes += (int)s.classes.size();
  }
  for (const auto& s : rep.setups) {
    std::vector<AffineAction> acts;
    for (const auto& tau : s.classes) acts.push_back(build_action(c, s, tau));
    ctx.actions.push_back(std::move(acts));
  }

  UnionFind biholo(n_nodes);
  run_orbits(ctx, normalizer(c, false), biholo, &rep.merges, node_base);
  UnionFind diffeo(n_nodes);
  run_orbits(ctx, normalizer(c, true), diffeo, &rep.merges, node_base);

  std::map<int, int> root_to_orbit;
  for (size_t i = 0; i < rep.setups.size(); ++i)
    for (size_t cls = 0; cls < rep.setups[i].classes.size(); ++cls) {
      int root = biholo.find(node_base[i] + (int)cls);
      auto it = root_to_orbit.find(root);
      if (it == root_to_orbit.end()) {
        root_to_orbit[root] = (int)rep.biholo.size();
        rep.biholo.push_back({});
      }
      rep.biholo[root_to_orbit[root]].members.push_back({(int)i, (int)cls});
    }

  // per-orbit invariants, constant across every member
  for (auto& orbit : rep.biholo) {
    bool first = true;
    for (auto [i, cls] : orbit.members) {
      const AffineAction& a = ctx.actions[i][cls];
      Basket bk = basket_of(singular_locus(a));
      Pi1Result p = fundamental_group(a);
      std::vector<QMat> lins;
      for (const auto& e : a.elements()) lins.push_back(e.lin);
      std::string h0 = h0_descriptor(invariant_subgroup(lins));
      Rat pg = a.character_invariants().pg;
      if (first) {
        orbit.basket = bk.serialized();
        orbit.pi1 = p.descriptor;
        orbit.h0 = h0;
        orbit.pg = pg;
        first = false;
      } else if (orbit.basket != bk.serialized() || orbit.pi1 != p.descriptor ||
                 orbit.h0 != h0 || orbit.pg != pg) {
        throw std::logic_error("classify_case: invariant not constant on an orbit");
      }
    }
  }

  std::map<int, std::vector<int>> droots;
  for (size_t o = 0; o < rep.biholo.size(); ++o) {
    auto [i, cls] = rep.biholo[o].members.front();
    droots[diffeo.find(node_base[i] + (int)cls)].push_back((int)o);
  }
  for (auto& [root, group] : droots) rep.diffeo.push_back(group);
  return rep;
}

int locate_orbit(const CaseSpec& c, const ClassificationReport& r,
                 const KernelCode& k, const Cocycle& tau) {
  int j_all = r.kernels.index_of(k);
  if (j_all < 0) return -1;
  const KernelInfo& info = r.kernels.all[j_all];
  auto it = std::find(r.kernels.reps.begin(), r.kernels.reps.end(), info.rep);
  int js = (int)(it - r.kernels.reps.begin());
  TorusSetup own = make_setup(c, k);
  AffineAction a = build_action(c, own, tau);
  auto c6 = matrix_of(info.witness, *own.lat, *r.setups[js].lat);
  if (!c6) return -1;
  Cocycle moved = act_on_cocycle(*c6, a, r.setups[js].gen_lins);
  int cls = -1;
  for (size_t c2 = 0; c2 < r.setups[js].classes.size(); ++c2)
    if (cohomologous(moved, r.setups[js].classes[c2], r.setups[js].gen_lins)) {
      cls = (int)c2;
      break;
    }
  if (cls < 0) return -1;
  for (size_t o = 0; o < r.biholo.size(); ++o)
    for (auto [i, cc] : r.biholo[o].members)
      if (i == js && cc == cls) return (int)o;
  return -1;
}

WitnessCheck verify_witness(const AffineAction& a, const AffineAction& b,
                            const SemilinearMap& c, std::optional<QVec> d) {
  WitnessCheck out;
  auto c6 = matrix_of(c, a.lattice(), b.lattice());
  if (!c6) {
    out.diagnostic = "map does not respect the rational spans";
    return out;
  }
  if (!preserves_lattice(*c6)) {
    out.diagnostic = "map does not carry lattice onto lattice";
    return out;
  }
  if (a.order() != b.order()) {
    out.diagnostic = "group orders differ";
    return out;
  }
  auto inv = q_inverse(*c6);
  size_t n = a.order();
  out.phi.assign(n, -1);
  std::vector<bool> hit(n, false);
  for (size_t e = 0; e < n; ++e) {
    int j = b.index_of_linear(*c6 * a.elements()[e].lin * *inv);
    if (j < 0 || hit[j]) {
      out.diagnostic = "conjugation does not induce a group isomorphism";
      return out;
    }
    out.phi[e] = j;
    hit[j] = true;
  }
  // translation parts: (lin_b(phi e) - id) d == c6 trans_a(e) - trans_b(phi e)
  IMat stack(6 * n, 6);
  QVec rhs(6 * n, Rat(0));
  for (size_t e = 0; e < n; ++e) {
    const auto& eb = b.elements()[out.phi[e]];
    QMat block = eb.lin - QMat::identity(6);
    auto bi = to_imat(block);
    QVec r = c6->apply(a.elements()[e].trans);
    for (size_t i = 0; i < 6; ++i) {
      for (size_t j = 0; j < 6; ++j) stack(6 * e + i, j) = (*bi)(i, j);
      rhs[6 * e + i] = r[i] - eb.trans[i];
    }
  }
  if (d) {
    QVec got = to_qmat(stack).apply(*d);
    for (size_t i = 0; i < rhs.size(); ++i)
      if (frac(got[i] - rhs[i]) != 0) {
        out.diagnostic = "supplied coboundary witness fails";
        return out;
      }
    out.d = *d;
  } else {
    CongSolution sol = solve_congruence(stack, rhs, false);
    if (sol.status == CongStatus::Empty) {
      out.diagnostic = "no coboundary witness exists";
      return out;
    }
    out.d = sol.particular;
    for (auto& x : out.d) x = frac(x);
  }
  out.ok = true;
  out.holomorphic = is_holomorphic(*c6, a.lattice(), b.lattice());
  out.antiholomorphic = is_antiholomorphic(*c6, a.lattice(), b.lattice());
  return out;
}

}  // namespace rtq
