#include <rtq/catalog.hpp>
#include <json.hpp>
#include <cctype>
#include <fstream>
#include <set>

namespace rtq {

namespace {

using nlohmann::json;

Cyclo zero_c() { return Cyclo(Rat(0)); }

CycloMat diag3(const Cyclo& a, const Cyclo& b, const Cyclo& c) {
  CycloMat m(3, CycloVec(3, zero_c()));
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

Word pw(int g, int e) { return Word((size_t)e, g); }

Word inv_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& g : out) g = -g;
  return out;
}

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word comm(const Word& a, const Word& b) { return cat({a, b, inv_word(a), inv_word(b)}); }

std::shared_ptr<const PeriodLattice> product_base() {
  static auto p = std::make_shared<const PeriodLattice>(PeriodLattice::product_zeta3());
  return p;
}

SemilinearMap lin_map(std::initializer_list<std::initializer_list<const char*>> rows) {
  CycloMat m;
  for (const auto& r : rows) {
    CycloVec row;
    for (const char* e : r) row.push_back(parse_cyclo(3, e));
    m.push_back(std::move(row));
  }
  return SemilinearMap::linear(std::move(m));
}

SemilinearMap full_conj() {
  SemilinearMap c = SemilinearMap::linear(cyclo_identity(3));
  c.conj = {true, true, true};
  return c;
}

std::string data_file() { return std::string(RTQ_DATA_DIR) + "/golden_tables.json"; }

KernelCode span_of(const std::vector<std::array<int, 3>>& gens) {
  std::set<std::array<int, 3>> span{{0, 0, 0}};
  for (const auto& v : gens) {
    std::set<std::array<int, 3>> next;
    for (const auto& a : span)
      for (int c = 0; c < 3; ++c)
        next.insert({(a[0] + c * v[0]) % 3, (a[1] + c * v[1]) % 3, (a[2] + c * v[2]) % 3});
    span = std::move(next);
  }
  return KernelCode(span.begin(), span.end());
}

GoldenRow parse_row(const json& j) {
  GoldenRow r;
  r.name = j.at("name");
  r.case_name = j.at("case");
  std::vector<std::array<int, 3>> kgens;
  for (const auto& g : j.at("kernel"))
    kgens.push_back({g.at(0).get<int>(), g.at(1).get<int>(), g.at(2).get<int>()});
  r.kernel = span_of(kgens);
  const CaseSpec* c = case_by_name(r.case_name);
  if (!c) throw std::runtime_error("golden row references unknown case " + r.case_name);
  int n = c->base->conductor();
  for (const auto& t : j.at("trans")) {
    CycloVec v;
    for (const auto& e : t) v.push_back(parse_cyclo(n, e.get<std::string>()));
    r.gen_trans.push_back(std::move(v));
  }
  for (const auto& b : j.at("basket")) r.basket.push_back(b.get<std::string>());
  r.pi1 = j.at("pi1");
  r.pg = j.at("pg");
  return r;
}

}  // namespace

Cyclo parse_cyclo(int n, const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace((unsigned char)ch)) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("parse_cyclo: empty input");
  Cyclo out = zero_c();
  size_t i = 0;
  auto read_int = [&]() {
    size_t j = i;
    while (j < t.size() && std::isdigit((unsigned char)t[j])) ++j;
    Int v(t.substr(i, j - i));
    i = j;
    return v;
  };
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      if (t[i] == '-') sign = -1;
      ++i;
    }
    Int num = 1, den = 1;
    bool have_num = false, zpart = false;
    long k = 1;
    if (i < t.size() && std::isdigit((unsigned char)t[i])) {
      num = read_int();
      have_num = true;
    }
    if (i < t.size() && t[i] == '*') ++i;
    if (i < t.size() && t[i] == 'z') {
      zpart = true;
      ++i;
      if (i < t.size() && t[i] == '^') {
        ++i;
        k = read_int().get_si();
      }
    }
    if (i < t.size() && t[i] == '/') {
      ++i;
      den = read_int();
    }
    if (!have_num && !zpart) throw std::invalid_argument("parse_cyclo: bad term in " + s);
    Rat q(num, den);
    q.canonicalize();
    if (sign < 0) q = -q;
    out = out + (zpart ? Cyclo(q) * Cyclo::zeta(n, k) : Cyclo(q));
  }
  return out;
}

CaseSpec case_z9() {
  CaseSpec c;
  c.name = "z9";
  c.pres = {{"g"}, {pw(1, 9)}};
  c.gen_mats = {diag3(Cyclo::zeta(9), Cyclo::zeta(9, 4), Cyclo::zeta(9, 7))};
  c.pinned = 0;
  c.base = std::make_shared<const PeriodLattice>(PeriodLattice::cm_embedding(9, {1, 4, 7}));
  return c;
}

CaseSpec case_z14() {
  CaseSpec c;
  c.name = "z14";
  c.pres = {{"g"}, {pw(1, 14)}};
  c.gen_mats = {diag3(Cyclo::zeta(14), Cyclo::zeta(14, 9), Cyclo::zeta(14, 11))};
  c.pinned = 0;
  c.base = std::make_shared<const PeriodLattice>(PeriodLattice::cm_embedding(14, {1, 9, 11}));
  return c;
}

CaseSpec case_z3cube() {
  CaseSpec c;
  c.name = "z3cube";
  Cyclo z = Cyclo::zeta(3), one(Rat(1));
  c.pres = {{"h", "g", "k"},
            {pw(1, 3), pw(2, 3), pw(3, 3), comm({1}, {2}), comm({1}, {3}), comm({2}, {3})}};
  c.gen_mats = {diag3(one, z * z, z), diag3(z, one, one), diag3(z, z, z)};
  c.pinned = 2;
  c.free_gens = {0, 1};
  c.base = product_base();
  c.uses_kernels = true;
  c.forbidden_supports = {{0}, {1}, {2}};
  return c;
}

CaseSpec case_z3sq_rho1() {
  CaseSpec c;
  c.name = "z3sq-rho1";
  Cyclo z = Cyclo::zeta(3), one(Rat(1));
  c.pres = {{"h", "k"}, {pw(1, 3), pw(2, 3), comm({1}, {2})}};
  c.gen_mats = {diag3(one, z * z, z * z), diag3(z, z, z * z)};
  c.pinned = 1;
  c.free_gens = {0};
  c.base = product_base();
  c.uses_kernels = true;
  c.forbidden_supports = {{0}, {1}, {2}};
  return c;
}

CaseSpec case_z3sq_rho2() {
  CaseSpec c;
  c.name = "z3sq-rho2";
  Cyclo z = Cyclo::zeta(3), one(Rat(1));
  c.pres = {{"h", "k"}, {pw(1, 3), pw(2, 3), comm({1}, {2})}};
  c.gen_mats = {diag3(z, z, one), diag3(z, z, z)};
  c.pinned = 1;
  c.free_gens = {0};
  c.base = product_base();
  c.uses_kernels = true;
  c.forbidden_supports = {{2}, {0}, {1}, {0, 1}};
  c.monomial_normalizer = false;
  // generators of the block normalizer GL_2(Z[zeta_3]) x units, plus the
  // coordinate swap of the repeated-character block
  c.catalog = {
      lin_map({{"1", "1", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}),
      lin_map({{"1", "z", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}),
      lin_map({{"1", "0", "0"}, {"1", "1", "0"}, {"0", "0", "1"}}),
      lin_map({{"1", "0", "0"}, {"z", "1", "0"}, {"0", "0", "1"}}),
      lin_map({{"0", "1", "0"}, {"1", "0", "0"}, {"0", "0", "1"}}),
      lin_map({{"z", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}),
      lin_map({{"1", "0", "0"}, {"0", "z", "0"}, {"0", "0", "1"}}),
      lin_map({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "z"}}),
      lin_map({{"-1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}),
      lin_map({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "-1"}}),
      lin_map({{"-1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "-1"}}),
  };
  c.diffeo_extra = {full_conj()};
  return c;
}

CaseSpec case_z9_semidirect() {
  CaseSpec c;
  c.name = "z9sd";
  Cyclo z = Cyclo::zeta(3), one(Rat(1));
  c.pres = {{"h", "g"}, {pw(1, 3), pw(2, 9), cat({{1}, {2}, {-1}, inv_word(pw(2, 4))})}};
  CycloMat g(3, CycloVec(3, zero_c()));
  g[0][1] = one;
  g[1][2] = one;
  g[2][0] = z;
  c.gen_mats = {diag3(z, one, z * z), g};
  c.pinned = 1;
  c.free_gens = {0};
  c.base = product_base();
  c.uses_kernels = true;
  c.forbidden_supports = {{0}, {1}, {2}};
  return c;
}

CaseSpec case_z3_cy() {
  CaseSpec c;
  c.name = "z3-cy";
  Cyclo z = Cyclo::zeta(3);
  c.pres = {{"k"}, {pw(1, 3)}};
  c.gen_mats = {diag3(z, z, z)};
  c.pinned = 0;
  c.base = product_base();
  return c;
}

CaseSpec case_z7_cy() {
  CaseSpec c;
  c.name = "z7-cy";
  c.pres = {{"g"}, {pw(1, 7)}};
  c.gen_mats = {diag3(Cyclo::zeta(7), Cyclo::zeta(7, 2), Cyclo::zeta(7, 4))};
  c.pinned = 0;
  c.base = std::make_shared<const PeriodLattice>(PeriodLattice::cm_embedding(7, {1, 2, 4}));
  return c;
}

CaseSpec case_z3sq_cy() {
  CaseSpec c;
  c.name = "z3sq-cy";
  Cyclo z = Cyclo::zeta(3), one(Rat(1));
  c.pres = {{"h", "k"}, {pw(1, 3), pw(2, 3), comm({1}, {2})}};
  c.gen_mats = {diag3(one, z * z, z), diag3(z, z, z)};
  c.pinned = 1;
  c.free_gens = {0};
  c.base = product_base();
  c.uses_kernels = true;
  c.forbidden_supports = {{0}, {1}, {2}};
  return c;
}

CaseSpec case_he3_cy() {
  CaseSpec c;
  c.name = "he3-cy";
  Cyclo z = Cyclo::zeta(3), one(Rat(1));
  Word cm = comm({1}, {2});
  c.pres = {{"g", "h"},
            {pw(1, 3), pw(2, 3), cat({cm, cm, cm}), comm(cm, {1}), comm(cm, {2})}};
  CycloMat g(3, CycloVec(3, zero_c()));
  g[0][2] = one;
  g[1][0] = one;
  g[2][1] = one;
  c.gen_mats = {g, diag3(one, z * z, z)};
  c.pinned = 0;
  c.base = product_base();
  return c;
}

std::vector<CaseSpec> pg0_cases() {
  return {case_z9(),        case_z14(),      case_z3sq_rho1(),
          case_z3sq_rho2(), case_z3cube(),   case_z9_semidirect()};
}

const CaseSpec* case_by_name(const std::string& name) {
  static const std::vector<CaseSpec> all = [] {
    std::vector<CaseSpec> v = pg0_cases();
    v.push_back(case_z3_cy());
    v.push_back(case_z7_cy());
    v.push_back(case_z3sq_cy());
    v.push_back(case_he3_cy());
    return v;
  }();
  for (const auto& c : all)
    if (c.name == name) return &c;
  return nullptr;
}

GoldenData load_golden() {
  std::ifstream in(data_file());
  if (!in) throw std::runtime_error("cannot open " + data_file());
  json j = json::parse(in);
  GoldenData g;
  for (const auto& r : j.at("table1")) g.table1.push_back(parse_row(r));
  for (const auto& r : j.at("table2")) g.table2.push_back(parse_row(r));
  for (const auto& w : j.at("witnesses")) {
    GoldenWitness gw;
    gw.from = w.at("from");
    gw.to = w.at("to");
    CycloMat m;
    for (const auto& row : w.at("mat")) {
      CycloVec rv;
      for (const auto& e : row) rv.push_back(parse_cyclo(3, e.get<std::string>()));
      m.push_back(std::move(rv));
    }
    gw.map = SemilinearMap::linear(std::move(m));
    for (int i = 0; i < 3; ++i) gw.map.conj[i] = w.at("conj").at(i).get<bool>();
    g.witnesses.push_back(std::move(gw));
  }
  return g;
}

AffineAction build_golden_action(const GoldenRow& row) {
  const CaseSpec* c = case_by_name(row.case_name);
  if (!c) throw std::runtime_error("unknown case " + row.case_name);
  KernelCode k = row.kernel.empty() ? KernelCode{{0, 0, 0}} : row.kernel;
  TorusSetup s = make_setup(*c, k);
  std::vector<QVec> trans;
  for (const auto& v : row.gen_trans) {
    auto x = s.lat->coords(v);
    if (!x) throw std::runtime_error("golden translation outside rational span");
    for (auto& e : *x) e = frac(e);
    trans.push_back(std::move(*x));
  }
  return AffineAction(s.lat, c->pres, c->gen_mats, trans);
}

}  // namespace rtq
