#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rtq/toric.hpp>
#include <rtq/singular.hpp>

using namespace rtq;

namespace {

Fan quotient_fan(long d, std::array<long, 3> w) {
  Fan f{QLattice({Rat(w[0], d), Rat(w[1], d), Rat(w[2], d)}),
        {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}},
        {{0, 1, 2}}};
  return f;
}

}  // namespace

TEST_CASE("lattice membership and covolume") {
  QLattice n({Rat(1, 9), Rat(4, 9), Rat(7, 9)});
  CHECK(n.covolume() == Rat(1, 9));
  CHECK(n.contains({Rat(1, 9), Rat(4, 9), Rat(7, 9)}));
  CHECK(n.contains({Rat(1, 3), Rat(1, 3), Rat(1, 3)}));  // 3q mod Z^3
  CHECK(n.contains({Rat(1), Rat(0), Rat(0)}));
  CHECK(!n.contains({Rat(1, 9), Rat(4, 9), Rat(5, 9)}));
  CHECK(!n.contains({Rat(1, 3), Rat(1, 3), Rat(2, 3)}));

  // duals pair integrally with everything in the lattice: a+4b+7c = 0 mod 9
  CHECK(n.dual_contains({Rat(1), Rat(2), Rat(0)}));   // 1+8 = 9
  CHECK(!n.dual_contains({Rat(1), Rat(0), Rat(0)}));  // <x,q> = 1/9
  CHECK(n.dual_contains({Rat(2), Rat(0), Rat(1)}));   // 2+7 = 9
  CHECK(!n.dual_contains({Rat(1, 2), Rat(0), Rat(0)}));
}

TEST_CASE("dual pairing oracle") {
  // brute force: x in Z^3 is dual iff <x,q> in Z
  QLattice n({Rat(1, 7), Rat(2, 7), Rat(4, 7)});
  int cnt = 0;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) {
        bool expect = (a + 2 * b + 4 * c) % 7 == 0;
        QVec3 x{Rat(a), Rat(b), Rat(c)};
        CHECK(n.dual_contains(x) == expect);
        if (expect) ++cnt;
      }
  CHECK(cnt == 49);  // index-7 sublattice of (Z/7)^3
}

TEST_CASE("primitive ray scaling") {
  QLattice n({Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  QVec3 p = n.primitive({Rat(1), Rat(1), Rat(1)});
  CHECK(p == QVec3{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
  QVec3 e = n.primitive({Rat(5), Rat(0), Rat(0)});
  CHECK(e == QVec3{Rat(1), Rat(0), Rat(0)});
}

TEST_CASE("cone type of the full positive octant") {
  SUBCASE("9;1,4,7") {
    Fan f = quotient_fan(9, {1, 4, 7});
    ConeType t = cone_type(f, 0);
    CHECK(t.index == 9);
    CHECK(t.weights == std::array<long, 3>{1, 4, 7});
  }
  SUBCASE("7;1,2,4") {
    Fan f = quotient_fan(7, {1, 2, 4});
    ConeType t = cone_type(f, 0);
    CHECK(t.index == 7);
    CHECK(t.weights == std::array<long, 3>{1, 2, 4});
  }
  SUBCASE("14;1,9,11") {
    Fan f = quotient_fan(14, {1, 9, 11});
    ConeType t = cone_type(f, 0);
    CHECK(t.index == 14);
    CHECK(t.weights == std::array<long, 3>{1, 9, 11});
  }
  SUBCASE("smooth") {
    Fan f{QLattice(), {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}, {{0, 1, 2}}};
    ConeType t = cone_type(f, 0);
    CHECK(t.index == 1);
  }
}

TEST_CASE("partial resolution of 9;1,4,7 leaves three 3;1,1,2 points") {
  auto r = terminalize(9, {1, 4, 7});
  CHECK(r.crepant);
  CHECK(r.all_terminal);
  REQUIRE(r.types.size() == 3);
  Int idx_product = 1;
  for (const auto& t : r.types) {
    CHECK(t.index == 3);
    CHECK(t.weights == std::array<long, 3>{1, 1, 2});
    auto c = classify_cqs(3, {1, 1, 2});
    CHECK(c.terminal);
    CHECK(!c.gorenstein);
  }
  // index bookkeeping: 9 = 3 * 3 (cover degree times residual index)
  for (const auto& t : r.types) idx_product = t.index;
  CHECK(idx_product * 3 == 9);
}

TEST_CASE("partial resolution of 14;1,9,11 leaves seven 2;1,1,1 points") {
  auto r = terminalize(14, {1, 9, 11});
  CHECK(r.crepant);
  CHECK(r.all_terminal);
  REQUIRE(r.types.size() == 7);
  for (const auto& t : r.types) {
    CHECK(t.index == 2);
    CHECK(t.weights == std::array<long, 3>{1, 1, 1});
    CHECK(classify_cqs(2, {1, 1, 1}).terminal);
  }
  // 14 = 7 * 2
  CHECK(r.types.size() * 2 == 14);
}

TEST_CASE("crepant resolutions of the two canonical covers are smooth") {
  auto a = terminalize(3, {1, 1, 1});
  CHECK(a.crepant);
  CHECK(a.all_terminal);
  for (const auto& t : a.types) CHECK(t.index == 1);

  auto b = terminalize(7, {1, 2, 4});
  CHECK(b.crepant);
  CHECK(b.all_terminal);
  for (const auto& t : b.types) CHECK(t.index == 1);
}

TEST_CASE("crepancy detects rays off the unit-sum plane") {
  Fan f = quotient_fan(9, {1, 4, 7});
  f.rays.push_back({Rat(2, 9), Rat(8, 9), Rat(14, 9)});  // 2q, sum 8/3
  f.cones = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  CHECK(!is_crepant_subdivision(f));
}

TEST_CASE("Cartier data on the 14;1,9,11 partial resolution") {
  auto r = terminalize(14, {1, 9, 11});
  const Fan& f = r.fan;
  // 2 * D1 is Cartier (D1 = divisor of the first coordinate ray)
  Divisor d1(f.rays.size(), Rat(0));
  d1[0] = 1;
  CartierData cd1 = cartier_data(d1, f);
  CHECK(cd1.ell == 2);
  // cones through ray 0: indices 1 (e1,v2,v3), 4 (e1,e2,v3), 6 (e3,e1,v2)
  CHECK(cd1.m[1] == QVec3{Rat(-2), Rat(0), Rat(4)});
  CHECK(cd1.m[4] == QVec3{Rat(-2), Rat(0), Rat(4)});
  CHECK(cd1.m[6] == QVec3{Rat(-2), Rat(8), Rat(0)});
  CHECK(cd1.m[0] == QVec3{Rat(0), Rat(0), Rat(0)});  // cone (v1,v2,v3) misses D1
  // the functionals really are dual-lattice members
  for (const auto& m : cd1.m) CHECK(f.lattice.dual_contains(m));
  // and they cut out the divisor: <m, u> = -ell * a on each cone's rays
  for (size_t c = 0; c < f.cones.size(); ++c)
    for (int j : f.cones[c]) {
      Rat lhs = cd1.m[c][0] * f.rays[j][0] + cd1.m[c][1] * f.rays[j][1] + cd1.m[c][2] * f.rays[j][2];
      CHECK(lhs == Rat(-2) * d1[j]);
    }
}

TEST_CASE("basepoint-freeness on the 14;1,9,11 partial resolution") {
  auto r = terminalize(14, {1, 9, 11});
  const Fan& f = r.fan;
  Divisor d1(f.rays.size(), Rat(0));
  d1[0] = 1;
  CHECK(is_basepoint_free(d1, f));  // the coordinate divisor moves
  Divisor ev(f.rays.size(), Rat(0));
  ev[3] = 1;  // exceptional over the singular point: rigid, not bpf
  CHECK(!is_basepoint_free(ev, f));
  Divisor zero(f.rays.size(), Rat(0));
  CHECK(is_basepoint_free(zero, f));
}

TEST_CASE("pushforward keeps coordinate-divisor sections") {
  auto r14 = terminalize(14, {1, 9, 11});
  auto r9 = terminalize(9, {1, 4, 7});
  for (int i = 1; i <= 3; ++i) {
    CHECK(pushforward_sections_equal(i, r14.fan));
    CHECK(pushforward_sections_equal(i, r9.fan));
  }
}

TEST_CASE("pushforward refuses unjustified integrality tightening") {
  // an added ray that is NOT in the lattice makes the strict-to-weak
  // tightening of the violated constraint invalid
  Fan f{QLattice(),
        {{Rat(1), Rat(0), Rat(0)},
         {Rat(0), Rat(1), Rat(0)},
         {Rat(0), Rat(0), Rat(1)},
         {Rat(1, 3), Rat(1, 3), Rat(1, 3)}},
        {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  CHECK_THROWS(pushforward_sections_equal(1, f));
}

TEST_CASE("H^1 vanishing for nef and exceptional divisors on the resolutions") {
  auto r = terminalize(14, {1, 9, 11});
  const Fan& f = r.fan;
  for (size_t r0 = 0; r0 < f.rays.size(); ++r0) {
    Divisor a(f.rays.size(), Rat(0));
    a[r0] = 1;
    CHECK(h1_vanishes(a, f));
  }
  Divisor zero(f.rays.size(), Rat(0));
  CHECK(h1_vanishes(zero, f));

  auto r9 = terminalize(9, {1, 4, 7});
  for (size_t r0 = 0; r0 < r9.fan.rays.size(); ++r0) {
    Divisor a(r9.fan.rays.size(), Rat(0));
    a[r0] = 1;
    CHECK(h1_vanishes(a, r9.fan));
  }
}

TEST_CASE("H^1 check catches a disconnected support pattern") {
  // square pyramid over (+-1, 0, 1), (0, +-1, 1): the divisor 5 D_{r1} + 5 D_{r3}
  // admits a section-support pattern split between the two opposite rays
  Fan f{QLattice(),
        {{Rat(1), Rat(0), Rat(1)},
         {Rat(0), Rat(1), Rat(1)},
         {Rat(-1), Rat(0), Rat(1)},
         {Rat(0), Rat(-1), Rat(1)}},
        {{0, 1, 2}, {0, 2, 3}}};
  Divisor a{Rat(5), Rat(0), Rat(5), Rat(0)};
  CHECK(!h1_vanishes(a, f));
}
