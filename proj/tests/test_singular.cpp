#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rtq/singular.hpp>

using namespace rtq;

namespace {

Cyclo zero() { return Cyclo(Rat(0)); }
Cyclo one() { return Cyclo(Rat(1)); }
Cyclo z3() { return Cyclo::zeta(3); }
Cyclo tpt() { return (one() + Cyclo(Rat(2)) * z3()) * Cyclo(Rat(1, 3)); }

CycloMat diag(Cyclo a, Cyclo b, Cyclo c) {
  CycloMat m(3, CycloVec(3, zero()));
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

Word pow_word(int g, int e) { return Word((size_t)e, g); }

AffineAction order9_action() {
  auto lat = std::make_shared<PeriodLattice>(PeriodLattice::cm_embedding(9, {1, 4, 7}));
  Presentation p{{"g"}, {pow_word(1, 9)}};
  return AffineAction(lat, p, {diag(Cyclo::zeta(9), Cyclo::zeta(9, 4), Cyclo::zeta(9, 7))},
                      {QVec(6, Rat(0))});
}

AffineAction order14_action() {
  auto lat = std::make_shared<PeriodLattice>(PeriodLattice::cm_embedding(14, {1, 9, 11}));
  Presentation p{{"g"}, {pow_word(1, 14)}};
  return AffineAction(lat, p,
                      {diag(Cyclo::zeta(14), Cyclo::zeta(14, 9), Cyclo::zeta(14, 11))},
                      {QVec(6, Rat(0))});
}

}  // namespace

TEST_CASE("weight normalization") {
  CHECK(normalize_weights(3, {1, 1, 1}) == std::array<long, 3>{1, 1, 1});
  CHECK(normalize_weights(3, {2, 2, 2}) == std::array<long, 3>{1, 1, 1});
  CHECK(normalize_weights(3, {1, 1, 2}) == std::array<long, 3>{1, 1, 2});
  CHECK(normalize_weights(9, {1, 4, 7}) == std::array<long, 3>{1, 4, 7});
  CHECK(normalize_weights(9, {2, 8, 14 % 9}) == std::array<long, 3>{1, 4, 7});
  CHECK(normalize_weights(14, {1, 9, 11}) == std::array<long, 3>{1, 9, 11});
  CHECK(normalize_weights(7, {1, 2, 4}) == std::array<long, 3>{1, 2, 4});
  CHECK(normalize_weights(2, {1, 1, 1}) == std::array<long, 3>{1, 1, 1});
}

TEST_CASE("cyclic quotient singularity classes") {
  auto c = classify_cqs(3, {1, 1, 1});
  CHECK(c.canonical);
  CHECK(!c.terminal);
  CHECK(c.gorenstein);
  c = classify_cqs(3, {1, 1, 2});
  CHECK(c.terminal);
  CHECK(!c.gorenstein);
  CHECK(c.morrison_label == "terminal 1/3(1,1,2)");
  c = classify_cqs(4, {1, 1, 1});
  CHECK(!c.canonical);  // age 3/4
  c = classify_cqs(5, {1, 1, 1});
  CHECK(!c.canonical);
  c = classify_cqs(9, {1, 4, 7});
  CHECK(c.canonical);
  CHECK(!c.terminal);
  CHECK(c.morrison_label == "exceptional 1/9(1,4,7)");
  c = classify_cqs(14, {1, 9, 11});
  CHECK(c.canonical);
  CHECK(c.morrison_label == "exceptional 1/14(1,9,11)");
  c = classify_cqs(2, {1, 1, 1});
  CHECK(c.terminal);
  c = classify_cqs(7, {1, 2, 4});
  CHECK(c.canonical);
  CHECK(c.gorenstein);
  CHECK_THROWS(classify_cqs(4, {1, 2, 3}));
}

TEST_CASE("singular locus of the order 9 quotient") {
  auto a = order9_action();
  auto orbits = singular_locus(a);
  Basket b = basket_of(orbits);
  CHECK(b.serialized() == std::vector<std::string>{"3/(1,1,1)x8", "9/(1,4,7)x3"});
  CHECK(b.riemann_roch_sum() == 1);
  // double counting: sum of orbit sizes = points with nontrivial stabilizer
  Int total = 0;
  for (const auto& o : orbits) total += o.orbit_size;
  CHECK(total == 8 * 3 + 3 * 1 - 0);  // 24 free-ish orbit points + 3 deep points
}

TEST_CASE("singular locus of the order 14 quotient") {
  auto a = order14_action();
  Basket b = basket_of(singular_locus(a));
  CHECK(b.serialized() ==
        std::vector<std::string>{"14/(1,9,11)x1", "2/(1,1,1)x9", "7/(1,2,4)x3"});
  CHECK(b.riemann_roch_sum() == 1);
}

TEST_CASE("scalar order 3 quotient has 27 gorenstein points") {
  auto lat = std::make_shared<PeriodLattice>(PeriodLattice::product_zeta3());
  Presentation p{{"k"}, {pow_word(1, 3)}};
  AffineAction a(lat, p, {diag(z3(), z3(), z3())}, {QVec(6, Rat(0))});
  Basket b = basket_of(singular_locus(a));
  CHECK(b.serialized() == std::vector<std::string>{"3/(1,1,1)x27"});
}

TEST_CASE("riemann-roch candidate table") {
  auto rows = riemann_roch_baskets();
  CHECK(rows.size() == 15);
  auto has = [&](std::array<long, 6> v) {
    return std::find(rows.begin(), rows.end(), v) != rows.end();
  };
  CHECK(has({0, 1, 2, 1, 1, 0}));
  CHECK(has({9, 0, 0, 0, 0, 1}));
  CHECK(has({0, 0, 0, 0, 3, 0}));
  CHECK(has({0, 9, 0, 0, 0, 0}));
}

TEST_CASE("lefschetz counts against the closed formula") {
  auto a9 = order9_action();
  for (size_t i = 1; i < a9.order(); ++i) {
    auto r = lefschetz_check(a9, (int)i);
    CHECK(r.agree);
    if (a9.element_order((int)i) == 9) CHECK(r.count_snf == 3);
    if (a9.element_order((int)i) == 3) CHECK(r.count_snf == 27);
  }
  auto a14 = order14_action();
  for (size_t i = 1; i < a14.order(); ++i) {
    auto r = lefschetz_check(a14, (int)i);
    CHECK(r.agree);
    long o = a14.element_order((int)i);
    if (o == 14) CHECK(r.count_snf == 1);
    if (o == 2) CHECK(r.count_snf == 64);
    if (o == 7) CHECK(r.count_snf == 7);
  }
}

TEST_CASE("burnside identity at maximal orders") {
  CHECK(burnside_check(order9_action(), 9));
  CHECK(burnside_check(order14_action(), 14));
  // order 3 in the order 9 action violates the hypothesis (9 is a multiple)
  CHECK_THROWS(burnside_check(order9_action(), 3));
}

TEST_CASE("fundamental groups") {
  auto pi = fundamental_group(order9_action());
  CHECK(pi.shortcut);
  CHECK(pi.descriptor == "1");
  CHECK(pi.quotient_order * (long)pi.gfix.size() == 9);
  pi = fundamental_group(order14_action());
  CHECK(pi.descriptor == "1");
  // the commuting two generator action with tau(h) = (t,t,t): pi1 = Z3
  auto lat = std::make_shared<PeriodLattice>(PeriodLattice::product_zeta3());
  Presentation p{{"h", "k"}, {pow_word(1, 3), pow_word(2, 3), {1, 2, -1, -2}}};
  auto th = lat->coords({tpt(), tpt(), tpt()});
  REQUIRE(th.has_value());
  AffineAction a(lat, p,
                 {diag(one(), z3() * z3(), z3() * z3()), diag(z3(), z3(), z3() * z3())},
                 {*th, QVec(6, Rat(0))});
  pi = fundamental_group(a);
  CHECK(pi.shortcut);
  CHECK(pi.descriptor == "Z3");
  CHECK(pi.quotient_order == 3);
}
