#include <rtq/fourier_motzkin.hpp>
#include <algorithm>
#include <set>

namespace rtq {

namespace {

// scale to a primitive integer row so duplicates collapse
Ineq normalise(Ineq r) {
  Int den = rat_den(r.b);
  for (const auto& x : r.a) den = lcm(den, rat_den(x));
  Int g = 0;
  auto scaled = [&](const Rat& x) { return rat_num(x * Rat(den)); };
  for (const auto& x : r.a) g = gcd(g, scaled(x));
  g = gcd(g, scaled(r.b));
  if (g == 0) g = 1;
  for (auto& x : r.a) x = Rat(scaled(x) / g);
  r.b = Rat(scaled(r.b) / g);
  return r;
}

}  // namespace

bool fm_feasible(const IneqSystem& sys) {
  std::vector<Ineq> rows;
  rows.reserve(sys.rows.size());
  for (const auto& r : sys.rows) rows.push_back(normalise(r));
  for (size_t var = 0; var < sys.dim; ++var) {
    std::vector<Ineq> pos, neg, rest;
    for (auto& r : rows) {
      if (r.a[var] > 0)
        pos.push_back(std::move(r));
      else if (r.a[var] < 0)
        neg.push_back(std::move(r));
      else
        rest.push_back(std::move(r));
    }
    std::set<std::pair<std::vector<std::string>, std::string>> seen;
    auto push = [&](Ineq r) {
      r = normalise(std::move(r));
      std::vector<std::string> key;
      for (const auto& x : r.a) key.push_back(x.get_str());
      if (seen.insert({key, r.b.get_str()}).second) rest.push_back(std::move(r));
    };
    // p.a x >= p.b gives x_var >= (p.b - ...)/p.a[var]; combine each lower
    // bound (from pos) with each upper bound (from neg)
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Ineq c;
        c.a.resize(sys.dim, Rat(0));
        Rat cp = p.a[var], cn = -n.a[var];
        for (size_t j = 0; j < sys.dim; ++j) c.a[j] = cn * p.a[j] + cp * n.a[j];
        c.b = cn * p.b + cp * n.b;
        c.a[var] = 0;
        push(std::move(c));
      }
    rows = std::move(rest);
  }
  for (const auto& r : rows)
    if (r.b > 0) return false;  // 0 >= b with b > 0
  return true;
}

}  // namespace rtq
