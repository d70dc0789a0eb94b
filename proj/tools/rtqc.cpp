// Command-line front end: classification runs, golden-table verification,
// basket / toric / fundamental-group certificates.
#include <rtq/catalog.hpp>
#include <rtq/toric.hpp>
#include <CLI11.hpp>
#include <json.hpp>
#include <fstream>
#include <iostream>

using namespace rtq;
using nlohmann::json;

namespace {

// accept both the internal case tokens and the table-style group names
std::string canonical_case(std::string s) {
  static const std::map<std::string, std::string> alias = {
      {"Z9", "z9"},           {"Z14", "z14"},         {"Z3^2-rho1", "z3sq-rho1"},
      {"rho1", "z3sq-rho1"},  {"Z3^2-rho2", "z3sq-rho2"}, {"rho2", "z3sq-rho2"},
      {"Z3^3", "z3cube"},     {"Z9:Z3", "z9sd"},      {"Z9xZ3", "z9sd"},
      {"Z3", "z3-cy"},        {"Z7", "z7-cy"},        {"Z3^2-CY", "z3sq-cy"},
      {"He3", "he3-cy"}};
  auto it = alias.find(s);
  return it == alias.end() ? s : it->second;
}

json orbit_json(const ClassificationReport& r, const OrbitInfo& o) {
  json j;
  j["torus"] = o.torus();
  j["kernel"] = kernel_str(r.setups[o.torus()].kernel);
  j["class"] = o.rep_class();
  j["members"] = o.members;
  j["basket"] = o.basket;
  j["pi1"] = o.pi1;
  j["h0"] = o.h0;
  j["pg"] = rat_str(o.pg);
  return j;
}

json report_json(const ClassificationReport& r, const std::string& mode) {
  json j;
  j["case"] = r.case_name;
  j["mode"] = mode;
  json setups = json::array();
  for (const auto& s : r.setups)
    setups.push_back({{"kernel", kernel_str(s.kernel)},
                      {"good_actions", s.n_actions},
                      {"good_classes", s.classes.size()}});
  j["tori"] = setups;
  json orbits = json::array();
  for (const auto& o : r.biholo) orbits.push_back(orbit_json(r, o));
  j["biholo_orbits"] = orbits;
  j["biholo_count"] = r.biholo_count();
  if (mode == "diffeo") {
    j["diffeo_partition"] = r.diffeo;
    j["diffeo_count"] = r.diffeo_count();
  }
  return j;
}

void print_report_text(std::ostream& os, const ClassificationReport& r,
                       const std::string& mode) {
  os << "case " << r.case_name << "\n";
  for (const auto& s : r.setups)
    os << "  torus kernel=" << kernel_str(s.kernel) << ": " << s.n_actions
       << " good actions, " << s.classes.size() << " classes\n";
  for (size_t i = 0; i < r.biholo.size(); ++i) {
    const auto& o = r.biholo[i];
    os << "  orbit " << i << ": torus=" << o.torus() << " basket=";
    for (size_t k = 0; k < o.basket.size(); ++k) os << (k ? "+" : "") << o.basket[k];
    os << " pi1=" << o.pi1 << " H0=" << o.h0 << " pg=" << rat_str(o.pg) << "\n";
  }
  os << "  biholomorphism classes: " << r.biholo_count() << "\n";
  if (mode == "diffeo") {
    os << "  diffeomorphism classes: " << r.diffeo_count() << " (partition";
    for (const auto& grp : r.diffeo) {
      os << " [";
      for (size_t k = 0; k < grp.size(); ++k) os << (k ? " " : "") << grp[k];
      os << "]";
    }
    os << ")\n";
  }
}

int cmd_classify(const std::string& sel, bool all, const std::string& mode,
                 const std::string& format, const std::string& out) {
  std::vector<std::string> names;
  if (all) {
    for (const auto& c : pg0_cases()) names.push_back(c.name);
  } else {
    names.push_back(canonical_case(sel));
    if (!case_by_name(names[0])) {
      std::cerr << "unknown case: " << sel << "\n";
      return 64;
    }
  }
  std::ostringstream text;
  json jall = json::array();
  long total = 0;
  try {
    for (const auto& n : names) {
      ClassificationReport r = classify_case(*case_by_name(n));
      total += mode == "diffeo" ? r.diffeo_count() : r.biholo_count();
      if (format == "json")
        jall.push_back(report_json(r, mode));
      else
        print_report_text(text, r, mode);
    }
  } catch (const std::logic_error& e) {
    std::cerr << "soundness error: " << e.what() << "\n";
    return 2;
  }
  if (format != "json" && names.size() > 1)
    text << "total " << mode << " classes: " << total << "\n";
  std::string payload = format == "json"
                            ? (all ? jall : jall[0]).dump(2) + "\n"
                            : text.str();
  if (!out.empty()) {
    std::ofstream f(out);
    f << payload;
  } else {
    std::cout << payload;
  }
  return 0;
}

int cmd_verify_tables() {
  GoldenData g = load_golden();
  int bad = 0;
  auto run = [&](const std::vector<GoldenRow>& rows) {
    for (const auto& row : rows) {
      AffineAction a = build_golden_action(row);
      CharacterInvariants ci = a.character_invariants();
      std::vector<std::string> basket = basket_of(singular_locus(a)).serialized();
      std::string pi1 = fundamental_group(a).descriptor;
      std::vector<std::string> diffs;
      if (!a.validate().ok) diffs.push_back("action invalid");
      if (!a.goodness().first) diffs.push_back("fixed locus not isolated");
      if (!ci.rigid) diffs.push_back("not rigid");
      if (ci.pg != Rat(row.pg))
        diffs.push_back("pg computed " + rat_str(ci.pg) + " expected " +
                        std::to_string(row.pg));
      if (basket != row.basket) {
        std::string d = "basket computed [";
        for (const auto& b : basket) d += b + " ";
        d += "] expected [";
        for (const auto& b : row.basket) d += b + " ";
        diffs.push_back(d + "]");
      }
      if (pi1 != row.pi1) diffs.push_back("pi1 computed " + pi1 + " expected " + row.pi1);
      if (diffs.empty()) {
        std::cout << row.name << ": pass\n";
      } else {
        ++bad;
        std::cout << row.name << ": FAIL\n";
        for (const auto& d : diffs) std::cout << "  " << d << "\n";
      }
    }
  };
  run(g.table1);
  run(g.table2);
  std::cout << (bad ? "mismatches: " + std::to_string(bad) : "all rows pass") << "\n";
  return bad ? 1 : 0;
}

int cmd_baskets() {
  auto all = riemann_roch_baskets();
  std::cout << "(N2,N3,N4,N6,N9,N14)\n";
  for (const auto& v : all) {
    for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "(") << v[i];
    std::cout << ")\n";
  }
  std::cout << all.size() << " solutions\n";
  return 0;
}

int cmd_toric(const std::string& target) {
  struct Job {
    long d;
    std::array<long, 3> w;
  };
  std::map<std::string, Job> jobs = {{"9", {9, {1, 4, 7}}},
                                     {"1/9", {9, {1, 4, 7}}},
                                     {"14", {14, {1, 9, 11}}},
                                     {"1/14", {14, {1, 9, 11}}},
                                     {"3", {3, {1, 1, 1}}},
                                     {"7", {7, {1, 2, 4}}}};
  auto it = jobs.find(target);
  if (it == jobs.end()) {
    std::cerr << "unknown toric target: " << target << "\n";
    return 64;
  }
  auto r = terminalize(it->second.d, it->second.w);
  const Fan& f = r.fan;
  std::cout << "fan for 1/" << it->second.d << "(" << it->second.w[0] << ","
            << it->second.w[1] << "," << it->second.w[2] << "): " << f.rays.size()
            << " rays, " << f.cones.size() << " cones\n";
  std::cout << "crepant: " << (r.crepant ? "true" : "false")
            << ", all cones terminal: " << (r.all_terminal ? "true" : "false") << "\n";
  for (size_t c = 0; c < f.cones.size(); ++c) {
    const auto& t = r.types[c];
    std::cout << "  cone " << c << ": ";
    if (t.index == 1)
      std::cout << "smooth\n";
    else
      std::cout << "type (" << t.index.get_str() << ";" << t.weights[0] << ","
                << t.weights[1] << "," << t.weights[2] << ")\n";
  }
  for (int i = 1; i <= 3; ++i)
    std::cout << "pushforward sections equal (coordinate divisor " << i
              << "): " << (pushforward_sections_equal(i, f) ? "true" : "false") << "\n";
  int h1_ok = 0;
  for (size_t j = 0; j < f.rays.size(); ++j) {
    Divisor a(f.rays.size(), Rat(0));
    a[j] = 1;
    if (h1_vanishes(a, f)) ++h1_ok;
  }
  std::cout << "H^1 vanishing: " << h1_ok << "/" << f.rays.size() << " ray divisors\n";
  return 0;
}

int cmd_pi1(const std::string& sel) {
  std::string name = canonical_case(sel);
  const CaseSpec* c = case_by_name(name);
  if (!c) {
    std::cerr << "unknown case: " << sel << "\n";
    return 64;
  }
  ClassificationReport r = classify_case(*c);
  for (size_t i = 0; i < r.biholo.size(); ++i) {
    const auto& o = r.biholo[i];
    std::cout << "orbit " << i << ": pi1 = " << o.pi1;
    if (o.pi1 == "1")
      std::cout << " (universal cover is the quotient itself)";
    std::cout << "\n";
  }
  return 0;
}

int cmd_normalizer(const std::string& sel) {
  std::string name = canonical_case(sel);
  const CaseSpec* c = case_by_name(name);
  if (!c) {
    std::cerr << "unknown case: " << sel << "\n";
    return 64;
  }
  std::cout << "holomorphic pool: " << normalizer(*c, false).size() << "\n";
  std::cout << "diffeomorphism pool: " << normalizer(*c, true).size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigid torus-quotient classification"};
  app.require_subcommand(1);

  std::string sel, mode = "biholo", format = "text", out, target;
  bool all = false;

  auto* classify = app.add_subcommand("classify", "classify one case or all of them");
  classify->add_option("--case", sel, "case name");
  classify->add_flag("--all", all, "run every main-table case");
  classify->add_option("--mode", mode, "biholo|diffeo")
      ->check(CLI::IsMember({"biholo", "diffeo"}));
  classify->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--out", out, "output file");

  auto* verify = app.add_subcommand("verify-tables", "check both golden tables");
  auto* baskets = app.add_subcommand("baskets", "degree-one basket census");
  auto* toric = app.add_subcommand("toric", "toric certificates");
  toric->add_option("--target", target, "9, 14, 3 or 7")->required();
  auto* pi1 = app.add_subcommand("pi1", "fundamental groups per orbit");
  pi1->add_option("--case", sel, "case name")->required();
  auto* norm = app.add_subcommand("normalizer", "normalizer pool sizes");
  norm->add_option("--case", sel, "case name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (classify->parsed()) {
      if (!all && sel.empty()) {
        std::cerr << "classify needs --case or --all\n";
        return 64;
      }
      return cmd_classify(sel, all, mode, format, out);
    }
    if (verify->parsed()) return cmd_verify_tables();
    if (baskets->parsed()) return cmd_baskets();
    if (toric->parsed()) return cmd_toric(target);
    if (pi1->parsed()) return cmd_pi1(sel);
    if (norm->parsed()) return cmd_normalizer(sel);
  } catch (const std::logic_error& e) {
    std::cerr << "soundness error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
