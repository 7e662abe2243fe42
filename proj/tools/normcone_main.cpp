// Command-line front end: analyze one instance (semigroup ring, hypersurface,
// or raw length table) or sweep a whole family. Exit codes: 0 success,
// 2 input error, 3 verification failure.

#include "normcone/normcone.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace normcone;

std::pair<i64, i64> parse_range(const std::string& s, i64 lo_default) {
  try {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
      const i64 v = std::stoll(s);
      return {v, v};
    }
    const i64 lo = pos == 0 ? lo_default : std::stoll(s.substr(0, pos));
    const std::string hi = s.substr(pos + 2);
    require(!hi.empty(), errc::parse, "range needs an upper bound: '" + s + "'");
    return {lo, std::stoll(hi)};
  } catch (const std::invalid_argument&) {
    fail(errc::parse, "malformed range '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(errc::parse, "range value out of range in '" + s + "'");
  }
}

std::string slurp(const std::string& file) {
  if (file == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(file);
  require(in.good(), errc::parse, "cannot open '" + file + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// JSON object {"dim": d, "H": [...], "flags": {...}} or CSV rows "n,H(n)".
FiltrationProfile parse_table(const std::string& text, i64 csv_dim,
                              ProfileAssumptions flags) {
  const std::string body = trim(text);
  require(!body.empty(), errc::parse, "empty table input");
  if (body.front() == '{') {
    const auto j = nlohmann::json::parse(body);
    const i64 dim = j.at("dim").get<i64>();
    const std::vector<Int> H = detail::int_vec_from_json(j.at("H"));
    if (j.contains("flags")) {
      const auto& f = j.at("flags");
      flags.ambient_gorenstein |= f.value("ambient_gorenstein", false);
      flags.assoc_graded_cm |= f.value("assoc_graded_cm", false);
      flags.depth_at_least_dim_minus_1 |= f.value("depth_at_least_dim_minus_1", false);
    }
    return FiltrationProfile(dim, H, flags);
  }
  std::vector<Int> H;
  std::istringstream lines(body);
  std::string line;
  i64 expect = 0;
  while (std::getline(lines, line)) {
    const std::string row = trim(line);
    if (row.empty() || row.front() == '#') continue;
    const auto comma = row.find(',');
    require(comma != std::string::npos, errc::parse, "CSV row needs 'n,H(n)': '" + row + "'");
    i64 n = 0;
    try {
      n = std::stoll(trim(row.substr(0, comma)));
      H.emplace_back(trim(row.substr(comma + 1)));
    } catch (const std::exception&) {
      fail(errc::parse, "malformed CSV row '" + row + "'");
    }
    require(n == expect, errc::parse, "table rows must start at 0 and increase by 1");
    ++expect;
  }
  return FiltrationProfile(csv_dim, std::move(H), flags);
}

void emit(const Report& rep, bool json) {
  if (json)
    std::cout << rep.to_json().dump(2) << "\n";
  else
    std::cout << rep.to_text();
}

i64 verify_semigroup(const NumericalSemigroup& s, const Report& rep) {
  i64 checks = 0;
  require(brute_frobenius(s.generators()) == s.frobenius(), errc::verification,
          "reachability frobenius disagrees");
  ++checks;
  require(brute_fit(rep.profile, 1) == *rep.coefficients, errc::verification,
          "linear-algebra fit disagrees");
  ++checks;
  const FiltrationProfile prof(1, rep.profile, rep.flags);
  require(brute_hvector(prof.increments(), 1) == *rep.h, errc::verification,
          "product h-vector disagrees");
  ++checks;
  return checks;
}

i64 verify_zariski(const ZariskiParams& p, const Report& rep) {
  i64 checks = 0;
  const i64 rbar = *rep.rbar;
  for (i64 n = 1; n <= rbar + 2; ++n) {
    require(jn_equals_in(p, n), errc::verification,
            "valuation ideal differs from the closure at n = " + std::to_string(n));
    ++checks;
  }
  const std::vector<i64> rungs = ladder(p);
  for (i64 k = 0; k < p.a; ++k)
    for (i64 n = 1; n <= rbar + 2; ++n) {
      const bool by_ladder = k >= 1 && n <= rungs[static_cast<std::size_t>(k - 1)];
      require(xk_membership(p, k, n) == by_ladder, errc::verification,
              "x^k membership disagrees with the ladder");
      ++checks;
    }
  require(brute_fit(rep.profile, p.m) == *rep.coefficients, errc::verification,
          "linear-algebra fit disagrees");
  ++checks;
  const FiltrationProfile prof(p.m, rep.profile, rep.flags);
  require(brute_hvector(prof.increments(), p.m) == *rep.h, errc::verification,
          "product h-vector disagrees");
  ++checks;
  return checks;
}

int emit_sweep(const SweepStats& st, const std::string& family, bool json) {
  const bool semigroups = family == "semigroup";
  if (json) {
    nlohmann::json issues = nlohmann::json::array();
    for (const auto& issue : st.issues)
      issues.push_back({{"instance", issue.instance}, {"what", issue.what}});
    nlohmann::json j{{"schema", "normcone.sweep.v1"},
                     {"family", family},
                     {"instances", st.instances},
                     {"gorenstein", st.gorenstein},
                     {"maximal", st.maximal},
                     {"issue_count", st.issue_count},
                     {"issues", issues}};
    if (semigroups) j["symmetric"] = st.symmetric;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family: " << family << "\n";
    std::cout << "instances: " << st.instances << "\n";
    if (semigroups) std::cout << "symmetric: " << st.symmetric << "\n";
    std::cout << "gorenstein: " << st.gorenstein << "\n";
    std::cout << "nr_maximal: " << st.maximal << "\n";
    std::cout << "issues: " << st.issue_count << "\n";
    for (const auto& issue : st.issues)
      std::cout << "  - " << issue.instance << ": " << issue.what << "\n";
  }
  return st.issue_count == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal filtration invariants of hypersurface singularities"};
  app.require_subcommand(1);

  bool opt_json = false, opt_verify = false;
  i64 opt_max_n = 0;
  app.add_flag("--json", opt_json, "emit reports as JSON");
  app.add_flag("--verify", opt_verify, "re-check results against brute-force oracles");
  app.add_option("--max-n", opt_max_n, "profile points to use (default: automatic)");

  std::vector<i64> gens;
  auto* sg = app.add_subcommand("semigroup", "analyze a numerical semigroup ring");
  sg->fallthrough();
  sg->add_option("generators", gens, "semigroup generators")->required()->expected(-1);

  i64 hy_a = 0, hy_b = 0, hy_m = 1;
  auto* hy = app.add_subcommand("hypersurface", "analyze x^a = y^b * unit");
  hy->fallthrough();
  hy->add_option("--a", hy_a, "x-degree (multiplicity)")->required();
  hy->add_option("--b", hy_b, "y-degree, >= a")->required();
  hy->add_option("--m", hy_m, "number of free variables (dimension)");

  std::string fi_file;
  i64 fi_dim = 1;
  bool fi_amb = false, fi_cm = false, fi_depth = false;
  auto* fi = app.add_subcommand("filtration", "analyze a raw length table");
  fi->fallthrough();
  fi->add_option("--file", fi_file, "JSON or CSV table; '-' reads stdin")->required();
  fi->add_option("--dim", fi_dim, "dimension for CSV input (default 1)");
  fi->add_flag("--ambient-gorenstein", fi_amb, "assert the ambient ring is Gorenstein");
  fi->add_flag("--assoc-graded-cm", fi_cm, "assert the tangent cone is Cohen-Macaulay");
  fi->add_flag("--depth", fi_depth, "assert depth of the tangent cone >= dim - 1");

  std::string sw_family, sw_a = "2..12", sw_b = "..60", sw_m = "1..3";
  i64 sw_max_gen = 12, sw_bound = 40;
  auto* sw = app.add_subcommand("sweep", "exhaustively check a family");
  sw->fallthrough();
  sw->add_option("family", sw_family, "zariski | semigroup")
      ->required()
      ->check(CLI::IsMember({"zariski", "semigroup"}));
  sw->add_option("--a", sw_a, "a range, e.g. 2..12 (zariski)");
  sw->add_option("--b", sw_b, "b range, e.g. ..60 (zariski; lower end defaults to a)");
  sw->add_option("--m", sw_m, "m range, e.g. 1..3 (zariski)");
  sw->add_option("--max-gen", sw_max_gen, "multiplicity cap (semigroup)");
  sw->add_option("--bound", sw_bound, "generator cap (semigroup)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sg->parsed()) {
      const NumericalSemigroup s(gens);
      const Report rep = analyze_semigroup(s, opt_max_n);
      emit(rep, opt_json);
      if (opt_verify)
        std::cerr << "verification: " << verify_semigroup(s, rep) << " checks passed\n";
      return 0;
    }
    if (hy->parsed()) {
      const ZariskiParams p = ZariskiParams::build(hy_a, hy_b, hy_m);
      const Report rep = analyze_zariski(p, opt_max_n);
      emit(rep, opt_json);
      if (opt_verify)
        std::cerr << "verification: " << verify_zariski(p, rep) << " checks passed\n";
      return 0;
    }
    if (fi->parsed()) {
      ProfileAssumptions flags;
      flags.ambient_gorenstein = fi_amb;
      flags.assoc_graded_cm = fi_cm;
      flags.depth_at_least_dim_minus_1 = fi_depth;
      FiltrationProfile p = parse_table(slurp(fi_file), fi_dim, flags);
      if (opt_max_n > 0 && opt_max_n < p.last_index()) {
        std::vector<Int> H(p.table().begin(),
                           p.table().begin() + opt_max_n + 1);
        p = FiltrationProfile(p.dim(), std::move(H), p.flags());
      }
      const Report rep = analyze_filtration(p, fi_file == "-" ? "stdin" : fi_file);
      emit(rep, opt_json);
      return 0;
    }
    // sweep
    if (sw_family == "zariski") {
      ZariskiSweepOptions o;
      std::tie(o.a_lo, o.a_hi) = parse_range(sw_a, 2);
      std::tie(o.b_lo, o.b_hi) = parse_range(sw_b, 0);
      std::tie(o.m_lo, o.m_hi) = parse_range(sw_m, 1);
      o.verify = opt_verify;
      return emit_sweep(sweep_zariski(o), "zariski", opt_json);
    }
    SemigroupSweepOptions o;
    o.max_multiplicity = sw_max_gen;
    o.bound = sw_bound;
    o.verify = opt_verify;
    return emit_sweep(sweep_semigroups(o), "semigroup", opt_json);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == errc::verification ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
