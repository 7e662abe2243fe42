// Drives the installed binary end to end through a shell: text and JSON
// output, stdin tables, sweeps, verification, and every exit-code path.
// Usage: test_cli <path-to-binary>

#include <normcone/report.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& label) {
  if (!ok) {
    std::cout << "FAIL: " << label << "\n";
    ++failures;
  }
}

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr merged
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* f = popen((cmd + " 2>&1").c_str(), "r");
  if (!f) {
    std::perror("popen");
    std::exit(1);
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cout << "usage: test_cli <path-to-binary>\n";
    return 1;
  }
  const std::string bin = argv[1];

  {
    const RunResult r = run(bin + " semigroup 4 6 7");
    expect(r.code == 0, "semigroup exit code");
    expect(contains(r.out, "instance: semigroup <4,6,7>"), "semigroup instance line");
    expect(contains(r.out, "e0: 4"), "semigroup e0");
    expect(contains(r.out, "e1: 5"), "semigroup e1");
    expect(contains(r.out, "rbar: 3"), "semigroup rbar");
    expect(contains(r.out, "h_vector: (1,2,0,1)"), "semigroup h-vector");
    expect(contains(r.out, "gorenstein: fails"), "semigroup verdict");
  }

  {
    const RunResult r = run(bin + " --json semigroup 4 6 7");
    expect(r.code == 0, "semigroup json exit code");
    const auto j = nlohmann::json::parse(r.out);
    expect(j.at("schema") == normcone::kReportSchema, "semigroup json schema");
    expect(j.at("invariants").at("e1") == 5, "semigroup json e1");
    const normcone::Report rep = normcone::Report::from_json(j);
    expect(rep.gorenstein.status == normcone::Status::fails, "semigroup json verdict");
    expect(rep.to_json() == j, "semigroup json round-trip");
  }

  {
    // global flags may follow the subcommand
    const RunResult r = run(bin + " semigroup 4 6 7 --verify");
    expect(r.code == 0, "semigroup verify exit code");
    expect(contains(r.out, "verification: 3 checks passed"), "semigroup verify note");
  }

  {
    const RunResult r = run(bin + " semigroup 2 4");
    expect(r.code == 2, "gcd error exit code");
    expect(contains(r.out, "GcdNotOne"), "gcd error name");
  }

  {
    const RunResult r = run(bin + " semigroup 3 4 --max-n 4");
    expect(r.code == 2, "window too small exit code");
    expect(contains(r.out, "RangeTooSmall"), "window too small error name");
  }

  {
    const RunResult r = run(bin + " hypersurface --a 3 --b 5 --verify --json");
    expect(r.code == 0, "hypersurface exit code");
    // stderr is unbuffered, so the verification note may precede the report
    const auto lo = r.out.find('{');
    const auto hi = r.out.rfind('}');
    const auto j = nlohmann::json::parse(r.out.substr(lo, hi - lo + 1));
    expect(j.at("invariants").at("rbar") == 3, "hypersurface rbar");
    expect(j.at("verdicts").at("gorenstein").at("status") == "fails",
           "hypersurface verdict");
    expect(j.at("verdicts").at("ring_class") == "not_gorenstein",
           "hypersurface ring class");
    expect(contains(r.out, "checks passed"), "hypersurface verify note");
    const normcone::Report rep = normcone::Report::from_json(j);
    expect(rep.e1 == 4, "hypersurface e1 via report");
  }

  {
    const RunResult r = run(bin + " hypersurface --a 1 --b 5");
    expect(r.code == 2, "bad parameter exit code");
  }

  {
    const RunResult r = run(bin + " hypersurface --a 3");
    expect(r.code == 2, "missing option exit code");
  }

  {
    const std::string table = "/tmp/normcone_cli_table.json";
    std::ofstream out(table);
    out << R"({"dim": 1, "H": [0,1,2,3,5,7,9,11],)"
        << R"( "flags": {"ambient_gorenstein": true, "assoc_graded_cm": true}})";
    out.close();
    const RunResult r = run(bin + " filtration --file " + table);
    expect(r.code == 0, "filtration json-file exit code");
    expect(contains(r.out, "instance: filtration " + table), "filtration source");
    expect(contains(r.out, "e0: 2"), "filtration e0");
    expect(contains(r.out, "postulation: 2"), "filtration postulation");
    expect(contains(r.out, "h_vector: (1,0,0,1)"), "filtration h-vector");
    expect(contains(r.out, "gorenstein: holds"), "filtration verdict");
    std::remove(table.c_str());
  }

  {
    const RunResult r = run(
        "printf '0,0\\n1,1\\n2,3\\n3,6\\n4,9\\n5,12\\n6,15\\n' | " + bin +
        " filtration --file - --ambient-gorenstein --assoc-graded-cm --depth");
    expect(r.code == 0, "filtration stdin exit code");
    expect(contains(r.out, "instance: filtration stdin"), "filtration stdin source");
    expect(contains(r.out, "e0: 3"), "filtration stdin e0");
    expect(contains(r.out, "rbar: 2"), "filtration stdin rbar");
    expect(contains(r.out, "gorenstein: holds"), "filtration stdin verdict");
  }

  {
    // --max-n truncates the table before analysis: the shortened range no
    // longer witnesses a stabilized h-vector
    const RunResult r = run(
        "printf '0,0\\n1,1\\n2,2\\n3,3\\n4,5\\n5,7\\n6,9\\n7,11\\n' | " + bin +
        " filtration --file - --ambient-gorenstein --assoc-graded-cm --max-n 5");
    expect(r.code == 0, "filtration truncation exit code");
    expect(contains(r.out, "gorenstein: inapplicable"), "filtration truncation verdict");
    expect(contains(r.out, "increments do not stabilize"), "filtration truncation reason");
  }

  {
    const RunResult r = run("printf '0,0\\n2,3\\n' | " + bin + " filtration --file -");
    expect(r.code == 2, "csv gap exit code");
    expect(contains(r.out, "ParseError"), "csv gap error name");
  }

  {
    const RunResult r = run(bin + " filtration --file /nonexistent.csv");
    expect(r.code == 2, "missing file exit code");
    expect(contains(r.out, "cannot open"), "missing file message");
  }

  {
    const RunResult r = run(bin + " sweep zariski --a 2..4 --b ..12 --m 1..1");
    expect(r.code == 0, "zariski sweep exit code");
    expect(contains(r.out, "family: zariski"), "zariski sweep family");
    expect(contains(r.out, "instances: 30"), "zariski sweep count");
    expect(contains(r.out, "issues: 0"), "zariski sweep issues");
  }

  {
    const RunResult r = run(bin + " --json sweep semigroup --max-gen 3 --bound 9 --verify");
    expect(r.code == 0, "semigroup sweep exit code");
    const auto j = nlohmann::json::parse(r.out);
    expect(j.at("schema") == "normcone.sweep.v1", "semigroup sweep schema");
    expect(j.at("family") == "semigroup", "semigroup sweep family");
    expect(j.at("issue_count") == 0, "semigroup sweep issues");
    expect(j.at("instances").get<long long>() >= 8, "semigroup sweep count");
    expect(j.contains("symmetric"), "semigroup sweep symmetric field");
  }

  {
    const RunResult r = run(bin + " sweep nonsense");
    expect(r.code == 2, "unknown family exit code");
  }

  {
    const RunResult r = run(bin + " sweep zariski --a 4..2");
    expect(r.code == 2, "inverted range exit code");
  }

  {
    const RunResult r = run(bin + " --help");
    expect(r.code == 0, "help exit code");
    expect(contains(r.out, "normal filtration"), "help text");
  }

  {
    const RunResult r = run(bin);
    expect(r.code == 2, "missing subcommand exit code");
  }

  if (failures == 0) std::cout << "test_cli: all checks passed\n";
  return failures == 0 ? 0 : 1;
}
