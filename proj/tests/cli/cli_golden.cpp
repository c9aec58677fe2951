// Golden-file runner for the itk command line tool.
//
//   cli_golden <itk-binary> <source-root> [--write]
//
// Every case runs twice from the source root and must produce byte-identical
// output matching tests/golden/<name>.golden with the expected exit code.
// JSON outputs are additionally validated against the shipped schemas.
// --write regenerates the golden files instead of comparing.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../support/schema_check.hpp"

namespace {

struct Case {
  std::string name;
  std::string args;
  int expect_code = 0;
  std::string schema;  // validate stdout against schemas/<schema>.schema.json
  std::string env;     // optional environment prefix
};

const std::vector<Case> kCases = {
    {"char-fine-text", "char-fine --p 3 --e 2,0,3", 0, "", ""},
    {"char-fine-json", "--json char-fine --p 3 --e 2,0,3", 0,
     "char_ideal_output", ""},
    {"char-fine-record", "char-fine --record tests/fixtures/synthetic1.json",
     0, "", ""},
    {"char-pm-gcd-text", "char-pm-gcd --p 3 --e 2,0,1", 0, "", ""},
    {"char-pm-gcd-json",
     "--json char-pm-gcd --record tests/fixtures/synthetic-rank2-p5.json", 0,
     "char_ideal_output", ""},
    {"bezout-text", "bezout-pm --p 3 --n 1", 0, "", ""},
    {"bezout-json", "--json bezout-pm --p 3 --n 2", 0, "bezout_output", ""},
    {"bezout-env", "--json bezout-pm --p 5 --n 3", 0, "bezout_output",
     "ITK_PRECISION=32,400"},
    {"bezout-exhausted", "bezout-pm --p 5 --n 3", 1, "", ""},
    {"weierstrass-text", "weierstrass --in tests/fixtures/wdemo.json", 0, "",
     ""},
    {"weierstrass-json", "--json weierstrass --in tests/fixtures/wdemo.json",
     0, "weierstrass_output", ""},
    {"iota-json", "iota --in tests/fixtures/iota_in.json", 0,
     "lambda_element", ""},
    {"cyclo-gcd-text",
     "cyclo-gcd --f tests/fixtures/gcd_f.json --g tests/fixtures/gcd_g.json",
     0, "", ""},
    {"cyclo-gcd-json",
     "--json cyclo-gcd --f tests/fixtures/gcd_f.json --g "
     "tests/fixtures/gcd_g.json --n-max 2",
     0, "gcd_output", ""},
    {"coinvariant-text", "coinvariant-order --p 3 --c 2 --n 1", 0, "", ""},
    {"coinvariant-json", "--json coinvariant-order --p 3 --c 2 --n 1", 0,
     "coinvariant_output", ""},
    {"coinvariant-infinite-json", "--json coinvariant-order --p 3 --c 1 --n 2",
     0, "coinvariant_output", ""},
    {"kp-text",
     "kp-check --record tests/fixtures/synthetic1.json --lp-plus "
     "tests/fixtures/lp_plus_synthetic1.json --lp-minus "
     "tests/fixtures/lp_minus_synthetic1.json --n-max 3",
     0, "", ""},
    {"kp-json",
     "--json kp-check --record tests/fixtures/synthetic1.json --lp-plus "
     "tests/fixtures/lp_plus_synthetic1.json --lp-minus "
     "tests/fixtures/lp_minus_synthetic1.json --n-max 3",
     0, "kp_report", ""},
    {"verify-text",
     "verify-record tests/fixtures/synthetic1.json "
     "tests/fixtures/curve11a1-p5.json "
     "tests/fixtures/synthetic-rank2-p5.json",
     0, "", ""},
    {"verify-mixed-json",
     "--json verify-record tests/fixtures/synthetic1.json "
     "tests/fixtures/bad.json tests/fixtures/bad-jump.json --jobs 2",
     2, "verify_output", ""},
    {"usage-missing-profile", "char-fine --p 3", 2, "", ""},
    {"usage-bad-prime", "bezout-pm --p 4 --n 1", 2, "", ""},
    {"record-decreasing", "char-fine --record tests/fixtures/bad.json", 2, "",
     ""},
};

std::string run_cmd(const std::string& cmd, int* code) {
  FILE* f = popen((cmd + " 2>&1").c_str(), "r");
  if (!f) {
    *code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, k);
  int st = pclose(f);
  *code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

std::string read_file(const std::string& path, bool* ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    *ok = false;
    return "";
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  *ok = true;
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_golden <itk-binary> <source-root> [--write]\n";
    return 2;
  }
  const std::string itk = argv[1];
  const std::string root = argv[2];
  const bool write = argc > 3 && std::string(argv[3]) == "--write";

  int failures = 0;
  for (const Case& c : kCases) {
    std::string cmd = "cd " + root + " && ";
    if (!c.env.empty()) cmd += c.env + " ";
    cmd += itk + " " + c.args;

    int code1 = 0, code2 = 0;
    std::string out1 = run_cmd(cmd, &code1);
    std::string out2 = run_cmd(cmd, &code2);

    std::string problem;
    if (code1 != c.expect_code) {
      problem = "exit code " + std::to_string(code1) + ", expected " +
                std::to_string(c.expect_code);
    } else if (out1 != out2 || code1 != code2) {
      problem = "output differs between two runs";
    }

    const std::string golden_path =
        root + "/tests/golden/" + c.name + ".golden";
    if (problem.empty() && write) {
      std::ofstream out(golden_path, std::ios::binary);
      out << out1;
      if (!out) problem = "cannot write " + golden_path;
    } else if (problem.empty()) {
      bool ok = false;
      std::string expect = read_file(golden_path, &ok);
      if (!ok) {
        problem = "missing golden file " + golden_path;
      } else if (out1 != expect) {
        problem = "output differs from " + golden_path + "\n--- got ---\n" +
                  out1 + "--- want ---\n" + expect;
      }
    }

    if (problem.empty() && !c.schema.empty()) {
      bool ok = false;
      std::string schema_text =
          read_file(root + "/schemas/" + c.schema + ".schema.json", &ok);
      if (!ok) {
        problem = "missing schema " + c.schema;
      } else {
        try {
          nlohmann::json schema = nlohmann::json::parse(schema_text);
          nlohmann::json doc = nlohmann::json::parse(out1);
          std::string v = itk::test::schema_violation(schema, doc);
          if (!v.empty()) problem = "schema violation: " + v;
        } catch (const std::exception& e) {
          problem = std::string("schema validation error: ") + e.what();
        }
      }
    }

    if (problem.empty()) {
      std::cout << "ok: " << c.name << (write ? " (written)" : "") << "\n";
    } else {
      std::cout << "FAIL: " << c.name << ": " << problem << "\n";
      ++failures;
    }
  }

  if (failures) {
    std::cout << failures << " golden case(s) failed\n";
    return 1;
  }
  std::cout << "all " << kCases.size() << " golden cases passed\n";
  return 0;
}
