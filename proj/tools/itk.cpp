// Command-line surface over the toolkit: every computation is a subcommand
// reading and writing the documented JSON formats.  Exit codes: 0 success,
// 1 internal or precision error, 2 input validation or usage error.
//
// ITK_PRECISION="N,M" overrides the default (20, 200) working precision for
// subcommands that build a fresh context (bezout-pm, coinvariant-order).
// Subcommands that read LambdaElement files take the ring from the file.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <itk/data_io.hpp>
#include <itk/lambda.hpp>
#include <itk/module_structure.hpp>
#include <itk/rank_engine.hpp>

namespace {

using nlohmann::json;

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

struct UsageError : itk::Error {
  using Error::Error;
};

bool is_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

long require_odd_prime(long p) {
  if (!is_odd_prime(p)) {
    throw UsageError("--p must be an odd prime, got " + std::to_string(p));
  }
  return p;
}

// ITK_PRECISION="N,M"; defaults (20, 200).
itk::PadicContext context_for(unsigned long p) {
  int n = 20;
  int m = 200;
  if (const char* env = std::getenv("ITK_PRECISION")) {
    char extra;
    if (std::sscanf(env, "%d,%d%c", &n, &m, &extra) != 2 || n < 1 || m < 1) {
      throw UsageError(std::string("ITK_PRECISION must be \"N,M\" with ") +
                       "N, M >= 1, got \"" + env + "\"");
    }
  }
  return itk::PadicContext(p, n, m);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer \"" + item + "\" in list \"" + text +
                       "\"");
    }
  }
  if (out.empty()) throw UsageError("empty integer list \"" + text + "\"");
  return out;
}

std::string format_int_list(const std::vector<int>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

json exponents_json(const itk::CyclotomicProduct& c) {
  json e = json::object();
  for (const auto& [n, a] : c.exponents()) e[std::to_string(n)] = a;
  return e;
}

json coeff_strings(const itk::IntPoly& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  if (out.empty()) out.push_back("0");
  return out;
}

// Shared by char-fine and char-pm-gcd: profile from --record or --p/--e.
struct ProfileArgs {
  std::string record_path;
  std::string e_list;
  long p = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--record", record_path,
                    "curve record JSON file to take the profile from");
    cmd->add_option("--e", e_list, "comma-separated jump list e_0,e_1,...");
    cmd->add_option("--p", p, "odd prime (with --e)");
  }

  itk::RankProfile resolve() const {
    if (!record_path.empty() && !e_list.empty()) {
      throw UsageError("--record and --e are mutually exclusive");
    }
    if (!record_path.empty()) {
      return itk::profile_from_record(itk::load_record(record_path));
    }
    if (e_list.empty()) throw UsageError("one of --record or --e is required");
    if (p == 0) throw UsageError("--e requires --p");
    return itk::profile_from_jumps(static_cast<unsigned long>(
                                       require_odd_prime(p)),
                                   parse_int_list(e_list));
  }
};

void print_ideal(const itk::CyclotomicProduct& ideal, bool as_json) {
  if (as_json) {
    json j;
    j["schema_version"] = 1;
    j["exponents"] = exponents_json(ideal);
    j["pretty"] = itk::format_ideal(ideal);
    std::cout << dump_canonical(j);
  } else {
    std::cout << itk::format_ideal(ideal) << "\n";
  }
}

int cmd_bezout(long p_in, int n, bool as_json) {
  unsigned long p = static_cast<unsigned long>(require_odd_prime(p_in));
  if (n < 1) throw UsageError("--n must be >= 1");
  itk::PadicContext ctx = context_for(p);
  itk::PlusMinusBezout bz = itk::bezout_pm(n, ctx);
  if (as_json) {
    json j;
    j["schema_version"] = 1;
    j["p"] = p;
    j["n"] = n;
    j["A"] = coeff_strings(bz.a);
    j["B"] = coeff_strings(bz.b);
    j["m"] = bz.m;
    j["identity_ok"] = true;
    std::cout << dump_canonical(j);
  } else {
    std::cout << "A = " << bz.a.to_string() << "\n"
              << "B = " << bz.b.to_string() << "\n"
              << "m = " << bz.m << "\n"
              << "identity OK\n";
  }
  return 0;
}

int cmd_weierstrass(const std::string& in_path, bool as_json) {
  itk::LambdaElement f = itk::load_lambda_element(in_path);
  itk::WeierstrassFactorization wf = itk::weierstrass_prepare(f);

  itk::LambdaElement recon =
      (wf.unit * itk::LambdaElement::from_int_poly(f.ctx(),
                                                   wf.distinguished.poly))
          .mul_pow_p(wf.mu);
  int check_prec = std::min(recon.min_precision(), f.min_precision());
  bool ok = equal_at_precision(recon, f, check_prec);

  if (as_json) {
    json j;
    j["schema_version"] = 1;
    j["mu"] = wf.mu;
    j["lambda"] = wf.lambda();
    j["P"] = coeff_strings(wf.distinguished.poly);
    j["precision"] = wf.distinguished.precision;
    j["identity_ok"] = ok;
    std::cout << dump_canonical(j);
  } else {
    std::cout << "mu = " << wf.mu << "\n"
              << "lambda = " << wf.lambda() << "\n"
              << "P = " << wf.distinguished.poly.to_string() << "\n"
              << "precision = " << wf.distinguished.precision << "\n"
              << (ok ? "identity OK\n" : "identity FAILED\n");
  }
  return ok ? 0 : 1;
}

int cmd_iota(const std::string& in_path) {
  itk::LambdaElement f = itk::load_lambda_element(in_path);
  std::cout << itk::lambda_element_to_json(itk::iota(f));
  return 0;
}

int cmd_cyclo_gcd(const std::string& f_path, const std::string& g_path,
                  int n_max, bool as_json) {
  itk::LambdaElement f = itk::load_lambda_element(f_path);
  itk::LambdaElement g = itk::load_lambda_element(g_path);
  if (!(f.ctx() == g.ctx())) {
    throw itk::ValidationError("ContextMismatch",
                               "inputs live in different rings");
  }
  if (n_max < 0) n_max = itk::default_n_max(f.ctx());
  itk::CyclotomicGcdResult r = itk::cyclotomic_gcd(f, g, n_max);
  if (as_json) {
    json j;
    j["schema_version"] = 1;
    j["exponents"] = exponents_json(r.common);
    j["pretty"] = itk::format_ideal(r.common);
    j["mu"] = r.mu_common;
    j["n_max"] = n_max;
    std::cout << dump_canonical(j);
  } else {
    std::cout << "gcd = " << itk::format_ideal(r.common) << "\n"
              << "mu = " << r.mu_common << "\n";
  }
  return 0;
}

int cmd_coinvariant(long p_in, int c, int n, bool as_json) {
  unsigned long p = static_cast<unsigned long>(require_odd_prime(p_in));
  if (c < 1) throw UsageError("--c must be >= 1");
  if (n < 0) throw UsageError("--n must be >= 0");
  itk::PadicContext ctx = context_for(p);
  itk::CoinvariantOrder co = itk::coinvariant_order(c, n, ctx);
  if (as_json) {
    json j;
    j["schema_version"] = 1;
    j["p"] = p;
    j["c"] = c;
    j["n"] = n;
    j["finite"] = co.finite;
    if (co.finite) {
      j["exponent"] = co.exponent;
      j["order"] = co.order.get_str();
    }
    std::cout << dump_canonical(j);
  } else {
    std::cout << "|Lambda/(Phi_" << c << ", omega_" << n << ")| = ";
    if (co.finite) {
      std::cout << co.order.get_str() << "\n";
    } else {
      std::cout << "infinite\n";
    }
  }
  return 0;
}

int cmd_kp_check(const std::string& record_path, const std::string& plus_path,
                 const std::string& minus_path, int n_max, bool as_json) {
  itk::CurveRecord rec = itk::load_record(record_path);
  itk::require_pm_admissible(rec);
  itk::RankProfile profile = itk::profile_from_record(rec);
  itk::LambdaElement lp_plus = itk::load_lambda_element(plus_path);
  itk::LambdaElement lp_minus = itk::load_lambda_element(minus_path);
  if (n_max < 0) n_max = itk::default_n_max(lp_plus.ctx());

  itk::KPReport rep = itk::kurihara_pollack_check(
      lp_plus, lp_minus, profile, n_max, itk::hypotheses_from_record(rec));

  if (as_json) {
    std::cout << itk::report_to_json(rep);
    return 0;
  }
  std::cout << "profile: p=" << rep.profile.p()
            << ", e = " << format_int_list(rep.profile.e()) << "\n"
            << "prediction: " << itk::format_ideal(rep.pm_gcd) << "\n";
  for (const auto& c : rep.comparisons) {
    std::cout << "n=" << c.n << ": expected " << c.expected << ", observed "
              << c.observed << (c.match ? ", match" : ", MISMATCH") << "\n";
  }
  std::cout << "mu: plus=" << rep.mu_plus << ", minus=" << rep.mu_minus
            << ", common=" << rep.mu_common << "\n"
            << "all match: " << (rep.all_match ? "yes" : "no") << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& paths, int jobs, bool as_json) {
  if (jobs < 1) throw UsageError("--jobs must be >= 1");

  struct Result {
    bool ok = false;
    std::string label;
    unsigned long p = 0;
    std::vector<int> e;
    std::string error;
    std::string detail;
  };
  std::vector<Result> results(paths.size());

  auto work = [&](size_t i) {
    Result& r = results[i];
    try {
      itk::CurveRecord rec = itk::load_record(paths[i]);
      itk::RankProfile prof = itk::profile_from_record(rec);
      r.ok = true;
      r.label = rec.label;
      r.p = rec.p;
      r.e = prof.e();
    } catch (const itk::ValidationError& e) {
      r.error = e.invariant();
      r.detail = e.detail();
    } catch (const itk::SchemaError& e) {
      r.error = "SchemaError";
      r.detail = e.what();
    } catch (const itk::IoError& e) {
      r.error = "IoError";
      r.detail = e.what();
    }
  };

  if (jobs == 1 || paths.size() <= 1) {
    for (size_t i = 0; i < paths.size(); ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    int count = std::min<size_t>(jobs, paths.size());
    for (int t = 0; t < count; ++t) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < paths.size();
             i = next.fetch_add(1)) {
          work(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  bool all_ok = true;
  if (as_json) {
    json out;
    out["schema_version"] = 1;
    json records = json::array();
    for (size_t i = 0; i < paths.size(); ++i) {
      const Result& r = results[i];
      json rec;
      rec["path"] = paths[i];
      rec["ok"] = r.ok;
      if (r.ok) {
        rec["label"] = r.label;
        rec["p"] = r.p;
        rec["e"] = r.e;
      } else {
        rec["error"] = r.error;
        rec["detail"] = r.detail;
      }
      records.push_back(rec);
      all_ok = all_ok && r.ok;
    }
    out["records"] = records;
    std::cout << dump_canonical(out);
  } else {
    for (size_t i = 0; i < paths.size(); ++i) {
      const Result& r = results[i];
      if (r.ok) {
        std::cout << paths[i] << ": OK label=" << r.label << " p=" << r.p
                  << " e=" << format_int_list(r.e) << "\n";
      } else {
        std::cout << paths[i] << ": FAIL " << r.error << ": " << r.detail
                  << "\n";
        all_ok = false;
      }
    }
  }
  return all_ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-precision Iwasawa-algebra toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json,
               "machine-readable JSON output for every subcommand");

  ProfileArgs fine_args;
  CLI::App* fine = app.add_subcommand(
      "char-fine", "fine characteristic ideal from a rank profile");
  fine_args.attach(fine);

  ProfileArgs pm_args;
  CLI::App* pm = app.add_subcommand(
      "char-pm-gcd",
      "sign-independent gcd of the plus/minus characteristic ideals");
  pm_args.attach(pm);

  long bz_p = 0;
  int bz_n = 0;
  CLI::App* bz = app.add_subcommand(
      "bezout-pm", "A*omega~_n^- + B*omega_n^+ = p^m with m from the "
                   "resultant valuation");
  bz->add_option("--p", bz_p, "odd prime")->required();
  bz->add_option("--n", bz_n, "level n >= 1")->required();

  std::string w_in;
  CLI::App* wp = app.add_subcommand(
      "weierstrass", "Weierstrass preparation of a LambdaElement file");
  wp->add_option("--in", w_in, "LambdaElement JSON file")->required();

  std::string i_in;
  CLI::App* io = app.add_subcommand(
      "iota", "apply the involution X -> (1+X)^(-1) - 1, print the result");
  io->add_option("--in", i_in, "LambdaElement JSON file")->required();

  std::string g_f, g_g;
  int g_nmax = -1;
  CLI::App* gc = app.add_subcommand(
      "cyclo-gcd", "common p-power and Phi-multiplicities of two elements");
  gc->add_option("--f", g_f, "first LambdaElement JSON file")->required();
  gc->add_option("--g", g_g, "second LambdaElement JSON file")->required();
  gc->add_option("--n-max", g_nmax, "largest Phi index probed");

  long co_p = 0;
  int co_c = 0, co_n = 0;
  CLI::App* co = app.add_subcommand(
      "coinvariant-order", "|Lambda/(Phi_c, omega_n)|");
  co->add_option("--p", co_p, "odd prime")->required();
  co->add_option("--c", co_c, "cyclotomic index c >= 1")->required();
  co->add_option("--n", co_n, "level n >= 0")->required();

  std::string kp_record, kp_plus, kp_minus;
  int kp_nmax = -1;
  CLI::App* kp = app.add_subcommand(
      "kp-check", "compare supplied L_p^+/L_p^- against the profile's "
                  "predicted gcd, index by index");
  kp->add_option("--record", kp_record, "curve record JSON file")->required();
  kp->add_option("--lp-plus", kp_plus, "L_p^+ LambdaElement file")->required();
  kp->add_option("--lp-minus", kp_minus, "L_p^- LambdaElement file")
      ->required();
  kp->add_option("--n-max", kp_nmax, "largest index compared");

  std::vector<std::string> v_paths;
  int v_jobs = 1;
  CLI::App* vr = app.add_subcommand(
      "verify-record", "validate curve record files, one status line each");
  vr->add_option("paths", v_paths, "record JSON files")->required();
  vr->add_option("--jobs", v_jobs, "worker threads (output order is fixed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*fine) {
      print_ideal(itk::fine_char_ideal(fine_args.resolve()), as_json);
      return 0;
    }
    if (*pm) {
      print_ideal(itk::pm_gcd_char(pm_args.resolve()), as_json);
      return 0;
    }
    if (*bz) return cmd_bezout(bz_p, bz_n, as_json);
    if (*wp) return cmd_weierstrass(w_in, as_json);
    if (*io) return cmd_iota(i_in);
    if (*gc) return cmd_cyclo_gcd(g_f, g_g, g_nmax, as_json);
    if (*co) return cmd_coinvariant(co_p, co_c, co_n, as_json);
    if (*kp) return cmd_kp_check(kp_record, kp_plus, kp_minus, kp_nmax,
                                 as_json);
    if (*vr) return cmd_verify(v_paths, v_jobs, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const itk::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const itk::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const itk::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const itk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
