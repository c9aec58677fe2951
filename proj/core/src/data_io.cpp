#include "itk/data_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace itk {

namespace {

using nlohmann::json;

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw SchemaError(path.string() + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw SchemaError(path.string() + ": not an object");
  return j;
}

void write_file(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw SchemaError(std::string("missing field \"") + name + "\"");
  }
  return *it;
}

long int_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_number_integer()) {
    throw SchemaError(std::string("field \"") + name + "\" must be an integer");
  }
  return f.get<long>();
}

std::string string_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string()) {
    throw SchemaError(std::string("field \"") + name + "\" must be a string");
  }
  return f.get<std::string>();
}

void check_version(const json& j, bool required) {
  auto it = j.find("schema_version");
  if (it == j.end()) {
    if (required) throw SchemaError("missing field \"schema_version\"");
    return;
  }
  if (!it->is_number_integer() || it->get<long>() != 1) {
    throw SchemaError("unsupported schema_version");
  }
}

bool is_odd_prime_ul(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

unsigned long prime_field(const json& j) {
  long p = int_field(j, "p");
  if (p < 3 || !is_odd_prime_ul(static_cast<unsigned long>(p))) {
    throw ValidationError("InvalidPrime",
                          "p must be an odd prime, got " + std::to_string(p));
  }
  return static_cast<unsigned long>(p);
}

mpz_class decimal_to_mpz(const std::string& s) {
  if (s.empty()) throw SchemaError("empty decimal string");
  size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw SchemaError("bad decimal string \"" + s + "\"");
  for (size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw SchemaError("bad decimal string \"" + s + "\"");
    }
  }
  return mpz_class(s, 10);
}

json exponents_to_json(const CyclotomicProduct& c) {
  json e = json::object();
  for (const auto& [n, a] : c.exponents()) e[std::to_string(n)] = a;
  return e;
}

CyclotomicProduct exponents_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("\"exponents\" must be an object");
  std::map<int, int> e;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key.empty() ||
        key.find_first_not_of("0123456789") != std::string::npos) {
      throw SchemaError("exponent key \"" + key +
                        "\" is not a non-negative integer");
    }
    if (!it->is_number_integer() || it->get<long>() < 0) {
      throw SchemaError("exponent of index " + key +
                        " must be a non-negative integer");
    }
    int a = static_cast<int>(it->get<long>());
    if (a > 0) e[std::stoi(key)] = a;
  }
  return CyclotomicProduct(std::move(e));
}

json cyclo_to_json_obj(const CyclotomicProduct& c) {
  return json{{"exponents", exponents_to_json(c)}};
}

std::string hypothesis_to_string(const std::optional<bool>& h) {
  if (!h) return "assumed";
  return *h ? "true" : "false";
}

std::optional<bool> hypothesis_from_string(const std::string& s) {
  if (s == "assumed") return std::nullopt;
  if (s == "true") return true;
  if (s == "false") return false;
  throw SchemaError("hypothesis value must be true/false/assumed, got \"" +
                    s + "\"");
}

std::vector<int> int_array(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_array()) {
    throw SchemaError(std::string("field \"") + name + "\" must be an array");
  }
  std::vector<int> out;
  for (const auto& v : f) {
    if (!v.is_number_integer()) {
      throw SchemaError(std::string("field \"") + name +
                        "\" must contain integers");
    }
    out.push_back(static_cast<int>(v.get<long>()));
  }
  return out;
}

}  // namespace

std::string reduction_to_string(ReductionType r) {
  switch (r) {
    case ReductionType::good_ordinary:
      return "good-ordinary";
    case ReductionType::good_supersingular:
      return "good-supersingular";
    default:
      return "other";
  }
}

ReductionType reduction_from_string(const std::string& s) {
  if (s == "good-ordinary") return ReductionType::good_ordinary;
  if (s == "good-supersingular") return ReductionType::good_supersingular;
  if (s == "other") return ReductionType::other;
  throw SchemaError("unknown reduction type \"" + s + "\"");
}

CurveRecord load_record(const std::filesystem::path& path) {
  json j = parse_file(path);
  check_version(j, true);

  CurveRecord rec;
  rec.label = string_field(j, "label");
  rec.p = prime_field(j);
  rec.a_p = int_field(j, "a_p");
  rec.reduction = reduction_from_string(string_field(j, "reduction"));
  rec.ranks = int_array(j, "ranks");

  const json& sha = field(j, "sha_finite");
  if (!sha.is_array()) {
    throw SchemaError("field \"sha_finite\" must be an array");
  }
  for (const auto& v : sha) {
    if (!v.is_boolean()) {
      throw SchemaError("field \"sha_finite\" must contain booleans");
    }
    rec.sha_finite.push_back(v.get<bool>());
  }

  const json& src = field(j, "sources");
  if (!src.is_array()) {
    throw SchemaError("field \"sources\" must be an array");
  }
  for (const auto& v : src) {
    if (!v.is_string()) {
      throw SchemaError("field \"sources\" must contain strings");
    }
    rec.sources.push_back(v.get<std::string>());
  }

  if (rec.ranks.empty()) {
    throw ValidationError("EmptyRanks", "record carries no rank data");
  }
  if (rec.sha_finite.size() != rec.ranks.size()) {
    throw ValidationError("ShaLengthMismatch",
                          "sha_finite has " +
                              std::to_string(rec.sha_finite.size()) +
                              " entries but ranks has " +
                              std::to_string(rec.ranks.size()));
  }
  // Surfaces DecreasingRank / NonIntegralJump immediately.
  profile_from_ranks(rec.p, rec.ranks);
  return rec;
}

std::string record_to_json(const CurveRecord& rec) {
  json j;
  j["schema_version"] = 1;
  j["label"] = rec.label;
  j["p"] = rec.p;
  j["a_p"] = rec.a_p;
  j["reduction"] = reduction_to_string(rec.reduction);
  j["ranks"] = rec.ranks;
  j["sha_finite"] = rec.sha_finite;
  j["sources"] = rec.sources;
  return dump_canonical(j);
}

void save_record(const CurveRecord& rec, const std::filesystem::path& path) {
  write_file(record_to_json(rec), path);
}

RankProfile profile_from_record(const CurveRecord& rec) {
  return profile_from_ranks(rec.p, rec.ranks);
}

void require_pm_admissible(const CurveRecord& rec) {
  if (rec.a_p != 0) {
    throw ApNonzero("plus/minus analysis requires a_p = 0, record \"" +
                    rec.label + "\" has a_p = " + std::to_string(rec.a_p));
  }
  if (rec.reduction != ReductionType::good_supersingular) {
    throw ValidationError("NotSupersingular",
                          "plus/minus analysis requires good supersingular "
                          "reduction, record \"" +
                              rec.label + "\" has " +
                              reduction_to_string(rec.reduction));
  }
}

Hypotheses hypotheses_from_record(const CurveRecord& rec) {
  Hypotheses h;
  bool all = true;
  for (bool b : rec.sha_finite) all = all && b;
  h.sha_finite_all_levels = all;
  h.a_p_zero = (rec.a_p == 0);
  h.reduction = reduction_to_string(rec.reduction);
  return h;
}

LambdaElement load_lambda_element(const std::filesystem::path& path) {
  json j = parse_file(path);
  check_version(j, false);

  unsigned long p = prime_field(j);
  long n = int_field(j, "N");
  long m = int_field(j, "M");
  if (n < 1 || m < 1) {
    throw ValidationError("InvalidPrecision", "N and M must be >= 1");
  }
  PadicContext ctx(p, static_cast<int>(n), static_cast<int>(m));

  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) {
    throw SchemaError("field \"coeffs\" must be an array");
  }
  if (static_cast<long>(coeffs.size()) > m) {
    throw ValidationError("TooManyCoefficients",
                          "coeffs has " + std::to_string(coeffs.size()) +
                              " entries but M = " + std::to_string(m));
  }
  std::vector<PadicInt> c;
  for (const auto& v : coeffs) {
    if (!v.is_string()) {
      throw SchemaError("field \"coeffs\" must contain decimal strings");
    }
    c.push_back(ctx.from_integer(decimal_to_mpz(v.get<std::string>())));
  }
  return LambdaElement::from_coeffs(ctx, std::move(c));
}

std::string lambda_element_to_json(const LambdaElement& f) {
  json j;
  j["schema_version"] = 1;
  j["p"] = f.ctx().p();
  j["N"] = f.ctx().precision();
  j["M"] = f.ctx().truncation();
  json coeffs = json::array();
  int top = f.degree_bound();
  for (int k = 0; k <= std::max(top, 0); ++k) {
    coeffs.push_back(f.coeff(k).residue().get_str());
  }
  j["coeffs"] = coeffs;
  return dump_canonical(j);
}

void save_lambda_element(const LambdaElement& f,
                         const std::filesystem::path& path) {
  write_file(lambda_element_to_json(f), path);
}

CyclotomicProduct cyclo_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("not an object");
  check_version(j, false);
  return exponents_from_json(field(j, "exponents"));
}

std::string cyclo_to_json(const CyclotomicProduct& c) {
  json j = cyclo_to_json_obj(c);
  j["schema_version"] = 1;
  return dump_canonical(j);
}

ElementaryModule load_module(const std::filesystem::path& path) {
  json j = parse_file(path);
  check_version(j, true);
  long free_rank = int_field(j, "free_rank");
  if (free_rank < 0) {
    throw ValidationError("NegativeFreeRank", "free_rank must be >= 0");
  }
  const json& factors = field(j, "factors");
  if (!factors.is_array()) {
    throw SchemaError("field \"factors\" must be an array");
  }
  std::vector<CyclotomicProduct> fs;
  for (const auto& f : factors) {
    if (!f.is_object()) throw SchemaError("factors must be objects");
    fs.push_back(exponents_from_json(field(f, "exponents")));
  }
  try {
    return ElementaryModule(static_cast<int>(free_rank), std::move(fs));
  } catch (const UnsupportedShape& e) {
    throw ValidationError("UnitFactor", e.what());
  }
}

std::string module_to_json(const ElementaryModule& m) {
  json j;
  j["schema_version"] = 1;
  j["free_rank"] = m.free_rank();
  json factors = json::array();
  for (const auto& f : m.factors()) factors.push_back(cyclo_to_json_obj(f));
  j["factors"] = factors;
  return dump_canonical(j);
}

void save_module(const ElementaryModule& m,
                 const std::filesystem::path& path) {
  write_file(module_to_json(m), path);
}

namespace {

json profile_to_json_obj(const RankProfile& profile) {
  json j;
  j["p"] = profile.p();
  j["e"] = profile.e();
  j["provenance"] = (profile.provenance() == RankProfile::Provenance::ranks)
                        ? "ranks"
                        : "direct";
  return j;
}

RankProfile profile_from_json_obj(const json& j) {
  unsigned long p = prime_field(j);
  std::vector<int> e = int_array(j, "e");
  std::string prov = string_field(j, "provenance");
  if (prov != "ranks" && prov != "direct") {
    throw SchemaError("provenance must be \"ranks\" or \"direct\"");
  }
  return RankProfile(p, std::move(e),
                     prov == "ranks" ? RankProfile::Provenance::ranks
                                     : RankProfile::Provenance::direct);
}

}  // namespace

RankProfile profile_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("not an object");
  check_version(j, true);
  return profile_from_json_obj(j);
}

std::string profile_to_json(const RankProfile& profile) {
  json j = profile_to_json_obj(profile);
  j["schema_version"] = 1;
  return dump_canonical(j);
}

std::string report_to_json(const KPReport& rep) {
  json j;
  j["schema_version"] = 1;
  j["profile"] = profile_to_json_obj(rep.profile);
  j["s"] = rep.s;
  j["r_pm"] = json{{"r_plus", rep.r_pm.r_plus},
                   {"r_minus", rep.r_pm.r_minus},
                   {"ambiguous", rep.r_pm.ambiguous}};
  j["fine_char"] = cyclo_to_json_obj(rep.fine_char);
  j["pm_gcd"] = cyclo_to_json_obj(rep.pm_gcd);
  j["n_max"] = rep.n_max;
  json cmp = json::array();
  for (const auto& c : rep.comparisons) {
    cmp.push_back(json{{"n", c.n},
                       {"expected", c.expected},
                       {"observed", c.observed},
                       {"match", c.match}});
  }
  j["comparisons"] = cmp;
  j["mu"] = json{{"plus", rep.mu_plus},
                 {"minus", rep.mu_minus},
                 {"common", rep.mu_common}};
  j["all_match"] = rep.all_match;
  j["hypotheses"] =
      json{{"sha_finite_all_levels",
            hypothesis_to_string(rep.hypotheses.sha_finite_all_levels)},
           {"a_p_zero", hypothesis_to_string(rep.hypotheses.a_p_zero)},
           {"reduction", rep.hypotheses.reduction}};
  return dump_canonical(j);
}

KPReport load_report(const std::filesystem::path& path) {
  json j = parse_file(path);
  check_version(j, true);

  const json& prof = field(j, "profile");
  if (!prof.is_object()) throw SchemaError("\"profile\" must be an object");

  const json& rpm = field(j, "r_pm");
  if (!rpm.is_object()) throw SchemaError("\"r_pm\" must be an object");
  PMMultiplicities pm;
  pm.r_plus = int_array(rpm, "r_plus");
  pm.r_minus = int_array(rpm, "r_minus");
  const json& amb = field(rpm, "ambiguous");
  if (!amb.is_array()) throw SchemaError("\"ambiguous\" must be an array");
  for (const auto& v : amb) {
    if (!v.is_boolean()) throw SchemaError("\"ambiguous\" must hold booleans");
    pm.ambiguous.push_back(v.get<bool>());
  }

  const json& fine = field(j, "fine_char");
  const json& gcd = field(j, "pm_gcd");
  const json& mu = field(j, "mu");
  const json& hyp = field(j, "hypotheses");
  if (!mu.is_object() || !hyp.is_object()) {
    throw SchemaError("\"mu\" and \"hypotheses\" must be objects");
  }

  KPReport rep{profile_from_json_obj(prof),
               int_array(j, "s"),
               std::move(pm),
               exponents_from_json(field(fine, "exponents")),
               exponents_from_json(field(gcd, "exponents")),
               static_cast<int>(int_field(j, "n_max")),
               {},
               static_cast<int>(int_field(mu, "plus")),
               static_cast<int>(int_field(mu, "minus")),
               static_cast<int>(int_field(mu, "common")),
               false,
               Hypotheses{}};

  const json& cmp = field(j, "comparisons");
  if (!cmp.is_array()) throw SchemaError("\"comparisons\" must be an array");
  for (const auto& c : cmp) {
    if (!c.is_object()) throw SchemaError("comparison entries are objects");
    IndexComparison ic;
    ic.n = static_cast<int>(int_field(c, "n"));
    ic.expected = static_cast<int>(int_field(c, "expected"));
    ic.observed = static_cast<int>(int_field(c, "observed"));
    const json& mf = field(c, "match");
    if (!mf.is_boolean()) throw SchemaError("\"match\" must be a boolean");
    ic.match = mf.get<bool>();
    rep.comparisons.push_back(ic);
  }

  const json& am = field(j, "all_match");
  if (!am.is_boolean()) throw SchemaError("\"all_match\" must be a boolean");
  rep.all_match = am.get<bool>();

  rep.hypotheses.sha_finite_all_levels =
      hypothesis_from_string(string_field(hyp, "sha_finite_all_levels"));
  rep.hypotheses.a_p_zero =
      hypothesis_from_string(string_field(hyp, "a_p_zero"));
  rep.hypotheses.reduction = string_field(hyp, "reduction");
  return rep;
}

void save_report(const KPReport& rep, const std::filesystem::path& path) {
  write_file(report_to_json(rep), path);
}

}  // namespace itk
