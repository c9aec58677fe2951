#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "itk/lambda.hpp"
#include "itk/module_structure.hpp"
#include "itk/rank_engine.hpp"

namespace itk {

// All readers reject documents that do not match the documented shapes
// (SchemaError) or that violate a named invariant (ValidationError).  All
// writers emit canonical JSON: two-space indent, lexicographically sorted
// keys, big integers as decimal strings, trailing newline.  Output is
// byte-stable across runs.

enum class ReductionType { good_ordinary, good_supersingular, other };

std::string reduction_to_string(ReductionType r);
ReductionType reduction_from_string(const std::string& s);

struct CurveRecord {
  std::string label;
  unsigned long p = 0;
  long a_p = 0;
  ReductionType reduction = ReductionType::other;
  std::vector<int> ranks;        // one entry per tower level, starting at Q
  std::vector<bool> sha_finite;  // aligned with ranks
  std::vector<std::string> sources;
};

CurveRecord load_record(const std::filesystem::path& path);
std::string record_to_json(const CurveRecord& rec);
void save_record(const CurveRecord& rec, const std::filesystem::path& path);

// Derived profile; throws the profile validation errors.
RankProfile profile_from_record(const CurveRecord& rec);

// Plus/minus operations require a_p = 0 (ApNonzero otherwise) and good
// supersingular reduction (ValidationError("NotSupersingular")).
void require_pm_admissible(const CurveRecord& rec);

Hypotheses hypotheses_from_record(const CurveRecord& rec);

LambdaElement load_lambda_element(const std::filesystem::path& path);
std::string lambda_element_to_json(const LambdaElement& f);
void save_lambda_element(const LambdaElement& f,
                         const std::filesystem::path& path);

CyclotomicProduct cyclo_from_json_string(const std::string& text);
std::string cyclo_to_json(const CyclotomicProduct& c);

ElementaryModule load_module(const std::filesystem::path& path);
std::string module_to_json(const ElementaryModule& m);
void save_module(const ElementaryModule& m,
                 const std::filesystem::path& path);

RankProfile profile_from_json_string(const std::string& text);
std::string profile_to_json(const RankProfile& profile);

KPReport load_report(const std::filesystem::path& path);
std::string report_to_json(const KPReport& rep);
void save_report(const KPReport& rep, const std::filesystem::path& path);

}  // namespace itk
