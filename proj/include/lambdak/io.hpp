#pragma once

// JSON encodings of modules, graded modules and computation reports.
//
// Module file:
//   {"algebra": {"presentation": "<quiver spec text>"},
//    "dims": [..], "arrows": {"<label>": [[row], ...], ...}}
// Graded module file adds "graded": true and replaces dims/arrows with
//   "slices": [{"degree": d, "dims": [..]}, ...],
//   "arrows": [{"arrow": "<label>", "degree": d, "matrix": [[row], ...]}, ...]
// where an arrow entry maps degree d to degree d + deg(arrow).

#include <string>

#include <json.hpp>

#include "lambdak/ar.hpp"
#include "lambdak/classify.hpp"
#include "lambdak/gorenstein.hpp"
#include "lambdak/graded.hpp"
#include "lambdak/module.hpp"
#include "lambdak/tilting.hpp"

namespace lambdak {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json algebra_reference(const AlgebraPtr& a);
/// Builds the referenced algebra, or checks it against `known` and returns that.
AlgebraPtr algebra_from_reference(const Json& j, const AlgebraPtr& known = nullptr);

Json to_json(const Representation& m);
Representation module_from_json(const Json& j, const AlgebraPtr& known = nullptr);

Json to_json(const GradedModule& x);
GradedModule graded_module_from_json(const Json& j, const AlgebraPtr& known = nullptr);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Json algebra_summary(const AlgebraPtr& a);
Json to_json(const GorensteinCertificate& c);
Json to_json(const GpVerdict& v);
Json to_json(const ARQuiver& q);
Json to_json(const AlmostSplitSequence& s);
Json to_json(const CMReport& r);
Json to_json(const TiltingCandidate& t);
Json to_json(const EndComparison& e);
Json to_json(const SyzygyPeriodCheck& s);
Json to_json(const HomVanishing& h);
Json to_json(const ShortExactCheck& s);
Json to_json(const SequencePairCheck& s);

}  // namespace lambdak
