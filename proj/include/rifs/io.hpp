#pragma once

#include "rifs/approximation.hpp"
#include "rifs/deciders.hpp"
#include "rifs/harness.hpp"
#include "rifs/rearrangement.hpp"
#include "rifs/orlicz.hpp"
#include "rifs/space.hpp"
#include "rifs/step_function.hpp"
#include "rifs/verdict.hpp"
#include "rifs/weight.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rifs::io {

using json = nlohmann::json;

// Non-finite values travel as the strings "inf", "-inf" and "nan".
json number(double v);
double to_number(const json& j, const char* field);

// Reads inline JSON (text starting with '{' or '[') or a file path.
json load(const std::string& source);

json to_json(const StepFunction& x);
StepFunction step_function_from_json(const json& j);

json to_json(const WeightSpec& w);
WeightSpec weight_from_json(const json& j);

json to_json(const OrliczSpec& psi);
OrliczSpec orlicz_from_json(const json& j);

json to_json(const SpaceHandle& space);
SpaceHandle space_from_json(const json& j);

Domain domain_from_json(const json& j);
json to_json(Domain alpha);

// Candidate sets: a bare array of step functions, or
// {"members": [...], "hull": bool, "rearrangement_closed": bool}.
CandidateSet candidates_from_json(const json& j, bool hull_override = false);

json to_json(const MaximalCurve& curve);
json to_json(const Verdict& v);
json to_json(const ProjectionResult& r);
json to_json(const ExperimentReport& r);
json to_json(const ProbeReport& r);
json to_json(const std::vector<DukmRow>& rows);
json to_json(const FundamentalLimits& r);
json to_json(const DerivedWeight& d);

// Shortest round-trip decimal text.
std::string format_number(double v);

enum class Curve { star, starstar };

// Two-column CSV "t,value" sampling x* or x** on a nondecreasing grid.
std::string emit_curve(const StepFunction& x, Curve what, const std::vector<double>& grid);

std::string dukm_csv(const std::vector<DukmRow>& rows);
std::string trace_csv(const ProjectionResult& r);

} // namespace rifs::io
