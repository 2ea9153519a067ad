#pragma once

#include <string>

#include "json.hpp"
#include "strongq/certificates.hpp"
#include "strongq/lifting.hpp"
#include "strongq/qbounds.hpp"
#include "strongq/spectra.hpp"
#include "strongq/strong_properties.hpp"

namespace strongq {

using Json = nlohmann::ordered_json;

// Deterministic float rendering (%.17g round-trips doubles exactly);
// infinities encode as the strings "inf"/"-inf".
Json json_number(double v);
double number_from_json(const Json& j);

Json to_json(const StrongPropertyReport& rep);
// Self-contained report: embeds the verified matrix and graph so that the
// verdict can be rechecked from the JSON alone.
Json verification_report(const StrongPropertyReport& rep, const ExactMatrix& a,
                         const Graph& g);
Json verification_report(const StrongPropertyReport& rep, const Eigen::MatrixXd& a,
                         const Graph& g);

// Re-runs the verification embedded in a report; returns the fresh report
// and throws CorpusIntegrityError if verdict, p or rank changed.
StrongPropertyReport recheck_report(const Json& report);

Json to_json(const SpectralData& sd, bool full = false);
Json to_json(const Bound& b);
Json to_json(const BoundReport& rep);
Json to_json(const Classification& c);
Json to_json(const GershgorinReport& rep);
Json to_json(const LiftResult& res);

}  // namespace strongq
