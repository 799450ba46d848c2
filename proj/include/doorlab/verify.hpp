#pragma once

// Empirical verification of the classification and equation-solution claims
// at finite scale. Each claim id maps to one exhaustive check.

#include "doorlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace doorlab {

struct ClaimReport {
  std::string id;
  std::string title;
  bool holds = true;
  nlohmann::json details = nlohmann::json::object();
  double elapsed_seconds = 0.0;
};

struct VerifyOptions {
  int workers = 0;
  // Restrict a claim to one ground-set size / value set where it makes sense.
  std::optional<int> n;
  std::optional<std::vector<ExactComplex>> values;
};

// thm1, lemma1-2, occ-converse, thm2, thm4, thm3, part2, lemma3-s, remarks, infra
const std::vector<std::string>& claim_ids();

// Throws DomainError for an unknown id or options the claim cannot honor.
ClaimReport verify_claim(const std::string& id, const VerifyOptions& opts = {});

nlohmann::json to_json(const ClaimReport& r);

} // namespace doorlab
