#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "vdh/element.hpp"

namespace vdh {

struct PropertyResult {
  std::string name;
  std::size_t samples = 0;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct CampaignConfig {
  std::uint64_t seed = 0;
  std::size_t group_axiom_triples = 200;
  std::size_t confluence_trials = 200;
  std::size_t confluence_expansions = 5;
  std::size_t action_pairs = 100;
  std::size_t action_points = 16;
  std::size_t pi_pairs = 200;
  std::size_t pi_section_samples = 100;
  std::size_t retraction_samples = 200;
  std::size_t periodicity_samples = 200;
  std::size_t sample_steps = 8;
};

PropertyResult run_group_axioms(const std::shared_ptr<const LocalGroup>& g,
                                const CampaignConfig& cfg);
PropertyResult run_reduction_confluence(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg);
PropertyResult run_action_homomorphism(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg);
PropertyResult run_pi_homomorphism(const std::shared_ptr<const LocalGroup>& g,
                                   const CampaignConfig& cfg);
PropertyResult run_pi_section_roundtrip(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg);
/// r(iota(h)) == h for every h, exhaustively.
PropertyResult run_retract_iota(const std::shared_ptr<const LocalGroup>& g);
/// Appending iota(s) changes the retract by at most right multiplication
/// by s (products read left to right): retract(iota(s) after g) is
/// retract(g) or mul(s, retract(g)).
PropertyResult run_retraction_law_iota(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg);
/// Appending an unlabeled element leaves the retract unchanged.
PropertyResult run_retraction_law_unlabeled(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg);
/// The normalized period length is preserved by the action.
PropertyResult run_periodicity(const std::shared_ptr<const LocalGroup>& g,
                               const CampaignConfig& cfg);

/// The full suite in a fixed order.
std::vector<PropertyResult> run_axioms_campaign(
    const std::shared_ptr<const LocalGroup>& g, const CampaignConfig& cfg);

/// Deterministic eventually periodic point.
CantorPoint sample_point(int arity, std::mt19937_64& rng,
                         std::size_t max_prefix = 6,
                         std::size_t max_period = 4);

}  // namespace vdh
