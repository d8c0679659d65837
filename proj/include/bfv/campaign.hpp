#pragma once

// Swap bribery and extension bribery.

#include <utility>
#include <vector>

#include "bfv/oracle.hpp"
#include "bfv/problems.hpp"

namespace bfv {

/// Minimum total price of adjacent swaps turning `source` into `target`:
/// the sum of prices(x, y) over pairs with x above y in `source` and y
/// above x in `target`.
Weight swap_sequence_cost(const std::vector<CandidateId>& source, const std::vector<CandidateId>& target,
                          const SwapPriceFunction& prices);

/// A cheapest swap sequence (each inverted pair exchanged exactly once).
std::vector<std::pair<CandidateId, CandidateId>> swap_sequence(std::vector<CandidateId> source,
                                                               const std::vector<CandidateId>& target);

/// Greedy extension search: for each round s, the voters approving at most
/// s-1 candidates and not yet approving p are sorted by single-extension
/// cost and p is appended to every prefix of that list in turn.
CampaignAnswer fallback_cueb(const CampaignInstance& instance);

/// The nonunique-winner variant of the greedy search, run for every rival.
CampaignAnswer fallback_dueb(const CampaignInstance& instance);

/// CUEB/DUEB via the greedy search, every other problem via the oracle.
CampaignAnswer solve_campaign(const CampaignInstance& instance, const OracleOptions& options = {});

}  // namespace bfv
