#pragma once

// Exhaustive ground-truth solvers for every manipulation, bribery and
// campaign problem. They are the only solvers for the NP-hard variants and
// the reference the polynomial algorithms are tested against.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bfv/problems.hpp"

namespace bfv {

/// Caps checked before any enumeration starts.
struct DeskScaleGuard {
    int max_candidates = 4;
    int max_voters = 5;
    Weight max_budget = 3;
    Weight max_weight = 1'000'000;
    double ceiling = 1e8;  // winner evaluations

    /// Parses "m=6,n=8,budget=4,weight=10,ceiling=1e9"; omitted keys keep
    /// their defaults.
    static DeskScaleGuard parse(const std::string& spec);
    /// A guard that admits anything (for tests that size instances by hand).
    static DeskScaleGuard unlimited();
};

class OracleRefused : public std::runtime_error {
public:
    OracleRefused(std::string cap, const std::string& what) : std::runtime_error(what), cap_(std::move(cap)) {}
    const std::string& cap() const { return cap_; }

private:
    std::string cap_;
};

struct OracleOptions {
    DeskScaleGuard guard;
    /// When false the oracle enumerates every complete ballot assignment and
    /// evaluates it through the public winner functions, with neither
    /// symmetry pruning nor early termination.
    bool pruning = true;
};

/// Number of distinct ballots over m candidates: m! for Bucklin,
/// sum_j C(m,j) j! for fallback. Saturates at UINT64_MAX.
std::uint64_t ballot_count(int num_candidates, ElectionKind kind);

/// Every ballot in canonical order: lexicographic permutations for
/// Bucklin; for fallback, by approved-part length, then lexicographically.
void for_each_ballot(int num_candidates, ElectionKind kind, const std::function<void(const Ballot&)>& visit);
std::vector<Ballot> enumerate_ballots(int num_candidates, ElectionKind kind, const DeskScaleGuard& guard = {});

/// Upper bounds on winner evaluations, used by the guard.
double manipulation_search_size(const ManipulationInstance& instance);
double bribery_search_size(const BriberyInstance& instance);
double campaign_search_size(const CampaignInstance& instance);

ManipulationAnswer brute_manipulation(const ManipulationInstance& instance, const OracleOptions& options = {});
BriberyAnswer brute_bribery(const BriberyInstance& instance, const OracleOptions& options = {});
CampaignAnswer brute_campaign(const CampaignInstance& instance, const OracleOptions& options = {});

/// Extension bribery restricted to appending only the designated candidate
/// at the end of approved parts.
CampaignAnswer brute_extension_designated_only(const CampaignInstance& instance, const OracleOptions& options = {});

}  // namespace bfv
