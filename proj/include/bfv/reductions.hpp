#pragma once

// Instance generators from Partition, X3C and single-vote swap bribery,
// with brute-force deciders for the source problems.

#include <array>
#include <string>
#include <vector>

#include "bfv/problems.hpp"

namespace bfv {

struct PartitionInstance {
    std::vector<Weight> values;

    /// Throws unless values are positive with an even sum; `min_value`
    /// raises the lower bound.
    void validate(Weight min_value = 1) const;
    Weight half() const;
};

/// Tries all 2^k subsets.
bool partition_has_solution(const PartitionInstance& src);

struct X3CInstance {
    int m = 1;                             // base set {1, .., 3m}
    std::vector<std::array<int, 3>> sets;  // 1-based elements

    void validate() const;
    /// Number of sets containing each element, indexed 0..3m-1.
    std::vector<int> occurrences() const;
};

bool x3c_has_cover(const X3CInstance& src);

struct SingleVoteSwapInstance {
    std::vector<std::string> candidates;
    std::vector<CandidateId> vote;  // full ranking
    SwapPriceFunction prices;
    CandidateId designated = 0;
    int position = 1;  // target: designated within the top `position`
    Weight budget = 0;

    void validate() const;
};

bool single_vote_has_solution(const SingleVoteSwapInstance& src);

/// Weighted constructive Bucklin manipulation over {b, c, d, p}.
ManipulationInstance gen_ccwm_from_partition(const PartitionInstance& src);

/// Unweighted constructive Bucklin bribery with 2n voters and budget m.
BriberyInstance gen_cub_bucklin_from_x3c(const X3CInstance& src);

/// Unweighted constructive fallback bribery with 4n voters and budget m;
/// needs n >= max(m, 2).
BriberyInstance gen_cub_fallback_from_x3c(const X3CInstance& src);

/// Destructive weighted priced bribery over {c, p}.
BriberyInstance gen_dwb_priced(const PartitionInstance& src, ElectionKind kind);

/// Weighted extension bribery over {b, c, p}; Destructive yields the DWEB
/// variant.
CampaignInstance gen_cweb_from_partition(const PartitionInstance& src, Goal goal = Goal::Constructive);

/// Two-voter swap bribery; Destructive yields the DUSB variant with d
/// designated.
CampaignInstance gen_cusb_from_single_vote(const SingleVoteSwapInstance& src, Goal goal = Goal::Constructive);

}  // namespace bfv
