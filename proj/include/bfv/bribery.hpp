#pragma once

// Bribery for Bucklin and fallback elections.

#include <array>
#include <vector>

#include "bfv/oracle.hpp"
#include "bfv/problems.hpp"

namespace bfv {

/// The five vote classes for a rival c at level i:
///   [0] p in the top i-1, c in the top i
///   [1] p in the top i-1, c not in the top i
///   [2] p at position i, c in the top i
///   [3] p at position i, c not in the top i
///   [4] neither in the top i
/// Voters ranking c in the top i but p below level i belong to none.
struct VoteClassification {
    std::array<std::vector<int>, 5> classes;
};

VoteClassification classify_votes(const Election& election, CandidateId rival, CandidateId designated, int level);

/// Destructive bribery counting bribed voters (weighted or not).
BriberyAnswer bucklin_dwb(const BriberyInstance& instance);

/// Destructive unweighted bribery with voter prices.
BriberyAnswer bucklin_dub_priced(const BriberyInstance& instance);

/// Fallback DUB, DWB and DUB-$.
BriberyAnswer fallback_destructive_bribery(const BriberyInstance& instance);

/// Polynomial algorithms where they apply, the oracle otherwise.
BriberyAnswer solve_bribery(const BriberyInstance& instance, const OracleOptions& options = {});

}  // namespace bfv
