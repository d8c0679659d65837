#pragma once

// Coalitional manipulation for Bucklin and fallback elections.

#include <optional>
#include <vector>

#include "bfv/oracle.hpp"
#include "bfv/problems.hpp"

namespace bfv {

/// Unweighted constructive Bucklin manipulation. Throws InvalidInput for
/// weighted or non-Bucklin instances.
ManipulationAnswer bucklin_ccum(const ManipulationInstance& instance);

/// Weighted destructive Bucklin manipulation.
ManipulationAnswer bucklin_dcwm(const ManipulationInstance& instance);

/// The destructive check on a raw voter list, with possibly no
/// manipulators at all. Returns the manipulators' ballots on success.
std::optional<std::vector<Ballot>> bucklin_dcwm_ballots(const Election& election,
                                                        const std::vector<Weight>& manipulator_weights,
                                                        CandidateId designated);

/// Fallback counterpart: constructive manipulators bullet-vote for the
/// designated candidate, destructive ones for each rival in turn.
std::optional<std::vector<Ballot>> fallback_manipulation_ballots(const Election& election,
                                                                 const std::vector<Weight>& manipulator_weights,
                                                                 CandidateId designated, Goal goal);
ManipulationAnswer fallback_manipulation(const ManipulationInstance& instance);

/// Picks the polynomial algorithm when one applies and the oracle for
/// weighted constructive Bucklin manipulation.
ManipulationAnswer solve_manipulation(const ManipulationInstance& instance, const OracleOptions& options = {});

}  // namespace bfv
