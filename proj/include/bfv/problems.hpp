#pragma once

// Attack instances and their witnesses, shared by the polynomial solvers
// and the exhaustive oracles.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfv/election.hpp"

namespace bfv {

enum class Goal { Constructive, Destructive };

/// True when `result` meets the attack goal for `designated` under the
/// unique-winner model.
inline bool goal_met(Goal goal, const WinnerResult& result, CandidateId designated) {
    bool unique = result.is_unique_winner(designated);
    return goal == Goal::Constructive ? unique : !unique;
}

// ---------------------------------------------------------------- manipulation

struct ManipulationInstance {
    Election election;  // nonmanipulative voters
    std::vector<Weight> manipulator_weights;
    CandidateId designated = 0;
    Goal goal = Goal::Constructive;

    void validate() const;
    bool unweighted() const;
};

struct ManipulationCertificate {
    std::vector<Ballot> ballots;  // one per manipulator
    WinnerResult achieved;
};

using ManipulationAnswer = std::optional<ManipulationCertificate>;

/// The election (C, V ∪ S) with the given manipulator ballots appended.
Election combined_election(const ManipulationInstance& instance, const std::vector<Ballot>& ballots);

// --------------------------------------------------------------------- bribery

struct BriberyInstance {
    Election election;
    CandidateId designated = 0;
    Weight budget = 0;
    bool weighted = false;
    bool priced = false;
    Goal goal = Goal::Constructive;

    void validate() const;
    /// Price of bribing voter `i` under this instance's pricing model.
    Weight price_of(int i) const { return priced ? election.voter(i).price : 1; }
};

struct BriberyCertificate {
    std::vector<int> bribed;  // ascending voter indices
    std::vector<Ballot> replacements;
    WinnerResult achieved;
};

using BriberyAnswer = std::optional<BriberyCertificate>;

Election bribed_election(const Election& election, const std::vector<int>& bribed,
                         const std::vector<Ballot>& replacements);

// -------------------------------------------------------------------- campaign

/// Per-voter price of swapping adjacent candidates: entry (x, y) is paid
/// when x sits directly above y and the two are exchanged.
class SwapPriceFunction {
public:
    SwapPriceFunction() = default;
    explicit SwapPriceFunction(int num_candidates, Weight fill = 1);
    SwapPriceFunction(int num_candidates, std::vector<Weight> row_major);

    int num_candidates() const { return m_; }
    Weight operator()(CandidateId x, CandidateId y) const;
    void set(CandidateId x, CandidateId y, Weight price);
    const std::vector<Weight>& data() const { return data_; }

    friend bool operator==(const SwapPriceFunction&, const SwapPriceFunction&) = default;

private:
    int m_ = 0;
    std::vector<Weight> data_;
};

/// Per-voter extension price: cost(j) is the price of appending j
/// previously disapproved candidates to the approved part.
struct ExtensionPriceFunction {
    std::vector<Weight> costs;  // costs[0] == 0

    Weight cost(int count) const;
    int max_extension() const { return static_cast<int>(costs.size()) - 1; }

    /// cost(j) = j * unit for j = 0..max_count.
    static ExtensionPriceFunction linear(Weight unit, int max_count);

    friend bool operator==(const ExtensionPriceFunction&, const ExtensionPriceFunction&) = default;
};

enum class CampaignProblem { CUSB, DUSB, CWSB, DWSB, CUEB, DUEB, CWEB, DWEB };

const char* to_string(CampaignProblem problem);
bool is_swap_problem(CampaignProblem problem);
bool is_weighted(CampaignProblem problem);
Goal goal_of(CampaignProblem problem);

struct CampaignInstance {
    Election election;
    CandidateId designated = 0;
    Weight budget = 0;
    CampaignProblem problem = CampaignProblem::CUEB;
    std::vector<SwapPriceFunction> swap_prices;            // swap problems
    std::vector<ExtensionPriceFunction> extension_prices;  // extension problems

    void validate() const;
};

struct CampaignCertificate {
    std::vector<int> changed;  // ascending voter indices
    std::vector<Ballot> new_ballots;
    /// Adjacent exchanges per changed voter (swap problems only), each pair
    /// naming the upper candidate before the exchange first.
    std::vector<std::vector<std::pair<CandidateId, CandidateId>>> swaps;
    Weight cost = 0;
    WinnerResult achieved;
};

using CampaignAnswer = std::optional<CampaignCertificate>;

}  // namespace bfv
