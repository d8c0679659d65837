#pragma once

// Elections, ballots and winner determination for Bucklin, fallback and
// approval voting.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bfv {

using CandidateId = int;
using Weight = std::int64_t;

enum class ElectionKind { Bucklin, Fallback };

const char* to_string(ElectionKind kind);

/// Raised for malformed elections, ballots and problem instances.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A ranked ballot. For Bucklin elections the ranking covers every
/// candidate; for fallback elections it is the ranked approved part and
/// every candidate not listed is disapproved.
struct Ballot {
    std::vector<CandidateId> ranking;

    bool approves(CandidateId c) const;
    /// 1-based position of `c`, or 0 when `c` is not ranked.
    int position_of(CandidateId c) const;
    /// Unranked candidates in ascending id order.
    std::vector<CandidateId> disapproved(int num_candidates) const;

    friend bool operator==(const Ballot&, const Ballot&) = default;
};

struct Voter {
    Ballot ballot;
    Weight weight = 1;
    Weight price = 1;

    friend bool operator==(const Voter&, const Voter&) = default;
};

class Election {
public:
    Election() = default;
    /// Validates ballots against `kind`: Bucklin ballots must be
    /// permutations of all candidates, fallback ballots may not repeat.
    Election(ElectionKind kind, std::vector<std::string> candidates, std::vector<Voter> voters);

    ElectionKind kind() const { return kind_; }
    int num_candidates() const { return static_cast<int>(candidates_.size()); }
    int num_voters() const { return static_cast<int>(voters_.size()); }
    const std::vector<std::string>& candidates() const { return candidates_; }
    const std::string& name(CandidateId c) const { return candidates_.at(static_cast<std::size_t>(c)); }
    const std::vector<Voter>& voters() const { return voters_; }
    const Voter& voter(int i) const { return voters_.at(static_cast<std::size_t>(i)); }
    Weight total_weight() const;

    std::optional<CandidateId> find(const std::string& name) const;
    CandidateId id_of(const std::string& name) const;

    /// Same roster and kind, different voter list.
    Election with_voters(std::vector<Voter> voters) const;

    friend bool operator==(const Election&, const Election&) = default;

private:
    ElectionKind kind_ = ElectionKind::Bucklin;
    std::vector<std::string> candidates_;
    std::vector<Voter> voters_;
};

void validate_ballot(ElectionKind kind, int num_candidates, const Ballot& ballot);

/// Cumulative weighted scores: levels[c][j] is the weight of voters ranking
/// `c` within their top j+1 positions.
struct ScoreTable {
    Weight maj = 1;
    std::vector<std::vector<Weight>> levels;
    /// Smallest level (1-based) at which the candidate reaches `maj`.
    std::vector<std::optional<int>> bucklin_score;

    int num_candidates() const { return static_cast<int>(levels.size()); }
    /// Score of `c` up to `level` (1-based); level 0 yields 0.
    Weight score(CandidateId c, int level) const;
    Weight total(CandidateId c) const;
};

struct WinnerResult {
    /// Ascending candidate ids.
    std::vector<CandidateId> winners;
    /// Level at which the winners were determined; empty for the fallback
    /// approval stage.
    std::optional<int> decisive_level;

    bool is_unique_winner(CandidateId c) const { return winners.size() == 1 && winners.front() == c; }
    bool is_winner(CandidateId c) const;

    friend bool operator==(const WinnerResult&, const WinnerResult&) = default;
};

Weight majority_threshold(std::span<const Voter> voters);
Weight majority_threshold_for(Weight total_weight);

ScoreTable level_scores(const Election& election);

WinnerResult bucklin_winners(const Election& election);
WinnerResult simplified_bucklin_winners(const Election& election);
WinnerResult fallback_winners(const Election& election);
std::vector<Weight> approval_scores(const Election& election);

/// Bucklin winners for Bucklin elections, fallback winners otherwise.
WinnerResult winners(const Election& election);

/// Winner rule applied to an already materialized table. `total_weight`
/// distinguishes the W = 0 Bucklin case, which is rejected.
WinnerResult winners_from_table(const ScoreTable& table, ElectionKind kind, Weight total_weight);

std::string format_ballot(const Election& election, const Ballot& ballot);
std::string format_winners(const Election& election, const WinnerResult& result);

}  // namespace bfv
