#include "bfv/election.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bfv {

const char* to_string(ElectionKind kind) {
    return kind == ElectionKind::Bucklin ? "bucklin" : "fallback";
}

bool Ballot::approves(CandidateId c) const {
    return std::find(ranking.begin(), ranking.end(), c) != ranking.end();
}

int Ballot::position_of(CandidateId c) const {
    auto it = std::find(ranking.begin(), ranking.end(), c);
    return it == ranking.end() ? 0 : static_cast<int>(it - ranking.begin()) + 1;
}

std::vector<CandidateId> Ballot::disapproved(int num_candidates) const {
    std::vector<CandidateId> out;
    for (CandidateId c = 0; c < num_candidates; ++c)
        if (!approves(c)) out.push_back(c);
    return out;
}

void validate_ballot(ElectionKind kind, int num_candidates, const Ballot& ballot) {
    std::vector<char> seen(static_cast<std::size_t>(num_candidates), 0);
    for (CandidateId c : ballot.ranking) {
        if (c < 0 || c >= num_candidates) throw InvalidInput("ballot names an unknown candidate");
        if (seen[static_cast<std::size_t>(c)]++) throw InvalidInput("ballot ranks a candidate twice");
    }
    if (kind == ElectionKind::Bucklin && static_cast<int>(ballot.ranking.size()) != num_candidates)
        throw InvalidInput("Bucklin ballot must rank every candidate");
}

Election::Election(ElectionKind kind, std::vector<std::string> candidates, std::vector<Voter> voters)
    : kind_(kind), candidates_(std::move(candidates)), voters_(std::move(voters)) {
    std::set<std::string> names;
    for (const auto& n : candidates_) {
        if (n.empty()) throw InvalidInput("candidate names must be nonempty");
        if (!names.insert(n).second) throw InvalidInput("duplicate candidate name '" + n + "'");
    }
    for (const auto& v : voters_) {
        if (v.weight < 0) throw InvalidInput("voter weight must be nonnegative");
        if (v.price < 0) throw InvalidInput("voter price must be nonnegative");
        validate_ballot(kind_, num_candidates(), v.ballot);
    }
}

Weight Election::total_weight() const {
    Weight w = 0;
    for (const auto& v : voters_) w += v.weight;
    return w;
}

std::optional<CandidateId> Election::find(const std::string& name) const {
    auto it = std::find(candidates_.begin(), candidates_.end(), name);
    if (it == candidates_.end()) return std::nullopt;
    return static_cast<CandidateId>(it - candidates_.begin());
}

CandidateId Election::id_of(const std::string& name) const {
    auto c = find(name);
    if (!c) throw InvalidInput("unknown candidate '" + name + "'");
    return *c;
}

Election Election::with_voters(std::vector<Voter> voters) const {
    return Election(kind_, candidates_, std::move(voters));
}

Weight ScoreTable::score(CandidateId c, int level) const {
    if (level <= 0) return 0;
    const auto& row = levels.at(static_cast<std::size_t>(c));
    return row.at(static_cast<std::size_t>(level - 1));
}

Weight ScoreTable::total(CandidateId c) const {
    const auto& row = levels.at(static_cast<std::size_t>(c));
    return row.empty() ? 0 : row.back();
}

bool WinnerResult::is_winner(CandidateId c) const {
    return std::binary_search(winners.begin(), winners.end(), c);
}

Weight majority_threshold_for(Weight total_weight) { return total_weight / 2 + 1; }

Weight majority_threshold(std::span<const Voter> voters) {
    Weight w = 0;
    for (const auto& v : voters) w += v.weight;
    return majority_threshold_for(w);
}

ScoreTable level_scores(const Election& election) {
    const int m = election.num_candidates();
    ScoreTable t;
    t.maj = majority_threshold(election.voters());
    t.levels.assign(static_cast<std::size_t>(m), std::vector<Weight>(static_cast<std::size_t>(m), 0));
    // Per-position counts first, prefix sums afterwards: O(nm + m^2).
    for (const auto& v : election.voters()) {
        const auto& r = v.ballot.ranking;
        for (std::size_t pos = 0; pos < r.size(); ++pos)
            t.levels[static_cast<std::size_t>(r[pos])][pos] += v.weight;
    }
    t.bucklin_score.assign(static_cast<std::size_t>(m), std::nullopt);
    for (int c = 0; c < m; ++c) {
        auto& row = t.levels[static_cast<std::size_t>(c)];
        std::partial_sum(row.begin(), row.end(), row.begin());
        for (int j = 0; j < m; ++j) {
            if (row[static_cast<std::size_t>(j)] >= t.maj) {
                t.bucklin_score[static_cast<std::size_t>(c)] = j + 1;
                break;
            }
        }
    }
    return t;
}

namespace {

std::optional<int> min_bucklin_score(const ScoreTable& t) {
    std::optional<int> best;
    for (const auto& s : t.bucklin_score)
        if (s && (!best || *s < *best)) best = s;
    return best;
}

WinnerResult level_winners(const ScoreTable& t, int level, bool simplified) {
    WinnerResult r;
    r.decisive_level = level;
    Weight top = -1;
    for (int c = 0; c < t.num_candidates(); ++c) {
        if (t.bucklin_score[static_cast<std::size_t>(c)] != level) continue;
        Weight s = simplified ? 0 : t.score(c, level);
        if (s > top) {
            top = s;
            r.winners.clear();
        }
        if (s == top) r.winners.push_back(c);
    }
    return r;
}

WinnerResult approval_stage(const ScoreTable& t) {
    WinnerResult r;
    Weight top = -1;
    for (int c = 0; c < t.num_candidates(); ++c) {
        Weight s = t.total(c);
        if (s > top) {
            top = s;
            r.winners.clear();
        }
        if (s == top) r.winners.push_back(c);
    }
    return r;
}

void require_bucklin(const Election& e) {
    if (e.kind() != ElectionKind::Bucklin) throw InvalidInput("Bucklin winners need a Bucklin election");
    if (e.total_weight() < 1) throw InvalidInput("Bucklin winners are undefined for total weight 0");
}

}  // namespace

WinnerResult winners_from_table(const ScoreTable& table, ElectionKind kind, Weight total_weight) {
    if (table.num_candidates() == 0) throw InvalidInput("election has no candidates");
    if (kind == ElectionKind::Bucklin && total_weight < 1)
        throw InvalidInput("Bucklin winners are undefined for total weight 0");
    auto level = min_bucklin_score(table);
    if (level) return level_winners(table, *level, false);
    return approval_stage(table);
}

WinnerResult bucklin_winners(const Election& election) {
    require_bucklin(election);
    return winners_from_table(level_scores(election), ElectionKind::Bucklin, election.total_weight());
}

WinnerResult simplified_bucklin_winners(const Election& election) {
    require_bucklin(election);
    auto t = level_scores(election);
    return level_winners(t, *min_bucklin_score(t), true);
}

WinnerResult fallback_winners(const Election& election) {
    if (election.kind() != ElectionKind::Fallback) throw InvalidInput("fallback winners need a fallback election");
    return winners_from_table(level_scores(election), ElectionKind::Fallback, election.total_weight());
}

std::vector<Weight> approval_scores(const Election& election) {
    std::vector<Weight> out(static_cast<std::size_t>(election.num_candidates()), 0);
    for (const auto& v : election.voters())
        for (CandidateId c : v.ballot.ranking) out[static_cast<std::size_t>(c)] += v.weight;
    return out;
}

WinnerResult winners(const Election& election) {
    return election.kind() == ElectionKind::Bucklin ? bucklin_winners(election) : fallback_winners(election);
}

std::string format_ballot(const Election& election, const Ballot& ballot) {
    std::string out;
    for (std::size_t i = 0; i < ballot.ranking.size(); ++i) {
        if (i) out += " > ";
        out += election.name(ballot.ranking[i]);
    }
    if (election.kind() == ElectionKind::Fallback) {
        out += out.empty() ? "|" : " |";
        for (CandidateId c : ballot.disapproved(election.num_candidates())) out += " " + election.name(c);
    }
    return out;
}

std::string format_winners(const Election& election, const WinnerResult& result) {
    std::string out;
    for (CandidateId c : result.winners) {
        if (!out.empty()) out += ' ';
        out += election.name(c);
    }
    if (result.decisive_level)
        out += " (level " + std::to_string(*result.decisive_level) + ")";
    else
        out += " (approval-stage)";
    return out;
}

}  // namespace bfv
