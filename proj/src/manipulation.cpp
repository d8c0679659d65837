#include "bfv/manipulation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bfv {

namespace {

ManipulationAnswer certify(const ManipulationInstance& instance, std::vector<Ballot> ballots) {
    ManipulationCertificate cert{std::move(ballots), {}};
    cert.achieved = winners(combined_election(instance, cert.ballots));
    if (!goal_met(instance.goal, cert.achieved, instance.designated))
        throw std::logic_error("manipulation certificate does not replay");
    return cert;
}

// `head` first, `tail` last (if given), everything else ascending.
Ballot framed_ballot(int m, CandidateId head, std::optional<CandidateId> tail) {
    Ballot b{{head}};
    for (CandidateId c = 0; c < m; ++c)
        if (c != head && c != tail) b.ranking.push_back(c);
    if (tail && *tail != head) b.ranking.push_back(*tail);
    return b;
}

// Edmonds-Karp max flow on a small graph with integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

    int add_edge(int from, int to, Weight capacity) {
        adj_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({to, capacity});
        adj_[static_cast<std::size_t>(to)].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({from, 0});
        return static_cast<int>(edges_.size()) - 2;
    }

    Weight run(int source, int sink) {
        Weight total = 0;
        while (true) {
            std::vector<int> via(adj_.size(), -1);
            std::vector<int> queue{source};
            via[static_cast<std::size_t>(source)] = -2;
            for (std::size_t q = 0; q < queue.size() && via[static_cast<std::size_t>(sink)] == -1; ++q)
                for (int id : adj_[static_cast<std::size_t>(queue[q])]) {
                    const auto& edge = edges_[static_cast<std::size_t>(id)];
                    if (edge.capacity > 0 && via[static_cast<std::size_t>(edge.to)] == -1) {
                        via[static_cast<std::size_t>(edge.to)] = id;
                        queue.push_back(edge.to);
                    }
                }
            if (via[static_cast<std::size_t>(sink)] == -1) return total;
            Weight push = std::numeric_limits<Weight>::max();
            for (int v = sink; v != source; v = edges_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to)
                push = std::min(push, edges_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].capacity);
            for (int v = sink; v != source; v = edges_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to) {
                edges_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].capacity -= push;
                edges_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].capacity += push;
            }
            total += push;
        }
    }

    /// Flow carried by the edge returned from add_edge.
    Weight flow(int id) const { return edges_[static_cast<std::size_t>(id ^ 1)].capacity; }

private:
    struct Edge {
        int to;
        Weight capacity;
    };
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
};

// Gives every vote one candidate it does not hold yet, candidate c used at
// most capacity[c] times. Votes holding the same candidates share a node.
std::optional<std::vector<CandidateId>> fill_one_level(const std::vector<Ballot>& votes,
                                                       const std::vector<Weight>& capacity) {
    const int m = static_cast<int>(capacity.size());
    std::map<std::vector<char>, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < votes.size(); ++v) {
        std::vector<char> held(static_cast<std::size_t>(m), 0);
        for (CandidateId c : votes[v].ranking) held[static_cast<std::size_t>(c)] = 1;
        groups[held].push_back(v);
    }
    const int g = static_cast<int>(groups.size());
    const int source = g + m, sink = g + m + 1;
    MaxFlow flow(g + m + 2);
    for (CandidateId c = 0; c < m; ++c) flow.add_edge(g + c, sink, capacity[static_cast<std::size_t>(c)]);
    std::vector<std::vector<std::pair<CandidateId, int>>> links(static_cast<std::size_t>(g));
    int index = 0;
    for (const auto& [held, members] : groups) {
        flow.add_edge(source, index, static_cast<Weight>(members.size()));
        for (CandidateId c = 0; c < m; ++c)
            if (!held[static_cast<std::size_t>(c)])
                links[static_cast<std::size_t>(index)].push_back({c, flow.add_edge(index, g + c, static_cast<Weight>(members.size()))});
        ++index;
    }
    if (flow.run(source, sink) != static_cast<Weight>(votes.size())) return std::nullopt;
    std::vector<CandidateId> out(votes.size(), -1);
    index = 0;
    for (const auto& [held, members] : groups) {
        std::size_t next = 0;
        for (const auto& [c, id] : links[static_cast<std::size_t>(index)])
            for (Weight f = flow.flow(id); f > 0; --f) out[members[next++]] = c;
        ++index;
    }
    return out;
}

}  // namespace

ManipulationAnswer bucklin_ccum(const ManipulationInstance& instance) {
    instance.validate();
    const Election& e = instance.election;
    if (e.kind() != ElectionKind::Bucklin) throw InvalidInput("bucklin_ccum requires a Bucklin election");
    if (!instance.unweighted()) throw InvalidInput("bucklin_ccum requires unit weights");
    if (instance.goal != Goal::Constructive) throw InvalidInput("bucklin_ccum is constructive");

    const int m = e.num_candidates();
    const CandidateId p = instance.designated;
    const Weight n = e.num_voters();
    const Weight k = static_cast<Weight>(instance.manipulator_weights.size());
    const std::vector<Ballot> bullet(static_cast<std::size_t>(k), framed_ballot(m, p, std::nullopt));

    if (k > n) return certify(instance, bullet);

    const Weight maj = majority_threshold_for(n + k);
    const ScoreTable t = n > 0 ? level_scores(e) : ScoreTable{};
    auto score = [&](CandidateId c, int level) { return n > 0 ? t.score(c, level) : Weight{0}; };

    int r_min = 1;
    while (score(p, r_min) + k < maj) ++r_min;

    std::vector<Weight> num(static_cast<std::size_t>(m), 0);
    std::vector<Weight> num2(static_cast<std::size_t>(m), 0);
    Weight sum_num = 0;
    Weight sum_num2 = 0;
    for (CandidateId c = 0; c < m; ++c) {
        if (c == p) continue;
        if (score(c, r_min - 1) >= maj || score(c, r_min) >= score(p, r_min) + k) return std::nullopt;
        Weight rem = score(p, r_min) + k - score(c, r_min) - 1;
        Weight rem2 = maj - score(c, r_min - 1) - 1;
        num[static_cast<std::size_t>(c)] = std::min({rem2, rem, k});
        num2[static_cast<std::size_t>(c)] = std::min(rem, k);
        sum_num += num[static_cast<std::size_t>(c)];
        sum_num2 += num2[static_cast<std::size_t>(c)];
    }
    if (sum_num < std::max(r_min - 2, 0) * k || sum_num2 < std::max(r_min - 1, 0) * k) return std::nullopt;

    std::vector<Ballot> votes(static_cast<std::size_t>(k), Ballot{{p}});
    // Positions 2..r_min-1, voter by voter within a level.
    std::size_t i = 0;
    int j = 2;
    for (CandidateId c = 0; c < m; ++c) {
        if (c == p) continue;
        auto& left = num[static_cast<std::size_t>(c)];
        while (left > 0 && j <= r_min - 1) {
            votes[i].ranking.push_back(c);
            --left;
            --num2[static_cast<std::size_t>(c)];
            if (++i == static_cast<std::size_t>(k)) {
                i = 0;
                ++j;
            }
        }
    }
    // Position r_min: one more candidate per vote, never one the vote
    // already holds, within the remaining level-r_min allowance.
    if (r_min >= 2) {
        auto pick = fill_one_level(votes, num2);
        if (!pick) throw std::logic_error("level fill for the constructive manipulation failed");
        for (std::size_t v = 0; v < votes.size(); ++v) votes[v].ranking.push_back((*pick)[v]);
    }
    for (auto& b : votes) {
        std::vector<char> used(static_cast<std::size_t>(m), 0);
        for (CandidateId c : b.ranking) used[static_cast<std::size_t>(c)] = 1;
        for (CandidateId c = 0; c < m; ++c)
            if (!used[static_cast<std::size_t>(c)]) b.ranking.push_back(c);
        validate_ballot(ElectionKind::Bucklin, m, b);
    }
    return certify(instance, std::move(votes));
}

std::optional<std::vector<Ballot>> bucklin_dcwm_ballots(const Election& election,
                                                        const std::vector<Weight>& manipulator_weights,
                                                        CandidateId designated) {
    if (election.kind() != ElectionKind::Bucklin) throw InvalidInput("bucklin_dcwm requires a Bucklin election");
    const int m = election.num_candidates();
    if (m <= 1) return std::nullopt;
    const Weight w_s = std::accumulate(manipulator_weights.begin(), manipulator_weights.end(), Weight{0});
    const Weight w_v = election.total_weight();

    for (CandidateId c = 0; c < m; ++c) {
        if (c == designated) continue;
        std::vector<Ballot> ballots(manipulator_weights.size(), framed_ballot(m, c, designated));
        if (w_s > w_v) return ballots;
        auto voters = election.voters();
        for (std::size_t i = 0; i < ballots.size(); ++i) voters.push_back(Voter{ballots[i], manipulator_weights[i], 1});
        if (!winners(election.with_voters(std::move(voters))).is_unique_winner(designated)) return ballots;
    }
    return std::nullopt;
}

ManipulationAnswer bucklin_dcwm(const ManipulationInstance& instance) {
    instance.validate();
    if (instance.goal != Goal::Destructive) throw InvalidInput("bucklin_dcwm is destructive");
    auto ballots = bucklin_dcwm_ballots(instance.election, instance.manipulator_weights, instance.designated);
    if (!ballots) return std::nullopt;
    return certify(instance, std::move(*ballots));
}

std::optional<std::vector<Ballot>> fallback_manipulation_ballots(const Election& election,
                                                                 const std::vector<Weight>& manipulator_weights,
                                                                 CandidateId designated, Goal goal) {
    if (election.kind() != ElectionKind::Fallback) throw InvalidInput("fallback manipulation requires a fallback election");
    const int m = election.num_candidates();
    auto attempt = [&](CandidateId favourite) -> std::optional<std::vector<Ballot>> {
        std::vector<Ballot> ballots(manipulator_weights.size(), Ballot{{favourite}});
        auto voters = election.voters();
        for (std::size_t i = 0; i < ballots.size(); ++i) voters.push_back(Voter{ballots[i], manipulator_weights[i], 1});
        if (goal_met(goal, winners(election.with_voters(std::move(voters))), designated)) return ballots;
        return std::nullopt;
    };
    if (goal == Goal::Constructive) return attempt(designated);
    for (CandidateId c = 0; c < m; ++c) {
        if (c == designated) continue;
        if (auto ballots = attempt(c)) return ballots;
    }
    return std::nullopt;
}

ManipulationAnswer fallback_manipulation(const ManipulationInstance& instance) {
    instance.validate();
    auto ballots = fallback_manipulation_ballots(instance.election, instance.manipulator_weights, instance.designated,
                                                 instance.goal);
    if (!ballots) return std::nullopt;
    return certify(instance, std::move(*ballots));
}

ManipulationAnswer solve_manipulation(const ManipulationInstance& instance, const OracleOptions& options) {
    instance.validate();
    if (instance.election.kind() == ElectionKind::Fallback) return fallback_manipulation(instance);
    if (instance.goal == Goal::Destructive) return bucklin_dcwm(instance);
    if (instance.unweighted()) return bucklin_ccum(instance);
    return brute_manipulation(instance, options);
}

}  // namespace bfv
