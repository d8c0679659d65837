#include "bfv/campaign.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bfv {

namespace {

std::vector<int> target_positions(const std::vector<CandidateId>& source, const std::vector<CandidateId>& target) {
    if (source.size() != target.size()) throw InvalidInput("swap target must reorder the source ranking");
    int hi = 0;
    for (CandidateId c : source) hi = std::max(hi, c + 1);
    for (CandidateId c : target) hi = std::max(hi, c + 1);
    std::vector<int> pos(static_cast<std::size_t>(hi), -1);
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (target[i] < 0 || pos[static_cast<std::size_t>(target[i])] >= 0)
            throw InvalidInput("swap target must reorder the source ranking");
        pos[static_cast<std::size_t>(target[i])] = static_cast<int>(i);
    }
    std::vector<char> seen(static_cast<std::size_t>(hi), 0);
    for (CandidateId c : source) {
        if (c < 0 || pos[static_cast<std::size_t>(c)] < 0 || seen[static_cast<std::size_t>(c)])
            throw InvalidInput("swap target must reorder the source ranking");
        seen[static_cast<std::size_t>(c)] = 1;
    }
    return pos;
}

// Greedy extension rounds for one favourite: append it to the cheapest
// eligible voters and stop at the first success within budget.
CampaignAnswer extension_rounds(const CampaignInstance& instance, CandidateId favourite,
                                bool (*success)(const WinnerResult&, CandidateId)) {
    const Election& e = instance.election;
    const int m = e.num_candidates();
    for (int s = 1; s <= m; ++s) {
        std::vector<int> eligible;
        for (int v = 0; v < e.num_voters(); ++v) {
            const auto& b = e.voter(v).ballot;
            if (static_cast<int>(b.ranking.size()) <= s - 1 && !b.approves(favourite)) eligible.push_back(v);
        }
        auto unit_cost = [&](int v) { return instance.extension_prices[static_cast<std::size_t>(v)].cost(1); };
        std::stable_sort(eligible.begin(), eligible.end(), [&](int a, int b) { return unit_cost(a) < unit_cost(b); });

        auto voters = e.voters();
        Weight cost = 0;
        for (std::size_t t = 0; t <= eligible.size(); ++t) {
            if (t > 0) {
                int v = eligible[t - 1];
                voters[static_cast<std::size_t>(v)].ballot.ranking.push_back(favourite);
                cost += unit_cost(v);
            }
            auto result = winners(e.with_voters(voters));
            if (!success(result, favourite) || cost > instance.budget) continue;

            CampaignCertificate cert;
            cert.changed.assign(eligible.begin(), eligible.begin() + static_cast<std::ptrdiff_t>(t));
            std::sort(cert.changed.begin(), cert.changed.end());
            for (int v : cert.changed) cert.new_ballots.push_back(voters[static_cast<std::size_t>(v)].ballot);
            cert.cost = cost;
            cert.achieved = result;
            return cert;
        }
    }
    return std::nullopt;
}

void require_extension(const CampaignInstance& instance, CampaignProblem problem) {
    instance.validate();
    if (instance.problem != problem)
        throw InvalidInput(std::string("expected a ") + to_string(problem) + " instance");
}

}  // namespace

Weight swap_sequence_cost(const std::vector<CandidateId>& source, const std::vector<CandidateId>& target,
                          const SwapPriceFunction& prices) {
    auto pos = target_positions(source, target);
    Weight total = 0;
    for (std::size_t i = 0; i < source.size(); ++i)
        for (std::size_t j = i + 1; j < source.size(); ++j)
            if (pos[static_cast<std::size_t>(source[j])] < pos[static_cast<std::size_t>(source[i])])
                total += prices(source[i], source[j]);
    return total;
}

std::vector<std::pair<CandidateId, CandidateId>> swap_sequence(std::vector<CandidateId> source,
                                                               const std::vector<CandidateId>& target) {
    auto pos = target_positions(source, target);
    std::vector<std::pair<CandidateId, CandidateId>> out;
    for (std::size_t pass = 0; pass < source.size(); ++pass)
        for (std::size_t i = 0; i + 1 < source.size(); ++i)
            if (pos[static_cast<std::size_t>(source[i])] > pos[static_cast<std::size_t>(source[i + 1])]) {
                out.emplace_back(source[i], source[i + 1]);
                std::swap(source[i], source[i + 1]);
            }
    return out;
}

CampaignAnswer fallback_cueb(const CampaignInstance& instance) {
    require_extension(instance, CampaignProblem::CUEB);
    return extension_rounds(instance, instance.designated,
                            [](const WinnerResult& r, CandidateId c) { return r.is_unique_winner(c); });
}

CampaignAnswer fallback_dueb(const CampaignInstance& instance) {
    require_extension(instance, CampaignProblem::DUEB);
    auto now = winners(instance.election);
    if (!now.is_unique_winner(instance.designated)) {
        CampaignCertificate cert;
        cert.achieved = now;
        return cert;
    }
    for (CandidateId c = 0; c < instance.election.num_candidates(); ++c) {
        if (c == instance.designated) continue;
        auto found =
            extension_rounds(instance, c, [](const WinnerResult& r, CandidateId x) { return r.is_winner(x); });
        if (found) return found;
    }
    return std::nullopt;
}

CampaignAnswer solve_campaign(const CampaignInstance& instance, const OracleOptions& options) {
    if (instance.problem == CampaignProblem::CUEB) return fallback_cueb(instance);
    if (instance.problem == CampaignProblem::DUEB) return fallback_dueb(instance);
    return brute_campaign(instance, options);
}

}  // namespace bfv
