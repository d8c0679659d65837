#include "bfv/bribery.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "bfv/manipulation.hpp"

namespace bfv {

VoteClassification classify_votes(const Election& election, CandidateId rival, CandidateId designated, int level) {
    const int m = election.num_candidates();
    if (rival == designated) throw InvalidInput("rival must differ from the designated candidate");
    if (rival < 0 || rival >= m || designated < 0 || designated >= m) throw InvalidInput("candidate not in the roster");
    const int top = election.kind() == ElectionKind::Bucklin ? m - 1 : m;
    if (level < 1 || level > top) throw InvalidInput("classification level out of range");

    VoteClassification out;
    for (int v = 0; v < election.num_voters(); ++v) {
        const auto& b = election.voter(v).ballot;
        int pp = b.position_of(designated);
        int pc = b.position_of(rival);
        bool c_top = pc >= 1 && pc <= level;
        if (pp >= 1 && pp < level)
            out.classes[c_top ? 0 : 1].push_back(v);
        else if (pp == level)
            out.classes[c_top ? 2 : 3].push_back(v);
        else if (!c_top)
            out.classes[4].push_back(v);
    }
    return out;
}

namespace {

// Searches every rival, level and per-class bribe count; within a class the
// heaviest (or cheapest) voters go first, ties by index.
BriberyAnswer class_search(const BriberyInstance& instance, bool by_price) {
    instance.validate();
    if (instance.goal != Goal::Destructive) throw InvalidInput("class search is destructive");
    const Election& e = instance.election;
    const int m = e.num_candidates();
    const CandidateId p = instance.designated;
    const bool bucklin = e.kind() == ElectionKind::Bucklin;
    const int max_level = bucklin ? m - 1 : m;

    for (CandidateId c = 0; c < m; ++c) {
        if (c == p) continue;
        for (int level = 1; level <= max_level; ++level) {
            auto cls = classify_votes(e, c, p, level).classes;
            for (auto& list : cls)
                std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
                    return by_price ? e.voter(a).price < e.voter(b).price : e.voter(a).weight > e.voter(b).weight;
                });

            std::array<std::size_t, 5> take{};
            std::optional<BriberyCertificate> found;
            std::function<bool(std::size_t, Weight)> rec = [&](std::size_t j, Weight spent) {
                if (j == 5) {
                    std::vector<char> in(static_cast<std::size_t>(e.num_voters()), 0);
                    for (std::size_t t = 0; t < 5; ++t)
                        for (std::size_t x = 0; x < take[t]; ++x) in[static_cast<std::size_t>(cls[t][x])] = 1;
                    std::vector<Voter> rest;
                    std::vector<int> bribed;
                    std::vector<Weight> weights;
                    for (int v = 0; v < e.num_voters(); ++v) {
                        if (in[static_cast<std::size_t>(v)]) {
                            bribed.push_back(v);
                            weights.push_back(e.voter(v).weight);
                        } else {
                            rest.push_back(e.voter(v));
                        }
                    }
                    Election remaining = e.with_voters(std::move(rest));
                    auto ballots = bucklin ? bucklin_dcwm_ballots(remaining, weights, p)
                                           : fallback_manipulation_ballots(remaining, weights, p, Goal::Destructive);
                    if (!ballots) return false;
                    found = BriberyCertificate{bribed, *ballots, {}};
                    return true;
                }
                for (std::size_t a = 0; a <= cls[j].size(); ++a) {
                    Weight cost = spent;
                    for (std::size_t x = 0; x < a; ++x) cost += instance.price_of(cls[j][x]);
                    if (cost > instance.budget) break;
                    take[j] = a;
                    if (rec(j + 1, cost)) return true;
                }
                take[j] = 0;
                return false;
            };
            if (rec(0, 0)) {
                found->achieved = winners(bribed_election(e, found->bribed, found->replacements));
                if (!goal_met(Goal::Destructive, found->achieved, p))
                    throw std::logic_error("bribery certificate does not replay");
                return found;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

BriberyAnswer bucklin_dwb(const BriberyInstance& instance) {
    if (instance.election.kind() != ElectionKind::Bucklin) throw InvalidInput("bucklin_dwb requires a Bucklin election");
    if (instance.priced) throw InvalidInput("bucklin_dwb counts bribed voters");
    return class_search(instance, false);
}

BriberyAnswer bucklin_dub_priced(const BriberyInstance& instance) {
    if (instance.election.kind() != ElectionKind::Bucklin)
        throw InvalidInput("bucklin_dub_priced requires a Bucklin election");
    if (instance.weighted) throw InvalidInput("bucklin_dub_priced requires unit weights");
    return class_search(instance, true);
}

BriberyAnswer fallback_destructive_bribery(const BriberyInstance& instance) {
    if (instance.election.kind() != ElectionKind::Fallback)
        throw InvalidInput("fallback_destructive_bribery requires a fallback election");
    if (instance.weighted && instance.priced) throw InvalidInput("weighted priced destructive bribery has no class search");
    return class_search(instance, instance.priced);
}

BriberyAnswer solve_bribery(const BriberyInstance& instance, const OracleOptions& options) {
    instance.validate();
    const bool polynomial = instance.goal == Goal::Destructive && !(instance.weighted && instance.priced);
    if (!polynomial) return brute_bribery(instance, options);
    if (instance.election.kind() == ElectionKind::Fallback) return fallback_destructive_bribery(instance);
    return instance.priced ? bucklin_dub_priced(instance) : bucklin_dwb(instance);
}

}  // namespace bfv
