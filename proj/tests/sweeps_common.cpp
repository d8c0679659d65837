#include <algorithm>
#include <set>
#include <sstream>

#include "bfv/campaign.hpp"
#include "bfv/io.hpp"
#include "sweeps.hpp"
#include "test_support.hpp"

namespace bfv::sweeps {

void Tally::fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
}

std::string Tally::summary() const {
    std::ostringstream out;
    out << instances << " instances, " << yes << " YES, " << failures << " mismatches";
    return out.str();
}

std::vector<VoterType> voter_types(int m, ElectionKind kind, Weight max_weight, Weight max_price) {
    std::vector<VoterType> out;
    for (const auto& b : testing::all_ballots(m, kind))
        for (Weight w = 1; w <= max_weight; ++w)
            for (Weight p = 1; p <= max_price; ++p) out.push_back(VoterType{b, w, p});
    return out;
}

void for_each_profile(ElectionKind kind, int m, const std::vector<VoterType>& types, int min_n, int max_n,
                      const std::function<void(const Election&)>& visit) {
    const auto names = testing::letter_names(m);
    for (int n = min_n; n <= max_n; ++n) {
        testing::for_each_multiset(static_cast<int>(types.size()), n, [&](const std::vector<int>& pick) {
            std::vector<Voter> voters;
            for (int t : pick) {
                const auto& vt = types[static_cast<std::size_t>(t)];
                voters.push_back(Voter{vt.ballot, vt.weight, vt.price});
            }
            visit(Election(kind, names, std::move(voters)));
        });
    }
}

namespace {

std::string ballot_problem(ElectionKind kind, int m, const Ballot& b) {
    try {
        validate_ballot(kind, m, b);
    } catch (const InvalidInput& e) {
        return std::string("invalid ballot: ") + e.what();
    }
    return {};
}

std::string goal_problem(Goal goal, const Election& after, CandidateId p, const WinnerResult& claimed) {
    auto truth = testing::reference_winners(after);
    if (!(truth == claimed)) return "claimed winners differ from the replay";
    if (!goal_met(goal, truth, p)) return "replay misses the goal";
    return {};
}

}  // namespace

std::string check_certificate(const ManipulationInstance& inst, const ManipulationCertificate& cert) {
    const Election& e = inst.election;
    if (cert.ballots.size() != inst.manipulator_weights.size()) return "one ballot per manipulator expected";
    auto voters = e.voters();
    for (std::size_t i = 0; i < cert.ballots.size(); ++i) {
        if (auto bad = ballot_problem(e.kind(), e.num_candidates(), cert.ballots[i]); !bad.empty()) return bad;
        voters.push_back(Voter{cert.ballots[i], inst.manipulator_weights[i], 1});
    }
    return goal_problem(inst.goal, e.with_voters(voters), inst.designated, cert.achieved);
}

std::string check_certificate(const BriberyInstance& inst, const BriberyCertificate& cert) {
    const Election& e = inst.election;
    if (cert.bribed.size() != cert.replacements.size()) return "one replacement per bribed voter expected";
    if (!std::is_sorted(cert.bribed.begin(), cert.bribed.end()) ||
        std::adjacent_find(cert.bribed.begin(), cert.bribed.end()) != cert.bribed.end())
        return "bribed voters must be ascending and distinct";
    Weight cost = 0;
    auto voters = e.voters();
    for (std::size_t i = 0; i < cert.bribed.size(); ++i) {
        const int v = cert.bribed[i];
        if (v < 0 || v >= e.num_voters()) return "bribed voter out of range";
        if (auto bad = ballot_problem(e.kind(), e.num_candidates(), cert.replacements[i]); !bad.empty()) return bad;
        cost += inst.priced ? e.voter(v).price : 1;
        voters[static_cast<std::size_t>(v)].ballot = cert.replacements[i];
    }
    if (cost > inst.budget) return "bribery exceeds the budget";
    return goal_problem(inst.goal, e.with_voters(voters), inst.designated, cert.achieved);
}

std::string check_certificate(const CampaignInstance& inst, const CampaignCertificate& cert) {
    const Election& e = inst.election;
    const int m = e.num_candidates();
    if (cert.changed.size() != cert.new_ballots.size()) return "one ballot per changed voter expected";
    if (!std::is_sorted(cert.changed.begin(), cert.changed.end()) ||
        std::adjacent_find(cert.changed.begin(), cert.changed.end()) != cert.changed.end())
        return "changed voters must be ascending and distinct";
    const bool swaps = is_swap_problem(inst.problem);
    if (swaps && !cert.swaps.empty() && cert.swaps.size() != cert.changed.size())
        return "one swap list per changed voter expected";
    Weight cost = 0;
    auto voters = e.voters();
    for (std::size_t i = 0; i < cert.changed.size(); ++i) {
        const int v = cert.changed[i];
        if (v < 0 || v >= e.num_voters()) return "changed voter out of range";
        const auto& before = e.voter(v).ballot.ranking;
        const auto& after = cert.new_ballots[i].ranking;
        if (auto bad = ballot_problem(e.kind(), m, cert.new_ballots[i]); !bad.empty()) return bad;
        if (swaps) {
            if (std::set<CandidateId>(before.begin(), before.end()) != std::set<CandidateId>(after.begin(), after.end()) ||
                before.size() != after.size())
                return "swaps must reorder the same candidates";
            const auto& price = inst.swap_prices[static_cast<std::size_t>(v)];
            // Pairs ranked x over y before and y over x after.
            for (std::size_t a = 0; a < before.size(); ++a)
                for (std::size_t b = a + 1; b < before.size(); ++b)
                    if (cert.new_ballots[i].position_of(before[a]) > cert.new_ballots[i].position_of(before[b]))
                        cost += price(before[a], before[b]);
            if (!cert.swaps.empty()) {
                auto r = before;
                for (const auto& [x, y] : cert.swaps[i]) {
                    auto at = std::find(r.begin(), r.end(), x);
                    if (at == r.end() || at + 1 == r.end() || *(at + 1) != y) return "swap of non-adjacent candidates";
                    std::iter_swap(at, at + 1);
                }
                if (r != after) return "swap list does not reach the new ballot";
            }
        } else {
            if (after.size() < before.size() || !std::equal(before.begin(), before.end(), after.begin()))
                return "extension must keep the approved part as a prefix";
            cost += inst.extension_prices[static_cast<std::size_t>(v)].cost(
                static_cast<int>(after.size() - before.size()));
        }
        voters[static_cast<std::size_t>(v)].ballot = cert.new_ballots[i];
    }
    if (cost != cert.cost) return "reported cost differs from the replay";
    if (cost > inst.budget) return "campaign exceeds the budget";
    return goal_problem(goal_of(inst.problem), e.with_voters(voters), inst.designated, cert.achieved);
}

}  // namespace bfv::sweeps
