#include "bfv/oracle.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "bfv/campaign.hpp"

namespace bfv {

// ----------------------------------------------------------------- guard

DeskScaleGuard DeskScaleGuard::parse(const std::string& spec) {
    DeskScaleGuard g;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("guard entry '" + item + "' is not key=value");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        double v = 0;
        try {
            std::size_t used = 0;
            v = std::stod(value, &used);
            if (used != value.size()) throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("guard value '" + value + "' is not a number");
        }
        if (!(v > 0)) throw InvalidInput("guard caps must be positive");
        if (key == "m")
            g.max_candidates = static_cast<int>(v);
        else if (key == "n")
            g.max_voters = static_cast<int>(v);
        else if (key == "budget")
            g.max_budget = static_cast<Weight>(v);
        else if (key == "weight")
            g.max_weight = static_cast<Weight>(v);
        else if (key == "ceiling")
            g.ceiling = v;
        else
            throw InvalidInput("unknown guard key '" + key + "'");
    }
    return g;
}

DeskScaleGuard DeskScaleGuard::unlimited() {
    DeskScaleGuard g;
    g.max_candidates = std::numeric_limits<int>::max();
    g.max_voters = std::numeric_limits<int>::max();
    g.max_budget = std::numeric_limits<Weight>::max();
    g.max_weight = std::numeric_limits<Weight>::max();
    g.ceiling = std::numeric_limits<double>::infinity();
    return g;
}

namespace {

template <class T>
std::string str(T v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void check_caps(const DeskScaleGuard& g, int m, int n, std::optional<Weight> budget, Weight max_weight,
                double estimate) {
    if (m > g.max_candidates)
        throw OracleRefused("m", "m=" + str(m) + " exceeds guard cap m=" + str(g.max_candidates));
    if (n > g.max_voters) throw OracleRefused("n", "n=" + str(n) + " exceeds guard cap n=" + str(g.max_voters));
    if (budget && *budget > g.max_budget)
        throw OracleRefused("budget", "budget=" + str(*budget) + " exceeds guard cap budget=" + str(g.max_budget));
    if (max_weight > g.max_weight)
        throw OracleRefused("weight", "weight=" + str(max_weight) + " exceeds guard cap weight=" + str(g.max_weight));
    if (estimate > g.ceiling)
        throw OracleRefused("ceiling",
                            "estimated search size " + str(estimate) + " exceeds guard cap ceiling=" + str(g.ceiling));
}

double falling(int n, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r;
}

double choose(int n, int k) {
    double r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

double ballot_count_d(int m, ElectionKind kind) {
    if (kind == ElectionKind::Bucklin) return falling(m, m);
    double total = 0;
    for (int j = 0; j <= m; ++j) total += falling(m, j);
    return total;
}

Weight max_voter_weight(const Election& e) {
    Weight w = 0;
    for (const auto& v : e.voters()) w = std::max(w, v.weight);
    return w;
}

void require_candidates(const Election& e) {
    if (e.num_candidates() == 0) throw InvalidInput("election has no candidates");
}

// Builds the ballot with a fixed prefix completed canonically: remaining
// candidates ascending for Bucklin, nothing more for fallback.
Ballot complete(ElectionKind kind, int m, const std::vector<CandidateId>& prefix) {
    Ballot b{prefix};
    if (kind == ElectionKind::Bucklin) {
        std::vector<char> used(static_cast<std::size_t>(m), 0);
        for (CandidateId c : prefix) used[static_cast<std::size_t>(c)] = 1;
        for (CandidateId c = 0; c < m; ++c)
            if (!used[static_cast<std::size_t>(c)]) b.ranking.push_back(c);
    }
    return b;
}

// Assigns ballots to "free" voters (manipulators or bribed voters) level by
// level. Once some candidate reaches the majority threshold at a level, the
// winners are fixed by that level's scores, so the remaining positions are
// irrelevant and the branch is closed. Free voters of equal weight are
// interchangeable; their prefixes are kept lexicographically nondecreasing.
class CompletionSearch {
public:
    CompletionSearch(ElectionKind kind, int m, const std::vector<Voter>& fixed, const std::vector<Weight>& free_weights,
                     Goal goal, CandidateId designated)
        : kind_(kind), m_(m), goal_(goal), designated_(designated) {
        base_.assign(static_cast<std::size_t>(m * m), 0);
        Weight total = 0;
        for (const auto& v : fixed) {
            total += v.weight;
            const auto& r = v.ballot.ranking;
            for (std::size_t pos = 0; pos < r.size(); ++pos) at(r[pos], static_cast<int>(pos)) += v.weight;
        }
        for (CandidateId c = 0; c < m; ++c)
            for (int j = 1; j < m; ++j) at(c, j) += at(c, j - 1);

        order_.resize(free_weights.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return free_weights[static_cast<std::size_t>(a)] < free_weights[static_cast<std::size_t>(b)]; });
        for (int idx : order_) {
            w_.push_back(free_weights[static_cast<std::size_t>(idx)]);
            total += w_.back();
        }
        if (kind == ElectionKind::Bucklin && total < 1)
            throw InvalidInput("Bucklin winners are undefined for total weight 0");
        maj_ = majority_threshold_for(total);

        const std::size_t f = w_.size();
        prefix_.assign(f, {});
        used_.assign(f, std::vector<char>(static_cast<std::size_t>(m), 0));
        stopped_.assign(f, 0);
        tied_.assign(f, 0);
        for (std::size_t i = 1; i < f; ++i) tied_[i] = w_[i] == w_[i - 1];
        choice_.assign(f, 0);
        contrib_.assign(static_cast<std::size_t>(m), 0);
        scores_.assign(static_cast<std::size_t>(m), 0);
    }

    std::optional<std::vector<Ballot>> run() {
        if (!choose_at(0, 0)) return std::nullopt;
        std::vector<Ballot> out(w_.size());
        for (std::size_t s = 0; s < w_.size(); ++s)
            out[static_cast<std::size_t>(order_[s])] = complete(kind_, m_, prefix_[s]);
        return out;
    }

private:
    Weight& at(CandidateId c, int level) { return base_[static_cast<std::size_t>(c * m_ + level)]; }

    bool choose_at(int level, std::size_t f) {
        if (f == w_.size()) return evaluate(level);
        int lower = tied_[f] ? choice_[f - 1] : INT_MIN;
        if (stopped_[f]) {
            choice_[f] = -1;
            return choose_at(level, f + 1);
        }
        const char was_tied = tied_[f];
        if (kind_ == ElectionKind::Fallback && -1 >= lower) {
            stopped_[f] = 1;
            choice_[f] = -1;
            tied_[f] = was_tied && choice_[f - 1] == -1;
            bool ok = choose_at(level, f + 1);
            stopped_[f] = 0;
            tied_[f] = was_tied;
            if (ok) {
                stopped_[f] = 1;
                return true;
            }
        }
        for (CandidateId c = std::max(0, lower); c < m_; ++c) {
            if (used_[f][static_cast<std::size_t>(c)]) continue;
            used_[f][static_cast<std::size_t>(c)] = 1;
            prefix_[f].push_back(c);
            contrib_[static_cast<std::size_t>(c)] += w_[f];
            choice_[f] = c;
            tied_[f] = was_tied && choice_[f - 1] == c;
            bool ok = choose_at(level, f + 1);
            tied_[f] = was_tied;
            if (ok) return true;
            contrib_[static_cast<std::size_t>(c)] -= w_[f];
            prefix_[f].pop_back();
            used_[f][static_cast<std::size_t>(c)] = 0;
        }
        return false;
    }

    bool evaluate(int level) {
        bool reached = false;
        for (CandidateId c = 0; c < m_; ++c) {
            Weight s = at(c, level) + contrib_[static_cast<std::size_t>(c)];
            scores_[static_cast<std::size_t>(c)] = s;
            reached = reached || s >= maj_;
        }
        if (!reached && level + 1 < m_) return choose_at(level + 1, 0);

        WinnerResult r;
        if (reached) r.decisive_level = level + 1;
        Weight top = -1;
        for (CandidateId c = 0; c < m_; ++c) {
            Weight s = scores_[static_cast<std::size_t>(c)];
            if (reached && s < maj_) continue;
            if (s > top) {
                top = s;
                r.winners.clear();
            }
            if (s == top) r.winners.push_back(c);
        }
        return goal_met(goal_, r, designated_);
    }

    ElectionKind kind_;
    int m_;
    Goal goal_;
    CandidateId designated_;
    Weight maj_ = 1;
    std::vector<Weight> base_;
    std::vector<int> order_;
    std::vector<Weight> w_;
    std::vector<std::vector<CandidateId>> prefix_;
    std::vector<std::vector<char>> used_;
    std::vector<char> stopped_;
    std::vector<char> tied_;
    std::vector<int> choice_;
    std::vector<Weight> contrib_;
    std::vector<Weight> scores_;
};

// Full enumeration of ballot assignments, evaluated through the public
// winner functions. `place` writes the assignment into a voter list.
std::optional<std::vector<Ballot>> naive_assignments(
    const Election& base, std::size_t free_count, Goal goal, CandidateId designated,
    const std::function<std::vector<Voter>(const std::vector<Ballot>&)>& place) {
    auto ballots = enumerate_ballots(base.num_candidates(), base.kind(), DeskScaleGuard::unlimited());
    std::vector<std::size_t> odo(free_count, 0);
    std::vector<Ballot> pick(free_count);
    while (true) {
        for (std::size_t i = 0; i < free_count; ++i) pick[i] = ballots[odo[i]];
        auto r = winners(base.with_voters(place(pick)));
        if (goal_met(goal, r, designated)) return pick;
        std::size_t i = 0;
        while (i < free_count && ++odo[i] == ballots.size()) odo[i++] = 0;
        if (i == free_count) return std::nullopt;
    }
}

}  // namespace

// -------------------------------------------------------------- ballots

std::uint64_t ballot_count(int num_candidates, ElectionKind kind) {
    double d = ballot_count_d(num_candidates, kind);
    if (d >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
    // Exact for every m where the count fits.
    std::uint64_t total = 0;
    auto falling_u = [](int n, int k) {
        std::uint64_t r = 1;
        for (int i = 0; i < k; ++i) r *= static_cast<std::uint64_t>(n - i);
        return r;
    };
    if (kind == ElectionKind::Bucklin) return falling_u(num_candidates, num_candidates);
    for (int j = 0; j <= num_candidates; ++j) total += falling_u(num_candidates, j);
    return total;
}

void for_each_ballot(int num_candidates, ElectionKind kind, const std::function<void(const Ballot&)>& visit) {
    const int m = num_candidates;
    Ballot b;
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::function<void(int)> extend = [&](int length) {
        if (static_cast<int>(b.ranking.size()) == length) {
            visit(b);
            return;
        }
        for (CandidateId c = 0; c < m; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            used[static_cast<std::size_t>(c)] = 1;
            b.ranking.push_back(c);
            extend(length);
            b.ranking.pop_back();
            used[static_cast<std::size_t>(c)] = 0;
        }
    };
    if (kind == ElectionKind::Bucklin) {
        extend(m);
    } else {
        for (int length = 0; length <= m; ++length) extend(length);
    }
}

std::vector<Ballot> enumerate_ballots(int num_candidates, ElectionKind kind, const DeskScaleGuard& guard) {
    check_caps(guard, num_candidates, 0, std::nullopt, 0, ballot_count_d(num_candidates, kind));
    std::vector<Ballot> out;
    for_each_ballot(num_candidates, kind, [&](const Ballot& b) { out.push_back(b); });
    return out;
}

// ---------------------------------------------------------- search sizes

double manipulation_search_size(const ManipulationInstance& instance) {
    double b = ballot_count_d(instance.election.num_candidates(), instance.election.kind());
    return std::pow(b, static_cast<double>(instance.manipulator_weights.size()));
}

namespace {

int max_affordable(const BriberyInstance& instance) {
    const int n = instance.election.num_voters();
    if (!instance.priced) return static_cast<int>(std::min<Weight>(n, instance.budget));
    std::vector<Weight> prices;
    for (const auto& v : instance.election.voters()) prices.push_back(v.price);
    std::sort(prices.begin(), prices.end());
    Weight spent = 0;
    int count = 0;
    for (Weight p : prices) {
        if (spent + p > instance.budget) break;
        spent += p;
        ++count;
    }
    return count;
}

}  // namespace

double bribery_search_size(const BriberyInstance& instance) {
    const int n = instance.election.num_voters();
    double b = ballot_count_d(instance.election.num_candidates(), instance.election.kind());
    double total = 0;
    for (int j = 0; j <= max_affordable(instance); ++j) total += choose(n, j) * std::pow(b, j);
    return total;
}

double campaign_search_size(const CampaignInstance& instance) {
    const int m = instance.election.num_candidates();
    double total = 1;
    for (const auto& v : instance.election.voters()) {
        int len = static_cast<int>(v.ballot.ranking.size());
        if (is_swap_problem(instance.problem)) {
            total *= falling(len, len);
        } else {
            int open = m - len;
            double options = 0;
            for (int j = 0; j <= open; ++j) options += falling(open, j);
            total *= options;
        }
    }
    return total;
}

// ---------------------------------------------------------- manipulation

ManipulationAnswer brute_manipulation(const ManipulationInstance& instance, const OracleOptions& options) {
    instance.validate();
    const Election& e = instance.election;
    require_candidates(e);
    Weight max_w = max_voter_weight(e);
    for (Weight w : instance.manipulator_weights) max_w = std::max(max_w, w);
    check_caps(options.guard, e.num_candidates(),
               e.num_voters() + static_cast<int>(instance.manipulator_weights.size()), std::nullopt, max_w,
               manipulation_search_size(instance));

    std::optional<std::vector<Ballot>> ballots;
    if (options.pruning) {
        CompletionSearch search(e.kind(), e.num_candidates(), e.voters(), instance.manipulator_weights, instance.goal,
                                instance.designated);
        ballots = search.run();
    } else {
        ballots = naive_assignments(e, instance.manipulator_weights.size(), instance.goal, instance.designated,
                                    [&](const std::vector<Ballot>& pick) {
                                        auto voters = e.voters();
                                        for (std::size_t i = 0; i < pick.size(); ++i)
                                            voters.push_back(Voter{pick[i], instance.manipulator_weights[i], 1});
                                        return voters;
                                    });
    }
    if (!ballots) return std::nullopt;
    ManipulationCertificate cert{*ballots, winners(combined_election(instance, *ballots))};
    if (!goal_met(instance.goal, cert.achieved, instance.designated))
        throw std::logic_error("oracle certificate does not replay");
    return cert;
}

// --------------------------------------------------------------- bribery

BriberyAnswer brute_bribery(const BriberyInstance& instance, const OracleOptions& options) {
    instance.validate();
    const Election& e = instance.election;
    require_candidates(e);
    const int n = e.num_voters();
    check_caps(options.guard, e.num_candidates(), n, instance.budget, max_voter_weight(e),
               bribery_search_size(instance));

    const int max_size = max_affordable(instance);
    std::vector<int> subset;
    for (int size = 0; size <= max_size; ++size) {
        // Combinations of `size` voters in lexicographic order.
        subset.resize(static_cast<std::size_t>(size));
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            Weight cost = 0;
            for (int i : subset) cost += instance.price_of(i);
            if (cost <= instance.budget) {
                std::vector<char> in(static_cast<std::size_t>(n), 0);
                for (int i : subset) in[static_cast<std::size_t>(i)] = 1;
                std::vector<Voter> fixed;
                std::vector<Weight> free_weights;
                for (int i = 0; i < n; ++i) {
                    if (in[static_cast<std::size_t>(i)])
                        free_weights.push_back(e.voter(i).weight);
                    else
                        fixed.push_back(e.voter(i));
                }
                std::optional<std::vector<Ballot>> ballots;
                if (options.pruning) {
                    CompletionSearch search(e.kind(), e.num_candidates(), fixed, free_weights, instance.goal,
                                            instance.designated);
                    ballots = search.run();
                } else {
                    ballots = naive_assignments(e, subset.size(), instance.goal, instance.designated,
                                                [&](const std::vector<Ballot>& pick) {
                                                    auto voters = e.voters();
                                                    for (std::size_t i = 0; i < pick.size(); ++i)
                                                        voters[static_cast<std::size_t>(subset[i])].ballot = pick[i];
                                                    return voters;
                                                });
                }
                if (ballots) {
                    BriberyCertificate cert{subset, *ballots, winners(bribed_election(e, subset, *ballots))};
                    if (!goal_met(instance.goal, cert.achieved, instance.designated))
                        throw std::logic_error("oracle certificate does not replay");
                    return cert;
                }
            }
            // Advance to the next combination.
            int k = size - 1;
            while (k >= 0 && subset[static_cast<std::size_t>(k)] == n - size + k) --k;
            if (k < 0) break;
            ++subset[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < size; ++j)
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return std::nullopt;
}

// -------------------------------------------------------------- campaign

namespace {

struct Option {
    std::vector<CandidateId> ranking;
    Weight cost = 0;
};

// Every reordering of `source` whose swap cost fits in `budget`, in
// lexicographic order of the target.
std::vector<Option> swap_options(const std::vector<CandidateId>& source, const SwapPriceFunction& prices,
                                 Weight budget) {
    std::vector<Option> out;
    const std::size_t len = source.size();
    std::vector<char> placed(len, 0);
    std::vector<CandidateId> target;
    std::vector<std::size_t> idx(len);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return source[a] < source[b]; });
    std::function<void(Weight)> rec = [&](Weight cost) {
        if (target.size() == len) {
            out.push_back(Option{target, cost});
            return;
        }
        for (std::size_t k : idx) {
            if (placed[k]) continue;
            // Unplaced candidates above source[k] in the source end up below it.
            Weight add = 0;
            for (std::size_t x = 0; x < k; ++x)
                if (!placed[x]) add += prices(source[x], source[k]);
            if (cost + add > budget) continue;
            placed[k] = 1;
            target.push_back(source[k]);
            rec(cost + add);
            target.pop_back();
            placed[k] = 0;
        }
    };
    rec(0);
    return out;
}

std::vector<Option> extension_options(const Ballot& ballot, int m, const ExtensionPriceFunction& prices,
                                      Weight budget, std::optional<CandidateId> only) {
    std::vector<Option> out;
    auto open = ballot.disapproved(m);
    if (only) {
        out.push_back(Option{ballot.ranking, 0});
        if (!ballot.approves(*only) && prices.cost(1) <= budget) {
            auto r = ballot.ranking;
            r.push_back(*only);
            out.push_back(Option{r, prices.cost(1)});
        }
        return out;
    }
    std::vector<char> used(open.size(), 0);
    std::vector<CandidateId> tail;
    std::function<void(std::size_t)> rec = [&](std::size_t length) {
        if (tail.size() == length) {
            auto r = ballot.ranking;
            r.insert(r.end(), tail.begin(), tail.end());
            out.push_back(Option{r, prices.cost(static_cast<int>(length))});
            return;
        }
        for (std::size_t i = 0; i < open.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            tail.push_back(open[i]);
            rec(length);
            tail.pop_back();
            used[i] = 0;
        }
    };
    for (std::size_t length = 0; length <= open.size(); ++length)
        if (prices.cost(static_cast<int>(length)) <= budget) rec(length);
    return out;
}

CampaignAnswer search_campaign(const CampaignInstance& instance, const std::vector<std::vector<Option>>& options) {
    const Election& e = instance.election;
    const Goal goal = goal_of(instance.problem);
    const std::size_t n = options.size();
    std::vector<std::size_t> pick(n, 0);
    std::vector<Voter> voters = e.voters();
    std::function<bool(std::size_t, Weight)> rec = [&](std::size_t i, Weight left) {
        if (i == n) return goal_met(goal, winners(e.with_voters(voters)), instance.designated);
        for (std::size_t o = 0; o < options[i].size(); ++o) {
            const auto& opt = options[i][o];
            if (opt.cost > left) continue;
            voters[i].ballot.ranking = opt.ranking;
            pick[i] = o;
            if (rec(i + 1, left - opt.cost)) return true;
        }
        voters[i].ballot = e.voters()[i].ballot;
        return false;
    };
    if (!rec(0, instance.budget)) return std::nullopt;

    CampaignCertificate cert;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& opt = options[i][pick[i]];
        cert.cost += opt.cost;
        if (opt.ranking == e.voters()[i].ballot.ranking) continue;
        cert.changed.push_back(static_cast<int>(i));
        cert.new_ballots.push_back(Ballot{opt.ranking});
        if (is_swap_problem(instance.problem))
            cert.swaps.push_back(swap_sequence(e.voters()[i].ballot.ranking, opt.ranking));
    }
    cert.achieved = winners(bribed_election(e, cert.changed, cert.new_ballots));
    if (!goal_met(goal, cert.achieved, instance.designated)) throw std::logic_error("oracle certificate does not replay");
    return cert;
}

void check_campaign_caps(const CampaignInstance& instance, const OracleOptions& options) {
    const Election& e = instance.election;
    require_candidates(e);
    check_caps(options.guard, e.num_candidates(), e.num_voters(), instance.budget, max_voter_weight(e),
               campaign_search_size(instance));
}

}  // namespace

CampaignAnswer brute_campaign(const CampaignInstance& instance, const OracleOptions& options) {
    instance.validate();
    check_campaign_caps(instance, options);
    const Election& e = instance.election;
    std::vector<std::vector<Option>> per_voter;
    for (int i = 0; i < e.num_voters(); ++i) {
        const auto& ballot = e.voter(i).ballot;
        if (is_swap_problem(instance.problem))
            per_voter.push_back(swap_options(ballot.ranking, instance.swap_prices[static_cast<std::size_t>(i)],
                                             instance.budget));
        else
            per_voter.push_back(extension_options(ballot, e.num_candidates(),
                                                  instance.extension_prices[static_cast<std::size_t>(i)],
                                                  instance.budget, std::nullopt));
    }
    return search_campaign(instance, per_voter);
}

CampaignAnswer brute_extension_designated_only(const CampaignInstance& instance, const OracleOptions& options) {
    instance.validate();
    if (is_swap_problem(instance.problem)) throw InvalidInput("designated-only search applies to extension bribery");
    check_campaign_caps(instance, options);
    const Election& e = instance.election;
    std::vector<std::vector<Option>> per_voter;
    for (int i = 0; i < e.num_voters(); ++i)
        per_voter.push_back(extension_options(e.voter(i).ballot, e.num_candidates(),
                                              instance.extension_prices[static_cast<std::size_t>(i)], instance.budget,
                                              instance.designated));
    return search_campaign(instance, per_voter);
}

}  // namespace bfv
