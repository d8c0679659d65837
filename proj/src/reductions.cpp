#include "bfv/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "bfv/campaign.hpp"

namespace bfv {

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count, int first = 1) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
    return out;
}

// `head` followed by every other candidate in ascending order.
std::vector<CandidateId> with_rest(std::vector<CandidateId> head, int m) {
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (CandidateId c : head) used[static_cast<std::size_t>(c)] = 1;
    for (CandidateId c = 0; c < m; ++c)
        if (!used[static_cast<std::size_t>(c)]) head.push_back(c);
    return head;
}

}  // namespace

// --------------------------------------------------------------- sources

void PartitionInstance::validate(Weight min_value) const {
    if (values.empty()) throw InvalidInput("partition needs at least one value");
    for (Weight a : values)
        if (a < min_value) throw InvalidInput("partition values must be at least " + std::to_string(min_value));
    if (std::accumulate(values.begin(), values.end(), Weight{0}) % 2 != 0)
        throw InvalidInput("partition values must have an even sum");
}

Weight PartitionInstance::half() const { return std::accumulate(values.begin(), values.end(), Weight{0}) / 2; }

bool partition_has_solution(const PartitionInstance& src) {
    const Weight total = std::accumulate(src.values.begin(), src.values.end(), Weight{0});
    if (total % 2 != 0) return false;
    const std::size_t k = src.values.size();
    if (k >= 63) throw InvalidInput("partition brute force is limited to 62 values");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Weight sum = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) sum += src.values[i];
        if (2 * sum == total) return true;
    }
    return false;
}

void X3CInstance::validate() const {
    if (m < 1) throw InvalidInput("X3C needs m >= 1");
    for (const auto& s : sets) {
        for (int x : s)
            if (x < 1 || x > 3 * m) throw InvalidInput("X3C element out of range");
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) throw InvalidInput("X3C sets need three distinct elements");
    }
}

std::vector<int> X3CInstance::occurrences() const {
    std::vector<int> out(static_cast<std::size_t>(3 * m), 0);
    for (const auto& s : sets)
        for (int x : s) ++out[static_cast<std::size_t>(x - 1)];
    return out;
}

bool x3c_has_cover(const X3CInstance& src) {
    src.validate();
    std::vector<char> covered(static_cast<std::size_t>(3 * src.m), 0);
    std::function<bool(int)> rec = [&](int left) {
        if (left == 0) return true;
        std::size_t first = 0;
        while (covered[first]) ++first;
        for (const auto& s : src.sets) {
            if (std::find(s.begin(), s.end(), static_cast<int>(first) + 1) == s.end()) continue;
            bool free = true;
            for (int x : s) free = free && !covered[static_cast<std::size_t>(x - 1)];
            if (!free) continue;
            for (int x : s) covered[static_cast<std::size_t>(x - 1)] = 1;
            bool ok = rec(left - 1);
            for (int x : s) covered[static_cast<std::size_t>(x - 1)] = 0;
            if (ok) return true;
        }
        return false;
    };
    return rec(src.m);
}

void SingleVoteSwapInstance::validate() const {
    const int m = static_cast<int>(candidates.size());
    if (m < 1) throw InvalidInput("single-vote instance needs candidates");
    Election(ElectionKind::Bucklin, candidates, {Voter{Ballot{vote}}});
    if (prices.num_candidates() != m) throw InvalidInput("swap price matrix must be m x m");
    if (designated < 0 || designated >= m) throw InvalidInput("designated candidate is not in the roster");
    if (position < 1 || position > m) throw InvalidInput("target position must lie in 1..m");
    if (budget < 0) throw InvalidInput("budget must be nonnegative");
}

bool single_vote_has_solution(const SingleVoteSwapInstance& src) {
    src.validate();
    auto target = src.vote;
    std::sort(target.begin(), target.end());
    do {
        auto at = std::find(target.begin(), target.end(), src.designated) - target.begin();
        if (at < src.position && swap_sequence_cost(src.vote, target, src.prices) <= src.budget) return true;
    } while (std::next_permutation(target.begin(), target.end()));
    return false;
}

// ------------------------------------------------------------ generators

ManipulationInstance gen_ccwm_from_partition(const PartitionInstance& src) {
    src.validate(2);
    const Weight k = src.half();
    enum : CandidateId { b, c, d, p };
    std::vector<Voter> voters{
        Voter{Ballot{{c, p, d, b}}, 2 * k, 1},
        Voter{Ballot{{c, d, p, b}}, k - 1, 1},
        Voter{Ballot{{b, d, p, c}}, 3 * k - 1, 1},
    };
    return ManipulationInstance{Election(ElectionKind::Bucklin, {"b", "c", "d", "p"}, std::move(voters)), src.values,
                                p, Goal::Constructive};
}

BriberyInstance gen_cub_bucklin_from_x3c(const X3CInstance& src) {
    src.validate();
    const int m = src.m;
    const int n = static_cast<int>(src.sets.size());
    if (n < 2 * m) throw InvalidInput("the Bucklin X3C construction needs n >= 2m");
    const auto occ = src.occurrences();
    for (int l : occ)
        if (l < 1) throw InvalidInput("the Bucklin X3C construction needs every element in some set");

    int g2 = n - 2 * m + (m - 1);
    for (int l : occ) g2 += l - 1;
    g2 = std::max(g2, 4);
    const int g1 = 3 * m - 3;

    std::vector<std::string> names = numbered("b", 3 * m);
    const CandidateId c = static_cast<CandidateId>(names.size());
    names.push_back("c");
    const CandidateId d = static_cast<CandidateId>(names.size());
    names.push_back("d");
    const CandidateId g_first = static_cast<CandidateId>(names.size());
    for (auto& g : numbered("g", g1 + g2)) names.push_back(g);
    const CandidateId p = static_cast<CandidateId>(names.size());
    names.push_back("p");
    const int total = static_cast<int>(names.size());

    std::vector<Voter> voters;
    for (const auto& s : src.sets) {
        std::vector<CandidateId> head{c, d};
        std::array<int, 3> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        for (int x : sorted) head.push_back(x - 1);
        for (int g = 0; g < g1; ++g) head.push_back(g_first + g);
        voters.push_back(Voter{Ballot{with_rest(head, total)}});
    }

    CandidateId next_pad = g_first + g1;
    std::vector<std::vector<CandidateId>> group(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) group[static_cast<std::size_t>(v)].push_back(v < m ? c : v < 2 * m ? d : next_pad++);
    for (int j = 0; j < 3 * m; ++j)
        for (int v = 0; v < n; ++v)
            group[static_cast<std::size_t>(v)].push_back(v <= n - occ[static_cast<std::size_t>(j)] ? j : next_pad++);
    for (int v = 0; v < n; ++v) group[static_cast<std::size_t>(v)].push_back(v < n - m + 1 ? p : next_pad++);
    for (auto& head : group) voters.push_back(Voter{Ballot{with_rest(head, total)}});

    Election e(ElectionKind::Bucklin, names, std::move(voters));
    const auto table = level_scores(e);
    for (CandidateId g = g_first + g1; g < p; ++g)
        if (table.score(g, 3 * m + 2) > 1) throw std::logic_error("padding candidate gains more than one point");
    return BriberyInstance{std::move(e), p, m, false, false, Goal::Constructive};
}

BriberyInstance gen_cub_fallback_from_x3c(const X3CInstance& src) {
    src.validate();
    const int m = src.m;
    const int n = static_cast<int>(src.sets.size());
    if (n < std::max(m, 2)) throw InvalidInput("the fallback X3C construction needs n >= max(m, 2)");
    const auto occ = src.occurrences();

    std::vector<std::string> names = numbered("b", 3 * m);
    const CandidateId e_first = static_cast<CandidateId>(names.size());
    for (auto& e : numbered("e", n + m)) names.push_back(e);
    const CandidateId p = static_cast<CandidateId>(names.size());
    names.push_back("p");

    std::vector<Voter> voters;
    for (const auto& s : src.sets) {
        std::vector<CandidateId> approved;
        for (int x : s) approved.push_back(x - 1);
        std::sort(approved.begin(), approved.end());
        voters.push_back(Voter{Ballot{approved}});
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<CandidateId> approved;
        for (int j = 0; j < 3 * m; ++j)
            if (i <= n - occ[static_cast<std::size_t>(j)]) approved.push_back(j);
        voters.push_back(Voter{Ballot{approved}});
    }
    for (int i = 0; i < n - m; ++i) voters.push_back(Voter{Ballot{{p}}});
    for (int l = 0; l < n + m; ++l) voters.push_back(Voter{Ballot{{e_first + l}}});

    return BriberyInstance{Election(ElectionKind::Fallback, names, std::move(voters)), p, m, false, false,
                           Goal::Constructive};
}

BriberyInstance gen_dwb_priced(const PartitionInstance& src, ElectionKind kind) {
    src.validate();
    const CandidateId c = 0;
    const CandidateId p = 1;
    std::vector<Voter> voters;
    for (Weight a : src.values)
        voters.push_back(Voter{kind == ElectionKind::Bucklin ? Ballot{{p, c}} : Ballot{{p}}, a, a});
    return BriberyInstance{Election(kind, {"c", "p"}, std::move(voters)), p, src.half(), true, true,
                           Goal::Destructive};
}

CampaignInstance gen_cweb_from_partition(const PartitionInstance& src, Goal goal) {
    src.validate();
    const Weight k = src.half();
    enum : CandidateId { b, c, p };
    const bool constructive = goal == Goal::Constructive;
    std::vector<Voter> voters;
    std::vector<ExtensionPriceFunction> prices;
    auto add = [&](CandidateId top, Weight weight, Weight cost) {
        voters.push_back(Voter{Ballot{{top}}, weight, 1});
        prices.push_back(ExtensionPriceFunction::linear(cost, 2));
    };
    add(constructive ? p : c, constructive ? k + 1 : k, k + 1);
    for (Weight a : src.values) add(constructive ? c : p, a, a);
    add(b, constructive ? 2 * k : k, k + 1);

    CampaignInstance out;
    out.election = Election(ElectionKind::Fallback, {"b", "c", "p"}, std::move(voters));
    out.designated = p;
    out.budget = k;
    out.problem = constructive ? CampaignProblem::CWEB : CampaignProblem::DWEB;
    out.extension_prices = std::move(prices);
    return out;
}

CampaignInstance gen_cusb_from_single_vote(const SingleVoteSwapInstance& src, Goal goal) {
    src.validate();
    const int m = static_cast<int>(src.candidates.size());
    const bool constructive = goal == Goal::Constructive;
    const int lead = constructive ? src.position : src.position - 1;
    const int dummies = std::max(m - 1, lead);

    std::vector<std::string> names = src.candidates;
    for (auto& x : numbered("x", dummies)) names.push_back(x);
    names.push_back("d");
    for (std::size_t i = static_cast<std::size_t>(m); i < names.size(); ++i)
        if (std::count(names.begin(), names.end(), names[i]) > 1)
            throw InvalidInput("candidate name '" + names[i] + "' is reserved by this construction");
    const int total = static_cast<int>(names.size());
    const CandidateId d = total - 1;
    const Weight blocked = src.budget + 1;

    std::vector<CandidateId> v1{d};
    v1.insert(v1.end(), src.vote.begin(), src.vote.end());
    for (int x = 0; x < dummies; ++x) v1.push_back(m + x);

    std::vector<CandidateId> v2{src.designated};
    for (int x = 0; x < lead; ++x) v2.push_back(m + x);
    v2.push_back(d);
    for (int x = lead; x < dummies; ++x) v2.push_back(m + x);
    for (CandidateId c = 0; c < m; ++c)
        if (c != src.designated) v2.push_back(c);

    SwapPriceFunction pi1(total, blocked);
    for (CandidateId x = 0; x < m; ++x)
        for (CandidateId y = 0; y < m; ++y)
            if (x != y) pi1.set(x, y, src.prices(x, y));

    CampaignInstance out;
    out.election = Election(ElectionKind::Bucklin, names, {Voter{Ballot{v1}}, Voter{Ballot{v2}}});
    out.designated = constructive ? src.designated : d;
    out.budget = src.budget;
    out.problem = constructive ? CampaignProblem::CUSB : CampaignProblem::DUSB;
    out.swap_prices = {pi1, SwapPriceFunction(total, blocked)};
    return out;
}

}  // namespace bfv
