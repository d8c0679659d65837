#include "bfv/problems.hpp"

namespace bfv {

namespace {

void check_candidate(const Election& e, CandidateId c) {
    if (c < 0 || c >= e.num_candidates()) throw InvalidInput("designated candidate is not in the roster");
}

}  // namespace

void ManipulationInstance::validate() const {
    check_candidate(election, designated);
    if (manipulator_weights.empty()) throw InvalidInput("at least one manipulator is required");
    for (Weight w : manipulator_weights)
        if (w < 0) throw InvalidInput("manipulator weights must be nonnegative");
}

bool ManipulationInstance::unweighted() const {
    for (const auto& v : election.voters())
        if (v.weight != 1) return false;
    for (Weight w : manipulator_weights)
        if (w != 1) return false;
    return true;
}

Election combined_election(const ManipulationInstance& instance, const std::vector<Ballot>& ballots) {
    if (ballots.size() != instance.manipulator_weights.size())
        throw InvalidInput("one ballot per manipulator is required");
    auto voters = instance.election.voters();
    for (std::size_t i = 0; i < ballots.size(); ++i)
        voters.push_back(Voter{ballots[i], instance.manipulator_weights[i], 1});
    return instance.election.with_voters(std::move(voters));
}

void BriberyInstance::validate() const {
    check_candidate(election, designated);
    if (budget < 0) throw InvalidInput("budget must be nonnegative");
    for (const auto& v : election.voters()) {
        if (!weighted && v.weight != 1) throw InvalidInput("unweighted bribery requires unit weights");
        if (!priced && v.price != 1) throw InvalidInput("unpriced bribery requires unit prices");
    }
}

Election bribed_election(const Election& election, const std::vector<int>& bribed,
                         const std::vector<Ballot>& replacements) {
    if (bribed.size() != replacements.size()) throw InvalidInput("one replacement per bribed voter is required");
    auto voters = election.voters();
    for (std::size_t i = 0; i < bribed.size(); ++i)
        voters.at(static_cast<std::size_t>(bribed[i])).ballot = replacements[i];
    return election.with_voters(std::move(voters));
}

SwapPriceFunction::SwapPriceFunction(int num_candidates, Weight fill)
    : m_(num_candidates), data_(static_cast<std::size_t>(num_candidates * num_candidates), fill) {
    for (int c = 0; c < m_; ++c) data_[static_cast<std::size_t>(c * m_ + c)] = 0;
}

SwapPriceFunction::SwapPriceFunction(int num_candidates, std::vector<Weight> row_major)
    : m_(num_candidates), data_(std::move(row_major)) {
    if (data_.size() != static_cast<std::size_t>(m_ * m_)) throw InvalidInput("swap price matrix must be m x m");
    for (Weight w : data_)
        if (w < 0) throw InvalidInput("swap prices must be nonnegative");
}

Weight SwapPriceFunction::operator()(CandidateId x, CandidateId y) const {
    return data_.at(static_cast<std::size_t>(x * m_ + y));
}

void SwapPriceFunction::set(CandidateId x, CandidateId y, Weight price) {
    if (price < 0) throw InvalidInput("swap prices must be nonnegative");
    data_.at(static_cast<std::size_t>(x * m_ + y)) = price;
}

Weight ExtensionPriceFunction::cost(int count) const {
    if (count < 0 || count > max_extension()) throw InvalidInput("extension price undefined for this count");
    return costs[static_cast<std::size_t>(count)];
}

ExtensionPriceFunction ExtensionPriceFunction::linear(Weight unit, int max_count) {
    ExtensionPriceFunction f;
    for (int j = 0; j <= max_count; ++j) f.costs.push_back(unit * j);
    return f;
}

const char* to_string(CampaignProblem problem) {
    switch (problem) {
    case CampaignProblem::CUSB: return "CUSB";
    case CampaignProblem::DUSB: return "DUSB";
    case CampaignProblem::CWSB: return "CWSB";
    case CampaignProblem::DWSB: return "DWSB";
    case CampaignProblem::CUEB: return "CUEB";
    case CampaignProblem::DUEB: return "DUEB";
    case CampaignProblem::CWEB: return "CWEB";
    case CampaignProblem::DWEB: return "DWEB";
    }
    return "?";
}

bool is_swap_problem(CampaignProblem p) {
    return p == CampaignProblem::CUSB || p == CampaignProblem::DUSB || p == CampaignProblem::CWSB ||
           p == CampaignProblem::DWSB;
}

bool is_weighted(CampaignProblem p) {
    return p == CampaignProblem::CWSB || p == CampaignProblem::DWSB || p == CampaignProblem::CWEB ||
           p == CampaignProblem::DWEB;
}

Goal goal_of(CampaignProblem p) {
    switch (p) {
    case CampaignProblem::CUSB:
    case CampaignProblem::CWSB:
    case CampaignProblem::CUEB:
    case CampaignProblem::CWEB: return Goal::Constructive;
    default: return Goal::Destructive;
    }
}

void CampaignInstance::validate() const {
    check_candidate(election, designated);
    if (budget < 0) throw InvalidInput("budget must be nonnegative");
    const auto n = static_cast<std::size_t>(election.num_voters());
    if (!is_weighted(problem))
        for (const auto& v : election.voters())
            if (v.weight != 1) throw InvalidInput(std::string(to_string(problem)) + " requires unit weights");
    if (is_swap_problem(problem)) {
        if (swap_prices.size() != n) throw InvalidInput("one swap price function per voter is required");
        for (const auto& f : swap_prices)
            if (f.num_candidates() != election.num_candidates())
                throw InvalidInput("swap price function size does not match the roster");
    } else {
        if (election.kind() != ElectionKind::Fallback)
            throw InvalidInput("extension bribery is defined for fallback elections only");
        if (extension_prices.size() != n) throw InvalidInput("one extension price function per voter is required");
        for (std::size_t i = 0; i < n; ++i) {
            const auto& f = extension_prices[i];
            const auto& b = election.voters()[i].ballot;
            int open = election.num_candidates() - static_cast<int>(b.ranking.size());
            if (f.costs.empty() || f.costs[0] != 0) throw InvalidInput("extension price must start with 0");
            if (f.max_extension() < open)
                throw InvalidInput("extension price must cover every disapproved candidate");
            for (Weight w : f.costs)
                if (w < 0) throw InvalidInput("extension prices must be nonnegative");
        }
    }
}

}  // namespace bfv
