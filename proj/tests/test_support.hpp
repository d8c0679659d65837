#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "bfv/election.hpp"
#include "bfv/io.hpp"
#include "bfv/oracle.hpp"

namespace bfv::testing {

inline Election parse(const std::string& text) { return parse_election(text); }

inline std::vector<std::string> letter_names(int m) {
    std::vector<std::string> out;
    for (int i = 0; i < m; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

// Reference winner rule written straight from the definitions: count, for
// each level, the weight of voters ranking a candidate at or above it.
inline WinnerResult reference_winners(const Election& e, bool simplified = false) {
    const int m = e.num_candidates();
    Weight total = 0;
    for (const auto& v : e.voters()) total += v.weight;
    const Weight maj = total / 2 + 1;
    for (int level = 1; level <= m; ++level) {
        std::vector<Weight> s(static_cast<std::size_t>(m), 0);
        for (const auto& v : e.voters())
            for (int pos = 0; pos < std::min<int>(level, static_cast<int>(v.ballot.ranking.size())); ++pos)
                s[static_cast<std::size_t>(v.ballot.ranking[static_cast<std::size_t>(pos)])] += v.weight;
        Weight best = -1;
        for (Weight x : s)
            if (x >= maj) best = std::max(best, x);
        if (best < 0) continue;
        WinnerResult r;
        r.decisive_level = level;
        for (CandidateId c = 0; c < m; ++c)
            if (simplified ? s[static_cast<std::size_t>(c)] >= maj : s[static_cast<std::size_t>(c)] == best)
                r.winners.push_back(c);
        return r;
    }
    // Nobody reached a majority: approval totals decide.
    std::vector<Weight> s(static_cast<std::size_t>(m), 0);
    for (const auto& v : e.voters())
        for (CandidateId c : v.ballot.ranking) s[static_cast<std::size_t>(c)] += v.weight;
    WinnerResult r;
    Weight best = *std::max_element(s.begin(), s.end());
    for (CandidateId c = 0; c < m; ++c)
        if (s[static_cast<std::size_t>(c)] == best) r.winners.push_back(c);
    return r;
}

inline std::vector<Ballot> all_ballots(int m, ElectionKind kind) {
    return enumerate_ballots(m, kind, DeskScaleGuard::unlimited());
}

inline Ballot random_ballot(std::mt19937& rng, int m, ElectionKind kind) {
    Ballot b;
    for (int c = 0; c < m; ++c) b.ranking.push_back(c);
    std::shuffle(b.ranking.begin(), b.ranking.end(), rng);
    if (kind == ElectionKind::Fallback) b.ranking.resize(std::uniform_int_distribution<int>(0, m)(rng));
    return b;
}

inline Election random_election(std::mt19937& rng, ElectionKind kind, int m, int n, Weight max_weight,
                                Weight max_price = 1) {
    std::vector<Voter> voters;
    for (int i = 0; i < n; ++i)
        voters.push_back(Voter{random_ballot(rng, m, kind), std::uniform_int_distribution<Weight>(1, max_weight)(rng),
                               std::uniform_int_distribution<Weight>(1, max_price)(rng)});
    return Election(kind, letter_names(m), std::move(voters));
}

// Calls `visit` with every multiset (as a nondecreasing index sequence) of
// size `size` drawn from `types` items.
inline void for_each_multiset(int types, int size, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> pick(static_cast<std::size_t>(size), 0);
    std::function<void(int, int)> rec = [&](int at, int lo) {
        if (at == size) {
            visit(pick);
            return;
        }
        for (int t = lo; t < types; ++t) {
            pick[static_cast<std::size_t>(at)] = t;
            rec(at + 1, t);
        }
    };
    rec(0, 0);
}

}  // namespace bfv::testing
