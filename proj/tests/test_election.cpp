#include <doctest.h>

#include "bfv/reductions.hpp"
#include "test_support.hpp"

using namespace bfv;
using bfv::testing::parse;

namespace {

const char* kTable2 = R"(kind: bucklin
candidates: b c d p
vote: c > p > d > b weight=4
vote: c > d > p > b
vote: b > d > p > c weight=5
)";

const char* kTable8a = R"(kind: fallback
candidates: b c p
vote: p | b c weight=3
vote: c | b p
vote: c | b p
vote: c | b p
vote: c | b p
vote: b | c p weight=4
)";

std::vector<Weight> level(const ScoreTable& t, int l) {
    std::vector<Weight> out;
    for (CandidateId c = 0; c < t.num_candidates(); ++c) out.push_back(t.score(c, l));
    return out;
}

}  // namespace

TEST_SUITE("election") {
    TEST_CASE("majority threshold") {
        CHECK(majority_threshold(std::vector<Voter>{{{}, 4}, {{}, 1}, {{}, 5}}) == 6);
        CHECK(majority_threshold(std::vector<Voter>{}) == 1);
        CHECK(majority_threshold(std::vector<Voter>(4, Voter{})) == 3);
    }

    TEST_CASE("level scores of the four-candidate weighted election") {
        auto t = level_scores(parse(kTable2));
        CHECK(t.maj == 6);
        CHECK(level(t, 1) == std::vector<Weight>{5, 5, 0, 0});
        CHECK(level(t, 2) == std::vector<Weight>{5, 5, 6, 4});
        CHECK(t.bucklin_score[2] == 2);
        CHECK(t.bucklin_score[3] == 3);
    }

    TEST_CASE("single voter level scores") {
        auto t = level_scores(parse("kind: bucklin\ncandidates: a b\nvote: a > b\n"));
        CHECK(level(t, 1) == std::vector<Weight>{1, 0});
        CHECK(level(t, 2) == std::vector<Weight>{1, 1});
    }

    TEST_CASE("approval totals without a majority") {
        auto e = parse(kTable8a);
        CHECK(approval_scores(e) == std::vector<Weight>{4, 4, 3});
        auto t = level_scores(e);
        CHECK(t.maj == 6);
        for (const auto& s : t.bucklin_score) CHECK_FALSE(s.has_value());
    }

    TEST_CASE("Bucklin winners") {
        auto e = parse(kTable2);
        auto r = bucklin_winners(e);
        CHECK(r.winners == std::vector<CandidateId>{2});
        CHECK(r.decisive_level == 2);

        auto voters = e.voters();
        voters.push_back(Voter{Ballot{{3, 1, 0, 2}}, 2});
        voters.push_back(Voter{Ballot{{3, 0, 1, 2}}, 2});
        auto after = e.with_voters(voters);
        auto t = level_scores(after);
        CHECK(level(t, 1) == std::vector<Weight>{5, 5, 0, 4});
        CHECK(level(t, 2) == std::vector<Weight>{7, 7, 6, 8});
        r = bucklin_winners(after);
        CHECK(r.winners == std::vector<CandidateId>{3});
        CHECK(r.decisive_level == 2);

        r = bucklin_winners(parse("kind: bucklin\ncandidates: solo\nvote: solo\n"));
        CHECK(r.winners == std::vector<CandidateId>{0});
        CHECK(r.decisive_level == 1);
    }

    TEST_CASE("simplified Bucklin winners") {
        CHECK(simplified_bucklin_winners(parse(kTable2)).winners == std::vector<CandidateId>{2});
        auto r = simplified_bucklin_winners(parse("kind: bucklin\ncandidates: a b\nvote: a > b\nvote: b > a\n"));
        CHECK(r.winners == std::vector<CandidateId>{0, 1});
        CHECK(r.decisive_level == 2);
        // maj 2; level 2 gives a=3, b=2, c=1, so a and b both reach it.
        auto e = parse("kind: bucklin\ncandidates: a b c\nvote: a > b > c\nvote: b > a > c\nvote: c > a > b\n");
        CHECK(simplified_bucklin_winners(e).winners == std::vector<CandidateId>{0, 1});
        CHECK(bucklin_winners(e).winners == std::vector<CandidateId>{0});
    }

    TEST_CASE("fallback winners") {
        auto e = parse(kTable8a);
        auto r = fallback_winners(e);
        CHECK(r.winners == std::vector<CandidateId>{0, 1});
        CHECK_FALSE(r.decisive_level.has_value());
        CHECK(format_winners(e, r) == "b c (approval-stage)");

        auto voters = e.voters();
        voters[1].ballot.ranking = {1, 2};
        voters[2].ballot.ranking = {1, 2};
        auto after = e.with_voters(voters);
        r = fallback_winners(after);
        CHECK(r.winners == std::vector<CandidateId>{2});
        CHECK_FALSE(r.decisive_level.has_value());
        CHECK(approval_scores(after) == std::vector<Weight>{4, 4, 5});

        r = fallback_winners(parse("kind: fallback\ncandidates: a b c\nvote: |\nvote: | a\n"));
        CHECK(r.winners == std::vector<CandidateId>{0, 1, 2});
        CHECK_FALSE(r.decisive_level.has_value());
    }

    TEST_CASE("fallback election from the X3C construction") {
        X3CInstance x{1, {{1, 2, 3}, {1, 2, 3}}};
        auto e = gen_cub_fallback_from_x3c(x).election;
        auto s = approval_scores(e);
        for (int j = 0; j < 3; ++j) CHECK(s[static_cast<std::size_t>(j)] == 2);
        CHECK(s[static_cast<std::size_t>(e.id_of("p"))] == 1);
        for (int l = 1; l <= 3; ++l) CHECK(s[static_cast<std::size_t>(e.id_of("e" + std::to_string(l)))] == 1);
    }

    TEST_CASE("rejections") {
        auto fb = parse(kTable8a);
        CHECK_THROWS_AS(bucklin_winners(fb), InvalidInput);
        CHECK_THROWS_AS(fallback_winners(parse(kTable2)), InvalidInput);
        CHECK_THROWS_AS(bucklin_winners(parse("kind: bucklin\ncandidates: a b\nvote: a > b weight=0\n")),
                        InvalidInput);
        CHECK_THROWS_AS(Election(ElectionKind::Bucklin, {"a", "b"}, {Voter{Ballot{{0}}}}), InvalidInput);
        CHECK_THROWS_AS(Election(ElectionKind::Fallback, {"a", "b"}, {Voter{Ballot{{0, 0}}}}), InvalidInput);
        CHECK_THROWS_AS(Election(ElectionKind::Fallback, {"a", "a"}, {}), InvalidInput);
        CHECK_THROWS_AS(Election(ElectionKind::Fallback, {"a"}, {Voter{Ballot{}, -1}}), InvalidInput);
    }

    TEST_CASE("winner rules agree with the reference definition") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 2000; ++trial) {
            auto kind = trial % 2 ? ElectionKind::Bucklin : ElectionKind::Fallback;
            int m = 1 + static_cast<int>(rng() % 6);
            int n = 1 + static_cast<int>(rng() % 8);
            auto e = testing::random_election(rng, kind, m, n, 4);
            CHECK(winners(e) == testing::reference_winners(e));
            if (kind == ElectionKind::Bucklin) {
                CHECK(simplified_bucklin_winners(e) == testing::reference_winners(e, true));
            }
        }
    }

    TEST_CASE("score table invariants") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 500; ++trial) {
            auto kind = trial % 2 ? ElectionKind::Bucklin : ElectionKind::Fallback;
            auto e = testing::random_election(rng, kind, 1 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 8), 4);
            auto t = level_scores(e);
            const Weight w = e.total_weight();
            CHECK(t.maj == w / 2 + 1);
            for (CandidateId c = 0; c < e.num_candidates(); ++c) {
                for (int l = 1; l <= e.num_candidates(); ++l) {
                    CHECK(t.score(c, l) >= t.score(c, l - 1));
                    CHECK(t.score(c, l) <= w);
                }
                if (kind == ElectionKind::Bucklin) CHECK(t.total(c) == w);
            }
        }
    }

    TEST_CASE("full approval matches Bucklin") {
        std::mt19937 rng(9);
        for (int trial = 0; trial < 500; ++trial) {
            auto b = testing::random_election(rng, ElectionKind::Bucklin, 1 + static_cast<int>(rng() % 5),
                                              1 + static_cast<int>(rng() % 7), 3);
            Election f(ElectionKind::Fallback, b.candidates(), b.voters());
            CHECK(winners(f) == winners(b));
        }
    }

    TEST_CASE("scaling weights keeps the winners") {
        std::mt19937 rng(21);
        for (int trial = 0; trial < 500; ++trial) {
            auto kind = trial % 2 ? ElectionKind::Bucklin : ElectionKind::Fallback;
            auto e = testing::random_election(rng, kind, 1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 7), 4);
            auto voters = e.voters();
            const Weight factor = 2 + static_cast<Weight>(rng() % 4);
            for (auto& v : voters) v.weight *= factor;
            auto r1 = winners(e);
            auto r2 = winners(e.with_voters(voters));
            CHECK(r1.winners == r2.winners);
        }
    }

    TEST_CASE("ballot helpers and formatting") {
        Ballot b{{2, 0}};
        CHECK(b.position_of(2) == 1);
        CHECK(b.position_of(1) == 0);
        CHECK(b.disapproved(3) == std::vector<CandidateId>{1});
        auto e = parse("kind: fallback\ncandidates: a b c\n");
        CHECK(format_ballot(e, b) == "c > a | b");
        CHECK(format_ballot(e, Ballot{}) == "| a b c");
        CHECK(format_ballot(e, Ballot{{0, 1, 2}}) == "a > b > c |");
    }
}
