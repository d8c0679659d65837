#include <doctest.h>

#include "bfv/manipulation.hpp"
#include "bfv/reductions.hpp"
#include "sweeps.hpp"
#include "test_support.hpp"

using namespace bfv;
using bfv::testing::parse;

namespace {

ManipulationInstance instance(const std::string& text, std::vector<Weight> weights, const std::string& designated,
                              Goal goal) {
    auto e = parse(text);
    return ManipulationInstance{e, std::move(weights), e.id_of(designated), goal};
}

void check_sound(const ManipulationInstance& inst, const ManipulationAnswer& answer) {
    REQUIRE(answer.has_value());
    CHECK(sweeps::check_certificate(inst, *answer) == "");
}

}  // namespace

TEST_SUITE("manipulation") {
    TEST_CASE("CCUM with more manipulators than voters puts p first") {
        auto inst = instance("kind: bucklin\ncandidates: a b p\nvote: a > b > p\nvote: b > a > p\n", {1, 1, 1}, "p",
                             Goal::Constructive);
        auto answer = bucklin_ccum(inst);
        check_sound(inst, answer);
        for (const auto& b : answer->ballots) CHECK(b.ranking.front() == inst.designated);
    }

    TEST_CASE("CCUM tie with one opponent is not unique victory") {
        auto inst = instance("kind: bucklin\ncandidates: p a\nvote: a > p\n", {1}, "p", Goal::Constructive);
        CHECK_FALSE(bucklin_ccum(inst).has_value());
        CHECK_FALSE(brute_manipulation(inst).has_value());
    }

    TEST_CASE("CCUM against two opposing voters") {
        auto inst =
            instance("kind: bucklin\ncandidates: p a b\nvote: a > b > p\nvote: b > a > p\n", {1}, "p", Goal::Constructive);
        CHECK_FALSE(bucklin_ccum(inst).has_value());
        CHECK_FALSE(brute_manipulation(inst).has_value());
    }

    TEST_CASE("CCUM rejects weighted and fallback input") {
        auto weighted = instance("kind: bucklin\ncandidates: p a\nvote: a > p weight=2\n", {1}, "p", Goal::Constructive);
        CHECK_THROWS_AS(bucklin_ccum(weighted), InvalidInput);
        auto heavy = instance("kind: bucklin\ncandidates: p a\nvote: a > p\n", {2}, "p", Goal::Constructive);
        CHECK_THROWS_AS(bucklin_ccum(heavy), InvalidInput);
        auto fb = instance("kind: fallback\ncandidates: p a\nvote: a\n", {1}, "p", Goal::Constructive);
        CHECK_THROWS_AS(bucklin_ccum(fb), InvalidInput);
    }

    TEST_CASE("DCWM with heavier manipulators succeeds at once") {
        auto inst = instance("kind: bucklin\ncandidates: p a b\nvote: p > a > b weight=10\n", {5, 6}, "p",
                             Goal::Destructive);
        check_sound(inst, bucklin_dcwm(inst));
    }

    TEST_CASE("DCWM against a strict majority") {
        auto inst = instance("kind: bucklin\ncandidates: p c\nvote: p > c weight=3\n", {1}, "p", Goal::Destructive);
        CHECK_FALSE(bucklin_dcwm(inst).has_value());
    }

    TEST_CASE("DCWM ranks the rival first and p last") {
        auto inst = instance("kind: bucklin\ncandidates: p c d\nvote: p > c > d\nvote: p > d > c\n", {2}, "p",
                             Goal::Destructive);
        auto answer = bucklin_dcwm(inst);
        check_sound(inst, answer);
        CHECK(answer->ballots.front().ranking == std::vector<CandidateId>{1, 2, 0});
        CHECK(answer->achieved.winners == std::vector<CandidateId>{1, 2});
        CHECK(brute_manipulation(inst).has_value());
    }

    TEST_CASE("DCWM with a single candidate") {
        auto inst = instance("kind: bucklin\ncandidates: p\nvote: p\n", {4}, "p", Goal::Destructive);
        CHECK_FALSE(bucklin_dcwm(inst).has_value());
    }

    TEST_CASE("fallback bullet ballots") {
        auto tie = instance("kind: fallback\ncandidates: p a\nvote: a | p weight=5\n", {5}, "p", Goal::Constructive);
        CHECK_FALSE(fallback_manipulation(tie).has_value());
        auto win = instance("kind: fallback\ncandidates: p a\nvote: a | p weight=5\n", {6}, "p", Goal::Constructive);
        auto answer = fallback_manipulation(win);
        check_sound(win, answer);
        CHECK(answer->ballots.front().ranking == std::vector<CandidateId>{0});
    }

    TEST_CASE("CCWM instance built from a partition") {
        auto inst = gen_ccwm_from_partition(PartitionInstance{{2, 2}});
        auto answer = solve_manipulation(inst);
        check_sound(inst, answer);
        CHECK(answer->achieved.decisive_level == 2);
    }

    TEST_CASE("dispatcher routes by kind, goal and weights") {
        auto weighted = gen_ccwm_from_partition(PartitionInstance{{2, 2, 2, 2}});
        CHECK_THROWS_AS(solve_manipulation(weighted), OracleRefused);
        auto d = instance("kind: bucklin\ncandidates: p c\nvote: p > c weight=3\n", {1}, "p", Goal::Destructive);
        CHECK(solve_manipulation(d).has_value() == bucklin_dcwm(d).has_value());
    }

    TEST_CASE("CCUM solver agrees with the oracle on small instances") {
        auto t = sweeps::ccum_exhaustive({3, 2, 2, 1});
        INFO(t.first_failure);
        CHECK(t.ok());
        t = sweeps::ccum_random(100, 17, 4, 3, 3);
        INFO(t.first_failure);
        CHECK(t.ok());
    }

    TEST_CASE("DCWM solver agrees with the oracle on small instances") {
        auto t = sweeps::dcwm_exhaustive({3, 2, 2, 2});
        INFO(t.first_failure);
        CHECK(t.ok());
        t = sweeps::dcwm_random(100, 19, 4, 3, 2, 3);
        INFO(t.first_failure);
        CHECK(t.ok());
    }

    TEST_CASE("bullet ballots are optimal for fallback manipulation") {
        for (auto goal : {Goal::Constructive, Goal::Destructive}) {
            auto t = sweeps::fallback_manipulation_exhaustive({3, 2, 2, 2}, goal);
            INFO(t.first_failure);
            CHECK(t.ok());
        }
    }

    TEST_CASE("monotonicity of Bucklin winners") {
        auto t = sweeps::winner_monotonicity(200, 23);
        INFO(t.first_failure);
        CHECK(t.ok());
    }
}
