#include <doctest.h>

#include <random>

#include "ecc/hamming.hpp"
#include "ecc/supersat.hpp"

using namespace ecc;

namespace {

Word w(unsigned q, std::initializer_list<int> digits) {
    std::vector<std::uint8_t> d;
    for (int x : digits) d.push_back(static_cast<std::uint8_t>(x));
    return Word(q, d);
}

std::vector<Word> random_subset(std::mt19937& rng, unsigned q, unsigned n) {
    std::vector<Word> S;
    std::uint64_t m = space_size(q, n).get_ui();
    for (std::uint64_t r = 0; r < m; ++r)
        if (rng() % 2) S.push_back(Word::from_rank(q, n, r));
    return S;
}

}  // namespace

TEST_CASE("double counting identity examples") {
    CodeParams p{2, 3, 1};
    SUBCASE("disjoint balls") {
        auto r = double_counting_check({w(2, {0, 0, 0}), w(2, {1, 1, 1})}, p);
        CHECK(r.holds);
        CHECK(r.lhs == Rat(0));
    }
    SUBCASE("one close pair") {
        auto r = double_counting_check({w(2, {0, 0, 0}), w(2, {0, 0, 1})}, p);
        CHECK(r.holds);
        CHECK(r.lhs == Rat(2));
    }
    SUBCASE("empty set") {
        auto r = double_counting_check({}, p);
        CHECK(r.holds);
        CHECK(r.lhs == Rat(0));
    }
}

TEST_CASE("double counting identity on random sets") {
    std::mt19937 rng(57);
    for (unsigned q : {2u, 3u}) {
        for (unsigned n = 1; n <= 6; ++n) {
            for (unsigned t = 1; t <= std::min(2u, n); ++t) {
                CodeParams p{q, n, t};
                for (int iter = 0; iter < 20; ++iter) CHECK(double_counting_check(random_subset(rng, q, n), p).holds);
            }
        }
    }
}

TEST_CASE("supersaturation inequalities on full spaces") {
    for (auto [q, n, t] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{
             {2, 4, 1}, {2, 5, 1}, {3, 3, 1}, {2, 6, 2}}) {
        CodeParams p{q, n, t};
        auto r = lemma41_check(all_words(q, n), p);
        CHECK(r.holds);
        CHECK(r.weighted_sum.holds);
        CHECK(r.edge_count.holds);
    }
}

TEST_CASE("supersaturation inequalities on large random sets") {
    std::mt19937 rng(61);
    for (unsigned q : {2u, 3u}) {
        for (unsigned n = 2; n <= 6; ++n) {
            for (unsigned t = 1; t <= std::min(2u, n); ++t) {
                CodeParams p{q, n, t};
                Rat H = hamming_bound(q, n, t);
                for (int iter = 0; iter < 20; ++iter) {
                    auto S = random_subset(rng, q, n);
                    if (Rat(Nat(static_cast<unsigned long>(S.size()))) < 2 * H) continue;
                    CHECK(lemma41_check(S, p).holds);
                }
            }
        }
    }
}

TEST_CASE("lemma41 precondition is reported as a precondition error") {
    CodeParams p{2, 5, 1};
    CHECK_THROWS_AS(lemma41_check({w(2, {0, 0, 0, 0, 0})}, p), InputError);
}

TEST_CASE("S1/S2 classification examples") {
    SUBCASE("full cube, small epsilon: both empty") {
        auto [s1, s2] = classify_S1_S2(all_words(2, 3), CodeParams{2, 3, 1}, make_rat(1, 10));
        CHECK(s1.empty());
        CHECK(s2.empty());
    }
    SUBCASE("far pair, generous epsilon: S1 is everything") {
        std::vector<Word> S{w(2, {0, 0, 0}), w(2, {1, 1, 1})};
        auto [s1, s2] = classify_S1_S2(S, CodeParams{2, 3, 1}, Rat(1));
        CHECK(s1.size() == 2);
    }
    SUBCASE("empty set") {
        auto [s1, s2] = classify_S1_S2({}, CodeParams{2, 3, 1}, Rat(1));
        CHECK(s1.empty());
        CHECK(s2.empty());
    }
    CHECK_THROWS_AS(classify_S1_S2({}, CodeParams{2, 3, 1}, Rat(0)), InputError);
}

TEST_CASE("greedy packing examples") {
    SUBCASE("full 3-cube at t = 1") {
        auto X = greedy_distance_packing(all_words(2, 3), 1);
        REQUIRE(X.size() == 4);
        CHECK(X[0].rank() == 0);
        CHECK(X[1].rank() == 3);
        CHECK(X[2].rank() == 5);
        CHECK(X[3].rank() == 6);
    }
    SUBCASE("singleton") {
        auto X = greedy_distance_packing({w(2, {1, 0})}, 5);
        CHECK(X.size() == 1);
    }
    SUBCASE("already packed") {
        std::vector<Word> S{w(2, {0, 0, 0}), w(2, {1, 1, 1})};
        CHECK(greedy_distance_packing(S, 2).size() == 2);
    }
}

TEST_CASE("greedy packing is separated, maximal, and covering") {
    std::mt19937 rng(67);
    for (int iter = 0; iter < 30; ++iter) {
        unsigned q = 2 + rng() % 2;
        unsigned n = 2 + rng() % 4;
        unsigned t = 1 + rng() % 2;
        auto S = random_subset(rng, q, n);
        auto X = greedy_distance_packing(S, t);
        for (std::size_t i = 0; i < X.size(); ++i)
            for (std::size_t j = i + 1; j < X.size(); ++j) CHECK(hamming_distance(X[i], X[j]) > t);
        // maximality: every element of S is within distance t of some x in X
        for (const Word& s : S) {
            bool covered = false;
            for (const Word& x : X)
                if (hamming_distance(s, x) <= t) covered = true;
            CHECK(covered);
        }
    }
    // with S = [q]^n the balls around X cover the whole space
    auto X = greedy_distance_packing(all_words(2, 4), 1);
    for (const Word& y : all_words(2, 4)) {
        bool covered = false;
        for (const Word& x : X)
            if (hamming_distance(y, x) <= 1) covered = true;
        CHECK(covered);
    }
}

TEST_CASE("supersaturation report") {
    CodeParams p{2, 4, 1};
    auto rep = supersaturation_report(all_words(2, 4), p, make_rat(1, 2));
    CHECK(rep.set_size == 16);
    Nat sum = 0;
    for (const auto& [k, ek] : rep.edges_by_distance) sum += ek;
    CHECK(sum == rep.edge_total);
    CHECK(rep.edge_total == 80);  // 16 * (4 + 6) / 2
    CHECK(rep.max_degree == 10);
    CHECK(rep.inequalities_applicable);
    CHECK(rep.inequalities.holds);
    CHECK(rep.packing_size == 8);  // even-weight words: perfect distance-1 packing
}
