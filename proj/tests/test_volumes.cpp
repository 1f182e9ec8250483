#include <doctest.h>

#include "ecc/volumes.hpp"
#include "ecc/word.hpp"

using namespace ecc;

TEST_CASE("ball_volume small values") {
    CHECK(ball_volume(2, 3, 1) == 4);
    CHECK(ball_volume(3, 2, 1) == 5);
    CHECK(ball_volume(2, 7, 1) == 8);
    CHECK(ball_volume(2, 4, 2) == 11);
    CHECK(ball_volume(5, 9, 0) == 1);
}

TEST_CASE("ball_volume full-radius ball is the whole space") {
    for (unsigned q : {2u, 3u, 4u, 5u})
        for (unsigned long n = 1; n <= 12; ++n)
            CHECK(ball_volume(q, n, n) == space_size(q, static_cast<unsigned>(n)));
}

TEST_CASE("ball_volume monotone in r") {
    for (unsigned long r = 0; r + 1 <= 20; ++r)
        CHECK(ball_volume(3, 20, r) <= ball_volume(3, 20, r + 1));
}

TEST_CASE("ball_volume input validation") {
    CHECK_THROWS_AS(ball_volume(2, 3, 4), InputError);
    CHECK_THROWS_AS(ball_volume(1, 3, 1), InputError);
}

TEST_CASE("ball_volume handles large n cheaply") {
    Nat v = ball_volume(2, 1000000, 2);
    CHECK(v == Nat(1) + 1000000 + Nat("499999500000"));
}

TEST_CASE("hamming_bound values") {
    CHECK(hamming_bound(2, 7, 1) == 16);
    CHECK(hamming_bound(2, 4, 2) == make_rat(16, 11));
    CHECK(hamming_bound(3, 4, 0) == 81);
}

TEST_CASE("tail_probability is the reciprocal of the bound") {
    CHECK(tail_probability(2, 4, 2) == make_rat(11, 16));
    CHECK(tail_probability(2, 1, 0) == make_rat(1, 2));
    CHECK(tail_probability(3, 6, 6) == 1);
    for (unsigned long t = 0; t <= 9; ++t)
        CHECK(tail_probability(3, 9, t) * hamming_bound(3, 9, t) == 1);
}

TEST_CASE("binomial point masses sum to one") {
    for (unsigned q : {2u, 3u, 5u}) {
        Rat total = tail_probability(q, 11, 11);
        CHECK(total == 1);
        // telescoping: successive tails differ by the point mass at t
        Rat prev = 0;
        Rat sum = 0;
        for (unsigned long t = 0; t <= 11; ++t) {
            Rat tail = tail_probability(q, 11, t);
            sum += tail - prev;
            prev = tail;
        }
        CHECK(sum == 1);
    }
}

TEST_CASE("threshold_radius examples") {
    CHECK(threshold_radius(2, 7, Rat(16)) == 1);
    CHECK(threshold_radius(3, 5, Rat(space_size(3, 5))) == 0);
    CHECK(threshold_radius(2, 100, Rat(2)) == 50);
    CHECK_THROWS_AS(threshold_radius(2, 7, make_rat(1, 2)), InputError);
}

TEST_CASE("threshold_radius inverts hamming_bound") {
    for (unsigned q : {2u, 3u}) {
        for (unsigned long n : {5ul, 9ul, 17ul, 33ul}) {
            for (unsigned k = 1; k <= 2 * n; ++k) {
                Rat B = Rat(nat_pow(2ul, k));
                unsigned long ts = threshold_radius(q, n, B);
                CHECK(hamming_bound(q, n, ts) <= B);
                if (ts > 0) CHECK(hamming_bound(q, n, ts - 1) > B);
            }
        }
    }
}

TEST_CASE("volume decay lemma examples") {
    auto r1 = check_volume_decay(2, 4, 2, 1);
    CHECK(r1.holds);
    CHECK(r1.lhs == Rat(4));
    CHECK(r1.rhs == make_rat(11, 2));

    auto r2 = check_volume_decay(2, 10, 3, 2);
    CHECK(r2.holds);
    CHECK(r2.lhs == Rat(9));
    CHECK(r2.rhs == make_rat(396, 25));

    CHECK_THROWS_AS(check_volume_decay(2, 10, 3, 0), InputError);
    CHECK_THROWS_AS(check_volume_decay(2, 10, 3, 4), InputError);
}

TEST_CASE("volume growth lemma examples") {
    auto r1 = check_volume_growth(2, 4, 1, 1);
    CHECK(r1.holds);
    CHECK(r1.lhs == Rat(11));
    CHECK(r1.rhs == make_rat(15, 2));

    auto r2 = check_volume_growth(2, 6, 2, 1);
    CHECK(r2.holds);
    CHECK(r2.lhs == Rat(42));
    CHECK(r2.rhs == make_rat(88, 3));

    CHECK(check_volume_growth(3, 6, 2, 2).holds);
    CHECK_THROWS_AS(check_volume_growth(2, 6, 3, 4), InputError);
}

TEST_CASE("volume lemmas hold on the full grid") {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        for (unsigned long n = 1; n <= 30; ++n) {
            for (unsigned long t = 1; t <= n; ++t) {
                for (unsigned long i = 1; i <= t; ++i) CHECK(check_volume_decay(q, n, t, i).holds);
                for (unsigned long a = 1; a <= t && t + a <= n; ++a)
                    CHECK(check_volume_growth(q, n, t, a).holds);
            }
        }
    }
}
