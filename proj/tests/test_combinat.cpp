#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "schubnef/combinat.hpp"

using namespace schubnef;

namespace {

// All partitions of weight exactly w (they fit in a w x w box).
std::vector<Partition> partitions_of(int w) {
    if (w == 0) return {Partition()};
    return partitions_in_box_of_weight(BoxConstraint(w, w), w);
}

}  // namespace

TEST_CASE("binom_comb small values and conventions") {
    CHECK(binom_comb(5, 2) == 10);
    CHECK(binom_comb(2, 3) == 0);
    CHECK(binom_comb(-1, 2) == 0);
    CHECK(binom_comb(0, 0) == 1);
    CHECK(binom_comb(7, 0) == 1);
    CHECK(binom_comb(3, -1) == 0);
    CHECK(binom_comb(30, 15) == Int("155117520"));
}

TEST_CASE("binom_comb Pascal identity up to 30") {
    for (long long a = 1; a <= 30; ++a)
        for (long long b = 0; b <= a; ++b)
            CHECK(binom_comb(a, b) == binom_comb(a - 1, b - 1) + binom_comb(a - 1, b));
}

TEST_CASE("Partition canonical form and validation") {
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
    CHECK(Partition().weight() == 0);
    CHECK(Partition({3, 3, 1}).weight() == 7);
    CHECK(Partition::row(0) == Partition());
    CHECK(Partition::column(3) == Partition({1, 1, 1}));
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("partitions_in_box examples and order") {
    auto p11 = partitions_in_box(BoxConstraint(1, 1));
    REQUIRE(p11.size() == 2);
    CHECK(p11[0] == Partition());
    CHECK(p11[1] == Partition({1}));

    auto p22 = partitions_in_box(BoxConstraint(2, 2));
    REQUIRE(p22.size() == 6);
    CHECK(p22 == std::vector<Partition>{Partition(), Partition({1}), Partition({1, 1}),
                                        Partition({2}), Partition({2, 1}), Partition({2, 2})});

    auto p20 = partitions_in_box(BoxConstraint(2, 0));
    REQUIRE(p20.size() == 1);
    CHECK(p20[0] == Partition());
}

TEST_CASE("partitions_in_box count identity") {
    for (int r = 1; r <= 6; ++r)
        for (int c = 0; c <= 6; ++c)
            CHECK(Int(partitions_in_box(BoxConstraint(r, c)).size()) == binom_comb(r + c, r));
}

TEST_CASE("partitions_in_box is strictly graded-lex sorted") {
    GradedLexLess less;
    auto all = partitions_in_box(BoxConstraint(3, 4));
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(less(all[i], all[i + 1]));
}

TEST_CASE("lr_coefficient base examples") {
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
    CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
    CHECK(lr_coefficient(Partition({2}), Partition({1}), Partition({2, 2})) == 0);
    // weight mismatch and non-containment short-circuits
    CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({2, 2})) == 0);
    // classical multiplicity-2 case: c^{(4,3,2,1)}_{(3,2,1),(3,2,1)} counts
    CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
    // unit: empty nu
    CHECK(lr_coefficient(Partition({2, 1}), Partition(), Partition({2, 1})) == 1);
}

TEST_CASE("lr_coefficient symmetry in the first two arguments") {
    for (int wl = 0; wl <= 8; ++wl) {
        for (int wn = 0; wl + wn <= 8; ++wn) {
            for (const auto& lambda : partitions_of(wl)) {
                for (const auto& nu : partitions_of(wn)) {
                    for (const auto& mu : partitions_of(wl + wn)) {
                        CHECK(lr_coefficient(lambda, nu, mu) == lr_coefficient(nu, lambda, mu));
                    }
                }
            }
        }
    }
}

TEST_CASE("lr_coefficient Pieri consistency for rows and columns") {
    for (int wl = 0; wl <= 6; ++wl) {
        for (int p = 0; p <= 4; ++p) {
            for (const auto& lambda : partitions_of(wl)) {
                for (const auto& mu : partitions_of(wl + p)) {
                    const Int row = lr_coefficient(lambda, Partition::row(p), mu);
                    CHECK((row == 0 || row == 1));
                    CHECK((row == 1) == is_horizontal_strip(mu, lambda));
                    const Int col = lr_coefficient(lambda, Partition::column(p), mu);
                    CHECK((col == 0 || col == 1));
                    CHECK((col == 1) == is_vertical_strip(mu, lambda));
                }
            }
        }
    }
}

TEST_CASE("strip predicates") {
    CHECK(is_horizontal_strip(Partition({3, 1}), Partition({2})));
    CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));
    CHECK(is_vertical_strip(Partition({2, 2}), Partition({2, 1})));
    CHECK_FALSE(is_vertical_strip(Partition({3, 1}), Partition({1, 1})));
    CHECK(is_horizontal_strip(Partition({2}), Partition({2})));  // empty strip
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    CHECK(conjugate(conjugate(Partition({4, 2, 2, 1}))) == Partition({4, 2, 2, 1}));
}

TEST_CASE("lr_coefficient is safe under concurrent callers") {
    std::vector<std::tuple<Partition, Partition, Partition, Int>> work;
    for (const auto& lambda : partitions_of(3))
        for (const auto& nu : partitions_of(4))
            for (const auto& mu : partitions_of(7))
                work.emplace_back(lambda, nu, mu, lr_coefficient(lambda, nu, mu));
    std::atomic<bool> ok{true};
    std::vector<std::thread> threads;
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&] {
            for (const auto& [lambda, nu, mu, expected] : work)
                if (lr_coefficient(lambda, nu, mu) != expected) ok = false;
        });
    for (auto& th : threads) th.join();
    CHECK(ok);
}
