#include "doctest.h"

#include <algorithm>
#include <random>

#include "initrep/bijection.hpp"
#include "initrep/identities.hpp"
#include "initrep/strips.hpp"

#include "generators.hpp"

using namespace initrep;

TEST_CASE("removable strips report length and count") {
    Partition ex1 = make_partition({29, 27, 25, 21, 17, 8, 8, 5, 4, 1});
    CHECK(removable_strips(ex1, 5) == std::vector<RemovableStrip>{{5, 1}});
    CHECK(removable_strips(make_partition({24, 22, 20, 16, 12, 8, 8, 5, 4, 1}), 5).empty());
    CHECK(removable_strips(make_partition({3, 3, 3}), 2) == std::vector<RemovableStrip>{{3, 1}});
    // A gap of 2k admits two strips of the same length.
    CHECK(removable_strips(make_partition({4}), 2) == std::vector<RemovableStrip>{{1, 2}});
}

TEST_CASE("strip removal subtracts k across a prefix") {
    Partition ex1 = make_partition({29, 27, 25, 21, 17, 8, 8, 5, 4, 1});
    CHECK(remove_strip(ex1, 5, 5) == make_partition({24, 22, 20, 16, 12, 8, 8, 5, 4, 1}));
    CHECK(remove_strip(make_partition({5}), 5, 1) == Partition{});
    CHECK(remove_strip(make_partition({5, 5}), 5, 2) == Partition{});
}

TEST_CASE("strip removal rejects a short gap") {
    // lambda_4 - 5 = 16 < lambda_5 = 17, so no strip of length 4.
    Partition ex1 = make_partition({29, 27, 25, 21, 17, 8, 8, 5, 4, 1});
    try {
        remove_strip(ex1, 5, 4);
        FAIL("expected StripNotRemovable");
    } catch (const StripNotRemovable& e) {
        CHECK(e.length() == 4);
        CHECK(e.gap() == 4); // 21 - 17
    }
    CHECK_THROWS_AS(remove_strip(ex1, 5, 11), StripNotRemovable);
    CHECK_THROWS_AS(remove_strip(ex1, 5, 0), StripNotRemovable);
}

TEST_CASE("decomposition reproduces the worked breakdown") {
    Partition ex1 = make_partition({29, 27, 25, 21, 17, 8, 8, 5, 4, 1});
    StripDecomposition sd = decompose(ex1, 5);
    CHECK(sd.pi == make_partition({24, 22, 20, 16, 12, 8, 8, 5, 4, 1}));
    CHECK(sd.delta == make_partition({25}));

    Partition flat = make_partition({4, 3, 2, 2, 1});
    StripDecomposition fixed = decompose(flat, 5);
    CHECK(fixed.pi == flat);
    CHECK(fixed.delta == Partition{});

    StripDecomposition small = decompose(make_partition({3, 3, 3}), 2);
    CHECK(small.pi == make_partition({1, 1, 1}));
    CHECK(small.delta == make_partition({6}));
}

TEST_CASE("decomposition invariants hold") {
    std::mt19937 rng(9301u);
    for (int i = 0; i < 2000; ++i) {
        Partition p = testsupport::random_partition(rng, 25, 20);
        for (Part k = 1; k <= 5; ++k) {
            StripDecomposition sd = decompose(p, k);
            CHECK(is_k_flat(sd.pi, k));
            CHECK(sd.pi.weight() + sd.delta.weight() == p.weight());
            for (Part v : sd.delta.parts())
                CHECK(v % k == 0);
        }
    }
}

TEST_CASE("insert_strips is the exact inverse of decompose") {
    StripDecomposition sd{5, make_partition({24, 22, 20, 16, 12, 8, 8, 5, 4, 1}),
                          make_partition({25})};
    CHECK(insert_strips(sd) == make_partition({29, 27, 25, 21, 17, 8, 8, 5, 4, 1}));
    CHECK(insert_strips({3, make_partition({2, 1}), Partition{}}) == make_partition({2, 1}));
    CHECK(insert_strips({2, make_partition({1, 1, 1}), make_partition({6})}) ==
          make_partition({3, 3, 3}));

    // Exhaustive: every partition of n <= 25, k in 1..5.
    for (std::int64_t n = 0; n <= 25; ++n) {
        for_each_partition(n, [&](const Partition& p) {
            for (Part k = 1; k <= 5; ++k)
                CHECK(insert_strips(decompose(p, k)) == p);
        });
    }
}

TEST_CASE("insert_strips rejects malformed input") {
    CHECK_THROWS_AS(insert_strips({2, make_partition({5, 1}), make_partition({4})}),
                    MalformedDecomposition);
    CHECK_THROWS_AS(insert_strips({2, make_partition({1, 1}), make_partition({3})}),
                    MalformedDecomposition);
}

TEST_CASE("vector addition pads with zeros and adds weights") {
    CHECK(vector_add(make_partition({24, 22, 20, 16, 12, 8, 8, 5, 4, 1}), make_partition({25})) ==
          make_partition({49, 22, 20, 16, 12, 8, 8, 5, 4, 1}));
    Partition p = make_partition({9, 4, 2});
    CHECK(vector_add(p, Partition{}) == p);
    CHECK(vector_add(make_partition({1, 1, 1}), make_partition({6})) == make_partition({7, 1, 1}));
    // delta longer than pi: trailing parts come from delta alone.
    CHECK(vector_add(make_partition({3}), make_partition({6, 4, 2})) == make_partition({9, 4, 2}));
    const Part big = std::numeric_limits<Part>::max();
    CHECK_THROWS_AS(vector_add(make_partition({big}), make_partition({1})), ArithmeticOverflow);
}

TEST_CASE("delta is distinct exactly when the conjugate is repetition-bounded") {
    std::mt19937 rng(9303u);
    for (int i = 0; i < 1500; ++i) {
        Partition p = testsupport::random_partition(rng, 20, 16);
        for (Part k = 1; k <= 4; ++k) {
            const Partition delta = decompose(p, k).delta;
            bool distinct = true;
            for (std::size_t j = 0; j + 1 < delta.size(); ++j)
                distinct &= delta.parts()[j] > delta.parts()[j + 1];
            CHECK(distinct == is_repetition_bounded(conjugate(p), k));
        }
    }
}

TEST_CASE("the two recombinations are conjugate transposes of each other") {
    // Rebuilding a pair as strips and then running the four-step map lands
    // on the conjugate of the componentwise sum.
    std::mt19937 rng(9304u);
    for (int i = 0; i < 1000; ++i) {
        Partition p = testsupport::random_partition(rng, 20, 16);
        for (Part k = 1; k <= 4; ++k) {
            StripDecomposition sd = decompose(p, k);
            Partition via_strips = conjugate(insert_strips(sd));
            Partition via_sum = conjugate(vector_add(sd.pi, sd.delta));
            CHECK(forward(via_strips, k, false) == via_sum);
        }
    }
}

TEST_CASE("strip removal order does not change the decomposition") {
    std::mt19937 rng(9302u);
    for (int i = 0; i < 800; ++i) {
        Partition p = testsupport::random_partition(rng, 20, 14);
        for (Part k = 1; k <= 4; ++k) {
            StripDecomposition canonical = decompose(p, k);
            // Random removal order, one strip at a time.
            Partition pi = p;
            std::vector<Part> delta;
            for (;;) {
                auto strips = removable_strips(pi, k);
                if (strips.empty())
                    break;
                std::uniform_int_distribution<std::size_t> pick(0, strips.size() - 1);
                Part len = strips[pick(rng)].length;
                pi = remove_strip(pi, k, len);
                delta.push_back(k * len);
            }
            std::sort(delta.begin(), delta.end(), std::greater<Part>{});
            CHECK(pi == canonical.pi);
            CHECK(Partition(delta) == canonical.delta);
        }
    }
}
