#include <doctest.h>

#include "amp2/weyl.hpp"
#include "oracles.hpp"

using namespace amp2;

namespace {
Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }
Permutation w_of(std::vector<int> letters, int n) { return word_to_perm(ReducedWord(std::move(letters), n)); }

std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}
}  // namespace

TEST_CASE("length") {
    CHECK(length(Permutation::identity(4)) == 0);
    CHECK(length(w_of({1, 3, 2}, 4)) == 3);
    CHECK(w_of({1, 3, 2}, 4).images() == std::vector<int>{2, 4, 1, 3});
    CHECK(length(perm({5, 4, 3, 2, 1})) == 10);
}

TEST_CASE("word_to_perm") {
    CHECK(w_of({}, 4) == Permutation::identity(4));
    CHECK(w_of({1}, 3).images() == std::vector<int>{2, 1, 3});
    CHECK(length(w_of({3, 2, 1, 4, 3, 2}, 5)) == 6);
    CHECK_THROWS_AS(ReducedWord({4}, 4), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("is_reduced") {
    CHECK_FALSE(is_reduced(ReducedWord({1, 1}, 3)));
    CHECK(is_reduced(ReducedWord({3, 2, 1, 4, 3, 2}, 5)));
    CHECK(is_reduced(ReducedWord({}, 3)));
}

TEST_CASE("bruhat examples") {
    auto w = w_of({1, 3, 2}, 4);
    CHECK(bruhat_leq(Permutation::identity(4), w));
    CHECK(bruhat_leq(w_of({3}, 4), w));
    CHECK_FALSE(bruhat_leq(w_of({1, 2, 1}, 3), w_of({1, 2}, 3)));
    CHECK_THROWS_AS(bruhat_leq(Permutation::identity(3), Permutation::identity(4)), std::invalid_argument);
}

TEST_CASE("bruhat agrees with the subword criterion on S_n, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        auto ps = all_perms(n);
        for (const auto& w : ps) {
            auto below = oracle::subword_products(w);
            for (const auto& u : ps) CHECK(bruhat_leq(u, w) == (below.count(u.images()) == 1));
        }
    }
}

TEST_CASE("s_range and wj_word") {
    CHECK(s_range(4, 2, 5).letters == std::vector<int>{4, 3, 2});
    CHECK(s_range(1, 2, 5).empty());
    CHECK(s_range(2, 2, 5).letters == std::vector<int>{2});
    CHECK_THROWS_AS(s_range(5, 1, 5), std::invalid_argument);
    CHECK(wj_word({3, 4}, 2, 5).letters == std::vector<int>{3, 2, 1, 4, 3, 2});
    CHECK(wj_word({2}, 1, 4).letters == std::vector<int>{2, 1});
    CHECK(wj_word({0}, 1, 4).empty());
    CHECK_THROWS_AS(wj_word({3, 3}, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(wj_word({1, 5}, 2, 5), std::invalid_argument);
}

TEST_CASE("wj_word is reduced, lands in W^J and inverts through wj_alist") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k)
            for (auto s : k_subsets(n, k)) {
                std::vector<int> a;
                for (int x : s) a.push_back(x - 1);
                auto word = wj_word(a, k, n);
                CHECK(is_reduced(word));
                CHECK(is_in_WJ(word_to_perm(word), k));
                CHECK(wj_alist(word_to_perm(word), k) == a);
            }
}

TEST_CASE("positive_subexpression examples") {
    auto word = ReducedWord({1, 3, 2}, 4);
    CHECK(positive_subexpression(Permutation::identity(4), word) == SubexprMask{false, false, false});
    CHECK(positive_subexpression(w_of({3}, 4), word) == SubexprMask{false, true, false});
    auto big = ReducedWord({3, 2, 1, 4, 3, 2}, 5);
    CHECK(positive_subexpression(w_of({2, 3}, 5), big) == SubexprMask{false, true, false, false, true, false});
    CHECK_THROWS_AS(positive_subexpression(w_of({2, 1}, 4), ReducedWord({1, 2}, 4)), std::invalid_argument);
}

TEST_CASE("positive subexpression is the unique brute-force mask, length <= 8") {
    int checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            for (auto s : k_subsets(n, k)) {
                std::vector<int> a;
                for (int x : s) a.push_back(x - 1);
                auto word = wj_word(a, k, n);
                if (word.size() > 8) continue;
                auto wp = word_to_perm(word);
                for (const auto& w : all_perms(n)) {
                    if (!bruhat_leq(w, wp)) continue;
                    auto m = positive_subexpression(w, word);
                    auto brute = oracle::positive_masks(w, word);
                    REQUIRE(brute.size() == 1);
                    CHECK(brute[0] == m);
                    CHECK(mask_product(word, m) == w);
                    CHECK(is_positive_subexpression(word, m));
                    ++checked;
                }
            }
    CHECK(checked > 1000);
}

TEST_CASE("is_in_WJ") {
    CHECK(is_in_WJ(Permutation::identity(4), 2));
    CHECK(is_in_WJ(w_of({1, 3, 2}, 4), 2));
    CHECK_FALSE(is_in_WJ(w_of({1}, 4), 2));
}

TEST_CASE("reduced_word_of") {
    for (const auto& p : all_perms(5)) {
        auto w = reduced_word_of(p);
        CHECK(word_to_perm(w) == p);
        CHECK(is_reduced(w));
    }
}

TEST_CASE("word serialization") {
    auto w = parse_word("3 2 1 4 3 2", 5);
    CHECK(w.to_string() == "3 2 1 4 3 2");
    CHECK_THROWS_AS(parse_word("3 x", 5), std::invalid_argument);
}
