#include <doctest.h>

#include <set>

#include "amp2/combinat.hpp"
#include "oracles.hpp"

using namespace amp2;

namespace {
std::vector<int> perm_of(const DecoratedPermutation& d) { return d.perm.images(); }

MRCell section_six_cell() { return parse_dotted("3 2 1 4 .3 2", 5, 2); }
}  // namespace

TEST_CASE("necklace examples") {
    auto g = necklace_of(Positroid::uniform(3, 1));
    for (int r = 1; r <= 3; ++r) CHECK(g.I[r - 1] == subset_of({r}));
    auto p = Positroid::from_lists(4, 2, {{1, 2}, {2, 3}, {2, 4}});
    auto want = oracle::necklace(p.basis_lists(), 4);
    auto got = necklace_of(p);
    for (int r = 0; r < 4; ++r) CHECK(elements(got.I[r]) == want[r]);
    CHECK(elements(got.I[0]) == std::vector<int>{1, 2});
    CHECK(elements(got.I[1]) == std::vector<int>{2, 3});
    CHECK(elements(got.I[2]) == std::vector<int>{2, 3});
    CHECK(elements(got.I[3]) == std::vector<int>{2, 4});
}

TEST_CASE("necklace matches the brute-force oracle on every cell, n <= 5") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k)
            for (const auto& c : enumerate_cells(n, k)) {
                auto p = positroid_of(c);
                auto want = oracle::necklace(p.basis_lists(), n);
                auto got = necklace_of(p);
                for (int r = 0; r < n; ++r) CHECK(elements(got.I[r]) == want[r]);
                // I_{r+1} contains I_r minus r
                for (int r = 1; r <= n; ++r) {
                    Subset drop = got.I[r - 1] & ~(Subset(1) << (r - 1));
                    CHECK((got.I[r % n] & drop) == drop);
                }
            }
}

TEST_CASE("decperm of top cells is i -> i+k") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            auto d = decperm_of(Positroid::uniform(n, k));
            for (int i = 1; i <= n; ++i) CHECK(d.perm(i) == (i + k - 1) % n + 1);
            CHECK(d.coloops.empty());
        }
}

TEST_CASE("rank one positroid") {
    auto d = decperm_of(Positroid::from_lists(4, 1, {{1}}));
    CHECK(d.perm == Permutation::identity(4));
    CHECK(d.coloops == std::vector<int>{1});
    CHECK(anti_excedances(d) == std::vector<int>{1});
}

TEST_CASE("anti-excedances") {
    CHECK(anti_excedances({Permutation({4, 5, 2, 1, 3}), {}}) == std::vector<int>{1, 2, 3});
    CHECK(anti_excedances({Permutation({2, 1}), {}}) == std::vector<int>{1});
    CHECK(anti_excedances({Permutation::identity(4), {1, 2, 3, 4}}) == std::vector<int>{1, 2, 3, 4});
    CHECK(anti_excedances({Permutation::identity(4), {}}).empty());
}

TEST_CASE("the 3 2 1 4 .3 2 cell and its dual") {
    auto c = section_six_cell();
    auto p = positroid_of(c);
    std::vector<std::vector<int>> all_but_23;
    for (const auto& s : k_subsets(5, 2))
        if (s != std::vector<int>{2, 3}) all_but_23.push_back(s);
    CHECK(p.basis_lists() == all_but_23);
    auto d = decperm_of(p);
    CHECK(perm_of(d) == std::vector<int>{4, 3, 5, 1, 2});
    CHECK(anti_excedances(d) == std::vector<int>{1, 2});
    auto dd = decperm_of(dual(p));
    CHECK(perm_of(dd) == std::vector<int>{4, 5, 2, 1, 3});
    CHECK(anti_excedances(dd) == std::vector<int>{1, 2, 3});
    CHECK(dd.perm == d.perm.inverse());
    auto le = le_of(c);
    CHECK(to_text(le) == "+ 0 +\n+ + +\n");
    CHECK(to_text(transpose(le)) == "+ +\n0 +\n+ +\n");
    CHECK(pipe_dream_decperm(transpose(le)) == dd);
}

TEST_CASE("le_of extremes") {
    auto top = le_of(top_cell(5, 2));
    CHECK(top.shape() == std::vector<int>{3, 3});
    for (const auto& row : top.plus)
        for (bool b : row) CHECK(b);
    auto pt = cell_from_interval(word_to_perm(ReducedWord({2, 1, 3, 2}, 4)), ReducedWord({2, 1, 3, 2}, 4), 2);
    for (const auto& row : le_of(pt).plus)
        for (bool b : row) CHECK_FALSE(b);
}

TEST_CASE("Le diagrams, decorated permutations and pipe dreams on every cell, n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            std::set<std::vector<int>> perms_seen;
            std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
            for (const auto& c : enumerate_cells(n, k)) {
                auto le = le_of(c);
                CHECK(satisfies_le_condition(le));
                int boxes = 0, plus = 0;
                for (const auto& row : le.plus) {
                    boxes += static_cast<int>(row.size());
                    plus += static_cast<int>(std::count(row.begin(), row.end(), true));
                }
                CHECK(boxes == length(c.wprime()));
                CHECK(plus == c.dimension());
                CHECK(cell_from_le(le) == c);
                CHECK(le_from_text(to_text(le), n, k) == le);
                auto p = positroid_of(c);
                CHECK(positroid_of(cell_from_le(le)) == p);
                auto d = decperm_of(p);
                auto ae = anti_excedances(d);
                CHECK(static_cast<int>(ae.size()) == k);
                CHECK(subset_of(ae) == necklace_of(p).I[0]);
                CHECK(seen.insert({d.perm.images(), d.coloops}).second);
                CHECK(pipe_dream_decperm(transpose(le)) == decperm_of(dual(p)));
            }
        }
}

TEST_CASE("Le condition detects a forbidden 0") {
    LeDiagram bad{2, 4, {{true, true}, {true, false}}};
    CHECK_FALSE(satisfies_le_condition(bad));
    LeDiagram good{2, 4, {{true, false}, {true, false}}};
    CHECK(satisfies_le_condition(good));
}

TEST_CASE("le text parsing") {
    CHECK_THROWS_AS(le_from_text("+ x\n", 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(le_from_text("+\n+ +\n", 4, 2), std::invalid_argument);
    auto d = le_from_text("+ 0\n", 4, 2);
    CHECK(d.shape() == std::vector<int>{2, 0});
}

TEST_CASE("decperm json") {
    DecoratedPermutation d{Permutation({1, 3, 2}), {1}};
    auto j = to_json(d);
    CHECK(j.dump() == "{\"coloops\":[1],\"perm\":[1,3,2]}");
    CHECK(decperm_from_json(j) == d);
    CHECK_THROWS_AS(decperm_from_json(nlohmann::json{{"perm", {1, 3, 2}}, {"coloops", {2}}}), std::invalid_argument);
}

TEST_CASE("dual") {
    auto p = Positroid::from_lists(4, 2, {{1, 2}, {2, 3}, {2, 4}});
    CHECK(dual(p).basis_lists() == std::vector<std::vector<int>>{{1, 3}, {1, 4}, {3, 4}});
    CHECK(dual(dual(p)) == p);
}
