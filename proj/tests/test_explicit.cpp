#include <doctest.h>

#include <sstream>

#include "amp2/explicit.hpp"

using namespace amp2;

namespace {
std::vector<Positroid> compact_set(const std::string& list, int n, int k) {
    std::vector<Positroid> out;
    std::istringstream in(list);
    std::string t;
    while (in >> t) out.push_back(positroid_of(parse_dotted(t, n, k)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> rendered(const CellCollection& c) {
    std::vector<std::string> out;
    for (const auto& m : c.members) out.push_back(render_dotted(*m.cell.mr()));
    return out;
}
}  // namespace

TEST_CASE("a-list parsing") {
    CHECK(parse_alist("3,4") == std::vector<int>{3, 4});
    CHECK(parse_alist(" 2 , 5 ") == std::vector<int>{2, 5});
    CHECK_THROWS_AS(parse_alist("3,,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_alist("x"), std::invalid_argument);
}

TEST_CASE("explicit cells") {
    CHECK(render_dotted(explicit_cell(5, 2, {2, 3})) == "2 1 3 2");
    CHECK(render_dotted(explicit_cell(5, 2, {2, 4})) == "2 1 4 .3 2");
    CHECK(render_dotted(explicit_cell(5, 2, {3, 4})) == "3 .2 1 4 .3 2");
    CHECK(render_dotted(explicit_cell(4, 1, {3})) == "3 .2 1");
    CHECK_THROWS_AS(explicit_cell(5, 2, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(explicit_cell(5, 2, {3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(explicit_cell(5, 2, {3, 5}), std::invalid_argument);
    CHECK(explicit_alists(5, 2) == std::vector<std::vector<int>>{{2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("explicit families") {
    CHECK(rendered(enumerate_explicit(5, 2)) == std::vector<std::string>{"2 1 3 2", "2 1 4 .3 2", "3 .2 1 4 .3 2"});
    CHECK(rendered(enumerate_explicit(4, 1)) == std::vector<std::string>{"2 1", "3 .2 1"});
    CHECK(enumerate_explicit(6, 2).positroid_set() ==
          compact_set("2132 214.32 3.214.32 4.3.215.4.32 3.215.4.32 215.4.32", 6, 2));
    CHECK(enumerate_explicit(7, 3).positroid_set() ==
          compact_set("213243 21325.43 21326.5.43 214.325.43 214.326.5.43 215.4.326.5.43 3.214.325.43 "
                      "3.214.326.5.43 3.215.4.326.5.43 4.3.215.4.326.5.43",
                      7, 3));
    CHECK(enumerate_explicit(5, 0).size() == 1);
    CHECK(enumerate_explicit(5, 4).size() == 0);
}

TEST_CASE("explicit cells are 2k-dimensional and branch as expected") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= n - 2; ++k)
            for (const auto& m : enumerate_explicit(n, k).members) {
                CHECK(m.cell.param_count() == 2 * k);
                bool last = m.provenance.alist.back() == n - 1;
                CHECK(m.provenance.branch == (last ? Branch::sigma : Branch::iota_pre));
            }
}

TEST_CASE("recursive identity and agreement with the twisted recursion, n <= 8") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 1; k <= n - 2; ++k) {
            auto r = verify_recursive_identity(n, k);
            CHECK(r.holds);
            CHECK(r.missing.empty());
            CHECK(r.extra.empty());
            CHECK(r.overlap.empty());
            CHECK(r.mismatched_alists.empty());
            CHECK(r.pre_branch + r.sigma_branch == enumerate_explicit(n, k).size());
            CHECK(enumerate_explicit(n, k).positroid_set() == generate_collection(n, k).positroid_set());
        }
    CHECK(to_json(verify_recursive_identity(5, 2))["holds"] == true);
}
