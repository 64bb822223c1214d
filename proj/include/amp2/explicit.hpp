#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "amp2/recursion.hpp"

namespace amp2 {

std::vector<int> parse_alist(const std::string& text);

MRCell explicit_cell(int n, int k, const std::vector<int>& a_list);
// admissible a-lists 1 < a_1 < ... < a_k <= n-1 in lex order
std::vector<std::vector<int>> explicit_alists(int n, int k);
CellCollection enumerate_explicit(int n, int k);

struct IdentityReport {
    int n = 0;
    int k = 0;
    bool holds = false;
    std::size_t pre_branch = 0;
    std::size_t sigma_branch = 0;
    std::vector<Positroid> missing;  // in E(n,k), not produced by the right side
    std::vector<Positroid> extra;    // produced, not in E(n,k)
    std::vector<Positroid> overlap;  // in both branches
    // per a-list: the sigma branch image of P(a) equals P(a, n-1)
    std::vector<std::vector<int>> mismatched_alists;
};

IdentityReport verify_recursive_identity(int n, int k);
nlohmann::json to_json(const IdentityReport& r);

}  // namespace amp2
