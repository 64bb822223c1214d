#include "amp2/explicit.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace amp2 {

std::vector<int> parse_alist(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad a-list entry '" + tok + "'");
        }
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) throw std::invalid_argument("bad a-list entry '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

MRCell explicit_cell(int n, int k, const std::vector<int>& a) {
    if (k < 1 || k > n - 2) throw std::invalid_argument("explicit cells need 1 <= k <= n-2");
    if (static_cast<int>(a.size()) != k) throw std::invalid_argument("a-list must have k entries");
    for (int r = 0; r < k; ++r) {
        if (a[r] <= 1 || a[r] > n - 1) throw std::invalid_argument("a-list entries must lie in (1, n-1]");
        if (r && a[r] <= a[r - 1]) throw std::invalid_argument("a-list not strictly increasing");
    }
    ReducedWord ww({}, n);
    for (int r = 1; r <= k; ++r) ww = concat(ww, s_range(a[r - 1] - 1, r + 1, n));
    auto word = wj_word(a, k, n);
    return cell_from_interval(word_to_perm(ww), word, k);
}

std::vector<std::vector<int>> explicit_alists(int n, int k) {
    std::vector<std::vector<int>> out;
    for (auto s : k_subsets(n - 2, k)) {
        for (int& x : s) x += 1;
        out.push_back(s);
    }
    return out;
}

CellCollection enumerate_explicit(int n, int k) {
    CellCollection out{n, k, Variant::explicit_family, {}};
    if (k == 0) {
        out.members.push_back({Positroid(n, 0, {0}, false), DerivedCell::point(n), {Branch::base, "point"}});
        return out;
    }
    if (k < 0 || k > n - 2) return out;
    for (const auto& a : explicit_alists(n, k)) {
        auto c = explicit_cell(n, k, a);
        Branch b = a.back() == n - 1 ? Branch::sigma : Branch::iota_pre;
        std::string detail;
        for (std::size_t i = 0; i < a.size(); ++i) detail += (i ? "," : "") + std::to_string(a[i]);
        out.members.push_back({positroid_of(c), DerivedCell::from_mr(c), {b, detail, -1, a}});
    }
    return out;
}

IdentityReport verify_recursive_identity(int n, int k) {
    if (k < 1 || k > n - 2) throw std::invalid_argument("identity needs 1 <= k <= n-2");
    IdentityReport rep{n, k};
    auto target = enumerate_explicit(n, k).positroid_set();

    std::vector<Positroid> pre, sig;
    for (const auto& m : enumerate_explicit(n - 1, k).members) pre.push_back(iota_pre(m.cell));
    for (const auto& m : enumerate_explicit(n - 1, k - 1).members) {
        auto c = m.cell;
        if (k - 1 >= 1) c = c.sigma(kSubcollectionTwist);
        auto img = act_sigma(c.iota_inc().y(1).y(2), -2);
        sig.push_back(img);
        if (!m.provenance.alist.empty() || k == 1) {
            auto a = m.provenance.alist;
            a.push_back(n - 1);
            if (img != positroid_of(explicit_cell(n, k, a))) rep.mismatched_alists.push_back(a);
        }
    }
    rep.pre_branch = pre.size();
    rep.sigma_branch = sig.size();
    std::sort(pre.begin(), pre.end());
    std::sort(sig.begin(), sig.end());
    std::set_intersection(pre.begin(), pre.end(), sig.begin(), sig.end(), std::back_inserter(rep.overlap));
    std::vector<Positroid> uni;
    std::set_union(pre.begin(), pre.end(), sig.begin(), sig.end(), std::back_inserter(uni));
    std::set_difference(target.begin(), target.end(), uni.begin(), uni.end(), std::back_inserter(rep.missing));
    std::set_difference(uni.begin(), uni.end(), target.begin(), target.end(), std::back_inserter(rep.extra));
    rep.holds = rep.missing.empty() && rep.extra.empty() && rep.overlap.empty() && rep.mismatched_alists.empty() &&
                pre.size() + sig.size() == target.size();
    return rep;
}

nlohmann::json to_json(const IdentityReport& r) {
    auto list = [](const std::vector<Positroid>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& p : v) a.push_back(to_json(p));
        return a;
    };
    return {{"n", r.n},
            {"k", r.k},
            {"holds", r.holds},
            {"pre_branch", r.pre_branch},
            {"sigma_branch", r.sigma_branch},
            {"missing", list(r.missing)},
            {"extra", list(r.extra)},
            {"overlap", list(r.overlap)},
            {"mismatched_alists", r.mismatched_alists}};
}

}  // namespace amp2
