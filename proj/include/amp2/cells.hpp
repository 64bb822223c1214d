#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "amp2/exactlin.hpp"
#include "amp2/weyl.hpp"

namespace amp2 {

class InstabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// bit i-1 set <=> i in the subset
using Subset = std::uint32_t;

Subset subset_of(const std::vector<int>& elems);
std::vector<int> elements(Subset s);
int subset_size(Subset s);

class Positroid {
public:
    Positroid() = default;
    Positroid(int n, int k, std::vector<Subset> bases, bool check = true);
    static Positroid from_lists(int n, int k, const std::vector<std::vector<int>>& bases);
    static Positroid uniform(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<Subset>& bases() const { return bases_; }
    std::size_t size() const { return bases_.size(); }
    bool contains(Subset s) const;

    // ascending subsets, lex sorted
    std::vector<std::vector<int>> basis_lists() const;
    std::string to_string() const;

    auto operator<=>(const Positroid&) const = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Subset> bases_;  // numerically sorted
};

bool satisfies_basis_exchange(int n, const std::vector<Subset>& bases);

struct MRCell {
    int n = 0;
    int k = 0;
    ReducedWord word;
    SubexprMask mask;

    Permutation w() const { return mask_product(word, mask); }
    Permutation wprime() const { return word_to_perm(word); }
    std::vector<int> alist() const { return wj_alist(wprime(), k); }
    int dimension() const;
    int param_count() const { return dimension(); }

    bool operator==(const MRCell&) const = default;
};

// validates: reduced, fixed W^J expression, positive mask
MRCell make_cell(int n, int k, const ReducedWord& word, const SubexprMask& mask);
MRCell cell_from_interval(const Permutation& w, const ReducedWord& word, int k);
MRCell top_cell(int n, int k);
int dimension(const MRCell& c);

struct PointSample {
    RationalMatrix matrix;
    std::string provenance;
    std::vector<Rational> params;
};

std::vector<Rational> default_params(int count);
std::vector<Rational> random_params(int count, Rng& rng);

PointSample sample_point(const MRCell& c, const std::vector<Rational>& params);

Positroid positroid_of_matrix(const RationalMatrix& m);
Positroid positroid_of(const MRCell& c);

MRCell parse_dotted(const std::string& text, int n, int k);
std::string render_dotted(const MRCell& c);

// every cell of Gr_{k,n}^{>=0}
std::vector<MRCell> enumerate_cells(int n, int k);

nlohmann::json to_json(const MRCell& c);
MRCell cell_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Positroid& p);
Positroid positroid_from_json(const nlohmann::json& j);

}  // namespace amp2
