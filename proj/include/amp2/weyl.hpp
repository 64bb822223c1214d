#pragma once

#include <compare>
#include <string>
#include <vector>

namespace amp2 {

// One-line notation, 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // p * s_i, i.e. swap positions i and i+1
    Permutation times_s(int i) const;
    // (p*q)(i) = p(q(i))
    Permutation operator*(const Permutation& q) const;

    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Word in the simple reflections s_1..s_{rank-1}. Reducedness is not enforced here.
struct ReducedWord {
    std::vector<int> letters;
    int rank = 0;

    ReducedWord() = default;
    ReducedWord(std::vector<int> ls, int n);

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    std::string to_string() const;

    auto operator<=>(const ReducedWord&) const = default;
};

using SubexprMask = std::vector<bool>;

ReducedWord parse_word(const std::string& text, int n);
ReducedWord concat(const ReducedWord& a, const ReducedWord& b);

int length(const Permutation& p);
Permutation word_to_perm(const ReducedWord& w);
bool is_reduced(const ReducedWord& w);
bool bruhat_leq(const Permutation& u, const Permutation& w);

ReducedWord s_range(int a, int b, int n);
ReducedWord wj_word(const std::vector<int>& a_list, int k, int n);
// inverse of wj_word on W^J: a_r = w'(r) - 1
std::vector<int> wj_alist(const Permutation& wprime, int k);

Permutation mask_product(const ReducedWord& word, const SubexprMask& mask);
bool is_positive_subexpression(const ReducedWord& word, const SubexprMask& mask);
SubexprMask positive_subexpression(const Permutation& w, const ReducedWord& word);

bool is_in_WJ(const Permutation& p, int k);

// some reduced word for p (bubble sort)
ReducedWord reduced_word_of(const Permutation& p);

}  // namespace amp2
