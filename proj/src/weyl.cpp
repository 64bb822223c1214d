#include "amp2/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace amp2 {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = this->n();
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation: " + to_string());
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < n(); ++i) inv[images_[i] - 1] = i + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::times_s(int i) const {
    if (i < 1 || i >= n()) throw std::invalid_argument("letter out of range");
    Permutation r = *this;
    std::swap(r.images_[i - 1], r.images_[i]);
    return r;
}

Permutation Permutation::operator*(const Permutation& q) const {
    if (q.n() != n()) throw std::invalid_argument("rank mismatch");
    std::vector<int> v(images_.size());
    for (int i = 0; i < n(); ++i) v[i] = images_[q.images_[i] - 1];
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(images_[i]);
    }
    return s;
}

ReducedWord::ReducedWord(std::vector<int> ls, int n) : letters(std::move(ls)), rank(n) {
    for (int i : letters)
        if (i < 1 || i >= n)
            throw std::invalid_argument("letter " + std::to_string(i) + " out of [1," +
                                        std::to_string(n - 1) + "]");
}

std::string ReducedWord::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(letters[i]);
    }
    return s;
}

ReducedWord parse_word(const std::string& text, int n) {
    std::istringstream in(text);
    std::vector<int> ls;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad letter '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("bad letter '" + tok + "'");
        ls.push_back(v);
    }
    return ReducedWord(std::move(ls), n);
}

ReducedWord concat(const ReducedWord& a, const ReducedWord& b) {
    if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
    std::vector<int> ls = a.letters;
    ls.insert(ls.end(), b.letters.begin(), b.letters.end());
    return ReducedWord(std::move(ls), a.rank);
}

int length(const Permutation& p) {
    int inv = 0;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = i + 1; j <= p.n(); ++j)
            if (p(i) > p(j)) ++inv;
    return inv;
}

Permutation word_to_perm(const ReducedWord& w) {
    std::vector<int> v(w.rank);
    std::iota(v.begin(), v.end(), 1);
    for (int i : w.letters) {
        if (i < 1 || i >= w.rank) throw std::invalid_argument("letter out of range");
        std::swap(v[i - 1], v[i]);
    }
    return Permutation(std::move(v));
}

bool is_reduced(const ReducedWord& w) {
    return length(word_to_perm(w)) == static_cast<int>(w.size());
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw std::invalid_argument("rank mismatch");
    const int n = u.n();
    std::vector<int> pu, pw;
    for (int i = 1; i < n; ++i) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(i)), u(i));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(i)), w(i));
        for (int j = 0; j < i; ++j)
            if (pu[j] > pw[j]) return false;
    }
    return true;
}

ReducedWord s_range(int a, int b, int n) {
    if (a < 0 || a > n - 1 || b < 1 || b > n - 1)
        throw std::invalid_argument("s_range indices out of range");
    std::vector<int> ls;
    for (int i = a; i >= b; --i) ls.push_back(i);
    return ReducedWord(std::move(ls), n);
}

ReducedWord wj_word(const std::vector<int>& a_list, int k, int n) {
    if (static_cast<int>(a_list.size()) != k) throw std::invalid_argument("a-list must have k entries");
    for (int r = 0; r < k; ++r) {
        if (a_list[r] < 0 || a_list[r] > n - 1) throw std::invalid_argument("a-list entry out of range");
        if (r > 0 && a_list[r] <= a_list[r - 1]) throw std::invalid_argument("a-list not strictly increasing");
    }
    ReducedWord out({}, n);
    // k = 0 or an a-list of zeros only happens in degenerate ranks; letters stay in range anyway
    for (int r = 1; r <= k; ++r)
        for (int i = a_list[r - 1]; i >= r; --i) out.letters.push_back(i);
    return out;
}

std::vector<int> wj_alist(const Permutation& wprime, int k) {
    if (!is_in_WJ(wprime, k)) throw std::invalid_argument("not a minimal coset representative");
    std::vector<int> a(k);
    for (int r = 1; r <= k; ++r) a[r - 1] = wprime(r) - 1;
    return a;
}

Permutation mask_product(const ReducedWord& word, const SubexprMask& mask) {
    if (mask.size() != word.size()) throw std::invalid_argument("mask length mismatch");
    Permutation p = Permutation::identity(word.rank);
    for (std::size_t j = 0; j < word.size(); ++j)
        if (mask[j]) p = p.times_s(word.letters[j]);
    return p;
}

bool is_positive_subexpression(const ReducedWord& word, const SubexprMask& mask) {
    if (mask.size() != word.size()) return false;
    Permutation p = Permutation::identity(word.rank);
    for (std::size_t j = 0; j < word.size(); ++j) {
        int i = word.letters[j];
        if (p(i) > p(i + 1)) return false;
        if (mask[j]) p = p.times_s(i);
    }
    return true;
}

SubexprMask positive_subexpression(const Permutation& w, const ReducedWord& word) {
    if (w.n() != word.rank) throw std::invalid_argument("rank mismatch");
    if (!bruhat_leq(w, word_to_perm(word)))
        throw std::invalid_argument("w is not below the word's product in Bruhat order");
    SubexprMask mask(word.size(), false);
    Permutation v = w;
    for (std::size_t j = word.size(); j-- > 0;) {
        int i = word.letters[j];
        if (v(i) > v(i + 1)) {
            mask[j] = true;
            v = v.times_s(i);
        }
    }
    if (v != Permutation::identity(w.n()) || !is_positive_subexpression(word, mask))
        throw std::logic_error("greedy scan did not produce a positive subexpression");
    return mask;
}

bool is_in_WJ(const Permutation& p, int k) {
    for (int i = 1; i < p.n(); ++i)
        if (i != k && p(i) > p(i + 1)) return false;
    return true;
}

ReducedWord reduced_word_of(const Permutation& p) {
    // p = s_{i1}...s_{il}: peel descents off the right
    std::vector<int> rev;
    Permutation v = p;
    for (bool again = true; again;) {
        again = false;
        for (int i = 1; i < v.n(); ++i)
            if (v(i) > v(i + 1)) {
                rev.push_back(i);
                v = v.times_s(i);
                again = true;
                break;
            }
    }
    return ReducedWord(std::vector<int>(rev.rbegin(), rev.rend()), p.n());
}

}  // namespace amp2
