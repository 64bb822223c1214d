#include "amp2/cells.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace amp2 {

Subset subset_of(const std::vector<int>& elems) {
    Subset s = 0;
    for (int e : elems) {
        if (e < 1 || e > 31) throw std::invalid_argument("subset element out of range");
        if (s & (Subset(1) << (e - 1))) throw std::invalid_argument("repeated subset element");
        s |= Subset(1) << (e - 1);
    }
    return s;
}

std::vector<int> elements(Subset s) {
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1) out.push_back(i + 1);
    return out;
}

int subset_size(Subset s) { return std::popcount(s); }

bool satisfies_basis_exchange(int n, const std::vector<Subset>& bases) {
    std::vector<bool> member(std::size_t(1) << n, false);
    for (Subset b : bases) member[b] = true;
    for (Subset a : bases)
        for (Subset b : bases) {
            Subset da = a & ~b, db = b & ~a;
            for (Subset x = da; x; x &= x - 1) {
                Subset e = x & (~x + 1);
                bool ok = false;
                for (Subset y = db; y && !ok; y &= y - 1) ok = member[(a ^ e) | (y & (~y + 1))];
                if (!ok) return false;
            }
        }
    return true;
}

Positroid::Positroid(int n, int k, std::vector<Subset> bases, bool check)
    : n_(n), k_(k), bases_(std::move(bases)) {
    if (n < 0 || n > 31 || k < 0 || k > n) throw std::invalid_argument("bad positroid shape");
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    if (bases_.empty()) throw std::invalid_argument("positroid has no bases");
    const Subset full = n == 31 ? ~Subset(0) >> 1 : (Subset(1) << n) - 1;
    for (Subset b : bases_)
        if ((b & ~full) || subset_size(b) != k) throw std::invalid_argument("basis is not a k-subset of [n]");
    if (check && n <= 10 && !satisfies_basis_exchange(n, bases_))
        throw std::invalid_argument("bases violate the exchange axiom");
}

Positroid Positroid::from_lists(int n, int k, const std::vector<std::vector<int>>& bases) {
    std::vector<Subset> s;
    for (const auto& b : bases) {
        for (int e : b)
            if (e > n) throw std::invalid_argument("subset element out of range");
        s.push_back(subset_of(b));
    }
    return Positroid(n, k, std::move(s));
}

Positroid Positroid::uniform(int n, int k) {
    std::vector<Subset> s;
    for (const auto& b : k_subsets(n, k)) s.push_back(subset_of(b));
    return Positroid(n, k, std::move(s), false);
}

bool Positroid::contains(Subset s) const { return std::binary_search(bases_.begin(), bases_.end(), s); }

std::vector<std::vector<int>> Positroid::basis_lists() const {
    std::vector<std::vector<int>> out;
    for (Subset b : bases_) out.push_back(elements(b));
    std::sort(out.begin(), out.end());
    return out;
}

std::string Positroid::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& b : basis_lists()) {
        if (!first) s += ",";
        first = false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (n_ >= 10 && i) s += ' ';
            s += std::to_string(b[i]);
        }
    }
    return s + "}";
}

int MRCell::dimension() const {
    return static_cast<int>(std::count(mask.begin(), mask.end(), false));
}

MRCell make_cell(int n, int k, const ReducedWord& word, const SubexprMask& mask) {
    if (k < 1 || k >= n) throw std::invalid_argument("cell needs 1 <= k < n");
    if (word.rank != n) throw std::invalid_argument("word rank differs from n");
    if (!is_reduced(word)) throw std::invalid_argument("word is not reduced: " + word.to_string());
    Permutation wp = word_to_perm(word);
    if (!is_in_WJ(wp, k))
        throw std::invalid_argument("word product is not a minimal coset representative for k=" + std::to_string(k));
    if (wj_word(wj_alist(wp, k), k, n) != word)
        throw std::invalid_argument("word is not the fixed reduced expression " +
                                    wj_word(wj_alist(wp, k), k, n).to_string());
    if (!is_positive_subexpression(word, mask)) throw std::invalid_argument("mask is not a positive subexpression");
    return MRCell{n, k, word, mask};
}

MRCell cell_from_interval(const Permutation& w, const ReducedWord& word, int k) {
    if (!is_in_WJ(word_to_perm(word), k)) throw std::invalid_argument("w' is not in W^J");
    return make_cell(word.rank, k, word, positive_subexpression(w, word));
}

MRCell top_cell(int n, int k) {
    std::vector<int> a(k);
    for (int r = 1; r <= k; ++r) a[r - 1] = n - k + r - 1;
    auto word = wj_word(a, k, n);
    return make_cell(n, k, word, SubexprMask(word.size(), false));
}

int dimension(const MRCell& c) { return c.dimension(); }

std::vector<Rational> default_params(int count) {
    std::vector<Rational> out;
    for (int p = 2; static_cast<int>(out.size()) < count; ++p) {
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.emplace_back(p);
    }
    return out;
}

std::vector<Rational> random_params(int count, Rng& rng) {
    std::vector<Rational> out;
    for (int i = 0; i < count; ++i) out.push_back(rng.positive_rational());
    return out;
}

PointSample sample_point(const MRCell& c, const std::vector<Rational>& params) {
    if (static_cast<int>(params.size()) != c.param_count())
        throw std::invalid_argument("expected " + std::to_string(c.param_count()) + " parameters");
    for (const auto& t : params)
        if (sgn(t) <= 0) throw std::invalid_argument("parameters must be positive");
    RationalMatrix m(c.n, c.k);
    for (int i = 0; i < c.k; ++i) m.at(i, i) = 1;
    // parameter slots follow word positions left to right
    std::vector<int> slot(c.word.size(), -1);
    for (int j = 0, s = 0; j < static_cast<int>(c.word.size()); ++j)
        if (!c.mask[j]) slot[j] = s++;
    for (std::size_t j = c.word.size(); j-- > 0;) {
        int i = c.word.letters[j];
        if (c.mask[j])
            left_sdot(m, i);
        else
            left_y(m, i, params[slot[j]]);
    }
    return PointSample{std::move(m), render_dotted(c), params};
}

Positroid positroid_of_matrix(const RationalMatrix& m) {
    const int n = m.rows(), k = m.cols();
    if (k == 0) return Positroid(n, 0, {0}, false);
    auto subsets = k_subsets(n, k);
    auto signs = maximal_minor_signs(m);
    std::vector<Subset> bases;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (signs[i] != 0) bases.push_back(subset_of(subsets[i]));
    if (bases.empty()) throw std::invalid_argument("matrix is rank deficient");
    return Positroid(n, k, std::move(bases));
}

Positroid positroid_of(const MRCell& c) {
    Positroid p = positroid_of_matrix(sample_point(c, default_params(c.param_count())).matrix);
    Rng rng(derive_seed(0x6d72ULL, static_cast<std::uint64_t>(c.n) * 64 + c.k, c.word.size()));
    Positroid q = positroid_of_matrix(sample_point(c, random_params(c.param_count(), rng)).matrix);
    if (p != q) throw InstabilityError("positroid differs between samples of " + render_dotted(c));
    return p;
}

MRCell parse_dotted(const std::string& text, int n, int k) {
    std::vector<std::string> toks;
    {
        std::istringstream in(text);
        std::string t;
        while (in >> t) toks.push_back(t);
    }
    // compact strings such as "3.214.32" when every letter is one digit
    if (toks.size() == 1 && n <= 10) {
        std::vector<std::string> split;
        const std::string& s = toks[0];
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '.' && i + 1 < s.size()) {
                split.push_back(s.substr(i, 2));
                ++i;
            } else {
                split.push_back(s.substr(i, 1));
            }
        }
        toks = split;
    }
    std::vector<int> letters;
    SubexprMask mask;
    for (const auto& t : toks) {
        bool dot = !t.empty() && t[0] == '.';
        std::string body = dot ? t.substr(1) : t;
        if (body.empty() || !std::all_of(body.begin(), body.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw std::invalid_argument("bad token '" + t + "'");
        letters.push_back(std::stoi(body));
        mask.push_back(dot);
    }
    ReducedWord word(letters, n);
    if (!is_reduced(word)) throw std::invalid_argument("word is not reduced: " + word.to_string());
    Permutation w = mask_product(word, mask);
    if (!bruhat_leq(w, word_to_perm(word)) || positive_subexpression(w, word) != mask)
        throw std::invalid_argument("dotted letters are not the positive subexpression of their product");
    return make_cell(n, k, word, mask);
}

std::string render_dotted(const MRCell& c) {
    std::string s;
    for (std::size_t j = 0; j < c.word.size(); ++j) {
        if (j) s += ' ';
        if (c.mask[j]) s += '.';
        s += std::to_string(c.word.letters[j]);
    }
    return s;
}

std::vector<MRCell> enumerate_cells(int n, int k) {
    std::vector<MRCell> out;
    for (const auto& s : k_subsets(n, k)) {
        std::vector<int> a;
        for (int x : s) a.push_back(x - 1);
        auto word = wj_word(a, k, n);
        const std::size_t l = word.size();
        for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << l); ++bits) {
            SubexprMask m(l);
            for (std::size_t j = 0; j < l; ++j) m[j] = (bits >> j) & 1;
            if (is_positive_subexpression(word, m)) out.push_back(MRCell{n, k, word, m});
        }
    }
    return out;
}

nlohmann::json to_json(const MRCell& c) {
    return {{"n", c.n}, {"k", c.k}, {"word", c.word.letters}, {"mask", std::vector<bool>(c.mask.begin(), c.mask.end())}};
}

MRCell cell_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>(), k = j.at("k").get<int>();
    ReducedWord word(j.at("word").get<std::vector<int>>(), n);
    auto bits = j.at("mask").get<std::vector<bool>>();
    return make_cell(n, k, word, SubexprMask(bits.begin(), bits.end()));
}

nlohmann::json to_json(const Positroid& p) {
    return {{"n", p.n()}, {"k", p.k()}, {"bases", p.basis_lists()}};
}

Positroid positroid_from_json(const nlohmann::json& j) {
    return Positroid::from_lists(j.at("n").get<int>(), j.at("k").get<int>(),
                                 j.at("bases").get<std::vector<std::vector<int>>>());
}

}  // namespace amp2
