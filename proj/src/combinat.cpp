#include "amp2/combinat.hpp"

#include <algorithm>
#include <sstream>

namespace amp2 {

namespace {

// rank of element e in the order r < r+1 < ... < r-1
int shifted(int e, int r, int n) { return (e - r + n) % n; }

bool shifted_less(Subset a, Subset b, int r, int n) {
    auto key = [&](Subset s) {
        std::vector<int> v;
        for (int e : elements(s)) v.push_back(shifted(e, r, n));
        std::sort(v.begin(), v.end());
        return v;
    };
    return key(a) < key(b);
}

}  // namespace

std::vector<int> LeDiagram::shape() const {
    std::vector<int> s;
    for (const auto& row : plus) s.push_back(static_cast<int>(row.size()));
    return s;
}

GrassmannNecklace necklace_of(const Positroid& p) {
    GrassmannNecklace g{p.n(), p.k(), {}};
    for (int r = 1; r <= p.n(); ++r) {
        Subset best = p.bases().front();
        for (Subset b : p.bases())
            if (shifted_less(b, best, r, p.n())) best = b;
        g.I.push_back(best);
    }
    return g;
}

DecoratedPermutation decperm_of(const Positroid& p) {
    const int n = p.n();
    auto g = necklace_of(p);
    std::vector<int> img(n);
    std::vector<int> coloops;
    for (int r = 1; r <= n; ++r) {
        Subset bit = Subset(1) << (r - 1);
        Subset cur = g.I[r - 1], next = g.I[r % n];
        if (!(cur & bit)) {
            img[r - 1] = r;  // loop
            continue;
        }
        Subset added = next & ~(cur & ~bit);
        if (subset_size(added) != 1) throw std::logic_error("necklace step is not an exchange");
        img[r - 1] = elements(added)[0];
        if (img[r - 1] == r) coloops.push_back(r);
    }
    return DecoratedPermutation{Permutation(img), coloops};
}

std::vector<int> anti_excedances(const DecoratedPermutation& d) {
    std::vector<int> out;
    Permutation inv = d.perm.inverse();
    for (int i = 1; i <= d.perm.n(); ++i)
        if (inv(i) > i || std::binary_search(d.coloops.begin(), d.coloops.end(), i)) out.push_back(i);
    return out;
}

LeDiagram le_of(const MRCell& c) {
    LeDiagram d{c.k, c.n, std::vector<std::vector<bool>>(c.k)};
    auto a = c.alist();
    std::size_t pos = 0;
    for (int r = 1; r <= c.k; ++r) {
        int len = std::max(0, a[r - 1] - r + 1);
        auto& row = d.plus[c.k - r];
        row.assign(len, true);
        // first letter of the block sits in the rightmost box
        for (int t = 0; t < len; ++t, ++pos) row[len - 1 - t] = !c.mask[pos];
    }
    return d;
}

MRCell cell_from_le(const LeDiagram& d) {
    const int k = d.k, n = d.n;
    if (static_cast<int>(d.plus.size()) != k) throw std::invalid_argument("diagram needs k rows");
    std::vector<int> a(k);
    SubexprMask mask;
    for (int r = 1; r <= k; ++r) {
        const auto& row = d.plus[k - r];
        int len = static_cast<int>(row.size());
        a[r - 1] = r - 1 + len;
        for (int t = 0; t < len; ++t) mask.push_back(!row[len - 1 - t]);
    }
    return make_cell(n, k, wj_word(a, k, n), mask);
}

bool satisfies_le_condition(const LeDiagram& d) {
    const int rows = static_cast<int>(d.plus.size());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < static_cast<int>(d.plus[i].size()); ++j) {
            if (d.plus[i][j]) continue;
            bool up = false, left = false;
            for (int x = 0; x < i; ++x) up = up || (j < static_cast<int>(d.plus[x].size()) && d.plus[x][j]);
            for (int y = 0; y < j; ++y) left = left || d.plus[i][y];
            if (up && left) return false;
        }
    return true;
}

LeDiagram transpose(const LeDiagram& d) {
    LeDiagram t{d.n - d.k, d.n, std::vector<std::vector<bool>>(d.n - d.k)};
    for (int j = 0; j < d.n - d.k; ++j)
        for (int i = 0; i < d.k; ++i)
            if (j < static_cast<int>(d.plus[i].size())) t.plus[j].push_back(d.plus[i][j]);
    return t;
}

DecoratedPermutation pipe_dream_decperm(const LeDiagram& d) {
    const int rows = d.k, n = d.n, width = n - d.k;
    auto lam = d.shape();
    // label the SE boundary from the NE corner: vertical steps end rows, horizontal steps end columns
    std::vector<int> row_label(rows), col_label(width);
    {
        int i = 0, j = width;
        for (int step = 1; step <= n; ++step) {
            if (i < rows && lam[i] == j)
                row_label[i++] = step;
            else
                col_label[--j] = step;
        }
    }
    std::vector<int> img(n, 0);
    std::vector<int> coloops;
    auto trace = [&](int r, int c, bool west, int label) {
        while (true) {
            if (c < 0) {
                img[label - 1] = row_label[r];
                return;
            }
            if (r < 0) {
                img[label - 1] = col_label[c];
                return;
            }
            if (d.plus[r][c]) west = !west;  // elbow; a 0 box is a crossing
            if (west)
                --c;
            else
                --r;
        }
    };
    for (int r = 0; r < rows; ++r) {
        if (lam[r] == 0) {
            img[row_label[r] - 1] = row_label[r];
            coloops.push_back(row_label[r]);
            continue;
        }
        trace(r, lam[r] - 1, true, row_label[r]);
        if (img[row_label[r] - 1] == row_label[r]) coloops.push_back(row_label[r]);
    }
    for (int c = 0; c < width; ++c) {
        int r = -1;
        for (int x = 0; x < rows; ++x)
            if (lam[x] > c) r = x;
        if (r < 0) {
            img[col_label[c] - 1] = col_label[c];
            continue;
        }
        trace(r, c, false, col_label[c]);
    }
    std::sort(coloops.begin(), coloops.end());
    return DecoratedPermutation{Permutation(img), coloops};
}

Positroid dual(const Positroid& p) {
    const Subset full = (Subset(1) << p.n()) - 1;
    std::vector<Subset> c;
    for (Subset b : p.bases()) c.push_back(full & ~b);
    return Positroid(p.n(), p.n() - p.k(), std::move(c), false);
}

std::string to_text(const LeDiagram& d) {
    std::string s;
    for (const auto& row : d.plus) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) s += ' ';
            s += row[j] ? '+' : '0';
        }
        s += '\n';
    }
    return s;
}

LeDiagram le_from_text(const std::string& text, int n, int k) {
    LeDiagram d{k, n, {}};
    std::istringstream in(text);
    std::string line;
    while (static_cast<int>(d.plus.size()) < k && std::getline(in, line)) {
        std::istringstream ls(line);
        std::string t;
        std::vector<bool> row;
        while (ls >> t) {
            if (t == "+")
                row.push_back(true);
            else if (t == "0")
                row.push_back(false);
            else
                throw std::invalid_argument("bad Le symbol '" + t + "'");
        }
        d.plus.push_back(row);
    }
    while (static_cast<int>(d.plus.size()) < k) d.plus.emplace_back();
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(d.plus[i].size()) > n - k) throw std::invalid_argument("row longer than the box");
        if (i && d.plus[i].size() > d.plus[i - 1].size()) throw std::invalid_argument("rows must weakly decrease");
    }
    return d;
}

nlohmann::json to_json(const DecoratedPermutation& d) {
    return {{"perm", d.perm.images()}, {"coloops", d.coloops}};
}

DecoratedPermutation decperm_from_json(const nlohmann::json& j) {
    DecoratedPermutation d{Permutation(j.at("perm").get<std::vector<int>>()), j.at("coloops").get<std::vector<int>>()};
    std::sort(d.coloops.begin(), d.coloops.end());
    for (int c : d.coloops)
        if (c < 1 || c > d.perm.n() || d.perm(c) != c) throw std::invalid_argument("coloop must be a fixed point");
    return d;
}

}  // namespace amp2
