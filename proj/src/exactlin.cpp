#include "amp2/exactlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace amp2 {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
    data_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in product");
    RationalMatrix out(rows_, o.cols_);
    Rational t;
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            const Rational& a = at(i, l);
            if (sgn(a) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                t = a * o.at(l, j);
                out.at(i, j) += t;
            }
        }
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::select_rows(const std::vector<int>& rows1) const {
    RationalMatrix s(static_cast<int>(rows1.size()), cols_);
    for (std::size_t i = 0; i < rows1.size(); ++i) {
        int r = rows1[i] - 1;
        if (r < 0 || r >= rows_) throw std::invalid_argument("row index out of range");
        for (int j = 0; j < cols_; ++j) s.at(static_cast<int>(i), j) = at(r, j);
    }
    return s;
}

RationalMatrix RationalMatrix::column(int c1) const {
    if (c1 < 1 || c1 > cols_) throw std::invalid_argument("column index out of range");
    RationalMatrix s(rows_, 1);
    for (int i = 0; i < rows_; ++i) s.at(i, 0) = at(i, c1 - 1);
    return s;
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("row count mismatch");
    RationalMatrix s(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) s.at(i, cols_ + j) = o.at(i, j);
    }
    return s;
}

Rational Rng::positive_rational() {
    std::uniform_int_distribution<int> d(1, 1000);
    int p = d(eng_);
    int q = d(eng_);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

int Rng::uniform_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(eng_);
}

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Bareiss on an integer matrix stored row-major, size d×d. Destroys input.
Integer bareiss(std::vector<Integer>& a, int d) {
    if (d == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (int p = 0; p < d - 1; ++p) {
        if (a[p * d + p] == 0) {
            int sw = -1;
            for (int r = p + 1; r < d; ++r)
                if (a[r * d + p] != 0) {
                    sw = r;
                    break;
                }
            if (sw < 0) return 0;
            for (int c = 0; c < d; ++c) std::swap(a[p * d + c], a[sw * d + c]);
            sign = -sign;
        }
        for (int r = p + 1; r < d; ++r) {
            for (int c = p + 1; c < d; ++c) {
                Integer& x = a[r * d + c];
                x = x * a[p * d + p] - a[r * d + p] * a[p * d + c];
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            a[r * d + p] = 0;
        }
        prev = a[p * d + p];
    }
    Integer r = a[(d - 1) * d + (d - 1)];
    return sign < 0 ? Integer(-r) : r;
}

// rows scaled by positive integers so that all entries are integral
std::vector<Integer> integral_rows(const RationalMatrix& m, std::vector<Integer>* scales) {
    std::vector<Integer> out(static_cast<std::size_t>(m.rows()) * m.cols());
    if (scales) scales->assign(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            Integer v = m.at(i, j).get_num() * (l / m.at(i, j).get_den());
            out[static_cast<std::size_t>(i) * m.cols() + j] = v;
        }
        if (scales) (*scales)[i] = l;
    }
    return out;
}

template <class F>
void for_each_subset(int n, int k, F&& f) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    while (true) {
        f(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i + 1) --i;
        if (i < 0) return;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return splitmix(splitmix(splitmix(master) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

Rational det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    std::vector<Integer> scales;
    auto a = integral_rows(m, &scales);
    Integer d = bareiss(a, m.rows());
    Integer s = 1;
    for (auto& x : scales) s *= x;
    Rational q(d, s);
    q.canonicalize();
    return q;
}

int det_sign(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    auto a = integral_rows(m, nullptr);
    return sgn(bareiss(a, m.rows()));
}

Rational minor(const RationalMatrix& m, const std::vector<int>& rows1) {
    if (static_cast<int>(rows1.size()) != m.cols()) throw std::invalid_argument("subset size must equal column count");
    for (std::size_t i = 0; i < rows1.size(); ++i) {
        if (rows1[i] < 1 || rows1[i] > m.rows()) throw std::invalid_argument("subset index out of range");
        if (i && rows1[i] <= rows1[i - 1]) throw std::invalid_argument("subset must be strictly increasing");
    }
    return det(m.select_rows(rows1));
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    for_each_subset(n, k, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

std::vector<int> maximal_minor_signs(const RationalMatrix& m) {
    const int n = m.rows(), k = m.cols();
    std::vector<int> out;
    if (k > n) return out;
    auto a = integral_rows(m, nullptr);
    std::vector<Integer> buf(static_cast<std::size_t>(k) * k);
    for_each_subset(n, k, [&](const std::vector<int>& s) {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) buf[i * k + j] = a[static_cast<std::size_t>(s[i] - 1) * k + j];
        out.push_back(sgn(bareiss(buf, k)));
    });
    return out;
}

std::vector<Rational> maximal_minors(const RationalMatrix& m) {
    std::vector<Rational> out;
    for (const auto& s : k_subsets(m.rows(), m.cols())) out.push_back(det(m.select_rows(s)));
    return out;
}

namespace {
void check_letter(int i, int n) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("elementary index out of range");
}
}  // namespace

RationalMatrix x_elem(int i, const Rational& a, int n) {
    check_letter(i, n);
    auto m = RationalMatrix::identity(n);
    m.at(i - 1, i) = a;
    return m;
}

RationalMatrix y_elem(int i, const Rational& a, int n) {
    check_letter(i, n);
    auto m = RationalMatrix::identity(n);
    m.at(i, i - 1) = a;
    return m;
}

RationalMatrix sdot(int i, int n) {
    check_letter(i, n);
    auto m = RationalMatrix::identity(n);
    m.at(i - 1, i - 1) = 0;
    m.at(i, i) = 0;
    m.at(i - 1, i) = -1;
    m.at(i, i - 1) = 1;
    return m;
}

RationalMatrix sigma(int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("sigma needs 1 <= k < n");
    RationalMatrix m(n, n);
    for (int r = 1; r < n; ++r) m.at(r, r - 1) = 1;
    m.at(0, n - 1) = (k - 1) % 2 ? -1 : 1;
    return m;
}

RationalMatrix sigma_power(int k, int n, int p) {
    auto s = sigma(k, n);
    if (p < 0) {
        s = s.transpose();  // signed permutation matrix: inverse is the transpose
        p = -p;
    }
    auto out = RationalMatrix::identity(n);
    for (int i = 0; i < p; ++i) out = s * out;
    return out;
}

void left_y(RationalMatrix& m, int i, const Rational& a) {
    check_letter(i, m.rows());
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) += a * m.at(i - 1, c);
}

void left_sdot(RationalMatrix& m, int i) {
    check_letter(i, m.rows());
    for (int c = 0; c < m.cols(); ++c) {
        Rational top = m.at(i - 1, c);
        m.at(i - 1, c) = -m.at(i, c);
        m.at(i, c) = top;
    }
}

void left_sigma(RationalMatrix& m, int p) {
    const int n = m.rows(), k = m.cols();
    if (n == 0) return;
    const bool flip = k >= 1 && (k - 1) % 2 == 1;
    int steps = ((p % n) + n) % n;
    // sigma^n = (-1)^{k-1} I on columns, so reduce p mod n and fix the sign
    if (flip && ((p - steps) / n) % 2 != 0) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < k; ++c) m.at(r, c) = -m.at(r, c);
    }
    for (int s = 0; s < steps; ++s) {
        // (σM)_1 = ± M_n, (σM)_r = M_{r-1}
        RationalMatrix out(n, k);
        for (int c = 0; c < k; ++c) out.at(0, c) = flip ? Rational(-m.at(n - 1, c)) : m.at(n - 1, c);
        for (int r = 1; r < n; ++r)
            for (int c = 0; c < k; ++c) out.at(r, c) = m.at(r - 1, c);
        m = std::move(out);
    }
}

RationalMatrix vandermonde_Z(int rows, int n, const std::vector<Rational>& nodes) {
    if (static_cast<int>(nodes.size()) != n) throw std::invalid_argument("need n nodes");
    for (int i = 0; i < n; ++i) {
        if (sgn(nodes[i]) <= 0) throw std::invalid_argument("nodes must be positive");
        if (i && nodes[i] <= nodes[i - 1]) throw std::invalid_argument("nodes must be strictly increasing");
    }
    RationalMatrix z(rows, n);
    for (int c = 0; c < n; ++c) {
        Rational p = 1;
        for (int r = 0; r < rows; ++r) {
            z.at(r, c) = p;
            p *= nodes[c];
        }
    }
    return z;
}

RationalMatrix random_vandermonde_Z(int rows, int n, Rng& rng) {
    // increasing nodes as partial sums of positive random rationals
    std::vector<Rational> nodes;
    Rational acc = 0;
    for (int i = 0; i < n; ++i) {
        acc += rng.positive_rational();
        nodes.push_back(acc);
    }
    return vandermonde_Z(rows, n, nodes);
}

RationalMatrix elementary_Z(int rows, int n, Rng& rng) {
    if (rows > n) throw std::invalid_argument("Z needs rows <= n");
    // L·U with L, U products of positive elementary factors over a reduced word of w0
    auto g = RationalMatrix::identity(n);
    std::vector<int> w0;
    for (int j = 1; j < n; ++j)
        for (int i = j; i >= 1; --i) w0.push_back(i);
    auto u = RationalMatrix::identity(n);
    for (int i : w0) u = u * x_elem(i, rng.positive_rational(), n);
    auto l = RationalMatrix::identity(n);
    for (int i : w0) l = l * y_elem(i, rng.positive_rational(), n);
    g = l * u;
    std::vector<int> top(rows);
    for (int r = 0; r < rows; ++r) top[r] = r + 1;
    return g.select_rows(top);
}

bool is_totally_nonnegative(const RationalMatrix& m) {
    for (int s : maximal_minor_signs(m.rows() >= m.cols() ? m : m.transpose()))
        if (s < 0) return false;
    return true;
}

bool is_totally_positive(const RationalMatrix& m) {
    for (int s : maximal_minor_signs(m.rows() >= m.cols() ? m : m.transpose()))
        if (s <= 0) return false;
    return true;
}

bool all_minors_positive(const RationalMatrix& m) {
    for (int d = 1; d <= std::min(m.rows(), m.cols()); ++d)
        for (const auto& rs : k_subsets(m.rows(), d)) {
            auto sub = m.select_rows(rs).transpose();
            for (int s : maximal_minor_signs(sub))
                if (s <= 0) return false;
        }
    return true;
}

nlohmann::json to_json(const RationalMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
    int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
    const auto& e = j.at("entries");
    if (static_cast<int>(e.size()) != r) throw std::invalid_argument("row count mismatch");
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(e[i].size()) != c) throw std::invalid_argument("column count mismatch");
        for (int k = 0; k < c; ++k) m.at(i, k) = parse_rational(e[i][k].get<std::string>());
    }
    return m;
}

}  // namespace amp2
