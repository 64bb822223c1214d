#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace amp2 {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);  // always "num/den"

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // 0-based
    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const;

    RationalMatrix transpose() const;
    RationalMatrix select_rows(const std::vector<int>& rows1) const;  // 1-based
    RationalMatrix column(int c1) const;                              // 1-based
    RationalMatrix hconcat(const RationalMatrix& o) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

// seeded stream of p/q with p, q uniform in [1, 1000]
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    Rational positive_rational();
    std::uint64_t next() { return eng_(); }
    int uniform_int(int lo, int hi);

private:
    std::mt19937_64 eng_;
};

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0);

Rational det(const RationalMatrix& m);
int det_sign(const RationalMatrix& m);
Rational minor(const RationalMatrix& m, const std::vector<int>& rows1);

// all k-subsets of [n] in lex order, 1-based
std::vector<std::vector<int>> k_subsets(int n, int k);
// signs of all maximal minors of an n×k matrix, in k_subsets(n,k) order
std::vector<int> maximal_minor_signs(const RationalMatrix& m);
std::vector<Rational> maximal_minors(const RationalMatrix& m);

RationalMatrix x_elem(int i, const Rational& a, int n);
RationalMatrix y_elem(int i, const Rational& a, int n);
RationalMatrix sdot(int i, int n);
RationalMatrix sigma(int k, int n);
RationalMatrix sigma_power(int k, int n, int p);

// in-place left actions on an n×k matrix
void left_y(RationalMatrix& m, int i, const Rational& a);
void left_sdot(RationalMatrix& m, int i);
void left_sigma(RationalMatrix& m, int p);  // uses k = m.cols()

RationalMatrix vandermonde_Z(int rows, int n, const std::vector<Rational>& nodes);
RationalMatrix random_vandermonde_Z(int rows, int n, Rng& rng);
RationalMatrix elementary_Z(int rows, int n, Rng& rng);

bool is_totally_nonnegative(const RationalMatrix& m);
bool is_totally_positive(const RationalMatrix& m);
// every square submatrix has positive determinant
bool all_minors_positive(const RationalMatrix& m);

nlohmann::json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace amp2
