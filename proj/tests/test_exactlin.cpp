#include <doctest.h>

#include "amp2/cells.hpp"
#include "amp2/exactlin.hpp"
#include "oracles.hpp"

using namespace amp2;

namespace {
RationalMatrix rows(std::vector<std::vector<int>> v) {
    std::vector<std::vector<Rational>> r;
    for (auto& row : v) {
        r.emplace_back();
        for (int x : row) r.back().emplace_back(x);
    }
    return RationalMatrix::from_rows(r);
}

RationalMatrix random_square(int n, Rng& rng) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rng.positive_rational() - Rational(rng.uniform_int(0, 2));
    return m;
}
}  // namespace

TEST_CASE("rational text") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2")) == "-2/1");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("det examples") {
    CHECK(det(RationalMatrix::identity(3)) == 1);
    CHECK(det(rows({{0, -1}, {1, 0}})) == 1);
    CHECK(det(rows({{1, 2}, {2, 4}})) == 0);
    CHECK_THROWS_AS(det(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det agrees with Laplace expansion and is multiplicative") {
    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + t % 5;
        auto a = random_square(n, rng);
        CHECK(det(a) == oracle::laplace_det(a));
        CHECK(det_sign(a) == sgn(oracle::laplace_det(a)));
    }
    for (int t = 0; t < 20; ++t) {
        auto a = random_square(4, rng), b = random_square(4, rng);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("minor") {
    // the point of the small Gr(2,4) cell with both parameters equal to 1
    auto m = rows({{0, -1}, {1, 0}, {0, 1}, {0, 1}});
    CHECK(minor(m, {1, 2}) == 1);
    CHECK(minor(m, {2, 3}) == 1);
    CHECK(minor(m, {2, 4}) == 1);
    CHECK(minor(m, {1, 3}) == 0);
    CHECK(minor(m, {1, 4}) == 0);
    CHECK(minor(m, {3, 4}) == 0);
    CHECK_THROWS_AS(minor(m, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(minor(m, {1}), std::invalid_argument);
    RationalMatrix base(5, 2);
    base.at(0, 0) = 1;
    base.at(1, 1) = 1;
    for (const auto& s : k_subsets(5, 2)) CHECK(minor(base, s) == (s == std::vector<int>{1, 2} ? 1 : 0));
}

TEST_CASE("vandermonde minors are node-difference products") {
    std::vector<Rational> nodes = {Rational(1, 2), 1, Rational(5, 3), 3, 7};
    auto z = vandermonde_Z(3, 5, nodes);
    auto zt = z.transpose();
    for (const auto& s : k_subsets(5, 3)) {
        Rational p = 1;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) p *= nodes[s[j] - 1] - nodes[s[i] - 1];
        CHECK(minor(zt, s) == p);
    }
    CHECK(is_totally_positive(vandermonde_Z(3, 4, {1, 2, 3, 4})));
    CHECK(det(vandermonde_Z(2, 2, {1, 2})) == 1);
    CHECK(all_minors_positive(vandermonde_Z(1, 4, {1, 2, 3, 4})));
    CHECK_THROWS_AS(vandermonde_Z(2, 3, {1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(vandermonde_Z(2, 3, {-1, 1, 2}), std::invalid_argument);
}

TEST_CASE("random Z generators give totally positive data") {
    for (std::uint64_t s = 0; s < 4; ++s) {
        Rng a(s), b(s + 100);
        CHECK(all_minors_positive(random_vandermonde_Z(4, 6, a)));
        CHECK(all_minors_positive(elementary_Z(4, 6, b)));
    }
}

TEST_CASE("elementary matrices") {
    auto y = y_elem(2, 5, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(y.at(i, j) == (i == 2 && j == 1 ? 5 : (i == j ? 1 : 0)));
    auto s = sdot(1, 4);
    RationalMatrix e1(4, 1), e2(4, 1);
    e1.at(0, 0) = 1;
    e2.at(1, 0) = 1;
    CHECK(s * e1 == e2);
    RationalMatrix minus_e1(4, 1);
    minus_e1.at(0, 0) = -1;
    CHECK(s * e2 == minus_e1);
    CHECK(x_elem(3, 0, 4) == RationalMatrix::identity(4));
    for (int i = 1; i < 5; ++i) CHECK(sdot(i, 5) == x_elem(i, -1, 5) * y_elem(i, 1, 5) * x_elem(i, -1, 5));
    CHECK_THROWS_AS(y_elem(4, 1, 4), std::invalid_argument);
}

TEST_CASE("in-place actions match matrix products") {
    Rng rng(3);
    RationalMatrix m(5, 2);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = rng.positive_rational();
    auto a = m;
    left_y(a, 3, Rational(7, 2));
    CHECK(a == y_elem(3, Rational(7, 2), 5) * m);
    a = m;
    left_sdot(a, 2);
    CHECK(a == sdot(2, 5) * m);
    for (int p = -7; p <= 7; ++p) {
        a = m;
        left_sigma(a, p);
        CHECK(a == sigma_power(2, 5, p) * m);
    }
}

TEST_CASE("sigma") {
    CHECK(sigma(1, 3).at(0, 2) == 1);
    CHECK(sigma(2, 5).at(0, 4) == -1);
    auto s = sigma(1, 3);
    CHECK(s * s * s == RationalMatrix::identity(3));
    CHECK(sigma_power(2, 5, -1) * sigma(2, 5) == RationalMatrix::identity(5));
}

TEST_CASE("sigma preserves total nonnegativity on cell samples") {
    Rng rng(5);
    int tested = 0;
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            auto cells = enumerate_cells(n, k);
            for (std::size_t i = 0; i < cells.size() && tested < 150; i += 7, ++tested) {
                auto m = sample_point(cells[i], random_params(cells[i].param_count(), rng)).matrix;
                CHECK(is_totally_nonnegative(m));
                left_sigma(m, 1);
                CHECK(is_totally_nonnegative(m));
            }
        }
    CHECK(tested >= 100);
}

TEST_CASE("total positivity tests") {
    auto m = rows({{0, -1}, {1, 0}, {0, 2}, {0, 6}});
    CHECK(is_totally_nonnegative(m));
    CHECK_FALSE(is_totally_positive(m));
    CHECK_FALSE(is_totally_nonnegative(rows({{1, 0}, {0, -1}})));
}

TEST_CASE("matrix json round trip") {
    auto m = rows({{1, -2}, {0, 3}});
    m.at(0, 0) = Rational(1, 3);
    auto j = to_json(m);
    CHECK(j["entries"][0][0] == "1/3");
    CHECK(j["entries"][0][1] == "-2/1");
    CHECK(matrix_from_json(j) == m);
}

TEST_CASE("rng draws p/q with p, q in [1,1000]") {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        auto q = rng.positive_rational();
        CHECK(q > 0);
        CHECK(q.get_num() <= 1000);
        CHECK(q.get_den() <= 1000);
    }
    Rng a(9), b(9);
    CHECK(a.positive_rational() == b.positive_rational());
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
}
