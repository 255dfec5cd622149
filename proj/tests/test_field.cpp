#include "oracles.hpp"

#include <minrank/field.hpp>

#include <doctest.h>

using namespace minrank;

namespace {

FMatrix random_matrix(std::mt19937_64& rng, FieldSpec f, int rows, int cols)
{
    std::uniform_int_distribution<int> d(0, f.p() - 1);
    FMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.set(i, j, d(rng));
    return m;
}

oracle::Matrix to_oracle(const FMatrix& m)
{
    oracle::Matrix out(static_cast<std::size_t>(m.rows()), std::vector<int>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out[i][j] = m(i, j);
    return out;
}

std::vector<int> to_vec(const FVector& v)
{
    return {v.entries().begin(), v.entries().end()};
}

} // namespace

TEST_CASE("field arithmetic agrees with integer arithmetic mod p")
{
    for (int p : {2, 3, 5, 7}) {
        FieldSpec f(p);
        for (int a = 0; a < p; ++a) {
            CHECK(f.neg(static_cast<std::uint8_t>(a)) == oracle::mod(-a, p));
            for (int b = 0; b < p; ++b) {
                CHECK(f.add(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) == (a + b) % p);
                CHECK(f.sub(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) == oracle::mod(a - b, p));
                CHECK(f.mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) == (a * b) % p);
            }
            if (a != 0)
                CHECK(f.mul(static_cast<std::uint8_t>(a), f.inv(static_cast<std::uint8_t>(a))) == 1);
        }
        CHECK(f.reduce(-1) == p - 1);
    }
}

TEST_CASE("unsupported field orders are rejected")
{
    CHECK_THROWS_AS(FieldSpec(4), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(11), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(0), std::invalid_argument);
}

TEST_CASE("rank matches naive elimination on random matrices")
{
    std::mt19937_64 rng(11);
    for (int p : {2, 3, 5, 7}) {
        FieldSpec f(p);
        for (int trial = 0; trial < 300; ++trial) {
            const int rows = 1 + static_cast<int>(rng() % 7);
            const int cols = 1 + static_cast<int>(rng() % 7);
            const auto m = random_matrix(rng, f, rows, cols);
            CHECK(rank(m) == oracle::rank(to_oracle(m), p));
            CHECK(rank(m.transpose()) == rank(m));
        }
    }
}

TEST_CASE("packed GF(2) rank agrees with the generic routine")
{
    std::mt19937_64 rng(5);
    const auto f = FieldSpec::gf2();
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto m = random_matrix(rng, f, n, n);
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m(i, j))
                    rows[i] |= std::uint64_t{1} << j;
        CHECK(rank_gf2_inplace(rows) == rank(m));
    }
}

TEST_CASE("column-space membership returns a valid witness")
{
    std::mt19937_64 rng(21);
    for (int p : {2, 3, 5}) {
        FieldSpec f(p);
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const auto m = random_matrix(rng, f, n, n);
            const auto span = oracle::column_span(to_oracle(m), p);
            FVector w(f, static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                w.set(static_cast<std::size_t>(i), static_cast<long long>(rng() % static_cast<unsigned>(p)));
            const auto res = col_space_contains(m, w);
            CHECK(res.contains == (span.count(to_vec(w)) == 1));
            if (res.contains)
                CHECK(m * res.witness == w);
        }
    }
}

TEST_CASE("column-space equality matches spans")
{
    std::mt19937_64 rng(8);
    for (int p : {2, 3}) {
        FieldSpec f(p);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const auto a = random_matrix(rng, f, n, 1 + static_cast<int>(rng() % 3));
            auto b = random_matrix(rng, f, n, 1 + static_cast<int>(rng() % 3));
            if (trial % 3 == 0)
                b = a * random_matrix(rng, f, a.cols(), a.cols());
            const bool same = oracle::column_span(to_oracle(a), p) == oracle::column_span(to_oracle(b), p);
            CHECK(col_space_equal(a, b) == same);
        }
    }
}

TEST_CASE("bordered rank is the rank of the bordered matrix")
{
    const auto f = FieldSpec::gf2();
    FMatrix m(f, {{1, 1}, {1, 1}});
    CHECK(bordered_rank(m, FVector(f, {1, 1}), FVector(f, {1, 1}), 1) == 1);
    CHECK(bordered_rank(m, FVector(f, {1, 1}), FVector(f, {1, 1}), 0) == 2);
    CHECK(bordered_rank(m, FVector(f, {1, 0}), FVector(f, {1, 1}), 0) == 2);
}

TEST_CASE("dimension errors are reported")
{
    const auto f = FieldSpec::gf2();
    FMatrix a(f, 2, 3);
    FMatrix b(f, 2, 3);
    CHECK_THROWS_AS((void)(a * b), DimensionMismatch);
    CHECK_THROWS_AS((void)col_space_contains(a, FVector(f, 3)), DimensionMismatch);
    CHECK_THROWS_AS((void)FMatrix(FieldSpec(3), {{1, 2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS((void)(FMatrix(f, 2, 2) + FMatrix(FieldSpec(3), 2, 2)), std::invalid_argument);
}

TEST_CASE("matrix basics")
{
    const FieldSpec f(3);
    FMatrix m(f, {{1, 2}, {4, -1}});
    CHECK(m(1, 0) == 1);
    CHECK(m(1, 1) == 2);
    CHECK(m.transpose()(0, 1) == 1);
    CHECK(FMatrix::identity(f, 2) * m == m);
    CHECK((m + m)(0, 0) == 2);
    CHECK(m.to_string() == "1 2\n1 2\n");
    CHECK(rank(m) == 1);
    CHECK(FMatrix::ones(f, 2, 2).is_symmetric());
}
