#pragma once

// Dense linear algebra over the small prime fields GF(2), GF(3), GF(5), GF(7).
//
// Matrices are value types holding residues mod p in row-major order. Over
// GF(2) the rank and solve routines pack each row into a machine word and
// eliminate with XOR; the other primes use byte arithmetic with a fixed
// pivot order (leftmost column, topmost row).

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minrank {

class FieldSpec {
public:
    /// Throws std::invalid_argument unless p is one of 2, 3, 5, 7.
    explicit FieldSpec(int p);

    static FieldSpec gf2() { return FieldSpec(2); }

    [[nodiscard]] int p() const noexcept { return p_; }

    [[nodiscard]] std::uint8_t reduce(long long value) const noexcept;
    [[nodiscard]] std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept;
    [[nodiscard]] std::uint8_t sub(std::uint8_t a, std::uint8_t b) const noexcept;
    [[nodiscard]] std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept;
    [[nodiscard]] std::uint8_t neg(std::uint8_t a) const noexcept;
    /// Multiplicative inverse; a must be nonzero.
    [[nodiscard]] std::uint8_t inv(std::uint8_t a) const;

    static bool is_supported(int p) noexcept { return p == 2 || p == 3 || p == 5 || p == 7; }

    friend bool operator==(FieldSpec, FieldSpec) = default;

private:
    int p_;
};

class FVector {
public:
    FVector(FieldSpec field, std::size_t size);
    FVector(FieldSpec field, std::initializer_list<int> entries);
    FVector(FieldSpec field, std::span<const std::uint8_t> entries);

    [[nodiscard]] FieldSpec field() const noexcept { return field_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] std::uint8_t operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, long long value) { entries_.at(i) = field_.reduce(value); }
    [[nodiscard]] std::span<const std::uint8_t> entries() const noexcept { return entries_; }
    [[nodiscard]] bool is_zero() const noexcept;

    friend bool operator==(const FVector&, const FVector&) = default;

private:
    FieldSpec field_;
    std::vector<std::uint8_t> entries_;
};

class FMatrix {
public:
    FMatrix(FieldSpec field, int rows, int cols);
    /// Row lists; every row must have the same length. Values are reduced mod p.
    FMatrix(FieldSpec field, std::initializer_list<std::initializer_list<int>> rows);

    static FMatrix identity(FieldSpec field, int n);
    static FMatrix zeros(FieldSpec field, int rows, int cols) { return FMatrix(field, rows, cols); }
    static FMatrix ones(FieldSpec field, int rows, int cols);
    static FMatrix column(const FVector& v);

    [[nodiscard]] FieldSpec field() const noexcept { return field_; }
    [[nodiscard]] int rows() const noexcept { return rows_; }
    [[nodiscard]] int cols() const noexcept { return cols_; }

    [[nodiscard]] std::uint8_t operator()(int r, int c) const { return entries_[index(r, c)]; }
    [[nodiscard]] std::uint8_t at(int r, int c) const;
    void set(int r, int c, long long value);

    [[nodiscard]] std::span<const std::uint8_t> entries() const noexcept { return entries_; }
    [[nodiscard]] bool is_symmetric() const noexcept;
    [[nodiscard]] FMatrix transpose() const;
    [[nodiscard]] FVector column_vector(int c) const;

    /// [this | other]; same row count and field.
    [[nodiscard]] FMatrix hconcat(const FMatrix& other) const;
    [[nodiscard]] FMatrix operator*(const FMatrix& other) const;
    [[nodiscard]] FVector operator*(const FVector& v) const;
    [[nodiscard]] FMatrix operator+(const FMatrix& other) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FMatrix&, const FMatrix&) = default;
    friend bool operator<(const FMatrix& a, const FMatrix& b) { return a.entries_ < b.entries_; }

private:
    [[nodiscard]] std::size_t index(int r, int c) const noexcept
    {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }

    FieldSpec field_;
    int rows_;
    int cols_;
    std::vector<std::uint8_t> entries_;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

[[nodiscard]] int rank(const FMatrix& m);

/// Rank of GF(2) rows packed into words (bit j = column j). Destroys `rows`.
[[nodiscard]] int rank_gf2_inplace(std::span<std::uint64_t> rows) noexcept;

/// Rank of a small matrix over GF(p) stored row-major in `entries` (rows x cols).
/// Destroys `entries`.
[[nodiscard]] int rank_inplace(FieldSpec field, std::span<std::uint8_t> entries, int rows, int cols) noexcept;

struct ColumnSpaceMembership {
    bool contains = false;
    /// When contains: M * witness == w. Free variables are zero.
    FVector witness;
};

[[nodiscard]] ColumnSpaceMembership col_space_contains(const FMatrix& m, const FVector& w);
[[nodiscard]] bool col_space_equal(const FMatrix& a, const FMatrix& b);

/// Rank of [[M, u], [v^T, c]].
[[nodiscard]] int bordered_rank(const FMatrix& m, const FVector& u, const FVector& v, std::uint8_t c);

} // namespace minrank
