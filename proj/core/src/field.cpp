#include "minrank/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

namespace minrank {

FieldSpec::FieldSpec(int p) : p_(p)
{
    if (!is_supported(p))
        throw std::invalid_argument("unsupported field order " + std::to_string(p) + " (expected 2, 3, 5 or 7)");
}

std::uint8_t FieldSpec::reduce(long long value) const noexcept
{
    long long r = value % p_;
    if (r < 0)
        r += p_;
    return static_cast<std::uint8_t>(r);
}

std::uint8_t FieldSpec::add(std::uint8_t a, std::uint8_t b) const noexcept
{
    int s = a + b;
    return static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
}

std::uint8_t FieldSpec::sub(std::uint8_t a, std::uint8_t b) const noexcept
{
    int s = a - b;
    return static_cast<std::uint8_t>(s < 0 ? s + p_ : s);
}

std::uint8_t FieldSpec::mul(std::uint8_t a, std::uint8_t b) const noexcept
{
    return static_cast<std::uint8_t>((a * b) % p_);
}

std::uint8_t FieldSpec::neg(std::uint8_t a) const noexcept
{
    return static_cast<std::uint8_t>(a == 0 ? 0 : p_ - a);
}

std::uint8_t FieldSpec::inv(std::uint8_t a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero");
    for (int x = 1; x < p_; ++x)
        if ((a * x) % p_ == 1)
            return static_cast<std::uint8_t>(x);
    throw std::logic_error("no inverse in prime field");
}

// ---------------------------------------------------------------------------
// FVector

FVector::FVector(FieldSpec field, std::size_t size) : field_(field), entries_(size, 0) {}

FVector::FVector(FieldSpec field, std::initializer_list<int> entries) : field_(field)
{
    entries_.reserve(entries.size());
    for (int e : entries)
        entries_.push_back(field_.reduce(e));
}

FVector::FVector(FieldSpec field, std::span<const std::uint8_t> entries) : field_(field)
{
    entries_.reserve(entries.size());
    for (auto e : entries)
        entries_.push_back(field_.reduce(e));
}

bool FVector::is_zero() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

// ---------------------------------------------------------------------------
// FMatrix

FMatrix::FMatrix(FieldSpec field, int rows, int cols) : field_(field), rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw DimensionMismatch("negative matrix dimension");
    entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

FMatrix::FMatrix(FieldSpec field, std::initializer_list<std::initializer_list<int>> rows) :
    field_(field), rows_(static_cast<int>(rows.size())), cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size()))
{
    entries_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw DimensionMismatch("ragged matrix rows");
        for (int e : row)
            entries_.push_back(field_.reduce(e));
    }
}

FMatrix FMatrix::identity(FieldSpec field, int n)
{
    FMatrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

FMatrix FMatrix::ones(FieldSpec field, int rows, int cols)
{
    FMatrix m(field, rows, cols);
    std::fill(m.entries_.begin(), m.entries_.end(), std::uint8_t{1});
    return m;
}

FMatrix FMatrix::column(const FVector& v)
{
    FMatrix m(v.field(), static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m.set(static_cast<int>(i), 0, v[i]);
    return m;
}

std::uint8_t FMatrix::at(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return entries_[index(r, c)];
}

void FMatrix::set(int r, int c, long long value)
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    entries_[index(r, c)] = field_.reduce(value);
}

bool FMatrix::is_symmetric() const noexcept
{
    if (rows_ != cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

FMatrix FMatrix::transpose() const
{
    FMatrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.entries_[t.index(j, i)] = (*this)(i, j);
    return t;
}

FVector FMatrix::column_vector(int c) const
{
    FVector v(field_, static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        v.set(static_cast<std::size_t>(i), at(i, c));
    return v;
}

FMatrix FMatrix::hconcat(const FMatrix& other) const
{
    if (other.field_ != field_ || other.rows_ != rows_)
        throw DimensionMismatch("hconcat: row count or field mismatch");
    FMatrix out(field_, rows_, cols_ + other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            out.entries_[out.index(i, j)] = (*this)(i, j);
        for (int j = 0; j < other.cols_; ++j)
            out.entries_[out.index(i, cols_ + j)] = other(i, j);
    }
    return out;
}

FMatrix FMatrix::operator*(const FMatrix& other) const
{
    if (other.field_ != field_ || cols_ != other.rows_)
        throw DimensionMismatch("matrix product: inner dimension mismatch");
    FMatrix out(field_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < other.cols_; ++j) {
            long long s = 0;
            for (int k = 0; k < cols_; ++k)
                s += (*this)(i, k) * other(k, j);
            out.entries_[out.index(i, j)] = field_.reduce(s);
        }
    return out;
}

FVector FMatrix::operator*(const FVector& v) const
{
    if (v.field() != field_ || static_cast<int>(v.size()) != cols_)
        throw DimensionMismatch("matrix-vector product: dimension mismatch");
    FVector out(field_, static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        long long s = 0;
        for (int k = 0; k < cols_; ++k)
            s += (*this)(i, k) * v[static_cast<std::size_t>(k)];
        out.set(static_cast<std::size_t>(i), s);
    }
    return out;
}

FMatrix FMatrix::operator+(const FMatrix& other) const
{
    if (other.field_ != field_ || other.rows_ != rows_ || other.cols_ != cols_)
        throw DimensionMismatch("matrix sum: shape mismatch");
    FMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = field_.add(entries_[i], other.entries_[i]);
    return out;
}

std::string FMatrix::to_string() const
{
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j)
                os << ' ';
            os << static_cast<int>((*this)(i, j));
        }
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Elimination

int rank_gf2_inplace(std::span<std::uint64_t> rows) noexcept
{
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    std::uint64_t remaining = 0;
    for (auto r : rows)
        remaining |= r;
    while (remaining && rank < nrows) {
        const std::uint64_t bit = remaining & (~remaining + 1);
        remaining &= remaining - 1;
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[r] & bit) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint64_t prow = rows[rank];
        for (int r = rank + 1; r < nrows; ++r)
            if (rows[r] & bit)
                rows[r] ^= prow;
        ++rank;
    }
    return rank;
}

int rank_inplace(FieldSpec field, std::span<std::uint8_t> a, int rows, int cols) noexcept
{
    const int p = field.p();
    // small inverse table; index 0 unused
    std::array<std::uint8_t, 8> inverse{};
    for (int x = 1; x < p; ++x)
        for (int y = 1; y < p; ++y)
            if ((x * y) % p == 1)
                inverse[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y);

    auto at = [&](int r, int c) -> std::uint8_t& { return a[static_cast<std::size_t>(r * cols + c)]; };
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int j = c; j < cols; ++j)
                std::swap(at(pivot, j), at(rank, j));
        const int pinv = inverse[at(rank, c)];
        for (int r = rank + 1; r < rows; ++r) {
            const int x = at(r, c);
            if (!x)
                continue;
            const int factor = (x * pinv) % p;
            for (int j = c; j < cols; ++j)
                at(r, j) = static_cast<std::uint8_t>(((at(r, j) + (p - factor) * at(rank, j)) % p));
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<std::uint64_t> pack_rows(const FMatrix& m)
{
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m.rows()), 0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j))
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    return rows;
}

void require_conformal(const FMatrix& m, const FVector& v, const char* what)
{
    if (v.field() != m.field() || static_cast<int>(v.size()) != m.rows())
        throw DimensionMismatch(std::string(what) + ": vector length " + std::to_string(v.size())
                                + " does not match matrix with " + std::to_string(m.rows()) + " rows");
}

} // namespace

int rank(const FMatrix& m)
{
    if (m.field().p() == 2 && m.cols() <= 64) {
        auto rows = pack_rows(m);
        return rank_gf2_inplace(rows);
    }
    std::vector<std::uint8_t> scratch(m.entries().begin(), m.entries().end());
    return rank_inplace(m.field(), scratch, m.rows(), m.cols());
}

ColumnSpaceMembership col_space_contains(const FMatrix& m, const FVector& w)
{
    require_conformal(m, w, "col_space_contains");
    const FieldSpec f = m.field();
    const int rows = m.rows();
    const int cols = m.cols();
    const int width = cols + 1;

    // reduced row echelon form of [M | w]
    std::vector<std::uint8_t> a(static_cast<std::size_t>(rows * width));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(i * width + j)] = m(i, j);
        a[static_cast<std::size_t>(i * width + cols)] = w[static_cast<std::size_t>(i)];
    }
    auto at = [&](int r, int c) -> std::uint8_t& { return a[static_cast<std::size_t>(r * width + c)]; };

    std::vector<int> pivot_cols;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (at(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != rank)
            for (int j = 0; j < width; ++j)
                std::swap(at(pivot, j), at(rank, j));
        const std::uint8_t pinv = f.inv(at(rank, c));
        for (int j = 0; j < width; ++j)
            at(rank, j) = f.mul(at(rank, j), pinv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || !at(r, c))
                continue;
            const std::uint8_t factor = at(r, c);
            for (int j = 0; j < width; ++j)
                at(r, j) = f.sub(at(r, j), f.mul(factor, at(rank, j)));
        }
        pivot_cols.push_back(c);
        ++rank;
    }

    for (int r = rank; r < rows; ++r)
        if (at(r, cols))
            return {false, FVector(f, static_cast<std::size_t>(cols))};

    FVector witness(f, static_cast<std::size_t>(cols));
    for (int r = 0; r < rank; ++r)
        witness.set(static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(r)]), at(r, cols));
    return {true, std::move(witness)};
}

bool col_space_equal(const FMatrix& a, const FMatrix& b)
{
    if (a.field() != b.field() || a.rows() != b.rows())
        throw DimensionMismatch("col_space_equal: shape mismatch");
    const int ra = rank(a);
    if (ra != rank(b))
        return false;
    return rank(a.hconcat(b)) == ra;
}

int bordered_rank(const FMatrix& m, const FVector& u, const FVector& v, std::uint8_t c)
{
    require_conformal(m, u, "bordered_rank");
    require_conformal(m, v, "bordered_rank");
    if (m.rows() != m.cols())
        throw DimensionMismatch("bordered_rank: matrix must be square");
    const int n = m.rows();
    FMatrix b(m.field(), n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            b.set(i, j, m(i, j));
        b.set(i, n, u[static_cast<std::size_t>(i)]);
        b.set(n, i, v[static_cast<std::size_t>(i)]);
    }
    b.set(n, n, c);
    return rank(b);
}

} // namespace minrank
