#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cidim {

using Scalar = std::uint64_t;
using Vec = std::vector<Scalar>;

// Arithmetic in GF(p) for a word-sized prime p (p < 2^31 so products fit
// in 64 bits). Elements are canonical residues in [0, p).
class PrimeField {
public:
    explicit PrimeField(Scalar p);

    Scalar characteristic() const { return p_; }

    Scalar reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Scalar>(r);
    }
    Scalar add(Scalar a, Scalar b) const {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
    Scalar inv(Scalar a) const;
    Scalar pow(Scalar a, Scalar e) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    Scalar p_;
};

// Dense matrix over GF(p); row-major. Sized for the graded pieces that
// arise here (at most a few thousand on a side).
class Mat {
public:
    Mat() : rows_(0), cols_(0), fld_(2) {}
    Mat(int rows, int cols, PrimeField fld)
        : rows_(rows), cols_(cols), fld_(fld), a_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return fld_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    Scalar at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec col(int j) const;
    void set_col(int j, const Vec& v);

    Mat times(const Mat& rhs) const;
    Vec apply(const Vec& v) const;

    // Row echelon reduction in place; returns pivot column indices in order.
    std::vector<int> rref();

    int rank() const;

    // Basis of the null space {x : Ax = 0}, one column vector per free
    // variable, ordered by free column index. Deterministic.
    std::vector<Vec> kernel() const;

    // One solution of Ax = b (free variables set to 0), or nullopt.
    std::optional<Vec> solve(const Vec& b) const;

private:
    int rows_, cols_;
    PrimeField fld_;
    std::vector<Scalar> a_;
};

// Incremental span of vectors in GF(p)^n kept in reduced echelon form.
// Used for membership tests and for extracting new basis vectors in a
// fixed deterministic order.
class EchelonSpace {
public:
    EchelonSpace(int ambient_dim, PrimeField fld) : n_(ambient_dim), fld_(fld) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return n_; }

    // Reduces v against the current span; returns the residual (zero iff
    // v was already in the span).
    Vec residual(const Vec& v) const;

    bool contains(const Vec& v) const;

    // Adds v to the span. Returns true iff the dimension grew.
    bool insert(const Vec& v);

    // Insert every column of m.
    void insert_cols(const Mat& m);

    // Pivot coordinates of the stored reduced basis, ascending.
    std::vector<int> pivots() const;

private:
    int n_;
    PrimeField fld_;
    // (pivot index, normalized vector), kept sorted by pivot.
    std::vector<std::pair<int, Vec>> rows_;
};

}  // namespace cidim
