#pragma once

// Exact rational matrices, exact rank and chain-complex homology.
//
// Orientation: a differential from a term of dimension a to a term of
// dimension b is a b x a matrix acting on coordinate columns of the source.

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace drinfeld {

using Rational = mpq_class;

struct MatrixEntry {
    int col;
    Rational value;
    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

struct Triplet {
    int row;
    int col;
    Rational value;
};

/// Row-compressed sparse matrix over Q. Rows keep their entries sorted by
/// column and never store zeros, so iteration order is deterministic.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);

    /// Duplicate positions are summed; resulting zeros are dropped.
    static ExactMatrix from_triplets(int rows, int cols, std::vector<Triplet> triplets);
    static ExactMatrix identity(int n);
    static ExactMatrix from_dense(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    Rational at(int r, int c) const;
    std::span<const MatrixEntry> row(int r) const { return data_[static_cast<std::size_t>(r)]; }

    ExactMatrix transpose() const;
    /// Reindexes rows and columns: result(row_perm[i], col_perm[j]) = this(i, j).
    ExactMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;
    std::vector<std::vector<Rational>> to_dense() const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    /// Debug dump: "rows cols nnz" then one "i j num/den" line per entry,
    /// row-major order.
    void dump(std::ostream& os) const;
    std::string dump_string() const;
    static ExactMatrix parse_dump(std::istream& is);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<MatrixEntry>> data_;
};

/// Matrices with both dimensions below this bound are ranked densely.
inline constexpr int dense_rank_threshold = 256;

/// Exact rank over Q. Dispatches to dense Bareiss elimination for small
/// matrices and to sparse fraction-free elimination otherwise.
std::size_t rank(const ExactMatrix& m);
std::size_t rank_dense(const ExactMatrix& m);
std::size_t rank_sparse(const ExactMatrix& m);

class ComplexError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// 0 -> C_0 -> C_1 -> ... -> C_k -> 0 with differentials[i] : C_i -> C_{i+1}.
/// Shapes and d_{i+1} d_i = 0 are checked on construction.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::vector<std::size_t> terms, std::vector<ExactMatrix> differentials);

    const std::vector<std::size_t>& terms() const { return terms_; }
    const std::vector<ExactMatrix>& differentials() const { return differentials_; }
    std::size_t length() const { return terms_.size(); }
    std::size_t total_dim() const;
    long euler_characteristic() const;

    /// Ranks of the differentials. parallelism 0 means one task per
    /// differential; 1 runs sequentially.
    std::vector<std::size_t> ranks(int parallelism = 1) const;

private:
    std::vector<std::size_t> terms_;
    std::vector<ExactMatrix> differentials_;
};

/// dim H_i = terms[i] - rank(d_i) - rank(d_{i-1}).
std::vector<std::size_t> homology_dims(const ChainComplex& c, int parallelism = 1);

struct ExactnessReport {
    bool exact = false;
    std::vector<std::size_t> homology;
    std::map<int, std::size_t> allowed_dims;
    std::vector<int> failing_positions;
};

/// True iff homology vanishes at every position not in allowed.
ExactnessReport is_exact_except(const ChainComplex& c, const std::set<int>& allowed, int parallelism = 1);

}  // namespace drinfeld
