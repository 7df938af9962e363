#include "drinfeld/homalg.hpp"

#include <algorithm>
#include <future>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace drinfeld {

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("ExactMatrix: negative dimension");
    data_.resize(static_cast<std::size_t>(rows));
}

ExactMatrix ExactMatrix::from_triplets(int rows, int cols, std::vector<Triplet> triplets)
{
    ExactMatrix m(rows, cols);
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (auto& t : triplets) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw std::out_of_range("ExactMatrix::from_triplets: entry out of range");
        auto& r = m.data_[static_cast<std::size_t>(t.row)];
        if (!r.empty() && r.back().col == t.col)
            r.back().value += t.value;
        else
            r.push_back({t.col, std::move(t.value)});
    }
    for (auto& r : m.data_)
        std::erase_if(r, [](const MatrixEntry& e) { return e.value == 0; });
    return m;
}

ExactMatrix ExactMatrix::identity(int n)
{
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.data_[static_cast<std::size_t>(i)].push_back({i, Rational(1)});
    return m;
}

ExactMatrix ExactMatrix::from_dense(const std::vector<std::vector<Rational>>& rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    std::vector<Triplet> t;
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
            throw std::invalid_argument("ExactMatrix::from_dense: ragged rows");
        for (int j = 0; j < c; ++j)
            if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                t.push_back({i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    }
    return from_triplets(r, c, std::move(t));
}

std::size_t ExactMatrix::nnz() const
{
    std::size_t n = 0;
    for (const auto& r : data_)
        n += r.size();
    return n;
}

Rational ExactMatrix::at(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("ExactMatrix::at: index out of range");
    const auto& row = data_[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const MatrixEntry& e, int col) { return e.col < col; });
    if (it != row.end() && it->col == c)
        return it->value;
    return Rational(0);
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& e : data_[static_cast<std::size_t>(i)])
            t.data_[static_cast<std::size_t>(e.col)].push_back({i, e.value});
    return t;
}

ExactMatrix ExactMatrix::permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const
{
    if (static_cast<int>(row_perm.size()) != rows_ || static_cast<int>(col_perm.size()) != cols_)
        throw std::invalid_argument("ExactMatrix::permuted: permutation size mismatch");
    std::vector<Triplet> t;
    for (int i = 0; i < rows_; ++i)
        for (const auto& e : data_[static_cast<std::size_t>(i)])
            t.push_back({row_perm[static_cast<std::size_t>(i)], col_perm[static_cast<std::size_t>(e.col)], e.value});
    return from_triplets(rows_, cols_, std::move(t));
}

std::vector<std::vector<Rational>> ExactMatrix::to_dense() const
{
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(rows_), std::vector<Rational>(static_cast<std::size_t>(cols_)));
    for (int i = 0; i < rows_; ++i)
        for (const auto& e : data_[static_cast<std::size_t>(i)])
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(e.col)] = e.value;
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("ExactMatrix multiply: inner dimensions differ");
    ExactMatrix out(a.rows_, b.cols_);
    std::map<int, Rational> acc;
    for (int i = 0; i < a.rows_; ++i) {
        acc.clear();
        for (const auto& ea : a.data_[static_cast<std::size_t>(i)])
            for (const auto& eb : b.data_[static_cast<std::size_t>(ea.col)])
                acc[eb.col] += ea.value * eb.value;
        auto& row = out.data_[static_cast<std::size_t>(i)];
        for (auto& [c, v] : acc)
            if (v != 0)
                row.push_back({c, v});
    }
    return out;
}

void ExactMatrix::dump(std::ostream& os) const
{
    os << rows_ << ' ' << cols_ << ' ' << nnz() << '\n';
    for (int i = 0; i < rows_; ++i)
        for (const auto& e : data_[static_cast<std::size_t>(i)])
            os << i << ' ' << e.col << ' ' << e.value.get_num().get_str() << '/' << e.value.get_den().get_str() << '\n';
}

std::string ExactMatrix::dump_string() const
{
    std::ostringstream os;
    dump(os);
    return os.str();
}

ExactMatrix ExactMatrix::parse_dump(std::istream& is)
{
    int rows = 0, cols = 0;
    std::size_t nnz = 0;
    if (!(is >> rows >> cols >> nnz))
        throw std::invalid_argument("parse_dump: bad header");
    std::vector<Triplet> t;
    for (std::size_t k = 0; k < nnz; ++k) {
        int i = 0, j = 0;
        std::string frac;
        if (!(is >> i >> j >> frac))
            throw std::invalid_argument("parse_dump: truncated entry list");
        Rational v;
        if (v.set_str(frac, 10) != 0)
            throw std::invalid_argument("parse_dump: bad rational '" + frac + "'");
        v.canonicalize();
        t.push_back({i, j, v});
    }
    return from_triplets(rows, cols, std::move(t));
}

// ---------------------------------------------------------------------------
// Rank

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

// Scales a rational row to a primitive integer row.
IntRow integer_row(std::span<const MatrixEntry> row)
{
    mpz_class lcm = 1;
    for (const auto& e : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& e : row) {
        mpz_class v = e.value.get_num() * (lcm / e.value.get_den());
        out.emplace_back(e.col, std::move(v));
    }
    return out;
}

void make_primitive(IntRow& row)
{
    if (row.empty())
        return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            return;
    }
    for (auto& [c, v] : row)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- a*row - b*pivot, both sorted by column.
IntRow combine(const IntRow& row, const mpz_class& a, const IntRow& pivot, const mpz_class& b)
{
    IntRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    mpz_class tmp;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            tmp = a * row[i].second - b * pivot[j].second;
            if (tmp != 0)
                out.emplace_back(row[i].first, tmp);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::size_t rank_sparse(const ExactMatrix& m)
{
    std::vector<IntRow> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
        if (m.row(i).empty())
            continue;
        rows.push_back(integer_row(m.row(i)));
        make_primitive(rows.back());
    }
    // Short rows first keeps fill-in low on incidence-type matrices.
    std::stable_sort(rows.begin(), rows.end(), [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });

    std::vector<IntRow> pivots;
    std::vector<int> pivot_of_col(static_cast<std::size_t>(m.cols()), -1);
    mpz_class g, a, b;
    for (auto& row : rows) {
        while (!row.empty()) {
            const int lead = row.front().first;
            const int p = pivot_of_col[static_cast<std::size_t>(lead)];
            if (p < 0) {
                pivot_of_col[static_cast<std::size_t>(lead)] = static_cast<int>(pivots.size());
                pivots.push_back(std::move(row));
                break;
            }
            const IntRow& piv = pivots[static_cast<std::size_t>(p)];
            mpz_gcd(g.get_mpz_t(), piv.front().second.get_mpz_t(), row.front().second.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), piv.front().second.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), row.front().second.get_mpz_t(), g.get_mpz_t());
            row = combine(row, a, piv, b);
            make_primitive(row);
        }
    }
    return pivots.size();
}

std::size_t rank_dense(const ExactMatrix& m)
{
    // Bareiss fraction-free elimination on an integer copy.
    const int R = m.rows();
    const int C = m.cols();
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(R), std::vector<mpz_class>(static_cast<std::size_t>(C)));
    for (int i = 0; i < R; ++i)
        for (const auto& [c, v] : integer_row(m.row(i)))
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = v;

    std::size_t rank = 0;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int sel = r;
        while (sel < R && a[static_cast<std::size_t>(sel)][static_cast<std::size_t>(c)] == 0)
            ++sel;
        if (sel == R)
            continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(sel)]);
        const mpz_class piv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < R; ++i) {
            auto& ri = a[static_cast<std::size_t>(i)];
            const mpz_class f = ri[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < C; ++j) {
                mpz_class v = piv * ri[static_cast<std::size_t>(j)] - f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                mpz_divexact(ri[static_cast<std::size_t>(j)].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            ri[static_cast<std::size_t>(c)] = 0;
        }
        prev = piv;
        ++r;
        ++rank;
    }
    return rank;
}

std::size_t rank(const ExactMatrix& m)
{
    if (m.rows() < dense_rank_threshold && m.cols() < dense_rank_threshold)
        return rank_dense(m);
    return rank_sparse(m);
}

// ---------------------------------------------------------------------------
// ChainComplex

ChainComplex::ChainComplex(std::vector<std::size_t> terms, std::vector<ExactMatrix> differentials)
    : terms_(std::move(terms)), differentials_(std::move(differentials))
{
    const std::size_t expected = terms_.empty() ? 0 : terms_.size() - 1;
    if (differentials_.size() != expected)
        throw ComplexError("ChainComplex: need exactly one differential between consecutive terms");
    for (std::size_t i = 0; i < differentials_.size(); ++i) {
        const auto& d = differentials_[i];
        if (static_cast<std::size_t>(d.cols()) != terms_[i] || static_cast<std::size_t>(d.rows()) != terms_[i + 1])
            throw ComplexError("ChainComplex: differential " + std::to_string(i) + " has shape " + std::to_string(d.rows()) + "x" +
                               std::to_string(d.cols()) + ", expected " + std::to_string(terms_[i + 1]) + "x" + std::to_string(terms_[i]));
    }
    for (std::size_t i = 0; i + 1 < differentials_.size(); ++i) {
        const auto composite = differentials_[i + 1] * differentials_[i];
        if (!composite.is_zero())
            throw ComplexError("ChainComplex: d" + std::to_string(i + 1) + " * d" + std::to_string(i) + " != 0 (" +
                               std::to_string(composite.nnz()) + " nonzero entries)");
    }
}

std::size_t ChainComplex::total_dim() const { return std::accumulate(terms_.begin(), terms_.end(), std::size_t{0}); }

long ChainComplex::euler_characteristic() const
{
    long chi = 0;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(terms_[i]);
    return chi;
}

std::vector<std::size_t> ChainComplex::ranks(int parallelism) const
{
    std::vector<std::size_t> out(differentials_.size());
    if (parallelism == 1 || differentials_.size() < 2) {
        for (std::size_t i = 0; i < differentials_.size(); ++i)
            out[i] = rank(differentials_[i]);
        return out;
    }
    const std::size_t width = parallelism <= 0 ? differentials_.size() : static_cast<std::size_t>(parallelism);
    for (std::size_t start = 0; start < differentials_.size(); start += width) {
        std::vector<std::future<std::size_t>> jobs;
        const std::size_t stop = std::min(differentials_.size(), start + width);
        for (std::size_t i = start; i < stop; ++i)
            jobs.push_back(std::async(std::launch::async, [this, i] { return rank(differentials_[i]); }));
        for (std::size_t i = start; i < stop; ++i)
            out[i] = jobs[i - start].get();
    }
    return out;
}

std::vector<std::size_t> homology_dims(const ChainComplex& c, int parallelism)
{
    const auto r = c.ranks(parallelism);
    std::vector<std::size_t> h(c.length());
    for (std::size_t i = 0; i < c.length(); ++i) {
        const std::size_t out_rank = i < r.size() ? r[i] : 0;
        const std::size_t in_rank = i > 0 ? r[i - 1] : 0;
        if (out_rank + in_rank > c.terms()[i])
            throw ComplexError("homology_dims: ranks exceed term dimension at position " + std::to_string(i));
        h[i] = c.terms()[i] - out_rank - in_rank;
    }
    return h;
}

ExactnessReport is_exact_except(const ChainComplex& c, const std::set<int>& allowed, int parallelism)
{
    ExactnessReport report;
    report.homology = homology_dims(c, parallelism);
    for (std::size_t i = 0; i < report.homology.size(); ++i) {
        const int pos = static_cast<int>(i);
        if (allowed.contains(pos))
            report.allowed_dims[pos] = report.homology[i];
        else if (report.homology[i] != 0)
            report.failing_positions.push_back(pos);
    }
    report.exact = report.failing_positions.empty();
    return report;
}

}  // namespace drinfeld
