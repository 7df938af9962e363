#include "drinfeld/ffgeom.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace drinfeld {

namespace {

int mod(long v, int p)
{
    long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod(int a, int p)
{
    // p is prime and small; Fermat.
    long result = 1;
    long base = mod(a, p);
    int e = p - 2;
    while (e > 0) {
        if (e & 1)
            result = (result * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return static_cast<int>(result);
}

// Remainder of num modulo den over F_p; both given low-to-high, den monic.
std::vector<int> poly_rem(std::vector<int> num, const std::vector<int>& den, int p)
{
    const int dd = static_cast<int>(den.size()) - 1;
    for (int k = static_cast<int>(num.size()) - 1; k >= dd; --k) {
        const int c = num[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        for (int j = 0; j <= dd; ++j) {
            auto& t = num[static_cast<std::size_t>(k - dd + j)];
            t = mod(t - static_cast<long>(c) * den[static_cast<std::size_t>(j)], p);
        }
    }
    num.resize(static_cast<std::size_t>(std::max(dd, 0)));
    return num;
}

std::vector<int> monic_from_code(long code, int p, int degree)
{
    std::vector<int> poly(static_cast<std::size_t>(degree + 1), 0);
    for (int i = 0; i < degree; ++i) {
        poly[static_cast<std::size_t>(i)] = static_cast<int>(code % p);
        code /= p;
    }
    poly[static_cast<std::size_t>(degree)] = 1;
    return poly;
}

long ipow_long(long b, int e)
{
    long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

bool is_irreducible(const std::vector<int>& f, int p)
{
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        const long count = ipow_long(p, d);
        for (long code = 0; code < count; ++code) {
            const auto g = monic_from_code(code, p, d);
            const auto r = poly_rem(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; }))
                return false;
        }
    }
    return true;
}

// In-place RREF over F_p; returns pivot columns.
std::vector<int> rref_mod_p(std::vector<std::vector<int>>& rows, int cols, int p)
{
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][static_cast<std::size_t>(c)] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        const int inv = inv_mod(rows[r][static_cast<std::size_t>(c)], p);
        for (auto& x : rows[r])
            x = mod(static_cast<long>(x) * inv, p);
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r)
                continue;
            const int f = rows[o][static_cast<std::size_t>(c)];
            if (f == 0)
                continue;
            for (int k = 0; k < cols; ++k)
                rows[o][static_cast<std::size_t>(k)] =
                    mod(rows[o][static_cast<std::size_t>(k)] - static_cast<long>(f) * rows[r][static_cast<std::size_t>(k)], p);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

// ---------------------------------------------------------------------------
// GaloisField

std::vector<int> least_irreducible(int p, int m)
{
    if (!is_prime(p))
        throw std::invalid_argument("least_irreducible: p must be prime");
    if (m < 1)
        throw std::invalid_argument("least_irreducible: degree must be positive");
    const long count = ipow_long(p, m);
    for (long code = 0; code < count; ++code) {
        auto f = monic_from_code(code, p, m);
        if (m == 1 || is_irreducible(f, p))
            return f;
    }
    throw std::logic_error("least_irreducible: no irreducible polynomial found");
}

GaloisField::GaloisField(int p, int m) : p_(p), m_(m)
{
    if (!is_prime(p))
        throw std::invalid_argument("GaloisField: characteristic must be prime");
    if (m < 1)
        throw std::invalid_argument("GaloisField: degree must be positive");
    const long order = ipow_long(p, m);
    if (order > (1L << 24))
        throw std::length_error("GaloisField: field too large");
    order_ = static_cast<std::uint32_t>(order);
    modulus_ = least_irreducible(p, m);
    if (order_ <= 1024) {
        mul_table_.resize(static_cast<std::size_t>(order_) * order_);
        for (std::uint32_t a = 0; a < order_; ++a)
            for (std::uint32_t b = 0; b < order_; ++b)
                mul_table_[a * order_ + b] = mul_slow({a}, {b}).value;
    }
}

FieldElem GaloisField::from_int(long v) const { return {static_cast<std::uint32_t>(mod(v, p_))}; }

FieldElem GaloisField::element(std::uint32_t value) const
{
    if (value >= order_)
        throw std::out_of_range("GaloisField::element: value out of range");
    return {value};
}

std::vector<int> GaloisField::coefficients(FieldElem a) const
{
    std::vector<int> c(static_cast<std::size_t>(m_));
    std::uint32_t v = a.value;
    for (int i = 0; i < m_; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint32_t>(p_));
        v /= static_cast<std::uint32_t>(p_);
    }
    return c;
}

FieldElem GaloisField::add(FieldElem a, FieldElem b) const
{
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    const auto p = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < m_; ++i) {
        out += ((a.value % p + b.value % p) % p) * place;
        a.value /= p;
        b.value /= p;
        place *= p;
    }
    return {out};
}

FieldElem GaloisField::neg(FieldElem a) const
{
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    const auto p = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < m_; ++i) {
        out += ((p - a.value % p) % p) * place;
        a.value /= p;
        place *= p;
    }
    return {out};
}

FieldElem GaloisField::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem GaloisField::mul_slow(FieldElem a, FieldElem b) const
{
    const auto ca = coefficients(a);
    const auto cb = coefficients(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                mod(prod[static_cast<std::size_t>(i + j)] + static_cast<long>(ca[static_cast<std::size_t>(i)]) * cb[static_cast<std::size_t>(j)], p_);
    const auto r = poly_rem(prod, modulus_, p_);
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (int i = 0; i < m_; ++i) {
        out += static_cast<std::uint32_t>(i < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(i)] : 0) * place;
        place *= static_cast<std::uint32_t>(p_);
    }
    return {out};
}

FieldElem GaloisField::mul(FieldElem a, FieldElem b) const
{
    if (!mul_table_.empty())
        return {mul_table_[a.value * order_ + b.value]};
    return mul_slow(a, b);
}

FieldElem GaloisField::inv(FieldElem a) const
{
    if (a.value == 0)
        throw std::domain_error("GaloisField::inv: zero has no inverse");
    // a^(order - 2)
    FieldElem result = one();
    FieldElem base = a;
    std::uint32_t e = order_ - 2;
    while (e > 0) {
        if (e & 1u)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(int q, int ambient, int dim, std::vector<std::uint8_t> entries)
    : q_(q), ambient_(ambient), dim_(dim), entries_(std::move(entries))
{
    for (int r = 0; r < dim_; ++r) {
        int c = 0;
        while (c < ambient_ && at(r, c) == 0)
            ++c;
        pivots_.push_back(c);
    }
}

Subspace Subspace::span(int q, int ambient_dim, const std::vector<std::vector<int>>& vectors)
{
    if (!is_prime(q))
        throw std::invalid_argument("Subspace: q must be prime");
    std::vector<std::vector<int>> rows;
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient_dim)
            throw std::invalid_argument("Subspace::span: vector length mismatch");
        std::vector<int> row(v.size());
        for (std::size_t k = 0; k < v.size(); ++k)
            row[k] = mod(v[k], q);
        rows.push_back(std::move(row));
    }
    rref_mod_p(rows, ambient_dim, q);
    if (rows.empty())
        throw std::invalid_argument("Subspace::span: vectors span the zero space");
    std::vector<std::uint8_t> entries;
    for (const auto& row : rows)
        for (int x : row)
            entries.push_back(static_cast<std::uint8_t>(x));
    return Subspace(q, ambient_dim, static_cast<int>(rows.size()), std::move(entries));
}

Subspace Subspace::from_rref(int q, int ambient_dim, int dim, std::vector<std::uint8_t> entries)
{
    if (dim < 1 || dim > ambient_dim || entries.size() != static_cast<std::size_t>(dim * ambient_dim))
        throw std::invalid_argument("Subspace::from_rref: shape mismatch");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(dim), std::vector<int>(static_cast<std::size_t>(ambient_dim)));
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < ambient_dim; ++c)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entries[static_cast<std::size_t>(r * ambient_dim + c)];
    Subspace s = span(q, ambient_dim, rows);
    if (s.entries_ != entries)
        throw std::invalid_argument("Subspace::from_rref: matrix is not in reduced row echelon form");
    return s;
}

std::vector<int> Subspace::row(int r) const
{
    std::vector<int> out(static_cast<std::size_t>(ambient_));
    for (int c = 0; c < ambient_; ++c)
        out[static_cast<std::size_t>(c)] = at(r, c);
    return out;
}

bool Subspace::contains_vector(std::span<const int> v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        return false;
    // v lies in the row space iff v = sum_r v[pivot_r] * row_r.
    std::vector<long> residual(v.begin(), v.end());
    for (int r = 0; r < dim_; ++r) {
        const long coeff = residual[static_cast<std::size_t>(pivots_[static_cast<std::size_t>(r)])];
        if (coeff == 0)
            continue;
        for (int c = 0; c < ambient_; ++c)
            residual[static_cast<std::size_t>(c)] -= coeff * at(r, c);
    }
    return std::all_of(residual.begin(), residual.end(), [this](long x) { return mod(x, q_) == 0; });
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.q_ != q_ || other.ambient_ != ambient_ || other.dim_ > dim_)
        return false;
    for (int r = 0; r < other.dim_; ++r) {
        const auto v = other.row(r);
        if (!contains_vector(v))
            return false;
    }
    return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b)
{
    if (auto c = a.q_ <=> b.q_; c != 0)
        return c;
    if (auto c = a.ambient_ <=> b.ambient_; c != 0)
        return c;
    if (auto c = a.dim_ <=> b.dim_; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end());
}

SubspaceIntersection intersect(const Subspace& a, const Subspace& b)
{
    if (a.q() != b.q() || a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("intersect: subspaces live in different spaces");
    // Enumerate the vectors of a and keep those in b; a is tiny at desk scale.
    const int q = a.q();
    const int d = a.dim();
    long total = ipow_long(q, d);
    std::vector<std::vector<int>> members;
    std::vector<int> coeff(static_cast<std::size_t>(d), 0);
    for (long code = 1; code < total; ++code) {
        long c = code;
        for (int k = 0; k < d; ++k) {
            coeff[static_cast<std::size_t>(k)] = static_cast<int>(c % q);
            c /= q;
        }
        std::vector<int> v(static_cast<std::size_t>(a.ambient_dim()), 0);
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < a.ambient_dim(); ++j)
                v[static_cast<std::size_t>(j)] = mod(v[static_cast<std::size_t>(j)] + coeff[static_cast<std::size_t>(k)] * a.at(k, j), q);
        if (b.contains_vector(v))
            members.push_back(std::move(v));
    }
    SubspaceIntersection out;
    if (members.empty())
        return out;
    const auto s = Subspace::span(q, a.ambient_dim(), members);
    out.is_zero = false;
    for (int r = 0; r < s.dim(); ++r)
        out.basis.push_back(s.row(r));
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Subspace> enumerate_subspaces(int ambient_dim, int d, int q)
{
    if (!is_prime(q))
        throw std::invalid_argument("enumerate_subspaces: q must be prime");
    if (d < 1 || d > ambient_dim)
        throw std::invalid_argument("enumerate_subspaces: need 1 <= d <= ambient_dim");
    std::vector<Subspace> out;
    std::vector<int> pivots(static_cast<std::size_t>(d));
    // Walk all pivot sets c_0 < ... < c_{d-1}, then all fillings of free slots.
    std::function<void(int, int)> choose = [&](int k, int start) {
        if (k == d) {
            std::vector<std::pair<int, int>> free_slots;
            for (int r = 0; r < d; ++r)
                for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < ambient_dim; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                        free_slots.emplace_back(r, c);
            const long fillings = ipow_long(q, static_cast<int>(free_slots.size()));
            for (long code = 0; code < fillings; ++code) {
                std::vector<std::uint8_t> entries(static_cast<std::size_t>(d * ambient_dim), 0);
                for (int r = 0; r < d; ++r)
                    entries[static_cast<std::size_t>(r * ambient_dim + pivots[static_cast<std::size_t>(r)])] = 1;
                long c = code;
                for (const auto& [r, col] : free_slots) {
                    entries[static_cast<std::size_t>(r * ambient_dim + col)] = static_cast<std::uint8_t>(c % q);
                    c /= q;
                }
                out.push_back(Subspace::from_rref(q, ambient_dim, d, std::move(entries)));
            }
            return;
        }
        for (int c = start; c <= ambient_dim - (d - k); ++c) {
            pivots[static_cast<std::size_t>(k)] = c;
            choose(k + 1, c + 1);
        }
    };
    choose(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::strong_ordering operator<=>(const Flag& a, const Flag& b)
{
    if (auto c = a.type <=> b.type; c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.chain.begin(), a.chain.end(), b.chain.begin(), b.chain.end());
}

std::vector<Flag> enumerate_flags(const ParabolicType& I, int q)
{
    const int ambient = I.n() + 1;
    const auto dims = I.flag_dims();
    std::vector<std::vector<Subspace>> levels;
    for (int d : dims)
        levels.push_back(enumerate_subspaces(ambient, d, q));

    std::vector<Flag> out;
    std::vector<Subspace> chain;
    std::function<void(std::size_t)> extend = [&](std::size_t k) {
        if (k == levels.size()) {
            out.push_back(Flag{I, chain});
            return;
        }
        for (const auto& s : levels[k]) {
            if (k > 0 && !s.contains(chain.back()))
                continue;
            chain.push_back(s);
            extend(k + 1);
            chain.pop_back();
        }
    };
    extend(0);
    return out;  // already ascending: levels are sorted and walked in order
}

Flag forget(const Flag& f, const ParabolicType& J)
{
    if (!f.type.is_subset_of(J))
        throw std::invalid_argument("forget: flag type " + f.type.subset_string() + " is not contained in " + J.subset_string());
    const auto keep = J.flag_dims();
    Flag out{J, {}};
    for (const auto& s : f.chain)
        if (std::find(keep.begin(), keep.end(), s.dim()) != keep.end())
            out.chain.push_back(s);
    return out;
}

// ---------------------------------------------------------------------------
// Points

ProjPoint normalize(const GaloisField& field, std::vector<FieldElem> coords)
{
    auto lead = std::find_if(coords.begin(), coords.end(), [](FieldElem e) { return e.value != 0; });
    if (lead == coords.end())
        throw std::invalid_argument("normalize: zero vector is not a projective point");
    const FieldElem s = field.inv(*lead);
    for (auto& c : coords)
        c = field.mul(c, s);
    return ProjPoint{std::move(coords)};
}

std::vector<ProjPoint> enumerate_projective_points(int n, const GaloisField& field)
{
    const double vectors = std::pow(static_cast<double>(field.order()), n + 1);
    if (vectors >= enumeration_guard)
        throw std::length_error("enumerate_projective_points: size guard exceeded");
    std::vector<ProjPoint> out;
    const std::uint32_t Q = field.order();
    for (int lead = n; lead >= 0; --lead) {
        const int tail = n - lead;
        long total = 1;
        for (int k = 0; k < tail; ++k)
            total *= Q;
        for (long code = 0; code < total; ++code) {
            std::vector<FieldElem> coords(static_cast<std::size_t>(n + 1), field.zero());
            coords[static_cast<std::size_t>(lead)] = field.one();
            long c = code;
            for (int k = n; k > lead; --k) {
                coords[static_cast<std::size_t>(k)] = {static_cast<std::uint32_t>(c % Q)};
                c /= Q;
            }
            out.push_back(ProjPoint{std::move(coords)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ProjPoint> y_points_of(const Subspace& U, const GaloisField& field)
{
    if (U.q() != field.characteristic())
        throw std::invalid_argument("y_points_of: subspace and field have different characteristic");
    const int d = U.dim();
    std::vector<ProjPoint> out;
    // Normalized coefficient vectors c in F^d; since the basis is in RREF
    // the combination sum c_k u_k is normalized as well.
    const std::uint32_t Q = field.order();
    for (int lead = 0; lead < d; ++lead) {
        const int tail = d - 1 - lead;
        long total = 1;
        for (int k = 0; k < tail; ++k)
            total *= Q;
        for (long code = 0; code < total; ++code) {
            std::vector<FieldElem> c(static_cast<std::size_t>(d), field.zero());
            c[static_cast<std::size_t>(lead)] = field.one();
            long rest = code;
            for (int k = lead + 1; k < d; ++k) {
                c[static_cast<std::size_t>(k)] = {static_cast<std::uint32_t>(rest % Q)};
                rest /= Q;
            }
            std::vector<FieldElem> x(static_cast<std::size_t>(U.ambient_dim()), field.zero());
            for (int k = 0; k < d; ++k) {
                if (c[static_cast<std::size_t>(k)].value == 0)
                    continue;
                for (int j = 0; j < U.ambient_dim(); ++j) {
                    const int e = U.at(k, j);
                    if (e == 0)
                        continue;
                    x[static_cast<std::size_t>(j)] = field.add(x[static_cast<std::size_t>(j)], field.mul(c[static_cast<std::size_t>(k)], field.from_int(e)));
                }
            }
            out.push_back(normalize(field, std::move(x)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> rational_forms(int n, int q)
{
    std::vector<std::vector<int>> forms;
    for (const auto& line : enumerate_subspaces(n + 1, 1, q))
        forms.push_back(line.row(0));
    return forms;
}

FieldElem evaluate_form(const GaloisField& field, std::span<const int> form, const ProjPoint& x)
{
    FieldElem acc = field.zero();
    for (std::size_t i = 0; i < form.size(); ++i)
        if (form[i] != 0)
            acc = field.add(acc, field.mul(field.from_int(form[i]), x.coords[i]));
    return acc;
}

bool on_rational_hyperplane(const GaloisField& field, const std::vector<std::vector<int>>& forms, const ProjPoint& x)
{
    return std::any_of(forms.begin(), forms.end(), [&](const std::vector<int>& f) { return evaluate_form(field, f, x).value == 0; });
}

BigInt drinfeld_points(int n, int q, int m)
{
    if (n < 1)
        throw std::invalid_argument("drinfeld_points: need n >= 1");
    if (m < 1)
        throw std::invalid_argument("drinfeld_points: need m >= 1");
    const double vectors = std::pow(static_cast<double>(q), static_cast<double>(m) * (n + 1));
    if (vectors >= enumeration_guard)
        throw std::length_error("drinfeld_points: size guard exceeded (q^{m(n+1)} >= 1e8)");
    const GaloisField field(q, m);
    const auto forms = rational_forms(n, q);
    BigInt count = 0;
    for (const auto& x : enumerate_projective_points(n, field))
        if (!on_rational_hyperplane(field, forms, x))
            ++count;
    return count;
}

}  // namespace drinfeld
