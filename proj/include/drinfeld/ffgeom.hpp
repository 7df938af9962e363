#pragma once

// Finite-field geometry: F_{q^m}, subspaces of F_q^N in canonical RREF,
// flags (our model of the cosets G/P_I), projective points and the point
// count of the Drinfeld upper half space.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "drinfeld/qarith.hpp"
#include "drinfeld/rootdata.hpp"

namespace drinfeld {

struct FieldElem {
    std::uint32_t value = 0;
    friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// F_{p^m} = F_p[t] / (f) with f the lexicographically least monic
/// irreducible of degree m (coefficients compared from t^{m-1} down to t^0).
/// An element is encoded as sum_i c_i p^i where c_i is the coefficient of t^i.
class GaloisField {
public:
    GaloisField(int p, int m);

    int characteristic() const { return p_; }
    int degree() const { return m_; }
    std::uint32_t order() const { return order_; }
    /// Coefficients c_0, ..., c_m of the defining polynomial (c_m = 1).
    const std::vector<int>& modulus() const { return modulus_; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    /// Image of an integer under Z -> F_p -> F_{p^m}.
    FieldElem from_int(long v) const;
    FieldElem element(std::uint32_t value) const;

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem inv(FieldElem a) const;

    std::vector<int> coefficients(FieldElem a) const;

private:
    FieldElem mul_slow(FieldElem a, FieldElem b) const;

    int p_;
    int m_;
    std::uint32_t order_;
    std::vector<int> modulus_;
    std::vector<std::uint32_t> mul_table_;  // filled when order is small
};

/// Least monic irreducible polynomial of degree m over F_p, as coefficients
/// c_0, ..., c_m.
std::vector<int> least_irreducible(int p, int m);

/// A nonzero subspace of F_q^N (q prime), stored as its unique reduced row
/// echelon basis.
class Subspace {
public:
    /// Row-reduces the given vectors; throws if they span the zero space.
    static Subspace span(int q, int ambient_dim, const std::vector<std::vector<int>>& vectors);

    int q() const { return q_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return dim_; }
    int at(int row, int col) const { return entries_[static_cast<std::size_t>(row * ambient_ + col)]; }
    std::vector<int> row(int r) const;
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains_vector(std::span<const int> v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.q_ == b.q_ && a.ambient_ == b.ambient_ && a.entries_ == b.entries_;
    }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

    const std::vector<std::uint8_t>& raw_entries() const { return entries_; }
    static Subspace from_rref(int q, int ambient_dim, int dim, std::vector<std::uint8_t> entries);

private:
    Subspace(int q, int ambient, int dim, std::vector<std::uint8_t> entries);

    int q_ = 2;
    int ambient_ = 0;
    int dim_ = 0;
    std::vector<std::uint8_t> entries_;  // dim x ambient, row-major, RREF
    std::vector<int> pivots_;
};

/// Intersection of two subspaces of the same F_q^N; dimension 0 is reported
/// through the return flag.
struct SubspaceIntersection {
    bool is_zero = true;
    std::vector<std::vector<int>> basis;
};
SubspaceIntersection intersect(const Subspace& a, const Subspace& b);

/// A flag of the type of I: nested subspaces whose dimensions are
/// I.flag_dims(). Models the coset gP_I.
struct Flag {
    ParabolicType type;
    std::vector<Subspace> chain;

    friend bool operator==(const Flag&, const Flag&) = default;
    friend std::strong_ordering operator<=>(const Flag& a, const Flag& b);
};

/// All d-dimensional subspaces of F_q^N in ascending (lexicographic) order.
std::vector<Subspace> enumerate_subspaces(int ambient_dim, int d, int q);

/// All flags of the type of I in F_q^{n+1}, ascending order.
std::vector<Flag> enumerate_flags(const ParabolicType& I, int q);

/// Drops the chain members not required by the type J. Requires type(f) <= J.
Flag forget(const Flag& f, const ParabolicType& J);

/// Point of P^n over F_{q^m} with first nonzero coordinate equal to 1.
struct ProjPoint {
    std::vector<FieldElem> coords;
    friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

ProjPoint normalize(const GaloisField& field, std::vector<FieldElem> coords);

/// All points of P^n(F) in ascending order.
std::vector<ProjPoint> enumerate_projective_points(int n, const GaloisField& field);

/// The F-points of P(U) for a rational subspace U, ascending order.
std::vector<ProjPoint> y_points_of(const Subspace& U, const GaloisField& field);

/// Nonzero linear forms over F_q up to scalars, one normalized
/// representative per rational hyperplane of P^n.
std::vector<std::vector<int>> rational_forms(int n, int q);

/// f(x) for a linear form with F_q coefficients evaluated at x in F^{n+1}.
FieldElem evaluate_form(const GaloisField& field, std::span<const int> form, const ProjPoint& x);

bool on_rational_hyperplane(const GaloisField& field, const std::vector<std::vector<int>>& forms, const ProjPoint& x);

/// Largest number of coordinate vectors any brute-force enumeration of
/// (F_{q^m})^{n+1} may touch.
inline constexpr double enumeration_guard = 1e8;

/// #{x in P^n(F_{q^m}) : f(x) != 0 for every nonzero rational linear form f},
/// by direct enumeration. Throws std::length_error above the size guard.
BigInt drinfeld_points(int n, int q, int m);

}  // namespace drinfeld
