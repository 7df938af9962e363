#pragma once

// Type A_n root combinatorics: simple roots Delta = {a0, ..., a(n-1)},
// subsets I of Delta, compositions of n+1 and the parabolic lattice.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace drinfeld {

/// A subset I of the simple roots of GL_{n+1}, stored as a bitmask over
/// {0, ..., n-1}. The full set Delta is representable.
class ParabolicType {
public:
    ParabolicType() = default;
    ParabolicType(int n, std::uint32_t mask);

    static ParabolicType empty(int n) { return {n, 0u}; }
    static ParabolicType full(int n);
    /// I_j = {a0, ..., a(j-1)}; j = 0 gives the empty set, j = n gives Delta.
    static ParabolicType prefix(int n, int j);
    static ParabolicType from_members(int n, const std::vector<int>& members);
    /// Inverse of composition(); parts must be positive and sum to n+1.
    static ParabolicType from_composition(const std::vector<int>& parts);

    int n() const { return n_; }
    std::uint32_t mask() const { return mask_; }
    int size() const;
    bool contains(int root) const { return root >= 0 && root < n_ && ((mask_ >> root) & 1u); }
    bool is_full() const { return mask_ == full_mask(n_); }
    bool is_proper() const { return !is_full(); }
    bool is_subset_of(const ParabolicType& other) const;
    std::vector<int> members() const;
    std::vector<int> missing() const;

    ParabolicType with(int root) const;
    ParabolicType without(int root) const;

    /// The composition (i_0, ..., i_r) of n+1 whose blocks are separated by
    /// the simple roots missing from I.
    std::vector<int> composition() const;
    /// Partial sums i_0 < i_0+i_1 < ... < n+1 with the final n+1 omitted;
    /// these are the dimensions of the members of a flag of this type.
    std::vector<int> flag_dims() const;

    /// i(I) = min{ j : a_j not in I }. Throws std::invalid_argument for Delta.
    int i_of() const;

    std::string subset_string() const;       // "{a0,a2}"
    std::string composition_string() const;  // "(2,2)"

    friend bool operator==(const ParabolicType&, const ParabolicType&) = default;
    /// Lexicographic on (n, size, sorted member list).
    friend std::strong_ordering operator<=>(const ParabolicType& a, const ParabolicType& b);

    static std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

private:
    int n_ = 0;
    std::uint32_t mask_ = 0;
};

/// All I with #I = c, containing <= I, and I != Delta when proper is set,
/// in lexicographic order of member lists.
std::vector<ParabolicType> subsets_of_size(int n, int c, const ParabolicType& containing, bool proper);

/// All I with containing <= I (Delta included), ordered by size then lex.
std::vector<ParabolicType> supersets_of(const ParabolicType& containing);

/// Sign attached to the covering pair smaller < larger = smaller + {a_i}:
/// (-1)^{#{ j < i : a_j not in smaller }}. This is the simplicial coboundary
/// sign on the complements Delta \ I, so consecutive differentials built
/// from it anticommute and compose to zero.
int incidence_sign(const ParabolicType& smaller, const ParabolicType& larger);

/// Index i of the single root in larger \ smaller, or -1 when larger does
/// not cover smaller.
int covering_root(const ParabolicType& smaller, const ParabolicType& larger);

}  // namespace drinfeld
