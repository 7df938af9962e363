#pragma once

// Two finite models of the fundamental complex of Y:
//  * the function complex on F_{q^m}-points of Y = union of rational
//    hyperplanes, restricted to the translates g.Y_I = P(U_g), and
//  * the E1 rows of the spectral sequence, complexes of permutation modules
//    whose homology is the E2 page.

#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "drinfeld/ffgeom.hpp"
#include "drinfeld/flag_registry.hpp"
#include "drinfeld/gmodules.hpp"
#include "drinfeld/twisted_module.hpp"

namespace drinfeld {

/// One summand Fun(g.Y_I(F_{q^m})) of the function complex.
struct FunctionSummand {
    ParabolicType type;
    std::size_t coset = 0;            // index into registry.flags(type)
    std::vector<std::size_t> points;  // indices into FunctionComplexSpec::y_points
    std::size_t offset = 0;           // first basis index inside its term
};

struct FunctionComplexSpec {
    int n = 0;
    int q = 0;
    int m = 0;
    std::vector<ProjPoint> y_points;
    /// levels[k - 1] lists the summands of term k (#I = n - k), k = 1..n.
    std::vector<std::vector<FunctionSummand>> levels;
};

struct FunctionComplex {
    FunctionComplexSpec spec;
    ChainComplex complex;
};

/// Largest total dimension build_function_complex accepts.
inline constexpr std::size_t function_complex_guard = 20000;

/// 0 -> Fun(Y) -> (+)_{#I=n-1} (+)_{g} Fun(g.Y_I) -> ... -> (+)_{g in G/B} Fun(g.Y_empty) -> 0
/// with restriction maps signed by incidence_sign. Throws std::length_error
/// above the size guard and ComplexError if d o d != 0.
FunctionComplex build_function_complex(const FlagRegistry& registry, int m);
FunctionComplex build_function_complex(int n, int q, int m);

/// Dimensions of the function complex terms computed from point counts alone.
std::vector<std::size_t> function_complex_term_dims(int n, int q, int m);

/// For every F_{q^m}-point x of Y, the rational subspaces U (proper,
/// nonzero) with x in P(U) form a nonempty family closed under pairwise
/// intersection.
bool check_intersection_closure(int n, int q, int m);

struct E1Row {
    int s = 0;
    int twist = 0;  // every term carries K(-s/2)
    /// Position r holds (+)_{I_{s/2} <= I, #I = n-1-r, I proper} Ind_{P_I}.
    PermComplex complex;
};

/// Row s (even, 0 <= s <= 2n-2) of the E1 page as a complex of permutation
/// modules.
E1Row build_e1_row(const FlagRegistry& registry, int s);

using PageMap = std::map<std::pair<int, int>, TwistedModule>;  // (r, s) -> entry

struct SpectralPage {
    int n = 0;
    int q = 0;
    int page = 1;
    PageMap entries;
};

/// E1^{r,s} = (+)_{#I = n-1-r, I proper, H^s(Y_I) != 0} Ind_{P_I} K(-s/2).
SpectralPage e1_page(int n, int q);

/// Homology of every E1 row, labelled by its position:
///   r = n-1-s/2 : v_{P_{I_{s/2}}}(-s/2)   (s <= 2n-4)
///   r = 0       : K(-s/2)                 (s <= 2n-4)
///   (0, 2n-2)   : Ind_{P_{I_{n-1}}}(-(n-1))
/// Throws VerificationError when homology appears elsewhere or a dimension
/// disagrees with steinberg_dim / parabolic_index.
SpectralPage e2_page(const FlagRegistry& registry, int parallelism = 1);

/// [{"r", "s", "dim", "twist", "label"}, ...], one object per summand.
nlohmann::json page_to_json(const SpectralPage& page);

}  // namespace drinfeld
