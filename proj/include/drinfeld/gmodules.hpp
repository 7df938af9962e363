#pragma once

// Permutation modules Ind_{P_I}^G K as functions on flag sets, pullback
// maps along G/P_I -> G/P_J, and generalized Steinberg representations.

#include <vector>

#include "drinfeld/flag_registry.hpp"
#include "drinfeld/homalg.hpp"
#include "drinfeld/qarith.hpp"

namespace drinfeld {

/// K-valued functions on G/P_I with the canonical flag basis.
struct PermModule {
    ParabolicType type;
    const std::vector<Flag>* basis = nullptr;

    std::size_t dim() const { return basis ? basis->size() : 0; }
};

PermModule perm_module(const FlagRegistry& registry, const ParabolicType& I);

/// 0/1 matrix of f -> f o (G/P_I -> G/P_J): rows are type-I flags, columns
/// type-J flags, entry (f, h) = 1 iff forget(f, J) = h. Requires I <= J.
ExactMatrix pullback_matrix(const FlagRegistry& registry, const ParabolicType& I, const ParabolicType& J);
ExactMatrix pullback_matrix(const ParabolicType& I, const ParabolicType& J, int q);

/// A complex of permutation modules: term k is the direct sum of
/// Ind_{P_I} over I in levels[k]. Between consecutive levels the block
/// (I, L) is incidence_sign(I, L) * pullback_matrix(I, L) when L covers I
/// and zero otherwise. Each level must be one rank below the previous.
struct PermComplex {
    std::vector<std::vector<ParabolicType>> levels;
    ChainComplex complex;
};

PermComplex build_perm_complex(const FlagRegistry& registry, std::vector<std::vector<ParabolicType>> levels);

struct SteinbergData {
    ParabolicType J;
    /// 0 -> K -> ... -> Ind_{P_J} K, i.e. the resolution without v itself.
    PermComplex resolution;
    /// Homology of the resolution; zero except at the last position.
    std::vector<std::size_t> homology;
    std::size_t dim_v = 0;
};

/// Builds 0 -> K -> (+)_{#(Delta\I)=1} Ind -> ... -> Ind_{P_J} K and checks
/// it is exact except at the final position, whose cokernel is v_{P_J}.
/// Throws VerificationError on an exactness failure.
SteinbergData steinberg_resolution(const FlagRegistry& registry, const ParabolicType& J, int parallelism = 1);
SteinbergData steinberg_resolution(const ParabolicType& J, int q);

/// Inclusion-exclusion: sum over J <= I <= Delta of (-1)^{#(I\J)} [G:P_I].
/// J = Delta gives the trivial module, dimension 1.
BigInt steinberg_dim(const ParabolicType& J, const BigInt& q);

/// dim Ind_{P_J} K minus the rank of the stacked pullbacks from every
/// strictly larger parabolic: the quotient in the definition of v_{P_J},
/// with overlapping images handled by the rank.
std::size_t steinberg_dim_by_quotient(const FlagRegistry& registry, const ParabolicType& J);

}  // namespace drinfeld
