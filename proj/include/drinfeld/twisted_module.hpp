#pragma once

// Formal sums of G-modules with Tate twists: the entries of every
// cohomology table and spectral-sequence page.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "drinfeld/qarith.hpp"
#include "drinfeld/rootdata.hpp"

namespace drinfeld {

enum class ModuleKind { Trivial, Induced, Steinberg, SteinbergDual };

/// K, Ind_{P_I}^G K, v_{P_I}^G(K) or its K-dual v_{P_I}^G(K)'.
/// Trivial labels carry I = Delta.
struct ModuleLabel {
    ModuleKind kind = ModuleKind::Trivial;
    ParabolicType type;

    static ModuleLabel trivial(int n) { return {ModuleKind::Trivial, ParabolicType::full(n)}; }
    static ModuleLabel induced(const ParabolicType& I) { return {ModuleKind::Induced, I}; }
    static ModuleLabel steinberg(const ParabolicType& I) { return {ModuleKind::Steinberg, I}; }
    static ModuleLabel steinberg_dual(const ParabolicType& I) { return {ModuleKind::SteinbergDual, I}; }

    /// "K", "Ind(2,1)", "v(1,1,1)", "v'(3)": parabolics written as compositions.
    std::string to_string() const;
    /// Inverse of to_string; n is needed to place "K".
    static ModuleLabel parse(const std::string& text, int n);

    ModuleLabel dual() const;

    friend bool operator==(const ModuleLabel&, const ModuleLabel&) = default;
    friend std::strong_ordering operator<=>(const ModuleLabel& a, const ModuleLabel& b);
};

struct Summand {
    ModuleLabel label;
    std::int64_t dim = 0;
    int twist = 0;  // summand is M(twist); Frobenius acts on M(-l) by q^l

    friend bool operator==(const Summand&, const Summand&) = default;
};

/// Summands are kept sorted by (twist, label); zero-dimensional summands
/// are dropped on insertion.
class TwistedModule {
public:
    TwistedModule() = default;
    TwistedModule(std::initializer_list<Summand> summands);

    void add(Summand s);
    void add(const TwistedModule& other);

    const std::vector<Summand>& summands() const { return summands_; }
    bool empty() const { return summands_.empty(); }
    std::int64_t dim() const;
    std::vector<int> twists() const;

    /// Tr(F^m): a twist -l summand of dimension d contributes d * q^{l m}.
    BigInt frobenius_trace(const BigInt& q, int m) const;

    /// Labels v -> v', K -> K, twist t -> -n - t (pairing into K(-n)).
    TwistedModule dual(int n) const;

    std::string to_string() const;

    friend bool operator==(const TwistedModule&, const TwistedModule&) = default;

private:
    std::vector<Summand> summands_;
};

}  // namespace drinfeld
