#pragma once

// Final assembly: H*(Y) from the E2 page, H*_c(X) from the long exact
// sequence of X in P^n with complement Y, H*(X) by duality, and the
// Lefschetz point count implied by H*_c(X).

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "drinfeld/flag_registry.hpp"
#include "drinfeld/orlik.hpp"
#include "drinfeld/twisted_module.hpp"

namespace drinfeld {

enum class TableKind { HY, HcX, HX, HP };

std::string to_string(TableKind kind);  // "H(Y)", "Hc(X)", "H(X)", "H(P)"
TableKind table_kind_from_string(const std::string& text);

struct CohomologyTable {
    int n = 0;
    int q = 0;
    TableKind theorem = TableKind::HY;
    std::map<int, TwistedModule> degrees;  // every degree 0..2n present

    CohomologyTable() = default;
    CohomologyTable(int n, int q, TableKind theorem);

    const TwistedModule& at(int degree) const;
    TwistedModule& at(int degree);
    /// sum_k (-1)^k Tr(F^m | H^k).
    BigInt lefschetz_trace(int m) const;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// H^*(P^n) = (+)_j K(-j)[-2j].
CohomologyTable projective_space_table(int n, int q);

/// gr^r H^{r+s}(Y) = E2^{r,s}; the filtration splits since its steps carry
/// distinct twists.
CohomologyTable h_of_y_from_page(const SpectralPage& e2);
CohomologyTable h_of_y(const FlagRegistry& registry, int parallelism = 1);

/// Solves H^{i-1}(P) -> H^{i-1}(Y) -> H^i_c(X) -> H^i(P) -> H^i(Y) degree by
/// degree with the rules
///   R1  maps between summands of different twist vanish;
///   R2  K(-j) = H^{2j}(P) -> H^{2j}(Y) is injective when H^{2j}(Y) has a
///       twist -j summand;
///   R3  H^i_c(X) = 0 for i < n,
/// together with purity of each H^i_c(X). The cokernel of K -> Ind_{P_J}
/// with #J = n-1 is v_{P_J} (the one-step Steinberg resolution).
/// Throws UnderdeterminedError when the rules do not fix a degree and
/// VerificationError when the input contradicts R3 or purity.
CohomologyTable solve_les(const CohomologyTable& h_y);
CohomologyTable hc_of_x(const FlagRegistry& registry, int parallelism = 1);

/// H^j(X) = H^{2n-j}_c(X)' with twists t -> -n - t and v -> v'.
CohomologyTable dualize(const CohomologyTable& hc);
CohomologyTable h_of_x(const FlagRegistry& registry, int parallelism = 1);

/// sum_{i=0}^n (-1)^{n+i} dim v_{P_{I_i}} q^{i m}.
BigInt lefschetz_count(int n, const BigInt& q, int m);

/// Closed-form tables used as oracles for the computed ones.
CohomologyTable expected_h_of_y(int n, int q);
CohomologyTable expected_hc_of_x(int n, int q);
CohomologyTable expected_h_of_x(int n, int q);

/// {"n", "q", "theorem", "entries": [{"degree", "summands": [{"label", "dim", "twist"}]}],
///  "metadata": {...}}. Empty degrees are omitted.
nlohmann::json table_to_json(const CohomologyTable& table);
CohomologyTable table_from_json(const nlohmann::json& doc);
std::string table_to_text(const CohomologyTable& table);

/// Line-per-degree differences between two tables; empty when equal.
std::vector<std::string> table_diff(const CohomologyTable& expected, const CohomologyTable& computed);

}  // namespace drinfeld
