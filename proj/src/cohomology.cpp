#include "drinfeld/cohomology.hpp"

#include <sstream>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

std::string to_string(TableKind kind)
{
    switch (kind) {
    case TableKind::HY:
        return "H(Y)";
    case TableKind::HcX:
        return "Hc(X)";
    case TableKind::HX:
        return "H(X)";
    case TableKind::HP:
        return "H(P)";
    }
    return "?";
}

TableKind table_kind_from_string(const std::string& text)
{
    for (auto k : {TableKind::HY, TableKind::HcX, TableKind::HX, TableKind::HP})
        if (to_string(k) == text)
            return k;
    throw std::invalid_argument("unknown table kind '" + text + "'");
}

CohomologyTable::CohomologyTable(int n_, int q_, TableKind theorem_) : n(n_), q(q_), theorem(theorem_)
{
    for (int d = 0; d <= 2 * n; ++d)
        degrees[d];
}

const TwistedModule& CohomologyTable::at(int degree) const
{
    static const TwistedModule zero;
    auto it = degrees.find(degree);
    return it == degrees.end() ? zero : it->second;
}

TwistedModule& CohomologyTable::at(int degree)
{
    if (degree < 0 || degree > 2 * n)
        throw std::out_of_range("CohomologyTable::at: degree outside 0..2n");
    return degrees[degree];
}

BigInt CohomologyTable::lefschetz_trace(int m) const
{
    BigInt total = 0;
    for (const auto& [d, module] : degrees) {
        const BigInt t = module.frobenius_trace(q, m);
        total += (d % 2 == 0) ? t : BigInt(-t);
    }
    return total;
}

CohomologyTable projective_space_table(int n, int q)
{
    CohomologyTable t(n, q, TableKind::HP);
    for (int j = 0; j <= n; ++j)
        t.at(2 * j).add(Summand{ModuleLabel::trivial(n), 1, -j});
    return t;
}

CohomologyTable h_of_y_from_page(const SpectralPage& e2)
{
    CohomologyTable t(e2.n, e2.q, TableKind::HY);
    for (const auto& [pos, module] : e2.entries)
        t.at(pos.first + pos.second).add(module);
    return t;
}

CohomologyTable h_of_y(const FlagRegistry& registry, int parallelism)
{
    return h_of_y_from_page(e2_page(registry, parallelism));
}

namespace {

struct MapResult {
    TwistedModule kernel;    // inside the source K(-j)
    TwistedModule cokernel;  // quotient of the target
};

// K(-j) -> target under rules R1 and R2.
MapResult map_from_trivial(const Summand& source, const TwistedModule& target, int n, int degree)
{
    std::vector<Summand> same_twist;
    TwistedModule rest;
    for (const auto& s : target.summands()) {
        if (s.twist == source.twist)
            same_twist.push_back(s);
        else
            rest.add(s);
    }
    MapResult out;
    if (same_twist.empty()) {
        out.kernel.add(source);  // R1
        out.cokernel = target;
        return out;
    }
    if (same_twist.size() == 1) {
        const Summand& hit = same_twist.front();
        if (hit.label.kind == ModuleKind::Trivial && hit.dim == source.dim) {
            out.cokernel = rest;
            return out;
        }
        if (hit.label.kind == ModuleKind::Induced && hit.label.type.size() == n - 1 && source.dim == 1) {
            rest.add(Summand{ModuleLabel::steinberg(hit.label.type), hit.dim - 1, hit.twist});
            out.cokernel = rest;
            return out;
        }
    }
    std::ostringstream msg;
    msg << "long exact sequence: image of H^" << degree << "(P^n) = " << source.label.to_string() << '(' << source.twist
        << ") in H^" << degree << "(Y) = " << target.to_string() << " is not determined by the deduction rules";
    throw UnderdeterminedError(msg.str());
}

}  // namespace

CohomologyTable solve_les(const CohomologyTable& h_y)
{
    if (h_y.theorem != TableKind::HY)
        throw std::invalid_argument("solve_les: input must be an H(Y) table");
    const int n = h_y.n;
    const auto h_p = projective_space_table(n, h_y.q);
    CohomologyTable out(n, h_y.q, TableKind::HcX);

    // Per degree d: the map H^d(P) -> H^d(Y).
    std::map<int, MapResult> maps;
    for (int d = 0; d <= 2 * n; ++d) {
        const auto& source = h_p.at(d);
        if (source.empty()) {
            maps[d] = MapResult{{}, h_y.at(d)};
            continue;
        }
        maps[d] = map_from_trivial(source.summands().front(), h_y.at(d), n, d);
    }

    for (int i = 0; i <= 2 * n; ++i) {
        TwistedModule hc;
        if (i > 0)
            hc.add(maps[i - 1].cokernel);
        hc.add(maps[i].kernel);
        if (i < n && !hc.empty())
            throw VerificationError("long exact sequence: H^" + std::to_string(i) + "_c(X) = " + hc.to_string() +
                                    " contradicts affine vanishing below degree n");
        if (hc.twists().size() > 1)
            throw VerificationError("long exact sequence: H^" + std::to_string(i) + "_c(X) = " + hc.to_string() +
                                    " mixes Tate twists, contradicting purity");
        // v_G = K: name the trivial piece by its Steinberg label.
        TwistedModule named;
        for (auto s : hc.summands()) {
            if (s.label.kind == ModuleKind::Trivial)
                s.label = ModuleLabel::steinberg(ParabolicType::full(n));
            named.add(s);
        }
        out.at(i) = std::move(named);
    }
    return out;
}

CohomologyTable hc_of_x(const FlagRegistry& registry, int parallelism)
{
    return solve_les(h_of_y(registry, parallelism));
}

CohomologyTable dualize(const CohomologyTable& hc)
{
    if (hc.theorem != TableKind::HcX)
        throw std::invalid_argument("dualize: input must be an Hc(X) table");
    CohomologyTable out(hc.n, hc.q, TableKind::HX);
    for (int j = 0; j <= 2 * hc.n; ++j)
        out.at(j) = hc.at(2 * hc.n - j).dual(hc.n);
    return out;
}

CohomologyTable h_of_x(const FlagRegistry& registry, int parallelism)
{
    return dualize(hc_of_x(registry, parallelism));
}

BigInt lefschetz_count(int n, const BigInt& q, int m)
{
    if (n < 1 || m < 1)
        throw std::invalid_argument("lefschetz_count: need n >= 1 and m >= 1");
    BigInt total = 0;
    for (int i = 0; i <= n; ++i) {
        const BigInt term = steinberg_dim(ParabolicType::prefix(n, i), q) * ipow(q, static_cast<unsigned long>(i) * static_cast<unsigned long>(m));
        total += ((n + i) % 2 == 0) ? term : BigInt(-term);
    }
    return total;
}

CohomologyTable expected_h_of_y(int n, int q)
{
    CohomologyTable t(n, q, TableKind::HY);
    auto v = [&](int index, int twist) {
        const auto I = ParabolicType::prefix(n, index);
        return Summand{ModuleLabel::steinberg(I), steinberg_dim(I, q).get_si(), twist};
    };
    for (int s = 0; s <= 2 * n - 2; ++s) {
        auto& entry = t.at(s);
        if (s == 2 * n - 2) {
            const auto I = ParabolicType::prefix(n, n - 1);
            entry.add(Summand{ModuleLabel::induced(I), parabolic_index(I, q).get_si(), -(n - 1)});
        } else if (s <= n - 2) {
            if (s % 2 == 0)
                entry.add(Summand{ModuleLabel::trivial(n), 1, -s / 2});
        } else {
            // n-1 <= s <= 2n-3; the Steinberg index is s-n+1 in both parities.
            if (s % 2 == 0)
                entry.add(Summand{ModuleLabel::trivial(n), 1, -s / 2});
            entry.add(v(1 + s - n, n - 1 - s));
        }
    }
    return t;
}

CohomologyTable expected_hc_of_x(int n, int q)
{
    CohomologyTable t(n, q, TableKind::HcX);
    for (int i = 0; i <= n; ++i) {
        const auto I = ParabolicType::prefix(n, i);
        t.at(n + i).add(Summand{ModuleLabel::steinberg(I), steinberg_dim(I, q).get_si(), -i});
    }
    return t;
}

CohomologyTable expected_h_of_x(int n, int q)
{
    CohomologyTable t(n, q, TableKind::HX);
    for (int i = 0; i <= n; ++i) {
        // Degree n-i carries the dual of v for the composition (i+1, 1^{n-i}).
        const auto I = ParabolicType::prefix(n, i);
        t.at(n - i).add(Summand{ModuleLabel::steinberg_dual(I), steinberg_dim(I, q).get_si(), i - n});
    }
    return t;
}

nlohmann::json table_to_json(const CohomologyTable& table)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [d, module] : table.degrees) {
        if (module.empty())
            continue;
        nlohmann::json summands = nlohmann::json::array();
        for (const auto& s : module.summands())
            summands.push_back({{"label", s.label.to_string()}, {"dim", s.dim}, {"twist", s.twist}});
        entries.push_back({{"degree", d}, {"summands", std::move(summands)}});
    }
    nlohmann::json doc{{"n", table.n}, {"q", table.q}, {"theorem", to_string(table.theorem)}, {"entries", std::move(entries)}};
    nlohmann::json meta{{"twist_normalization", "H^j(X) x H^{2n-j}_c(X) -> K(-n); paired twists sum to -n"}};
    if (table.theorem == TableKind::HX)
        meta["alternative_twist_offset"] = -table.n;  // rendering whose twists are i-2n in degree n-i
    doc["metadata"] = std::move(meta);
    return doc;
}

CohomologyTable table_from_json(const nlohmann::json& doc)
{
    const int n = doc.at("n").get<int>();
    CohomologyTable t(n, doc.at("q").get<int>(), table_kind_from_string(doc.at("theorem").get<std::string>()));
    for (const auto& entry : doc.at("entries")) {
        auto& module = t.at(entry.at("degree").get<int>());
        for (const auto& s : entry.at("summands"))
            module.add(Summand{ModuleLabel::parse(s.at("label").get<std::string>(), n), s.at("dim").get<std::int64_t>(), s.at("twist").get<int>()});
    }
    return t;
}

std::string table_to_text(const CohomologyTable& table)
{
    std::ostringstream os;
    os << to_string(table.theorem) << "  n=" << table.n << " q=" << table.q << '\n';
    for (const auto& [d, module] : table.degrees) {
        if (module.empty())
            continue;
        os << "  H^" << d << " = " << module.to_string() << '\n';
    }
    return os.str();
}

std::vector<std::string> table_diff(const CohomologyTable& expected, const CohomologyTable& computed)
{
    std::vector<std::string> out;
    if (expected.n != computed.n || expected.q != computed.q || expected.theorem != computed.theorem)
        out.push_back("table headers differ");
    for (int d = 0; d <= 2 * std::max(expected.n, computed.n); ++d) {
        const auto& e = expected.at(d);
        const auto& c = computed.at(d);
        if (!(e == c))
            out.push_back("degree " + std::to_string(d) + ": expected " + e.to_string() + ", computed " + c.to_string());
    }
    return out;
}

}  // namespace drinfeld
