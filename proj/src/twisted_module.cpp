#include "drinfeld/twisted_module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drinfeld {

namespace {

std::vector<int> parse_composition(const std::string& text)
{
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("ModuleLabel::parse: expected a composition like (2,1)");
    std::vector<int> parts;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ','))
        parts.push_back(std::stoi(item));
    return parts;
}

}  // namespace

std::string ModuleLabel::to_string() const
{
    switch (kind) {
    case ModuleKind::Trivial:
        return "K";
    case ModuleKind::Induced:
        return "Ind" + type.composition_string();
    case ModuleKind::Steinberg:
        return "v" + type.composition_string();
    case ModuleKind::SteinbergDual:
        return "v'" + type.composition_string();
    }
    return "?";
}

ModuleLabel ModuleLabel::parse(const std::string& text, int n)
{
    if (text == "K")
        return trivial(n);
    auto with_type = [&](ModuleKind kind, std::size_t skip) {
        const auto I = ParabolicType::from_composition(parse_composition(text.substr(skip)));
        if (I.n() != n)
            throw std::invalid_argument("ModuleLabel::parse: composition does not sum to n+1");
        return ModuleLabel{kind, I};
    };
    if (text.rfind("Ind", 0) == 0)
        return with_type(ModuleKind::Induced, 3);
    if (text.rfind("v'", 0) == 0)
        return with_type(ModuleKind::SteinbergDual, 2);
    if (text.rfind("v", 0) == 0)
        return with_type(ModuleKind::Steinberg, 1);
    throw std::invalid_argument("ModuleLabel::parse: unknown label '" + text + "'");
}

ModuleLabel ModuleLabel::dual() const
{
    switch (kind) {
    case ModuleKind::Steinberg:
        return {ModuleKind::SteinbergDual, type};
    case ModuleKind::SteinbergDual:
        return {ModuleKind::Steinberg, type};
    default:
        // Permutation modules are self-dual.
        return *this;
    }
}

std::strong_ordering operator<=>(const ModuleLabel& a, const ModuleLabel& b)
{
    if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0)
        return c;
    return a.type <=> b.type;
}

TwistedModule::TwistedModule(std::initializer_list<Summand> summands)
{
    for (const auto& s : summands)
        add(s);
}

void TwistedModule::add(Summand s)
{
    if (s.dim < 0)
        throw std::invalid_argument("TwistedModule: negative dimension");
    if (s.dim == 0)
        return;
    auto pos = std::upper_bound(summands_.begin(), summands_.end(), s, [](const Summand& x, const Summand& y) {
        return x.twist != y.twist ? x.twist < y.twist : x.label < y.label;
    });
    summands_.insert(pos, std::move(s));
}

void TwistedModule::add(const TwistedModule& other)
{
    for (const auto& s : other.summands_)
        add(s);
}

std::int64_t TwistedModule::dim() const
{
    std::int64_t d = 0;
    for (const auto& s : summands_)
        d += s.dim;
    return d;
}

std::vector<int> TwistedModule::twists() const
{
    std::vector<int> t;
    for (const auto& s : summands_)
        if (t.empty() || t.back() != s.twist)
            t.push_back(s.twist);
    return t;
}

BigInt TwistedModule::frobenius_trace(const BigInt& q, int m) const
{
    BigInt total = 0;
    for (const auto& s : summands_) {
        if (s.twist > 0)
            throw std::domain_error("frobenius_trace: positive twists do not occur in these tables");
        total += BigInt(static_cast<long>(s.dim)) * ipow(q, static_cast<unsigned long>(-s.twist) * static_cast<unsigned long>(m));
    }
    return total;
}

TwistedModule TwistedModule::dual(int n) const
{
    TwistedModule out;
    for (const auto& s : summands_)
        out.add(Summand{s.label.dual(), s.dim, -n - s.twist});
    return out;
}

std::string TwistedModule::to_string() const
{
    if (summands_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < summands_.size(); ++k) {
        const auto& s = summands_[k];
        if (k)
            os << " + ";
        os << s.label.to_string() << '(' << s.twist << ") [dim " << s.dim << ']';
    }
    return os.str();
}

}  // namespace drinfeld
