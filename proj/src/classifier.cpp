#include "hecke/classifier.hpp"

#include "hecke/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace hecke {

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::Semisimple: return "Semisimple";
    case Status::FiniteNotSemisimple: return "FiniteNotSemisimple";
    case Status::Finite: return "Finite";
    case Status::Infinite: return "Infinite";
    }
    return "?";
}

std::string_view to_string(Basis b) noexcept
{
    switch (b) {
    case Basis::Theorem: return "theorem";
    case Basis::Derived: return "derived";
    case Basis::Conjectural: return "conjectural";
    }
    return "?";
}

Status parse_status(std::string_view s)
{
    for (Status st : {Status::Semisimple, Status::FiniteNotSemisimple, Status::Finite, Status::Infinite})
        if (to_string(st) == s)
            return st;
    throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

namespace {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Basis weakest(Basis a, Basis b)
{
    return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

bool non_semisimple(Status s)
{
    return s == Status::FiniteNotSemisimple || s == Status::Finite;
}

Status from_multiplicity(unsigned m)
{
    return m == 0 ? Status::Semisimple : m == 1 ? Status::FiniteNotSemisimple : Status::Infinite;
}

} // namespace

void validate(const ClassificationInput& in)
{
    if (in.characteristic != 0 && !is_prime(in.characteristic))
        throw ValidationError("characteristic must be 0 or a prime, got " +
                              std::to_string(in.characteristic));
    const bool has_b = in.spec.has_family(Family::B);
    const bool default_b = std::holds_alternative<EqualQ>(in.b_parameter);
    if (!default_b && !has_b)
        throw ValidationError("a second parameter Q needs a type B factor");

    if (std::holds_alternative<QIsOne>(in.parameter)) {
        if (std::holds_alternative<GenericQ>(in.b_parameter) ||
            std::holds_alternative<MinusPowerF>(in.b_parameter))
            throw ValidationError("q = 1 only supports Q = q = 1");
        for (const auto& t : in.spec.factors)
            if (!t.is_weyl())
                throw NonWeylFactor("group algebra criterion needs Weyl factors, got " + t.to_string());
        return;
    }

    const unsigned e = std::get<RootOfUnity>(in.parameter).e;
    if (e < 2)
        throw ValidationError("the order e of q must be at least 2");
    if (in.characteristic != 0 && e % in.characteristic == 0)
        throw ValidationError("no element of order " + std::to_string(e) + " exists in characteristic " +
                              std::to_string(in.characteristic));
    if (auto* mp = std::get_if<MinusPowerF>(&in.b_parameter); mp && mp->f >= e)
        throw ValidationError("f must satisfy 0 <= f < e");
}

OneParamVerdict classify_one_param_irreducible(const IrreducibleType& t, unsigned e)
{
    if (e < 2)
        throw std::invalid_argument("e must be at least 2");
    const auto d = degrees(t);
    const unsigned m = degree_count_multiplicity(d, e);
    OneParamVerdict v{from_multiplicity(m), m, Basis::Theorem, {}};
    switch (t.family()) {
    case Family::A:
    case Family::B:
    case Family::D:
        v.criterion = "simple root of P_W at q (classical type)";
        break;
    case Family::G:
    case Family::I2:
        v.criterion = "simple root of P_W at q (dihedral type)";
        break;
    case Family::E:
    case Family::F:
        // Known only when the characteristic is large enough, with no explicit
        // bound available.
        v.criterion = "simple root of P_W at q (exceptional type, open for small characteristic)";
        v.basis = Basis::Conjectural;
        break;
    }
    return v;
}

bool threshold_finite(const IrreducibleType& t, unsigned e)
{
    if (e < 2)
        throw std::invalid_argument("e must be at least 2");
    switch (t.family()) {
    case Family::A:
        return t.rank() + 1 < 2 * e;
    case Family::B:
    case Family::D:
        return e % 2 == 1 ? t.rank() < 2 * e : t.rank() < e;
    default:
        throw std::invalid_argument("no closed-form threshold for type " + t.to_string());
    }
}

TwoParamVerdict classify_two_param_B(unsigned n, unsigned e, const BParameter& q)
{
    if (n < 2)
        throw std::invalid_argument("type B needs n >= 2");
    if (e < 2)
        throw std::invalid_argument("e must be at least 2");

    const bool equal_q = std::holds_alternative<EqualQ>(q);
    // -q = q^{e/2+1} and -1 = q^{e/2} when e is even; for odd e neither -q nor
    // -1 is a power of q.
    BParameter norm = q;
    if (equal_q)
        norm = e % 2 == 0 ? BParameter{MinusPowerF{(e / 2 + 1) % e}} : BParameter{GenericQ{}};
    else if (std::holds_alternative<QOne>(q))
        norm = e % 2 == 0 ? BParameter{MinusPowerF{e / 2}} : BParameter{GenericQ{}};

    TwoParamVerdict v{Status::Infinite, Basis::Theorem, {}, norm};
    if (std::holds_alternative<GenericQ>(norm)) {
        // Morita equivalent to a sum of H(A_{m-1}) x H(A_{n-m-1}).
        v.criterion = "generic Q: finite iff n < 2e";
        if (n >= 2 * e)
            v.status = Status::Infinite;
        else if (n < e)
            v.status = Status::Semisimple;
        else
            v.status = Status::FiniteNotSemisimple;
        if (v.status != Status::Infinite && !equal_q)
            v.basis = Basis::Derived;
        return v;
    }

    const unsigned f = std::get<MinusPowerF>(norm).f;
    if (f >= e)
        throw std::invalid_argument("f must satisfy 0 <= f < e");
    const unsigned bound = std::min(e, 2 * std::min(f, e - f) + 4);
    v.criterion = "-Q = q^f: finite iff n < min(e, 2 min(f, e-f) + 4)";
    v.status = n < bound ? Status::Finite : Status::Infinite;
    if (equal_q && v.status == Status::Finite) {
        const unsigned m = degree_count_multiplicity(degrees(IrreducibleType::B(n)), e);
        if (m <= 1)
            v.status = from_multiplicity(m);
    }
    return v;
}

Status combine_factors(std::span<const Status> statuses)
{
    unsigned bad = 0;
    Status single = Status::Semisimple;
    for (Status s : statuses) {
        if (s == Status::Infinite)
            return Status::Infinite;
        if (non_semisimple(s)) {
            ++bad;
            single = s;
        }
    }
    if (bad >= 2)
        return Status::Infinite;
    return single;
}

namespace {

void finish(ClassificationReport& rep)
{
    std::vector<Status> st;
    Basis basis = Basis::Theorem;
    unsigned undecided_bad = 0, bad = 0;
    for (const auto& f : rep.factors) {
        st.push_back(f.status);
        basis = weakest(basis, f.basis);
        bad += non_semisimple(f.status);
        undecided_bad += f.status == Status::Finite;
    }
    rep.overall = combine_factors(st);
    // Two non-semisimple factors force infinite type, but a Finite factor may
    // in fact be semisimple.
    const bool has_infinite_factor =
        std::find(st.begin(), st.end(), Status::Infinite) != st.end();
    if (!has_infinite_factor && bad >= 2 && undecided_bad > 0)
        basis = Basis::Conjectural;
    rep.overall_basis = basis;
}

} // namespace

ClassificationReport classify_group_algebra(const WeylSpec& spec, std::uint64_t l)
{
    if (l != 0 && !is_prime(l))
        throw ValidationError("characteristic must be 0 or a prime, got " + std::to_string(l));
    ClassificationReport rep;
    rep.input.spec = spec;
    rep.input.characteristic = l;
    rep.input.parameter = QIsOne{};
    for (const auto& t : spec.factors) {
        if (!t.is_weyl())
            throw NonWeylFactor("group algebra criterion needs Weyl factors, got " + t.to_string());
        const BigInt order = group_order(t);
        Status s = Status::Semisimple;
        std::string criterion = "Maschke: l does not divide |W|";
        if (l != 0 && order % l == 0) {
            // Finite type iff the Sylow l-subgroups are cyclic iff l^2 does not divide |W|.
            s = order % (BigInt(l) * l) == 0 ? Status::Infinite : Status::FiniteNotSemisimple;
            criterion = "cyclic Sylow l-subgroups: l^2 does not divide |W|";
        }
        rep.factors.push_back({t, s, std::nullopt, criterion, Basis::Theorem});
    }
    finish(rep);
    return rep;
}

ClassificationReport classify(const ClassificationInput& in)
{
    validate(in);
    if (std::holds_alternative<QIsOne>(in.parameter)) {
        ClassificationReport rep = classify_group_algebra(in.spec, in.characteristic);
        rep.input = in;
        return rep;
    }

    const unsigned e = std::get<RootOfUnity>(in.parameter).e;
    ClassificationReport rep;
    rep.input = in;
    const bool two_param = !std::holds_alternative<EqualQ>(in.b_parameter);
    for (const auto& t : in.spec.factors) {
        if (t.family() == Family::B && two_param) {
            TwoParamVerdict v = classify_two_param_B(t.rank(), e, in.b_parameter);
            rep.factors.push_back({t, v.status, std::nullopt, std::move(v.criterion), v.basis});
        } else {
            OneParamVerdict v = classify_one_param_irreducible(t, e);
            rep.factors.push_back({t, v.status, v.multiplicity, std::move(v.criterion), v.basis});
        }
    }
    finish(rep);
    return rep;
}

DimensionSequence::DimensionSequence(std::vector<std::uint64_t> values) : values_(std::move(values))
{
    if (std::find(values_.begin(), values_.end(), 0u) != values_.end())
        throw std::invalid_argument("dimension sequence values must be at least 1");
}

DimensionSequence kunneth_convolve(const DimensionSequence& a, const DimensionSequence& b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("convolution needs nonempty sequences");
    const std::size_t len = std::min(a.size(), b.size());
    std::vector<std::uint64_t> c(len, 0);
    for (std::size_t t = 0; t < len; ++t)
        for (std::size_t s = 0; s <= t; ++s)
            c[t] += a[s] * b[t - s];
    return DimensionSequence(std::move(c));
}

unsigned complexity_upper_bound(const DimensionSequence& seq, const ComplexityOptions& opts)
{
    if (seq.empty())
        return 0;
    const std::size_t len = seq.size();
    const std::size_t half = len / 2;
    if (half == 0)
        return 1;
    for (unsigned s = 1; s <= opts.max_complexity; ++s) {
        double head = 0, tail = 0;
        for (std::size_t t = 0; t < len; ++t) {
            const double r = static_cast<double>(seq[t]) / std::pow(static_cast<double>(t + 1), s - 1.0);
            double& side = t < half ? head : tail;
            side = std::max(side, r);
        }
        if (tail <= opts.growth_tolerance * head)
            return s;
    }
    return opts.max_complexity;
}

} // namespace hecke
