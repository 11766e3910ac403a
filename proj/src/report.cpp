#include "hecke/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace hecke {

std::string b_parameter_kind(const BParameter& q)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, EqualQ>)
                return "equal_q";
            else if constexpr (std::is_same_v<T, QOne>)
                return "one";
            else if constexpr (std::is_same_v<T, GenericQ>)
                return "generic";
            else
                return "minus_power";
        },
        q);
}

Json to_json(const IntPolynomial& p)
{
    Json arr = Json::array();
    for (const BigInt& c : p.coefficients()) {
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            arr.push_back(c.convert_to<long long>());
        else
            arr.push_back(c.str());
    }
    return arr;
}

Json to_json(const ClassificationReport& rep)
{
    Json input;
    input["spec"] = rep.input.spec.to_string();
    input["characteristic"] = rep.input.characteristic;
    if (std::holds_alternative<QIsOne>(rep.input.parameter))
        input["q"] = {{"kind", "one"}};
    else
        input["q"] = {{"kind", "root_of_unity"}, {"e", std::get<RootOfUnity>(rep.input.parameter).e}};
    if (rep.input.spec.has_family(Family::B) || !std::holds_alternative<EqualQ>(rep.input.b_parameter)) {
        Json bq;
        bq["kind"] = b_parameter_kind(rep.input.b_parameter);
        if (auto* mp = std::get_if<MinusPowerF>(&rep.input.b_parameter))
            bq["f"] = mp->f;
        input["B_Q"] = bq;
    }

    Json factors = Json::array();
    for (const auto& f : rep.factors) {
        Json jf;
        jf["type"] = f.factor.to_string();
        jf["status"] = std::string(to_string(f.status));
        if (f.multiplicity)
            jf["multiplicity"] = *f.multiplicity;
        jf["criterion"] = f.criterion;
        jf["basis"] = std::string(to_string(f.basis));
        factors.push_back(std::move(jf));
    }

    Json out;
    out["input"] = std::move(input);
    out["factors"] = std::move(factors);
    out["overall"] = {{"status", std::string(to_string(rep.overall))},
                      {"basis", std::string(to_string(rep.overall_basis))}};
    return out;
}

namespace {

Basis parse_basis(const std::string& s)
{
    for (Basis b : {Basis::Theorem, Basis::Derived, Basis::Conjectural})
        if (to_string(b) == s)
            return b;
    throw std::invalid_argument("unknown basis '" + s + "'");
}

} // namespace

ClassificationReport report_from_json(const Json& j)
{
    try {
        ClassificationReport rep;
        const Json& in = j.at("input");
        rep.input.spec = parse_type_spec(in.at("spec").get<std::string>());
        rep.input.characteristic = in.at("characteristic").get<std::uint64_t>();
        const std::string qkind = in.at("q").at("kind").get<std::string>();
        if (qkind == "one")
            rep.input.parameter = QIsOne{};
        else if (qkind == "root_of_unity")
            rep.input.parameter = RootOfUnity{in.at("q").at("e").get<unsigned>()};
        else
            throw std::invalid_argument("unknown q kind '" + qkind + "'");
        if (in.contains("B_Q")) {
            const std::string bk = in["B_Q"].at("kind").get<std::string>();
            if (bk == "equal_q")
                rep.input.b_parameter = EqualQ{};
            else if (bk == "one")
                rep.input.b_parameter = QOne{};
            else if (bk == "generic")
                rep.input.b_parameter = GenericQ{};
            else if (bk == "minus_power")
                rep.input.b_parameter = MinusPowerF{in["B_Q"].at("f").get<unsigned>()};
            else
                throw std::invalid_argument("unknown B_Q kind '" + bk + "'");
        }
        for (const Json& jf : j.at("factors")) {
            WeylSpec one = parse_type_spec(jf.at("type").get<std::string>());
            if (one.factors.size() != 1)
                throw std::invalid_argument("factor type must be irreducible");
            FactorVerdict f{one.factors[0], parse_status(jf.at("status").get<std::string>()),
                            std::nullopt, jf.at("criterion").get<std::string>(),
                            parse_basis(jf.at("basis").get<std::string>())};
            if (jf.contains("multiplicity"))
                f.multiplicity = jf["multiplicity"].get<unsigned>();
            rep.factors.push_back(std::move(f));
        }
        rep.overall = parse_status(j.at("overall").at("status").get<std::string>());
        rep.overall_basis = parse_basis(j.at("overall").at("basis").get<std::string>());
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("report does not match the schema: ") + e.what());
    }
}

std::string to_text(const ClassificationReport& rep)
{
    std::ostringstream os;
    os << "spec            " << rep.input.spec.to_string() << '\n';
    os << "characteristic  " << rep.input.characteristic << '\n';
    if (std::holds_alternative<QIsOne>(rep.input.parameter))
        os << "q               1\n";
    else
        os << "q               primitive root of unity, e = "
           << std::get<RootOfUnity>(rep.input.parameter).e << '\n';
    if (rep.input.spec.has_family(Family::B)) {
        os << "Q (type B)      " << b_parameter_kind(rep.input.b_parameter);
        if (auto* mp = std::get_if<MinusPowerF>(&rep.input.b_parameter))
            os << ", f = " << mp->f;
        os << '\n';
    }
    os << '\n';
    os << std::left << std::setw(10) << "factor" << std::setw(22) << "status" << std::setw(6) << "mult"
       << std::setw(13) << "basis" << "criterion\n";
    for (const auto& f : rep.factors) {
        os << std::setw(10) << f.factor.to_string() << std::setw(22) << to_string(f.status)
           << std::setw(6) << (f.multiplicity ? std::to_string(*f.multiplicity) : "-")
           << std::setw(13) << to_string(f.basis) << f.criterion << '\n';
    }
    os << '\n' << "overall         " << to_string(rep.overall) << " (" << to_string(rep.overall_basis)
       << ")\n";
    return os.str();
}

} // namespace hecke
