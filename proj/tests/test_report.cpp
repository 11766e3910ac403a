#include "hecke/report.hpp"

#include "doctest.h"

#include <random>

using namespace hecke;

namespace {

ClassificationInput random_input(std::mt19937_64& rng)
{
    const char* specs[] = {"A3", "B4", "B2xA2", "D5xG2", "F4", "E6xB3", "I2(7)", "1", "C3xA1", "E8"};
    std::uniform_int_distribution<std::size_t> pick(0, std::size(specs) - 1);
    std::uniform_int_distribution<unsigned> epick(2, 12), kind(0, 3);
    ClassificationInput in;
    in.spec = parse_type_spec(specs[pick(rng)]);
    const unsigned e = epick(rng);
    in.parameter = RootOfUnity{e};
    if (in.spec.has_family(Family::B)) {
        switch (kind(rng)) {
        case 0: in.b_parameter = EqualQ{}; break;
        case 1: in.b_parameter = QOne{}; break;
        case 2: in.b_parameter = GenericQ{}; break;
        default: in.b_parameter = MinusPowerF{e / 3}; break;
        }
    }
    return in;
}

bool same(const ClassificationReport& a, const ClassificationReport& b)
{
    if (a.factors.size() != b.factors.size())
        return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        const auto& x = a.factors[i];
        const auto& y = b.factors[i];
        if (!(x.factor == y.factor && x.status == y.status && x.multiplicity == y.multiplicity &&
              x.criterion == y.criterion && x.basis == y.basis))
            return false;
    }
    return a.input.spec == b.input.spec && a.input.characteristic == b.input.characteristic &&
           a.input.parameter == b.input.parameter && a.input.b_parameter == b.input.b_parameter &&
           a.overall == b.overall && a.overall_basis == b.overall_basis;
}

} // namespace

TEST_CASE("JSON layout")
{
    ClassificationInput in;
    in.spec = parse_type_spec("A3");
    in.parameter = RootOfUnity{2};
    const Json j = to_json(classify(in));
    CHECK(j.at("input").at("spec") == "A3");
    CHECK(j.at("input").at("characteristic") == 0);
    CHECK(j.at("input").at("q").at("kind") == "root_of_unity");
    CHECK(j.at("input").at("q").at("e") == 2);
    CHECK_FALSE(j.at("input").contains("B_Q"));
    REQUIRE(j.at("factors").size() == 1);
    CHECK(j.at("factors")[0].at("type") == "A3");
    CHECK(j.at("factors")[0].at("multiplicity") == 2);
    CHECK(j.at("factors")[0].at("status") == "Infinite");
    CHECK(j.at("factors")[0].at("basis") == "theorem");
    CHECK(j.at("factors")[0].at("criterion").is_string());
    CHECK(j.at("overall").at("status") == "Infinite");
    CHECK(j.at("overall").at("basis") == "theorem");

    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"input", "factors", "overall"});
}

TEST_CASE("JSON for q = 1 and second parameters")
{
    ClassificationInput q1;
    q1.spec = parse_type_spec("B2");
    q1.parameter = QIsOne{};
    q1.characteristic = 2;
    const Json j = to_json(classify(q1));
    CHECK(j.at("input").at("q") == Json{{"kind", "one"}});
    CHECK(j.at("input").at("B_Q").at("kind") == "equal_q");
    CHECK_FALSE(j.at("factors")[0].contains("multiplicity"));

    ClassificationInput mp;
    mp.spec = parse_type_spec("B3");
    mp.parameter = RootOfUnity{5};
    mp.b_parameter = MinusPowerF{2};
    const Json m = to_json(classify(mp));
    CHECK(m.at("input").at("B_Q") == Json{{"kind", "minus_power"}, {"f", 2}});
    CHECK(m.at("factors")[0].at("status") == "Finite");

    CHECK(b_parameter_kind(QOne{}) == "one");
    CHECK(b_parameter_kind(GenericQ{}) == "generic");
}

TEST_CASE("JSON round trip and byte stability")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const ClassificationReport rep = classify(random_input(rng));
        const Json j = to_json(rep);
        const std::string text = j.dump(2);
        CHECK(text == to_json(classify(rep.input)).dump(2));
        const ClassificationReport back = report_from_json(Json::parse(text));
        CHECK(same(back, rep));
        CHECK(to_json(back).dump(2) == text);
    }
}

TEST_CASE("schema violations")
{
    ClassificationInput in;
    in.spec = parse_type_spec("A2");
    Json j = to_json(classify(in));
    Json bad = j;
    bad["factors"][0]["status"] = "Tame";
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
    bad = j;
    bad["input"]["q"]["kind"] = "generic";
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
    bad = j;
    bad["factors"][0]["type"] = "A2xA1";
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
    bad = j;
    bad["overall"].erase("basis");
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("text report")
{
    ClassificationInput in;
    in.spec = parse_type_spec("D4");
    in.parameter = RootOfUnity{3};
    const std::string text = to_text(classify(in));
    CHECK(text.find("D4") != std::string::npos);
    CHECK(text.find("FiniteNotSemisimple") != std::string::npos);
    CHECK(text.find("overall") != std::string::npos);
}

TEST_CASE("polynomial coefficients in JSON")
{
    CHECK(to_json(IntPolynomial{1, 2, 2, 1}) == Json::array({1, 2, 2, 1}));
    const IntPolynomial big = IntPolynomial::constant(BigInt(1) << 80);
    CHECK(to_json(big)[0] == (BigInt(1) << 80).str());
}
