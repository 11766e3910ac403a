#include "hecke/weyl_types.hpp"

#include "doctest.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

using namespace hecke;

namespace {

// Length generating functions of the classical groups straight from their
// permutation models: inversions for S_n, and for signed permutations
// l_B(w) = inv(w) - sum_{w(j)<0} w(j), l_D(w) = inv(w) - sum_{w(j)<0} (w(j)+1).
enum class Model { A, B, D };

IntPolynomial permutation_lengths(unsigned n, Model model)
{
    std::vector<std::uint64_t> hist;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    const unsigned masks = model == Model::A ? 1u : (1u << n);
    do {
        for (unsigned mask = 0; mask < masks; ++mask) {
            if (model == Model::D && std::popcount(mask) % 2)
                continue;
            std::vector<int> w(perm);
            for (unsigned j = 0; j < n; ++j)
                if (mask >> j & 1)
                    w[j] = -w[j];
            long len = 0;
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j)
                    len += w[i] > w[j];
            for (int v : w)
                if (v < 0)
                    len -= model == Model::B ? v : v + 1;
            if (hist.size() <= static_cast<std::size_t>(len))
                hist.resize(static_cast<std::size_t>(len) + 1);
            ++hist[static_cast<std::size_t>(len)];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return IntPolynomial(std::vector<BigInt>(hist.begin(), hist.end()));
}

} // namespace

TEST_CASE("parse_type_spec examples")
{
    const WeylSpec s = parse_type_spec("A4xB3");
    REQUIRE(s.factors.size() == 2);
    CHECK(s.factors[0] == IrreducibleType::A(4));
    CHECK(s.factors[1] == IrreducibleType::B(3));

    const WeylSpec c = parse_type_spec("C3");
    REQUIRE(c.factors.size() == 1);
    CHECK(c.factors[0] == IrreducibleType::B(3));

    CHECK_THROWS_AS(parse_type_spec("E9"), SpecError);
    CHECK(parse_type_spec("1").empty());
    CHECK(parse_type_spec(" a2 x i2(5) ").to_string() == "A2xI2(5)");
    CHECK(parse_type_spec("G2xF4xE6xD4").to_string() == "G2xF4xE6xD4");
}

TEST_CASE("parse errors report a position")
{
    for (const char* bad : {"", "x", "A", "A0", "B1", "D1", "F5", "G3", "E5", "I2(2)", "I2(", "I2(5",
                            "A2x", "A2xx", "Q3", "A2 B3", "1xA2", "A-1", "A99999999999999999999"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_type_spec(bad), SpecError);
    }
    try {
        parse_type_spec("A2xE9");
    } catch (const SpecError& e) {
        CHECK(e.position() >= 3);
    }
}

TEST_CASE("to_string round-trips through the parser")
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> kind(0, 6), rank(1, 12);
    for (int i = 0; i < 300; ++i) {
        WeylSpec s;
        const int k = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int j = 0; j < k; ++j) {
            switch (kind(rng)) {
            case 0: s.factors.push_back(IrreducibleType::A(static_cast<unsigned>(rank(rng)))); break;
            case 1: s.factors.push_back(IrreducibleType::B(static_cast<unsigned>(rank(rng)) + 1)); break;
            case 2: s.factors.push_back(IrreducibleType::D(static_cast<unsigned>(rank(rng)) + 1)); break;
            case 3: s.factors.push_back(IrreducibleType::E(6 + static_cast<unsigned>(rank(rng)) % 3)); break;
            case 4: s.factors.push_back(IrreducibleType::F4()); break;
            case 5: s.factors.push_back(IrreducibleType::G2()); break;
            default: s.factors.push_back(IrreducibleType::I2(3 + static_cast<unsigned>(rank(rng)) * 5)); break;
            }
        }
        CHECK(parse_type_spec(s.to_string()) == s);
    }
}

TEST_CASE("degrees")
{
    CHECK(degrees(IrreducibleType::A(2)) == std::vector<unsigned>{2, 3});
    CHECK(degrees(IrreducibleType::D(4)) == std::vector<unsigned>{2, 4, 4, 6});
    CHECK(degrees(IrreducibleType::F4()) == std::vector<unsigned>{2, 6, 8, 12});
    CHECK(degrees(IrreducibleType::G2()) == std::vector<unsigned>{2, 6});
    CHECK(degrees(IrreducibleType::I2(7)) == std::vector<unsigned>{2, 7});
    CHECK(degrees(IrreducibleType::E(6)) == std::vector<unsigned>{2, 5, 6, 8, 9, 12});
    CHECK(degrees(IrreducibleType::E(7)) == std::vector<unsigned>{2, 6, 8, 10, 12, 14, 18});
    CHECK(degrees(IrreducibleType::E(8)) == std::vector<unsigned>{2, 8, 12, 14, 18, 20, 24, 30});
    CHECK(degrees(IrreducibleType::B(3)) == std::vector<unsigned>{2, 4, 6});
    CHECK(reflection_count(IrreducibleType::E(8)) == 120);
    CHECK(reflection_count(IrreducibleType::A(4)) == 10);
}

TEST_CASE("group orders")
{
    CHECK(group_order(IrreducibleType::B(4)) == 384);
    CHECK(group_order(IrreducibleType::E(6)) == 51840);
    CHECK(group_order(IrreducibleType::F4()) == 1152);
    CHECK(group_order(IrreducibleType::E(8)) == 696729600);
    CHECK(group_order(IrreducibleType::D(4)) == 192);
    CHECK(group_order(WeylSpec{}) == 1);
    CHECK(group_order(parse_type_spec("A1xA1xG2")) == 48);
    for (unsigned n = 2; n <= 20; ++n) {
        BigInt fact = 1;
        for (unsigned k = 2; k <= n; ++k)
            fact *= k;
        CHECK(group_order(IrreducibleType::B(n)) == (BigInt(1) << n) * fact);
        CHECK(group_order(IrreducibleType::D(n)) == (BigInt(1) << (n - 1)) * fact);
        CHECK(group_order(IrreducibleType::A(n - 1)) == fact);
    }
}

TEST_CASE("Poincare polynomial examples")
{
    CHECK(poincare_polynomial(IrreducibleType::A(2)) == IntPolynomial{1, 2, 2, 1});
    CHECK(poincare_polynomial(IrreducibleType::B(2)) == IntPolynomial{1, 2, 2, 2, 1});
    const IntPolynomial d4 = poincare_polynomial(IrreducibleType::D(4));
    CHECK(d4.degree() == 12);
    CHECK(eval_at_integer(d4, 1) == 192);
    CHECK(poincare_polynomial(WeylSpec{}) == IntPolynomial{1});
    CHECK(poincare_polynomial(parse_type_spec("A1xA1")) == IntPolynomial{1, 2, 1});
}

TEST_CASE("Poincare polynomial agrees with permutation models")
{
    for (unsigned n = 2; n <= 7; ++n) {
        INFO("A" << n - 1);
        CHECK(poincare_polynomial(IrreducibleType::A(n - 1)) == permutation_lengths(n, Model::A));
    }
    for (unsigned n = 2; n <= 6; ++n) {
        INFO("B" << n);
        CHECK(poincare_polynomial(IrreducibleType::B(n)) == permutation_lengths(n, Model::B));
    }
    for (unsigned n = 2; n <= 6; ++n) {
        INFO("D" << n);
        CHECK(poincare_polynomial(IrreducibleType::D(n)) == permutation_lengths(n, Model::D));
    }
    for (unsigned m = 3; m <= 20; ++m) {
        std::vector<long long> c(m + 1, 2);
        c.front() = c.back() = 1;
        std::vector<BigInt> b(c.begin(), c.end());
        CHECK(poincare_polynomial(IrreducibleType::I2(m)) == IntPolynomial(std::move(b)));
    }
}

TEST_CASE("Poincare polynomial invariants")
{
    const std::vector<IrreducibleType> types = {IrreducibleType::E(6), IrreducibleType::E(7),
                                                IrreducibleType::E(8), IrreducibleType::F4(),
                                                IrreducibleType::G2(), IrreducibleType::B(9),
                                                IrreducibleType::D(11), IrreducibleType::A(15)};
    for (const auto& t : types) {
        const IntPolynomial p = poincare_polynomial(t);
        CHECK(p.is_palindromic());
        CHECK(eval_at_integer(p, 1) == group_order(t));
        CHECK(p.degree() == static_cast<long>(reflection_count(t)));
    }
}
