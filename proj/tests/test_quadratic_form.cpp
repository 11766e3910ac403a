#include "hecke/quadratic_form.hpp"

#include "doctest.h"

#include <bit>
#include <random>
#include <stdexcept>

using namespace hecke;

namespace {

// Largest totally singular subspace by exhaustive search: a basis of
// singular, pairwise orthogonal vectors, each larger than the previous one
// and outside the span so far.
unsigned dfs_witt(const F2QuadraticForm& f, std::vector<std::uint32_t>& basis, std::vector<bool>& span,
                  std::uint32_t from)
{
    unsigned best = static_cast<unsigned>(basis.size());
    const std::uint32_t size = 1u << f.dim();
    for (std::uint32_t v = from; v < size; ++v) {
        if (span[v] || f.eval(v) != 0)
            continue;
        bool orthogonal = true;
        for (std::uint32_t b : basis)
            orthogonal = orthogonal && f.polar(v, b) == 0;
        if (!orthogonal)
            continue;
        std::vector<bool> grown = span;
        for (std::uint32_t s = 0; s < size; ++s)
            if (span[s])
                grown[s ^ v] = true;
        basis.push_back(v);
        best = std::max(best, dfs_witt(f, basis, grown, v + 1));
        basis.pop_back();
    }
    return best;
}

unsigned brute_witt(const F2QuadraticForm& f)
{
    std::vector<std::uint32_t> basis;
    std::vector<bool> span(std::size_t{1} << f.dim(), false);
    span[0] = true;
    return dfs_witt(f, basis, span, 1);
}

F2QuadraticForm random_form(std::mt19937_64& rng, unsigned dim)
{
    F2QuadraticForm f(dim);
    std::bernoulli_distribution coin(0.5);
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = i; j < dim; ++j)
            f.set_coeff(i, j, coin(rng));
    return f;
}

std::uint32_t bit(unsigned i)
{
    return 1u << i;
}

} // namespace

TEST_CASE("building and evaluating forms")
{
    const F2QuadraticForm qm = build_form(FormKind::QMinus4);
    CHECK(qm.dim() == 4);
    CHECK(qm.eval(bit(0) | bit(1)) == 1);
    CHECK(qm.eval(bit(2)) == 1);
    CHECK(qm.eval(bit(0)) == 0);
    CHECK(qm.eval(0) == 0);

    const F2QuadraticForm e8 = build_form(FormKind::E8Mod2);
    CHECK(e8.dim() == 8);
    for (unsigned i = 0; i < 8; ++i)
        CHECK(e8.eval(bit(i)) == 1);
    CHECK(e8.eval(0) == 0);
    CHECK(e8.polar_rank() == 8);

    const F2QuadraticForm h = build_form(FormKind::Hyperbolic);
    CHECK(h.eval(bit(0) | bit(1)) == 1);
    CHECK(h.eval(bit(0)) == 0);

    F2QuadraticForm f(3);
    f.set_coeff(2, 0, true);
    CHECK(f.coeff(0, 2));
    CHECK_THROWS(f.set_coeff(3, 0, true));
    CHECK_THROWS(F2QuadraticForm(F2QuadraticForm::kMaxDim + 1));
}

TEST_CASE("polar form is bilinear and alternating")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const F2QuadraticForm f = random_form(rng, 6);
        for (std::uint32_t x = 0; x < 64; x += 3)
            for (std::uint32_t y = 0; y < 64; y += 5) {
                CHECK(f.polar(x, x) == 0);
                CHECK(f.polar(x, y) == f.polar(y, x));
                CHECK((f.polar(x ^ 9, y) ^ f.polar(9, y)) == f.polar(x, y));
            }
    }
}

TEST_CASE("direct sums")
{
    const F2QuadraticForm qm = build_form(FormKind::QMinus4);
    const F2QuadraticForm qq = direct_sum(qm, qm);
    CHECK(qq.dim() == 8);
    for (std::uint32_t x = 0; x < 16; ++x)
        for (std::uint32_t y = 0; y < 16; ++y)
            CHECK(qq.eval(x | (y << 4)) == (qm.eval(x) ^ qm.eval(y)));
}

TEST_CASE("zero counts")
{
    CHECK(zero_count(build_form(FormKind::E8Mod2)) == 136);
    CHECK(zero_count(build_form(FormKind::QMinus4)) == 6);
    CHECK(zero_count(F2QuadraticForm(1)) == 2);
    CHECK(zero_count(build_form(FormKind::Hyperbolic)) == 3);
}

TEST_CASE("Witt index examples")
{
    const F2QuadraticForm qm = build_form(FormKind::QMinus4);
    CHECK(witt_index(build_form(FormKind::E8Mod2)) == 4);
    CHECK(witt_index(direct_sum(qm, qm)) == 4);
    CHECK(witt_index(qm) == 1);
    CHECK(witt_index(build_form(FormKind::Hyperbolic)) == 1);
    CHECK(witt_index(F2QuadraticForm(3)) == 3);
    CHECK(witt_index_from_zero_count(build_form(FormKind::E8Mod2)) == 4);
    CHECK(witt_index_from_zero_count(qm) == 1);
    CHECK_THROWS_AS(witt_index_from_zero_count(F2QuadraticForm(2)), std::invalid_argument);
}

TEST_CASE("Witt index agrees with exhaustive subspace search")
{
    std::mt19937_64 rng(17);
    for (unsigned dim = 1; dim <= 7; ++dim)
        for (int i = 0; i < 25; ++i) {
            const F2QuadraticForm f = random_form(rng, dim);
            CHECK(witt_index(f) == brute_witt(f));
        }
    CHECK(brute_witt(build_form(FormKind::E8Mod2)) == 4);
}

TEST_CASE("Witt index agrees with the zero-count type on nondegenerate forms")
{
    std::mt19937_64 rng(23);
    int tested = 0;
    for (unsigned dim = 2; dim <= 12; dim += 2)
        for (int i = 0; i < 60; ++i) {
            const F2QuadraticForm f = random_form(rng, dim);
            if (f.polar_rank() != dim)
                continue;
            ++tested;
            CHECK(witt_index(f) == witt_index_from_zero_count(f));
        }
    CHECK(tested > 50);
}
