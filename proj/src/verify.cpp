#include "hecke/verify.hpp"

#include "hecke/coxeter.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/quadratic_form.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hecke {

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {
        "poincare-oracle", "multiplicity-oracle", "sylow-oracle",
        "morita-consistency", "kunneth-bound", "witt-appendix",
    };
    return names;
}

std::vector<IrreducibleType> enumerable_types(const VerifyLimits& limits)
{
    std::vector<IrreducibleType> all;
    for (unsigned r = 1; r <= 9; ++r)
        all.push_back(IrreducibleType::A(r));
    for (unsigned r = 2; r <= 7; ++r)
        all.push_back(IrreducibleType::B(r));
    for (unsigned r = 2; r <= 8; ++r)
        all.push_back(IrreducibleType::D(r));
    all.push_back(IrreducibleType::G2());
    all.push_back(IrreducibleType::F4());
    all.push_back(IrreducibleType::E(6));
    if (limits.include_e7)
        all.push_back(IrreducibleType::E(7));
    for (unsigned m = 3; m <= 60; ++m)
        all.push_back(IrreducibleType::I2(m));

    std::erase_if(all, [&](const IrreducibleType& t) { return group_order(t) > limits.max_order; });
    return all;
}

Status morita_generic_b_status(unsigned n, unsigned e)
{
    auto type_a = [e](unsigned symbols) {
        return symbols >= 2 ? classify_one_param_irreducible(IrreducibleType::A(symbols - 1), e).status
                            : Status::Semisimple;
    };
    Status worst = Status::Semisimple;
    for (unsigned m = 0; m <= n; ++m) {
        const Status pair[] = {type_a(m), type_a(n - m)};
        const Status s = combine_factors(pair);
        if (static_cast<int>(s) > static_cast<int>(worst))
            worst = s;
    }
    return worst;
}

namespace {

template <class... Ts>
std::string cat(const Ts&... parts)
{
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

void check(SuiteResult& r, bool ok, const std::string& what)
{
    ++r.checks;
    if (!ok)
        r.failures.push_back(what);
}

void note(const Progress& p, const std::string& msg)
{
    if (p)
        p(msg);
}

SuiteResult poincare_oracle(const VerifyLimits& lim, const Progress& progress)
{
    SuiteResult r{"poincare-oracle", 0, {}};
    for (const auto& t : enumerable_types(lim)) {
        note(progress, "enumerating " + t.to_string());
        const GroupTable g = generate_group(realize(t), lim.max_order, false);
        const IntPolynomial brute = poincare_bruteforce(g);
        const IntPolynomial formula = poincare_polynomial(t);
        check(r, brute == formula,
              cat(t.to_string(), ": BFS ", brute.to_string(), " != degree product ", formula.to_string()));
        check(r, brute.is_palindromic(), cat(t.to_string(), ": length generating function not palindromic"));
        check(r, g.length_histogram().back() == 1,
              cat(t.to_string(), ": longest element is not unique"));
    }
    return r;
}

SuiteResult multiplicity_oracle(const VerifyLimits& lim, const Progress& progress)
{
    SuiteResult r{"multiplicity-oracle", 0, {}};
    std::vector<IrreducibleType> types;
    for (unsigned n = 1; n <= lim.max_rank; ++n) {
        types.push_back(IrreducibleType::A(n));
        if (n >= 2) {
            types.push_back(IrreducibleType::B(n));
            types.push_back(IrreducibleType::D(n));
        }
    }
    for (unsigned n : {6u, 7u, 8u})
        if (n <= lim.max_rank)
            types.push_back(IrreducibleType::E(n));
    if (lim.max_rank >= 4)
        types.push_back(IrreducibleType::F4());
    types.push_back(IrreducibleType::G2());
    for (unsigned m = 3; m <= 60; ++m)
        types.push_back(IrreducibleType::I2(m));

    for (const auto& t : types) {
        note(progress, "multiplicities for " + t.to_string());
        const IntPolynomial p = poincare_polynomial(t);
        const auto d = degrees(t);
        for (unsigned e = 2; e <= lim.max_e; ++e) {
            const unsigned by_count = degree_count_multiplicity(d, e);
            const unsigned by_division = phi_multiplicity(p, e);
            check(r, by_count == by_division,
                  cat(t.to_string(), ", e=", e, ": degree count ", by_count, " != cyclotomic division ",
                      by_division));
        }
    }
    return r;
}

std::uint64_t l_part(std::uint64_t n, unsigned l)
{
    std::uint64_t p = 1;
    while (n % l == 0) {
        n /= l;
        p *= l;
    }
    return p;
}

SuiteResult sylow_oracle(const VerifyLimits& lim, const Progress& progress)
{
    SuiteResult r{"sylow-oracle", 0, {}};
    const unsigned primes[] = {2, 3, 5, 7, 11, 13};
    for (const auto& t : enumerable_types(lim)) {
        if (!t.is_weyl())
            continue;
        note(progress, "element orders of " + t.to_string());
        const GroupTable g = generate_group(realize(t), lim.max_order);
        for (unsigned l : primes) {
            const SylowReport s = sylow_is_cyclic(g, l);
            const bool l2_free = g.order() % (std::uint64_t{l} * l) != 0;
            check(r, s.cyclic == l2_free,
                  cat(t.to_string(), ", l=", l, ": cyclic Sylow ", s.cyclic, " but l^2 | |W| is ",
                      !l2_free, " (max l-order ", s.max_l_order, ")"));
        }
        if (t == IrreducibleType::F4()) {
            const SylowReport s3 = sylow_is_cyclic(g, 3);
            check(r, !s3.cyclic && s3.max_l_order == 3 && l_part(g.order(), 3) == 9,
                  "F4, l=3: expected non-cyclic Sylow with maximal 3-element order 3");
            check(r, !g.order_census().contains(9), "F4 has an element of order 9");
            check(r, !g.order_census().contains(128), "F4 has an element of order 2^7");
        }
        if (t == IrreducibleType::G2()) {
            check(r, g.order() == 12, "G2 is not of order 12");
            check(r, !sylow_is_cyclic(g, 2).cyclic, "G2, l=2: Sylow subgroup is cyclic");
        }
    }
    return r;
}

SuiteResult morita_consistency(const VerifyLimits& lim, const Progress&)
{
    SuiteResult r{"morita-consistency", 0, {}};
    for (unsigned e = 2; e <= lim.morita_max_e; ++e)
        for (unsigned n = 2; n <= lim.morita_max_n; ++n) {
            const Status formula = classify_two_param_B(n, e, GenericQ{}).status;
            const Status summands = morita_generic_b_status(n, e);
            check(r, formula == summands,
                  cat("n=", n, ", e=", e, ": closed form ", to_string(formula), " vs Morita summands ",
                      to_string(summands)));
            check(r, (formula != Status::Infinite) == (n < 2 * e),
                  cat("n=", n, ", e=", e, ": finiteness differs from n < 2e"));
        }
    return r;
}

SuiteResult kunneth_bound(const VerifyLimits& lim, const Progress&)
{
    SuiteResult r{"kunneth-bound", 0, {}};
    std::mt19937_64 rng(lim.seed);
    for (unsigned pair = 0; pair < lim.kunneth_pairs; ++pair) {
        const std::uint64_t c = std::uniform_int_distribution<std::uint64_t>(1, 10)(rng);
        std::uniform_int_distribution<std::uint64_t> value(1, c);
        std::vector<std::uint64_t> a(lim.kunneth_length), b(lim.kunneth_length);
        for (auto& v : a)
            v = value(rng);
        for (auto& v : b)
            v = value(rng);
        const DimensionSequence conv = kunneth_convolve(DimensionSequence(a), DimensionSequence(b));
        for (std::size_t t = 0; t < conv.size(); ++t)
            check(r, t + 1 <= conv[t] && conv[t] <= c * c * (t + 1),
                  cat("pair ", pair, ", C=", c, ", t=", t, ": value ", conv[t], " outside [t+1, C^2(t+1)]"));
    }
    for (std::uint64_t c = 1; c <= 10; ++c) {
        const DimensionSequence k(std::vector<std::uint64_t>(lim.kunneth_length, c));
        const unsigned cx = complexity_upper_bound(kunneth_convolve(k, k));
        check(r, cx == 2, cat("constant ", c, " convolved with itself: complexity ", cx, " != 2"));
    }
    return r;
}

SuiteResult witt_e8_form(const VerifyLimits&, const Progress&)
{
    SuiteResult r{"witt-appendix", 0, {}};
    const F2QuadraticForm e8 = build_form(FormKind::E8Mod2);
    const F2QuadraticForm qm = build_form(FormKind::QMinus4);
    const F2QuadraticForm qq = direct_sum(qm, qm);
    check(r, zero_count(e8) == 136, cat("zero_count(E8 mod 2) = ", zero_count(e8), ", expected 136"));
    check(r, witt_index(e8) == 4, cat("witt_index(E8 mod 2) = ", witt_index(e8), ", expected 4"));
    check(r, witt_index(qq) == 4, cat("witt_index(q' + q') = ", witt_index(qq), ", expected 4"));
    check(r, witt_index(qm) == 1, cat("witt_index(q') = ", witt_index(qm), ", expected 1"));
    check(r, witt_index_from_zero_count(e8) == 4, "E8 mod 2 is not of plus type by zero count");
    check(r, zero_count(qm) == 6, cat("zero_count(q') = ", zero_count(qm), ", expected 6"));
    return r;
}

} // namespace

SuiteResult run_suite(const std::string& name, const VerifyLimits& limits, const Progress& progress)
{
    if (name == "poincare-oracle")
        return poincare_oracle(limits, progress);
    if (name == "multiplicity-oracle")
        return multiplicity_oracle(limits, progress);
    if (name == "sylow-oracle")
        return sylow_oracle(limits, progress);
    if (name == "morita-consistency")
        return morita_consistency(limits, progress);
    if (name == "kunneth-bound")
        return kunneth_bound(limits, progress);
    if (name == "witt-appendix")
        return witt_e8_form(limits, progress);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

} // namespace hecke
