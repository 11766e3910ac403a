#pragma once

// Exact integer polynomials and cyclotomic divisibility.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial with arbitrary-precision integer coefficients, lowest
/// degree first. The coefficient list never ends in a zero; the zero
/// polynomial is the empty list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, std::size_t degree);
    /// 1 + x + ... + x^{n-1}, i.e. (x^n - 1)/(x - 1).
    static IntPolynomial geometric(std::size_t n);

    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coefficient(std::size_t i) const;
    const BigInt& leading() const;

    bool is_palindromic() const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Human-readable sum, e.g. "1 + 2x + 2x^2 + x^3".
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// Thrown by poly_exact_div when the divisor does not divide over the integers.
class NotDivisible : public std::runtime_error {
public:
    explicit NotDivisible(IntPolynomial remainder);
    const IntPolynomial& remainder() const noexcept { return remainder_; }

private:
    IntPolynomial remainder_;
};

struct Division {
    IntPolynomial quotient;
    /// What is left when integer long division stops: either of degree below
    /// the divisor, or with a leading coefficient the divisor's leading
    /// coefficient does not divide.
    IntPolynomial remainder;
    bool exact() const noexcept { return remainder.is_zero(); }
};

/// Long division over Z. Throws std::domain_error on a zero divisor.
Division poly_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient when b divides a over Z, std::nullopt otherwise.
std::optional<IntPolynomial> try_exact_div(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient when b divides a over Z; throws NotDivisible otherwise.
IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b);

/// d-th cyclotomic polynomial, obtained as (x^d - 1) divided exactly by the
/// cyclotomic polynomials of the proper divisors of d. Results for d up to
/// cyclotomic_memo_bound() are cached; the cache is safe for concurrent use.
IntPolynomial cyclotomic(std::uint32_t d);

std::uint32_t cyclotomic_memo_bound() noexcept;
/// Changes the cache bound. Already cached entries are kept.
void set_cyclotomic_memo_bound(std::uint32_t bound);

/// Largest k with cyclotomic(e)^k dividing p, by repeated exact division.
unsigned phi_multiplicity(const IntPolynomial& p, std::uint32_t e);

/// #{i : e | d_i}. Equals phi_multiplicity of prod (x^{d_i}-1)/(x-1).
unsigned degree_count_multiplicity(std::span<const unsigned> degrees, std::uint32_t e);

BigInt eval_at_integer(const IntPolynomial& p, const BigInt& v);

} // namespace hecke
