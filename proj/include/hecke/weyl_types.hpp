#pragma once

// Finite Weyl and dihedral Coxeter types: parsing, fundamental degrees,
// group orders and Poincare polynomials.

#include "hecke/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

enum class Family { A, B, D, E, F, G, I2 };

char family_letter(Family f) noexcept;

/// Bad type-spec text. position() is a 0-based offset into the input.
class SpecError : public std::invalid_argument {
public:
    SpecError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// One irreducible factor. C_n is stored as B_n; G2 keeps its own label even
/// though its Coxeter group is I2(6).
class IrreducibleType {
public:
    /// Throws std::invalid_argument when the rank is out of range.
    static IrreducibleType make(char letter, unsigned rank);
    static IrreducibleType A(unsigned rank) { return make('A', rank); }
    static IrreducibleType B(unsigned rank) { return make('B', rank); }
    static IrreducibleType D(unsigned rank) { return make('D', rank); }
    static IrreducibleType E(unsigned rank) { return make('E', rank); }
    static IrreducibleType F4() { return make('F', 4); }
    static IrreducibleType G2() { return make('G', 2); }
    static IrreducibleType I2(unsigned m);

    Family family() const noexcept { return family_; }
    unsigned rank() const noexcept { return rank_; }
    /// Dihedral parameter; 0 unless family() == Family::I2.
    unsigned dihedral_m() const noexcept { return m_; }

    bool is_exceptional() const noexcept
    {
        return family_ == Family::E || family_ == Family::F;
    }
    /// Crystallographic: every family except I2(m) with m not in {3,4,6}.
    bool is_weyl() const noexcept;

    std::string to_string() const;

    friend bool operator==(const IrreducibleType&, const IrreducibleType&) = default;
    friend auto operator<=>(const IrreducibleType&, const IrreducibleType&) = default;

private:
    IrreducibleType(Family f, unsigned rank, unsigned m) : family_(f), rank_(rank), m_(m) {}
    Family family_;
    unsigned rank_;
    unsigned m_;
};

/// A finite Coxeter group given as a product of irreducible factors. The
/// empty product is the trivial group, written "1".
struct WeylSpec {
    std::vector<IrreducibleType> factors;

    bool empty() const noexcept { return factors.empty(); }
    bool has_family(Family f) const noexcept;
    std::string to_string() const;

    friend bool operator==(const WeylSpec&, const WeylSpec&) = default;
};

/// Grammar (case-insensitive, whitespace ignored):
///   Spec   := "1" | Factor ("x" Factor)*
///   Factor := ("A"|"B"|"C"|"D") INT | "E" ("6"|"7"|"8") | "F4" | "G2" | "I2(" INT ")"
/// Throws SpecError.
WeylSpec parse_type_spec(std::string_view text);

/// Fundamental degrees, ascending.
std::vector<unsigned> degrees(const IrreducibleType& t);

BigInt group_order(const IrreducibleType& t);
BigInt group_order(const WeylSpec& spec);

/// Number of positive roots (reflections): sum of (d_i - 1).
unsigned reflection_count(const IrreducibleType& t);

/// prod over factors and degrees of (x^d - 1)/(x - 1).
IntPolynomial poincare_polynomial(const IrreducibleType& t);
IntPolynomial poincare_polynomial(const WeylSpec& spec);

} // namespace hecke
