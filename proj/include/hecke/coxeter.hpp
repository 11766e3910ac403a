#pragma once

// Brute-force realization of finite Coxeter groups.
//
// Crystallographic types act on the root lattice through integer reflection
// matrices built from the Cartan matrix. Enumeration runs a breadth-first
// search of the Cayley graph with respect to the simple reflections, so the
// BFS layer of an element is its Coxeter length. Non-crystallographic I2(m)
// uses the action x -> +-x + b of the dihedral group on Z/m instead.

#include "hecke/polynomial.hpp"
#include "hecke/weyl_types.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hecke {

/// Small dense integer matrix, row-major.
struct IntMatrix {
    unsigned n = 0;
    std::vector<int> entries;

    static IntMatrix identity(unsigned n);
    int& at(unsigned r, unsigned c) { return entries[r * n + c]; }
    int at(unsigned r, unsigned c) const { return entries[r * n + c]; }
    IntMatrix transposed() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Cartan matrix with C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering.
/// Only defined for crystallographic types.
IntMatrix cartan_matrix(const IrreducibleType& t);

/// Coxeter matrix m_ij (m_ii = 1).
IntMatrix coxeter_matrix(const IrreducibleType& t);

struct ReflectionRealization {
    IrreducibleType type;
    unsigned rank = 0;
    /// Cartan matrix; empty for the abstract dihedral encoding.
    IntMatrix cartan;
    /// Simple reflections on the root lattice in the simple-root basis:
    /// s_i(v) = v - <v, alpha_i^vee> alpha_i. Empty for the abstract dihedral
    /// encoding.
    std::vector<IntMatrix> generator_matrices;

    bool is_abstract_dihedral() const noexcept { return generator_matrices.empty(); }
};

/// Matrix realization for Weyl types (I2(3), I2(4), I2(6) included);
/// every other I2(m) falls back to the abstract dihedral encoding.
ReflectionRealization realize(const IrreducibleType& t);

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(std::uint64_t cap);
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t cap_;
};

inline constexpr std::uint64_t kDefaultElementCap = 4'000'000;
inline constexpr unsigned kMaxEngineRank = 16;

/// Canonical encoding of a group element. For matrix realizations this is
/// the image of the regular vector (1,...,1), written in the fundamental
/// coweight basis, under the transposed generator matrices; W acts simply
/// transitively on that regular orbit, so the encoding is injective.
/// Coordinate i is negative exactly when s_i is a left descent. For the
/// abstract dihedral encoding it is the pair (f(0), f(1)) of the affine map
/// f on Z/m.
using Element = std::array<std::int8_t, kMaxEngineRank>;

/// Complete enumeration of a finite Coxeter group. Immutable once built.
class GroupTable {
public:
    const ReflectionRealization& realization() const noexcept { return realization_; }
    std::uint64_t order() const noexcept { return keys_.size(); }
    /// Length of the longest element.
    unsigned max_length() const noexcept { return static_cast<unsigned>(layer_start_.size()) - 2; }

    Element identity() const;
    /// Number of elements of each length.
    std::vector<std::uint64_t> length_histogram() const;
    std::optional<unsigned> length_of(const Element& w) const;
    bool contains(const Element& w) const { return length_of(w).has_value(); }

    /// Element obtained as the product s_{word[0]} s_{word[1]} ... of simple
    /// reflections.
    Element element_from_word(std::span<const unsigned> word) const;

    bool has_orders() const noexcept { return has_orders_; }
    /// Census of element orders: order -> number of elements. Empty when the
    /// table was built without orders.
    const std::map<unsigned, std::uint64_t>& order_census() const noexcept { return census_; }
    /// Some element of the given order, if any.
    std::optional<Element> element_with_order(unsigned k) const;

    /// Element by enumeration index (layer by layer, sorted inside a layer).
    Element element(std::uint64_t index) const;
    unsigned order_of_index(std::uint64_t index) const { return orders_.at(index); }

private:
    friend GroupTable generate_group(const ReflectionRealization&, std::uint64_t, bool);
    friend unsigned element_order(const GroupTable&, const Element&);
    std::optional<std::uint64_t> index_of(const Element& w) const;

    explicit GroupTable(ReflectionRealization r) : realization_(std::move(r)) {}

    ReflectionRealization realization_;
    /// Keys packed big-endian with the sign bit of every byte flipped, so that
    /// integer order agrees with the lexicographic order of Element.
    std::vector<unsigned __int128> keys_;
    std::vector<std::uint8_t> orders_;
    /// keys_[layer_start_[k] .. layer_start_[k+1]) holds the elements of length k.
    std::vector<std::uint64_t> layer_start_;
    std::map<unsigned, std::uint64_t> census_;
    bool has_orders_ = true;
};

/// BFS over the Cayley graph. Throws CapExceeded once more than element_cap
/// elements have been found. Element orders cost about as much as the
/// enumeration itself and can be skipped.
GroupTable generate_group(const ReflectionRealization& r,
                          std::uint64_t element_cap = kDefaultElementCap, bool with_orders = true);

/// sum_w x^{l(w)} read off the BFS layers.
IntPolynomial poincare_bruteforce(const GroupTable& g);

/// Least k >= 1 with w^k = 1. Throws std::invalid_argument if w is not in g
/// and std::logic_error if g was built without orders.
unsigned element_order(const GroupTable& g, const Element& w);

struct SylowReport {
    bool cyclic = false;
    unsigned prime = 0;
    /// Exponent a of the exact l-part l^a of |W|.
    unsigned exponent = 0;
    /// Largest l-power that occurs as the l-part of an element order.
    std::uint64_t max_l_order = 1;
    /// An element whose order has l-part max_l_order.
    Element witness{};
};

/// Sylow l-subgroups are cyclic iff some element has order divisible by the
/// full l-part l^a of |W|: the l-part of such an element's cyclic group is a
/// Sylow subgroup, and a cyclic Sylow subgroup has a generator of order l^a.
SylowReport sylow_is_cyclic(const GroupTable& g, unsigned l);

} // namespace hecke
