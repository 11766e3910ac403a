#pragma once

// Quadratic forms over GF(2), brute-force scale (dim <= 24).

#include <cstdint>
#include <vector>

namespace hecke {

/// q(x) = sum_{i<=j} c_ij x_i x_j over GF(2). Vectors are bitmasks with bit i
/// holding x_i.
class F2QuadraticForm {
public:
    static constexpr unsigned kMaxDim = 24;

    F2QuadraticForm() = default;
    /// Zero form on GF(2)^dim.
    explicit F2QuadraticForm(unsigned dim);

    unsigned dim() const noexcept { return dim_; }
    bool coeff(unsigned i, unsigned j) const;
    /// Sets c_ij for i <= j (arguments are swapped if needed).
    void set_coeff(unsigned i, unsigned j, bool value);

    unsigned eval(std::uint32_t x) const;
    /// Polar form b(x,y) = q(x+y) + q(x) + q(y).
    unsigned polar(std::uint32_t x, std::uint32_t y) const;
    /// Rank of the polar form's Gram matrix.
    unsigned polar_rank() const;

    friend bool operator==(const F2QuadraticForm&, const F2QuadraticForm&) = default;

private:
    unsigned dim_ = 0;
    /// rows_[i] has bit j set iff c_ij = 1 (j >= i).
    std::vector<std::uint32_t> rows_;
};

enum class FormKind {
    E8Mod2,  ///< (x,x)/2 mod 2 on the E8 root lattice mod 2, simple-root basis
    QMinus4, ///< x1x2 + x3^2 + x3x4 + x4^2
    Hyperbolic, ///< x1x2
};

F2QuadraticForm build_form(FormKind kind);

/// Block-diagonal form on GF(2)^{dim a + dim b}.
F2QuadraticForm direct_sum(const F2QuadraticForm& a, const F2QuadraticForm& b);

/// Maximal dimension of a totally singular subspace. The singular part of
/// the polar radical is split off first; hyperbolic planes are then removed
/// one at a time until no nonzero singular vector remains.
unsigned witt_index(const F2QuadraticForm& f);

/// #{x : q(x) = 0}, by exhaustive evaluation.
std::uint64_t zero_count(const F2QuadraticForm& f);

/// For a form with nondegenerate polar form on an even-dimensional space
/// 2k: returns k when the zero count is 2^{2k-1} + 2^{k-1} (plus type) and
/// k-1 when it is 2^{2k-1} - 2^{k-1} (minus type). Throws std::invalid_argument
/// otherwise.
unsigned witt_index_from_zero_count(const F2QuadraticForm& f);

} // namespace hecke
