#include "hecke/quadratic_form.hpp"

#include "hecke/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace hecke {

F2QuadraticForm::F2QuadraticForm(unsigned dim) : dim_(dim), rows_(dim, 0)
{
    if (dim > kMaxDim)
        throw std::invalid_argument("quadratic form dimension exceeds " + std::to_string(kMaxDim));
}

bool F2QuadraticForm::coeff(unsigned i, unsigned j) const
{
    if (i > j)
        std::swap(i, j);
    return (rows_.at(i) >> j) & 1u;
}

void F2QuadraticForm::set_coeff(unsigned i, unsigned j, bool value)
{
    if (i > j)
        std::swap(i, j);
    if (j >= dim_)
        throw std::out_of_range("quadratic form index out of range");
    if (value)
        rows_[i] |= 1u << j;
    else
        rows_[i] &= ~(1u << j);
}

unsigned F2QuadraticForm::eval(std::uint32_t x) const
{
    unsigned acc = 0;
    for (unsigned i = 0; i < dim_; ++i)
        if ((x >> i) & 1u)
            acc += static_cast<unsigned>(std::popcount(rows_[i] & x));
    return acc & 1u;
}

unsigned F2QuadraticForm::polar(std::uint32_t x, std::uint32_t y) const
{
    return eval(x ^ y) ^ eval(x) ^ eval(y);
}

namespace {

// Basis of span(vs) with distinct leading bits.
std::vector<std::uint32_t> independent_basis(std::vector<std::uint32_t> vs)
{
    std::vector<std::uint32_t> basis;
    for (std::uint32_t v : vs) {
        for (std::uint32_t b : basis)
            if ((v ^ b) < v)
                v ^= b;
        if (v) {
            basis.push_back(v);
            // Keep basis sorted by descending leading bit for the reduction above.
            std::sort(basis.begin(), basis.end(), std::greater<>());
        }
    }
    return basis;
}

std::uint32_t combine(const std::vector<std::uint32_t>& basis, std::uint64_t mask)
{
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((mask >> i) & 1u)
            v ^= basis[i];
    return v;
}

// Kernel of the polar form on the whole space.
std::vector<std::uint32_t> polar_radical(const F2QuadraticForm& f)
{
    const unsigned n = f.dim();
    // Gram rows: gram[i] bit j = b(e_i, e_j). Symmetric, so the kernel is
    // {x : gram * x = 0}.
    std::vector<std::uint32_t> gram(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (f.polar(1u << i, 1u << j))
                gram[i] |= 1u << j;

    // Gaussian elimination to reduced row echelon form.
    std::vector<int> pivot_row_of_col(n, -1);
    unsigned r = 0;
    for (unsigned c = 0; c < n && r < n; ++c) {
        unsigned p = r;
        while (p < n && !((gram[p] >> c) & 1u))
            ++p;
        if (p == n)
            continue;
        std::swap(gram[p], gram[r]);
        for (unsigned k = 0; k < n; ++k)
            if (k != r && ((gram[k] >> c) & 1u))
                gram[k] ^= gram[r];
        pivot_row_of_col[c] = static_cast<int>(r);
        ++r;
    }
    std::vector<std::uint32_t> kernel;
    for (unsigned free_col = 0; free_col < n; ++free_col) {
        if (pivot_row_of_col[free_col] >= 0)
            continue;
        std::uint32_t v = 1u << free_col;
        for (unsigned c = 0; c < n; ++c) {
            const int pr = pivot_row_of_col[c];
            if (pr >= 0 && ((gram[static_cast<unsigned>(pr)] >> free_col) & 1u))
                v |= 1u << c;
        }
        kernel.push_back(v);
    }
    return kernel;
}

} // namespace

unsigned F2QuadraticForm::polar_rank() const
{
    return dim_ - static_cast<unsigned>(polar_radical(*this).size());
}

F2QuadraticForm build_form(FormKind kind)
{
    switch (kind) {
    case FormKind::E8Mod2: {
        // (x,x)/2 = sum x_i^2 + sum_{i<j} A_ij x_i x_j with A the Gram matrix
        // normalised to (alpha_i, alpha_i) = 2.
        const IntMatrix gram = cartan_matrix(IrreducibleType::E(8));
        F2QuadraticForm f(8);
        for (unsigned i = 0; i < 8; ++i) {
            f.set_coeff(i, i, true);
            for (unsigned j = i + 1; j < 8; ++j)
                f.set_coeff(i, j, gram.at(i, j) % 2 != 0);
        }
        return f;
    }
    case FormKind::QMinus4: {
        F2QuadraticForm f(4);
        f.set_coeff(0, 1, true);
        f.set_coeff(2, 2, true);
        f.set_coeff(2, 3, true);
        f.set_coeff(3, 3, true);
        return f;
    }
    case FormKind::Hyperbolic: {
        F2QuadraticForm f(2);
        f.set_coeff(0, 1, true);
        return f;
    }
    }
    throw std::invalid_argument("unknown form kind");
}

F2QuadraticForm direct_sum(const F2QuadraticForm& a, const F2QuadraticForm& b)
{
    F2QuadraticForm s(a.dim() + b.dim());
    for (unsigned i = 0; i < a.dim(); ++i)
        for (unsigned j = i; j < a.dim(); ++j)
            s.set_coeff(i, j, a.coeff(i, j));
    for (unsigned i = 0; i < b.dim(); ++i)
        for (unsigned j = i; j < b.dim(); ++j)
            s.set_coeff(a.dim() + i, a.dim() + j, b.coeff(i, j));
    return s;
}

unsigned witt_index(const F2QuadraticForm& f)
{
    const unsigned n = f.dim();

    // On the polar radical q is additive, so its singular vectors form a
    // subspace of codimension <= 1 there. That subspace is totally singular
    // and orthogonal to everything, and contributes its full dimension.
    std::vector<std::uint32_t> rad = polar_radical(f);
    std::vector<std::uint32_t> rad0;
    std::uint32_t anisotropic = 0;
    for (std::uint32_t v : rad)
        if (f.eval(v)) {
            anisotropic = v;
            break;
        }
    for (std::uint32_t v : rad) {
        if (v == anisotropic)
            continue;
        rad0.push_back(f.eval(v) ? v ^ anisotropic : v);
    }
    unsigned index = static_cast<unsigned>(rad0.size());

    // Complement of rad0 spanned by standard vectors.
    std::vector<std::uint32_t> echelon = independent_basis(rad0);
    std::vector<std::uint32_t> space;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<std::uint32_t> trial = echelon;
        trial.push_back(1u << i);
        auto grown = independent_basis(trial);
        if (grown.size() > echelon.size()) {
            echelon = std::move(grown);
            space.push_back(1u << i);
        }
    }

    while (!space.empty()) {
        std::uint32_t u = 0;
        const std::uint64_t combos = std::uint64_t{1} << space.size();
        for (std::uint64_t mask = 1; mask < combos; ++mask) {
            const std::uint32_t x = combine(space, mask);
            if (f.eval(x) == 0) {
                u = x;
                break;
            }
        }
        if (u == 0)
            break;

        std::uint32_t v = 0;
        for (std::uint32_t s : space)
            if (f.polar(u, s)) {
                v = s;
                break;
            }
        if (v == 0)
            throw std::logic_error("singular vector without a hyperbolic partner");

        // Project onto the orthogonal complement of the plane <u, v>.
        std::vector<std::uint32_t> rest;
        for (std::uint32_t s : space) {
            std::uint32_t p = s;
            if (f.polar(s, v))
                p ^= u;
            if (f.polar(s, u))
                p ^= v;
            if (p)
                rest.push_back(p);
        }
        space = independent_basis(rest);
        ++index;
    }
    return index;
}

std::uint64_t zero_count(const F2QuadraticForm& f)
{
    std::uint64_t zeros = 0;
    const std::uint64_t total = std::uint64_t{1} << f.dim();
    for (std::uint64_t x = 0; x < total; ++x)
        zeros += f.eval(static_cast<std::uint32_t>(x)) == 0;
    return zeros;
}

unsigned witt_index_from_zero_count(const F2QuadraticForm& f)
{
    if (f.dim() == 0 || f.dim() % 2 != 0 || f.polar_rank() != f.dim())
        throw std::invalid_argument("zero-count classification needs a nondegenerate even-dimensional form");
    const unsigned k = f.dim() / 2;
    const std::uint64_t half = std::uint64_t{1} << (2 * k - 1);
    const std::uint64_t delta = std::uint64_t{1} << (k - 1);
    const std::uint64_t zeros = zero_count(f);
    if (zeros == half + delta)
        return k;
    if (zeros == half - delta)
        return k - 1;
    throw std::logic_error("zero count matches neither plus nor minus type");
}

} // namespace hecke
