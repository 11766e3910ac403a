#include "hecke/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace hecke {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c)
{
    return IntPolynomial(std::vector<BigInt>{c});
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree)
{
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::geometric(std::size_t n)
{
    return IntPolynomial(std::vector<BigInt>(n, BigInt(1)));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

const BigInt& IntPolynomial::leading() const
{
    if (coeffs_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool IntPolynomial::is_palindromic() const
{
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o)
{
    *this = *this * o;
    return *this;
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0)
            continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != 1)
            os << mag;
        if (i >= 1)
            os << 'x';
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b)
{
    return a * b;
}

NotDivisible::NotDivisible(IntPolynomial remainder)
    : std::runtime_error("polynomial division is not exact, remainder " + remainder.to_string())
    , remainder_(std::move(remainder))
{
}

Division poly_divide(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");

    std::vector<BigInt> rem = a.coefficients();
    const auto& div = b.coefficients();
    const std::size_t db = div.size() - 1;
    const BigInt& lead = div.back();

    if (rem.size() <= db)
        return {IntPolynomial{}, a};

    std::vector<BigInt> quot(rem.size() - db);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0)
            continue;
        BigInt q, r;
        boost::multiprecision::divide_qr(rem[k], lead, q, r);
        if (r != 0)
            // Not integral; what remains is reported as the remainder.
            return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
        quot[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j] -= q * div[j];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> try_exact_div(const IntPolynomial& a, const IntPolynomial& b)
{
    Division d = poly_divide(a, b);
    if (!d.exact())
        return std::nullopt;
    return std::move(d.quotient);
}

IntPolynomial poly_exact_div(const IntPolynomial& a, const IntPolynomial& b)
{
    Division d = poly_divide(a, b);
    if (!d.exact())
        throw NotDivisible(std::move(d.remainder));
    return std::move(d.quotient);
}

namespace {

struct CyclotomicMemo {
    std::shared_mutex mutex;
    std::unordered_map<std::uint32_t, IntPolynomial> table;
    std::atomic<std::uint32_t> bound{512};
};

CyclotomicMemo& memo()
{
    static CyclotomicMemo m;
    return m;
}

IntPolynomial compute_cyclotomic(std::uint32_t d)
{
    // x^d - 1
    IntPolynomial p = IntPolynomial::monomial(1, d) - IntPolynomial::constant(1);
    for (std::uint32_t k = 1; k < d; ++k) {
        if (d % k == 0)
            p = poly_exact_div(p, cyclotomic(k));
    }
    return p;
}

} // namespace

std::uint32_t cyclotomic_memo_bound() noexcept
{
    return memo().bound.load();
}

void set_cyclotomic_memo_bound(std::uint32_t bound)
{
    memo().bound.store(bound);
}

IntPolynomial cyclotomic(std::uint32_t d)
{
    if (d == 0)
        throw std::invalid_argument("cyclotomic polynomial index must be positive");
    auto& m = memo();
    const bool cacheable = d <= m.bound.load();
    if (cacheable) {
        std::shared_lock lock(m.mutex);
        if (auto it = m.table.find(d); it != m.table.end())
            return it->second;
    }
    IntPolynomial p = compute_cyclotomic(d);
    if (cacheable) {
        // Concurrent computations of the same entry produce equal values.
        std::unique_lock lock(m.mutex);
        m.table.try_emplace(d, p);
    }
    return p;
}

unsigned phi_multiplicity(const IntPolynomial& p, std::uint32_t e)
{
    if (p.is_zero())
        throw std::domain_error("multiplicity in the zero polynomial is unbounded");
    const IntPolynomial phi = cyclotomic(e);
    unsigned k = 0;
    IntPolynomial cur = p;
    while (cur.degree() >= phi.degree()) {
        auto q = try_exact_div(cur, phi);
        if (!q)
            break;
        cur = std::move(*q);
        ++k;
    }
    return k;
}

unsigned degree_count_multiplicity(std::span<const unsigned> degrees, std::uint32_t e)
{
    if (e < 2)
        throw std::invalid_argument("degree-count multiplicity needs e >= 2");
    return static_cast<unsigned>(
        std::count_if(degrees.begin(), degrees.end(), [e](unsigned d) { return d % e == 0; }));
}

BigInt eval_at_integer(const IntPolynomial& p, const BigInt& v)
{
    BigInt acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * v + *it;
    return acc;
}

} // namespace hecke
