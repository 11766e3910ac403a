#include "hecke/weyl_types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace hecke {

char family_letter(Family f) noexcept
{
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
    case Family::I2: return 'I';
    }
    return '?';
}

SpecError::SpecError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position))
    , position_(position)
{
}

IrreducibleType IrreducibleType::make(char letter, unsigned rank)
{
    auto bad = [&](const char* rule) {
        return std::invalid_argument(std::string("rank out of range: ") + letter +
                                     std::to_string(rank) + " (" + rule + ")");
    };
    switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'A':
        if (rank < 1)
            throw bad("A needs rank >= 1");
        return {Family::A, rank, 0};
    case 'B':
    case 'C':
        if (rank < 2)
            throw bad("B/C need rank >= 2");
        return {Family::B, rank, 0};
    case 'D':
        if (rank < 2)
            throw bad("D needs rank >= 2");
        return {Family::D, rank, 0};
    case 'E':
        if (rank < 6 || rank > 8)
            throw bad("E needs rank 6, 7 or 8");
        return {Family::E, rank, 0};
    case 'F':
        if (rank != 4)
            throw bad("F needs rank 4");
        return {Family::F, rank, 0};
    case 'G':
        if (rank != 2)
            throw bad("G needs rank 2");
        return {Family::G, rank, 0};
    default:
        throw std::invalid_argument(std::string("unknown type family '") + letter + "'");
    }
}

IrreducibleType IrreducibleType::I2(unsigned m)
{
    if (m < 3)
        throw std::invalid_argument("I2(m) needs m >= 3, got " + std::to_string(m));
    return {Family::I2, 2, m};
}

bool IrreducibleType::is_weyl() const noexcept
{
    return family_ != Family::I2 || m_ == 3 || m_ == 4 || m_ == 6;
}

std::string IrreducibleType::to_string() const
{
    if (family_ == Family::I2)
        return "I2(" + std::to_string(m_) + ")";
    return family_letter(family_) + std::to_string(rank_);
}

bool WeylSpec::has_family(Family f) const noexcept
{
    return std::any_of(factors.begin(), factors.end(),
                       [f](const IrreducibleType& t) { return t.family() == f; });
}

std::string WeylSpec::to_string() const
{
    if (factors.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            out += 'x';
        out += factors[i].to_string();
    }
    return out;
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text)
    {
        for (std::size_t i = 0; i < text.size(); ++i) {
            auto c = static_cast<unsigned char>(text[i]);
            if (std::isspace(c))
                continue;
            chars_.push_back(static_cast<char>(std::toupper(c)));
            offsets_.push_back(i);
        }
        end_offset_ = text.size();
    }

    WeylSpec parse()
    {
        if (chars_.empty())
            throw SpecError("empty type spec", 0);
        WeylSpec spec;
        if (chars_.size() == 1 && chars_[0] == '1')
            return spec;
        spec.factors.push_back(factor());
        while (pos_ < chars_.size()) {
            if (chars_[pos_] != 'X')
                throw SpecError(std::string("expected 'x' between factors, found '") +
                                    chars_[pos_] + "'",
                                offset());
            ++pos_;
            spec.factors.push_back(factor());
        }
        return spec;
    }

private:
    std::size_t offset() const { return pos_ < offsets_.size() ? offsets_[pos_] : end_offset_; }

    unsigned integer()
    {
        const std::size_t start = pos_;
        while (pos_ < chars_.size() && std::isdigit(static_cast<unsigned char>(chars_[pos_])))
            ++pos_;
        if (start == pos_) {
            pos_ = start;
            throw SpecError("expected an integer", offset());
        }
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(chars_.data() + start, chars_.data() + pos_, value);
        if (ec != std::errc{}) {
            pos_ = start;
            throw SpecError("integer too large", offset());
        }
        return value;
    }

    void expect(char c)
    {
        if (pos_ >= chars_.size() || chars_[pos_] != c)
            throw SpecError(std::string("expected '") + c + "'", offset());
        ++pos_;
    }

    IrreducibleType factor()
    {
        if (pos_ >= chars_.size())
            throw SpecError("expected a type letter", offset());
        const std::size_t at = offset();
        const char letter = chars_[pos_];
        if (std::string_view("ABCDEFGI").find(letter) == std::string_view::npos)
            throw SpecError(std::string("unknown type letter '") + letter + "'", at);
        ++pos_;
        const unsigned rank = integer();
        try {
            if (letter == 'I') {
                if (rank != 2)
                    throw std::invalid_argument("dihedral types are written I2(m)");
                expect('(');
                const unsigned m = integer();
                expect(')');
                return IrreducibleType::I2(m);
            }
            return IrreducibleType::make(letter, rank);
        } catch (const SpecError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw SpecError(e.what(), at);
        }
    }

    std::vector<char> chars_;
    std::vector<std::size_t> offsets_;
    std::size_t end_offset_ = 0;
    std::size_t pos_ = 0;
};

} // namespace

WeylSpec parse_type_spec(std::string_view text)
{
    return SpecParser(text).parse();
}

std::vector<unsigned> degrees(const IrreducibleType& t)
{
    std::vector<unsigned> d;
    const unsigned n = t.rank();
    switch (t.family()) {
    case Family::A:
        for (unsigned i = 2; i <= n + 1; ++i)
            d.push_back(i);
        break;
    case Family::B:
        for (unsigned i = 1; i <= n; ++i)
            d.push_back(2 * i);
        break;
    case Family::D:
        for (unsigned i = 1; i < n; ++i)
            d.push_back(2 * i);
        d.push_back(n);
        break;
    case Family::E:
        if (n == 6)
            d = {2, 5, 6, 8, 9, 12};
        else if (n == 7)
            d = {2, 6, 8, 10, 12, 14, 18};
        else
            d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case Family::F:
        d = {2, 6, 8, 12};
        break;
    case Family::G:
        d = {2, 6};
        break;
    case Family::I2:
        d = {2, t.dihedral_m()};
        break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

BigInt group_order(const IrreducibleType& t)
{
    BigInt order = 1;
    for (unsigned d : degrees(t))
        order *= d;
    return order;
}

BigInt group_order(const WeylSpec& spec)
{
    BigInt order = 1;
    for (const auto& t : spec.factors)
        order *= group_order(t);
    return order;
}

unsigned reflection_count(const IrreducibleType& t)
{
    auto d = degrees(t);
    return std::accumulate(d.begin(), d.end(), 0u) - static_cast<unsigned>(d.size());
}

IntPolynomial poincare_polynomial(const IrreducibleType& t)
{
    const IntPolynomial x_minus_1{-1, 1};
    IntPolynomial p{1};
    for (unsigned d : degrees(t)) {
        IntPolynomial xd_minus_1 = IntPolynomial::monomial(1, d) - IntPolynomial{1};
        p *= poly_exact_div(xd_minus_1, x_minus_1);
    }
    return p;
}

IntPolynomial poincare_polynomial(const WeylSpec& spec)
{
    IntPolynomial p{1};
    for (const auto& t : spec.factors)
        p *= poincare_polynomial(t);
    return p;
}

} // namespace hecke
