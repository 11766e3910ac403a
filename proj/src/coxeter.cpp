#include "hecke/coxeter.hpp"

#include <algorithm>
#include <string>

namespace hecke {

IntMatrix IntMatrix::identity(unsigned n)
{
    IntMatrix m{n, std::vector<int>(n * n, 0)};
    for (unsigned i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t{n, std::vector<int>(n * n)};
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.n != b.n)
        throw std::invalid_argument("matrix size mismatch");
    IntMatrix p{a.n, std::vector<int>(a.n * a.n, 0)};
    for (unsigned r = 0; r < a.n; ++r)
        for (unsigned k = 0; k < a.n; ++k) {
            const int x = a.at(r, k);
            if (x == 0)
                continue;
            for (unsigned c = 0; c < a.n; ++c)
                p.at(r, c) += x * b.at(k, c);
        }
    return p;
}

namespace {

// Symmetric chain 0-1-...-(n-1) with 2 on the diagonal.
IntMatrix path_cartan(unsigned n)
{
    IntMatrix c{n, std::vector<int>(n * n, 0)};
    for (unsigned i = 0; i < n; ++i) {
        c.at(i, i) = 2;
        if (i + 1 < n)
            c.at(i, i + 1) = c.at(i + 1, i) = -1;
    }
    return c;
}

void link(IntMatrix& c, unsigned i, unsigned j)
{
    c.at(i, j) = c.at(j, i) = -1;
}

} // namespace

IntMatrix cartan_matrix(const IrreducibleType& t)
{
    const unsigned n = t.rank();
    switch (t.family()) {
    case Family::A:
        return path_cartan(n);
    case Family::B: {
        // alpha_n short.
        IntMatrix c = path_cartan(n);
        c.at(n - 1, n - 2) = -2;
        return c;
    }
    case Family::D: {
        if (n == 2)
            return IntMatrix{2, {2, 0, 0, 2}};
        IntMatrix c = path_cartan(n - 1);
        IntMatrix d{n, std::vector<int>(n * n, 0)};
        for (unsigned i = 0; i + 1 < n; ++i)
            for (unsigned j = 0; j + 1 < n; ++j)
                d.at(i, j) = c.at(i, j);
        d.at(n - 1, n - 1) = 2;
        link(d, n - 3, n - 1);
        return d;
    }
    case Family::E: {
        // 1-3-4-5-...-n with 2 attached to 4 (0-based: 0-2-3-4-..., 1-3).
        IntMatrix c{n, std::vector<int>(n * n, 0)};
        for (unsigned i = 0; i < n; ++i)
            c.at(i, i) = 2;
        link(c, 0, 2);
        link(c, 1, 3);
        for (unsigned i = 2; i + 1 < n; ++i)
            link(c, i, i + 1);
        return c;
    }
    case Family::F: {
        IntMatrix c = path_cartan(4);
        c.at(2, 1) = -2;
        return c;
    }
    case Family::G:
        return IntMatrix{2, {2, -1, -3, 2}};
    case Family::I2:
        switch (t.dihedral_m()) {
        case 3: return path_cartan(2);
        case 4: return IntMatrix{2, {2, -1, -2, 2}};
        case 6: return IntMatrix{2, {2, -1, -3, 2}};
        default: break;
        }
        break;
    }
    throw std::invalid_argument("no Cartan matrix for non-crystallographic type " + t.to_string());
}

IntMatrix coxeter_matrix(const IrreducibleType& t)
{
    const unsigned n = t.rank();
    IntMatrix m{n, std::vector<int>(n * n, 1)};
    if (!t.is_weyl()) {
        m.at(0, 1) = m.at(1, 0) = static_cast<int>(t.dihedral_m());
        return m;
    }
    const IntMatrix c = cartan_matrix(t);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (i == j)
                continue;
            switch (c.at(i, j) * c.at(j, i)) {
            case 0: m.at(i, j) = 2; break;
            case 1: m.at(i, j) = 3; break;
            case 2: m.at(i, j) = 4; break;
            case 3: m.at(i, j) = 6; break;
            default: throw std::logic_error("invalid Cartan matrix product");
            }
        }
    return m;
}

ReflectionRealization realize(const IrreducibleType& t)
{
    ReflectionRealization r{t, t.rank(), {}, {}};
    if (!t.is_weyl())
        return r;
    r.cartan = cartan_matrix(t);
    for (unsigned i = 0; i < r.rank; ++i) {
        IntMatrix s = IntMatrix::identity(r.rank);
        for (unsigned k = 0; k < r.rank; ++k)
            s.at(i, k) -= r.cartan.at(i, k);
        r.generator_matrices.push_back(std::move(s));
    }
    return r;
}

CapExceeded::CapExceeded(std::uint64_t cap)
    : std::runtime_error("group enumeration exceeded the element cap of " + std::to_string(cap))
    , cap_(cap)
{
}

namespace {

using Cell = std::int8_t;

// Left multiplication by the transposed simple reflections on the coweight
// lattice. A transform is a rank x rank matrix; its key is the image of
// (1,...,1), which lies in the open fundamental chamber.
class MatrixAction {
public:
    // Key coordinate i is positive iff s_i lengthens the element.
    static constexpr bool kSignedKeys = true;

    explicit MatrixAction(const ReflectionRealization& r) : n_(r.rank), cartan_(r.cartan)
    {
        if (n_ > kMaxEngineRank)
            throw std::invalid_argument("rank exceeds the enumeration engine limit");
        for (unsigned i = 0; i < n_; ++i) {
            std::vector<std::pair<unsigned, int>> nb;
            for (unsigned j = 0; j < n_; ++j)
                if (j != i && cartan_.at(i, j) != 0)
                    nb.emplace_back(j, cartan_.at(i, j));
            neighbours_.push_back(std::move(nb));
        }
    }

    unsigned generators() const { return n_; }
    unsigned stride() const { return n_ * n_; }

    void identity(Cell* t) const
    {
        std::fill(t, t + stride(), Cell{0});
        for (unsigned i = 0; i < n_; ++i)
            t[i * n_ + i] = 1;
    }

    // out = S_i^T * in: row j -= C[i][j] * row i, and row i is negated.
    void apply(unsigned i, const Cell* in, Cell* out) const
    {
        std::copy(in, in + stride(), out);
        const Cell* row_i = in + i * n_;
        for (auto [j, cij] : neighbours_[i]) {
            Cell* row_j = out + j * n_;
            for (unsigned c = 0; c < n_; ++c)
                row_j[c] = static_cast<Cell>(row_j[c] - cij * row_i[c]);
        }
        Cell* out_i = out + i * n_;
        for (unsigned c = 0; c < n_; ++c)
            out_i[c] = static_cast<Cell>(-out_i[c]);
    }

    Element key(const Cell* t) const
    {
        Element k{};
        for (unsigned r = 0; r < n_; ++r) {
            int s = 0;
            for (unsigned c = 0; c < n_; ++c)
                s += t[r * n_ + c];
            k[r] = static_cast<Cell>(s);
        }
        return k;
    }

    // Same row operations on the image of (1,...,1).
    Element apply_key(unsigned i, const Element& in) const
    {
        Element out = in;
        for (auto [j, cij] : neighbours_[i])
            out[j] = static_cast<Cell>(out[j] - cij * in[i]);
        out[i] = static_cast<Cell>(-in[i]);
        return out;
    }

    unsigned order(const Cell* t) const
    {
        std::array<int, kMaxEngineRank> v{}, w{};
        for (unsigned i = 0; i < n_; ++i)
            v[i] = 1;
        for (unsigned k = 1; k < 256; ++k) {
            bool back = true;
            for (unsigned r = 0; r < n_; ++r) {
                int s = 0;
                for (unsigned c = 0; c < n_; ++c)
                    s += t[r * n_ + c] * v[c];
                w[r] = s;
                back = back && s == 1;
            }
            if (back)
                return k;
            v = w;
        }
        throw std::logic_error("element order exceeds 255");
    }

private:
    unsigned n_;
    IntMatrix cartan_;
    std::vector<std::vector<std::pair<unsigned, int>>> neighbours_;
};

// Dihedral group of order 2m as the maps x -> a0 + (a1 - a0) x on Z/m,
// stored as (f(0), f(1)). Generators s: x -> -x and t: x -> 1 - x.
class DihedralAction {
public:
    static constexpr bool kSignedKeys = false;

    explicit DihedralAction(unsigned m) : m_(static_cast<int>(m))
    {
        if (m > 127)
            throw std::invalid_argument("abstract dihedral encoding supports m <= 127");
    }

    unsigned generators() const { return 2; }
    unsigned stride() const { return 2; }

    void identity(Cell* t) const
    {
        t[0] = 0;
        t[1] = 1 % m_;
    }

    void apply(unsigned i, const Cell* in, Cell* out) const
    {
        for (unsigned k = 0; k < 2; ++k) {
            const int y = i == 0 ? -in[k] : 1 - in[k];
            out[k] = static_cast<Cell>(((y % m_) + m_) % m_);
        }
    }

    Element key(const Cell* t) const
    {
        Element k{};
        k[0] = t[0];
        k[1] = t[1];
        return k;
    }

    Element apply_key(unsigned i, const Element& in) const
    {
        Element out{};
        apply(i, in.data(), out.data());
        return out;
    }

    unsigned order(const Cell* t) const
    {
        const int a0 = t[0];
        const int slope = t[1] - t[0];
        int y0 = 0, y1 = 1;
        for (unsigned k = 1; k <= 2 * static_cast<unsigned>(m_); ++k) {
            y0 = (((a0 + slope * y0) % m_) + m_) % m_;
            y1 = (((a0 + slope * y1) % m_) + m_) % m_;
            if (y0 == 0 && y1 == 1)
                return k;
        }
        throw std::logic_error("dihedral element order exceeds 2m");
    }

private:
    int m_;
};

using Packed = unsigned __int128;

Packed pack(const Element& k)
{
    Packed p = 0;
    for (Cell c : k)
        p = (p << 8) | (static_cast<std::uint8_t>(c) ^ 0x80u);
    return p;
}

Element unpack(Packed p)
{
    Element k{};
    for (int i = kMaxEngineRank - 1; i >= 0; --i) {
        k[static_cast<unsigned>(i)] = static_cast<Cell>(static_cast<std::uint8_t>(p) ^ 0x80u);
        p >>= 8;
    }
    return k;
}

struct Candidate {
    Packed key;
    std::uint32_t parent;
    std::uint8_t generator;
};

bool contains_sorted(const std::vector<Packed>& v, std::size_t from, std::size_t to, Packed k)
{
    return std::binary_search(v.begin() + static_cast<std::ptrdiff_t>(from),
                              v.begin() + static_cast<std::ptrdiff_t>(to), k);
}

template <class Action>
void run_bfs(const Action& act, std::uint64_t cap, bool with_orders, std::vector<Packed>& keys,
             std::vector<std::uint8_t>& orders, std::vector<std::uint64_t>& layer_start)
{
    const unsigned stride = act.stride();
    std::vector<Cell> frontier(stride);
    act.identity(frontier.data());
    keys.push_back(pack(act.key(frontier.data())));
    if (with_orders)
        orders.push_back(1);
    layer_start = {0, 1};
    if (cap < 1)
        throw CapExceeded(cap);

    std::vector<Candidate> cand;
    while (true) {
        const std::uint64_t cur_begin = layer_start[layer_start.size() - 2];
        const std::uint64_t cur_end = layer_start.back();
        const std::uint64_t prev_begin =
            layer_start.size() >= 3 ? layer_start[layer_start.size() - 3] : cur_begin;
        const std::size_t count = cur_end - cur_begin;

        cand.clear();
        cand.reserve(count * act.generators());
        for (std::size_t e = 0; e < count; ++e) {
            const Element parent = unpack(keys[cur_begin + e]);
            for (unsigned g = 0; g < act.generators(); ++g) {
                if constexpr (Action::kSignedKeys) {
                    // Reach each element only from s_g w with g its first left descent.
                    if (parent[g] <= 0)
                        continue;
                    const Element child = act.apply_key(g, parent);
                    bool first = true;
                    for (unsigned j = 0; j < g && first; ++j)
                        first = child[j] > 0;
                    if (!first)
                        continue;
                    cand.push_back({pack(child), static_cast<std::uint32_t>(e),
                                    static_cast<std::uint8_t>(g)});
                } else {
                    cand.push_back({pack(act.apply_key(g, parent)), static_cast<std::uint32_t>(e),
                                    static_cast<std::uint8_t>(g)});
                }
            }
        }
        std::sort(cand.begin(), cand.end(),
                  [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
        if constexpr (!Action::kSignedKeys) {
            cand.erase(std::unique(cand.begin(), cand.end(),
                                   [](const Candidate& a, const Candidate& b) { return a.key == b.key; }),
                       cand.end());
            // Neighbours of layer k lie in layers k-1, k, k+1.
            std::erase_if(cand, [&](const Candidate& c) {
                return contains_sorted(keys, prev_begin, cur_begin, c.key) ||
                       contains_sorted(keys, cur_begin, cur_end, c.key);
            });
        }
        if (cand.empty())
            break;
        if (keys.size() + cand.size() > cap)
            throw CapExceeded(cap);

        if (with_orders) {
            std::vector<Cell> next(cand.size() * stride);
            for (std::size_t i = 0; i < cand.size(); ++i) {
                Cell* t = next.data() + i * stride;
                act.apply(cand[i].generator, frontier.data() + cand[i].parent * stride, t);
                orders.push_back(static_cast<std::uint8_t>(act.order(t)));
            }
            frontier = std::move(next);
        }
        for (const Candidate& c : cand)
            keys.push_back(c.key);
        layer_start.push_back(keys.size());
    }
}

template <class Action>
Element word_to_element(const Action& act, std::span<const unsigned> word)
{
    std::vector<Cell> t(act.stride()), tmp(act.stride());
    act.identity(t.data());
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it >= act.generators())
            throw std::invalid_argument("generator index out of range");
        act.apply(*it, t.data(), tmp.data());
        std::swap(t, tmp);
    }
    return act.key(t.data());
}

} // namespace

GroupTable generate_group(const ReflectionRealization& r, std::uint64_t element_cap, bool with_orders)
{
    GroupTable g(r);
    g.has_orders_ = with_orders;
    if (r.is_abstract_dihedral())
        run_bfs(DihedralAction(r.type.dihedral_m()), element_cap, with_orders, g.keys_, g.orders_,
                g.layer_start_);
    else
        run_bfs(MatrixAction(r), element_cap, with_orders, g.keys_, g.orders_, g.layer_start_);
    for (std::uint8_t o : g.orders_)
        ++g.census_[o];
    return g;
}

Element GroupTable::identity() const
{
    return unpack(keys_.front());
}

Element GroupTable::element(std::uint64_t index) const
{
    return unpack(keys_.at(index));
}

std::vector<std::uint64_t> GroupTable::length_histogram() const
{
    std::vector<std::uint64_t> h;
    for (std::size_t k = 0; k + 1 < layer_start_.size(); ++k)
        h.push_back(layer_start_[k + 1] - layer_start_[k]);
    return h;
}

std::optional<std::uint64_t> GroupTable::index_of(const Element& e) const
{
    const Packed w = pack(e);
    for (std::size_t k = 0; k + 1 < layer_start_.size(); ++k) {
        auto first = keys_.begin() + static_cast<std::ptrdiff_t>(layer_start_[k]);
        auto last = keys_.begin() + static_cast<std::ptrdiff_t>(layer_start_[k + 1]);
        auto it = std::lower_bound(first, last, w);
        if (it != last && *it == w)
            return static_cast<std::uint64_t>(it - keys_.begin());
    }
    return std::nullopt;
}

std::optional<unsigned> GroupTable::length_of(const Element& w) const
{
    auto idx = index_of(w);
    if (!idx)
        return std::nullopt;
    auto it = std::upper_bound(layer_start_.begin(), layer_start_.end(), *idx);
    return static_cast<unsigned>(it - layer_start_.begin()) - 1;
}

Element GroupTable::element_from_word(std::span<const unsigned> word) const
{
    if (realization_.is_abstract_dihedral())
        return word_to_element(DihedralAction(realization_.type.dihedral_m()), word);
    return word_to_element(MatrixAction(realization_), word);
}

std::optional<Element> GroupTable::element_with_order(unsigned k) const
{
    for (std::size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i] == k)
            return unpack(keys_[i]);
    return std::nullopt;
}

IntPolynomial poincare_bruteforce(const GroupTable& g)
{
    std::vector<BigInt> c;
    for (std::uint64_t n : g.length_histogram())
        c.emplace_back(n);
    return IntPolynomial(std::move(c));
}

unsigned element_order(const GroupTable& g, const Element& w)
{
    if (!g.has_orders())
        throw std::logic_error("group table was built without element orders");
    auto idx = g.index_of(w);
    if (!idx)
        throw std::invalid_argument("element is not in the group");
    return g.order_of_index(*idx);
}

SylowReport sylow_is_cyclic(const GroupTable& g, unsigned l)
{
    if (l < 2)
        throw std::invalid_argument("Sylow test needs a prime");
    for (unsigned d = 2; d * d <= l; ++d)
        if (l % d == 0)
            throw std::invalid_argument(std::to_string(l) + " is not prime");

    if (!g.has_orders())
        throw std::logic_error("group table was built without element orders");
    SylowReport rep;
    rep.prime = l;
    std::uint64_t n = g.order();
    std::uint64_t full = 1;
    while (n % l == 0) {
        n /= l;
        full *= l;
        ++rep.exponent;
    }

    auto l_part = [l](std::uint64_t k) {
        std::uint64_t p = 1;
        while (k % l == 0) {
            k /= l;
            p *= l;
        }
        return p;
    };
    unsigned best_order = 1;
    for (const auto& [k, count] : g.order_census()) {
        if (l_part(k) > rep.max_l_order) {
            rep.max_l_order = l_part(k);
            best_order = k;
        }
    }
    rep.witness = *g.element_with_order(best_order);
    rep.cyclic = rep.max_l_order == full;
    return rep;
}

} // namespace hecke
