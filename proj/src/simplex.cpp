#include "whitney/simplex.hpp"

#include <sstream>
#include <stdexcept>

namespace whitney {

SimplicialMap::SimplicialMap(std::vector<int> values, int codomain)
    : values_(std::move(values)), codomain_(codomain)
{
    if (codomain_ < 0)
        throw std::invalid_argument("SimplicialMap: codomain must be >= 0");
    if (values_.empty())
        throw std::invalid_argument("SimplicialMap: value sequence must be non-empty");
    int prev = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        int v = values_[i];
        if (v < 0 || v > codomain_)
            throw std::invalid_argument("SimplicialMap: value out of range");
        if (i > 0 && v < prev)
            throw std::invalid_argument("SimplicialMap: values must be non-decreasing");
        prev = v;
    }
}

SimplicialMap SimplicialMap::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        v[static_cast<std::size_t>(i)] = i;
    return SimplicialMap(std::move(v), n);
}

bool SimplicialMap::injective() const
{
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] == values_[i - 1])
            return false;
    return true;
}

SimplicialMap SimplicialMap::front_restriction() const
{
    if (domain() < 1)
        throw std::invalid_argument("front_restriction: domain must be >= 1");
    std::vector<int> v(values_.begin(), values_.end() - 1);
    return SimplicialMap(std::move(v), codomain_);
}

std::string SimplicialMap::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            os << ',';
        os << values_[i];
    }
    os << "):[" << domain() << "]->[" << codomain_ << ']';
    return os.str();
}

std::strong_ordering operator<=>(const SimplicialMap& a, const SimplicialMap& b)
{
    if (auto c = a.domain() <=> b.domain(); c != 0)
        return c;
    if (auto c = a.values_ <=> b.values_; c != 0)
        return c;
    return a.codomain_ <=> b.codomain_;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (f.codomain() != g.domain())
        throw std::invalid_argument("compose: codomain of f must equal domain of g");
    std::vector<int> v;
    v.reserve(f.values().size());
    for (int x : f.values())
        v.push_back(g(x));
    return SimplicialMap(std::move(v), g.codomain());
}

SimplicialMap face_map(int n, int k)
{
    if (n < 1)
        throw std::invalid_argument("face_map: n must be >= 1");
    if (k < 0 || k > n)
        throw std::invalid_argument("face_map: k out of range");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        v[static_cast<std::size_t>(x)] = x < k ? x : x + 1;
    return SimplicialMap(std::move(v), n);
}

namespace {

// Enumerates value sequences of length n+1 in lexicographic order. The first
// value of each position ranges from `lo(prev)` to m.
template <typename Step>
void enumerate_sequences(int n, int m, Step step, std::vector<SimplicialMap>& out)
{
    std::vector<int> v(static_cast<std::size_t>(n) + 1);
    // Recursive lexicographic fill; arities are tiny throughout.
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos > n) {
            out.emplace_back(v, m);
            return;
        }
        for (int val = lo; val <= m; ++val) {
            v[static_cast<std::size_t>(pos)] = val;
            self(self, pos + 1, step(val));
        }
    };
    rec(rec, 0, 0);
}

} // namespace

std::vector<SimplicialMap> injective_maps(int n, int m)
{
    std::vector<SimplicialMap> out;
    if (n < 0 || m < 0 || n > m)
        return out;
    enumerate_sequences(n, m, [](int v) { return v + 1; }, out);
    return out;
}

std::vector<SimplicialMap> monotone_maps(int n, int m)
{
    std::vector<SimplicialMap> out;
    if (n < 0 || m < 0)
        return out;
    enumerate_sequences(n, m, [](int v) { return v; }, out);
    return out;
}

std::vector<SimplicialMap> factor_through(const SimplicialMap& f, const SimplicialMap& g)
{
    std::vector<SimplicialMap> out;
    if (f.codomain() != g.codomain())
        return out;
    const int n = f.domain();
    const int p = g.domain();
    // h(i) must land in g^{-1}(f(i)); walk those fibers keeping monotonicity.
    std::vector<std::vector<int>> fibers(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= p; ++j)
            if (g(j) == f(i))
                fibers[static_cast<std::size_t>(i)].push_back(j);
    std::vector<int> h(static_cast<std::size_t>(n) + 1);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos > n) {
            out.emplace_back(h, p);
            return;
        }
        for (int j : fibers[static_cast<std::size_t>(pos)]) {
            if (j < lo)
                continue;
            h[static_cast<std::size_t>(pos)] = j;
            self(self, pos + 1, j);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<SimplicialMap> coface_factorizations(const SimplicialMap& f, int k)
{
    const int n = f.domain();
    const int m = f.codomain();
    if (k < 0 || k > n + 1)
        throw std::invalid_argument("coface_factorizations: k out of range");
    // g is pinned off position k: g(i) = f(i) for i < k, g(i+1) = f(i) for i >= k.
    // Monotonicity leaves g(k) in [f(k-1), f(k)] with the obvious boundary cases.
    std::vector<int> base(static_cast<std::size_t>(n) + 2);
    for (int i = 0; i < k; ++i)
        base[static_cast<std::size_t>(i)] = f(i);
    for (int i = k; i <= n; ++i)
        base[static_cast<std::size_t>(i) + 1] = f(i);
    const int lo = k == 0 ? 0 : f(k - 1);
    const int hi = k == n + 1 ? m : f(k);
    std::vector<SimplicialMap> out;
    for (int v = lo; v <= hi; ++v) {
        base[static_cast<std::size_t>(k)] = v;
        out.emplace_back(base, m);
    }
    return out;
}

} // namespace whitney
