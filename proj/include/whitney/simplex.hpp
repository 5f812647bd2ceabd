#pragma once

#include <compare>
#include <string>
#include <vector>

namespace whitney {

/// A monotone map [n] -> [m] in the category of finite ordinals, stored as
/// the sequence of its n+1 values. Values are validated on construction:
/// non-decreasing and contained in {0,...,m}. Immutable after construction.
class SimplicialMap {
public:
    SimplicialMap(std::vector<int> values, int codomain);

    static SimplicialMap identity(int n);

    int domain() const { return static_cast<int>(values_.size()) - 1; }
    int codomain() const { return codomain_; }
    const std::vector<int>& values() const { return values_; }
    int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

    bool injective() const;

    /// f|_[n-1]: drop the last value. Requires domain() >= 1.
    SimplicialMap front_restriction() const;

    /// "(0,2):[1]->[2]" for diagnostics and reports.
    std::string str() const;

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b)
    {
        return a.values_ == b.values_ && a.codomain_ == b.codomain_;
    }
    friend std::strong_ordering operator<=>(const SimplicialMap& a, const SimplicialMap& b);

private:
    std::vector<int> values_;
    int codomain_;
};

/// g after f. Requires codomain of f == domain of g.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Face map delta_k : [n-1] -> [n], skipping k. Requires n >= 1, 0 <= k <= n.
SimplicialMap face_map(int n, int k);

/// I(n,m): the strictly increasing maps [n] -> [m], in lexicographic order of
/// value sequences. Empty when n > m. All sums over I(n,m) downstream iterate
/// in this order.
std::vector<SimplicialMap> injective_maps(int n, int m);

/// Every monotone map [n] -> [m], in lexicographic order of value sequences.
std::vector<SimplicialMap> monotone_maps(int n, int m);

/// All monotone h with g∘h = f, for f:[n]->[m] and g:[p]->[m].
std::vector<SimplicialMap> factor_through(const SimplicialMap& f, const SimplicialMap& g);

/// All monotone g:[n+1]->[m] with g∘delta_k = f, for f:[n]->[m], 0 <= k <= n+1.
std::vector<SimplicialMap> coface_factorizations(const SimplicialMap& f, int k);

} // namespace whitney
