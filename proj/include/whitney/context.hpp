#pragma once

#include <string>
#include <vector>

namespace whitney {

enum class GroupKind { affine, free };

struct VariableGroup {
    GroupKind kind;
    std::vector<std::string> names;

    friend bool operator==(const VariableGroup&, const VariableGroup&) = default;
};

/// Ordered variable groups over which forms live. An affine group with
/// coordinates (y_0,...,y_r) carries the relations sum(y_i) = 1 and
/// sum(dy_i) = 0; its first coordinate y_0 (and dy_0) is eliminated in
/// canonical form. A free group imposes no relation. Variables get global
/// indices in (group, coordinate) order; that order also fixes the exterior
/// generator order and hence all Koszul signs.
class VariableContext {
public:
    explicit VariableContext(std::vector<VariableGroup> groups);

    /// Omega_m: one affine group x0..xm.
    static VariableContext std_simplex(int m);
    /// Forms on the hat simplex: one affine group s,t0..tn.
    static VariableContext hat(int n);
    /// Hat(n) ⊗ Std(m), hat coordinates ordered first.
    static VariableContext mixed(int n, int m);
    /// Omega_m[s] ⊗ Λ(ds): free group (s), then affine group x0..xm.
    static VariableContext interval(int m);

    int var_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }
    bool eliminated(int v) const { return eliminated_.at(static_cast<std::size_t>(v)); }
    int group_count() const { return static_cast<int>(groups_.size()); }
    const VariableGroup& group(int g) const { return groups_.at(static_cast<std::size_t>(g)); }
    int group_first(int g) const { return group_first_.at(static_cast<std::size_t>(g)); }
    int group_size(int g) const
    {
        return static_cast<int>(group(g).names.size());
    }
    int group_of(int v) const { return group_of_.at(static_cast<std::size_t>(v)); }

    friend bool operator==(const VariableContext& a, const VariableContext& b)
    {
        return a.groups_ == b.groups_;
    }

private:
    std::vector<VariableGroup> groups_;
    std::vector<std::string> names_;
    std::vector<bool> eliminated_;
    std::vector<int> group_of_;
    std::vector<int> group_first_;
};

} // namespace whitney
