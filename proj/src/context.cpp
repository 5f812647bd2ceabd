#include "whitney/context.hpp"

#include <set>
#include <stdexcept>

namespace whitney {

VariableContext::VariableContext(std::vector<VariableGroup> groups)
    : groups_(std::move(groups))
{
    if (groups_.empty())
        throw std::invalid_argument("VariableContext: at least one group required");
    std::set<std::string> seen;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        const auto& grp = groups_[g];
        if (grp.names.empty())
            throw std::invalid_argument("VariableContext: empty variable group");
        group_first_.push_back(static_cast<int>(names_.size()));
        for (std::size_t i = 0; i < grp.names.size(); ++i) {
            if (!seen.insert(grp.names[i]).second)
                throw std::invalid_argument("VariableContext: duplicate symbol " + grp.names[i]);
            names_.push_back(grp.names[i]);
            eliminated_.push_back(grp.kind == GroupKind::affine && i == 0);
            group_of_.push_back(static_cast<int>(g));
        }
    }
    if (names_.size() > 32)
        throw std::invalid_argument("VariableContext: at most 32 variables supported");
}

namespace {

std::vector<std::string> indexed(const std::string& stem, int count)
{
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(stem + std::to_string(i));
    return out;
}

VariableGroup hat_group(int n)
{
    std::vector<std::string> names{"s"};
    for (const auto& t : indexed("t", n + 1))
        names.push_back(t);
    return VariableGroup{GroupKind::affine, std::move(names)};
}

} // namespace

VariableContext VariableContext::std_simplex(int m)
{
    if (m < 0)
        throw std::invalid_argument("std_simplex: m must be >= 0");
    return VariableContext({VariableGroup{GroupKind::affine, indexed("x", m + 1)}});
}

VariableContext VariableContext::hat(int n)
{
    if (n < 0)
        throw std::invalid_argument("hat: n must be >= 0");
    return VariableContext({hat_group(n)});
}

VariableContext VariableContext::mixed(int n, int m)
{
    if (n < 0 || m < 0)
        throw std::invalid_argument("mixed: arities must be >= 0");
    return VariableContext({hat_group(n), VariableGroup{GroupKind::affine, indexed("x", m + 1)}});
}

VariableContext VariableContext::interval(int m)
{
    if (m < 0)
        throw std::invalid_argument("interval: m must be >= 0");
    return VariableContext({VariableGroup{GroupKind::free, {"s"}},
                            VariableGroup{GroupKind::affine, indexed("x", m + 1)}});
}

} // namespace whitney
