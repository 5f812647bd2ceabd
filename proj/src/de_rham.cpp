#include "whitney/de_rham.hpp"

#include <bit>
#include <stdexcept>

namespace whitney {

namespace {

// Shared kernel of integrate/integrate_hat: the context must be a single
// affine group with coordinates (y_0,...,y_r); on the canonical reduction
// only the word dy_1∧...∧dy_r survives in top degree and each monomial
// y^k contributes prod(k_v!) / (sum k + r)!.
Rational integrate_affine(const DifferentialForm& eta)
{
    const auto& ctx = eta.context();
    if (ctx.group_count() != 1 || ctx.group(0).kind != GroupKind::affine)
        throw std::invalid_argument("integrate: context must be a single affine group");
    const int r = ctx.var_count() - 1;
    const std::uint32_t top = ((1u << ctx.var_count()) - 1) & ~1u;
    Rational total = 0;
    for (const auto& t : eta.terms()) {
        if (t.exterior != top)
            continue;
        Integer num = 1;
        long sum = 0;
        for (int v = 1; v <= r; ++v) {
            const int k = t.exponents[static_cast<std::size_t>(v)];
            num *= factorial(static_cast<unsigned>(k));
            sum += k;
        }
        Rational weight(num, factorial(static_cast<unsigned>(sum + r)));
        weight.canonicalize();
        total += t.coeff * weight;
    }
    return total;
}

} // namespace

DifferentialForm pullback(const SimplicialMap& f, const DifferentialForm& eta)
{
    const int m = f.codomain();
    const int n = f.domain();
    if (!(eta.context() == VariableContext::std_simplex(m)))
        throw std::invalid_argument("pullback: form must live on Std(codomain)");
    const VariableContext target = VariableContext::std_simplex(n);
    std::map<int, DifferentialForm> images;
    for (int j = 0; j <= m; ++j) {
        DifferentialForm img = DifferentialForm::zero(target);
        for (int i = 0; i <= n; ++i)
            if (f(i) == j)
                img = add(img, DifferentialForm::coordinate(target, i));
        images.emplace(j, std::move(img));
    }
    return substitute(eta, images, target);
}

DifferentialForm whitney_tuple(const std::vector<int>& indices, int m)
{
    if (indices.empty())
        throw std::invalid_argument("whitney_tuple: index tuple must be non-empty");
    for (int i : indices)
        if (i < 0 || i > m)
            throw std::invalid_argument("whitney_tuple: index out of range");
    const VariableContext ctx = VariableContext::std_simplex(m);
    const int q = static_cast<int>(indices.size()) - 1;
    DifferentialForm sum = DifferentialForm::zero(ctx);
    for (int i = 0; i <= q; ++i) {
        std::vector<int> exps(static_cast<std::size_t>(m) + 1, 0);
        exps[static_cast<std::size_t>(indices[static_cast<std::size_t>(i)])] = 1;
        std::vector<int> word;
        for (int j = 0; j <= q; ++j)
            if (j != i)
                word.push_back(indices[static_cast<std::size_t>(j)]);
        const Rational c = i % 2 == 0 ? Rational(1) : Rational(-1);
        sum = add(sum, DifferentialForm::monomial(ctx, c, exps, word));
    }
    return scale(Rational(factorial(static_cast<unsigned>(q))), sum);
}

DifferentialForm whitney_form(const SimplicialMap& f)
{
    return whitney_tuple(f.values(), f.codomain());
}

Rational integrate(const DifferentialForm& eta)
{
    return integrate_affine(eta);
}

Rational integrate_hat(const DifferentialForm& eta)
{
    return integrate_affine(eta);
}

DifferentialForm elementary_projection(int m, const DifferentialForm& eta)
{
    if (!(eta.context() == VariableContext::std_simplex(m)))
        throw std::invalid_argument("elementary_projection: form must live on Std(m)");
    DifferentialForm result = DifferentialForm::zero(eta.context());
    for (int n = 0; n <= m; ++n)
        for (const auto& f : injective_maps(n, m)) {
            const Rational c = integrate(pullback(f, eta));
            if (c != 0)
                result = add(result, scale(c, whitney_form(f)));
        }
    return result;
}

ElementaryCoordinates elementary_coordinates(int m, const DifferentialForm& eta)
{
    if (!(eta.context() == VariableContext::std_simplex(m)))
        throw std::invalid_argument("elementary_coordinates: form must live on Std(m)");
    ElementaryCoordinates coords;
    DifferentialForm rebuilt = DifferentialForm::zero(eta.context());
    for (int n = 0; n <= m; ++n)
        for (const auto& f : injective_maps(n, m)) {
            const Rational c = integrate(pullback(f, eta));
            if (c != 0) {
                coords.entries.emplace(f, c);
                rebuilt = add(rebuilt, scale(c, whitney_form(f)));
            }
        }
    if (!(rebuilt == eta))
        throw std::domain_error("input not in C_m");
    return coords;
}

} // namespace whitney
