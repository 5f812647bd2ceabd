#include "whitney/contraction.hpp"

#include <bit>
#include <stdexcept>

namespace whitney {

namespace {

// Interval(m) layout: s at index 0, x_i at index i+1.
int interval_m(const VariableContext& ctx)
{
    if (ctx.group_count() != 2 || ctx.group(0).kind != GroupKind::free ||
        ctx.group(1).kind != GroupKind::affine)
        throw std::invalid_argument("expected an Interval(m) context");
    return ctx.group_size(1) - 1;
}

// Mixed(n,m) layout: s at 0, t_i at 1+i, x_j at n+2+j.
std::pair<int, int> mixed_arities(const VariableContext& ctx)
{
    if (ctx.group_count() != 2 || ctx.group(0).kind != GroupKind::affine ||
        ctx.group(1).kind != GroupKind::affine)
        throw std::invalid_argument("expected a Mixed(n,m) context");
    return {ctx.group_size(0) - 2, ctx.group_size(1) - 1};
}

int std_arity(const DifferentialForm& eta)
{
    const auto& ctx = eta.context();
    if (ctx.group_count() != 1 || ctx.group(0).kind != GroupKind::affine)
        throw std::invalid_argument("expected a form over Std(m)");
    return ctx.var_count() - 1;
}

void require_injective(const SimplicialMap& f)
{
    if (!f.injective())
        throw std::invalid_argument("map must be injective: " + f.str());
}

} // namespace

std::pair<DifferentialForm, DifferentialForm> decompose_ds(const DifferentialForm& eta_hat)
{
    const auto& ctx = eta_hat.context();
    interval_m(ctx);
    // ds is the lowest exterior generator, so stripping its bit off a term
    // ds∧(rest) costs no sign.
    std::vector<Term> alpha, beta;
    for (const auto& t : eta_hat.terms()) {
        if (t.exterior & 1u) {
            Term a = t;
            a.exterior &= ~1u;
            alpha.push_back(std::move(a));
        } else {
            beta.push_back(t);
        }
    }
    return {DifferentialForm::from_terms(ctx, std::move(alpha)),
            DifferentialForm::from_terms(ctx, std::move(beta))};
}

DifferentialForm h_vertex(int j, const DifferentialForm& eta)
{
    const int m = std_arity(eta);
    if (j < 0 || j > m)
        throw std::invalid_argument("h_vertex: vertex index out of range");
    const VariableContext interval = VariableContext::interval(m);
    const DifferentialForm s = DifferentialForm::coordinate(interval, 0);
    const DifferentialForm one_minus_s =
        DifferentialForm::constant(interval, 1) - s;
    std::map<int, DifferentialForm> images;
    for (int i = 0; i <= m; ++i) {
        DifferentialForm img = wedge(one_minus_s, DifferentialForm::coordinate(interval, i + 1));
        if (i == j)
            img = add(img, s);
        images.emplace(i, std::move(img));
    }
    const auto [alpha, beta] = decompose_ds(substitute(eta, images, interval));
    // Integrate the interval variable out of alpha and move back to Std(m):
    // drop the s slot, shift exterior bits down by one.
    const VariableContext std_ctx = eta.context();
    std::vector<Term> terms;
    for (const auto& t : alpha.terms()) {
        Term r;
        const int c = t.exponents[0];
        r.coeff = t.coeff / Rational(c + 1);
        r.exponents.assign(t.exponents.begin() + 1, t.exponents.end());
        r.exterior = t.exterior >> 1;
        terms.push_back(std::move(r));
    }
    return DifferentialForm::from_terms(std_ctx, std::move(terms));
}

DifferentialForm h_path(const SimplicialMap& f, const DifferentialForm& eta)
{
    require_injective(f);
    if (f.codomain() != std_arity(eta))
        throw std::invalid_argument("h_path: form must live on Std(codomain)");
    DifferentialForm result = eta;
    for (int v : f.values())
        result = h_vertex(v, result);
    return result;
}

DifferentialForm dupont_h(int m, const DifferentialForm& eta)
{
    if (std_arity(eta) != m)
        throw std::invalid_argument("dupont_h: form must live on Std(m)");
    DifferentialForm result = DifferentialForm::zero(eta.context());
    for (int n = 0; n <= m; ++n)
        for (const auto& f : injective_maps(n, m))
            result = add(result, wedge(whitney_form(f), h_path(f, eta)));
    return result;
}

DifferentialForm khat_pullback(const SimplicialMap& f, const DifferentialForm& eta)
{
    require_injective(f);
    const int m = f.codomain();
    const int n = f.domain();
    if (std_arity(eta) != m)
        throw std::invalid_argument("khat_pullback: form must live on Std(codomain)");
    const VariableContext mixed = VariableContext::mixed(n, m);
    const DifferentialForm s = DifferentialForm::coordinate(mixed, 0);
    std::map<int, DifferentialForm> images;
    for (int j = 0; j <= m; ++j) {
        DifferentialForm img = wedge(s, DifferentialForm::coordinate(mixed, n + 2 + j));
        for (int i = 0; i <= n; ++i)
            if (f(i) == j)
                img = add(img, DifferentialForm::coordinate(mixed, 1 + i));
        images.emplace(j, std::move(img));
    }
    return substitute(eta, images, mixed);
}

DifferentialForm fiber_integrate(int n, const DifferentialForm& xi)
{
    const auto [got_n, m] = mixed_arities(xi.context());
    if (got_n != n)
        throw std::invalid_argument("fiber_integrate: hat arity mismatch");
    const VariableContext hat = VariableContext::hat(n);
    const VariableContext std_ctx = VariableContext::std_simplex(m);
    const int hat_vars = n + 2;
    const std::uint32_t hat_bits = (1u << hat_vars) - 1;
    const std::uint32_t hat_top = hat_bits & ~1u; // dt_0 ∧ ... ∧ dt_n
    std::vector<Term> out;
    for (const auto& t : xi.terms()) {
        if ((t.exterior & hat_bits) != hat_top)
            continue;
        // Hat generators sit below the x generators, so the split
        // (hat part)∧(x part) is sign-free.
        Term hat_term;
        hat_term.coeff = t.coeff;
        hat_term.exponents.assign(t.exponents.begin(), t.exponents.begin() + hat_vars);
        hat_term.exterior = hat_top;
        const Rational weight =
            integrate_hat(DifferentialForm::from_terms(hat, {std::move(hat_term)}));
        if (weight == 0)
            continue;
        Term x_term;
        x_term.coeff = weight;
        x_term.exponents.assign(t.exponents.begin() + hat_vars, t.exponents.end());
        x_term.exterior = t.exterior >> hat_vars;
        out.push_back(std::move(x_term));
    }
    return DifferentialForm::from_terms(std_ctx, std::move(out));
}

DifferentialForm k_path(const SimplicialMap& f, const DifferentialForm& eta)
{
    return fiber_integrate(f.domain(), khat_pullback(f, eta));
}

DifferentialForm manetti_k(int m, const DifferentialForm& eta)
{
    if (std_arity(eta) != m)
        throw std::invalid_argument("manetti_k: form must live on Std(m)");
    DifferentialForm result = DifferentialForm::zero(eta.context());
    for (int n = 0; n <= m; ++n)
        for (const auto& f : injective_maps(n, m))
            result = add(result, wedge(whitney_form(f), k_path(f, eta)));
    return result;
}

ContractionOperator make_operator(Family family, int m)
{
    ContractionOperator op;
    op.m = m;
    op.family = family;
    switch (family) {
    case Family::dupont_h:
        op.evaluate = [m](const DifferentialForm& eta) { return dupont_h(m, eta); };
        break;
    case Family::manetti_k:
        op.evaluate = [m](const DifferentialForm& eta) { return manetti_k(m, eta); };
        break;
    case Family::projection_pi:
        op.evaluate = [m](const DifferentialForm& eta) { return elementary_projection(m, eta); };
        break;
    case Family::inclusion_i:
        op.evaluate = [](const DifferentialForm& eta) { return eta; };
        break;
    }
    return op;
}

DifferentialForm contraction_defect(int m, const DifferentialForm& eta, Family family)
{
    if (family != Family::dupont_h && family != Family::manetti_k)
        throw std::invalid_argument("contraction_defect: family must be a homotopy");
    const auto K = [family](int mm, const DifferentialForm& f) {
        return family == Family::dupont_h ? dupont_h(mm, f) : manetti_k(mm, f);
    };
    return add(add(K(m, differential(eta)), differential(K(m, eta))),
               add(negate(elementary_projection(m, eta)), eta));
}

DifferentialForm commutator_defect(const SimplicialMap& f, const DifferentialForm& eta)
{
    require_injective(f);
    const int n = f.domain();
    const int m = f.codomain();
    if (std_arity(eta) != m)
        throw std::invalid_argument("commutator_defect: form must live on Std(codomain)");
    DifferentialForm lhs = k_path(f, differential(eta));
    DifferentialForm d_k = differential(k_path(f, eta));
    lhs = n % 2 == 0 ? add(lhs, d_k) : add(lhs, negate(d_k));
    DifferentialForm rhs =
        DifferentialForm::constant(eta.context(), integrate(pullback(f, eta)));
    if (n == 0) {
        // Convention: k_{f delta_0} acts as the identity in the n = 0 case.
        rhs = add(rhs, negate(eta));
    } else {
        for (int i = 0; i <= n; ++i) {
            const DifferentialForm piece = k_path(compose(f, face_map(n, i)), eta);
            rhs = i % 2 == 0 ? add(rhs, negate(piece)) : add(rhs, piece);
        }
    }
    return add(lhs, negate(rhs));
}

DifferentialForm naturality_defect(const SimplicialMap& g, const DifferentialForm& eta,
                                   Family family)
{
    const int m = g.codomain();
    const int p = g.domain();
    if (std_arity(eta) != m)
        throw std::invalid_argument("naturality_defect: form must live on Std(codomain)");
    const auto apply = [family](int mm, const DifferentialForm& f) {
        return family == Family::dupont_h ? dupont_h(mm, f) : manetti_k(mm, f);
    };
    if (family != Family::dupont_h && family != Family::manetti_k)
        throw std::invalid_argument("naturality_defect: family must be a homotopy");
    return add(apply(p, pullback(g, eta)), negate(pullback(g, apply(m, eta))));
}

std::pair<ContractionOperator, ContractionOperator>
side_condition_transform(const ContractionOperator& K)
{
    const auto eval = K.evaluate;
    // B = dK + Kd, evaluated through the operator's own closure only.
    const auto boundary_part = [eval](const DifferentialForm& eta) {
        return add(differential(eval(eta)), eval(differential(eta)));
    };
    ContractionOperator stage1;
    stage1.m = K.m;
    stage1.family = K.family;
    stage1.evaluate = [boundary_part, eval](const DifferentialForm& eta) {
        return boundary_part(eval(boundary_part(eta)));
    };
    ContractionOperator stage2;
    stage2.m = K.m;
    stage2.family = K.family;
    const auto h1 = stage1.evaluate;
    stage2.evaluate = [h1](const DifferentialForm& eta) {
        return negate(h1(differential(h1(eta))));
    };
    return {std::move(stage1), std::move(stage2)};
}

} // namespace whitney
