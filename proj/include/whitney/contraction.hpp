#pragma once

#include <functional>
#include <utility>

#include "whitney/de_rham.hpp"
#include "whitney/form.hpp"
#include "whitney/simplex.hpp"

namespace whitney {

/// Unique splitting eta = ds ∧ alpha + beta over Interval(m), with neither
/// alpha nor beta containing ds.
std::pair<DifferentialForm, DifferentialForm> decompose_ds(const DifferentialForm& eta_hat);

/// The vertex homotopy h_j on Omega_m: pull back along
/// x_i -> (1-s)x_i (i != j), x_j -> s + (1-s)x_j, take the ds-coefficient and
/// integrate the interval variable with s^c -> 1/(c+1). Lowers degree by 1
/// and kills 0-forms.
DifferentialForm h_vertex(int j, const DifferentialForm& eta);

/// h_f = h_{f(n)} ∘ ... ∘ h_{f(0)} for injective f:[n]->[m].
DifferentialForm h_path(const SimplicialMap& f, const DifferentialForm& eta);

/// h_m(eta) = sum over n and f in I(n,m) of omega_f ∧ h_f(eta).
DifferentialForm dupont_h(int m, const DifferentialForm& eta);

/// Pullback along f-hat: x_j -> s*x_j + sum of t_i over f(i) = j, landing in
/// Mixed(n,m) with the hat generators ordered first.
DifferentialForm khat_pullback(const SimplicialMap& f, const DifferentialForm& eta);

/// Fiber integration over the hat simplex: terms of hat exterior degree n+1
/// contribute (hat integral) * (x part); everything else dies.
DifferentialForm fiber_integrate(int n, const DifferentialForm& xi);

/// k_f = (integral over the hat simplex ⊗ Id) ∘ f-hat pullback.
DifferentialForm k_path(const SimplicialMap& f, const DifferentialForm& eta);

/// k_m(eta) = sum over n and f in I(n,m) of omega_f ∧ k_f(eta).
DifferentialForm manetti_k(int m, const DifferentialForm& eta);

enum class Family { dupont_h, manetti_k, projection_pi, inclusion_i };

/// A degree-homogeneous linear operator on Omega_m, evaluation-only.
struct ContractionOperator {
    int m = 0;
    Family family = Family::dupont_h;
    std::function<DifferentialForm(const DifferentialForm&)> evaluate;
};

ContractionOperator make_operator(Family family, int m);

/// K(d eta) + d(K eta) - pi_m(eta) + eta for the chosen homotopy family;
/// identically zero iff the contraction identity holds.
DifferentialForm contraction_defect(int m, const DifferentialForm& eta, Family family);

/// [k_f, d](eta) minus its face expansion
/// (integral of f^* eta) - sum_i (-1)^i k_{f delta_i}(eta); at n = 0 the
/// single summand is eta itself (k_{f delta_0} acts as the identity there).
DifferentialForm commutator_defect(const SimplicialMap& f, const DifferentialForm& eta);

/// K_p(g^* eta) - g^*(K_m eta); identically zero iff the family is simplicial.
DifferentialForm naturality_defect(const SimplicialMap& g, const DifferentialForm& eta,
                                   Family family);

/// Gauge transforms restoring the side conditions: stage one maps K to
/// (dK + Kd) K (dK + Kd), stage two maps the first stage H1 to -H1 d H1.
/// The input operator is used through evaluation only.
std::pair<ContractionOperator, ContractionOperator>
side_condition_transform(const ContractionOperator& K);

} // namespace whitney
