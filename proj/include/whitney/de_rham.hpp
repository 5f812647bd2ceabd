#pragma once

#include <map>

#include "whitney/form.hpp"
#include "whitney/simplex.hpp"

namespace whitney {

/// f^*: Omega_m -> Omega_n along f:[n]->[m]; substitutes
/// x_j -> sum of x_i over the fiber f^{-1}(j) (empty sum = 0).
DifferentialForm pullback(const SimplicialMap& f, const DifferentialForm& eta);

/// Whitney elementary form of an arbitrary index tuple (i_0,...,i_q) over
/// Std(m): q! * sum_i (-1)^i x_{i_i} dx_{i_0}∧...(skip i)...∧dx_{i_q}.
/// Alternating in the indices; repeated indices give zero.
DifferentialForm whitney_tuple(const std::vector<int>& indices, int m);

/// omega_f over Std(codomain of f); zero when f is not injective.
DifferentialForm whitney_form(const SimplicialMap& f);

/// Integration over the standard simplex carried by eta's context (a single
/// affine group): zero off the top exterior degree, and on the canonical top
/// component each monomial contributes prod(k_v!) / (sum k + dim)!.
Rational integrate(const DifferentialForm& eta);

/// Same integral read over the hat simplex coordinates (s,t_0,...,t_n), the
/// (n+1)-dimensional simplex of the k-construction.
Rational integrate_hat(const DifferentialForm& eta);

/// pi_m: sum over n and f in I(n,m) of (integral of f^* eta) * omega_f.
DifferentialForm elementary_projection(int m, const DifferentialForm& eta);

/// Coefficients of a form of C_m in the Whitney basis, keyed by the injective
/// map. Zero coefficients are omitted.
struct ElementaryCoordinates {
    std::map<SimplicialMap, Rational> entries;
};

/// Reads coefficients off the integration pairing (integral of f^* eta);
/// throws std::domain_error("input not in C_m") when reconstruction fails.
ElementaryCoordinates elementary_coordinates(int m, const DifferentialForm& eta);

} // namespace whitney
