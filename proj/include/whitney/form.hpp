#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "whitney/context.hpp"
#include "whitney/rational.hpp"

namespace whitney {

/// One canonical term: exact coefficient, dense exponent vector over the
/// context's variables (entries of eliminated variables stay zero), and a
/// strictly increasing exterior word stored as a bitmask over the same
/// indices (eliminated bits never set).
struct Term {
    Rational coeff;
    std::vector<int> exponents;
    std::uint32_t exterior = 0;

    int degree() const;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Exact-rational linear combination of (monomial × exterior word) terms in a
/// variable context, kept in canonical reduced form: eliminated variables are
/// substituted away, no two terms share a key, no zero coefficients, and
/// terms are sorted by (exterior length, exterior word lex, exponent lex).
/// The zero form has an empty term list. Values are immutable after
/// construction.
class DifferentialForm {
public:
    static DifferentialForm zero(const VariableContext& ctx);
    static DifferentialForm constant(const VariableContext& ctx, const Rational& c);
    /// The coordinate v as a 0-form; an eliminated coordinate canonicalizes
    /// to 1 - sum of the rest of its group.
    static DifferentialForm coordinate(const VariableContext& ctx, int v);
    /// dv as a 1-form; an eliminated generator canonicalizes to -sum d(rest).
    static DifferentialForm d_coordinate(const VariableContext& ctx, int v);
    /// Raw monomial coeff * prod v^exponents[v] * d(word[0])∧d(word[1])∧...;
    /// exponents and word may mention eliminated variables, the word may be
    /// unsorted (its order fixes the sign) and repeated generators give zero.
    static DifferentialForm monomial(const VariableContext& ctx, const Rational& coeff,
                                     const std::vector<int>& exponents,
                                     const std::vector<int>& word);
    /// Canonical assembly from terms that reference kept variables only;
    /// merges duplicate keys, drops zeros and sorts.
    static DifferentialForm from_terms(const VariableContext& ctx, std::vector<Term> terms);

    const VariableContext& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when every term has exterior length p (vacuously true for zero).
    bool homogeneous(int p) const;

    friend bool operator==(const DifferentialForm& a, const DifferentialForm& b)
    {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

private:
    explicit DifferentialForm(VariableContext ctx) : ctx_(std::move(ctx)) {}

    VariableContext ctx_;
    std::vector<Term> terms_;
};

/// Canonical sum. Requires equal contexts.
DifferentialForm add(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm negate(const DifferentialForm& a);
DifferentialForm scale(const Rational& c, const DifferentialForm& a);

/// Graded-commutative exterior product with exact Koszul signs. Requires
/// equal contexts.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

/// d(p·w) = sum_v (dp/dv) dv ∧ w over the kept polynomial variables.
DifferentialForm differential(const DifferentialForm& a);

/// Sum of the terms of exterior length p; zero for negative p.
DifferentialForm degree_component(const DifferentialForm& a, int p);

/// The algebra homomorphism sending coordinate v to images.at(v) (a 0-form in
/// the target context) and dv to differential(images.at(v)). An image is
/// required for every coordinate of every group of a's context.
DifferentialForm substitute(const DifferentialForm& a,
                            const std::map<int, DifferentialForm>& images,
                            const VariableContext& target);

inline DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b)
{
    return add(a, b);
}
inline DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b)
{
    return add(a, negate(b));
}
inline DifferentialForm operator-(const DifferentialForm& a) { return negate(a); }
inline DifferentialForm operator*(const DifferentialForm& a, const DifferentialForm& b)
{
    return wedge(a, b);
}
inline DifferentialForm operator*(const Rational& c, const DifferentialForm& a)
{
    return scale(c, a);
}

/// Canonical text rendering, e.g. "1/2*x1 - 1/2*x1^2" or "x2*dx1^dx2".
std::string to_string(const DifferentialForm& a);

} // namespace whitney
