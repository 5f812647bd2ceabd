#include "whitney/form.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace whitney {

namespace {

// Lexicographic order of exterior words read as ascending index sequences.
// For words of equal length the one owning the lowest differing bit starts
// with the smaller generator.
bool exterior_lex_less(std::uint32_t a, std::uint32_t b)
{
    const std::uint32_t d = a ^ b;
    if (d == 0)
        return false;
    return (a & (d & -d)) != 0;
}

struct TermKey {
    std::uint32_t exterior;
    std::vector<int> exponents;

    bool operator<(const TermKey& o) const
    {
        const int la = std::popcount(exterior);
        const int lb = std::popcount(o.exterior);
        if (la != lb)
            return la < lb;
        if (exterior != o.exterior)
            return exterior_lex_less(exterior, o.exterior);
        return exponents < o.exponents;
    }
};

using Accumulator = std::map<TermKey, Rational>;

void accumulate(Accumulator& acc, const Term& t)
{
    auto [it, inserted] = acc.try_emplace(TermKey{t.exterior, t.exponents}, t.coeff);
    if (!inserted)
        it->second += t.coeff;
}

// Parity sign of merging ascending word a before ascending word b.
int merge_sign(std::uint32_t a, std::uint32_t b)
{
    int inversions = 0;
    std::uint32_t rest = a;
    while (rest) {
        const int bit = std::countr_zero(rest);
        inversions += std::popcount(b & ((1u << bit) - 1));
        rest &= rest - 1;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

void check_same_context(const DifferentialForm& a, const DifferentialForm& b)
{
    if (!(a.context() == b.context()))
        throw std::invalid_argument("forms live in different variable contexts");
}

DifferentialForm pow0(const DifferentialForm& base, int e)
{
    DifferentialForm r = DifferentialForm::constant(base.context(), 1);
    for (int i = 0; i < e; ++i)
        r = wedge(r, base);
    return r;
}

} // namespace

int Term::degree() const
{
    return std::popcount(exterior);
}

DifferentialForm DifferentialForm::zero(const VariableContext& ctx)
{
    return DifferentialForm(ctx);
}

DifferentialForm DifferentialForm::constant(const VariableContext& ctx, const Rational& c)
{
    DifferentialForm f(ctx);
    if (c != 0)
        f.terms_.push_back(Term{c, std::vector<int>(static_cast<std::size_t>(ctx.var_count()), 0), 0});
    return f;
}

DifferentialForm DifferentialForm::from_terms(const VariableContext& ctx, std::vector<Term> terms)
{
    Accumulator acc;
    for (auto& t : terms) {
        if (t.exponents.size() != static_cast<std::size_t>(ctx.var_count()))
            throw std::invalid_argument("from_terms: exponent vector has wrong length");
        for (int v = 0; v < ctx.var_count(); ++v)
            if (ctx.eliminated(v) && (t.exponents[static_cast<std::size_t>(v)] != 0 ||
                                      (t.exterior >> v) & 1u))
                throw std::invalid_argument("from_terms: eliminated variable present");
        if (t.coeff != 0)
            accumulate(acc, t);
    }
    DifferentialForm f(ctx);
    for (auto& [key, coeff] : acc)
        if (coeff != 0)
            f.terms_.push_back(Term{coeff, key.exponents, key.exterior});
    return f;
}

DifferentialForm DifferentialForm::coordinate(const VariableContext& ctx, int v)
{
    if (v < 0 || v >= ctx.var_count())
        throw std::invalid_argument("coordinate: index out of range");
    const auto n = static_cast<std::size_t>(ctx.var_count());
    std::vector<Term> terms;
    if (!ctx.eliminated(v)) {
        std::vector<int> e(n, 0);
        e[static_cast<std::size_t>(v)] = 1;
        terms.push_back(Term{1, std::move(e), 0});
    } else {
        // y_0 = 1 - sum of the other coordinates of its affine group.
        terms.push_back(Term{1, std::vector<int>(n, 0), 0});
        const int g = ctx.group_of(v);
        const int first = ctx.group_first(g);
        for (int i = 1; i < ctx.group_size(g); ++i) {
            std::vector<int> e(n, 0);
            e[static_cast<std::size_t>(first + i)] = 1;
            terms.push_back(Term{-1, std::move(e), 0});
        }
    }
    return from_terms(ctx, std::move(terms));
}

DifferentialForm DifferentialForm::d_coordinate(const VariableContext& ctx, int v)
{
    if (v < 0 || v >= ctx.var_count())
        throw std::invalid_argument("d_coordinate: index out of range");
    const auto n = static_cast<std::size_t>(ctx.var_count());
    std::vector<Term> terms;
    if (!ctx.eliminated(v)) {
        terms.push_back(Term{1, std::vector<int>(n, 0), 1u << v});
    } else {
        // dy_0 = -sum of the other exterior generators of its affine group.
        const int g = ctx.group_of(v);
        const int first = ctx.group_first(g);
        for (int i = 1; i < ctx.group_size(g); ++i)
            terms.push_back(Term{-1, std::vector<int>(n, 0), 1u << (first + i)});
    }
    return from_terms(ctx, std::move(terms));
}

DifferentialForm DifferentialForm::monomial(const VariableContext& ctx, const Rational& coeff,
                                            const std::vector<int>& exponents,
                                            const std::vector<int>& word)
{
    if (exponents.size() != static_cast<std::size_t>(ctx.var_count()))
        throw std::invalid_argument("monomial: exponent vector has wrong length");
    DifferentialForm r = constant(ctx, coeff);
    for (int v = 0; v < ctx.var_count(); ++v) {
        const int e = exponents[static_cast<std::size_t>(v)];
        if (e < 0)
            throw std::invalid_argument("monomial: negative exponent");
        if (e > 0)
            r = wedge(r, pow0(coordinate(ctx, v), e));
    }
    for (int v : word)
        r = wedge(r, d_coordinate(ctx, v));
    return r;
}

bool DifferentialForm::homogeneous(int p) const
{
    for (const auto& t : terms_)
        if (t.degree() != p)
            return false;
    return true;
}

DifferentialForm add(const DifferentialForm& a, const DifferentialForm& b)
{
    check_same_context(a, b);
    Accumulator acc;
    for (const auto& t : a.terms())
        accumulate(acc, t);
    for (const auto& t : b.terms())
        accumulate(acc, t);
    std::vector<Term> terms;
    for (auto& [key, coeff] : acc)
        if (coeff != 0)
            terms.push_back(Term{coeff, key.exponents, key.exterior});
    return DifferentialForm::from_terms(a.context(), std::move(terms));
}

DifferentialForm negate(const DifferentialForm& a)
{
    return scale(-1, a);
}

DifferentialForm scale(const Rational& c, const DifferentialForm& a)
{
    if (c == 0)
        return DifferentialForm::zero(a.context());
    std::vector<Term> terms = a.terms();
    for (auto& t : terms)
        t.coeff *= c;
    return DifferentialForm::from_terms(a.context(), std::move(terms));
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b)
{
    check_same_context(a, b);
    Accumulator acc;
    const auto n = static_cast<std::size_t>(a.context().var_count());
    for (const auto& s : a.terms()) {
        for (const auto& t : b.terms()) {
            if (s.exterior & t.exterior)
                continue;
            Term prod;
            prod.coeff = s.coeff * t.coeff;
            if (merge_sign(s.exterior, t.exterior) < 0)
                prod.coeff = -prod.coeff;
            prod.exterior = s.exterior | t.exterior;
            prod.exponents.resize(n);
            for (std::size_t v = 0; v < n; ++v)
                prod.exponents[v] = s.exponents[v] + t.exponents[v];
            accumulate(acc, prod);
        }
    }
    std::vector<Term> terms;
    for (auto& [key, coeff] : acc)
        if (coeff != 0)
            terms.push_back(Term{coeff, key.exponents, key.exterior});
    return DifferentialForm::from_terms(a.context(), std::move(terms));
}

DifferentialForm differential(const DifferentialForm& a)
{
    const auto& ctx = a.context();
    std::vector<Term> terms;
    for (const auto& t : a.terms()) {
        for (int v = 0; v < ctx.var_count(); ++v) {
            const int e = t.exponents[static_cast<std::size_t>(v)];
            if (e == 0 || ((t.exterior >> v) & 1u))
                continue;
            Term dt;
            dt.coeff = t.coeff * e;
            if (std::popcount(t.exterior & ((1u << v) - 1)) % 2 != 0)
                dt.coeff = -dt.coeff;
            dt.exponents = t.exponents;
            --dt.exponents[static_cast<std::size_t>(v)];
            dt.exterior = t.exterior | (1u << v);
            terms.push_back(std::move(dt));
        }
    }
    return DifferentialForm::from_terms(ctx, std::move(terms));
}

DifferentialForm degree_component(const DifferentialForm& a, int p)
{
    std::vector<Term> terms;
    if (p >= 0)
        for (const auto& t : a.terms())
            if (t.degree() == p)
                terms.push_back(t);
    return DifferentialForm::from_terms(a.context(), std::move(terms));
}

DifferentialForm substitute(const DifferentialForm& a,
                            const std::map<int, DifferentialForm>& images,
                            const VariableContext& target)
{
    const auto& ctx = a.context();
    for (int v = 0; v < ctx.var_count(); ++v) {
        auto it = images.find(v);
        if (it == images.end())
            throw std::invalid_argument("substitute: missing image for " + ctx.name(v));
        if (!(it->second.context() == target))
            throw std::invalid_argument("substitute: image context mismatch for " + ctx.name(v));
        if (!it->second.homogeneous(0))
            throw std::invalid_argument("substitute: image of " + ctx.name(v) +
                                        " must be a polynomial 0-form");
    }
    DifferentialForm result = DifferentialForm::zero(target);
    for (const auto& t : a.terms()) {
        DifferentialForm prod = DifferentialForm::constant(target, t.coeff);
        for (int v = 0; v < ctx.var_count(); ++v) {
            const int e = t.exponents[static_cast<std::size_t>(v)];
            if (e > 0)
                prod = wedge(prod, pow0(images.at(v), e));
        }
        std::uint32_t rest = t.exterior;
        while (rest) {
            const int v = std::countr_zero(rest);
            prod = wedge(prod, differential(images.at(v)));
            rest &= rest - 1;
        }
        result = add(result, prod);
    }
    return result;
}

std::string to_string(const DifferentialForm& a)
{
    if (a.is_zero())
        return "0";
    const auto& ctx = a.context();
    std::ostringstream os;
    bool first = true;
    for (const auto& t : a.terms()) {
        const bool neg = t.coeff < 0;
        if (first) {
            if (neg)
                os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const Rational mag = neg ? Rational(-t.coeff) : t.coeff;
        std::vector<std::string> poly_atoms;
        for (int v = 0; v < ctx.var_count(); ++v) {
            const int e = t.exponents[static_cast<std::size_t>(v)];
            if (e == 1)
                poly_atoms.push_back(ctx.name(v));
            else if (e > 1)
                poly_atoms.push_back(ctx.name(v) + "^" + std::to_string(e));
        }
        std::vector<std::string> ext_atoms;
        std::uint32_t rest = t.exterior;
        while (rest) {
            const int v = std::countr_zero(rest);
            ext_atoms.push_back("d" + ctx.name(v));
            rest &= rest - 1;
        }
        const bool has_atoms = !poly_atoms.empty() || !ext_atoms.empty();
        bool printed = false;
        if (mag != 1 || !has_atoms) {
            os << mag.get_str();
            printed = true;
        }
        for (const auto& atom : poly_atoms) {
            if (printed)
                os << '*';
            os << atom;
            printed = true;
        }
        if (!ext_atoms.empty()) {
            if (printed)
                os << '*';
            for (std::size_t i = 0; i < ext_atoms.size(); ++i) {
                if (i)
                    os << '^';
                os << ext_atoms[i];
            }
        }
    }
    return os.str();
}

} // namespace whitney
