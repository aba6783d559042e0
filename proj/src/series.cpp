#include "partmeth/series.hpp"

namespace partmeth {

namespace {

bool is_one(const RingValue& v)
{
    return v == lift(1, v);
}

}  // namespace

void SeriesSpec::validate() const
{
    if (kmax < 0)
        throw SeriesError("kmax must be nonnegative");
    if (static_cast<int>(inner.size()) < kmax + 1)
        throw SeriesError("inner coefficients must be supplied for indices 0.." + std::to_string(kmax));
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            size_t n = 0;
            if constexpr (std::is_same_v<T, OuterQ>)
                n = o.q.size();
            else
                n = o.derivatives.size();
            if (static_cast<int>(n) < kmax + 1)
                throw SeriesError("outer coefficients must be supplied for indices 0.." + std::to_string(kmax));
        },
        outer);
}

Weight series_weight(const SeriesSpec& spec)
{
    std::vector<RingValue> g(static_cast<size_t>(spec.kmax) + 1);
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            RingValue apow = one_like(o.a);
            for (int n = 0; n <= spec.kmax; ++n) {
                if (n > 0)
                    apow = apow * o.a;
                if constexpr (std::is_same_v<T, OuterQ>)
                    g[static_cast<size_t>(n)] =
                        ring_scale(mixed_mul(o.q[static_cast<size_t>(n)], apow), Rational(factorial(static_cast<unsigned>(n))));
                else
                    g[static_cast<size_t>(n)] = mixed_mul(o.derivatives[static_cast<size_t>(n)], apow);
            }
        },
        spec.outer);
    std::vector<RingValue> p(spec.inner.begin(), spec.inner.begin() + spec.kmax + 1);
    return Weight::outer_factor(std::move(g)) * Weight::element_assign(std::move(p));
}

CoefficientTable expand(const SeriesSpec& spec, ApplyOptions opt)
{
    spec.validate();
    Weight w = series_weight(spec);
    CoefficientTable d;
    d.push_back(std::visit(
        [](const auto& o) -> RingValue {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, OuterQ>)
                return o.q[0];
            else
                return o.derivatives[0];
        },
        spec.outer));
    for (int k = 1; k <= spec.kmax; ++k)
        d.push_back(apply(k, w, opt));
    return d;
}

namespace {

// 1/D_0 when D_0 is a unit of its ring.
RingValue unit_inverse(const RingValue& d0)
{
    if (d0.is_zero())
        throw SeriesError("cannot invert a series with zero constant term");
    switch (d0.tag()) {
    case RingTag::Rational: return Rational(Rational(1) / d0.as<Rational>());
    case RingTag::Complex: return Complex(1) / d0.as<Complex>();
    case RingTag::RationalFunction: {
        const auto& f = d0.as<RationalFunction>();
        return RationalFunction(f.den(), f.num());
    }
    case RingTag::Polynomial: {
        const auto& p = d0.as<Polynomial>();
        if (p.is_constant())
            return Polynomial::constant(p.var(), Rational(1) / p.coeff(0));
        break;
    }
    case RingTag::MultiPoly: {
        const auto& p = d0.as<MultiPoly>();
        if (p.is_constant())
            return MultiPoly::constant(p.vars(), Rational(1) / p.coeff(MultiPoly::Exponents(p.vars().size(), 0)));
        break;
    }
    }
    throw SeriesError("constant term is not a unit of its ring; inversion unsupported");
}

}  // namespace

CoefficientTable invert(const CoefficientTable& d, ApplyOptions opt)
{
    if (d.empty())
        throw SeriesError("empty coefficient table");
    int kmax = static_cast<int>(d.size()) - 1;
    RingValue inv = unit_inverse(d[0]);
    // (-1)^N N! D_0^{-N}
    std::vector<RingValue> g;
    RingValue pw = one_like(inv);
    for (int n = 0; n <= kmax; ++n) {
        if (n > 0)
            pw = pw * inv;
        RingValue t = ring_scale(pw, Rational(factorial(static_cast<unsigned>(n))));
        g.push_back(n % 2 ? ring_neg(t) : t);
    }
    Weight w = Weight::outer_factor(g) * Weight::element_assign(d);
    CoefficientTable e{one_like(d[0])};
    for (int k = 1; k <= kmax; ++k)
        e.push_back(apply(k, w, opt));
    return e;
}

CoefficientTable expand_power(const CoefficientTable& d, const RingValue& rho, ApplyOptions opt)
{
    if (d.empty())
        throw SeriesError("empty coefficient table");
    if (!is_one(d[0]))
        throw SeriesError("expand_power requires D_0 = 1");
    int kmax = static_cast<int>(d.size()) - 1;
    // (-1)^N (-rho)_N prod D_i^{n_i}/n_i!
    Weight w = Weight::phase() * Weight::pochhammer_total(rho, true) * Weight::element_assign(d);
    RingValue proto = common_prototype(d[0], rho);
    for (const auto& x : d)
        proto = common_prototype(proto, x);
    CoefficientTable out{one_like(proto)};
    for (int k = 1; k <= kmax; ++k)
        out.push_back(promote(apply(k, w, opt), proto));
    return out;
}

bool check_cauchy_inverse(const CoefficientTable& d, const CoefficientTable& e)
{
    if (d.size() != e.size())
        return false;
    for (size_t k = 1; k < d.size(); ++k) {
        RingValue s = mixed_mul(d[0], e[k]);
        for (size_t j = 1; j <= k; ++j)
            s = mixed_add(s, mixed_mul(d[j], e[k - j]));
        if (!s.is_zero())
            return false;
    }
    return true;
}

CoefficientTable derivatives_at_zero(const CoefficientTable& d)
{
    CoefficientTable r;
    for (size_t k = 0; k < d.size(); ++k)
        r.push_back(ring_scale(d[k], Rational(factorial(static_cast<unsigned>(k)))));
    return r;
}

}  // namespace partmeth
