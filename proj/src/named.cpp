#include "partmeth/named.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace partmeth {

const char* family_name(Family f)
{
    switch (f) {
    case Family::Cosecant: return "cosecant";
    case Family::Secant: return "secant";
    case Family::ReciprocalLog: return "reciprocal-log";
    }
    return "?";
}

namespace {

Rational inv_fact(unsigned n)
{
    return Rational(1) / Rational(factorial(n));
}

// Inner coefficient p_i of each family, i >= 1.
Rational inner_coefficient(Family f, int i)
{
    int sign = (i % 2) ? 1 : -1;  // (-1)^{i+1}
    switch (f) {
    case Family::Cosecant: return sign * inv_fact(static_cast<unsigned>(2 * i + 1));
    case Family::Secant: return sign * inv_fact(static_cast<unsigned>(2 * i));
    case Family::ReciprocalLog: return rat(-sign, i + 1);
    }
    return 0;
}

// Positive reciprocal weights used by the generalized OverInner route.
Rational inner_magnitude(Family f, int i)
{
    switch (f) {
    case Family::Cosecant: return inv_fact(static_cast<unsigned>(2 * i + 1));
    case Family::Secant: return inv_fact(static_cast<unsigned>(2 * i));
    case Family::ReciprocalLog: return rat(1, i + 1);
    }
    return 0;
}

std::vector<Rational> recurrence_table(Family f, int kmax)
{
    std::vector<Rational> t{Rational(1)};
    for (int k = 1; k <= kmax; ++k) {
        Rational s = 0;
        for (int j = 0; j < k; ++j) {
            int m = k - j;
            Rational term;
            switch (f) {
            case Family::Cosecant:
                term = ((m - 1) % 2 ? -1 : 1) * inv_fact(static_cast<unsigned>(2 * m + 1));
                break;
            case Family::Secant:
                term = ((m - 1) % 2 ? -1 : 1) * inv_fact(static_cast<unsigned>(2 * m));
                break;
            case Family::ReciprocalLog:
                term = rat((m + 1) % 2 ? -1 : 1, m + 1);
                break;
            }
            s += term * t[static_cast<size_t>(j)];
        }
        t.push_back(s);
    }
    return t;
}

std::vector<Rational> to_rationals(const CoefficientTable& t)
{
    std::vector<Rational> r;
    r.reserve(t.size());
    for (auto& v : t)
        r.push_back(v.as<Rational>());
    return r;
}

}  // namespace

SeriesSpec family_spec(Family f, int kmax)
{
    SeriesSpec s;
    s.kmax = kmax;
    s.inner.push_back(0);
    for (int i = 1; i <= kmax; ++i)
        s.inner.push_back(inner_coefficient(f, i));
    OuterQ q;
    for (int n = 0; n <= kmax; ++n)
        q.q.push_back(f == Family::ReciprocalLog && n % 2 ? -1 : 1);
    s.outer = q;
    return s;
}

std::vector<Rational> family_table(Family f, int kmax, Route route)
{
    if (route == Route::Recurrence)
        return recurrence_table(f, kmax);
    return to_rationals(expand(family_spec(f, kmax)));
}

namespace {

Rational cached(Family f, int k)
{
    static std::mutex m;
    static std::map<Family, std::vector<Rational>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto& t = cache[f];
    if (static_cast<int>(t.size()) <= k)
        t = family_table(f, k);
    return t[static_cast<size_t>(k)];
}

}  // namespace

Rational cosecant(int k)
{
    return cached(Family::Cosecant, k);
}

Rational secant(int k)
{
    return cached(Family::Secant, k);
}

Rational reciprocal_log(int k)
{
    return cached(Family::ReciprocalLog, k);
}

Rational reciprocal_log_stirling(int k)
{
    if (k == 0)
        return 1;
    Rational s = 0;
    for (int j = 1; j <= k; ++j)
        s += Rational(stirling_first(k, j)) / (j + 1);
    return s / Rational(factorial(static_cast<unsigned>(k)));
}

Rational bernoulli(int n)
{
    static std::mutex m;
    static std::vector<Rational> b{Rational(1)};
    std::lock_guard<std::mutex> lock(m);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    for (int mm = static_cast<int>(b.size()); mm <= n; ++mm) {
        Rational s = 0;
        for (int j = 0; j < mm; ++j)
            s += Rational(binomial(mm + 1, j)) * b[static_cast<size_t>(j)];
        b.push_back(-s / (mm + 1));
    }
    return b[static_cast<size_t>(n)];
}

Rational cosecant_from_bernoulli(int k)
{
    Rational pow2 = Rational(Integer(1) << static_cast<mp_bitcnt_t>(2 * k));
    Rational r = (pow2 - 2) * bernoulli(2 * k) / Rational(factorial(static_cast<unsigned>(2 * k)));
    return (k % 2) ? r : Rational(-r);
}

std::vector<Polynomial> generalized_table(Family f, int kmax, GeneralizedRoute route, const std::string& var)
{
    RingValue rho = Polynomial::variable(var);
    std::vector<Polynomial> out;
    if (route == GeneralizedRoute::OverNumbers) {
        std::vector<Rational> base = family_table(f, kmax);
        CoefficientTable d(base.begin(), base.end());
        for (auto& v : expand_power(d, rho))
            out.push_back(promote(v, rho).as<Polynomial>());
        return out;
    }
    // (-1)^k L[(-1)^N (rho)_N prod w_i^{n_i}/n_i!]
    std::vector<RingValue> w{0};
    for (int i = 1; i <= kmax; ++i)
        w.push_back(inner_magnitude(f, i));
    Weight wt = Weight::phase() * Weight::pochhammer_total(rho, false) * Weight::element_assign(w);
    out.push_back(Polynomial::constant(var, 1));
    for (int k = 1; k <= kmax; ++k) {
        Polynomial p = promote(apply(k, wt), rho).as<Polynomial>();
        out.push_back(k % 2 ? -p : p);
    }
    return out;
}

Polynomial generalized(Family f, int k, GeneralizedRoute route, const std::string& var)
{
    return generalized_table(f, k, route, var).back();
}

namespace {

// (nu+1)_m as a polynomial in var.
Polynomial shifted_pochhammer(int m, const std::string& var)
{
    Polynomial p = Polynomial::constant(var, 1);
    for (int j = 1; j <= m; ++j)
        p *= Polynomial(var, {Rational(j), Rational(1)});
    return p;
}

}  // namespace

std::vector<RingValue> bessel_inner(int kmax, const Rational& scale, const std::string& var)
{
    std::vector<RingValue> p{RationalFunction(Polynomial(var))};
    Rational s = 1;
    for (int i = 1; i <= kmax; ++i) {
        s *= scale;
        Rational c = (i % 2 ? -s : s) * inv_fact(static_cast<unsigned>(i));
        p.push_back(RationalFunction(Polynomial::constant(var, c), shifted_pochhammer(i, var)));
    }
    return p;
}

std::vector<RationalFunction> bessel_h_table(int kmax, Route route, const std::string& var)
{
    std::vector<RationalFunction> h;
    if (route == Route::Operator) {
        SeriesSpec s;
        s.kmax = kmax;
        s.inner = bessel_inner(kmax, 1, var);
        OuterQ q;
        for (int n = 0; n <= kmax; ++n)
            q.q.push_back(n % 2 ? -1 : 1);
        s.outer = q;
        for (auto& v : expand(s))
            h.push_back(promote(v, RationalFunction(Polynomial(var))).as<RationalFunction>());
        return h;
    }
    // h_k = sum_{j<k} (-1)^{k-j+1} h_j / ((k-j)! (nu+1)_{k-j})
    std::vector<RationalFunction> w{RationalFunction(Polynomial::constant(var, 1))};
    for (int m = 1; m <= kmax; ++m)
        w.emplace_back(Polynomial::constant(var, (m % 2 ? 1 : -1) * inv_fact(static_cast<unsigned>(m))),
                       shifted_pochhammer(m, var));
    h.push_back(RationalFunction(Polynomial::constant(var, 1)));
    for (int k = 1; k <= kmax; ++k) {
        RationalFunction s{Polynomial(var)};
        for (int j = 0; j < k; ++j)
            s += h[static_cast<size_t>(j)] * w[static_cast<size_t>(k - j)];
        h.push_back(s);
    }
    return h;
}

RationalFunction bessel_h(int k)
{
    static std::mutex m;
    static std::vector<RationalFunction> cache;
    std::lock_guard<std::mutex> lock(m);
    if (static_cast<int>(cache.size()) <= k)
        cache = bessel_h_table(k);
    return cache[static_cast<size_t>(k)];
}

std::vector<Rational> bessel_h_at(const Rational& nu, int kmax)
{
    std::vector<Rational> w{Rational(1)};
    Rational poch = 1;
    for (int m = 1; m <= kmax; ++m) {
        poch *= nu + m;
        if (poch == 0)
            throw PoleError("(nu+1)_m vanishes at this nu");
        w.push_back((m % 2 ? 1 : -1) / (poch * Rational(factorial(static_cast<unsigned>(m)))));
    }
    std::vector<Rational> h{Rational(1)};
    for (int k = 1; k <= kmax; ++k) {
        Rational s = 0;
        for (int j = 0; j < k; ++j)
            s += h[static_cast<size_t>(j)] * w[static_cast<size_t>(k - j)];
        h.push_back(s);
    }
    return h;
}

std::vector<Complex> bessel_h_at(Complex nu, int kmax)
{
    std::vector<Complex> w{Complex(1)};
    Complex poch = 1;
    double fact = 1;
    for (int m = 1; m <= kmax; ++m) {
        poch *= nu + static_cast<double>(m);
        fact *= m;
        if (std::abs(poch) == 0)
            throw PoleError("(nu+1)_m vanishes at this nu");
        w.push_back((m % 2 ? 1.0 : -1.0) / (poch * fact));
    }
    std::vector<Complex> h{Complex(1)};
    for (int k = 1; k <= kmax; ++k) {
        Complex s = 0;
        for (int j = 0; j < k; ++j)
            s += h[static_cast<size_t>(j)] * w[static_cast<size_t>(k - j)];
        h.push_back(s);
    }
    return h;
}

namespace {

std::pair<Complex, Complex> zero_pair(Complex hk, Complex hk1)
{
    if (std::abs(hk1) == 0)
        throw PoleError("h_{k+1} vanishes at this nu");
    Complex z = 2.0 * std::sqrt(hk / hk1);
    return {z, -z};
}

}  // namespace

std::pair<Complex, Complex> bessel_zero_estimate(const Rational& nu, int k)
{
    auto h = bessel_h_at(nu, k + 1);
    if (h[static_cast<size_t>(k) + 1] == 0)
        throw PoleError("h_{k+1} vanishes at this nu");
    Rational ratio = h[static_cast<size_t>(k)] / h[static_cast<size_t>(k) + 1];
    return zero_pair(Complex(to_double(ratio), 0), Complex(1, 0));
}

std::pair<Complex, Complex> bessel_zero_estimate(Complex nu, int k)
{
    auto h = bessel_h_at(nu, k + 1);
    return zero_pair(h[static_cast<size_t>(k)], h[static_cast<size_t>(k) + 1]);
}

double slow_series_partial(SlowSeries which, int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    std::vector<Rational> a = family_table(Family::ReciprocalLog, n, Route::Recurrence);
    Rational s = 0;
    for (int k = 1; k <= n; ++k) {
        Rational t = a[static_cast<size_t>(k)] / (which == SlowSeries::EulerGamma ? k : k + 1);
        s += (k % 2) ? Rational(-t) : t;
    }
    if (which == SlowSeries::EulerGamma)
        return to_double(-s);
    // The sum from k = 1 omits the A_0 term, so it tends to ln 2 - 1.
    return to_double(Rational(1 + s));
}

}  // namespace partmeth
