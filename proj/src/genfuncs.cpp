#include "partmeth/genfuncs.hpp"

#include <map>
#include <mutex>

namespace partmeth {

DivisorData divisor_data(int j, const std::string& var)
{
    if (j < 1)
        throw std::invalid_argument("divisor data needs j >= 1");
    DivisorData d;
    d.j = j;
    d.gamma_poly = Polynomial(var);
    for (int i = 1; i <= j; ++i) {
        if (j % i)
            continue;
        d.divisors.push_back(i);
        Rational c = rat(i, j);
        d.gamma += c;
        d.gamma_poly += Polynomial::monomial(var, c, j / i);
    }
    return d;
}

namespace {

Integer to_integer(const RingValue& v, const char* what)
{
    const Rational& r = v.as<Rational>();
    if (r.get_den() != 1)
        throw ConsistencyError(std::string(what) + " produced the non-integer " + to_string(r));
    return r.get_num();
}

std::vector<RingValue> gamma_values(int k)
{
    std::vector<RingValue> g{0};
    for (int i = 1; i <= k; ++i)
        g.push_back(divisor_data(i).gamma);
    return g;
}

std::vector<RingValue> gamma_polys(int k, const std::string& var)
{
    std::vector<RingValue> g{Polynomial(var)};
    for (int i = 1; i <= k; ++i)
        g.push_back(divisor_data(i, var).gamma_poly);
    return g;
}

std::vector<RingValue> omega_powers(int k, const std::string& var)
{
    std::vector<RingValue> g;
    for (int n = 0; n <= k; ++n)
        g.push_back(Polynomial::monomial(var, 1, n));
    return g;
}

Polynomial as_poly(const RingValue& v, const std::string& var)
{
    return promote(v, Polynomial(var)).as<Polynomial>();
}

Polynomial negate_var(const Polynomial& p)
{
    Polynomial r(p.var());
    for (int d = 0; d <= p.degree(); ++d)
        r += Polynomial::monomial(p.var(), d % 2 ? Rational(-p.coeff(d)) : p.coeff(d), d);
    return r;
}

// Polynomial in `var` from a MultiPoly whose other variables are absent.
Polynomial collapse(const MultiPoly& m, const std::string& var)
{
    int idx = m.var_index(var);
    Polynomial r(var);
    for (auto& [e, c] : m.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && static_cast<int>(i) != idx)
                throw RingMismatch("polynomial still depends on " + m.vars()[i]);
        r += Polynomial::monomial(var, c, idx < 0 ? 0 : e[static_cast<size_t>(idx)]);
    }
    return r;
}

// Sum over terms of c * prod images[i]^{e_i}; images share one variable list.
MultiPoly remap(const MultiPoly& src, const std::vector<MultiPoly>& images, const std::vector<std::string>& target)
{
    if (images.size() != src.vars().size())
        throw RingMismatch("substitution map does not cover every variable");
    for (auto& im : images)
        if (!im.is_constant() && im.vars() != target)
            throw RingMismatch("substitution image over a different variable list");
    MultiPoly r(target);
    for (auto& [e, c] : src.terms()) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i])
                t = t * images[i].pow(static_cast<unsigned>(e[i]));
        r += t;
    }
    return r;
}

}  // namespace

Integer q_number(int k)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    if (k == 0)
        return 1;
    int j = pentagonal_index(k);
    if (j == 0)
        return 0;
    return (j % 2) ? -1 : 1;
}

Integer q_number_via_p(int k)
{
    std::vector<RingValue> p;
    for (int i = 0; i <= k; ++i)
        p.push_back(Rational(count_partitions(i)));
    Weight w = Weight::phase() * Weight::multinomial() * Weight::element_power(std::move(p));
    return to_integer(apply(k, w), "q_number_via_p");
}

Integer q_number_via_gamma(int k)
{
    Weight w = Weight::phase() * Weight::element_assign(gamma_values(k));
    return to_integer(apply(k, w), "q_number_via_gamma");
}

Integer p_from_q(int k, ApplyOptions opt)
{
    std::vector<RingValue> q;
    for (int i = 0; i <= k; ++i)
        q.push_back(Rational(q_number(i)));
    Weight w = Weight::phase() * Weight::multinomial() * Weight::element_power(std::move(q));
    return to_integer(apply(k, PartitionClass::pentagonal_elements(), w, opt), "p_from_q");
}

Integer p_from_gamma(int k)
{
    return to_integer(apply(k, Weight::element_assign(gamma_values(k))), "p_from_gamma");
}

Polynomial q_poly(int k, const std::string& var)
{
    return as_poly(apply(k, PartitionClass::discrete(), Weight::outer_factor(omega_powers(k, var))), var);
}

Polynomial q_poly_via_gamma(int k, const std::string& var)
{
    Weight w = Weight::phase() * Weight::element_assign(gamma_polys(k, var));
    return negate_var(as_poly(apply(k, w), var));
}

Polynomial p_poly(int k, const std::string& var)
{
    return as_poly(apply(k, Weight::outer_factor(omega_powers(k, var))), var);
}

Polynomial p_poly_via_gamma(int k, const std::string& var)
{
    return as_poly(apply(k, Weight::element_assign(gamma_polys(k, var))), var);
}

Polynomial p_poly_via_q(int k, const std::string& var)
{
    std::vector<RingValue> q;
    for (int i = 0; i <= k; ++i)
        q.push_back(negate_var(q_poly(i, var)));
    Weight w = Weight::phase() * Weight::multinomial() * Weight::element_power(std::move(q));
    return as_poly(apply(k, w), var);
}

namespace {

RingValue ring_of(const std::vector<RingValue>& v)
{
    RingValue proto = 0;
    for (size_t i = 1; i < v.size(); ++i)
        proto = common_prototype(proto, v[i]);
    return proto;
}

}  // namespace

CoefficientTable product_coefficients(const ProductSpec& spec, int kmax, ApplyOptions opt)
{
    if (static_cast<int>(spec.C.size()) <= kmax || static_cast<int>(spec.rho.size()) <= kmax)
        throw std::invalid_argument("product spec must define C_i and rho_i for i = 1.." + std::to_string(kmax));
    Weight w = Weight::phase() * Weight::per_element_pochhammer(spec.rho) * Weight::element_power(spec.C);
    // Every supplied entry fixes the ring, so B_0 has the right type even at kmax = 0.
    RingValue proto = 0;
    for (size_t i = 1; i < spec.C.size(); ++i)
        proto = common_prototype(proto, spec.C[i]);
    for (size_t i = 1; i < spec.rho.size(); ++i)
        proto = common_prototype(proto, spec.rho[i]);
    CoefficientTable b{one_like(proto)};
    for (int k = 1; k <= kmax; ++k)
        b.push_back(promote(apply(k, w, opt), proto));
    return b;
}

CoefficientTable product_series_discrete(const std::vector<RingValue>& C, int kmax)
{
    Weight w = Weight::element_power(C);
    RingValue proto = ring_of(C);
    CoefficientTable h{one_like(proto)};
    for (int k = 1; k <= kmax; ++k)
        h.push_back(promote(apply(k, PartitionClass::discrete(), w), proto));
    return h;
}

CoefficientTable reciprocal_product_series(const std::vector<RingValue>& C, int kmax)
{
    Weight w = Weight::phase() * Weight::element_power(C);
    RingValue proto = ring_of(C);
    CoefficientTable h{one_like(proto)};
    for (int k = 1; k <= kmax; ++k)
        h.push_back(promote(apply(k, w), proto));
    return h;
}

std::vector<Rational> exp_product_C(int kmax)
{
    if (kmax < 1)
        throw std::invalid_argument("kmax must be at least 1");
    std::vector<Rational> c{Rational(0), Rational(1)};
    for (int i = 2; i <= kmax; ++i) {
        // sum_{d|i} (-1)^{d+1} C_{i/d}^d / d = 0, the d = 1 term being C_i itself
        Rational s = 0;
        for (int d = 2; d <= i; ++d) {
            if (i % d)
                continue;
            Rational t = rational_pow(c[static_cast<size_t>(i / d)], d) / d;
            s += (d % 2) ? t : Rational(-t);
        }
        c.push_back(-s);
    }
    return c;
}

MultiPoly q_omega_rho(int k)
{
    std::vector<std::string> vars{"w", "r"};
    if (k == 0)
        return MultiPoly::constant(vars, 1);
    RingValue w = MultiPoly::variable(vars, "w");
    RingValue r = MultiPoly::variable(vars, "r");
    ProductSpec spec{std::vector<RingValue>(static_cast<size_t>(k) + 1, w),
                     std::vector<RingValue>(static_cast<size_t>(k) + 1, r)};
    return product_coefficients(spec, k).back().as<MultiPoly>();
}

MultiPoly q_omega_rho_via_power(int k)
{
    std::vector<std::string> vars{"w", "r"};
    CoefficientTable d;
    for (int j = 0; j <= k; ++j)
        d.push_back(MultiPoly::from_poly(vars, q_poly(j, "w")));
    RingValue r = MultiPoly::variable(vars, "r");
    return expand_power(d, r).back().as<MultiPoly>();
}

Polynomial q_omega_rho_at(int k, const Rational& rho, const std::string& var)
{
    MultiPoly m = q_omega_rho(k).eval_at("r", rho);
    Polynomial p = collapse(m, "w");
    return Polynomial(var, p.coeffs());
}

MultiPoly qp_poly(int k)
{
    std::vector<std::string> vars{"w", "b", "a"};
    MultiPoly w = MultiPoly::variable(vars, "w");
    MultiPoly minus_bw = -(MultiPoly::variable(vars, "b") * w);
    MultiPoly aw = MultiPoly::variable(vars, "a") * w;
    MultiPoly r(vars);
    for (int j = 0; j <= k; ++j)
        r += MultiPoly::substitute(q_poly(j), minus_bw) * MultiPoly::substitute(p_poly(k - j), aw);
    return r;
}

MultiPoly hp_poly(int k)
{
    std::vector<std::string> vars{"w", "x", "y"};
    MultiPoly w = MultiPoly::variable(vars, "w");
    MultiPoly x = MultiPoly::variable(vars, "x");
    MultiPoly y = MultiPoly::variable(vars, "y");
    MultiPoly one = MultiPoly::constant(vars, 1);
    std::vector<MultiPoly> left, right;
    for (int j = 0; j <= k; ++j) {
        MultiPoly qp = qp_poly(j);
        left.push_back(remap(qp, {w, x, one}, vars));
        right.push_back(remap(qp, {w, y, x * y}, vars));
    }
    MultiPoly r(vars);
    for (int j = 0; j <= k; ++j)
        r += left[static_cast<size_t>(j)] * right[static_cast<size_t>(k - j)];
    return r;
}

std::vector<Integer> discrete_count_table(int kmax)
{
    std::vector<Integer> q1{1};
    auto q = [](int i) { return q_number(i); };
    for (int n = 1; n <= kmax; ++n) {
        int k = n / 2;
        Integer s = 0;
        int top = (n % 2) ? k : k - 1;
        for (int j = 1; j <= top; ++j)
            s += q(j) * q1[static_cast<size_t>(n - j)] + q(n - j) * q1[static_cast<size_t>(j)];
        Integer v;
        if (n % 2)
            v = -q(n) - s;
        else
            v = q(k) * (1 - q1[static_cast<size_t>(k)]) - s - q(n);
        q1.push_back(v);
    }
    return q1;
}

Integer discrete_count_recurrence(int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    static std::mutex m;
    static std::vector<Integer> cache;
    std::lock_guard<std::mutex> lock(m);
    if (static_cast<int>(cache.size()) <= k)
        cache = discrete_count_table(k);
    return cache[static_cast<size_t>(k)];
}

}  // namespace partmeth
