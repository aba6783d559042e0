#include "partmeth/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace partmeth {

Rational rat(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0)
        return 0;
    Integer r;
    if (n >= 0) {
        if (k > n)
            return 0;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    Integer nn = n;
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Rational rational_pow(const Rational& x, long e)
{
    if (e < 0) {
        if (x == 0)
            throw RingError("zero raised to a negative power");
        return rational_pow(1 / x, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

double to_double(const Rational& x)
{
    // mpq_get_d truncates; go through mpf for a correctly scaled value on huge operands.
    mpf_class f(x, 256);
    return f.get_d();
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::string var, std::vector<Rational> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::constant(std::string var, const Rational& c)
{
    return Polynomial(std::move(var), {c});
}

Polynomial Polynomial::monomial(std::string var, const Rational& c, int degree)
{
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(var), std::move(v));
}

Polynomial Polynomial::variable(std::string var)
{
    return monomial(std::move(var), 1, 1);
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

void Polynomial::adopt_var(const Polynomial& o)
{
    if (var_ == o.var_ || o.is_constant())
        return;
    if (is_constant()) {
        var_ = o.var_;
        return;
    }
    throw RingMismatch("polynomials in different variables: " + var_ + ", " + o.var_);
}

Rational Polynomial::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return 0;
    return c_[static_cast<size_t>(i)];
}

Rational Polynomial::leading() const
{
    return c_.empty() ? Rational(0) : c_.back();
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    adopt_var(o);
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    adopt_var(o);
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    adopt_var(o);
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.c_ != b.c_)
        return false;
    return a.var_ == b.var_ || a.is_constant();
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial r = constant(var_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u)
            r *= base;
        e >>= 1u;
        if (e)
            base *= base;
    }
    return r;
}

Polynomial Polynomial::compose(const Polynomial& q) const
{
    Polynomial r(q.var());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= q;
        r += constant(q.var(), *it);
    }
    return r;
}

Rational Polynomial::eval(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + *it;
    return r;
}

Complex Polynomial::eval(Complex x) const
{
    Complex r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + to_double(*it);
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw RingError("polynomial division by zero");
    Polynomial rem = a;
    rem.adopt_var(b);
    Polynomial quot(rem.var_);
    if (rem.degree() < b.degree())
        return {quot, rem};
    quot.c_.assign(static_cast<size_t>(rem.degree() - b.degree()) + 1, Rational(0));
    const Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.leading() / lead;
        quot.c_[static_cast<size_t>(shift)] = f;
        for (int i = 0; i <= b.degree(); ++i)
            rem.c_[static_cast<size_t>(i + shift)] -= f * b.c_[static_cast<size_t>(i)];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b)
{
    a.adopt_var(b);
    b.adopt_var(a);
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
        // Keep coefficient growth in check.
        if (!b.is_zero())
            b *= Rational(1) / b.leading();
    }
    if (!a.is_zero())
        a *= Rational(1) / a.leading();
    return a;
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& monomial)
{
    Rational mag = abs(c);
    if (first)
        os << (c < 0 ? "-" : "");
    else
        os << (c < 0 ? " - " : " + ");
    first = false;
    if (monomial.empty())
        os << to_string(mag);
    else if (mag == 1)
        os << monomial;
    else
        os << to_string(mag) << "*" << monomial;
}

}  // namespace

std::string Polynomial::str() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        std::string mono;
        if (i == 1)
            mono = var_;
        else if (i > 1)
            mono = var_ + "^" + std::to_string(i);
        append_term(os, first, c_[i], mono);
    }
    return os.str();
}

// ---------------------------------------------------------------- MultiPoly

bool MultiPoly::TermOrder::operator()(const Exponents& a, const Exponents& b) const
{
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return a < b;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c)
{
    MultiPoly r(std::move(vars));
    r.add_term(Exponents(r.vars_.size(), 0), c);
    return r;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name)
{
    MultiPoly r(std::move(vars));
    int i = r.var_index(name);
    if (i < 0)
        throw RingMismatch("unknown variable " + name);
    Exponents e(r.vars_.size(), 0);
    e[static_cast<size_t>(i)] = 1;
    r.add_term(std::move(e), 1);
    return r;
}

MultiPoly MultiPoly::from_poly(std::vector<std::string> vars, const Polynomial& p)
{
    MultiPoly r(std::move(vars));
    int idx = r.var_index(p.var());
    if (idx < 0 && !p.is_constant())
        throw RingMismatch("variable " + p.var() + " not in the variable list");
    for (int d = 0; d <= p.degree(); ++d) {
        Exponents e(r.vars_.size(), 0);
        if (d > 0)
            e[static_cast<size_t>(idx)] = d;
        r.add_term(std::move(e), p.coeff(d));
    }
    return r;
}

MultiPoly MultiPoly::substitute(const Polynomial& p, const MultiPoly& value)
{
    MultiPoly r(value.vars());
    for (int d = p.degree(); d >= 0; --d) {
        r = r * value;
        r += constant(value.vars(), p.coeff(d));
    }
    return r;
}

bool MultiPoly::is_constant() const
{
    for (auto& [e, c] : terms_)
        for (int x : e)
            if (x != 0)
                return false;
    return true;
}

Rational MultiPoly::coeff(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(Exponents e, const Rational& c)
{
    if (e.size() != vars_.size())
        throw RingError("exponent tuple length does not match variable count");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int MultiPoly::var_index(const std::string& name) const
{
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int MultiPoly::degree_in(const std::string& name) const
{
    int i = var_index(name);
    if (i < 0)
        return 0;
    int d = is_zero() ? -1 : 0;
    for (auto& [e, c] : terms_)
        d = std::max(d, e[static_cast<size_t>(i)]);
    return d;
}

MultiPoly MultiPoly::coeff_of(const std::string& name, int d) const
{
    int i = var_index(name);
    if (i < 0)
        throw RingMismatch("unknown variable " + name);
    MultiPoly r(vars_);
    for (auto& [e, c] : terms_) {
        if (e[static_cast<size_t>(i)] != d)
            continue;
        Exponents f = e;
        f[static_cast<size_t>(i)] = 0;
        r.add_term(std::move(f), c);
    }
    return r;
}

MultiPoly MultiPoly::eval_at(const std::string& name, const Rational& value) const
{
    int i = var_index(name);
    if (i < 0)
        throw RingMismatch("unknown variable " + name);
    MultiPoly r(vars_);
    for (auto& [e, c] : terms_) {
        Exponents f = e;
        int d = f[static_cast<size_t>(i)];
        f[static_cast<size_t>(i)] = 0;
        r.add_term(std::move(f), c * rational_pow(value, d));
    }
    return r;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const
{
    Rational r = 0;
    for (auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw RingError("no value for variable " + vars_[i]);
            t *= rational_pow(it->second, e[i]);
        }
        r += t;
    }
    return r;
}

MultiPoly MultiPoly::replace(const std::string& name, const MultiPoly& value) const
{
    int i = var_index(name);
    if (i < 0)
        throw RingMismatch("unknown variable " + name);
    std::vector<MultiPoly> powers{constant(vars_, 1)};
    MultiPoly r(vars_);
    for (auto& [e, c] : terms_) {
        int d = e[static_cast<size_t>(i)];
        while (static_cast<int>(powers.size()) <= d)
            powers.push_back(powers.back() * value);
        Exponents f = e;
        f[static_cast<size_t>(i)] = 0;
        MultiPoly mono(vars_);
        mono.add_term(std::move(f), c);
        r += mono * powers[static_cast<size_t>(d)];
    }
    return r;
}

void MultiPoly::align(const MultiPoly& o)
{
    if (vars_ == o.vars_ || o.is_constant())
        return;
    if (is_constant()) {
        Rational c = coeff(Exponents(vars_.size(), 0));
        *this = constant(o.vars_, c);
        return;
    }
    throw RingMismatch("multivariate polynomials over different variable lists");
}

namespace {

MultiPoly reshape_constant(const MultiPoly& c, const std::vector<std::string>& vars)
{
    if (c.vars() == vars)
        return c;
    return MultiPoly::constant(vars, c.coeff(MultiPoly::Exponents(c.vars().size(), 0)));
}

}  // namespace

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    align(o);
    MultiPoly other = reshape_constant(o, vars_);
    for (auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    align(o);
    MultiPoly other = reshape_constant(o, vars_);
    for (auto& [e, c] : other.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly x = a;
    x.align(b);
    MultiPoly y = reshape_constant(b, x.vars_);
    MultiPoly r(x.vars_);
    for (auto& [ea, ca] : x.terms_) {
        for (auto& [eb, cb] : y.terms_) {
            MultiPoly::Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    if (a.vars_ == b.vars_)
        return a.terms_ == b.terms_;
    if (a.is_constant() && b.is_constant())
        return a.coeff(MultiPoly::Exponents(a.vars_.size(), 0)) ==
               b.coeff(MultiPoly::Exponents(b.vars_.size(), 0));
    return false;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly r = constant(vars_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1u)
            r = r * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return r;
}

std::string MultiPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars_[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        append_term(os, first, c, mono);
    }
    return os.str();
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Polynomial& num)
    : num_(num), den_(Polynomial::constant(num.var(), 1))
{
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw RingError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize()
{
    std::string v = num_.is_constant() ? den_.var() : num_.var();
    if (num_.is_zero()) {
        num_ = Polynomial(v);
        den_ = Polynomial::constant(v, 1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial::divmod(num_, g).first;
            den_ = Polynomial::divmod(den_, g).first;
        }
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        num_ *= Rational(1) / lc;
        den_ *= Rational(1) / lc;
    }
    num_ = Polynomial(v, num_.coeffs());
    den_ = Polynomial(v, den_.coeffs());
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o)
{
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.is_zero())
        throw RingError("rational function division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

bool operator==(const RationalFunction& a, const RationalFunction& b)
{
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction RationalFunction::pow(unsigned e) const
{
    return RationalFunction(num_.pow(e), den_.pow(e));
}

Rational RationalFunction::eval(const Rational& x) const
{
    Rational d = den_.eval(x);
    if (d == 0)
        throw PoleError("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

Complex RationalFunction::eval(Complex x) const
{
    Complex d = den_.eval(x);
    double scale = 0;
    double ax = std::abs(x);
    for (int i = 0; i <= den_.degree(); ++i)
        scale += std::abs(to_double(den_.coeff(i))) * std::pow(ax, i);
    if (std::abs(d) <= 1e-12 * scale)
        throw PoleError("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

std::string RationalFunction::str() const
{
    if (den_.is_constant())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------- RingValue

const char* ring_name(RingTag t)
{
    switch (t) {
    case RingTag::Rational: return "rational";
    case RingTag::Polynomial: return "polynomial";
    case RingTag::MultiPoly: return "multivariate polynomial";
    case RingTag::RationalFunction: return "rational function";
    case RingTag::Complex: return "complex";
    }
    return "?";
}

bool RingValue::is_zero() const
{
    return std::visit(
        [](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return x == 0;
            else if constexpr (std::is_same_v<T, Complex>)
                return x == Complex(0, 0);
            else
                return x.is_zero();
        },
        v_);
}

std::string RingValue::str() const
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return to_string(x);
            } else if constexpr (std::is_same_v<T, Complex>) {
                std::ostringstream os;
                os.precision(17);
                os << x.real() << (x.imag() < 0 ? " - " : " + ") << std::abs(x.imag()) << "*i";
                return os.str();
            } else {
                return x.str();
            }
        },
        v_);
}

namespace {

[[noreturn]] void mismatch(const RingValue& a, const RingValue& b, const char* op)
{
    throw RingMismatch(std::string(op) + ": ring mismatch (" + ring_name(a.tag()) + " vs " +
                       ring_name(b.tag()) + ")");
}

template <class F>
RingValue same_ring(const RingValue& a, const RingValue& b, const char* op, F f)
{
    if (a.tag() != b.tag())
        mismatch(a, b, op);
    return std::visit(
        [&](const auto& x) -> RingValue {
            using T = std::decay_t<decltype(x)>;
            return RingValue(f(x, std::get<T>(b.storage())));
        },
        a.storage());
}

}  // namespace

bool operator==(const RingValue& a, const RingValue& b)
{
    return a.storage() == b.storage();
}

RingValue ring_add(const RingValue& a, const RingValue& b)
{
    return same_ring(a, b, "add", [](const auto& x, const auto& y) {
        using T = std::decay_t<decltype(x)>;
        return T(x + y);
    });
}

RingValue ring_sub(const RingValue& a, const RingValue& b)
{
    return same_ring(a, b, "sub", [](const auto& x, const auto& y) {
        using T = std::decay_t<decltype(x)>;
        return T(x - y);
    });
}

RingValue ring_mul(const RingValue& a, const RingValue& b)
{
    return same_ring(a, b, "mul", [](const auto& x, const auto& y) {
        using T = std::decay_t<decltype(x)>;
        return T(x * y);
    });
}

RingValue ring_neg(const RingValue& a)
{
    return std::visit(
        [](const auto& x) -> RingValue {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return Rational(-x);
            else
                return T(-x);
        },
        a.storage());
}

RingValue ring_scale(const RingValue& a, const Rational& s)
{
    return std::visit(
        [&](const auto& x) -> RingValue {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return Rational(x * s);
            else if constexpr (std::is_same_v<T, Complex>)
                return x * to_double(s);
            else if constexpr (std::is_same_v<T, RationalFunction>)
                return x * RationalFunction(Polynomial::constant(x.var(), s));
            else
                return x * s;
        },
        a.storage());
}

RingValue ring_pow(const RingValue& a, unsigned e)
{
    return std::visit(
        [&](const auto& x) -> RingValue {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return rational_pow(x, e);
            else if constexpr (std::is_same_v<T, Complex>)
                return std::pow(x, static_cast<double>(e));
            else
                return x.pow(e);
        },
        a.storage());
}

RingValue lift(const Rational& c, const RingValue& like)
{
    return std::visit(
        [&](const auto& x) -> RingValue {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return c;
            else if constexpr (std::is_same_v<T, Complex>)
                return Complex(to_double(c), 0);
            else if constexpr (std::is_same_v<T, Polynomial>)
                return Polynomial::constant(x.var(), c);
            else if constexpr (std::is_same_v<T, MultiPoly>)
                return MultiPoly::constant(x.vars(), c);
            else
                return RationalFunction(Polynomial::constant(x.var(), c));
        },
        like.storage());
}

RingValue zero_like(const RingValue& like)
{
    return lift(0, like);
}

RingValue one_like(const RingValue& like)
{
    return lift(1, like);
}

RingValue common_prototype(const RingValue& a, const RingValue& b)
{
    if (a.tag() == RingTag::Rational)
        return b;
    if (b.tag() == RingTag::Rational || a.tag() == b.tag())
        return a;
    mismatch(a, b, "combine");
}

RingValue pochhammer(const RingValue& x, unsigned n)
{
    RingValue r = one_like(x);
    for (unsigned j = 0; j < n; ++j)
        r = r * (x + lift(static_cast<long>(j), x));
    return r;
}

Rational pochhammer(const Rational& x, unsigned n)
{
    Rational r = 1;
    for (unsigned j = 0; j < n; ++j)
        r *= x + j;
    return r;
}

Complex poly_eval(const RingValue& p, Complex at)
{
    switch (p.tag()) {
    case RingTag::Rational: return to_double(p.as<Rational>());
    case RingTag::Complex: return p.as<Complex>();
    case RingTag::Polynomial: return p.as<Polynomial>().eval(at);
    case RingTag::RationalFunction: return p.as<RationalFunction>().eval(at);
    case RingTag::MultiPoly: break;
    }
    throw RingMismatch("poly_eval needs a univariate value");
}

}  // namespace partmeth
