#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace partmeth {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Binary operation across two different rings, or polynomials in different variables.
class RingMismatch : public RingError {
public:
    using RingError::RingError;
};

class PoleError : public RingError {
public:
    using RingError::RingError;
};

Rational rat(long num, long den = 1);
Integer factorial(unsigned n);
Integer binomial(long n, long k);
Rational rational_pow(const Rational& x, long e);
std::string to_string(const Rational& x);
double to_double(const Rational& x);

// Dense univariate polynomial with rational coefficients.
class Polynomial {
public:
    Polynomial() : var_("x") {}
    explicit Polynomial(std::string var) : var_(std::move(var)) {}
    Polynomial(std::string var, std::vector<Rational> coeffs);

    static Polynomial constant(std::string var, const Rational& c);
    static Polynomial monomial(std::string var, const Rational& c, int degree);
    // The polynomial "var" itself.
    static Polynomial variable(std::string var);

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned e) const;
    // p(q(x)), result in q's variable.
    Polynomial compose(const Polynomial& q) const;
    Rational eval(const Rational& x) const;
    Complex eval(Complex x) const;

    // Euclidean division over the rationals; throws on a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // Monic gcd (zero if both are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    std::string str() const;

private:
    void trim();
    void adopt_var(const Polynomial& o);

    std::string var_;
    std::vector<Rational> c_;
};

// Sparse multivariate polynomial over the rationals.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    struct TermOrder {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
    // Embed a univariate polynomial whose variable must be one of vars.
    static MultiPoly from_poly(std::vector<std::string> vars, const Polynomial& p);
    // Substitute a multivariate value for the single variable of p.
    static MultiPoly substitute(const Polynomial& p, const MultiPoly& value);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coeff(const Exponents& e) const;
    void add_term(Exponents e, const Rational& c);
    int var_index(const std::string& name) const;
    int degree_in(const std::string& name) const;

    // Coefficient of name^d as a polynomial in the remaining variables (same variable list).
    MultiPoly coeff_of(const std::string& name, int d) const;
    // Substitute a rational value for one variable (variable list unchanged).
    MultiPoly eval_at(const std::string& name, const Rational& value) const;
    Rational eval(const std::map<std::string, Rational>& point) const;
    // Replace one variable by a polynomial in the same variable list.
    MultiPoly replace(const std::string& name, const MultiPoly& value) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(unsigned e) const;
    std::string str() const;

private:
    void align(const MultiPoly& o);

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Univariate rational function kept in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_("x"), den_(Polynomial::constant("x", 1)) {}
    explicit RationalFunction(const Polynomial& num);
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const std::string& var() const { return num_.is_constant() ? den_.var() : num_.var(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    RationalFunction pow(unsigned e) const;
    Rational eval(const Rational& x) const;
    Complex eval(Complex x) const;
    std::string str() const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

enum class RingTag { Rational, Polynomial, MultiPoly, RationalFunction, Complex };
const char* ring_name(RingTag t);

class RingValue {
public:
    using Storage = std::variant<Rational, Polynomial, MultiPoly, RationalFunction, Complex>;

    RingValue() : v_(Rational(0)) {}
    RingValue(Rational x) : v_(std::move(x)) {}
    RingValue(long x) : v_(Rational(x)) {}
    RingValue(int x) : v_(Rational(x)) {}
    RingValue(Polynomial x) : v_(std::move(x)) {}
    RingValue(MultiPoly x) : v_(std::move(x)) {}
    RingValue(RationalFunction x) : v_(std::move(x)) {}
    RingValue(Complex x) : v_(x) {}

    RingTag tag() const { return static_cast<RingTag>(v_.index()); }
    const Storage& storage() const { return v_; }

    template <class T>
    const T& as() const
    {
        if (auto p = std::get_if<T>(&v_))
            return *p;
        throw RingMismatch(std::string("value is in ring ") + ring_name(tag()));
    }

    bool is_zero() const;
    std::string str() const;

private:
    Storage v_;
};

bool operator==(const RingValue& a, const RingValue& b);
inline bool operator!=(const RingValue& a, const RingValue& b) { return !(a == b); }

RingValue ring_add(const RingValue& a, const RingValue& b);
RingValue ring_sub(const RingValue& a, const RingValue& b);
RingValue ring_mul(const RingValue& a, const RingValue& b);
RingValue ring_neg(const RingValue& a);
RingValue ring_scale(const RingValue& a, const Rational& s);
RingValue ring_pow(const RingValue& a, unsigned e);

inline RingValue operator+(const RingValue& a, const RingValue& b) { return ring_add(a, b); }
inline RingValue operator-(const RingValue& a, const RingValue& b) { return ring_sub(a, b); }
inline RingValue operator*(const RingValue& a, const RingValue& b) { return ring_mul(a, b); }
inline RingValue operator-(const RingValue& a) { return ring_neg(a); }

// A rational constant placed in the ring of `like` (same variables).
RingValue lift(const Rational& c, const RingValue& like);
RingValue zero_like(const RingValue& like);
RingValue one_like(const RingValue& like);
// The ring of a and b where a Rational defers to the other side; throws RingMismatch otherwise.
RingValue common_prototype(const RingValue& a, const RingValue& b);

// x (x+1) ... (x+n-1); ring one for n = 0.
RingValue pochhammer(const RingValue& x, unsigned n);
Rational pochhammer(const Rational& x, unsigned n);

Complex poly_eval(const RingValue& p, Complex at);

}  // namespace partmeth
