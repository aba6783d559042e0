#pragma once

#include <vector>

#include "partmeth/series.hpp"

namespace partmeth {

class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DivisorData {
    int j = 0;
    std::vector<int> divisors;
    Rational gamma;          // sum_{d|j} d/j
    Polynomial gamma_poly;   // sum_{d|j} (d/j) w^{j/d}
};

DivisorData divisor_data(int j, const std::string& var = "w");

// (-1)^j at k = (3j^2 +- j)/2, else 0.
Integer q_number(int k);
// L[(-1)^N N! prod p(i)^{n_i}/n_i!]
Integer q_number_via_p(int k);
// L[(-1)^N prod gamma_i^{n_i}/n_i!]
Integer q_number_via_gamma(int k);

// p(k) over pentagonal-element partitions with (-1)^N N! prod q(i)^{n_i}/n_i!.
Integer p_from_q(int k, ApplyOptions opt = {});
// p(k) = L[prod gamma_i^{n_i}/n_i!]; throws ConsistencyError on a non-integer sum.
Integer p_from_gamma(int k);

// q(k, w) = L_DP[w^N].
Polynomial q_poly(int k, const std::string& var = "w");
// q(k, -w) = L[(-1)^N prod gamma_i(w)^{n_i}/n_i!], returned after w -> -w.
Polynomial q_poly_via_gamma(int k, const std::string& var = "w");
// p(k, w) = L[w^N].
Polynomial p_poly(int k, const std::string& var = "w");
Polynomial p_poly_via_gamma(int k, const std::string& var = "w");
// L[(-1)^N N! prod q(i,-w)^{n_i}/n_i!]
Polynomial p_poly_via_q(int k, const std::string& var = "w");

// prod_i (1 + C_i z^i)^{rho_i}; vectors indexed from 1 (index 0 unused).
struct ProductSpec {
    std::vector<RingValue> C;
    std::vector<RingValue> rho;
};

// B_k = L[(-1)^N prod (-rho_i)_{n_i}/n_i! C_i^{n_i}] for k = 0..kmax.
CoefficientTable product_coefficients(const ProductSpec& spec, int kmax, ApplyOptions opt = {});
// h_k = L_DP[prod C_i^{n_i}], the rho_i = 1 case.
CoefficientTable product_series_discrete(const std::vector<RingValue>& C, int kmax);
// H_k = L[(-1)^N prod C_i^{n_i}], coefficients of 1 / prod (1 + C_i z^i).
CoefficientTable reciprocal_product_series(const std::vector<RingValue>& C, int kmax);

// C_1..C_kmax (index 0 unused) with prod (1 + C_i y^i) = e^y.
std::vector<Rational> exp_product_C(int kmax);

// q(k, w, r): coefficient of z^k in prod (1 + w z^i)^r, as a polynomial in (w, r).
MultiPoly q_omega_rho(int k);
// Route through the rho-th power of sum q(k,w) z^k.
MultiPoly q_omega_rho_via_power(int k);
Polynomial q_omega_rho_at(int k, const Rational& rho, const std::string& var = "w");

// QP_k(w, b, a) = sum_j q(j, -b w) p(k-j, a w), variables (w, b, a).
MultiPoly qp_poly(int k);
// HP_k(w, x, y) = sum_j QP_j(w, x, 1) QP_{k-j}(w, y, x y), variables (w, x, y).
MultiPoly hp_poly(int k);

// q(k,1) for k = 0..kmax from the even/odd recurrences.
std::vector<Integer> discrete_count_table(int kmax);
Integer discrete_count_recurrence(int k);

}  // namespace partmeth
