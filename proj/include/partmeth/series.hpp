#pragma once

#include <variant>
#include <vector>

#include "partmeth/operator.hpp"

namespace partmeth {

class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Outer series g(w) = sum q_N w^N, composed as g(a f(y)) with p_0 = 0.
struct OuterQ {
    std::vector<RingValue> q;  // q_0 .. q_kmax
    RingValue a = 1;
};

// Outer derivatives F^(N)(a p_0) for the p_0 != 0 case.
struct OuterF {
    std::vector<RingValue> derivatives;  // F^(0) .. F^(kmax)
    RingValue a = 1;
};

struct SeriesSpec {
    std::vector<RingValue> inner;  // p_0 .. p_kmax; p_0 is ignored for OuterQ
    std::variant<OuterQ, OuterF> outer;
    int kmax = 0;

    void validate() const;
};

using CoefficientTable = std::vector<RingValue>;

// D_0 .. D_kmax.
CoefficientTable expand(const SeriesSpec& spec, ApplyOptions opt = {});
// E_0 .. E_kmax, with the reciprocal series equal to (1/D_0) sum E_k y^k.
CoefficientTable invert(const CoefficientTable& d, ApplyOptions opt = {});
// D_k(rho), the coefficients of (sum D_k y^k)^rho; requires D_0 = 1.
CoefficientTable expand_power(const CoefficientTable& d, const RingValue& rho, ApplyOptions opt = {});
// sum_{j=0}^{k} D_j E_{k-j} = 0 for 1 <= k <= kmax.
bool check_cauchy_inverse(const CoefficientTable& d, const CoefficientTable& e);
// r^(k)(0) = k! D_k.
CoefficientTable derivatives_at_zero(const CoefficientTable& d);

// Weight of the D_k sum for an OuterQ spec: q_N a^N N! prod p_i^{n_i}/n_i!.
Weight series_weight(const SeriesSpec& spec);

}  // namespace partmeth
