#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "partmeth/algebra.hpp"
#include "partmeth/classes.hpp"

namespace partmeth {

enum class WeightKind {
    Unit,
    Multinomial,
    Phase,
    ElementAssign,
    ElementPower,
    OuterFactor,
    PochhammerTotal,
    PerElementPochhammer,
    Product,
    Custom
};

class BoundWeight;

// A weight over partitions, composed from canned factors.
class Weight {
public:
    using Fn = std::function<RingValue(const PartitionView&)>;

    // 1
    static Weight unit();
    // N! / prod n_i!
    static Weight multinomial();
    // (-1)^N
    static Weight phase();
    // prod v_i^{n_i} / n_i!, values indexed by element (index 0 unused)
    static Weight element_assign(std::vector<RingValue> values);
    // prod v_i^{n_i}
    static Weight element_power(std::vector<RingValue> values);
    // g_N indexed by the number of parts N (index 0 used only for the empty partition)
    static Weight outer_factor(std::vector<RingValue> g);
    // (-rho)_N when negate is set, otherwise (rho)_N
    static Weight pochhammer_total(RingValue rho, bool negate = true);
    // prod (-rho_i)_{n_i} / n_i!, indexed by element
    static Weight per_element_pochhammer(std::vector<RingValue> rho);
    static Weight product(std::vector<Weight> factors);
    // zero fixes the target ring for empty sums.
    static Weight custom(Fn f, RingValue zero, std::string name = "custom");

    friend Weight operator*(const Weight& a, const Weight& b);

    WeightKind kind() const { return kind_; }
    std::string name() const;
    // Throws on missing entries up to k or on factors from different rings.
    BoundWeight bind(int k) const;

private:
    WeightKind kind_ = WeightKind::Unit;
    std::vector<RingValue> values_;
    RingValue rho_;
    bool negate_ = true;
    std::vector<Weight> factors_;
    Fn fn_;
    std::string name_;

    friend class BoundWeight;
};

// A weight with its per-order tables precomputed.
class BoundWeight {
public:
    RingValue eval(const PartitionView& v) const;
    const RingValue& zero() const { return zero_; }

private:
    friend class Weight;
    struct Factor {
        WeightKind kind;
        std::string name;
        // table[i][n] for element-indexed kinds, table[0][N] for part-count kinds.
        std::vector<std::vector<RingValue>> table;
        Weight::Fn fn;
    };
    void add(const Weight& w, int k);

    std::vector<Factor> factors_;
    std::vector<Integer> fact_;
    RingValue zero_;
    bool has_ring_ = false;
};

struct ApplyOptions {
    // 0 or 1 runs sequentially; more splits the first-level subtrees across threads.
    unsigned threads = 1;
};

// Sum of the weight over the partitions of k in the class.
RingValue apply(int k, const PartitionClass& c, const Weight& w, ApplyOptions opt = {});
RingValue apply(int k, const Weight& w, ApplyOptions opt = {});

// Per first-level subtree sums in tree order (index 0 is the {k} leaf).
struct SubtreeSum {
    int branch;
    RingValue value;
};
std::vector<SubtreeSum> apply_subtrees(int k, const PartitionClass& c, const Weight& w);

// Signed Stirling numbers of the first kind via S_{k+1}^{(j)} = S_k^{(j-1)} - k S_k^{(j)}.
Integer stirling_first(int k, int j);

// Helpers that tolerate a Rational operand next to any other ring.
RingValue promote(const RingValue& v, const RingValue& proto);
RingValue mixed_add(const RingValue& a, const RingValue& b);
RingValue mixed_mul(const RingValue& a, const RingValue& b);

}  // namespace partmeth
