#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partmeth/partitions.hpp"

namespace partmeth {

class ClassError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class RequiredMode { All, Any };

// Declarative description of a subset of the partitions of k.
struct PartitionClass {
    int min_element = 1;
    std::optional<int> max_element;
    std::optional<int> max_multiplicity;
    std::optional<int> exact_parts;
    std::optional<int> max_parts;
    std::vector<int> required_elements;
    RequiredMode required_mode = RequiredMode::All;
    std::function<bool(int)> allowed;
    std::string allowed_name;
    bool distinct = false;

    // Throws ClassError on contradictory settings.
    void validate() const;
    bool matches(const PartitionView& v) const;
    bool matches(const Partition& p) const;
    // Pruning bounds for the BRCP walker at order k.
    Bounds bounds(int k) const;

    static PartitionClass all() { return {}; }
    static PartitionClass discrete();
    static PartitionClass odd_elements();
    static PartitionClass even_elements();
    static PartitionClass pentagonal_elements();
    static PartitionClass fixed_parts(int m);
    // At most `parts` parts, each at most `largest`.
    static PartitionClass gaussian(int largest, int parts);
    static PartitionClass specific_element(int e);

    std::string describe() const;
};

// Visits the class members in the requested order. BRCP prunes the tree; the
// reference orders filter their full output.
uint64_t enumerate_class(int k, const PartitionClass& c, EnumerationOrder order, const Visitor& visitor);
uint64_t count_class(int k, const PartitionClass& c);

template <class Visit>
uint64_t enumerate_class_brcp(int k, const PartitionClass& c, Visit&& visit)
{
    c.validate();
    if (k < 0)
        throw ClassError("k must be nonnegative");
    Bounds b = c.bounds(k);
    uint64_t n = 0;
    auto filtered = [&](const PartitionView& v) {
        if (!c.matches(v))
            return;
        ++n;
        visit(v);
    };
    enumerate_brcp(k, b, filtered);
    return n;
}

int max_distinct_parts(int k);
// j != 0 such that e = (3j^2 - j)/2 with j of either sign, or 0 if e is not a generalized pentagonal number.
int pentagonal_index(long e);
bool is_pentagonal(long e);

Partition transpose(const Partition& p);
bool is_self_conjugate(const Partition& p);
// "Partition T is: ... and its conjugate is: ..." with the conjugate largest element first.
std::string format_conjugate_line(uint64_t term, const Partition& p);

}  // namespace partmeth
