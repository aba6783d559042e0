#include "partmeth/classes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace partmeth {

void PartitionClass::validate() const
{
    if (min_element < 1)
        throw ClassError("min_element must be at least 1");
    if (max_element && *max_element < min_element)
        throw ClassError("min_element exceeds max_element");
    if (max_multiplicity && *max_multiplicity < 1)
        throw ClassError("max_multiplicity must be at least 1");
    if (distinct && max_multiplicity && *max_multiplicity > 1)
        throw ClassError("distinct class cannot allow multiplicity above 1");
    if (exact_parts && *exact_parts < 0)
        throw ClassError("exact_parts must be nonnegative");
    if (max_parts && *max_parts < 0)
        throw ClassError("max_parts must be nonnegative");
    for (int e : required_elements)
        if (e < 1)
            throw ClassError("required elements must be positive");
}

bool PartitionClass::matches(const PartitionView& v) const
{
    if (v.total() == 0)
        return (!exact_parts || *exact_parts == 0) && required_elements.empty();
    if (v.smallest() < min_element)
        return false;
    if (max_element && v.largest() > *max_element)
        return false;
    if (exact_parts && v.num_parts() != *exact_parts)
        return false;
    if (max_parts && v.num_parts() > *max_parts)
        return false;
    int mm = distinct ? 1 : max_multiplicity.value_or(Bounds::unbounded);
    for (int e : v.elements()) {
        if (v.multiplicity(e) > mm)
            return false;
        if (allowed && !allowed(e))
            return false;
    }
    if (!required_elements.empty()) {
        if (required_mode == RequiredMode::All) {
            for (int e : required_elements)
                if (v.multiplicity(e) == 0)
                    return false;
        } else {
            bool any = false;
            for (int e : required_elements)
                any = any || v.multiplicity(e) > 0;
            if (!any)
                return false;
        }
    }
    return true;
}

bool PartitionClass::matches(const Partition& p) const
{
    std::vector<int> mult(static_cast<size_t>(p.total()) + 2, 0);
    std::vector<int> elems;
    for (auto [e, n] : p.pairs()) {
        mult[static_cast<size_t>(e)] = n;
        elems.push_back(e);
    }
    PartitionView v(p.total(), mult.data(), elems.data(), static_cast<int>(elems.size()), p.num_parts());
    return matches(v);
}

Bounds PartitionClass::bounds(int k) const
{
    Bounds b;
    b.min_element = min_element;
    if (max_element)
        b.max_element = *max_element;
    if (distinct)
        b.max_multiplicity = 1;
    else if (max_multiplicity)
        b.max_multiplicity = *max_multiplicity;
    if (max_parts)
        b.max_parts = *max_parts;
    if (exact_parts)
        b.max_parts = std::min(b.max_parts, *exact_parts);
    if (allowed) {
        b.allowed.assign(static_cast<size_t>(k) + 2, 0);
        for (int e = 1; e <= k; ++e)
            b.allowed[static_cast<size_t>(e)] = allowed(e) ? 1 : 0;
    }
    return b;
}

PartitionClass PartitionClass::discrete()
{
    PartitionClass c;
    c.distinct = true;
    return c;
}

PartitionClass PartitionClass::odd_elements()
{
    PartitionClass c;
    c.allowed = [](int e) { return e % 2 == 1; };
    c.allowed_name = "odd";
    return c;
}

PartitionClass PartitionClass::even_elements()
{
    PartitionClass c;
    c.allowed = [](int e) { return e % 2 == 0; };
    c.allowed_name = "even";
    c.min_element = 2;
    return c;
}

PartitionClass PartitionClass::pentagonal_elements()
{
    PartitionClass c;
    c.allowed = [](int e) { return is_pentagonal(e); };
    c.allowed_name = "pentagonal";
    return c;
}

PartitionClass PartitionClass::fixed_parts(int m)
{
    PartitionClass c;
    c.exact_parts = m;
    return c;
}

PartitionClass PartitionClass::gaussian(int largest, int parts)
{
    PartitionClass c;
    c.max_element = largest;
    c.max_parts = parts;
    return c;
}

PartitionClass PartitionClass::specific_element(int e)
{
    PartitionClass c;
    c.required_elements = {e};
    return c;
}

std::string PartitionClass::describe() const
{
    std::ostringstream os;
    os << "min_element=" << min_element;
    if (max_element)
        os << " max_element=" << *max_element;
    if (distinct)
        os << " distinct";
    if (max_multiplicity)
        os << " max_multiplicity=" << *max_multiplicity;
    if (exact_parts)
        os << " exact_parts=" << *exact_parts;
    if (max_parts)
        os << " max_parts=" << *max_parts;
    if (!required_elements.empty()) {
        os << " required" << (required_mode == RequiredMode::All ? "_all=" : "_any=");
        for (size_t i = 0; i < required_elements.size(); ++i)
            os << (i ? "," : "") << required_elements[i];
    }
    if (allowed)
        os << " allowed=" << (allowed_name.empty() ? "predicate" : allowed_name);
    return os.str();
}

uint64_t enumerate_class(int k, const PartitionClass& c, EnumerationOrder order, const Visitor& visitor)
{
    if (order == EnumerationOrder::BRCP)
        return enumerate_class_brcp(k, c, [&](const PartitionView& v) { visitor(v); });
    c.validate();
    uint64_t n = 0;
    auto filtered = [&](const PartitionView& v) {
        if (!c.matches(v))
            return;
        ++n;
        visitor(v);
    };
    enumerate_order(k, order, filtered);
    return n;
}

uint64_t count_class(int k, const PartitionClass& c)
{
    return enumerate_class_brcp(k, c, [](const PartitionView&) {});
}

int max_distinct_parts(int k)
{
    // Largest n with n(n+1)/2 <= k, i.e. floor((sqrt(8k+1) - 1)/2), in integers.
    long s = static_cast<long>(std::sqrt(8.0 * k + 1));
    while (s * s > 8L * k + 1)
        --s;
    while ((s + 1) * (s + 1) <= 8L * k + 1)
        ++s;
    return static_cast<int>((s - 1) / 2);
}

int pentagonal_index(long e)
{
    if (e < 1)
        return 0;
    // e = j(3j - 1)/2  <=>  24e + 1 = (6j - 1)^2.
    long d = 24 * e + 1;
    long s = static_cast<long>(std::sqrt(static_cast<double>(d)));
    while (s * s > d)
        --s;
    while ((s + 1) * (s + 1) <= d)
        ++s;
    if (s * s != d)
        return 0;
    if ((s + 1) % 6 == 0)
        return static_cast<int>((s + 1) / 6);
    return static_cast<int>((1 - s) / 6);
}

bool is_pentagonal(long e)
{
    return pentagonal_index(e) != 0;
}

Partition transpose(const Partition& p)
{
    // Column j of the Ferrers diagram holds the number of parts >= j.
    std::vector<std::pair<int, int>> out;
    int remaining = p.num_parts();
    int prev = 0;
    for (auto [e, n] : p.pairs()) {
        if (e > prev)
            out.emplace_back(remaining, e - prev);
        remaining -= n;
        prev = e;
    }
    return Partition(std::move(out));
}

bool is_self_conjugate(const Partition& p)
{
    return transpose(p) == p;
}

std::string format_conjugate_line(uint64_t term, const Partition& p)
{
    std::ostringstream os;
    os << "Partition " << term << " is: ";
    for (auto [e, n] : p.pairs())
        os << n << "(" << e << ") ";
    os << " and its conjugate is: ";
    Partition t = transpose(p);
    for (auto it = t.pairs().rbegin(); it != t.pairs().rend(); ++it)
        os << it->second << "(" << it->first << ") ";
    return os.str();
}

}  // namespace partmeth
