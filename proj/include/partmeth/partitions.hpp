#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "partmeth/algebra.hpp"

namespace partmeth {

class Partition;

// Read-only view of the partition currently held by an enumerator.
// The buffers are reused between visits; copy with to_partition() to keep one.
class PartitionView {
public:
    PartitionView(int total, const int* mult, const int* elems, int num_distinct, int num_parts)
        : total_(total), mult_(mult), elems_(elems), num_distinct_(num_distinct), num_parts_(num_parts)
    {
    }

    int total() const { return total_; }
    int num_parts() const { return num_parts_; }
    int num_distinct() const { return num_distinct_; }
    int multiplicity(int e) const { return (e >= 1 && e <= total_) ? mult_[e] : 0; }
    // Distinct elements, ascending.
    std::span<const int> elements() const { return {elems_, static_cast<size_t>(num_distinct_)}; }
    int largest() const { return num_distinct_ ? elems_[num_distinct_ - 1] : 0; }
    int smallest() const { return num_distinct_ ? elems_[0] : 0; }
    Partition to_partition() const;

private:
    int total_;
    const int* mult_;
    const int* elems_;
    int num_distinct_;
    int num_parts_;
};

// Owning multiplicity representation: ascending (element, frequency) pairs.
class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless every frequency is >= 1 and elements are positive.
    explicit Partition(std::vector<std::pair<int, int>> pairs);
    static Partition from_parts(std::vector<int> parts);

    int total() const { return total_; }
    int num_parts() const { return num_parts_; }
    int num_distinct() const { return static_cast<int>(pairs_.size()); }
    int multiplicity(int e) const;
    int largest() const { return pairs_.empty() ? 0 : pairs_.back().first; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    // Standard representation, ascending.
    std::vector<int> parts() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.pairs_ == b.pairs_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.pairs_ < b.pairs_; }

private:
    std::vector<std::pair<int, int>> pairs_;
    int total_ = 0;
    int num_parts_ = 0;
};

enum class EnumerationOrder { BRCP, ReverseLex, Ascending };
const char* order_name(EnumerationOrder o);

using Visitor = std::function<void(const PartitionView&)>;

// Tree pruning bounds understood by the BRCP walker.
struct Bounds {
    static constexpr int unbounded = std::numeric_limits<int>::max();
    int min_element = 1;
    int max_element = unbounded;
    int max_multiplicity = unbounded;
    int max_parts = unbounded;
    // allowed[e] for 1 <= e <= k; empty means every element is allowed.
    std::vector<char> allowed;
};

namespace detail {

template <class Visit>
class BrcpWalker {
public:
    BrcpWalker(int k, const Bounds& b, Visit& visit)
        : k_(k), b_(b), visit_(visit), mult_(static_cast<size_t>(k) + 2, 0), elems_(static_cast<size_t>(k) + 2, 0)
    {
    }

    // Whole tree.
    uint64_t run()
    {
        if (k_ == 0) {
            emit_empty();
            return count_;
        }
        node(k_, b_.min_element);
        return count_;
    }

    // First-level subtrees in tree order: 0 is the {k} leaf, q > 0 is the branch opened by element q.
    std::vector<int> subtrees() const
    {
        std::vector<int> s;
        if (k_ == 0) {
            s.push_back(0);
            return s;
        }
        s.push_back(0);
        for (int q = b_.min_element; q <= k_ - q; ++q)
            if (branch_ok(q, k_ - q))
                s.push_back(q);
        return s;
    }

    uint64_t run_subtree(int q)
    {
        if (k_ == 0) {
            emit_empty();
        } else if (q == 0) {
            if (k_ >= b_.min_element)
                leaf(k_);
        } else {
            push(q);
            node(k_ - q, q);
            pop(q);
        }
        return count_;
    }

private:
    bool allowed(int e) const { return b_.allowed.empty() || b_.allowed[static_cast<size_t>(e)]; }

    bool branch_ok(int q, int rest) const
    {
        if (q > b_.max_element || !allowed(q) || mult_[static_cast<size_t>(q)] >= b_.max_multiplicity)
            return false;
        if (b_.max_parts != Bounds::unbounded) {
            long room = static_cast<long>(b_.max_parts) - nparts_ - 1;
            if (room < 1)
                return false;
            if (b_.max_element != Bounds::unbounded && rest > room * static_cast<long>(b_.max_element))
                return false;
        }
        return true;
    }

    void emit_empty()
    {
        PartitionView v(0, mult_.data(), elems_.data(), 0, 0);
        visit_(v);
        ++count_;
    }

    void leaf(int p)
    {
        if (p > b_.max_element || !allowed(p) || mult_[static_cast<size_t>(p)] >= b_.max_multiplicity ||
            nparts_ + 1 > b_.max_parts)
            return;
        bool fresh = mult_[static_cast<size_t>(p)] == 0;
        ++mult_[static_cast<size_t>(p)];
        if (fresh)
            elems_[static_cast<size_t>(ndistinct_)] = p;
        PartitionView v(k_, mult_.data(), elems_.data(), ndistinct_ + (fresh ? 1 : 0), nparts_ + 1);
        visit_(v);
        ++count_;
        --mult_[static_cast<size_t>(p)];
    }

    void push(int q)
    {
        if (mult_[static_cast<size_t>(q)]++ == 0)
            elems_[static_cast<size_t>(ndistinct_++)] = q;
        ++nparts_;
    }

    void pop(int q)
    {
        if (--mult_[static_cast<size_t>(q)] == 0)
            --ndistinct_;
        --nparts_;
    }

    // The prefix is already pushed; p remains to be partitioned with elements >= q.
    void node(int p, int q)
    {
        leaf(p);
        for (int e = q; e <= p - e; ++e) {
            if (e > b_.max_element)
                break;
            if (!branch_ok(e, p - e))
                continue;
            push(e);
            node(p - e, e);
            pop(e);
        }
    }

    int k_;
    const Bounds& b_;
    Visit& visit_;
    std::vector<int> mult_;
    std::vector<int> elems_;
    int ndistinct_ = 0;
    int nparts_ = 0;
    uint64_t count_ = 0;
};

// Builds a view from a standard representation given in ascending or descending order.
template <class Visit>
class StandardAdapter {
public:
    StandardAdapter(int k, Visit& visit)
        : k_(k), visit_(visit), mult_(static_cast<size_t>(k) + 2, 0), elems_(static_cast<size_t>(k) + 2, 0)
    {
    }

    void ascending(const int* a, int n)
    {
        int d = 0;
        for (int i = 0; i < n; ++i)
            if (mult_[static_cast<size_t>(a[i])]++ == 0)
                elems_[static_cast<size_t>(d++)] = a[i];
        PartitionView v(k_, mult_.data(), elems_.data(), d, n);
        visit_(v);
        for (int i = 0; i < n; ++i)
            mult_[static_cast<size_t>(a[i])] = 0;
    }

    void descending(const int* a, int n)
    {
        int d = 0;
        for (int i = n - 1; i >= 0; --i)
            if (mult_[static_cast<size_t>(a[i])]++ == 0)
                elems_[static_cast<size_t>(d++)] = a[i];
        PartitionView v(k_, mult_.data(), elems_.data(), d, n);
        visit_(v);
        for (int i = 0; i < n; ++i)
            mult_[static_cast<size_t>(a[i])] = 0;
    }

private:
    int k_;
    Visit& visit_;
    std::vector<int> mult_;
    std::vector<int> elems_;
};

}  // namespace detail

template <class Visit>
uint64_t enumerate_brcp(int k, const Bounds& b, Visit&& visit)
{
    detail::BrcpWalker<std::remove_reference_t<Visit>> w(k, b, visit);
    return w.run();
}

template <class Visit>
uint64_t enumerate_brcp(int k, Visit&& visit)
{
    Bounds b;
    return enumerate_brcp(k, b, visit);
}

// Reverse lexicographic order: {k}, {k-1,1}, ..., {1^k}.
template <class Visit>
uint64_t enumerate_reverse_lex(int k, Visit&& visit)
{
    detail::StandardAdapter<std::remove_reference_t<Visit>> out(k, visit);
    if (k == 0) {
        out.descending(nullptr, 0);
        return 1;
    }
    // a[0..m) is descending; ones are kept as a trailing run.
    std::vector<int> a(static_cast<size_t>(k) + 1, 0);
    a[0] = k;
    int m = 1;
    uint64_t count = 0;
    while (true) {
        out.descending(a.data(), m);
        ++count;
        int j = m - 1;
        while (j >= 0 && a[static_cast<size_t>(j)] == 1)
            --j;
        if (j < 0)
            break;
        int x = a[static_cast<size_t>(j)] - 1;
        int rest = m - j;  // ones removed plus the unit taken from a[j]
        a[static_cast<size_t>(j)] = x;
        m = j + 1;
        while (rest > 0) {
            int e = rest < x ? rest : x;
            a[static_cast<size_t>(m++)] = e;
            rest -= e;
        }
    }
    return count;
}

// Ascending order of the standard representation, starting from {1^k}.
template <class Visit>
uint64_t enumerate_ascending(int k, Visit&& visit)
{
    detail::StandardAdapter<std::remove_reference_t<Visit>> out(k, visit);
    if (k == 0) {
        out.ascending(nullptr, 0);
        return 1;
    }
    std::vector<int> a(static_cast<size_t>(k) + 1, 0);
    a[1] = k;
    int n = 1;
    uint64_t count = 0;
    while (n != 0) {
        int x = a[static_cast<size_t>(n - 1)] + 1;
        int y = a[static_cast<size_t>(n)] - 1;
        --n;
        while (x <= y) {
            a[static_cast<size_t>(n)] = x;
            y -= x;
            ++n;
        }
        a[static_cast<size_t>(n)] = x + y;
        out.ascending(a.data(), n + 1);
        ++count;
    }
    return count;
}

template <class Visit>
uint64_t enumerate_order(int k, EnumerationOrder order, Visit&& visit)
{
    switch (order) {
    case EnumerationOrder::ReverseLex: return enumerate_reverse_lex(k, visit);
    case EnumerationOrder::Ascending: return enumerate_ascending(k, visit);
    case EnumerationOrder::BRCP: break;
    }
    return enumerate_brcp(k, visit);
}

// Type-erased entry point. Throws std::invalid_argument for k < 0.
uint64_t enumerate(int k, EnumerationOrder order, const Visitor& visitor);

// p(k) by the pentagonal-number recurrence (memoized, thread-safe).
Integer count_partitions(int k);
// |k; m|: partitions of k with exactly m parts.
Integer count_with_parts(int k, int m);
// P(k, m): partitions of k with at most m parts.
Integer count_at_most_parts(int k, int m);

// Listing line "TERM: n1(e1) n2(e2) ..." without a trailing newline.
std::string format_partition(uint64_t term, const PartitionView& v);
std::string format_partition(uint64_t term, const Partition& p);
std::string format_multiplicities(const Partition& p);
std::string partition_json(const PartitionView& v);

}  // namespace partmeth
