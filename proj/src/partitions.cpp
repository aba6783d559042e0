#include "partmeth/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace partmeth {

Partition PartitionView::to_partition() const
{
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(num_distinct_));
    for (int e : elements())
        pairs.emplace_back(e, mult_[e]);
    return Partition(std::move(pairs));
}

Partition::Partition(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs))
{
    std::sort(pairs_.begin(), pairs_.end());
    for (size_t i = 0; i < pairs_.size(); ++i) {
        auto [e, n] = pairs_[i];
        if (e < 1 || n < 1)
            throw std::invalid_argument("partition elements and frequencies must be positive");
        if (i > 0 && pairs_[i - 1].first == e)
            throw std::invalid_argument("repeated element in multiplicity representation");
        total_ += e * n;
        num_parts_ += n;
    }
}

Partition Partition::from_parts(std::vector<int> parts)
{
    std::map<int, int> m;
    for (int e : parts)
        ++m[e];
    return Partition(std::vector<std::pair<int, int>>(m.begin(), m.end()));
}

int Partition::multiplicity(int e) const
{
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(e, 0));
    return (it != pairs_.end() && it->first == e) ? it->second : 0;
}

std::vector<int> Partition::parts() const
{
    std::vector<int> r;
    for (auto [e, n] : pairs_)
        r.insert(r.end(), static_cast<size_t>(n), e);
    return r;
}

const char* order_name(EnumerationOrder o)
{
    switch (o) {
    case EnumerationOrder::BRCP: return "brcp";
    case EnumerationOrder::ReverseLex: return "reverse-lex";
    case EnumerationOrder::Ascending: return "ascending";
    }
    return "?";
}

uint64_t enumerate(int k, EnumerationOrder order, const Visitor& visitor)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    auto v = [&](const PartitionView& p) { visitor(p); };
    return enumerate_order(k, order, v);
}

namespace {

std::mutex cache_mutex;
std::vector<Integer> p_cache{1};

}  // namespace

Integer count_partitions(int k)
{
    if (k < 0)
        return 0;
    std::lock_guard<std::mutex> lock(cache_mutex);
    for (int n = static_cast<int>(p_cache.size()); n <= k; ++n) {
        Integer s = 0;
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            if (g1 > n)
                break;
            int g2 = j * (3 * j + 1) / 2;
            Integer t = p_cache[static_cast<size_t>(n - g1)];
            if (g2 <= n)
                t += p_cache[static_cast<size_t>(n - g2)];
            if (j % 2)
                s += t;
            else
                s -= t;
        }
        p_cache.push_back(s);
    }
    return p_cache[static_cast<size_t>(k)];
}

namespace {

// Memo for |k; m|, rows indexed by k.
std::mutex parts_mutex;
std::vector<std::vector<Integer>> parts_cache{{Integer(1)}};

}  // namespace

Integer count_with_parts(int k, int m)
{
    if (k < 0 || m < 0 || m > k)
        return 0;
    std::lock_guard<std::mutex> lock(parts_mutex);
    for (int n = static_cast<int>(parts_cache.size()); n <= k; ++n) {
        std::vector<Integer> row(static_cast<size_t>(n) + 1, 0);
        for (int j = 1; j <= n; ++j) {
            // |n; j| = |n-1; j-1| + |n-j; j|
            Integer a = parts_cache[static_cast<size_t>(n - 1)][static_cast<size_t>(j - 1)];
            Integer b = (j <= n - j) ? parts_cache[static_cast<size_t>(n - j)][static_cast<size_t>(j)] : Integer(0);
            row[static_cast<size_t>(j)] = a + b;
        }
        parts_cache.push_back(std::move(row));
    }
    return parts_cache[static_cast<size_t>(k)][static_cast<size_t>(m)];
}

Integer count_at_most_parts(int k, int m)
{
    if (k < 0 || m < 1)
        return k == 0 ? 1 : 0;
    // P(k,m) = P(k,m-1) + P(k-m,m), P(k,1) = 1, P(0,m) = 1.
    std::vector<std::vector<Integer>> t(static_cast<size_t>(k) + 1, std::vector<Integer>(static_cast<size_t>(m) + 1));
    for (int n = 0; n <= k; ++n) {
        for (int j = 1; j <= m; ++j) {
            if (n == 0 || j == 1)
                t[static_cast<size_t>(n)][static_cast<size_t>(j)] = 1;
            else
                t[static_cast<size_t>(n)][static_cast<size_t>(j)] =
                    t[static_cast<size_t>(n)][static_cast<size_t>(j - 1)] +
                    (n >= j ? t[static_cast<size_t>(n - j)][static_cast<size_t>(j)] : Integer(0));
        }
    }
    return t[static_cast<size_t>(k)][static_cast<size_t>(m)];
}

std::string format_partition(uint64_t term, const PartitionView& v)
{
    std::ostringstream os;
    os << term << ":";
    for (int e : v.elements())
        os << " " << v.multiplicity(e) << "(" << e << ")";
    return os.str();
}

std::string format_multiplicities(const Partition& p)
{
    std::ostringstream os;
    bool first = true;
    for (auto [e, n] : p.pairs()) {
        os << (first ? "" : " ") << n << "(" << e << ")";
        first = false;
    }
    return os.str();
}

std::string format_partition(uint64_t term, const Partition& p)
{
    std::string body = format_multiplicities(p);
    return std::to_string(term) + ":" + (body.empty() ? "" : " " + body);
}

std::string partition_json(const PartitionView& v)
{
    nlohmann::ordered_json parts = nlohmann::ordered_json::object();
    for (int e : v.elements())
        parts[std::to_string(e)] = v.multiplicity(e);
    nlohmann::ordered_json j;
    j["total"] = v.total();
    j["parts"] = std::move(parts);
    j["num_parts"] = v.num_parts();
    return j.dump();
}

}  // namespace partmeth
