#include "partmeth/operator.hpp"

#include <mutex>
#include <thread>

namespace partmeth {

RingValue promote(const RingValue& v, const RingValue& proto)
{
    if (v.tag() == RingTag::Rational && proto.tag() != RingTag::Rational)
        return lift(v.as<Rational>(), proto);
    return v;
}

RingValue mixed_add(const RingValue& a, const RingValue& b)
{
    if (a.tag() == RingTag::Rational && b.tag() != RingTag::Rational)
        return lift(a.as<Rational>(), b) + b;
    if (b.tag() == RingTag::Rational && a.tag() != RingTag::Rational)
        return a + lift(b.as<Rational>(), a);
    return a + b;
}

RingValue mixed_mul(const RingValue& a, const RingValue& b)
{
    if (a.tag() == RingTag::Rational)
        return ring_scale(b, a.as<Rational>());
    if (b.tag() == RingTag::Rational)
        return ring_scale(a, b.as<Rational>());
    return a * b;
}

Weight Weight::unit()
{
    return Weight{};
}

Weight Weight::multinomial()
{
    Weight w;
    w.kind_ = WeightKind::Multinomial;
    return w;
}

Weight Weight::phase()
{
    Weight w;
    w.kind_ = WeightKind::Phase;
    return w;
}

Weight Weight::element_assign(std::vector<RingValue> values)
{
    Weight w;
    w.kind_ = WeightKind::ElementAssign;
    w.values_ = std::move(values);
    return w;
}

Weight Weight::element_power(std::vector<RingValue> values)
{
    Weight w;
    w.kind_ = WeightKind::ElementPower;
    w.values_ = std::move(values);
    return w;
}

Weight Weight::outer_factor(std::vector<RingValue> g)
{
    Weight w;
    w.kind_ = WeightKind::OuterFactor;
    w.values_ = std::move(g);
    return w;
}

Weight Weight::pochhammer_total(RingValue rho, bool negate)
{
    Weight w;
    w.kind_ = WeightKind::PochhammerTotal;
    w.rho_ = std::move(rho);
    w.negate_ = negate;
    return w;
}

Weight Weight::per_element_pochhammer(std::vector<RingValue> rho)
{
    Weight w;
    w.kind_ = WeightKind::PerElementPochhammer;
    w.values_ = std::move(rho);
    return w;
}

Weight Weight::product(std::vector<Weight> factors)
{
    Weight w;
    w.kind_ = WeightKind::Product;
    for (auto& f : factors) {
        if (f.kind_ == WeightKind::Product)
            w.factors_.insert(w.factors_.end(), f.factors_.begin(), f.factors_.end());
        else
            w.factors_.push_back(std::move(f));
    }
    return w;
}

Weight Weight::custom(Fn f, RingValue zero, std::string name)
{
    Weight w;
    w.kind_ = WeightKind::Custom;
    w.fn_ = std::move(f);
    w.rho_ = std::move(zero);
    w.name_ = std::move(name);
    return w;
}

Weight operator*(const Weight& a, const Weight& b)
{
    return Weight::product({a, b});
}

std::string Weight::name() const
{
    switch (kind_) {
    case WeightKind::Unit: return "Unit";
    case WeightKind::Multinomial: return "Multinomial";
    case WeightKind::Phase: return "Phase";
    case WeightKind::ElementAssign: return "ElementAssign";
    case WeightKind::ElementPower: return "ElementPower";
    case WeightKind::OuterFactor: return "OuterFactor";
    case WeightKind::PochhammerTotal: return "PochhammerTotal";
    case WeightKind::PerElementPochhammer: return "PerElementPochhammer";
    case WeightKind::Custom: return name_;
    case WeightKind::Product: {
        std::string s;
        for (auto& f : factors_)
            s += (s.empty() ? "" : "*") + f.name();
        return s.empty() ? "Unit" : s;
    }
    }
    return "?";
}

BoundWeight Weight::bind(int k) const
{
    BoundWeight b;
    b.fact_.reserve(static_cast<size_t>(k) + 1);
    for (int n = 0; n <= k; ++n)
        b.fact_.push_back(factorial(static_cast<unsigned>(n)));
    if (kind_ == WeightKind::Product) {
        for (auto& f : factors_)
            b.add(f, k);
    } else {
        b.add(*this, k);
    }
    return b;
}

void BoundWeight::add(const Weight& w, int k)
{
    Factor f{w.kind_, w.name(), {}, {}};
    auto note_ring = [&](const RingValue& v) {
        if (v.tag() == RingTag::Rational)
            return;
        if (!has_ring_) {
            zero_ = zero_like(v);
            has_ring_ = true;
            return;
        }
        if (v.tag() != zero_.tag())
            throw RingMismatch("weight factor " + f.name + " is in ring " + ring_name(v.tag()) +
                               ", other factors are in ring " + ring_name(zero_.tag()));
        // Variable-name clashes surface here.
        (void)ring_add(zero_, zero_like(v));
    };
    auto need = [&](size_t n) {
        if (w.values_.size() < n)
            throw std::invalid_argument("weight factor " + f.name + " needs entries up to index " +
                                        std::to_string(n - 1));
    };
    switch (w.kind_) {
    case WeightKind::Unit:
        return;
    case WeightKind::Multinomial:
    case WeightKind::Phase:
        break;
    case WeightKind::ElementAssign:
    case WeightKind::ElementPower:
    case WeightKind::PerElementPochhammer: {
        need(static_cast<size_t>(k) + 1);
        f.table.resize(static_cast<size_t>(k) + 1);
        for (int i = 1; i <= k; ++i) {
            const RingValue& v = w.values_[static_cast<size_t>(i)];
            note_ring(v);
            auto& row = f.table[static_cast<size_t>(i)];
            int top = k / i;
            if (w.kind_ == WeightKind::PerElementPochhammer) {
                RingValue neg = ring_neg(v);
                for (int n = 0; n <= top; ++n)
                    row.push_back(
                        ring_scale(pochhammer(neg, static_cast<unsigned>(n)), Rational(1, 1) / Rational(fact_[static_cast<size_t>(n)])));
            } else {
                RingValue p = one_like(v);
                for (int n = 0; n <= top; ++n) {
                    if (n > 0)
                        p = p * v;
                    row.push_back(w.kind_ == WeightKind::ElementAssign
                                      ? ring_scale(p, Rational(1) / Rational(fact_[static_cast<size_t>(n)]))
                                      : p);
                }
            }
        }
        break;
    }
    case WeightKind::OuterFactor:
        need(static_cast<size_t>(k) + 1);
        f.table.emplace_back(w.values_.begin(), w.values_.begin() + k + 1);
        for (auto& v : f.table[0])
            note_ring(v);
        break;
    case WeightKind::PochhammerTotal: {
        note_ring(w.rho_);
        RingValue x = w.negate_ ? ring_neg(w.rho_) : w.rho_;
        f.table.emplace_back();
        RingValue p = one_like(x);
        for (int n = 0; n <= k; ++n) {
            if (n > 0)
                p = p * (x + lift(n - 1, x));
            f.table[0].push_back(p);
        }
        break;
    }
    case WeightKind::Custom:
        note_ring(w.rho_);
        f.fn = w.fn_;
        break;
    case WeightKind::Product:
        for (auto& g : w.factors_)
            add(g, k);
        return;
    }
    factors_.push_back(std::move(f));
}

RingValue BoundWeight::eval(const PartitionView& v) const
{
    Rational scalar = 1;
    RingValue ring;
    bool have_ring = false;
    auto mul = [&](const RingValue& x) {
        if (x.tag() == RingTag::Rational) {
            scalar *= x.as<Rational>();
        } else if (have_ring) {
            ring = ring * x;
        } else {
            ring = x;
            have_ring = true;
        }
    };
    const int N = v.num_parts();
    for (const auto& f : factors_) {
        switch (f.kind) {
        case WeightKind::Unit:
        case WeightKind::Product:
            break;
        case WeightKind::Multinomial: {
            Integer den = 1;
            for (int e : v.elements())
                den *= fact_[static_cast<size_t>(v.multiplicity(e))];
            scalar *= Rational(fact_[static_cast<size_t>(N)], den);
            scalar.canonicalize();
            break;
        }
        case WeightKind::Phase:
            if (N % 2)
                scalar = -scalar;
            break;
        case WeightKind::ElementAssign:
        case WeightKind::ElementPower:
        case WeightKind::PerElementPochhammer:
            for (int e : v.elements())
                mul(f.table[static_cast<size_t>(e)][static_cast<size_t>(v.multiplicity(e))]);
            break;
        case WeightKind::OuterFactor:
        case WeightKind::PochhammerTotal:
            mul(f.table[0][static_cast<size_t>(N)]);
            break;
        case WeightKind::Custom:
            mul(f.fn(v));
            break;
        }
        if (scalar == 0)
            return zero_;
    }
    if (have_ring)
        return ring_scale(ring, scalar);
    return promote(RingValue(scalar), zero_);
}

namespace {

struct Accumulator {
    const BoundWeight& w;
    const PartitionClass& c;
    RingValue sum;
    bool any = false;

    void operator()(const PartitionView& v)
    {
        if (!c.matches(v))
            return;
        RingValue x = w.eval(v);
        if (!any) {
            sum = promote(x, w.zero());
            any = true;
        } else {
            sum = mixed_add(sum, x);
        }
    }

    RingValue result() const { return any ? sum : w.zero(); }
};

}  // namespace

std::vector<SubtreeSum> apply_subtrees(int k, const PartitionClass& c, const Weight& w)
{
    c.validate();
    BoundWeight bw = w.bind(k);
    Bounds b = c.bounds(k);
    Accumulator dummy{bw, c, {}, false};
    detail::BrcpWalker<Accumulator> probe(k, b, dummy);
    std::vector<SubtreeSum> out;
    for (int q : probe.subtrees()) {
        Accumulator acc{bw, c, {}, false};
        detail::BrcpWalker<Accumulator> walker(k, b, acc);
        walker.run_subtree(q);
        out.push_back({q, acc.result()});
    }
    return out;
}

RingValue apply(int k, const PartitionClass& c, const Weight& w, ApplyOptions opt)
{
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    c.validate();
    BoundWeight bw = w.bind(k);
    Bounds b = c.bounds(k);
    if (opt.threads <= 1) {
        Accumulator acc{bw, c, {}, false};
        enumerate_brcp(k, b, acc);
        return acc.result();
    }
    Accumulator dummy{bw, c, {}, false};
    detail::BrcpWalker<Accumulator> probe(k, b, dummy);
    std::vector<int> branches = probe.subtrees();
    std::vector<RingValue> partial(branches.size());
    std::vector<char> nonempty(branches.size(), 0);
    unsigned nthreads = std::min<unsigned>(opt.threads, static_cast<unsigned>(branches.size()));
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < nthreads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (size_t i = t; i < branches.size(); i += nthreads) {
                    Accumulator acc{bw, c, {}, false};
                    detail::BrcpWalker<Accumulator> walker(k, b, acc);
                    walker.run_subtree(branches[i]);
                    partial[i] = acc.result();
                    nonempty[i] = acc.any;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    // Merge in subtree order.
    RingValue sum = bw.zero();
    bool any = false;
    for (size_t i = 0; i < branches.size(); ++i) {
        if (!nonempty[i])
            continue;
        sum = any ? mixed_add(sum, partial[i]) : partial[i];
        any = true;
    }
    return sum;
}

RingValue apply(int k, const Weight& w, ApplyOptions opt)
{
    return apply(k, PartitionClass::all(), w, opt);
}

Integer stirling_first(int k, int j)
{
    if (k < 0 || j < 0 || j > k)
        return 0;
    static std::mutex m;
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    std::lock_guard<std::mutex> lock(m);
    for (int n = static_cast<int>(rows.size()); n <= k; ++n) {
        const auto& prev = rows.back();
        std::vector<Integer> row(static_cast<size_t>(n) + 1, 0);
        for (int i = 0; i <= n; ++i) {
            Integer a = (i >= 1) ? prev[static_cast<size_t>(i - 1)] : Integer(0);
            Integer b = (i <= n - 1) ? prev[static_cast<size_t>(i)] : Integer(0);
            row[static_cast<size_t>(i)] = a - (n - 1) * b;
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<size_t>(k)][static_cast<size_t>(j)];
}

}  // namespace partmeth
