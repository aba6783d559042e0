#include "partmeth/emit.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

#include "partmeth/classes.hpp"

namespace partmeth {

const char* emit_kind_name(EmitKind k)
{
    switch (k) {
    case EmitKind::DS: return "DS";
    case EmitKind::ES: return "ES";
    case EmitKind::Pfn: return "pfn";
    case EmitKind::DispFnPoly: return "dispfnpoly";
    }
    return "?";
}

EmitKind parse_emit_kind(const std::string& s)
{
    std::string l = s;
    std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return std::tolower(c); });
    if (l == "ds")
        return EmitKind::DS;
    if (l == "es")
        return EmitKind::ES;
    if (l == "pfn")
        return EmitKind::Pfn;
    if (l == "dispfnpoly")
        return EmitKind::DispFnPoly;
    throw std::invalid_argument("unknown emission kind: " + s);
}

namespace {

std::string pw(int e)
{
    return "^(" + std::to_string(e) + ")";
}

// "/f!" or "/(f1! f2!)" over the frequencies above one, or "".
std::string denominators(const PartitionView& v)
{
    std::vector<int> f;
    for (int e : v.elements())
        if (v.multiplicity(e) > 1)
            f.push_back(v.multiplicity(e));
    if (f.empty())
        return "";
    std::string s;
    for (size_t i = 0; i < f.size(); ++i)
        s += (i ? " " : "") + std::to_string(f[i]) + "!";
    return f.size() > 1 ? "/(" + s + ")" : "/" + s;
}

// " N!/..." when the partition has more than one distinct element.
std::string multinomial(const PartitionView& v)
{
    if (v.num_parts() < 2 || v.num_distinct() < 2)
        return "";
    return std::to_string(v.num_parts()) + "!" + denominators(v) + " ";
}

std::string ds_term(const PartitionView& v)
{
    std::string s;
    for (int e : v.elements()) {
        int f = v.multiplicity(e);
        s += "p[" + std::to_string(e) + ",n]" + (f > 1 ? pw(f) : "") + " ";
    }
    int n = v.num_parts();
    s += "q[" + std::to_string(n) + "] a" + (n > 1 ? pw(n) : "") + " ";
    return s + multinomial(v);
}

std::string es_term(const PartitionView& v)
{
    int n = v.num_parts();
    std::string s = "DS[0,0]^(-" + std::to_string(n + 1) + ") ";
    for (int e : v.elements()) {
        int f = v.multiplicity(e);
        s += "DS[" + std::to_string(e) + ",n]" + (f > 1 ? pw(f) : "") + " ";
    }
    return s + multinomial(v);
}

std::string pfn_term(const PartitionView& v)
{
    std::string s;
    for (int e : v.elements()) {
        int j = std::abs(pentagonal_index(e));
        int f = v.multiplicity(e);
        s += "((-1)^(" + std::to_string(j) + "))" + (f > 1 ? pw(f) : "") + " ";
    }
    int n = v.num_parts();
    s += std::string("(-1)") + (n > 1 ? pw(n) : "") + " ";
    return s + multinomial(v);
}

std::string dp_term(const PartitionView& v, bool phase)
{
    std::string s;
    for (int e : v.elements()) {
        int f = v.multiplicity(e);
        s += "DP[" + std::to_string(e) + ",w]" + (f > 1 ? pw(f) : "") + " ";
    }
    int n = v.num_parts();
    if (phase)
        s += std::string("(-1)") + (n > 1 ? pw(n) : "");
    return s + denominators(v);
}

// Joins terms with " + " (or a leading sign for ES) and applies the wrapping rule.
class Joiner {
public:
    Joiner(const EmitSink& sink, EmitOptions opt) : sink_(sink), opt_(opt) {}

    void header(const std::string& h) { sink_(h, false); }

    void term(const std::string& body, bool negative = false)
    {
        std::string s;
        if (count_ == 0) {
            s = negative ? "-" : "";
        } else {
            bool wrap = opt_.wrap_three && count_ % 3 == 0;
            std::string sign = negative ? "-" : "+";
            if (wrap)
                s = " " + sign + "\n";
            else
                s = " " + sign + " ";
        }
        ++count_;
        sink_(s + body, true);
    }

    void finish() { sink_("\n", false); }
    uint64_t count() const { return count_; }

private:
    const EmitSink& sink_;
    EmitOptions opt_;
    uint64_t count_ = 0;
};

// Strips the trailing space of a term body so separators do not double up.
std::string trim_right(std::string s)
{
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    return s;
}

}  // namespace

uint64_t emit_symbolic(EmitKind what, int k, const EmitSink& sink, EmitOptions opt)
{
    if (k < 1)
        throw std::invalid_argument("emission needs k >= 1");
    std::string ks = std::to_string(k);
    uint64_t total = 0;
    switch (what) {
    case EmitKind::DS: {
        Joiner j(sink, opt);
        j.header("DS[" + ks + ",n_]:= ");
        enumerate_brcp(k, [&](const PartitionView& v) { j.term(trim_right(ds_term(v))); });
        j.finish();
        return j.count();
    }
    case EmitKind::ES: {
        Joiner j(sink, opt);
        j.header("ES[" + ks + ",n_]:= ");
        enumerate_brcp(k, [&](const PartitionView& v) { j.term(trim_right(es_term(v)), v.num_parts() % 2); });
        j.finish();
        return j.count();
    }
    case EmitKind::Pfn: {
        Joiner j(sink, opt);
        j.header("p[" + ks + "]:= ");
        enumerate_class_brcp(k, PartitionClass::pentagonal_elements(),
                             [&](const PartitionView& v) { j.term(trim_right(pfn_term(v))); });
        j.finish();
        return j.count();
    }
    case EmitKind::DispFnPoly: {
        for (int type = 1; type <= 2; ++type) {
            Joiner j(sink, opt);
            j.header(type == 1 ? "Q[" + ks + ",-w_]:= " : "P[" + ks + ",w_]:= ");
            enumerate_brcp(k, [&](const PartitionView& v) { j.term(trim_right(dp_term(v, type == 1))); });
            j.finish();
            if (type == 1)
                sink("\n", false);
            total += j.count();
        }
        return total;
    }
    }
    return total;
}

std::string emit_symbolic(EmitKind what, int k, EmitOptions opt)
{
    std::string out;
    emit_symbolic(what, k, [&](const std::string& s, bool) { out += s; }, opt);
    return out;
}

}  // namespace partmeth
