// partmeth: command-line front end for the partition method library.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "partmeth/classes.hpp"
#include "partmeth/emit.hpp"
#include "partmeth/genfuncs.hpp"
#include "partmeth/named.hpp"
#include "partmeth/operator.hpp"

using namespace partmeth;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string grouped(const std::string& digits)
{
    std::string sign, d = digits;
    if (!d.empty() && d[0] == '-') {
        sign = "-";
        d.erase(0, 1);
    }
    std::string out;
    int n = static_cast<int>(d.size());
    for (int i = 0; i < n; ++i) {
        if (i && (n - i) % 3 == 0)
            out += ' ';
        out += d[static_cast<size_t>(i)];
    }
    return sign + out;
}

Rational parse_rational(const std::string& s)
{
    try {
        Rational r(s);
        r.canonicalize();
        if (r.get_den() == 0)
            throw UsageError("zero denominator in " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw UsageError("not a rational number: " + s);
    }
}

// Output destination: stdout, a file, a null sink, or rolling files of N terms each.
class Output {
public:
    Output(const std::string& sink, const std::string& path, uint64_t split) : sink_(sink), path_(path), split_(split)
    {
        if (sink_ != "stdout" && sink_ != "null" && sink_ != "file")
            throw UsageError("--sink must be stdout, null or file");
        if (sink_ == "file" && path_.empty())
            throw UsageError("--sink file needs --out");
        if (!path_.empty() && sink_ == "stdout")
            sink_ = "file";
        if (split_ && sink_ != "file")
            throw UsageError("--split needs a file sink");
        open_next();
    }

    void write(const std::string& s)
    {
        if (sink_ == "null")
            return;
        (file_ ? *file_ : std::cout) << s;
    }

    // Called after each complete term; rolls to the next file when the current one is full.
    void term_done()
    {
        if (split_ && ++in_file_ == split_) {
            in_file_ = 0;
            pending_roll_ = true;
        }
    }

    void before_write()
    {
        if (pending_roll_) {
            pending_roll_ = false;
            open_next();
        }
    }

    void flush()
    {
        if (file_)
            file_->flush();
        else
            std::cout.flush();
    }

private:
    void open_next()
    {
        if (sink_ != "file")
            return;
        std::string name = path_;
        if (split_) {
            char buf[16];
            std::snprintf(buf, sizeof buf, ".%03d", part_++);
            name += buf;
        }
        file_ = std::make_unique<std::ofstream>(name);
        if (!*file_)
            throw std::runtime_error("cannot open " + name);
    }

    std::string sink_, path_;
    uint64_t split_ = 0, in_file_ = 0;
    bool pending_roll_ = false;
    int part_ = 0;
    std::unique_ptr<std::ofstream> file_;
};

struct ClassFlags {
    bool distinct = false, odd = false, even = false, pentagonal = false;
    int min_element = 1;
    std::optional<int> max_element, max_mult, parts, max_parts, largest;
    std::vector<int> require;
    bool require_any = false;

    void add(CLI::App* app)
    {
        app->add_flag("--distinct", distinct, "Discrete partitions (no repeated element)");
        app->add_flag("--odd", odd, "Odd elements only");
        app->add_flag("--even", even, "Even elements only");
        app->add_flag("--pentagonal", pentagonal, "Generalized pentagonal elements only");
        app->add_option("--min-element", min_element, "Smallest allowed element")->check(CLI::PositiveNumber);
        app->add_option("--max-element", max_element, "Largest allowed element")->check(CLI::PositiveNumber);
        app->add_option("--max-mult", max_mult, "Largest allowed multiplicity")->check(CLI::PositiveNumber);
        app->add_option("--parts", parts, "Exact number of parts")->check(CLI::NonNegativeNumber);
        app->add_option("--max-parts", max_parts, "At most this many parts")->check(CLI::NonNegativeNumber);
        app->add_option("--largest", largest, "Gaussian class: elements at most this, with --max-parts")
            ->check(CLI::PositiveNumber);
        app->add_option("--require", require, "Elements that must appear")->delimiter(',');
        app->add_flag("--require-any", require_any, "At least one --require element instead of all");
    }

    bool any() const
    {
        return distinct || odd || even || pentagonal || min_element != 1 || max_element || max_mult || parts ||
               max_parts || largest || !require.empty();
    }

    PartitionClass build() const
    {
        if (odd + even + pentagonal > 1)
            throw UsageError("--odd, --even and --pentagonal are mutually exclusive");
        if (require_any && require.empty())
            throw UsageError("--require-any needs --require");
        PartitionClass c;
        if (odd)
            c = PartitionClass::odd_elements();
        if (even)
            c = PartitionClass::even_elements();
        if (pentagonal)
            c = PartitionClass::pentagonal_elements();
        if (largest) {
            if (!max_parts)
                throw UsageError("--largest needs --max-parts");
            c.max_element = *largest;
        }
        if (distinct) {
            c.distinct = true;
            c.max_multiplicity = 1;
        }
        c.min_element = std::max(c.min_element, min_element);
        if (max_element)
            c.max_element = c.max_element ? std::min(*c.max_element, *max_element) : *max_element;
        if (max_mult)
            c.max_multiplicity = c.max_multiplicity ? std::min(*c.max_multiplicity, *max_mult) : *max_mult;
        if (parts)
            c.exact_parts = *parts;
        if (max_parts)
            c.max_parts = *max_parts;
        c.required_elements = require;
        c.required_mode = require_any ? RequiredMode::Any : RequiredMode::All;
        try {
            c.validate();
        } catch (const ClassError& e) {
            throw UsageError(e.what());
        }
        return c;
    }
};

EnumerationOrder parse_order(const std::string& s)
{
    if (s == "brcp")
        return EnumerationOrder::BRCP;
    if (s == "revlex")
        return EnumerationOrder::ReverseLex;
    if (s == "ascending")
        return EnumerationOrder::Ascending;
    throw UsageError("unknown order " + s);
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed)
{
    for (auto a : allowed)
        if (f == a)
            return;
    throw UsageError("format " + f + " is not available for this command");
}

// partitions
struct PartitionsCmd {
    int k = 0;
    std::string order = "brcp", format = "text", sink = "stdout", out;
    uint64_t split = 0;
    bool conjugate = false;
    ClassFlags cls;

    int run() const
    {
        check_format(format, {"text", "jsonl"});
        if (conjugate && format != "text")
            throw UsageError("--conjugate is a text format");
        PartitionClass c = cls.build();
        Output o(sink, out, split);
        uint64_t term = 0;
        auto visit = [&](const PartitionView& v) {
            ++term;
            o.before_write();
            if (conjugate)
                o.write(format_conjugate_line(term, v.to_partition()) + "\n");
            else if (format == "jsonl")
                o.write(partition_json(v) + "\n");
            else
                o.write(format_partition(term, v) + "\n");
            o.term_done();
        };
        enumerate_class(k, c, parse_order(order), visit);
        o.flush();
        return 0;
    }
};

// count
struct CountCmd {
    int k = 0;
    std::string route = "auto", format = "text", ratio;
    bool group = false;
    int kmax = 50;
    unsigned threads = 1;
    ClassFlags cls;

    Integer count_one(int n, const PartitionClass& c) const
    {
        std::string r = route;
        if (r == "auto")
            r = cls.any() ? "enumerate" : "recurrence";
        if (r == "recurrence") {
            if (cls.any())
                throw UsageError("--route recurrence only counts unrestricted partitions");
            return count_partitions(n);
        }
        if (r == "enumerate")
            return Integer(std::to_string(count_class(n, c)));
        if (r == "operator")
            return apply(n, c, Weight::unit(), {threads}).as<Rational>().get_num();
        if (r == "pentagonal") {
            if (cls.any())
                throw UsageError("--route pentagonal only counts unrestricted partitions");
            return p_from_q(n, {threads});
        }
        if (r == "gamma") {
            if (cls.any())
                throw UsageError("--route gamma only counts unrestricted partitions");
            return p_from_gamma(n);
        }
        if (r == "discrete-recurrence") {
            if (!cls.distinct || cls.any() != cls.distinct)
                throw UsageError("--route discrete-recurrence needs exactly --distinct");
            return n == 0 ? Integer(1) : discrete_count_recurrence(n);
        }
        throw UsageError("unknown route " + r);
    }

    int run() const
    {
        check_format(format, {"text", "jsonl", "csv"});
        if (!ratio.empty()) {
            // Data behind the ratio-versus-k plots.
            if (ratio != "discrete" && ratio != "pentagonal")
                throw UsageError("--ratio must be discrete or pentagonal");
            PartitionClass c = ratio == "discrete" ? PartitionClass::discrete() : PartitionClass::pentagonal_elements();
            if (format == "csv")
                std::cout << "k,class_count,p,ratio\n";
            for (int n = 1; n <= kmax; ++n) {
                uint64_t m = count_class(n, c);
                Integer p = count_partitions(n);
                double r = static_cast<double>(m) / p.get_d();
                if (format == "csv")
                    std::cout << n << ',' << m << ',' << p.get_str() << ',' << std::setprecision(12) << r << '\n';
                else if (format == "jsonl")
                    std::cout << json{{"k", n}, {"class_count", m}, {"p", p.get_str()}, {"ratio", r}}.dump() << '\n';
                else
                    std::cout << n << ' ' << m << ' ' << p.get_str() << ' ' << std::setprecision(12) << r << '\n';
            }
            return 0;
        }
        PartitionClass c = cls.build();
        std::string v = count_one(k, c).get_str();
        if (format == "jsonl")
            std::cout << json{{"k", k}, {"class", c.describe()}, {"count", v}}.dump() << '\n';
        else if (format == "csv")
            std::cout << "k,count\n" << k << ',' << v << '\n';
        else
            std::cout << (group ? grouped(v) : v) << '\n';
        return 0;
    }
};

// coeffs
struct CoeffsCmd {
    std::string family, route = "operator", format = "text", rho;
    int kmax = 10;
    bool generalized = false;

    int run() const
    {
        check_format(format, {"text", "jsonl", "csv"});
        std::vector<std::string> values;
        auto rationals = [&](const std::vector<Rational>& t) {
            for (auto& x : t)
                values.push_back(to_string(x));
        };
        Family f{};
        bool named = true;
        if (family == "cosecant")
            f = Family::Cosecant;
        else if (family == "secant")
            f = Family::Secant;
        else if (family == "reciprocal-log")
            f = Family::ReciprocalLog;
        else
            named = false;

        if (generalized || !rho.empty()) {
            if (!named)
                throw UsageError("--generalized and --rho apply to cosecant, secant and reciprocal-log");
            GeneralizedRoute g = route == "inner" ? GeneralizedRoute::OverInner : GeneralizedRoute::OverNumbers;
            if (route != "inner" && route != "operator" && route != "numbers")
                throw UsageError("generalized routes are numbers and inner");
            auto t = generalized_table(f, kmax, g);
            for (auto& p : t)
                values.push_back(rho.empty() ? p.str() : to_string(p.eval(parse_rational(rho))));
        } else if (named) {
            if (route == "operator" || route == "recurrence") {
                rationals(family_table(f, kmax, route == "operator" ? Route::Operator : Route::Recurrence));
            } else if (route == "bernoulli" && f == Family::Cosecant) {
                for (int k = 0; k <= kmax; ++k)
                    values.push_back(to_string(k == 0 ? Rational(1) : cosecant_from_bernoulli(k)));
            } else if (route == "stirling" && f == Family::ReciprocalLog) {
                for (int k = 0; k <= kmax; ++k)
                    values.push_back(to_string(reciprocal_log_stirling(k)));
            } else {
                throw UsageError("route " + route + " is not available for " + family);
            }
        } else if (family == "bessel") {
            if (route != "operator" && route != "recurrence")
                throw UsageError("bessel routes are operator and recurrence");
            for (auto& h : bessel_h_table(kmax, route == "operator" ? Route::Operator : Route::Recurrence))
                values.push_back(h.str());
        } else if (family == "exp-product") {
            auto c = exp_product_C(std::max(kmax, 1));
            for (int k = 1; k <= kmax; ++k)
                values.push_back(to_string(c[static_cast<size_t>(k)]));
        } else if (family == "q") {
            for (int k = 0; k <= kmax; ++k) {
                if (route == "operator" || route == "closed")
                    values.push_back(q_number(k).get_str());
                else if (route == "via-p")
                    values.push_back(q_number_via_p(k).get_str());
                else if (route == "gamma")
                    values.push_back(q_number_via_gamma(k).get_str());
                else
                    throw UsageError("q routes are closed, via-p and gamma");
            }
        } else if (family == "p") {
            for (int k = 0; k <= kmax; ++k) {
                if (route == "operator" || route == "recurrence")
                    values.push_back(count_partitions(k).get_str());
                else if (route == "pentagonal")
                    values.push_back(p_from_q(k).get_str());
                else if (route == "gamma")
                    values.push_back(p_from_gamma(k).get_str());
                else
                    throw UsageError("p routes are recurrence, pentagonal and gamma");
            }
        } else if (family == "discrete-count") {
            for (auto& x : discrete_count_table(kmax))
                values.push_back(x.get_str());
        } else if (family == "divisor") {
            for (int j = 1; j <= kmax; ++j) {
                auto d = divisor_data(j);
                values.push_back(to_string(d.gamma) + " ; " + d.gamma_poly.str());
            }
        } else {
            throw UsageError("unknown family " + family);
        }

        int first = (family == "exp-product" || family == "divisor") ? 1 : 0;
        if (format == "csv")
            std::cout << "k,value\n";
        for (size_t i = 0; i < values.size(); ++i) {
            int k = first + static_cast<int>(i);
            if (format == "jsonl")
                std::cout << json{{"family", family}, {"k", k}, {"value", values[i]}}.dump() << '\n';
            else if (format == "csv")
                std::cout << k << ",\"" << values[i] << "\"\n";
            else
                std::cout << k << ": " << values[i] << '\n';
        }
        return 0;
    }
};

// polys
struct PolysCmd {
    std::string table = "omega", format = "text";
    int kmax = -1;
    std::vector<std::string> rho;

    int run() const
    {
        check_format(format, {"text", "jsonl"});
        int top = kmax;
        if (top < 0)
            top = (table == "omega" || table == "rho") ? 10 : table == "qp" ? 8 : 6;
        auto line = [&](const std::string& name, int k, const std::string& v) {
            if (format == "jsonl")
                std::cout << json{{"table", table}, {"name", name}, {"k", k}, {"value", v}}.dump() << '\n';
            else
                std::cout << name << " = " << v << '\n';
        };
        std::string ks;
        for (int k = 0; k <= top; ++k) {
            ks = std::to_string(k);
            if (table == "omega") {
                line("q(" + ks + ",w)", k, q_poly(k).str());
                line("p(" + ks + ",w)", k, p_poly(k).str());
            } else if (table == "rho") {
                std::vector<std::string> rs = rho.empty() ? std::vector<std::string>{"2", "3"} : rho;
                for (auto& r : rs)
                    line("q(" + ks + ",w," + r + ")", k, q_omega_rho_at(k, parse_rational(r)).str());
            } else if (table == "rho-symbolic") {
                line("q(" + ks + ",w,r)", k, q_omega_rho(k).str());
            } else if (table == "qp") {
                line("QP_" + ks + "(w,b,a)", k, qp_poly(k).str());
            } else if (table == "hp") {
                line("HP_" + ks + "(w,x,y)", k, hp_poly(k).str());
            } else {
                throw UsageError("--table must be omega, rho, rho-symbolic, qp or hp");
            }
        }
        return 0;
    }
};

// bessel
struct BesselCmd {
    std::string nu = "0", nu_im, format = "text";
    int k = 17;
    bool ratio_series = false;
    double nu_min = -0.9, nu_max = 4.0, nu_step = 0.1;
    std::vector<int> ks{1, 5, 8, 12, 18};

    int run() const
    {
        check_format(format, {"text", "jsonl", "csv"});
        std::cout << std::setprecision(16);
        if (ratio_series) {
            // Data behind the h_k/h_{k+1} versus nu plot.
            if (nu_step <= 0 || nu_max < nu_min)
                throw UsageError("bad --nu-min/--nu-max/--nu-step");
            int top = *std::max_element(ks.begin(), ks.end()) + 1;
            std::cout << "nu";
            for (int kk : ks)
                std::cout << ",k" << kk;
            std::cout << '\n';
            int steps = static_cast<int>((nu_max - nu_min) / nu_step + 0.5);
            for (int s = 0; s <= steps; ++s) {
                double x = nu_min + s * nu_step;
                std::cout << x;
                try {
                    auto h = bessel_h_at(Complex(x, 0), top);
                    for (int kk : ks)
                        std::cout << ',' << (h[static_cast<size_t>(kk)] / h[static_cast<size_t>(kk) + 1]).real();
                } catch (const PoleError&) {
                    for (size_t i = 0; i < ks.size(); ++i)
                        std::cout << ",nan";
                }
                std::cout << '\n';
            }
            return 0;
        }
        std::pair<Complex, Complex> z;
        if (nu_im.empty())
            z = bessel_zero_estimate(parse_rational(nu), k);
        else
            z = bessel_zero_estimate(Complex(to_double(parse_rational(nu)), to_double(parse_rational(nu_im))), k);
        if (format == "jsonl")
            std::cout << json{{"nu", nu}, {"nu_im", nu_im.empty() ? "0" : nu_im}, {"k", k},
                              {"re", z.first.real()}, {"im", z.first.imag()}}
                             .dump()
                      << '\n';
        else if (format == "csv")
            std::cout << "k,re,im\n" << k << ',' << z.first.real() << ',' << z.first.imag() << '\n';
        else
            std::cout << "+-(" << z.first.real() << (z.first.imag() < 0 ? " - " : " + ") << std::abs(z.first.imag())
                      << "i)\n";
        return 0;
    }
};

// emit-symbolic
struct EmitCmd {
    std::string what, sink = "stdout", out;
    int k = 1;
    bool wrap = false;
    uint64_t split = 0;

    int run() const
    {
        EmitKind kind;
        try {
            kind = parse_emit_kind(what);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (k < 1)
            throw UsageError("--k must be at least 1");
        Output o(sink, out, split);
        EmitOptions opt;
        opt.wrap_three = wrap;
        emit_symbolic(
            kind, k,
            [&](const std::string& s, bool term_end) {
                o.before_write();
                o.write(s);
                if (term_end)
                    o.term_done();
            },
            opt);
        o.flush();
        return 0;
    }
};

// bench
struct BenchCmd {
    std::vector<int> ks{20};
    std::vector<std::string> orders{"brcp", "revlex", "ascending"};
    std::string sink = "null", out, format = "text";
    int repeat = 1;

    int run() const
    {
        check_format(format, {"text", "jsonl", "csv"});
        if (repeat < 1)
            throw UsageError("--repeat must be positive");
        std::vector<EnumerationOrder> ord;
        for (auto& s : orders)
            ord.push_back(parse_order(s));
        if (format == "csv")
            std::cout << "k,order,count,seconds,partitions_per_second\n";
        bool ok = true;
        for (int k : ks) {
            Integer expect = count_partitions(k);
            for (size_t i = 0; i < ord.size(); ++i) {
                Output o(sink, out, 0);
                uint64_t n = 0;
                auto t0 = std::chrono::steady_clock::now();
                for (int r = 0; r < repeat; ++r) {
                    uint64_t term = 0;
                    if (sink == "null")
                        n = enumerate(k, ord[i], [&](const PartitionView& v) { term += static_cast<uint64_t>(v.num_parts() >= 0); });
                    else
                        n = enumerate(k, ord[i], [&](const PartitionView& v) { o.write(format_partition(++term, v) + "\n"); });
                }
                o.flush();
                double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / repeat;
                double rate = secs > 0 ? static_cast<double>(n) / secs : 0.0;
                bool match = Integer(std::to_string(n)) == expect;
                ok = ok && match;
                if (format == "jsonl")
                    std::cout << json{{"k", k}, {"order", orders[i]}, {"count", n}, {"seconds", secs},
                                      {"partitions_per_second", rate}, {"matches_recurrence", match}}
                                     .dump()
                              << '\n';
                else if (format == "csv")
                    std::cout << k << ',' << orders[i] << ',' << n << ',' << secs << ',' << rate << '\n';
                else
                    std::cout << "k=" << k << ' ' << orders[i] << ": " << n << " partitions, " << secs << " s, "
                              << rate << " /s" << (match ? "" : "  COUNT MISMATCH") << '\n';
            }
        }
        if (!ok)
            std::cerr << "bench: generator counts disagree\n";
        return ok ? 0 : 1;
    }
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Partition method toolkit"};
    app.require_subcommand(1);

    PartitionsCmd pc;
    auto* sp = app.add_subcommand("partitions", "List the partitions of k");
    sp->add_option("--k", pc.k, "Order")->required()->check(CLI::NonNegativeNumber);
    sp->add_option("--order", pc.order, "brcp, revlex or ascending");
    sp->add_option("--format", pc.format, "text or jsonl");
    sp->add_flag("--conjugate", pc.conjugate, "Print each partition with its conjugate");
    sp->add_option("--sink", pc.sink, "stdout, null or file");
    sp->add_option("--out", pc.out, "Output path");
    sp->add_option("--split", pc.split, "Roll output files every N partitions");
    pc.cls.add(sp);

    CountCmd cc;
    auto* sc = app.add_subcommand("count", "Count the partitions of k");
    sc->add_option("--k", cc.k, "Order")->check(CLI::NonNegativeNumber);
    sc->add_option("--route", cc.route, "auto, recurrence, enumerate, operator, pentagonal, gamma, discrete-recurrence");
    sc->add_option("--format", cc.format, "text, jsonl or csv");
    sc->add_flag("--grouped", cc.group, "Group digits in threes");
    sc->add_option("--threads", cc.threads, "Threads for the operator route")->check(CLI::PositiveNumber);
    sc->add_option("--ratio", cc.ratio, "discrete or pentagonal: class count over p(k) for k = 1..kmax");
    sc->add_option("--kmax", cc.kmax, "Upper k for --ratio")->check(CLI::PositiveNumber);
    cc.cls.add(sc);

    CoeffsCmd fc;
    auto* sf = app.add_subcommand("coeffs", "Coefficient families");
    sf->add_option("--family", fc.family,
                   "cosecant, secant, reciprocal-log, bessel, exp-product, q, p, discrete-count, divisor")
        ->required();
    sf->add_option("--kmax", fc.kmax, "Largest index")->check(CLI::NonNegativeNumber);
    sf->add_option("--route", fc.route, "Computation route");
    sf->add_flag("--generalized", fc.generalized, "Coefficients of the rho-th power, as polynomials in r");
    sf->add_option("--rho", fc.rho, "Evaluate the generalized coefficients at this rational rho");
    sf->add_option("--format", fc.format, "text, jsonl or csv");

    PolysCmd yc;
    auto* sy = app.add_subcommand("polys", "Generating-function polynomial tables");
    sy->add_option("--table", yc.table, "omega, rho, rho-symbolic, qp or hp");
    sy->add_option("--kmax", yc.kmax, "Largest k")->check(CLI::NonNegativeNumber);
    sy->add_option("--rho", yc.rho, "rho values for the rho table")->delimiter(',');
    sy->add_option("--format", yc.format, "text or jsonl");

    BesselCmd bc;
    auto* sb = app.add_subcommand("bessel", "Bessel zero estimates from h_k/h_{k+1}");
    sb->add_option("--nu", bc.nu, "Order nu (rational, real part)");
    sb->add_option("--nu-im", bc.nu_im, "Imaginary part of nu");
    sb->add_option("--k", bc.k, "Coefficient index")->check(CLI::PositiveNumber);
    sb->add_flag("--ratio-series", bc.ratio_series, "CSV of h_k/h_{k+1} against nu");
    sb->add_option("--nu-min", bc.nu_min);
    sb->add_option("--nu-max", bc.nu_max);
    sb->add_option("--nu-step", bc.nu_step);
    sb->add_option("--ks", bc.ks, "k values for --ratio-series")->delimiter(',');
    sb->add_option("--format", bc.format, "text, jsonl or csv");

    EmitCmd ec;
    auto* se = app.add_subcommand("emit-symbolic", "Mathematica-style symbolic coefficients");
    se->add_option("--what", ec.what, "DS, ES, pfn or dispfnpoly")->required();
    se->add_option("--k", ec.k, "Order")->required();
    se->add_flag("--wrap", ec.wrap, "Three terms per line");
    se->add_option("--sink", ec.sink, "stdout, null or file");
    se->add_option("--out", ec.out, "Output path");
    se->add_option("--split", ec.split, "Roll output files every N terms");

    BenchCmd nc;
    auto* sn = app.add_subcommand("bench", "Generator throughput with a count check");
    sn->add_option("--k", nc.ks, "Orders")->delimiter(',');
    sn->add_option("--orders", nc.orders, "Generators")->delimiter(',');
    sn->add_option("--sink", nc.sink, "null or file");
    sn->add_option("--out", nc.out, "Output path for --sink file");
    sn->add_option("--repeat", nc.repeat, "Repetitions per measurement");
    sn->add_option("--format", nc.format, "text, jsonl or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*sp)
            return pc.run();
        if (*sc) {
            if (cc.ratio.empty() && sc->count("--k") == 0)
                throw UsageError("count needs --k or --ratio");
            return cc.run();
        }
        if (*sf)
            return fc.run();
        if (*sy)
            return yc.run();
        if (*sb)
            return bc.run();
        if (*se)
            return ec.run();
        if (*sn) {
            if (nc.sink == "stdout")
                throw UsageError("bench writes its report to stdout; use --sink null or file");
            return nc.run();
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const ClassError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
