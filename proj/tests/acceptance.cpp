// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "partstab/cli.hpp"
#include "partstab/laurent.hpp"
#include "partstab/overpartitions.hpp"
#include "partstab/partition_count.hpp"
#include "partstab/presets.hpp"
#include "partstab/report.hpp"
#include "partstab/subsums.hpp"
#include "support.hpp"

using namespace partstab;
using namespace partstab::testing;

namespace {

class Tally {
public:
    void expect(bool ok, const std::string &what)
    {
        if (!ok) {
            ++failures_;
            if (notes_.size() < 8)
                notes_.push_back(what);
        }
    }

    // A named group printed as its own sub-line.
    void group(const std::string &name, bool ok)
    {
        std::cout << "    " << (ok ? "ok  " : "FAIL") << "  " << name << '\n';
        expect(ok, name);
    }

    bool ok() const { return failures_ == 0; }
    long failures() const { return failures_; }
    const std::vector<std::string> &notes() const { return notes_; }

private:
    long failures_ = 0;
    std::vector<std::string> notes_;
};

LaurentSequence as_laurent(const ZSequence &seq)
{
    LaurentSequence out;
    out.order = seq.order;
    for (const auto &p : seq.polys)
        out.polys.emplace_back(p);
    return out;
}

LaurentSequence expand_any(const ProductSpec &spec, long order)
{
    return spec.laurent ? expand_laurent(spec, order) : as_laurent(expand_product(spec, order));
}

std::string at(long n, long k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

void oracle_equivalence(Tally &t)
{
    std::vector<ProductSpec> specs;
    for (const char *name : {"partitions", "subsums(2,2)", "subsums(3,2)", "crank", "dt", "plane_overpartitions"})
        specs.push_back(make_preset(name));
    Rng rng(1001);
    for (int r = 0; r < 10; ++r)
        specs.push_back(random_oracle_spec(rng));
    for (std::size_t s = 0; s < specs.size(); ++s) {
        auto seq = expand_any(specs[s], 25);
        auto oracle = enumerate_coefficients(specs[s], 25);
        bool ok = true;
        for (long n = 0; n <= 25; ++n)
            ok = ok && seq[n] == oracle[static_cast<std::size_t>(n)];
        t.group(specs[s].name + (s >= 6 ? " #" + std::to_string(s - 5) : ""), ok);
    }
}

void prefab_law(Tally &t)
{
    auto seq = expand_product(partitions_spec(), 100);
    for (long n = 0; n <= 100; ++n)
        for (long b = 0; b <= n / 2; ++b)
            t.expect(seq[n].coeff(n - b) == partition_count(b), at(n, b));
}

void upper_suite(Tally &t)
{
    Rng rng(3003);
    for (int r = 0; r < 20; ++r) {
        auto spec = random_upper_spec(rng);
        auto h = check_hypotheses(spec, TailKind::upper);
        t.expect(h.satisfied, "hypotheses of random spec " + std::to_string(r));
        if (!h.satisfied)
            continue;
        auto rep = verify_upper(expand_product(spec, 80), *h.m, limiting_sequence(spec, 80));
        t.group("spec " + std::to_string(r + 1) + " m=" + std::to_string(*h.m) +
                    " shift/limit/bound",
                rep.certified && rep.identity_holds && rep.limit_match == true && rep.bound_holds == true);
    }
}

void lower_suite(Tally &t)
{
    ProductSpec base;
    base.name = "1/(1-z^(j-1)q^(2j-1))";
    base.rules = {make_rule("1", "j-1", "2*j-1")};
    auto rep = verify_lower_shift(expand_product(base, 80), 1, 3);
    t.group("lower shift, m=3, " + base.name, rep.certified && rep.all_checks_hold());

    Rng rng(4004);
    for (int r = 0; r < 5; ++r) {
        auto spec = random_lower_spec(rng);
        auto h = check_hypotheses(spec, TailKind::lower);
        t.expect(h.satisfied, "hypotheses of random lower spec " + std::to_string(r));
        if (!h.satisfied)
            continue;
        auto rr = verify_lower_shift(expand_product(spec, 80), *h.shift, *h.m);
        t.group("lower shift, random spec " + std::to_string(r + 1) + " m=" + std::to_string(*h.m),
                rr.certified && rr.all_checks_hold());
    }

    ProductSpec periodic;
    periodic.name = "prod_{j>=2} 1/(1-zq^j)";
    periodic.rules = {make_rule("1", "1", "j")};
    periodic.rules[0].j_min = 2;
    auto seq = expand_product(periodic, 80);
    auto pr = verify_periodic_shift(seq);
    t.group("period-two shift, " + periodic.name, pr.certified && pr.all_checks_hold());
    bool degrees = true;
    for (long n = 2; n <= 80; ++n)
        degrees = degrees && seq[n].degree() == n / 2;
    t.group("deg F_n = floor(n/2), 2 <= n <= 80", degrees);
}

void subsum_suite(Tally &t)
{
    std::map<std::string, bool> by_check;
    std::vector<std::string> order;
    for (long m = 2; m <= 5; ++m)
        for (long b = 1; b < m; ++b) {
            auto rep = verify_single_family_props(m, b, 60);
            for (const auto &c : rep.checks) {
                if (!by_check.count(c.name)) {
                    by_check[c.name] = true;
                    order.push_back(c.name);
                }
                if (!c.holds) {
                    by_check[c.name] = false;
                    std::cout << "          " << c.name << " fails for m=" << m << " b=" << b;
                    if (!rep.witnesses.empty())
                        std::cout << " (first witness n=" << rep.witnesses.front().n
                                  << " k=" << rep.witnesses.front().k << ": " << rep.witnesses.front().lhs.get_str()
                                  << " vs " << rep.witnesses.front().rhs.get_str() << ")";
                    std::cout << '\n';
                }
            }
        }
    for (const auto &name : order)
        t.group("single family, m <= 5, 1 <= b < m, n <= 60: " + name, by_check[name]);

    t.group("G_{2,2} convolution, n <= 60", verify_g22_convolution(60).all_checks_hold());

    for (auto [m, i] : std::vector<std::pair<long, long>>{{4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3}}) {
        auto rep = verify_subsum_shift(m, i, 60);
        t.group("subsum shift (m,i)=(" + std::to_string(m) + "," + std::to_string(i) + "), n <= 60",
                rep.certified && rep.all_checks_hold());
    }

    bool forms = true;
    for (long m = 1; m <= 5; ++m)
        for (long i = 1; i <= m; ++i)
            forms = forms && expand_product(subsum_spec(m, i, SubsumForm::csw), 30).polys ==
                                 expand_product(subsum_spec(m, i, SubsumForm::rewritten), 30).polys;
    t.group("both product forms agree, m <= 5, n <= 30", forms);
}

void laurent_suite(Tally &t)
{
    auto m = expand_crank(60);
    bool sym = true, at_one = true, tail = true;
    for (long n = 0; n <= 60; ++n) {
        sym = sym && m[n].is_symmetric();
        at_one = at_one && m[n].evaluate_at_one() == partition_count(n);
        for (long k = 0; k <= n / 2; ++k)
            tail = tail && m[n].coeff(n - k) == partition_count(k, PartitionConstraint::no_ones());
    }
    t.group("crank symmetry, n <= 60", sym);
    t.group("M_n(1) = p(n), n <= 60", at_one);
    t.group("crank tail = partitions without 1s, n <= 60", tail);
    t.group("crank two-sided stabilization, n <= 60", verify_two_sided(m).all_checks_hold());
    t.group("DT two-sided stabilization, n <= 25", verify_two_sided(expand_laurent(dt_spec(), 25)).all_checks_hold());

    Rng rng(6006);
    auto a = expand_product(partitions_spec(), 40);
    ZSequence a30 = a;
    a30.order = 30;
    a30.polys.resize(31);
    bool freezing = true;
    for (int trial = 0; trial < 20; ++trial) {
        ZSequence b;
        b.order = 30;
        for (long l = 0; l <= 30; ++l) {
            std::vector<integer> c(static_cast<std::size_t>(pick(rng, 0, l)) + 1);
            for (auto &v : c)
                v = pick(rng, -9, 9);
            b.polys.emplace_back(c);
        }
        freezing = freezing && verify_top_shift(convolve_mirrored(a30, b), 2).identity_holds;
    }
    t.group("mirrored convolution keeps the tail shift, random B, n <= 30", freezing);

    bool conv = true;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<integer> q(41);
        for (auto &c : q)
            c = pick(rng, -50, 50);
        conv = conv && verify_top_shift(as_laurent(convolve_with_series(a, q)), 2).identity_holds;
    }
    t.group("series convolution keeps the tail shift, random Q, n <= 40", conv);
}

void overpartition_suite(Tally &t)
{
    auto seq = expand_product(plane_overpartition_spec(), 45);
    bool oracle = true;
    for (long n = 0; n <= 6; ++n)
        oracle = oracle && enumerate_plane_overpartitions(n) == seq[n];
    t.group("enumeration = expansion, n <= 6", oracle);
    t.group("stabilization for k >= ceil(2n/3), n <= 45", verify_pop_stabilization(seq).all_checks_hold());

    long cells = 0;
    bool grid = true;
    for (long n = 0; n < 45; ++n)
        for (long k = (2 * n + 2) / 3; k <= n + 1; ++k, ++cells)
            grid = grid && seq[n].coeff(k) == seq[n + 1].coeff(k + 1);
    t.group("ppbar_k(n) = ppbar_(k+1)(n+1) on all " + std::to_string(cells) + " stable cells", grid);
}

void bench_demo(Tally &t)
{
    const char *argv[] = {"partstab", "bench", "--preset", "partitions", "--n", "100000", "--ell", "50"};
    std::ostringstream out, err;
    int code = run_cli(8, argv, out, err);
    t.expect(code == exit_ok, "bench exit code " + std::to_string(code) + ": " + err.str());
    if (code != exit_ok)
        return;
    auto j = json::parse(out.str());
    std::string expected = partition_count(50).get_str();
    double fast = j["fast_seconds"], full = j["full_seconds"], speedup = j["speedup"];
    std::cout << "    fast_tail(100000, 50) = " << j["fast_value"].get<std::string>() << " in " << fast
              << " s; full expansion to n = " << j["check_n"] << " took " << full << " s; speedup " << speedup
              << "x\n";
    t.group("value equals p(50) = " + expected, j["fast_value"] == expected);
    t.group("agrees with the full expansion at n = 2000", j["agree"] == true && j["full_value"] == expected);
    t.group("fast path <= 0.1 s", fast <= 0.1);
    t.group("at least 100x faster", speedup >= 100);
}

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<void(Tally &)> body;
};

} // namespace

int main()
{
    std::vector<Criterion> all = {
        {1, "oracle equivalence, n <= 25", 60, oracle_equivalence},
        {2, "partitions tail law, n <= 100", 5, prefab_law},
        {3, "upper-tail suite, 20 random specs, n <= 80", 120, upper_suite},
        {4, "lower-tail and period-two suite, n <= 80", 60, lower_suite},
        {5, "subsum suite", 120, subsum_suite},
        {6, "Laurent suite", 120, laurent_suite},
        {7, "plane overpartition suite", 120, overpartition_suite},
        {8, "fast tail benchmark", 60, bench_demo},
    };
    int failed = 0;
    for (const auto &c : all) {
        Tally t;
        auto t0 = std::chrono::steady_clock::now();
        std::cout << "criterion " << c.id << ": " << c.name << '\n';
        try {
            c.body(t);
        } catch (const std::exception &e) {
            t.expect(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = s <= c.limit_s;
        bool pass = t.ok() && in_time;
        failed += !pass;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f", s);
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << secs << " s, limit "
                  << c.limit_s << " s";
        if (!in_time)
            std::cout << ", over time";
        if (!t.ok())
            std::cout << ", " << t.failures() << " failure(s)";
        std::cout << ")\n";
        for (const auto &n : t.notes())
            std::cout << "    - " << n << '\n';
        std::cout.flush();
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criterion/criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
