#include "partstab/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "partstab/laurent.hpp"
#include "partstab/overpartitions.hpp"
#include "partstab/presets.hpp"
#include "partstab/report.hpp"
#include "partstab/subsums.hpp"

namespace partstab {

namespace {

struct Outcome {
    std::string artifact;
    int status = exit_ok;
};

class Runner {
public:
    Runner(const RunConfig &config, std::ostream &err) : cfg_(config), err_(err) {}

    Outcome run()
    {
        if (cfg_.order < 0)
            throw spec_error("--order must be nonnegative");
        if (cfg_.format != "json" && cfg_.format != "csv")
            throw spec_error("--format must be json or csv");
        const std::string &c = cfg_.command;
        if (c == "expand")
            return expand();
        if (c == "verify")
            return verify();
        if (c == "limit")
            return limit();
        if (c == "table")
            return table();
        if (c == "fast-tail")
            return fast_tail();
        if (c == "bench")
            return bench();
        throw spec_error("unknown command '" + c + "'");
    }

private:
    ProductSpec spec() const
    {
        if (cfg_.preset.has_value() == cfg_.spec_path.has_value())
            throw spec_error("give exactly one of --preset and --spec");
        if (cfg_.preset)
            return make_preset(*cfg_.preset, {cfg_.m, cfg_.i});
        std::ifstream in(*cfg_.spec_path);
        if (!in)
            throw spec_error("cannot read spec file '" + *cfg_.spec_path + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception &e) {
            throw spec_error("spec file '" + *cfg_.spec_path + "': " + e.what());
        }
        return spec_from_json(j);
    }

    void note(const std::string &msg) const
    {
        if (cfg_.verbosity > 0)
            err_ << msg << '\n';
    }

    static std::string dump(const json &j) { return j.dump(2) + "\n"; }

    Outcome expand()
    {
        ProductSpec s = spec();
        std::ostringstream csv;
        csv << "n,zexp,value\n";
        json out;
        out["spec"] = spec_to_json(s);
        int status = exit_ok;
        auto emit_csv = [&](long n, const LaurentPolynomial &poly) {
            for (long k = poly.min_exp(); k <= poly.max_exp(); ++k)
                if (poly.coeff(k) != 0)
                    csv << n << ',' << k << ',' << poly.coeff(k).get_str() << '\n';
        };
        LaurentSequence as_laurent;
        if (s.laurent) {
            as_laurent = expand_laurent(s, cfg_.order);
            out["sequence"] = to_json(as_laurent);
            for (long n = 0; n <= cfg_.order; ++n)
                emit_csv(n, as_laurent[n]);
        } else {
            ZSequence seq = expand_product(s, cfg_.order);
            out["sequence"] = to_json(seq);
            for (long n = 0; n <= cfg_.order; ++n)
                emit_csv(n, LaurentPolynomial(seq[n]));
            as_laurent.order = seq.order;
            for (const auto &p : seq.polys)
                as_laurent.polys.emplace_back(p);
        }
        if (cfg_.check) {
            long upto = std::min(cfg_.order, 25L);
            auto oracle = enumerate_coefficients(s, upto);
            json mismatches = json::array();
            for (long n = 0; n <= upto; ++n) {
                if (oracle[static_cast<std::size_t>(n)] != as_laurent[n]) {
                    mismatches.push_back(n);
                    err_ << "expansion and enumeration disagree at n = " << n << '\n';
                }
            }
            out["check"] = {{"checked_up_to", upto}, {"mismatches", mismatches}};
            if (!mismatches.empty())
                status = exit_mismatch;
        }
        return {cfg_.format == "csv" ? csv.str() : dump(out), status};
    }

    Outcome limit()
    {
        ProductSpec s = spec();
        if (cfg_.kmax < 0)
            throw spec_error("--kmax must be nonnegative");
        PowerSeries lim = limiting_sequence(s, cfg_.kmax);
        if (cfg_.format == "csv") {
            std::ostringstream csv;
            csv << "l,value\n";
            for (long l = 0; l <= lim.order; ++l)
                csv << l << ',' << lim.coeff(l).get_str() << '\n';
            return {csv.str()};
        }
        return {dump({{"name", s.name}, {"limit", to_json(lim)}})};
    }

    Outcome table()
    {
        if (cfg_.family != "subsums")
            throw spec_error("unknown table family '" + cfg_.family + "'");
        if (!cfg_.m || !cfg_.i)
            throw spec_error("table --family subsums needs --m and --i");
        LambdaTable t;
        try {
            t = lambda_table(*cfg_.m, *cfg_.i, cfg_.order);
        } catch (const spec_error &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw spec_error(e.what());
        }
        if (cfg_.format == "json") {
            json rows = json::array();
            for (std::size_t n = 0; n < t.rows.size(); ++n)
                rows.push_back(coefficients_json(static_cast<long>(n), t.rows[n]));
            return {dump({{"m", t.m}, {"i", t.i}, {"order", t.order}, {"rows", rows}})};
        }
        return {lambda_csv(t)};
    }

    HypothesisCheck require_upper(const ProductSpec &s, Outcome &fail) const
    {
        auto h = check_hypotheses(s, TailKind::upper);
        if (!h.satisfied) {
            err_ << "upper-tail hypotheses fail for '" << s.name << "'\n";
            fail = {dump({{"hypotheses", to_json(h)}}), exit_hypothesis};
        }
        return h;
    }

    Outcome fast_tail()
    {
        ProductSpec s = spec();
        Outcome fail;
        auto h = require_upper(s, fail);
        if (!h.satisfied)
            return fail;
        return {fast_tail_coefficient(s, cfg_.n, cfg_.ell).get_str() + "\n"};
    }

    Outcome bench()
    {
        using clock = std::chrono::steady_clock;
        ProductSpec s = spec();
        Outcome fail;
        auto h = require_upper(s, fail);
        if (!h.satisfied)
            return fail;
        fast_tail_coefficient(s, cfg_.n, cfg_.ell); // warmup
        auto t0 = clock::now();
        integer fast = fast_tail_coefficient(s, cfg_.n, cfg_.ell);
        double fast_s = std::chrono::duration<double>(clock::now() - t0).count();

        long check_n = std::min(cfg_.n, cfg_.check_n);
        if (cfg_.ell > check_n / *h.m)
            throw spec_error("--ell is outside the stable range at the check size n = " + std::to_string(check_n));
        note("expanding in full to n = " + std::to_string(check_n));
        auto t1 = clock::now();
        ZSequence seq = expand_product(s, check_n);
        integer full = seq[check_n].coeff(check_n - cfg_.ell);
        double full_s = std::chrono::duration<double>(clock::now() - t1).count();

        bool agree = fast == full;
        if (!agree)
            err_ << "fast tail " << fast.get_str() << " disagrees with full expansion " << full.get_str() << '\n';
        json out;
        out["name"] = s.name;
        out["n"] = cfg_.n;
        out["ell"] = cfg_.ell;
        out["fast_value"] = fast.get_str();
        out["fast_seconds"] = fast_s;
        out["check_n"] = check_n;
        out["full_value"] = full.get_str();
        out["full_seconds"] = full_s;
        out["agree"] = agree;
        out["speedup"] = fast_s > 0 ? full_s / fast_s : 0.0;
        return {dump(out), agree ? exit_ok : exit_mismatch};
    }

    Outcome verify()
    {
        const std::string &t = cfg_.theorem;
        StabilizationReport rep;
        std::optional<HypothesisCheck> hyp;
        bool hypotheses_hold = true;
        if (t == "upper" || t == "lower" || t == "periodic") {
            ProductSpec s = spec();
            TailKind kind = t == "upper" ? TailKind::upper : t == "lower" ? TailKind::lower : TailKind::periodic;
            hyp = check_hypotheses(s, kind);
            hypotheses_hold = hyp->satisfied;
            long order = std::max(cfg_.order, 2L);
            ZSequence seq = expand_product(s, order);
            if (kind == TailKind::upper) {
                std::optional<PowerSeries> lim;
                try {
                    lim = limiting_sequence(s, order);
                } catch (const spec_error &e) {
                    note(std::string("no limiting sequence: ") + e.what());
                }
                rep = verify_upper(seq, cfg_.m.value_or(hyp->m.value_or(2)), lim);
            } else if (kind == TailKind::lower) {
                rep = verify_lower_shift(seq, hyp->shift.value_or(1), cfg_.m.value_or(hyp->m.value_or(1)));
            } else {
                rep = verify_periodic_shift(seq);
            }
        } else if (t == "laurent") {
            ProductSpec s = spec();
            hyp = check_two_sided_shape(s, cfg_.order);
            hypotheses_hold = hyp->satisfied;
            rep = verify_two_sided(expand_laurent(s, std::max(cfg_.order, 1L)));
        } else if (t == "subsum-shift") {
            auto [m, i] = subsum_params();
            rep = verify_subsum_shift(m, i, cfg_.order);
            hypotheses_hold = rep.certified;
        } else if (t == "g22") {
            rep = verify_g22_convolution(cfg_.order);
        } else if (t == "single-family") {
            if (!cfg_.m || !cfg_.b)
                throw spec_error("verify --theorem single-family needs --m and --b");
            if (*cfg_.m < 2 || *cfg_.b < 1 || *cfg_.b >= *cfg_.m)
                throw spec_error("verify --theorem single-family needs m >= 2 and 1 <= b < m");
            rep = verify_single_family_props(*cfg_.m, *cfg_.b, cfg_.order);
        } else if (t == "pop") {
            rep = verify_pop_stabilization(std::max(cfg_.order, 2L));
        } else {
            throw spec_error("unknown theorem '" + t + "'");
        }

        json out = to_json(rep);
        if (hyp)
            out["hypotheses"] = to_json(*hyp);
        int status = exit_ok;
        if (!hypotheses_hold) {
            err_ << "hypotheses do not hold; report is empirical only\n";
            status = exit_hypothesis;
        } else if (rep.certified && !rep.all_checks_hold()) {
            err_ << rep.violation_count << " violation(s) inside the certified range\n";
            status = exit_violation;
        }
        return {dump(out), status};
    }

    std::pair<long, long> subsum_params() const
    {
        PresetParams p{cfg_.m, cfg_.i};
        if (cfg_.preset && split_preset_name(*cfg_.preset, p) != "subsums")
            throw spec_error("subsum-shift applies to the subsums preset only");
        if (!p.m || !p.i)
            throw spec_error("verify --theorem subsum-shift needs --m and --i");
        if (*p.m < 1 || *p.i < 1 || *p.i > *p.m)
            throw spec_error("subsums need 1 <= i <= m");
        return {*p.m, *p.i};
    }

    const RunConfig &cfg_;
    std::ostream &err_;
};

} // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    Outcome result;
    try {
        result = Runner(config, err).run();
    } catch (const stability_range_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const spec_error &e) {
        err << "invalid spec: " << e.what() << '\n';
        return exit_invalid;
    } catch (const json::exception &e) {
        err << "invalid spec: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    if (config.output) {
        std::ofstream file(*config.output);
        if (!file) {
            err << "cannot write '" << *config.output << "'\n";
            return exit_invalid;
        }
        file << result.artifact;
    } else {
        out << result.artifact;
    }
    return result.status;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Exact expansion and tail-stabilization checks for bivariate product generating functions",
                 "partstab"};
    app.require_subcommand(1);

    auto common = [&](CLI::App *sub, bool with_spec) {
        if (with_spec) {
            sub->add_option("--preset", cfg.preset, "named spec, e.g. partitions or subsums(3,2)");
            sub->add_option("--spec", cfg.spec_path, "JSON spec file");
        }
        sub->add_option("--m", cfg.m, "modulus parameter");
        sub->add_option("--i", cfg.i, "residue parameter of the subsums family");
        sub->add_option("--order", cfg.order, "largest n (default 20)");
        sub->add_option("-o,--output", cfg.output, "write the artifact here instead of stdout");
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("-v,--verbose", cfg.verbosity, "progress on stderr");
    };

    auto *expand = app.add_subcommand("expand", "emit F_0 .. F_N");
    common(expand, true);
    expand->add_flag("--check", cfg.check, "compare with direct enumeration (n <= 25)");

    auto *verify = app.add_subcommand("verify", "check a stabilization identity");
    common(verify, true);
    verify->add_option("--theorem", cfg.theorem, "upper, lower, periodic, laurent, subsum-shift, g22, single-family or pop")
        ->required();
    verify->add_option("--b", cfg.b, "offset b of the single family");

    auto *limit = app.add_subcommand("limit", "emit the limiting sequence");
    common(limit, true);
    limit->add_option("--kmax", cfg.kmax, "number of terms");

    auto *table = app.add_subcommand("table", "tabulate a family");
    common(table, false);
    table->add_option("--family", cfg.family, "family name (subsums)");
    cfg.format = "json";

    auto *fast = app.add_subcommand("fast-tail", "[z^(n-ell)]F_n from the limiting sequence");
    common(fast, true);
    fast->add_option("--n", cfg.n)->required();
    fast->add_option("--ell", cfg.ell)->required();

    auto *bench = app.add_subcommand("bench", "time fast-tail against full expansion");
    common(bench, true);
    bench->add_option("--n", cfg.n)->required();
    bench->add_option("--ell", cfg.ell)->required();
    bench->add_option("--check-n", cfg.check_n, "largest n expanded in full (default 2000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "table" && table->count("--format") == 0)
        cfg.format = "csv";
    return run(cfg, out, err);
}

} // namespace partstab
