#include <CLI11.hpp>

#include <iostream>

#include "ss/bench.hpp"
#include "ss/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitPrecondition = 3;

std::vector<ss::Method> parse_methods(const std::vector<std::string>& names) {
    std::vector<ss::Method> out;
    for (const std::string& n : names) {
        auto m = ss::method_from_name(n);
        if (!m) throw ss::parse_error("unknown method '" + n + "'");
        out.push_back(*m);
    }
    return out;
}

void print_verdicts(const ss::CrossCheckReport& report, const std::string& format,
                    bool with_time) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const ss::Verdict& v : report.verdicts) arr.push_back(v.to_json(with_time));
        nlohmann::json out;
        out["verdicts"] = arr;
        out["agreement"] = report.agreement();
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "method,result,error_bound,field_op_count,wall_time_ns\n";
        for (const ss::Verdict& v : report.verdicts)
            std::cout << ss::method_name(v.method) << ',' << ss::outcome_name(v.result) << ','
                      << v.error_bound.str() << ',' << v.field_op_count << ','
                      << (with_time ? v.wall_time_ns : 0) << "\n";
    } else {
        for (const ss::Verdict& v : report.verdicts) {
            std::cout << ss::method_name(v.method) << ": " << ss::outcome_name(v.result)
                      << " (error_bound " << v.error_bound.str() << ", field_ops "
                      << v.field_op_count;
            if (with_time) std::cout << ", " << v.wall_time_ns << " ns";
            std::cout << ")\n";
        }
        if (!report.agreement()) std::cout << "DISAGREEMENT among methods\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Supersingularity testing via division-polynomial identities"};
    app.require_subcommand(1);

    std::string curve_text, klass = "ordinary", format, mod_text;
    std::vector<std::string> method_names;
    std::vector<std::size_t> bit_sizes;
    std::uint64_t seed = 1, iters = 2, curves = 10, m_index = 1;
    std::uint64_t p_value = 0;
    std::size_t p_bits = 0;
    std::uint64_t walk_steps = 0;
    bool serial = false, no_time = false, twist = false;
    double epsilon = 0.0, poonen_c = 0.0;

    auto* t = app.add_subcommand("test", "run supersingularity testers on a curve");
    t->add_option("--curve", curve_text, "curve as \"p; a; b\"")->required();
    t->add_option("--method", method_names, "tester name (repeatable)");
    t->add_option("--seed", seed, "rng seed");
    t->add_option("--iters", iters, "Monte Carlo iterations");
    t->add_option("--epsilon", epsilon, "epsilon for the order bound");
    t->add_option("--poonen-c", poonen_c, "enable the heuristic small-r mode with this constant");
    t->add_option("--format", format, "json|csv|text");
    t->add_flag("--serial", serial, "run methods serially (default)");
    t->add_flag("--no-time", no_time, "zero wall-time fields for byte-stable output");

    auto* g = app.add_subcommand("gen", "generate a curve");
    auto* gp = g->add_option("--p", p_value, "prime modulus");
    auto* gb = g->add_option("--p-bits", p_bits, "random prime of this bit length");
    g->add_option("--class", klass, "ordinary|supersingular")->required();
    g->add_option("--seed", seed, "rng seed");
    g->add_option("--walk-steps", walk_steps, "2-isogeny walk length (supersingular)");
    gp->excludes(gb);

    auto* b = app.add_subcommand("bench", "benchmark testers over random curves");
    b->add_option("--p-bits", bit_sizes, "bit sizes (repeatable)");
    b->add_option("--method", method_names, "tester name (repeatable)");
    b->add_option("--curves", curves, "curves per class per size");
    b->add_option("--seed", seed, "rng seed");
    b->add_option("--iters", iters, "Monte Carlo iterations");
    b->add_option("--epsilon", epsilon, "epsilon for the order bound");
    b->add_option("--poonen-c", poonen_c, "heuristic small-r mode constant");
    b->add_option("--format", format, "json|csv|text");
    b->add_flag("--serial", serial, "time curves one at a time");
    b->add_flag("--no-time", no_time, "zero timing fields for byte-stable output");

    auto* d = app.add_subcommand("divpoly", "print a reduced division polynomial");
    d->add_option("--curve", curve_text, "curve as \"p; a; b\"")->required();
    d->add_option("--m", m_index, "index of f_m")->required();
    d->add_option("--mod", mod_text, "optional modulus polynomial");

    auto* o = app.add_subcommand("oracle", "exhaustive point count (p <= 200)");
    o->add_option("--curve", curve_text, "curve as \"p; a; b\"")->required();
    o->add_option("--format", format, "json|text");
    o->add_flag("--no-time", no_time, "zero wall-time fields");

    try {
        app.parse(argc, argv);

        std::optional<double> eps_opt, poonen_opt;
        if (epsilon != 0.0) eps_opt = epsilon;
        if (poonen_c != 0.0) poonen_opt = poonen_c;

        if (t->parsed()) {
            if (format.empty()) format = "json";
            auto parsed = ss::parse_curve(curve_text);
            if (method_names.empty()) method_names = {"high_order"};
            ss::Rng rng(seed);
            ss::CrossCheckOptions opts;
            opts.mc_iters = iters;
            if (eps_opt || poonen_opt)
                opts.high_order_params =
                    ss::select_r(parsed.field->p(), eps_opt, poonen_opt);
            auto report = ss::cross_check(parsed.curve, parse_methods(method_names), rng, opts);
            print_verdicts(report, format, !no_time);
        } else if (g->parsed()) {
            if (klass != "ordinary" && klass != "supersingular")
                throw ss::parse_error("--class must be ordinary or supersingular");
            ss::Rng rng(seed);
            ss::Nat p;
            if (*gp) {
                p = ss::Nat(static_cast<unsigned long>(p_value));
            } else if (*gb) {
                p = ss::random_prime_bits(p_bits, rng, klass == "supersingular");
            } else {
                throw ss::parse_error("gen: exactly one of --p / --p-bits is required");
            }
            auto F = ss::FqField::make(p);
            ss::Curve E = klass == "supersingular"
                              ? ss::gen_supersingular(
                                    F.get(), rng,
                                    walk_steps ? std::optional<ss::Nat>(ss::Nat(walk_steps))
                                               : std::nullopt)
                              : ss::gen_ordinary(F.get(), rng);
            std::cout << ss::to_text(E) << "\n";
        } else if (b->parsed()) {
            if (format.empty()) format = "csv";
            ss::BenchConfig cfg;
            if (!bit_sizes.empty()) cfg.bit_sizes = bit_sizes;
            else cfg.bit_sizes = {17, 33, 65};
            if (!method_names.empty()) cfg.methods = parse_methods(method_names);
            cfg.curves_per_class = curves;
            cfg.seed = seed;
            cfg.mc_iters = ss::Nat(iters);
            cfg.serial = serial;
            cfg.with_time = !no_time;
            cfg.epsilon = eps_opt;
            cfg.poonen_c = poonen_opt;
            auto records = ss::run_bench(cfg);
            if (format == "csv") {
                std::cout << ss::bench_csv(records);
            } else if (format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : records)
                    arr.push_back({{"p_bits", r.p_bits},
                                   {"class", r.curve_class},
                                   {"method", ss::method_name(r.method)},
                                   {"n_curves", r.n_curves},
                                   {"mean_time_s", r.mean_time_s},
                                   {"mean_field_ops", r.mean_field_ops},
                                   {"seed", r.seed}});
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& r : records)
                    std::cout << r.p_bits << " bits, " << r.curve_class << ", "
                              << ss::method_name(r.method) << ": mean " << r.mean_time_s
                              << " s, " << r.mean_field_ops << " field ops over " << r.n_curves
                              << " curves\n";
            }
        } else if (d->parsed()) {
            auto parsed = ss::parse_curve(curve_text);
            ss::CurveContext ctx(parsed.curve);
            ss::Poly fm = mod_text.empty()
                              ? ss::expand_fn(ctx, ss::Nat(m_index))
                              : ss::window_at(ctx, ss::Nat(m_index),
                                              ss::parse_poly(parsed.field.get(), mod_text))
                                    .center();
            std::cout << ss::to_text(fm) << "\n";
        } else if (o->parsed()) {
            if (format.empty()) format = "json";
            auto parsed = ss::parse_curve(curve_text);
            auto res = ss::oracle_brute_force(parsed.curve);
            if (format == "json") {
                nlohmann::json out;
                out["count"] = res.count.get_str();
                out["trace"] = res.trace.get_str();
                out["verdict"] = res.verdict.to_json(!no_time);
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "count " << res.count.get_str() << ", trace " << res.trace.get_str()
                          << ", " << ss::outcome_name(res.verdict.result) << "\n";
            }
        }
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    } catch (const ss::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ss::precondition_error& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
