#include "ss/bench.hpp"

#include <future>
#include <sstream>

namespace ss {

Nat random_prime_bits(std::size_t bits, Rng& rng, bool constructible_supersingular) {
    if (bits < 3) throw precondition_error("random_prime_bits: need at least 3 bits");
    while (true) {
        Nat cand = rng.odd_bits(bits);
        Nat p = is_prime(cand) ? cand : next_prime(cand);
        if (bit_length(p) != bits || p <= 3) continue;
        if (constructible_supersingular && p % 12 == 1) continue;
        return p;
    }
}

namespace {

struct RunStats {
    std::uint64_t ops = 0;
    std::uint64_t ns = 0;
};

RunStats run_method(const Curve& E, Method m, Rng rng, const BenchConfig& cfg,
                    const std::optional<HighOrderParams>& hop) {
    Verdict v;
    switch (m) {
        case Method::Oracle: v = oracle_brute_force(E).verdict; break;
        case Method::NaiveCoeff: v = naive_coeff_test(E); break;
        case Method::MonteCarlo: v = monte_carlo_test(E, cfg.mc_iters, rng); break;
        case Method::SzPit: v = sz_pit_test(E, rng); break;
        case Method::SchoofLike: v = schoof_like_test(E); break;
        case Method::HighOrder: v = high_order_test(E, hop, rng); break;
        case Method::IsoGr: v = isogr_baseline_test(E); break;
    }
    return RunStats{v.field_op_count, v.wall_time_ns};
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
    std::vector<BenchRecord> records;
    for (std::size_t bits : cfg.bit_sizes) {
        Rng size_rng = Rng(cfg.seed).split("bench").split(bits);
        Nat p = random_prime_bits(bits, size_rng, true);
        auto F = FqField::make(p);

        std::optional<HighOrderParams> hop;
        if (cfg.epsilon || cfg.poonen_c) hop = select_r(p, cfg.epsilon, cfg.poonen_c);

        for (const std::string& cls : cfg.classes) {
            // Deterministic per-seed curve sets with verified labels.
            std::vector<Curve> curves;
            Rng gen_rng = size_rng.split(cls);
            for (std::uint64_t i = 0; curves.size() < cfg.curves_per_class; ++i) {
                Rng r = gen_rng.split(i);
                if (cls == "supersingular") {
                    curves.push_back(gen_supersingular(F.get(), r));
                } else {
                    Curve E = gen_ordinary(F.get(), r);
                    Rng check = r.split("label-check");
                    if (sz_pit_test(E, check).result != Outcome::Ordinary) continue;
                    curves.push_back(std::move(E));
                }
            }

            for (Method m : cfg.methods) {
                std::vector<RunStats> stats(curves.size());
                Rng method_rng = gen_rng.split(method_name(m));
                if (cfg.serial) {
                    for (std::size_t i = 0; i < curves.size(); ++i)
                        stats[i] = run_method(curves[i], m, method_rng.split(i), cfg, hop);
                } else {
                    // One thread per curve: the op counter is thread-local,
                    // so parallel timing does not skew the tallies.
                    std::vector<std::future<RunStats>> futs;
                    futs.reserve(curves.size());
                    for (std::size_t i = 0; i < curves.size(); ++i) {
                        futs.push_back(std::async(std::launch::async, run_method,
                                                  std::cref(curves[i]), m, method_rng.split(i),
                                                  std::cref(cfg), std::cref(hop)));
                    }
                    for (std::size_t i = 0; i < curves.size(); ++i) stats[i] = futs[i].get();
                }
                double total_ns = 0;
                unsigned long long total_ops = 0;
                for (const RunStats& s : stats) {
                    total_ns += static_cast<double>(s.ns);
                    total_ops += s.ops;
                }
                BenchRecord rec;
                rec.p_bits = bits;
                rec.curve_class = cls;
                rec.method = m;
                rec.n_curves = curves.size();
                rec.mean_time_s = cfg.with_time ? total_ns / 1e9 / curves.size() : 0.0;
                rec.mean_field_ops = total_ops / curves.size();
                rec.seed = cfg.seed;
                records.push_back(std::move(rec));
            }
        }
    }
    return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << "p_bits,class,method,n_curves,mean_time_s,mean_field_ops,seed\n";
    for (const BenchRecord& r : records) {
        os << r.p_bits << ',' << r.curve_class << ',' << method_name(r.method) << ','
           << r.n_curves << ',';
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.9f", r.mean_time_s);
        os << buf << ',' << r.mean_field_ops << ',' << r.seed << '\n';
    }
    return os.str();
}

std::vector<BenchRecord> parse_bench_csv(const std::string& csv) {
    std::vector<BenchRecord> out;
    std::istringstream is(csv);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream ls(line);
        std::string field;
        BenchRecord r;
        std::getline(ls, field, ',');
        r.p_bits = std::stoul(field);
        std::getline(ls, r.curve_class, ',');
        std::getline(ls, field, ',');
        auto m = method_from_name(field);
        if (!m) throw parse_error("bench csv: unknown method " + field);
        r.method = *m;
        std::getline(ls, field, ',');
        r.n_curves = std::stoull(field);
        std::getline(ls, field, ',');
        r.mean_time_s = std::stod(field);
        std::getline(ls, field, ',');
        r.mean_field_ops = std::stoull(field);
        std::getline(ls, field, ',');
        r.seed = std::stoull(field);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace ss
