// cyclab: command-line entry point for the cycle-factor / renewal laboratory.
// Exit codes: 0 success, 1 computational failure (e.g. embed or rejection
// guard exhausted), 2 usage error.

#include "cyclab/comb.hpp"
#include "cyclab/conditioning.hpp"
#include "cyclab/factors.hpp"
#include "cyclab/lengths.hpp"
#include "cyclab/parallel.hpp"
#include "cyclab/patterns.hpp"
#include "cyclab/pairing.hpp"
#include "cyclab/renewal.hpp"
#include "cyclab/rng.hpp"
#include "cyclab/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace cyclab;
using nlohmann::json;

constexpr const char* kVersion = "cyclab 0.1.0";

int g_threads = 0;

std::ostream& out_stream(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

void emit_json(json j, const std::string& path, bool with_seed = false, uint64_t seed = 0) {
    j["tool"] = kVersion;
    if (with_seed) j["seed"] = seed;
    std::ofstream file;
    out_stream(file, path) << j.dump(2) << "\n";
}

Multigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return Multigraph::from_edge_list(in);
}

// ---- renewal ---------------------------------------------------------

struct RenewalArgs {
    std::string lengths, variant = "without", out;
    long long k = 1;
    long long mc_trials = 0;
    uint64_t seed = 1;
};

int run_renewal(const RenewalArgs& a) {
    const LengthMultiset L = LengthMultiset::from_spec(a.lengths);
    const Variant variant = variant_from_name(a.variant);
    HitProbability hp;
    switch (variant) {
        case Variant::with_replacement: hp = hit_with_replacement(L, a.k); break;
        case Variant::without_replacement: hp = hit_without_replacement(L, a.k); break;
        case Variant::size_biased: hp = hit_size_biased(L, a.k); break;
    }
    const AsymptoticPrediction pred = asymptotic_prediction(L, a.k);
    json j;
    j["lengths"] = L.to_spec();
    j["m"] = L.m();
    j["n"] = L.n();
    j["k"] = a.k;
    j["variant"] = variant_name(variant);
    j["exact"] = format_rational(hp.value);
    j["float"] = to_double(hp.value);
    j["leading"] = format_rational(pred.leading);
    j["corrected"] = format_rational(variant == Variant::size_biased ? pred.leading : pred.corrected);
    j["leading_float"] = to_double(pred.leading);
    j["corrected_float"] =
        to_double(variant == Variant::size_biased ? pred.leading : pred.corrected);
    bool with_seed = false;
    if (a.mc_trials > 0) {
        const McEstimate mc = mc_hit(L, a.k, variant, a.mc_trials, a.seed, g_threads);
        j["mc_estimate"] = mc.estimate;
        j["mc_std_error"] = mc.std_error;
        j["mc_trials"] = mc.trials;
        with_seed = true;
    }
    emit_json(j, a.out, with_seed, a.seed);
    return 0;
}

// ---- series ----------------------------------------------------------

struct SeriesArgs {
    std::string op = "from-lengths", lengths, in, out;
    long long T = 40;
};

int run_series(const SeriesArgs& a) {
    ExactSeries f(0);
    if (a.op == "geometric") {
        f = geometric_series(a.T);
    } else if (!a.lengths.empty()) {
        f = series_from_lengths(LengthMultiset::from_spec(a.lengths), a.T);
    } else if (!a.in.empty()) {
        std::ifstream in(a.in);
        if (!in) throw std::runtime_error("cannot open series file: " + a.in);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        f = exact_series_from_json(text);
    } else {
        throw CLI::ValidationError("series", "need --lengths or --in (or --op geometric)");
    }
    ExactSeries result = f;
    if (a.op == "renewal") result = renewal_coefficients(f, a.T);
    else if (a.op == "correction") result = correction_coefficients(f, a.T);
    else if (a.op != "from-lengths" && a.op != "geometric")
        throw CLI::ValidationError("series", "unknown --op " + a.op);
    std::ofstream file;
    out_stream(file, a.out) << series_to_json(result) << "\n";
    return 0;
}

// ---- sample / census -------------------------------------------------

struct SampleArgs {
    std::string model = "pairing", out;
    long long n = 10, k = 0;
    int d = 3;
    double p = 0.5;
    uint64_t seed = 1;
};

Multigraph sample_by_model(const SampleArgs& a, uint64_t seed) {
    if (a.model == "pairing") return project(sample_pairing(a.n, a.d, seed));
    if (a.model == "simple") {
        auto g = sample_simple_regular(a.n, a.d, seed);
        if (!g) throw std::runtime_error("sample: rejection guard exhausted");
        return *g;
    }
    if (a.model == "superposition") {
        auto g = sample_superposition(a.n, a.k, seed);
        if (!g) throw std::runtime_error("sample: rejection guard exhausted");
        return *g;
    }
    if (a.model == "superposition-raw") return sample_superposition_raw(a.n, a.k, seed);
    if (a.model == "gnp") return sample_gnp(a.n, a.p, seed);
    throw CLI::ValidationError("sample", "unknown --model " + a.model);
}

int run_sample(const SampleArgs& a) {
    const Multigraph g = sample_by_model(a, a.seed);
    std::ofstream file;
    out_stream(file, a.out) << g.to_edge_list();
    return 0;
}

struct CensusArgs {
    SampleArgs sample;
    int L = 4;
    long long samples = 1;
};

int run_census(const CensusArgs& a) {
    std::ofstream file;
    std::ostream& os = out_stream(file, a.sample.out);
    os << "# " << kVersion << " census model=" << a.sample.model << " n=" << a.sample.n
       << " L=" << a.L << " samples=" << a.samples << " seed=" << a.sample.seed << "\n";
    if (a.samples == 1) {
        const CycleCensus c = cycle_census(sample_by_model(a.sample, a.sample.seed), a.L);
        os << "i,X_i\n";
        for (int i = 1; i <= a.L; ++i) os << i << "," << c.X(i) << "\n";
        return 0;
    }
    std::vector<long long> sums(a.L + 1, 0), sums_sq(a.L + 1, 0);
    struct Acc {
        std::vector<long long> s, s2;
        Acc() = default;
        Acc& operator+=(const Acc& o) {
            if (s.empty()) {
                s = o.s;
                s2 = o.s2;
                return *this;
            }
            for (size_t i = 0; i < o.s.size(); ++i) {
                s[i] += o.s[i];
                s2[i] += o.s2[i];
            }
            return *this;
        }
    };
    const Acc total = parallel_accumulate<Acc>(a.samples, g_threads, [&](long long t) {
        const CycleCensus c =
            cycle_census(sample_by_model(a.sample, rng::mix(a.sample.seed, t)), a.L);
        Acc acc;
        acc.s.assign(a.L + 1, 0);
        acc.s2.assign(a.L + 1, 0);
        for (int i = 1; i <= a.L; ++i) {
            acc.s[i] = c.X(i);
            acc.s2[i] = c.X(i) * c.X(i);
        }
        return acc;
    });
    os << "i,mean,std_error\n";
    for (int i = 1; i <= a.L; ++i) {
        const double mean = static_cast<double>(total.s[i]) / a.samples;
        const double msq = static_cast<double>(total.s2[i]) / a.samples;
        const double se = std::sqrt(std::max(0.0, msq - mean * mean) / a.samples);
        os << i << "," << mean << "," << se << "\n";
    }
    return 0;
}

// ---- factors ---------------------------------------------------------

int run_factors_count(const std::string& graph_path, long long k, const std::string& out) {
    const Multigraph g = load_graph(graph_path);
    const BigInt cf = count_cycle_factors(g, k);
    json j;
    j["n"] = g.n();
    j["k"] = k;
    j["cf"] = cf.str();
    j["rod"] = (cf * rod_rescale(g.n(), k)).str();
    j["has_factor"] = (cf > 0);
    emit_json(j, out);
    return 0;
}

int run_factors_moments(long long n, long long k, const std::string& out) {
    const MomentReport r = expected_moments(n, k);
    json j;
    j["n"] = n;
    j["k"] = k;
    j["exact_E_Y"] = format_rational(r.exact_E_Y);
    j["exact_E_Y_float"] = to_double(r.exact_E_Y);
    j["exact_E_cf"] = format_rational(r.exact_E_cf);
    j["exact_E_cf_float"] = to_double(r.exact_E_cf);
    j["asym_E_Y"] = r.asym_E_Y;
    j["asym_E_cf"] = r.asym_E_cf;
    j["log_asym_E_Y"] = r.log_asym_E_Y;
    j["log_asym_E_cf"] = r.log_asym_E_cf;
    j["K0"] = threshold_K0(static_cast<double>(n));
    j["kappa0"] = threshold_kappa0();
    emit_json(j, out);
    return 0;
}

struct ScanArgs {
    long long n = 24, samples = 100;
    uint64_t seed = 7;
    std::string out;
    std::vector<long long> ks;
    bool k_divisors = false;
};

int run_factors_scan(const ScanArgs& a) {
    std::vector<long long> ks = a.ks;
    if (a.k_divisors || ks.empty()) {
        for (long long k = 3; k <= a.n; ++k)
            if (a.n % k == 0) ks.push_back(k);
    }
    std::ofstream file;
    std::ostream& os = out_stream(file, a.out);
    os << "# " << kVersion << " scan n=" << a.n << " samples=" << a.samples
       << " seed=" << a.seed << "\n";
    os << "k,K0,empirical_freq,mean_cf,exact_E_cf\n";
    for (long long k : ks) {
        struct Acc {
            long long hits = 0;
            BigInt sum;
            Acc& operator+=(const Acc& o) {
                hits += o.hits;
                sum += o.sum;
                return *this;
            }
        };
        const Acc acc = parallel_accumulate<Acc>(a.samples, g_threads, [&](long long s) {
            const Pairing p = sample_pairing(a.n, 3, rng::mix(a.seed ^ (k * 0x9e37), s));
            const BigInt cf = count_cycle_factors(project(p), k);
            return Acc{cf > 0 ? 1LL : 0LL, cf};
        });
        const double freq = static_cast<double>(acc.hits) / static_cast<double>(a.samples);
        const double mean = to_double(Rational(acc.sum, a.samples));
        os << k << "," << threshold_K0(static_cast<double>(a.n)) << "," << freq << "," << mean
           << "," << to_double(expected_moments(a.n, k).exact_E_cf) << "\n";
    }
    return 0;
}

// ---- patterns --------------------------------------------------------

int run_patterns_count(long long n, long long m, long long h, long long k,
                       const std::string& out) {
    json j;
    j["n"] = n;
    j["m"] = m;
    j["h"] = h;
    if (h > 0) j["k"] = k;
    j["count"] = count_patterns(n, m, h, k).str();
    emit_json(j, out);
    return 0;
}

int run_patterns_count_n(const std::string& lengths, long long k, const std::string& out) {
    const LengthMultiset L = LengthMultiset::from_spec(lengths);
    json j;
    j["lengths"] = L.to_spec();
    j["k"] = k;
    j["N"] = count_n_rod_containing(L, k).str();
    emit_json(j, out);
    return 0;
}

int run_patterns_psi(long long n, long long k, bool log_space, const std::string& out) {
    std::ofstream file;
    std::ostream& os = out_stream(file, out);
    os << "# " << kVersion << " psi n=" << n << " k=" << k << "\n";
    if (log_space) {
        os << "h,m,log_psi,log_psi_hat\n";
        for (const auto& row : psi_ledger_log(n, k))
            os << row.h << "," << row.m << "," << row.log_psi << "," << row.log_psi_hat << "\n";
    } else {
        os << "h,m,psi,psi_hat\n";
        for (const auto& row : psi_ledger(n, k, /*force_exact=*/true).rows)
            os << row.h << "," << row.m << "," << format_rational(row.psi) << ","
               << format_rational(row.psi_hat) << "\n";
    }
    return 0;
}

int run_patterns_second_moment(long long n, long long k, bool verify_direct,
                               const std::string& out) {
    const SecondMomentReport r = second_moment_exact(n, k);
    json j;
    j["n"] = n;
    j["k"] = k;
    j["E_Y2"] = format_rational(r.E_Y2);
    j["E_Y"] = format_rational(r.E_Y);
    j["ratio"] = format_rational(r.ratio);
    j["ratio_float"] = to_double(r.ratio);
    if (verify_direct) {
        const PairingMomentSums direct = enumerate_pairing_moments(n, k);
        const BigInt scale = rod_rescale(n, k);
        const Rational direct_E_Y2 =
            Rational(direct.sum_cf_sq * scale * scale, direct.pairings);
        j["direct_E_Y2"] = format_rational(direct_E_Y2);
        j["direct_matches"] = (direct_E_Y2 == r.E_Y2);
        if (direct_E_Y2 != r.E_Y2) {
            emit_json(j, out);
            return 1;
        }
    }
    emit_json(j, out);
    return 0;
}

int run_patterns_sample(long long n, long long m, uint64_t seed, const std::string& out) {
    const IntersectionPattern s = sample_pattern(n, m, seed);
    json j;
    j["n"] = n;
    j["m"] = m;
    j["paths"] = s.paths;
    emit_json(j, out, true, seed);
    return 0;
}

struct PathStatsArgs {
    long long n = 3000, m = 1000, samples = 2000;
    uint64_t seed = 1;
    std::vector<long long> tail_t, tail_ell, freq_ells;
    double eps = 0.05;
    std::string out;
};

int run_patterns_path_stats(const PathStatsArgs& a) {
    std::vector<std::pair<long long, long long>> tails;
    if (a.tail_t.size() != a.tail_ell.size())
        throw CLI::ValidationError("path-stats", "--tail-t and --tail-ell must pair up");
    for (size_t i = 0; i < a.tail_t.size(); ++i) tails.push_back({a.tail_t[i], a.tail_ell[i]});
    const PathStatsReport r =
        path_stats_experiment(a.n, a.m, a.samples, a.seed, tails, a.freq_ells, a.eps);
    json j;
    j["n"] = a.n;
    j["m"] = a.m;
    j["samples"] = a.samples;
    json jt = json::array();
    for (const auto& t : r.tails)
        jt.push_back({{"t", t.t}, {"ell", t.ell}, {"empirical", t.empirical}, {"bound", t.bound}});
    j["tails"] = jt;
    json jf = json::array();
    for (const auto& f : r.freqs)
        jf.push_back({{"ell", f.ell},
                      {"mean_p", f.mean_p},
                      {"band_lo", f.band_lo},
                      {"band_hi", f.band_hi}});
    j["freqs"] = jf;
    emit_json(j, a.out, true, a.seed);
    return 0;
}

// ---- conditioning ----------------------------------------------------

int run_cond_sum_check(long long T, const std::string& out) {
    const Rational sum = conditioning_sum_check(T);
    json j;
    j["T"] = T;
    j["sum_exact"] = format_rational(sum);
    j["sum_float"] = to_double(sum);
    j["ln3"] = std::log(3.0);
    j["abs_err"] = std::fabs(to_double(sum) - std::log(3.0));
    emit_json(j, out);
    return 0;
}

int run_cond_constants(long long i, const std::string& out) {
    const ConditioningConstants c = conditioning_constants(i);
    json j;
    j["i"] = i;
    j["lambda"] = format_rational(c.lambda);
    j["delta"] = format_rational(c.delta);
    j["lambda_times_1_plus_delta"] = format_rational(c.lambda * (1 + c.delta));
    emit_json(j, out);
    return 0;
}

int run_cond_sample_w(long long J, long long batch, uint64_t seed, const std::string& out) {
    const std::vector<double> w = sample_W(J, seed, batch, g_threads);
    long double sum = 0, sum_sq = 0;
    for (double x : w) {
        sum += x;
        sum_sq += static_cast<long double>(x) * x;
    }
    const long double mean = sum / batch;
    const long double var =
        std::max<long double>(0.0L, (sum_sq / batch - mean * mean) * batch / (batch - 1.0L));
    json j;
    j["J"] = J;
    j["batch"] = batch;
    j["mean"] = static_cast<double>(mean);
    j["std_error"] = std::sqrt(static_cast<double>(var / batch));
    emit_json(j, out, true, seed);
    return 0;
}

int run_cond_planted(long long n, long long k, int i, long long trials, uint64_t seed,
                     const std::string& out) {
    const PlantedMomentResult r = planted_moment(n, k, i, trials, seed, g_threads);
    const ConditioningConstants c = conditioning_constants(i);
    json j;
    j["n"] = n;
    j["k"] = k;
    j["i"] = i;
    j["trials"] = trials;
    j["mean"] = r.mean;
    j["std_error"] = r.std_error;
    j["target"] = to_double(c.lambda * (1 + c.delta));
    emit_json(j, out, true, seed);
    return 0;
}

// ---- comb ------------------------------------------------------------

struct CombEmbedArgs {
    long long n = 2500, k = 50, seeds = 50, budget = 0;
    double p_mult = 6.0;
    uint64_t seed = 1;
    std::string out, dump_prefix;
};

int run_comb_embed(const CombEmbedArgs& a) {
    std::ofstream file;
    std::ostream& os = out_stream(file, a.out);
    os << "# " << kVersion << " comb-embed n=" << a.n << " k=" << a.k << " p_mult=" << a.p_mult
       << " seeds=" << a.seeds << " seed=" << a.seed << "\n";
    os << "seed,stage_reached,success,millis\n";
    const double p = a.p_mult * std::log(static_cast<double>(a.n)) / static_cast<double>(a.n);
    long long successes = 0;
    for (long long s = 0; s < a.seeds; ++s) {
        const uint64_t run_seed = rng::mix(a.seed, s);
        const auto t0 = std::chrono::steady_clock::now();
        const Multigraph g = sample_gnp(a.n, p, run_seed);
        const CombEmbedResult r = embed_comb(g, a.n, a.k, run_seed, a.budget);
        const auto t1 = std::chrono::steady_clock::now();
        const long long ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        if (r.ok && !verify_comb(g, r.comb, a.n, a.k))
            throw std::logic_error("comb embed: success failed verification");
        successes += r.ok ? 1 : 0;
        os << s << "," << r.stage << "," << (r.ok ? 1 : 0) << "," << ms << "\n";
        if (r.ok && !a.dump_prefix.empty()) {
            std::ofstream gf(a.dump_prefix + ".edges");
            gf << g.to_edge_list();
            std::ofstream cf(a.dump_prefix + ".comb.json");
            cf << comb_to_json(r.comb) << "\n";
        }
    }
    return successes > 0 ? 0 : 1;
}

int run_comb_verify(const std::string& graph_path, const std::string& comb_path,
                    const std::string& out) {
    const Multigraph g = load_graph(graph_path);
    std::ifstream in(comb_path);
    if (!in) throw std::runtime_error("cannot open comb file: " + comb_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const Comb c = comb_from_json(text);
    const long long k = c.teeth.empty() ? 0 : static_cast<long long>(c.teeth[0].size());
    const bool valid = k >= 1 && verify_comb(g, c, g.n(), k);
    json j;
    j["valid"] = valid;
    emit_json(j, out);
    return valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kVersion) +
                 " -- cycle factors, renewals without replacement, and comb embeddings"};
    app.require_subcommand(1);
    app.add_option("--threads", g_threads, "worker threads (default: CYCLAB_THREADS or 1)");

    RenewalArgs renewal_args;
    auto* c_renewal = app.add_subcommand("renewal", "hitting probabilities R_k, P_k, Q_k");
    c_renewal->add_option("--lengths", renewal_args.lengths, "multiset, e.g. 2:5,3:4")->required();
    c_renewal->add_option("--k", renewal_args.k, "target value")->required();
    c_renewal->add_option("--variant", renewal_args.variant, "with | without | size-biased");
    c_renewal->add_option("--mc", renewal_args.mc_trials, "also run Monte Carlo with this many trials");
    c_renewal->add_option("--seed", renewal_args.seed, "master seed");
    c_renewal->add_option("--out", renewal_args.out, "output path (default stdout)");

    SeriesArgs series_args;
    auto* c_series = app.add_subcommand("series", "truncated power series operations");
    c_series->add_option("--op", series_args.op, "from-lengths | renewal | correction | geometric");
    c_series->add_option("--lengths", series_args.lengths, "multiset spec");
    c_series->add_option("--in", series_args.in, "input series JSON file");
    c_series->add_option("--T", series_args.T, "truncation order");
    c_series->add_option("--out", series_args.out, "output path");

    SampleArgs sample_args;
    auto* c_sample = app.add_subcommand("sample", "sample a graph and emit its edge list");
    c_sample->add_option("--model", sample_args.model,
                         "pairing | simple | superposition | superposition-raw | gnp");
    c_sample->add_option("--n", sample_args.n)->required();
    c_sample->add_option("--d", sample_args.d, "degree (pairing/simple)");
    c_sample->add_option("--k", sample_args.k, "cycle length (superposition)");
    c_sample->add_option("--p", sample_args.p, "edge probability (gnp)");
    c_sample->add_option("--seed", sample_args.seed);
    c_sample->add_option("--out", sample_args.out);

    CensusArgs census_args;
    auto* c_census = app.add_subcommand("census", "short-cycle census (CSV)");
    c_census->add_option("--model", census_args.sample.model);
    c_census->add_option("--n", census_args.sample.n)->required();
    c_census->add_option("--d", census_args.sample.d);
    c_census->add_option("--k", census_args.sample.k);
    c_census->add_option("--p", census_args.sample.p);
    c_census->add_option("--L", census_args.L, "max cycle length (<= 12)");
    c_census->add_option("--samples", census_args.samples);
    c_census->add_option("--seed", census_args.sample.seed);
    c_census->add_option("--out", census_args.sample.out);

    auto* c_factors = app.add_subcommand("factors", "cycle-factor counting and moments");
    c_factors->require_subcommand(1);
    std::string factors_graph, factors_out;
    long long factors_k = 3, factors_n = 24;
    auto* c_fcount = c_factors->add_subcommand("count", "exact cf_k of a cubic multigraph");
    c_fcount->add_option("--graph", factors_graph, "edge-list file")->required();
    c_fcount->add_option("--k", factors_k)->required();
    c_fcount->add_option("--out", factors_out);
    auto* c_fmoments = c_factors->add_subcommand("moments", "exact and asymptotic E[Y], E[cf]");
    c_fmoments->add_option("--n", factors_n)->required();
    c_fmoments->add_option("--k", factors_k)->required();
    c_fmoments->add_option("--out", factors_out);
    ScanArgs scan_args;
    auto* c_fscan = c_factors->add_subcommand("scan", "frequency/mean scan over divisors k");
    c_fscan->add_option("--n", scan_args.n)->required();
    c_fscan->add_flag("--k-divisors", scan_args.k_divisors, "scan all divisors of n (default)");
    c_fscan->add_option("--k", scan_args.ks, "explicit k list");
    c_fscan->add_option("--samples", scan_args.samples);
    c_fscan->add_option("--seed", scan_args.seed);
    c_fscan->add_option("--out", scan_args.out);

    ScanArgs tscan_args;
    auto* c_tscan = app.add_subcommand("threshold-scan", "alias of `factors scan`");
    c_tscan->add_option("--n", tscan_args.n)->required();
    c_tscan->add_flag("--k-divisors", tscan_args.k_divisors);
    c_tscan->add_option("--k", tscan_args.ks);
    c_tscan->add_option("--samples", tscan_args.samples);
    c_tscan->add_option("--seed", tscan_args.seed);
    c_tscan->add_option("--out", tscan_args.out);

    auto* c_patterns = app.add_subcommand("patterns", "intersection-pattern combinatorics");
    c_patterns->require_subcommand(1);
    long long pat_n = 5, pat_m = 2, pat_h = 0, pat_k = 0;
    std::string pat_out, pat_lengths;
    uint64_t pat_seed = 1;
    bool pat_verify_direct = false, pat_log = false;
    auto* c_pcount = c_patterns->add_subcommand("count", "|I_{h,m}|");
    c_pcount->add_option("--n", pat_n)->required();
    c_pcount->add_option("--m", pat_m)->required();
    c_pcount->add_option("--h-cycles", pat_h, "number of full k-cycles (default 0)");
    c_pcount->add_option("--k", pat_k);
    c_pcount->add_option("--out", pat_out);
    auto* c_pcountn = c_patterns->add_subcommand("count-n", "N(S) for a path-length multiset");
    c_pcountn->add_option("--lengths", pat_lengths)->required();
    c_pcountn->add_option("--k", pat_k)->required();
    c_pcountn->add_option("--out", pat_out);
    auto* c_ppsi = c_patterns->add_subcommand("psi", "Psi/Psi-hat ledger (CSV)");
    c_ppsi->add_option("--n", pat_n)->required();
    c_ppsi->add_option("--k", pat_k)->required();
    c_ppsi->add_flag("--log", pat_log, "log-space table (for large n)");
    c_ppsi->add_option("--out", pat_out);
    auto* c_psm = c_patterns->add_subcommand("second-moment", "exact E[Y^2] assembly (n <= 8)");
    c_psm->add_option("--n", pat_n)->required();
    c_psm->add_option("--k", pat_k)->required();
    c_psm->add_flag("--verify-direct", pat_verify_direct,
                    "also enumerate all pairings and compare bit-exactly");
    c_psm->add_option("--out", pat_out);
    auto* c_psample = c_patterns->add_subcommand("sample", "uniform cycle-free pattern");
    c_psample->add_option("--n", pat_n)->required();
    c_psample->add_option("--m", pat_m)->required();
    c_psample->add_option("--seed", pat_seed);
    c_psample->add_option("--out", pat_out);
    PathStatsArgs pstats_args;
    auto* c_pstats = c_patterns->add_subcommand("path-stats", "path-length tail/frequency report");
    c_pstats->add_option("--n", pstats_args.n)->required();
    c_pstats->add_option("--m", pstats_args.m)->required();
    c_pstats->add_option("--samples", pstats_args.samples);
    c_pstats->add_option("--seed", pstats_args.seed);
    c_pstats->add_option("--tail-t", pstats_args.tail_t, "tail thresholds t");
    c_pstats->add_option("--tail-ell", pstats_args.tail_ell, "tail lengths ell");
    c_pstats->add_option("--freq-ell", pstats_args.freq_ells, "lengths for frequency bands");
    c_pstats->add_option("--eps", pstats_args.eps);
    c_pstats->add_option("--out", pstats_args.out);

    long long sm_n = 4, sm_k = 4;
    bool sm_verify = false;
    std::string sm_out;
    auto* c_sm = app.add_subcommand("second-moment", "alias of `patterns second-moment`");
    c_sm->add_option("--n", sm_n)->required();
    c_sm->add_option("--k", sm_k)->required();
    c_sm->add_flag("--verify-direct", sm_verify);
    c_sm->add_option("--out", sm_out);

    auto* c_cond = app.add_subcommand("conditioning", "small-subgraph-conditioning constants");
    c_cond->require_subcommand(1);
    long long cond_T = 60, cond_J = 41, cond_batch = 100000, cond_n = 3000, cond_k = 30,
              cond_trials = 100000, cond_i_const = 3;
    int cond_i = 3;
    uint64_t cond_seed = 1;
    std::string cond_out;
    auto* c_csum = c_cond->add_subcommand("sum-check", "partial sums of lambda_i delta_i^2");
    c_csum->add_option("--T", cond_T);
    c_csum->add_option("--out", cond_out);
    auto* c_cconst = c_cond->add_subcommand("constants", "lambda_i, delta_i");
    c_cconst->add_option("--i", cond_i_const)->required();
    c_cconst->add_option("--out", cond_out);
    auto* c_cw = c_cond->add_subcommand("sample-w", "limit-law W batch statistics");
    c_cw->add_option("--J", cond_J);
    c_cw->add_option("--batch", cond_batch);
    c_cw->add_option("--seed", cond_seed);
    c_cw->add_option("--out", cond_out);
    auto* c_cplant = c_cond->add_subcommand("planted", "E[X_i | planted ROD factor]");
    c_cplant->add_option("--n", cond_n);
    c_cplant->add_option("--k", cond_k);
    c_cplant->add_option("--i", cond_i);
    c_cplant->add_option("--trials", cond_trials);
    c_cplant->add_option("--seed", cond_seed);
    c_cplant->add_option("--out", cond_out);

    auto* c_comb = app.add_subcommand("comb", "comb embedding in G(n, p)");
    c_comb->require_subcommand(1);
    CombEmbedArgs comb_args;
    std::string comb_graph, comb_file, comb_out;
    auto* c_cembed = c_comb->add_subcommand("embed", "embed combs over a seed sweep (CSV)");
    c_cembed->add_option("--n", comb_args.n);
    c_cembed->add_option("--k", comb_args.k);
    c_cembed->add_option("--p-mult", comb_args.p_mult, "p = p_mult * ln(n) / n");
    c_cembed->add_option("--seeds", comb_args.seeds);
    c_cembed->add_option("--seed", comb_args.seed, "base seed");
    c_cembed->add_option("--budget", comb_args.budget);
    c_cembed->add_option("--dump-prefix", comb_args.dump_prefix,
                         "write <prefix>.edges and <prefix>.comb.json for successes");
    c_cembed->add_option("--out", comb_args.out);
    auto* c_cverify = c_comb->add_subcommand("verify", "verify a comb against a graph");
    c_cverify->add_option("--graph", comb_graph)->required();
    c_cverify->add_option("--comb", comb_file)->required();
    c_cverify->add_option("--out", comb_out);

    // let global options like --threads appear after a subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_renewal)) return run_renewal(renewal_args);
        if (app.got_subcommand(c_series)) return run_series(series_args);
        if (app.got_subcommand(c_sample)) return run_sample(sample_args);
        if (app.got_subcommand(c_census)) return run_census(census_args);
        if (app.got_subcommand(c_factors)) {
            if (c_factors->got_subcommand(c_fcount))
                return run_factors_count(factors_graph, factors_k, factors_out);
            if (c_factors->got_subcommand(c_fmoments))
                return run_factors_moments(factors_n, factors_k, factors_out);
            return run_factors_scan(scan_args);
        }
        if (app.got_subcommand(c_tscan)) return run_factors_scan(tscan_args);
        if (app.got_subcommand(c_patterns)) {
            if (c_patterns->got_subcommand(c_pcount))
                return run_patterns_count(pat_n, pat_m, pat_h, pat_k, pat_out);
            if (c_patterns->got_subcommand(c_pcountn))
                return run_patterns_count_n(pat_lengths, pat_k, pat_out);
            if (c_patterns->got_subcommand(c_ppsi))
                return run_patterns_psi(pat_n, pat_k, pat_log, pat_out);
            if (c_patterns->got_subcommand(c_psm))
                return run_patterns_second_moment(pat_n, pat_k, pat_verify_direct, pat_out);
            if (c_patterns->got_subcommand(c_psample))
                return run_patterns_sample(pat_n, pat_m, pat_seed, pat_out);
            return run_patterns_path_stats(pstats_args);
        }
        if (app.got_subcommand(c_sm))
            return run_patterns_second_moment(sm_n, sm_k, sm_verify, sm_out);
        if (app.got_subcommand(c_cond)) {
            if (c_cond->got_subcommand(c_csum)) return run_cond_sum_check(cond_T, cond_out);
            if (c_cond->got_subcommand(c_cconst)) return run_cond_constants(cond_i_const, cond_out);
            if (c_cond->got_subcommand(c_cw))
                return run_cond_sample_w(cond_J, cond_batch, cond_seed, cond_out);
            return run_cond_planted(cond_n, cond_k, cond_i, cond_trials, cond_seed, cond_out);
        }
        if (app.got_subcommand(c_comb)) {
            if (c_comb->got_subcommand(c_cembed)) return run_comb_embed(comb_args);
            return run_comb_verify(comb_graph, comb_file, comb_out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
