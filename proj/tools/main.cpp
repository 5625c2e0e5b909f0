// summab: batch experiments over summability transforms.
//
// Subcommands: gamma, bridge, scan-rowsums, cond-check, logmean, cesaro,
// fourier-partial, fourier-logmean, subseq-logmean, dyadic, divergence-probe.
// Exit codes: 0 success, 2 usage error, 3 precondition violation,
// 4 exact-arithmetic ceiling exceeded.

#include "summab/bridge.hpp"
#include "summab/dyadic.hpp"
#include "summab/fourier.hpp"
#include "summab/generators.hpp"
#include "summab/io.hpp"
#include "summab/means.hpp"
#include "summab/reciprocal.hpp"
#include "summab/scalar.hpp"
#include "summab/seq_prefix.hpp"
#include "summab/weights.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace summab;

namespace {

// Maps to exit code 2 together with CLI11 parse failures.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr const char* weights_catalog = "logarithmic | ones | geometric:<ratio>";
constexpr const char* alpha_catalog = "reciprocal | const:<a> | tetunashvili:<c>[:<m>]";

struct CommonOpts {
    bool exact = false;
    std::string format = "csv";
    std::string out;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts)
{
    auto* exact = cmd->add_flag("--exact", opts.exact, "exact rational arithmetic");
    cmd->add_flag("--float,!--no-float", "floating arithmetic (default)")->excludes(exact);
    cmd->add_option("--format", opts.format, "output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out, "output path (default: stdout)");
    cmd->add_option("--seed", opts.seed, "seed for the random-prefix columns");
}

void emit(const Table& table, const CommonOpts& opts)
{
    if (opts.out.empty()) {
        table.write(std::cout, opts.format);
    } else {
        std::ofstream out(opts.out, std::ios::binary);
        if (!out)
            throw precondition_error("cannot open output file: " + opts.out);
        table.write(out, opts.format);
    }
}

void require_ceiling(bool exact, int value, int exact_max, int float_max, const std::string& what)
{
    const int cap = exact ? exact_max : float_max;
    if (value > cap)
        throw ceiling_error(what + " <= " + std::to_string(cap) +
                            (exact ? " in exact mode" : " in floating mode") +
                            (exact ? "; rerun with --float for larger sizes" : ""));
}

template <ScalarMode S>
WeightScheme<S> make_weights(const std::string& rule)
{
    if (rule == "logarithmic")
        return WeightScheme<S>::logarithmic();
    if (rule == "ones")
        return WeightScheme<S>::ones();
    if (rule.rfind("geometric:", 0) == 0)
        return WeightScheme<S>::geometric(parse_scalar<S>(rule.substr(10)));
    throw usage_error("unknown weight rule '" + rule + "'; available: " + weights_catalog);
}

template <ScalarMode S>
VaryingCesaroParams<S> make_alpha(const std::string& rule)
{
    if (rule == "reciprocal")
        return VaryingCesaroParams<S>::reciprocal();
    if (rule.rfind("const:", 0) == 0)
        return VaryingCesaroParams<S>::constant(parse_scalar<S>(rule.substr(6)));
    if (rule.rfind("tetunashvili:", 0) == 0) {
        std::string spec = rule.substr(13);
        int m = 1;
        if (auto colon = spec.find(':'); colon != std::string::npos) {
            m = std::stoi(spec.substr(colon + 1));
            spec = spec.substr(0, colon);
        }
        return VaryingCesaroParams<S>::tetunashvili(std::stod(spec), m);
    }
    throw usage_error("unknown alpha rule '" + rule + "'; available: " + alpha_catalog);
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            parts.push_back(item);
    if (parts.empty())
        throw usage_error("empty list: '" + text + "'");
    return parts;
}

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> out;
    for (const std::string& p : split_list(text))
        out.push_back(std::stoi(p));
    return out;
}

std::uint64_t parse_natural(const std::string& text)
{
    if (text.rfind("0b", 0) == 0 || text.rfind("0B", 0) == 0)
        return std::stoull(text.substr(2), nullptr, 2);
    return std::stoull(text);
}

template <ScalarMode S>
SeqPrefix<S> resolve_sequence(const std::string& preset, const std::string& file, int length,
                              std::uint64_t seed)
{
    if (!file.empty())
        return SeqPrefix<S>(load_scalar_array_file<S>(file));
    if (preset.empty())
        throw usage_error("need --seq <preset> or --seq-file <path>; presets: " +
                          std::string(sequence_preset_catalog()));
    return make_sequence<S>(preset, length, seed);
}

std::string fmt_int(long v) { return std::to_string(v); }

// ---------------------------------------------------------------------------

struct GammaOpts {
    CommonOpts common;
    std::string weights = "logarithmic";
    int n = 16;
};

template <ScalarMode S>
Table run_gamma(const GammaOpts& o)
{
    require_ceiling(o.common.exact, o.n, 2048, 65536, "gamma: --n");
    auto weights = make_weights<S>(o.weights);
    ReciprocalCoeffs<S> coeffs = reciprocal_coeffs(weights, o.n);

    Table t;
    t.header = {"n", "gamma_n", "partial_sum"};
    S partial = ratio<S>(0);
    for (int n = 0; n <= o.n; ++n) {
        const S& g = coeffs.gamma[static_cast<size_t>(n)];
        partial = S(partial + g);
        t.add_row({fmt_int(n), format_scalar(g), format_scalar(partial)});
    }
    GammaReport<S> conclusions = check_gamma_conclusions(coeffs);
    t.add_note("weights", weights.name());
    t.add_note("gamma0_is_one", conclusions.gamma0_is_one ? "true" : "false");
    t.add_note("negative_count", fmt_int(conclusions.negative_count));
    t.add_note("zero_count", fmt_int(conclusions.zero_count));
    t.add_note("positive_count", fmt_int(conclusions.positive_count));
    t.add_note("min_partial_sum", format_scalar(conclusions.min_partial_sum));
    t.add_note("min_partial_sum_index", fmt_int(conclusions.min_partial_sum_index));
    t.add_note("min_partial_sum_nonnegative", conclusions.min_nonnegative ? "true" : "false");
    if (o.n >= 2) {
        HardyReport<S> hyp = check_hardy_hypotheses(weights, o.n);
        t.add_note("q0_is_one", hyp.q0_is_one ? "true" : "false");
        t.add_note("all_positive", hyp.all_positive ? "true" : "false");
        t.add_note("ratios_nondecreasing", hyp.ratios_nondecreasing ? "true" : "false");
        t.add_note("cond0_holds", hyp.cond0_holds ? "true" : "false");
        if (hyp.first_ratio_drop >= 0)
            t.add_note("first_ratio_drop", fmt_int(hyp.first_ratio_drop));
        if (hyp.tail_ratio_defined)
            t.add_note("qN_over_QN", format_scalar(hyp.tail_ratio));
    }
    return t;
}

struct BridgeOpts {
    CommonOpts common;
    std::string weights = "logarithmic";
    std::string alpha = "reciprocal";
    int n = 2;
};

template <ScalarMode S>
Table run_bridge(const BridgeOpts& o)
{
    require_ceiling(o.common.exact, o.n, 512, 4096, "bridge: --n");
    auto weights = make_weights<S>(o.weights);
    auto params = make_alpha<S>(o.alpha);
    ReciprocalCoeffs<S> coeffs = reciprocal_coeffs(weights, o.n);
    BridgeRow<S> row = bridge_row(o.n, weights, params, coeffs);

    Table t;
    t.header = {"n", "k", "b", "t"}; // b is b_{n-k,n}, the factor of t_{k,n}
    for (int k = 0; k <= o.n; ++k)
        t.add_row({fmt_int(o.n), fmt_int(k),
                   format_scalar(row.b[static_cast<size_t>(o.n - k)]),
                   format_scalar(row.t[static_cast<size_t>(k)])});
    t.add_note("weights", weights.name());
    t.add_note("alpha_rule", params.name());
    t.add_note("alpha_n", format_scalar(row.alpha_n));
    t.add_note("row_sum", format_scalar(row.row_sum));
    t.add_note("abs_row_sum", format_scalar(row.abs_row_sum));
    t.add_note("negative_count", fmt_int(static_cast<long>(row.negative_indices.size())));
    return t;
}

struct ScanOpts {
    CommonOpts common;
    std::string weights = "logarithmic";
    std::string alpha = "reciprocal";
    int nmax = 32;
};

template <ScalarMode S>
Table run_scan_rowsums(const ScanOpts& o)
{
    require_ceiling(o.common.exact, o.nmax, 512, 2048, "scan-rowsums: --nmax");
    auto weights = make_weights<S>(o.weights);
    auto params = make_alpha<S>(o.alpha);
    ReciprocalCoeffs<S> coeffs = reciprocal_coeffs(weights, o.nmax);
    weights.ensure(o.nmax);
    SeqPrefix<S> probe = random_rational_prefix<S>(o.common.seed, o.nmax + 1);
    std::vector<S> norlund_values;
    norlund_values.reserve(static_cast<size_t>(o.nmax) + 1);
    for (int k = 0; k <= o.nmax; ++k)
        norlund_values.push_back(norlund_mean(probe, weights, k));

    const int first = params.first_row();
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(o.nmax - first + 1));
    summab::detail::parallel_rows(first, o.nmax, [&](int n) {
        BridgeRow<S> row = bridge_row(n, weights, params, coeffs);
        S residual = verify_identity2(probe, row, std::span<const S>(norlund_values));
        rows[static_cast<size_t>(n - first)] = {
            fmt_int(n), format_scalar(S(row.row_sum - ratio<S>(1))),
            format_scalar(row.abs_row_sum),
            fmt_int(static_cast<long>(row.negative_indices.size())),
            format_scalar(residual)};
    });

    Table t;
    t.header = {"n", "row_sum_minus_1", "abs_row_sum", "negative_count", "identity2_residual"};
    for (auto& row : rows)
        t.add_row(std::move(row));
    t.add_note("weights", weights.name());
    t.add_note("alpha_rule", params.name());
    t.add_note("probe_prefix", "random-rational");
    t.add_note("seed", std::to_string(o.common.seed));
    return t;
}

struct CondOpts {
    CommonOpts common;
    std::string weights = "logarithmic";
    std::string alpha = "reciprocal";
    int n = 8;
};

template <ScalarMode S>
Table run_cond_check(const CondOpts& o)
{
    require_ceiling(o.common.exact, o.n, 4096, 65536, "cond-check: --n");
    auto weights = make_weights<S>(o.weights);
    auto params = make_alpha<S>(o.alpha);
    CondReport<S> report = cond_check(weights, params, o.n);

    Table t;
    t.header = {"n", "j", "q_ratio", "bound", "holds"};
    for (const auto& e : report.entries)
        t.add_row({fmt_int(o.n), fmt_int(e.j), format_scalar(e.lhs), format_scalar(e.rhs),
                   e.holds ? "true" : "false"});
    t.add_note("weights", weights.name());
    t.add_note("alpha_rule", params.name());
    t.add_note("alpha_n", format_scalar(report.alpha_n));
    t.add_note("holds_at_matching_index", report.holds_at_matching ? "true" : "false");
    t.add_note("holds_at_all_indices", report.holds_all ? "true" : "false");
    t.add_note("failing_count", fmt_int(static_cast<long>(report.failing.size())));
    return t;
}

struct LogmeanOpts {
    CommonOpts common;
    std::string seq;
    std::string seq_file;
    int nmax = 32;
};

template <ScalarMode S>
Table run_logmean(const LogmeanOpts& o)
{
    require_ceiling(o.common.exact, o.nmax, 2048, 262144, "logmean: --nmax");
    SeqPrefix<S> s = resolve_sequence<S>(o.seq, o.seq_file, o.nmax, o.common.seed);
    if (s.size() < o.nmax)
        throw precondition_error("logmean: sequence shorter than nmax");
    Table t;
    t.header = {"n", "L_n"};
    for (int n = 1; n <= o.nmax; ++n)
        t.add_row({fmt_int(n), format_scalar(log_mean(s, n))});
    t.add_note("sequence", o.seq_file.empty() ? o.seq : o.seq_file);
    return t;
}

struct CesaroOpts {
    CommonOpts common;
    std::string seq;
    std::string seq_file;
    std::string alpha = "reciprocal";
    int nmax = 32;
};

template <ScalarMode S>
Table run_cesaro(const CesaroOpts& o)
{
    require_ceiling(o.common.exact, o.nmax, 512, 65536, "cesaro: --nmax");
    auto params = make_alpha<S>(o.alpha);
    SeqPrefix<S> s = resolve_sequence<S>(o.seq, o.seq_file, o.nmax + 1, o.common.seed);
    if (s.size() < o.nmax + 1)
        throw precondition_error("cesaro: sequence shorter than nmax + 1");
    Table t;
    t.header = {"n", "alpha_n", "A_n", "sigma_n"};
    for (int n = params.first_row(); n <= o.nmax; ++n) {
        S alpha = params.alpha(n);
        t.add_row({fmt_int(n), format_scalar(alpha),
                   format_scalar(cesaro_coeff<S>(n, alpha)),
                   format_scalar(varying_cesaro_mean(s, params, n))});
    }
    t.add_note("sequence", o.seq_file.empty() ? o.seq : o.seq_file);
    t.add_note("alpha_rule", params.name());
    return t;
}

struct FourierOpts {
    CommonOpts common;
    std::string file;
    std::string points = "0";
    int nmax = 8;
    // subseq-logmean only:
    std::string subseq;
    int count = 0;
    std::string norm = "harmonic";
};

template <ScalarMode S>
Table run_fourier_partial(const FourierOpts& o)
{
    require_ceiling(o.common.exact, o.nmax, 4096, 65536, "fourier-partial: --nmax");
    FourierFunction<S> f = load_function_file<S>(o.file);
    Table t;
    t.header = {"x", "n", "S_n"};
    for (const std::string& pt : split_list(o.points)) {
        S x = parse_scalar<S>(pt);
        PartialSumSequence<S> seq = partial_sum_prefix(f, o.nmax + 1, x);
        for (int n = 0; n <= o.nmax; ++n)
            t.add_row({format_scalar(x), fmt_int(n), format_scalar(seq.values[n])});
    }
    t.add_note("function", o.file);
    t.add_note("system", system_name(f.system()));
    return t;
}

template <ScalarMode S>
Table run_fourier_logmean(const FourierOpts& o)
{
    require_ceiling(o.common.exact, o.nmax, 4096, 65536, "fourier-logmean: --n");
    FourierFunction<S> f = load_function_file<S>(o.file);
    Table t;
    t.header = {"x", "n", "S_n", "L_n"};
    for (const std::string& pt : split_list(o.points)) {
        S x = parse_scalar<S>(pt);
        PartialSumSequence<S> seq = partial_sum_prefix(f, o.nmax + 1, x);
        for (int n = 1; n <= o.nmax; ++n)
            t.add_row({format_scalar(x), fmt_int(n), format_scalar(seq.values[n]),
                       format_scalar(log_mean(seq.values, n))});
    }
    t.add_note("function", o.file);
    t.add_note("system", system_name(f.system()));
    return t;
}

template <ScalarMode S>
Table run_subseq_logmean(const FourierOpts& o)
{
    FourierFunction<S> f = load_function_file<S>(o.file);
    std::vector<int> subseq = parse_int_list(o.subseq);
    const int count = o.count > 0 ? o.count : static_cast<int>(subseq.size());
    if (!subseq.empty())
        require_ceiling(o.common.exact, subseq.back(), 65536, 1 << 20,
                        "subseq-logmean: max index");
    SubseqNorm norm;
    if (o.norm == "harmonic")
        norm = SubseqNorm::harmonic;
    else if (o.norm == "ln")
        norm = SubseqNorm::log_n;
    else
        throw usage_error("unknown normalization '" + o.norm + "'; available: harmonic | ln");

    Table t;
    t.header = {"x", "N", "subseq_log_mean"};
    for (const std::string& pt : split_list(o.points)) {
        S x = parse_scalar<S>(pt);
        t.add_row({format_scalar(x), fmt_int(count),
                   format_scalar(subseq_log_means(f, subseq, count, x, norm))});
    }
    t.add_note("function", o.file);
    t.add_note("subseq", o.subseq);
    t.add_note("norm", o.norm);
    return t;
}

struct DyadicOpts {
    CommonOpts common;
    std::string numbers;
    int gen_nested = 0;
    std::string check;
};

Table run_dyadic(const DyadicOpts& o)
{
    Table t;
    t.header = {"n", "binary", "V", "spectrum"};
    auto binary_string = [](std::uint64_t n) {
        std::string s;
        for (std::uint64_t v = n; v != 0; v >>= 1)
            s.insert(s.begin(), static_cast<char>('0' + (v & 1u)));
        return s.empty() ? std::string("0") : s;
    };
    auto spectrum_string = [](std::uint64_t n) {
        std::string s;
        for (int j : spectrum(n)) {
            if (!s.empty())
                s += ';';
            s += std::to_string(j);
        }
        return s;
    };
    auto add_number = [&](std::uint64_t n) {
        t.add_row({std::to_string(n), binary_string(n), std::to_string(variation(n)),
                   spectrum_string(n)});
    };

    int modes = (o.numbers.empty() ? 0 : 1) + (o.gen_nested > 0 ? 1 : 0) + (o.check.empty() ? 0 : 1);
    if (modes != 1)
        throw usage_error("dyadic: pass exactly one of --n, --gen-nested, --check-nested");

    if (!o.numbers.empty()) {
        for (const std::string& p : split_list(o.numbers))
            add_number(parse_natural(p));
    } else if (o.gen_nested > 0) {
        std::vector<std::uint64_t> seq = gen_nested_unbounded_variation(o.gen_nested);
        for (std::uint64_t n : seq)
            add_number(n);
        NestedCheck check = is_nested(seq);
        t.add_note("nested", check.nested ? "true" : "false");
    } else {
        std::vector<std::uint64_t> seq;
        for (const std::string& p : split_list(o.check))
            seq.push_back(parse_natural(p));
        for (std::uint64_t n : seq)
            add_number(n);
        NestedCheck check = is_nested(seq);
        t.add_note("nested", check.nested ? "true" : "false");
        if (!check.nested)
            t.add_note("first_violation", std::to_string(check.first_violation));
    }
    return t;
}

struct ProbeOpts {
    CommonOpts common;
    std::string seq;
    std::string seq_file;
    std::string function_file;
    std::string point = "0";
    std::string alpha = "reciprocal";
    std::string checkpoints;
    int nmax = 1024;
};

template <ScalarMode S>
Table run_divergence(const ProbeOpts& o)
{
    require_ceiling(o.common.exact, o.nmax, 512, 65536, "divergence-probe: --nmax");
    ProbeSpec<S> spec;
    spec.nmax = o.nmax;
    spec.cesaro = make_alpha<S>(o.alpha);
    if (!o.checkpoints.empty())
        spec.checkpoints = parse_int_list(o.checkpoints);

    std::vector<ProbeRow<S>> table;
    std::string source;
    if (!o.function_file.empty()) {
        FourierFunction<S> f = load_function_file<S>(o.function_file);
        table = divergence_probe(f, parse_scalar<S>(o.point), spec);
        source = o.function_file + " at x = " + o.point;
    } else {
        SeqPrefix<S> s = resolve_sequence<S>(o.seq, o.seq_file, o.nmax + 1, o.common.seed);
        table = divergence_probe(s, spec);
        source = o.seq_file.empty() ? o.seq : o.seq_file;
    }

    Table t;
    t.header = {"checkpoint", "sup_abs_logmean", "sup_abs_cesaro"};
    for (const auto& row : table)
        t.add_row({fmt_int(row.checkpoint), format_scalar(row.sup_log),
                   row.cesaro_defined ? format_scalar(row.sup_cesaro) : std::string()});
    t.add_note("source", source);
    t.add_note("alpha_rule", spec.cesaro->name());
    return t;
}

template <class Fn>
int dispatch(bool exact, Fn&& fn)
{
    if (exact)
        fn.template operator()<Rational>();
    else
        fn.template operator()<double>();
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"summability transforms, reciprocal series, and divergence probes"};
    app.require_subcommand(1);

    GammaOpts gamma_opts;
    auto* gamma_cmd = app.add_subcommand(
        "gamma", "reciprocal-series coefficients of a weight scheme, with checks");
    add_common(gamma_cmd, gamma_opts.common);
    gamma_cmd->add_option("--weights", gamma_opts.weights, weights_catalog);
    gamma_cmd->add_option("--n", gamma_opts.n, "highest coefficient index")
        ->check(CLI::NonNegativeNumber);

    BridgeOpts bridge_opts;
    auto* bridge_cmd = app.add_subcommand("bridge", "one bridge-transform row in full detail");
    add_common(bridge_cmd, bridge_opts.common);
    bridge_cmd->add_option("--weights", bridge_opts.weights, weights_catalog);
    bridge_cmd->add_option("--alpha", bridge_opts.alpha, alpha_catalog);
    bridge_cmd->add_option("--n", bridge_opts.n, "row index")->check(CLI::NonNegativeNumber);

    ScanOpts scan_opts;
    auto* scan_cmd = app.add_subcommand(
        "scan-rowsums", "row-sum / absolute-sum / negativity scan of the bridge transform");
    add_common(scan_cmd, scan_opts.common);
    scan_cmd->add_option("--weights", scan_opts.weights, weights_catalog);
    scan_cmd->add_option("--alpha", scan_opts.alpha, alpha_catalog);
    scan_cmd->add_option("--nmax", scan_opts.nmax, "last row")->check(CLI::PositiveNumber);

    CondOpts cond_opts;
    auto* cond_cmd =
        app.add_subcommand("cond-check", "ratio condition q_j/q_{j-1} <= 1-(1-alpha_n)/j");
    add_common(cond_cmd, cond_opts.common);
    cond_cmd->add_option("--weights", cond_opts.weights, weights_catalog);
    cond_cmd->add_option("--alpha", cond_opts.alpha, alpha_catalog);
    cond_cmd->add_option("--n", cond_opts.n, "row index")->check(CLI::PositiveNumber);

    LogmeanOpts logmean_opts;
    auto* logmean_cmd = app.add_subcommand("logmean", "logarithmic means of a sequence");
    add_common(logmean_cmd, logmean_opts.common);
    logmean_cmd->add_option("--seq", logmean_opts.seq, sequence_preset_catalog());
    logmean_cmd->add_option("--seq-file", logmean_opts.seq_file, "JSON array of values");
    logmean_cmd->add_option("--nmax", logmean_opts.nmax, "last index")->check(CLI::PositiveNumber);

    CesaroOpts cesaro_opts;
    auto* cesaro_cmd =
        app.add_subcommand("cesaro", "varying-order Cesaro means of a sequence");
    add_common(cesaro_cmd, cesaro_opts.common);
    cesaro_cmd->add_option("--seq", cesaro_opts.seq, sequence_preset_catalog());
    cesaro_cmd->add_option("--seq-file", cesaro_opts.seq_file, "JSON array of values");
    cesaro_cmd->add_option("--alpha", cesaro_opts.alpha, alpha_catalog);
    cesaro_cmd->add_option("--nmax", cesaro_opts.nmax, "last index")->check(CLI::PositiveNumber);

    FourierOpts fp_opts;
    auto* fp_cmd = app.add_subcommand("fourier-partial", "partial sums S_n(f,x)");
    add_common(fp_cmd, fp_opts.common);
    fp_cmd->add_option("--f", fp_opts.file, "function file (JSON)")->required();
    fp_cmd->add_option("--x", fp_opts.points, "comma-separated evaluation points");
    fp_cmd->add_option("--nmax", fp_opts.nmax, "last partial-sum index")
        ->check(CLI::NonNegativeNumber);

    FourierOpts fl_opts;
    auto* fl_cmd =
        app.add_subcommand("fourier-logmean", "logarithmic means L_n(f,x) of partial sums");
    add_common(fl_cmd, fl_opts.common);
    fl_cmd->add_option("--f", fl_opts.file, "function file (JSON)")->required();
    fl_cmd->add_option("--x", fl_opts.points, "comma-separated evaluation points");
    fl_cmd->add_option("--n,--nmax", fl_opts.nmax, "last mean index")->check(CLI::PositiveNumber);

    FourierOpts sq_opts;
    auto* sq_cmd = app.add_subcommand("subseq-logmean",
                                      "logarithmic means along a partial-sum subsequence");
    add_common(sq_cmd, sq_opts.common);
    sq_cmd->add_option("--f", sq_opts.file, "function file (JSON)")->required();
    sq_cmd->add_option("--x", sq_opts.points, "comma-separated evaluation points");
    sq_cmd->add_option("--subseq", sq_opts.subseq, "comma-separated increasing indices")
        ->required();
    sq_cmd->add_option("--N", sq_opts.count, "number of terms (default: whole subsequence)");
    sq_cmd->add_option("--norm", sq_opts.norm, "normalization: harmonic | ln");

    DyadicOpts dyadic_opts;
    auto* dyadic_cmd =
        app.add_subcommand("dyadic", "binary coefficients, variation, spectrum, nesting");
    add_common(dyadic_cmd, dyadic_opts.common);
    dyadic_cmd->add_option("--n", dyadic_opts.numbers,
                           "comma-separated naturals (decimal or 0b binary)");
    dyadic_cmd->add_option("--gen-nested", dyadic_opts.gen_nested,
                           "emit K nested-spectrum numbers with unbounded variation");
    dyadic_cmd->add_option("--check-nested", dyadic_opts.check,
                           "check a comma-separated sequence for nested spectra");

    ProbeOpts probe_opts;
    auto* probe_cmd = app.add_subcommand(
        "divergence-probe", "running suprema of |L_n| and |sigma_n^{alpha_n}|");
    add_common(probe_cmd, probe_opts.common);
    probe_cmd->add_option("--seq", probe_opts.seq, sequence_preset_catalog());
    probe_cmd->add_option("--seq-file", probe_opts.seq_file, "JSON array of values");
    probe_cmd->add_option("--f", probe_opts.function_file, "function file (JSON)");
    probe_cmd->add_option("--x", probe_opts.point, "evaluation point for --f");
    probe_cmd->add_option("--alpha", probe_opts.alpha, alpha_catalog);
    probe_cmd->add_option("--nmax", probe_opts.nmax, "probe horizon")
        ->check(CLI::PositiveNumber);
    probe_cmd->add_option("--checkpoints", probe_opts.checkpoints,
                          "comma-separated checkpoints (default: powers of two)");

    try {
        app.parse(argc, argv);

        if (gamma_cmd->parsed())
            return dispatch(gamma_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_gamma<S>(gamma_opts), gamma_opts.common);
            });
        if (bridge_cmd->parsed())
            return dispatch(bridge_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_bridge<S>(bridge_opts), bridge_opts.common);
            });
        if (scan_cmd->parsed())
            return dispatch(scan_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_scan_rowsums<S>(scan_opts), scan_opts.common);
            });
        if (cond_cmd->parsed())
            return dispatch(cond_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_cond_check<S>(cond_opts), cond_opts.common);
            });
        if (logmean_cmd->parsed())
            return dispatch(logmean_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_logmean<S>(logmean_opts), logmean_opts.common);
            });
        if (cesaro_cmd->parsed())
            return dispatch(cesaro_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_cesaro<S>(cesaro_opts), cesaro_opts.common);
            });
        if (fp_cmd->parsed())
            return dispatch(fp_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_fourier_partial<S>(fp_opts), fp_opts.common);
            });
        if (fl_cmd->parsed())
            return dispatch(fl_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_fourier_logmean<S>(fl_opts), fl_opts.common);
            });
        if (sq_cmd->parsed())
            return dispatch(sq_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_subseq_logmean<S>(sq_opts), sq_opts.common);
            });
        if (dyadic_cmd->parsed()) {
            emit(run_dyadic(dyadic_opts), dyadic_opts.common);
            return 0;
        }
        if (probe_cmd->parsed())
            return dispatch(probe_opts.common.exact, [&]<ScalarMode S>() {
                emit(run_divergence<S>(probe_opts), probe_opts.common);
            });
        throw usage_error("no subcommand selected");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ceiling_error& e) {
        std::cerr << "ceiling exceeded: " << e.what() << '\n';
        return 4;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
