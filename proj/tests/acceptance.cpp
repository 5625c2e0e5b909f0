// Acceptance suite: end-to-end criteria for the library and the CLI, each
// with its pinned tolerance and runtime bound. Prints one PASS/FAIL line
// per criterion and exits nonzero if any fail.

#include "summab/bridge.hpp"
#include "summab/dyadic.hpp"
#include "summab/fourier.hpp"
#include "summab/generators.hpp"
#include "summab/io.hpp"
#include "summab/means.hpp"
#include "summab/reciprocal.hpp"
#include "summab/scalar.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace summab;
using oracle::rat;
namespace fs = std::filesystem;

namespace {

struct Checker {
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

fs::path scratch()
{
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "summab-acceptance";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const fs::path& out)
{
    std::string cmd = std::string(SUMMAB_CLI_PATH) + " " + args + " --out " + out.string() +
                      " 2>/dev/null";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criteria -------------------------------------------------------------

// gamma --weights logarithmic --n 64 --exact: gamma_1..4 exact, all negative,
// partial sums positive, under 1 s.
void criterion_gregory(Checker& c)
{
    fs::path out = scratch() / "gamma64.csv";
    auto start = std::chrono::steady_clock::now();
    int code = run_cli("gamma --weights logarithmic --n 64 --exact", out);
    double elapsed = seconds_since(start);
    c.require(code == 0, "CLI exited with " + std::to_string(code));
    c.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");

    auto rows = csv_rows(slurp(out));
    c.require(rows.size() == 66, "expected 66 csv rows, got " + std::to_string(rows.size()));
    if (rows.size() != 66)
        return;
    const char* expected[] = {"-1/2", "-1/12", "-1/24", "-19/720"};
    for (int n = 1; n <= 4; ++n)
        c.require(rows[static_cast<size_t>(n) + 1][1] == expected[n - 1],
                  "gamma_" + std::to_string(n) + " = " + rows[static_cast<size_t>(n) + 1][1]);
    for (size_t i = 2; i < rows.size(); ++i) {
        Rational g = parse_rational(rows[i][1]);
        Rational partial = parse_rational(rows[i][2]);
        c.require(sgn(g) < 0, "gamma at csv row " + std::to_string(i) + " not negative");
        c.require(sgn(partial) > 0, "partial sum at csv row " + std::to_string(i) + " not positive");
    }
}

// Row sums of the bridge transform are exactly 1 for n <= 128 under both
// alpha rules, within 30 s.
void criterion_rowsums(Checker& c)
{
    auto start = std::chrono::steady_clock::now();
    auto weights = WeightScheme<Rational>::logarithmic();
    for (const auto& params : {VaryingCesaroParams<Rational>::reciprocal(),
                               VaryingCesaroParams<Rational>::constant(rat(1, 2))}) {
        auto scan = rowsum_scan(128, weights, params);
        c.require(scan.size() == 129, "scan size under rule " + params.name());
        for (const auto& entry : scan)
            c.require(entry.row_sum_minus_1 == rat(0),
                      "row sum != 1 at n = " + std::to_string(entry.n) + " under " +
                          params.name());
    }
    double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s >= 30 s");
}

// verify_identity2 is exactly zero for 100 seeded random rational prefixes
// at every n <= 64, within 60 s.
void criterion_identity2(Checker& c)
{
    auto start = std::chrono::steady_clock::now();
    const int nmax = 64;
    auto weights = WeightScheme<Rational>::logarithmic();
    auto params = VaryingCesaroParams<Rational>::reciprocal();
    auto coeffs = reciprocal_coeffs(weights, nmax);
    std::vector<BridgeRow<Rational>> rows;
    for (int n = 0; n <= nmax; ++n)
        rows.push_back(bridge_row(n, weights, params, coeffs));

    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        SeqPrefix<Rational> s = random_rational_prefix<Rational>(seed, nmax + 1);
        for (int n = 0; n <= nmax; ++n) {
            if (verify_identity2(s, rows[static_cast<size_t>(n)], weights) != rat(0)) {
                c.require(false, "nonzero residual at seed " + std::to_string(seed) +
                                     ", n = " + std::to_string(n));
                return;
            }
        }
    }
    double elapsed = seconds_since(start);
    c.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s >= 60 s");
}

// The measured eq-(1) discrepancy at n = 2: row (-1/56, -9/56, 66/56),
// absolute sum 19/14, ratio condition failing at j = 1.
void criterion_row2(Checker& c)
{
    auto weights = WeightScheme<Rational>::logarithmic();
    auto params = VaryingCesaroParams<Rational>::reciprocal();
    auto coeffs = reciprocal_coeffs(weights, 2);
    BridgeRow<Rational> row = bridge_row(2, weights, params, coeffs);
    c.require(row.t == std::vector<Rational>{rat(-1, 56), rat(-9, 56), rat(66, 56)},
              "row entries differ");
    c.require(row.abs_row_sum == rat(19, 14), "absolute row sum differs");
    c.require(row.negative_indices == std::vector<int>{0, 1}, "negative indices differ");
    auto report = cond_check(weights, params, 2);
    c.require(!report.failing.empty() && report.failing.front() == 1,
              "ratio condition does not fail at j = 1");
}

// Under constant alpha = 1/2 every row is nonnegative with absolute sum
// exactly 1 for n <= 64.
void criterion_positivity(Checker& c)
{
    auto weights = WeightScheme<Rational>::logarithmic();
    auto params = VaryingCesaroParams<Rational>::constant(rat(1, 2));
    auto scan = rowsum_scan(64, weights, params);
    for (const auto& entry : scan) {
        c.require(entry.negative_count == 0,
                  "negative entries at n = " + std::to_string(entry.n));
        c.require(entry.abs_row_sum == rat(1),
                  "absolute row sum != 1 at n = " + std::to_string(entry.n));
    }
}

// For s_k = k the running sup of |L_n| reaches n(1 - 1/l_n) at n = 10^4
// within 1e-9 relative, nondecreasing across checkpoints, under 5 s.
void criterion_unbounded_probe(Checker& c)
{
    auto start = std::chrono::steady_clock::now();
    const int nmax = 10000;
    SeqPrefix<double> s = make_sequence<double>("linear", nmax, 0);
    ProbeSpec<double> spec;
    spec.nmax = nmax;
    auto table = divergence_probe(s, spec);
    double elapsed = seconds_since(start);
    c.require(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s >= 5 s");

    double prev = -1.0;
    for (const auto& row : table) {
        c.require(row.sup_log >= prev, "running sup decreased at checkpoint " +
                                           std::to_string(row.checkpoint));
        prev = row.sup_log;
    }
    long double h = 0.0L;
    for (int k = nmax; k >= 1; --k)
        h += 1.0L / k;
    double expected = static_cast<double>(nmax * (1.0L - 1.0L / h));
    double got = table.back().sup_log;
    c.require(std::fabs(got - expected) <= 1e-9 * std::fabs(expected),
              "final sup " + std::to_string(got) + " vs closed form " + std::to_string(expected));
}

// |s| <= 1 keeps the running sup of |L_n| at or below 1 at every checkpoint
// up to 10^4.
void criterion_bounded_control(Checker& c)
{
    const int nmax = 10000;
    for (const char* preset : {"bounded", "random-unit"}) {
        SeqPrefix<double> s = make_sequence<double>(preset, nmax, 2024);
        ProbeSpec<double> spec;
        spec.nmax = nmax;
        auto table = divergence_probe(s, spec);
        for (const auto& row : table)
            c.require(row.sup_log <= 1.0, std::string(preset) + ": sup " +
                                              std::to_string(row.sup_log) + " > 1 at M = " +
                                              std::to_string(row.checkpoint));
    }
}

// Trig partial sums reproduce polynomials of degree <= 8 within 1e-12 at
// 100 random points; Walsh S_{2^J} reproduces step functions exactly for
// J <= 8; L_3(cos 2 pi x, 0) = 9/11 exactly.
void criterion_fourier(Checker& c)
{
    std::mt19937_64 eng(17);
    auto uniform = [&eng]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };

    for (int d = 0; d <= 8; ++d) {
        std::vector<TrigCoeff<double>> full(static_cast<size_t>(2 * d + 1),
                                            TrigCoeff<double>{0.0, 0.0});
        full[static_cast<size_t>(d)] = {uniform() - 0.5, 0.0};
        for (int j = 1; j <= d; ++j) {
            double re = uniform() - 0.5, im = uniform() - 0.5;
            full[static_cast<size_t>(d + j)] = {re, im};
            full[static_cast<size_t>(d - j)] = {re, -im};
        }
        auto f = FourierFunction<double>::trig_poly(full);
        for (int t = 0; t < 100; ++t) {
            double x = uniform();
            double fx = 0.0;
            for (int j = -d; j <= d; ++j) {
                const TrigCoeff<double>& cf = full[static_cast<size_t>(j + d)];
                double arg = 2.0 * std::numbers::pi * j * x;
                fx += cf.re * std::cos(arg) - cf.im * std::sin(arg);
            }
            for (int n : {d, d + 3}) {
                double sn = trig_partial_sum(f, n, x);
                if (std::fabs(sn - fx) > 1e-12) {
                    c.require(false, "trig reproduction off by " +
                                         std::to_string(std::fabs(sn - fx)) + " at degree " +
                                         std::to_string(d));
                    break;
                }
            }
        }
    }

    for (int J = 0; J <= 8; ++J) {
        const int m = 1 << J;
        SeqPrefix<Rational> vals = random_rational_prefix<Rational>(300 + J, m);
        auto f = FourierFunction<Rational>::dyadic_step(vals.values());
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            ok = walsh_partial_sum(f, m, rat(i, m)) == vals[i];
        for (int t = 0; t < 3 && ok; ++t) {
            Rational x = rat(static_cast<long>(eng() % 997u), 997);
            ok = walsh_partial_sum(f, m, x) == f.value_at(x);
        }
        c.require(ok, "walsh reproduction failed at J = " + std::to_string(J));
    }

    std::vector<TrigCoeff<Rational>> cosf(3, TrigCoeff<Rational>{rat(0), rat(0)});
    cosf[0].re = rat(1, 2);
    cosf[2].re = rat(1, 2);
    auto f = FourierFunction<Rational>::trig_poly(cosf);
    c.require(fourier_log_means(f, 3, rat(0)) == rat(9, 11), "L_3(cos, 0) != 9/11");
}

// Dyadic suite: variation values, the generated nested family, and the
// exhaustive nested-pair check below 2^10.
void criterion_dyadic(Checker& c)
{
    c.require(variation(1) == 2, "V(1) != 2");
    c.require(variation(5) == 4, "V(5) != 4");
    for (int k = 0; k <= 30; ++k)
        c.require(variation(std::uint64_t{1} << k) == 2,
                  "V(2^" + std::to_string(k) + ") != 2");

    auto seq = gen_nested_unbounded_variation(32);
    c.require(is_nested(seq).nested, "generated family is not nested");
    for (int k = 0; k < 32; ++k)
        c.require(variation(seq[static_cast<size_t>(k)]) == 2 * (k + 1),
                  "V(n_" + std::to_string(k) + ") != 2(k+1)");

    for (std::uint64_t a = 1; a < 1024; ++a)
        for (std::uint64_t b = a + 1; b < 1024; ++b)
            if (nested_pair(a, b) != oracle::nested_pair_digits(a, b)) {
                c.require(false, "nested-pair mismatch at (" + std::to_string(a) + ", " +
                                     std::to_string(b) + ")");
                return;
            }
}

// Two runs of every subcommand with the same seed produce byte-identical
// output files.
void criterion_determinism(Checker& c)
{
    fs::path w3 = scratch() / "w3.json";
    {
        std::ofstream out(w3);
        out << R"({"system": "walsh-paley",
                   "representation": {"type": "dyadic-step", "values": [1, -1, -1, 1]}})";
    }
    fs::path cosf = scratch() / "cos.json";
    {
        std::ofstream out(cosf);
        out << R"({"system": "trigonometric",
                   "representation": {"type": "trig-poly",
                                      "coeffs": [["1/2", 0], [0, 0], ["1/2", 0]]}})";
    }

    const std::string cases[] = {
        "gamma --weights logarithmic --n 32 --exact",
        "bridge --n 6 --alpha reciprocal --exact",
        "scan-rowsums --nmax 16 --alpha const:0.5 --exact --seed 5",
        "cond-check --n 12 --alpha reciprocal --exact",
        "logmean --seq random-unit --nmax 200 --seed 11",
        "cesaro --seq random-unit --alpha const:0.5 --nmax 100 --seed 12",
        "fourier-partial --f " + w3.string() + " --nmax 8 --x 0,1/8,1/3 --exact",
        "fourier-logmean --f " + cosf.string() + " --n 12 --x 0,1/2 --exact",
        "subseq-logmean --f " + w3.string() + " --subseq 1,2,4,8 --N 4 --x 1/4 --exact",
        "dyadic --gen-nested 16 --format json",
        "divergence-probe --seq random-unit --nmax 512 --seed 3 --format json",
    };
    int idx = 0;
    for (const std::string& args : cases) {
        fs::path a = scratch() / ("det_a_" + std::to_string(idx));
        fs::path b = scratch() / ("det_b_" + std::to_string(idx));
        int ca = run_cli(args, a);
        int cb = run_cli(args, b);
        c.require(ca == 0 && cb == 0, "exit codes " + std::to_string(ca) + "/" +
                                          std::to_string(cb) + " for: " + args);
        std::string outa = slurp(a), outb = slurp(b);
        c.require(!outa.empty(), "empty output for: " + args);
        c.require(outa == outb, "outputs differ for: " + args);
        ++idx;
    }
}

} // namespace

int main()
{
    using CriterionFn = std::function<void(Checker&)>;
    const std::pair<const char*, CriterionFn> criteria[] = {
        {"gregory coefficients exact through the CLI", criterion_gregory},
        {"bridge row sums are exactly 1 up to n = 128", criterion_rowsums},
        {"representation identity residual is exactly 0", criterion_identity2},
        {"measured n = 2 row and its failing ratio condition", criterion_row2},
        {"nonnegative unit rows under constant alpha = 1/2", criterion_positivity},
        {"unbounded-sequence probe matches the closed form", criterion_unbounded_probe},
        {"bounded sequences keep the sup at or below 1", criterion_bounded_control},
        {"fourier reproduction in both systems", criterion_fourier},
        {"dyadic variation, spectra, and nesting", criterion_dyadic},
        {"byte-identical reruns of every subcommand", criterion_determinism},
    };

    int failed = 0;
    int index = 0;
    const int total = static_cast<int>(std::size(criteria));
    for (const auto& [name, fn] : criteria) {
        ++index;
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        try {
            fn(checker);
        } catch (const std::exception& e) {
            checker.require(false, std::string("exception: ") + e.what());
        }
        double elapsed = seconds_since(start);
        char line[256];
        std::snprintf(line, sizeof(line), "[%2d/%d] %s  %s (%.2f s)", index, total,
                      checker.failures.empty() ? "PASS" : "FAIL", name, elapsed);
        std::cout << line << '\n';
        for (const auto& reason : checker.failures)
            std::cout << "        - " << reason << '\n';
        if (!checker.failures.empty())
            ++failed;
    }
    if (failed == 0) {
        std::cout << "acceptance: all " << total << " criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failed << " of " << total << " criteria FAILED\n";
    return 1;
}
