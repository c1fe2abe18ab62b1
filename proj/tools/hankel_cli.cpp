// Command-line front end: exact Hankel determinant sequences, H-continued
// fractions, Hankel signatures, real-root counting and the benchmark
// harness for the half-GCD pipeline.

#include <hankel/hankel.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace hankel;

struct OracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxInputBytes = 64ull << 20;
constexpr int kMaxOrder = 1000000;
constexpr int kOracleCap = 64;

void guard_input(const std::string& text) {
    if (text.size() > kMaxInputBytes)
        throw std::invalid_argument("input text exceeds 64 MiB; refusing");
}

void guard_order(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > kMaxOrder) throw std::invalid_argument("n > 10^6; refusing (desk-scale tool)");
}

struct CommonOpts {
    std::string num, den = "1", coeffs, poly;
    int n = 1;
    std::string field = "q";
    std::uint64_t modulus = kDefaultPrime;
    bool use_oracle = false;
    bool as_json = false;
};

void require_prime(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
}

template <Field F>
std::string join_dets(const std::vector<F>& dets) {
    std::string line;
    for (std::size_t i = 0; i < dets.size(); ++i) {
        if (i) line += ' ';
        line += dets[i].to_string();
    }
    return line;
}

template <Field F>
json dets_json(const HankelReport<F>& report) {
    json out;
    out["dets"] = json::array();
    for (const auto& d : report.dets) out["dets"].push_back(d.to_string());
    out["nonzero_indices"] = report.nonzero_indices;
    if (report.kronecker)
        out["kronecker_bound"] = *report.kronecker;
    else
        out["kronecker_bound"] = nullptr;
    return out;
}

// Compares against the Bareiss oracle and throws with a diff on mismatch.
template <Field F>
void cross_check(const std::vector<F>& fast, const std::vector<F>& slow, int checked) {
    for (int i = 0; i < checked; ++i) {
        const auto& a = fast[static_cast<std::size_t>(i)];
        const auto& b = slow[static_cast<std::size_t>(i)];
        if (!(a == b))
            throw OracleMismatch("oracle mismatch at H_" + std::to_string(i + 1) + ": computed " +
                                 a.to_string() + ", oracle " + b.to_string());
    }
}

template <class Scalars>
void run_dets(const CommonOpts& opt, bool oracle_only) {
    using F = typename Scalars::field_type;
    Scalars scalars = [&] {
        if constexpr (std::same_as<Scalars, FpScalars>) {
            require_prime(opt.modulus);
            return FpScalars{opt.modulus};
        } else {
            return RationalScalars{};
        }
    }();
    guard_order(opt.n);
    if (oracle_only && opt.n > kOracleCap)
        throw std::invalid_argument("oracle determinants are capped at order 64");

    HankelReport<F> report;
    std::vector<F> series;  // first 2n-1 coefficients, for the oracle
    const std::size_t window = static_cast<std::size_t>(2 * opt.n - 1);
    if (!opt.coeffs.empty()) {
        guard_input(opt.coeffs);
        // raw positional list (a trimmed Poly would lose trailing zeros)
        std::vector<F> list;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= opt.coeffs.size(); ++i) {
            if (i == opt.coeffs.size() || opt.coeffs[i] == ',') {
                list.push_back(parse_scalar(opt.coeffs.substr(start, i - start), scalars));
                start = i + 1;
            }
        }
        report = comp_hd_series<F>(list, opt.n);
        if (list.size() >= window) series.assign(list.begin(), list.begin() + window);
    } else {
        guard_input(opt.num);
        guard_input(opt.den);
        const Poly<F> num = parse_poly(opt.num, scalars);
        const Poly<F> den = parse_poly(opt.den, scalars);
        const RationalFunction<F> h(num, den);
        report = comp_hd(h, opt.n);
        if (opt.use_oracle || oracle_only) series = series_expand(h, window);
    }

    if (oracle_only) {
        const auto slow = oracles::naive_hankel_dets<F>(series, opt.n);
        if (opt.as_json) {
            json out;
            out["dets"] = json::array();
            for (const auto& d : slow) out["dets"].push_back(d.to_string());
            std::cout << out.dump() << "\n";
        } else {
            std::cout << join_dets(slow) << "\n";
        }
        return;
    }

    if (opt.use_oracle) {
        const int checked = std::min(opt.n, kOracleCap);
        const auto slow = oracles::naive_hankel_dets<F>(series, checked);
        cross_check(report.dets, slow, checked);
    }

    if (opt.as_json)
        std::cout << dets_json(report).dump() << "\n";
    else
        std::cout << join_dets(report.dets) << "\n";
}

template <class Scalars>
void run_hfrac(const CommonOpts& opt, int levels, bool check) {
    using F = typename Scalars::field_type;
    Scalars scalars = [&] {
        if constexpr (std::same_as<Scalars, FpScalars>) {
            require_prime(opt.modulus);
            return FpScalars{opt.modulus};
        } else {
            return RationalScalars{};
        }
    }();
    guard_input(opt.num);
    guard_input(opt.den);
    const Poly<F> num = parse_poly(opt.num, scalars);
    const Poly<F> den = parse_poly(opt.den, scalars);
    const RationalFunction<F> h(num, den);
    if (h.is_zero()) throw std::domain_error("zero series has the empty H-fraction");
    auto [f0, f1] = construct_f0_f1(h);
    QuotientSequence<F> q = half_gcd_quotients(f0, f1, f0.degree());
    if (levels > 0 && static_cast<std::size_t>(levels) < q.steps.size()) {
        q.steps.resize(static_cast<std::size_t>(levels));
        q.exhausted = false;
    }
    const HFraction<F> hf = to_h_fraction(q);

    int matched_through = -1;
    if (check) {
        const std::size_t order = static_cast<std::size_t>(2 * q.covered() - 1);
        const auto expanded = expand_h_fraction(hf, order);
        const auto direct = series_expand(h, order);
        for (std::size_t i = 0; i < order; ++i) {
            if (!(expanded[i] == direct[i]))
                throw OracleMismatch("H-fraction expansion differs from the series at x^" +
                                     std::to_string(i));
        }
        matched_through = static_cast<int>(order) - 1;
    }

    if (opt.as_json) {
        json out;
        out["levels"] = json::array();
        for (const auto& l : hf.levels)
            out["levels"].push_back(
                {{"v", l.v.to_string()}, {"k", l.k}, {"u", l.u.to_string()}});
        if (check) out["check_matched_through"] = matched_through;
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t j = 0; j < hf.levels.size(); ++j)
            std::cout << j << ": v=" << hf.levels[j].v.to_string() << " k=" << hf.levels[j].k
                      << " u=" << hf.levels[j].u.to_string() << "\n";
        if (check) std::cout << "matches through x^" << matched_through << "\n";
    }
}

void run_signature(const CommonOpts& opt) {
    if (opt.field != "q") throw std::domain_error("ordered field required: use --field q");
    guard_order(opt.n);
    guard_input(opt.num);
    guard_input(opt.den);
    RationalScalars scalars;
    const RationalFunction<Rational> h(parse_poly(opt.num, scalars),
                                       parse_poly(opt.den, scalars));
    const SignatureResult r = signature_via_sturm(h, opt.n);
    if (opt.as_json) {
        json out;
        out["signature"] = r.signature;
        out["order"] = r.order;
        out["methods_agree"] = true;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "signature: " << r.signature << "\n";
        std::cout << "methods: sturm-variation == frobenius (agree)\n";
    }
}

void run_roots(const CommonOpts& opt, const std::string& a_text, const std::string& b_text) {
    if (opt.field != "q") throw std::domain_error("ordered field required: use --field q");
    guard_input(opt.poly);
    RationalScalars scalars;
    const Poly<Rational> f = parse_poly(opt.poly, scalars);
    int count = 0;
    if (a_text.empty() && b_text.empty()) {
        count = count_real_roots_hankel(f);
    } else if (!a_text.empty() && !b_text.empty()) {
        const Rational a = parse_scalar(a_text, scalars);
        const Rational b = parse_scalar(b_text, scalars);
        count = count_real_roots_sturm(f, a, b);
    } else {
        throw std::invalid_argument("--a and --b must be given together");
    }
    if (opt.as_json) {
        json out;
        out["root_count"] = count;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << count << "\n";
    }
}

void run_bench(const std::string& sizes_text, std::uint64_t seed, std::uint64_t modulus,
               bool as_json) {
    require_prime(modulus);
    std::vector<int> sizes;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= sizes_text.size(); ++i) {
        if (i == sizes_text.size() || sizes_text[i] == ',') {
            sizes.push_back(std::stoi(sizes_text.substr(start, i - start)));
            start = i + 1;
        }
    }
    json results = json::array();
    std::uint64_t prev_ops = 0;
    double prev_ms = 0;
    if (!as_json)
        std::cout << "        n            ops    wall_ms  ops_ratio  wall_ratio\n";
    for (const int n : sizes) {
        if (n < 2) throw std::invalid_argument("bench sizes must be >= 2");
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
        std::uniform_int_distribution<std::uint64_t> dist(0, modulus - 1);
        std::uniform_int_distribution<std::uint64_t> nonzero(1, modulus - 1);
        const auto random_poly = [&](int deg) {
            std::vector<Fp> c;
            c.reserve(static_cast<std::size_t>(deg) + 1);
            for (int i = 0; i < deg; ++i) c.emplace_back(dist(rng), modulus);
            c.emplace_back(nonzero(rng), modulus);
            return Poly<Fp>(std::move(c));
        };
        const Poly<Fp> f0 = random_poly(n);
        const Poly<Fp> f1 = random_poly(n - 1);
        FieldOpCounter::reset();
        const auto t0 = std::chrono::steady_clock::now();
        const QuotientSequence<Fp> q = half_gcd_quotients(f0, f1, n);
        const auto dets = dets_from_quotients(q, n);
        const auto t1 = std::chrono::steady_clock::now();
        (void)dets;
        const std::uint64_t ops = FieldOpCounter::total();
        const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const double ops_ratio = prev_ops ? double(ops) / double(prev_ops) : 0.0;
        const double wall_ratio = prev_ms > 0 ? ms / prev_ms : 0.0;
        if (as_json) {
            results.push_back({{"n", n}, {"ops", ops}, {"wall_ms", ms}});
        } else {
            std::printf("%9d %14llu %10.2f %10.2f %11.2f\n", n,
                        static_cast<unsigned long long>(ops), ms, ops_ratio, wall_ratio);
        }
        prev_ops = ops;
        prev_ms = ms;
    }
    if (as_json) {
        json out;
        out["results"] = results;
        std::cout << out.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hankel determinants of rational power series via "
                 "generalized Sturm sequences and half-GCD"};
    app.require_subcommand(1);

    CommonOpts opt;
    int levels = 0;
    bool check = false;
    std::string a_text, b_text;
    std::string sizes = "1024,2048,4096,8192,16384";
    std::uint64_t seed = 42;

    const auto add_field_opts = [&](CLI::App* cmd) {
        cmd->add_option("--field", opt.field, "coefficient field: q or gfp")
            ->check(CLI::IsMember({"q", "gfp"}));
        cmd->add_option("--modulus", opt.modulus, "prime modulus for --field gfp");
        cmd->add_flag("--json", opt.as_json, "structured output");
    };

    CLI::App* dets = app.add_subcommand("dets", "Hankel determinants H_1..H_n");
    auto* dnum = dets->add_option("--num", opt.num, "numerator polynomial");
    dets->add_option("--den", opt.den, "denominator polynomial (default 1)");
    auto* dcoe = dets->add_option("--coeffs", opt.coeffs, "series coefficients, comma separated");
    dcoe->excludes(dnum);
    dets->add_option("--n", opt.n, "number of determinants")->required();
    dets->add_flag("--oracle", opt.use_oracle, "cross-check against the Bareiss oracle");
    add_field_opts(dets);

    CLI::App* odets = app.add_subcommand("oracle-dets",
                                         "determinants by the O(n^3) Bareiss oracle (order <= 64)");
    auto* onum = odets->add_option("--num", opt.num, "numerator polynomial");
    odets->add_option("--den", opt.den, "denominator polynomial (default 1)");
    auto* ocoe = odets->add_option("--coeffs", opt.coeffs, "series coefficients");
    ocoe->excludes(onum);
    odets->add_option("--n", opt.n, "number of determinants")->required();
    add_field_opts(odets);

    CLI::App* hfrac = app.add_subcommand("hfrac", "H-continued fraction of a rational series");
    hfrac->add_option("--num", opt.num, "numerator polynomial")->required();
    hfrac->add_option("--den", opt.den, "denominator polynomial (default 1)");
    hfrac->add_option("--levels", levels, "limit the number of levels (default: all)");
    hfrac->add_flag("--check", check, "verify the fraction re-expands to the series");
    add_field_opts(hfrac);

    CLI::App* sig = app.add_subcommand("signature", "signature of the order-n Hankel matrix");
    sig->add_option("--num", opt.num, "numerator polynomial")->required();
    sig->add_option("--den", opt.den, "denominator polynomial (default 1)");
    sig->add_option("--n", opt.n, "matrix order")->required();
    add_field_opts(sig);

    CLI::App* roots = app.add_subcommand("roots", "count distinct real roots");
    roots->add_option("--poly", opt.poly, "polynomial with rational coefficients")->required();
    roots->add_option("--a", a_text, "interval left endpoint (open)");
    roots->add_option("--b", b_text, "interval right endpoint (closed)");
    add_field_opts(roots);

    CLI::App* bench = app.add_subcommand("bench", "half-GCD pipeline benchmark over GF(p)");
    bench->add_option("--sizes", sizes, "comma-separated list of n");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--modulus", opt.modulus, "prime modulus");
    bench->add_flag("--json", opt.as_json, "structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dets->parsed()) {
            if (opt.coeffs.empty() && opt.num.empty())
                throw std::invalid_argument("provide --num/--den or --coeffs");
            if (opt.field == "gfp")
                run_dets<FpScalars>(opt, false);
            else
                run_dets<RationalScalars>(opt, false);
        } else if (odets->parsed()) {
            if (opt.coeffs.empty() && opt.num.empty())
                throw std::invalid_argument("provide --num/--den or --coeffs");
            if (opt.field == "gfp")
                run_dets<FpScalars>(opt, true);
            else
                run_dets<RationalScalars>(opt, true);
        } else if (hfrac->parsed()) {
            if (opt.field == "gfp")
                run_hfrac<FpScalars>(opt, levels, check);
            else
                run_hfrac<RationalScalars>(opt, levels, check);
        } else if (sig->parsed()) {
            run_signature(opt);
        } else if (roots->parsed()) {
            run_roots(opt, a_text, b_text);
        } else if (bench->parsed()) {
            run_bench(sizes, seed, opt.modulus, opt.as_json);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const OracleMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::logic_error& e) {
        // a failed internal cross-check (the two signature routes disagreeing)
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
