/*
   Copyright 2026 The plethys authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <plethys/construct.hpp>
#include <plethys/io.hpp>
#include <plethys/polylog.hpp>
#include <plethys/verify.hpp>

namespace {

using namespace plethys;

// ---------------------------------------------------------------------------
// options

struct CommonOpts {
    std::string backend;  // per-command default filled in later
    unsigned bits = 256;
    bool bits_given = false;
    std::string format = "csv";
    std::string out;
    long seed = 0;  // reserved for randomized sweeps; no command consumes it yet
};

struct AlphaOpts {
    std::string family;
    double s = 0.0;
    double s_imag = 0.0;
    std::string constant_value;
    std::string alphas_inline;
    std::string alphas_file;
};

struct SolveOpts {
    std::string method = "aberth";
    unsigned max_iter = 200;
    double tol = 0.0;  // 0 picks the backend default
    unsigned threads = 0;
};

Backend parse_backend(const std::string& text) {
    if (text == "rational") {
        return Backend::Rational;
    }
    if (text == "complex64") {
        return Backend::Complex64;
    }
    if (text == "bigcomplex") {
        return Backend::BigComplex;
    }
    throw InputError("unknown backend '" + text + "' (rational|complex64|bigcomplex)");
}

RootSolveConfig make_solve_config(const SolveOpts& opts, Backend backend, unsigned bits) {
    RootSolveConfig cfg;
    if (opts.method == "aberth") {
        cfg.method = RootSolveConfig::Method::Aberth;
    } else if (opts.method == "companion") {
        cfg.method = RootSolveConfig::Method::Companion;
    } else {
        throw InputError("unknown method '" + opts.method + "' (aberth|companion)");
    }
    cfg.max_iterations = opts.max_iter;
    cfg.precision_bits = bits;
    if (opts.tol > 0.0) {
        cfg.convergence_tol = opts.tol;
    } else if (backend == Backend::BigComplex) {
        // default residual acceptance tracks the working precision, with
        // headroom over the evaluation noise floor
        cfg.convergence_tol = std::ldexp(1.0, -static_cast<int>(bits) + 30);
    }
    return cfg;
}

// "2,5,7" and "2..50" (inclusive), mixed freely.
std::vector<unsigned> parse_n_list(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) {
            throw InputError("empty entry in degree list '" + text + "'");
        }
        const auto dots = token.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(static_cast<unsigned>(std::stoul(token)));
            } else {
                const unsigned lo = static_cast<unsigned>(std::stoul(token.substr(0, dots)));
                const unsigned hi = static_cast<unsigned>(std::stoul(token.substr(dots + 2)));
                if (hi < lo) {
                    throw InputError("descending range '" + token + "'");
                }
                for (unsigned n = lo; n <= hi; ++n) {
                    out.push_back(n);
                }
            }
        } catch (const std::logic_error&) {
            throw InputError("malformed degree list entry '" + token + "'");
        }
    }
    if (out.empty()) {
        throw InputError("degree list '" + text + "' is empty");
    }
    return out;
}

// ---------------------------------------------------------------------------
// alpha parsing

double json_number(const nlohmann::json& v, const char* what) {
    if (!v.is_number()) {
        throw InputError(std::string("expected a number for ") + what);
    }
    return v.get<double>();
}

template <class T>
T parse_alpha_value(const nlohmann::json& v, unsigned bits) {
    if constexpr (backend_of_v<T> == Backend::Rational) {
        (void)bits;
        if (v.is_number_integer()) {
            return Rational(v.get<long>());
        }
        if (v.is_string()) {
            return rational_from_string(v.get<std::string>());
        }
        throw InputError("rational targets must be integers or \"num/den\" strings");
    } else if constexpr (backend_of_v<T> == Backend::Complex64) {
        (void)bits;
        if (v.is_number()) {
            return Complex64{v.get<double>(), 0.0};
        }
        if (v.is_array() && v.size() == 2) {
            return Complex64{json_number(v[0], "re"), json_number(v[1], "im")};
        }
        throw InputError("complex64 targets must be numbers or [re, im] pairs");
    } else {
        auto part = [bits](const nlohmann::json& x, const char* what) {
            if (x.is_string()) {
                return BigFloat::from_string(x.get<std::string>(), bits);
            }
            return BigFloat(json_number(x, what), bits);
        };
        if (v.is_number() || v.is_string()) {
            return BigComplex(part(v, "re"), BigFloat(bits));
        }
        if (v.is_array() && v.size() == 2) {
            return BigComplex(part(v[0], "re"), part(v[1], "im"));
        }
        throw InputError("bigcomplex targets must be numbers, decimal strings, or [re, im]");
    }
}

template <class T>
std::vector<T> parse_alpha_array(const std::string& text, unsigned bits) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed alpha list: ") + e.what());
    }
    if (!doc.is_array()) {
        throw InputError("alpha list must be a JSON array");
    }
    std::vector<T> values;
    values.reserve(doc.size());
    for (const auto& v : doc) {
        values.push_back(parse_alpha_value<T>(v, bits));
    }
    return values;
}

template <class T>
AlphaSequence<T> resolve_alpha(const AlphaOpts& opts, unsigned bits) {
    const int sources = (!opts.family.empty()) + (!opts.alphas_inline.empty()) +
                        (!opts.alphas_file.empty());
    if (sources != 1) {
        throw InputError("need exactly one alpha source: --family, --alphas, or --alphas-file");
    }
    if (!opts.family.empty()) {
        if (opts.family == "polylog") {
            if constexpr (backend_of_v<T> == Backend::Rational) {
                if (opts.s_imag != 0.0 || opts.s != std::floor(opts.s)) {
                    throw InputError(
                        "the polylog family in the rational backend needs integer s");
                }
                return polylog_alpha_rational(static_cast<long>(opts.s));
            } else if constexpr (backend_of_v<T> == Backend::Complex64) {
                return polylog_alpha({opts.s, opts.s_imag});
            } else {
                return polylog_alpha({opts.s, opts.s_imag}, bits);
            }
        }
        if (opts.family == "constant") {
            if (opts.constant_value.empty()) {
                throw InputError("the constant family needs --c");
            }
            if constexpr (backend_of_v<T> == Backend::Rational) {
                return AlphaSequence<T>::constant(rational_from_string(opts.constant_value));
            } else if constexpr (backend_of_v<T> == Backend::Complex64) {
                std::size_t pos = 0;
                const double c = std::stod(opts.constant_value, &pos);
                if (pos != opts.constant_value.size()) {
                    throw InputError("malformed constant '" + opts.constant_value + "'");
                }
                return AlphaSequence<T>::constant({c, 0.0});
            } else {
                return AlphaSequence<T>::constant(
                    BigComplex(BigFloat::from_string(opts.constant_value, bits), BigFloat(bits)));
            }
        }
        throw InputError("unknown family '" + opts.family + "' (polylog|constant)");
    }
    const std::string text = !opts.alphas_inline.empty() ? opts.alphas_inline
                                                         : io::read_alpha_file(opts.alphas_file);
    return AlphaSequence<T>::explicit_values(parse_alpha_array<T>(text, bits));
}

// ---------------------------------------------------------------------------
// scalar formatting

std::string scalar_text(const Rational& q) {
    return to_string(q);
}

std::string scalar_text(const Complex64& z) {
    if (z.imag() == 0.0) {
        return io::format_double(z.real());
    }
    const std::string im = io::format_double(z.imag());
    return io::format_double(z.real()) + (im[0] == '-' ? "" : "+") + im + "i";
}

std::string scalar_text(const BigComplex& z) {
    return z.to_string();
}

std::string deviation_text(const Rational& dev) {
    return to_string(dev);
}
std::string deviation_text(double dev) {
    return io::format_double(dev);
}
std::string deviation_text(const BigFloat& dev) {
    return io::format_double(dev.to_double());
}

template <class T>
bool deviation_exact(const magnitude_t<T>& dev) {
    if constexpr (backend_of_v<T> == Backend::Rational) {
        return is_zero(dev);
    } else {
        return magnitude_to_double(dev) < 1e-8;
    }
}

// ---------------------------------------------------------------------------
// commands

template <class T>
io::Table cmd_build(const AlphaSequence<T>& alpha, unsigned n) {
    const auto real = build_polynomial(alpha, n);
    io::Table t;
    t.kind = "coeffs";
    t.columns = {"j", "a_j"};
    for (unsigned j = 0; j <= n; ++j) {
        t.rows.push_back({std::to_string(j), scalar_text(real.poly[j])});
    }
    return t;
}

template <class T>
io::Table cmd_verify(const AlphaSequence<T>& alpha, const std::vector<unsigned>& n_list,
                     unsigned k_max, const RootSolveConfig& cfg) {
    const auto reports = verification_table(alpha, n_list, k_max, cfg);
    io::Table t;
    t.kind = "verify";
    t.columns = {"n", "k", "value", "target", "deviation", "exact"};
    for (const auto& report : reports) {
        for (unsigned k = 1; k <= k_max; ++k) {
            const bool has_target = k <= report.targets.size();
            t.rows.push_back(
                {std::to_string(report.n), std::to_string(k), scalar_text(report.values[k - 1]),
                 has_target ? scalar_text(report.targets[k - 1]) : "",
                 has_target ? deviation_text(report.deviations[k - 1]) : "",
                 has_target ? (deviation_exact<T>(report.deviations[k - 1]) ? "1" : "0") : ""});
        }
    }
    return t;
}

template <class T>
io::Table cmd_roots(const AlphaSequence<T>& alpha, const std::vector<unsigned>& n_list,
                    const RootSolveConfig& cfg) {
    if constexpr (backend_of_v<T> == Backend::Rational) {
        throw InputError("root extraction needs a float backend (complex64 or bigcomplex)");
    } else {
        io::Table t;
        t.kind = "roots";
        t.columns = {"n", "re", "im", "multiplicity", "residual"};
        for (unsigned n : n_list) {
            auto real = build_polynomial(alpha, n);
            RootMultiset<T> rm;
            try {
                rm = find_roots(real, cfg);
            } catch (ConvergenceError& e) {
                throw ConvergenceError("degree " + std::to_string(n) + ": " + e.what(),
                                       std::move(e.best_roots), std::move(e.residuals));
            }
            for (std::size_t i = 0; i < rm.roots.size(); ++i) {
                std::string re_text;
                std::string im_text;
                if constexpr (backend_of_v<T> == Backend::BigComplex) {
                    re_text = rm.roots[i].real().to_string();
                    im_text = rm.roots[i].imag().to_string();
                } else {
                    re_text = io::format_double(rm.roots[i].real());
                    im_text = io::format_double(rm.roots[i].imag());
                }
                t.rows.push_back({std::to_string(n), re_text, im_text,
                                  std::to_string(rm.multiplicities[i]),
                                  deviation_text(rm.residuals[i])});
            }
        }
        return t;
    }
}

template <class T>
io::Table cmd_heatmap(const AlphaSequence<T>& alpha, unsigned n_max, unsigned k_max,
                      const RootSolveConfig& cfg, unsigned threads) {
    if constexpr (backend_of_v<T> == Backend::Rational) {
        throw InputError("the heatmap needs a float backend (complex64 or bigcomplex)");
    } else {
        const ErrorMatrix em = error_matrix(alpha, n_max, k_max, cfg, threads);
        io::Table t;
        t.kind = "heatmap";
        t.columns = {"n", "k", "log10_error"};
        for (unsigned n = 1; n <= n_max; ++n) {
            for (unsigned k = 1; k <= k_max; ++k) {
                const double v = em.at(n, k);
                t.rows.push_back({std::to_string(n), std::to_string(k),
                                  std::isnan(v) ? "nan" : io::format_double(v)});
            }
        }
        return t;
    }
}

io::Table cmd_oeis(long s, unsigned count, const std::string& b_file_path) {
    if (s > 0) {
        throw InputError("the integer-sequence families need integer s <= 0");
    }
    const auto real = build_polynomial(polylog_alpha_rational(s), count);
    const auto b = scaled_integer_coefficients(real);

    io::Table t;
    t.kind = "oeis";
    if (b_file_path.empty()) {
        t.columns = {"j", "b_j"};
        for (unsigned j = 0; j < b.size(); ++j) {
            t.rows.push_back({std::to_string(j), b[j].get_str()});
        }
        return t;
    }

    const auto reference = io::read_b_file(b_file_path);
    t.columns = {"j", "b_j", "reference", "match"};
    for (unsigned j = 0; j < b.size(); ++j) {
        std::string ref_text = "missing";
        std::string match = "missing";
        for (const auto& entry : reference) {
            if (entry.index == static_cast<long long>(j)) {
                ref_text = entry.value.get_str();
                match = (entry.value == b[j]) ? "yes" : "no";
                break;
            }
        }
        t.rows.push_back({std::to_string(j), b[j].get_str(), ref_text, match});
    }
    return t;
}

std::string closed_form_label(long s) {
    if (s == 1) {
        return "-log(1-x)";
    }
    if (s >= 2) {
        return "Li_" + std::to_string(s) + "(x)";
    }
    const unsigned m = static_cast<unsigned>(-s);
    const auto a = eulerian_polynomial(m);
    std::string num = "x";
    if (a.coeffs.size() > 1) {
        num += "(";
        for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
            const std::string c = a.coeffs[j].get_str();
            if (j == 0) {
                num += c;
            } else {
                num += "+";
                if (c != "1") {
                    num += c;
                }
                num += "x";
                if (j > 1) {
                    num += "^" + std::to_string(j);
                }
            }
        }
        num += ")";
    }
    std::string den = "/(1-x)";
    if (m + 1 > 1) {
        den += "^" + std::to_string(m + 1);
    }
    return num + den;
}

std::string alpha_label(long s) {
    const long e = 1 - s;
    if (e == 0) {
        return "1";
    }
    if (e == 1) {
        return "k";
    }
    if (e > 1) {
        return "k^" + std::to_string(e);
    }
    if (e == -1) {
        return "1/k";
    }
    return "1/k^" + std::to_string(-e);
}

io::Table cmd_table1() {
    io::Table t;
    t.kind = "table1";
    t.columns = {"s", "alpha_k", "closed_form", "a_0", "a_1", "a_2", "a_3", "a_4"};
    for (long s = -3; s <= 3; ++s) {
        const auto real = build_polynomial(polylog_alpha_rational(s), 4);
        std::vector<std::string> row{std::to_string(s), alpha_label(s), closed_form_label(s)};
        for (unsigned j = 0; j <= 4; ++j) {
            row.push_back(to_string(real.poly[j]));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

io::Table cmd_zeta(double s, const std::vector<unsigned>& n_list, unsigned bits) {
    const auto record = zeta_convergence(s, n_list, bits);
    io::Table t;
    t.kind = "zeta";
    t.columns = {"n", "value", "target", "deviation"};
    for (const auto& row : record.rows) {
        t.rows.push_back({std::to_string(row.n), row.value.to_string(),
                          record.target.to_string(), io::format_double(row.deviation.to_double())});
    }
    return t;
}

// ---------------------------------------------------------------------------
// plumbing

void emit(const io::Table& table, const CommonOpts& common) {
    const io::Format format = io::parse_format(common.format);
    if (common.out.empty()) {
        io::write_table(std::cout, table, format);
        return;
    }
    std::ofstream out(common.out);
    if (!out) {
        throw InputError("cannot open output file '" + common.out + "'");
    }
    io::write_table(out, table, format);
}

void emit_plot_script(const std::string& script_path, const std::string& csv_path) {
    std::ofstream out(script_path);
    if (!out) {
        throw InputError("cannot open plot script path '" + script_path + "'");
    }
    out << "# gnuplot script; reads the heatmap CSV (n, k, log10_error)\n"
        << "set datafile separator ','\n"
        << "set datafile commentschars '#'\n"
        << "set xlabel 'k'\n"
        << "set ylabel 'n'\n"
        << "set yrange [*:*] reverse\n"
        << "set cblabel 'log10 |p_{-k} - alpha_k|'\n"
        << "set cbrange [-16:4]\n"
        << "set palette defined (-16 'white', -8 'white', -7.999 'skyblue', 0 'orange', 4 "
           "'dark-red')\n"
        << "set view map\n"
        << "splot '" << csv_path << "' every ::1 using 2:1:3 with points pt 5 ps 0.6 palette "
        << "notitle\n"
        << "pause -1 'press enter to close'\n";
}

template <class Fn>
io::Table dispatch_backend(Backend backend, Fn&& fn) {
    switch (backend) {
        case Backend::Rational:
            return fn(std::type_identity<Rational>{});
        case Backend::Complex64:
            return fn(std::type_identity<Complex64>{});
        case Backend::BigComplex:
            return fn(std::type_identity<BigComplex>{});
    }
    throw ContractError("unreachable backend");
}

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--backend", common.backend, "coefficient backend")
        ->check(CLI::IsMember({"rational", "complex64", "bigcomplex"}));
    cmd->add_option("--bits", common.bits, "bigcomplex precision in bits")
        ->check(CLI::Range(64u, 65536u))
        ->each([&common](const std::string&) { common.bits_given = true; });
    cmd->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", common.out, "output path (default: stdout)");
    cmd->add_option("--seed", common.seed,
                    "seed reserved for randomized sweeps; current outputs do not depend on it");
}

void add_alpha(CLI::App* cmd, AlphaOpts& alpha) {
    cmd->add_option("--family", alpha.family, "alpha family (polylog|constant)");
    cmd->add_option("--s", alpha.s, "polylog parameter s (alpha_k = k^(1-s))");
    cmd->add_option("--s-imag", alpha.s_imag, "imaginary part of s (float backends)");
    cmd->add_option("--c", alpha.constant_value, "constant family value");
    cmd->add_option("--alphas", alpha.alphas_inline, "inline JSON array of targets");
    cmd->add_option("--alphas-file", alpha.alphas_file,
                    "file with a '# plethys:alphas:1' tag line followed by a JSON array");
}

void add_solve(CLI::App* cmd, SolveOpts& solve) {
    cmd->add_option("--method", solve.method, "root method (aberth|companion)")
        ->check(CLI::IsMember({"aberth", "companion"}));
    cmd->add_option("--max-iter", solve.max_iter, "iteration budget")->check(CLI::Range(1u, 1000000u));
    cmd->add_option("--tol", solve.tol, "residual acceptance factor (0 = backend default)");
    cmd->add_option("--threads", solve.threads, "worker threads for sweeps (0 = auto)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "plethys: power-sum prescribed polynomials via the truncated exponential of the "
        "log-generating series"};
    app.require_subcommand(1);

    CommonOpts common;
    AlphaOpts alpha;
    SolveOpts solve;

    unsigned n = 0;
    std::string n_list_text;
    unsigned k_max = 6;
    unsigned n_max = 0;
    long oeis_s = 0;
    unsigned oeis_count = 0;
    std::string b_file_path;
    std::string plot_script;
    double zeta_s = 0.0;

    auto* build = app.add_subcommand("build", "emit the coefficients of P_n");
    add_common(build, common);
    add_alpha(build, alpha);
    build->add_option("--n", n, "truncation degree")->required();

    auto* verify = app.add_subcommand("verify", "power sums of the roots against the targets");
    add_common(verify, common);
    add_alpha(verify, alpha);
    add_solve(verify, solve);
    verify->add_option("--n-list", n_list_text, "degrees, e.g. 2,3,4,5 or 2..50")->required();
    verify->add_option("--k-max", k_max, "largest power-sum index")->required();

    auto* roots = app.add_subcommand("roots", "root multisets of P_n");
    add_common(roots, common);
    add_alpha(roots, alpha);
    add_solve(roots, solve);
    auto* roots_n = roots->add_option("--n", n, "single degree");
    auto* roots_n_list = roots->add_option("--n-list", n_list_text, "degree sweep, e.g. 2..50");
    roots_n->excludes(roots_n_list);

    auto* heatmap = app.add_subcommand("heatmap", "log10 deviation grid over (n, k)");
    add_common(heatmap, common);
    add_alpha(heatmap, alpha);
    add_solve(heatmap, solve);
    heatmap->add_option("--n-max", n_max, "largest degree")->required();
    heatmap->add_option("--k-max", k_max, "largest power-sum index")->required();
    heatmap->add_option("--plot-script", plot_script, "also write a gnuplot script here");

    auto* oeis = app.add_subcommand("oeis", "factorial-scaled integer coefficients b_j = j! a_j");
    add_common(oeis, common);
    oeis->add_option("--s", oeis_s, "family parameter (integer <= 0)")->required();
    oeis->add_option("--count", oeis_count, "largest index to emit")->required();
    oeis->add_option("--b-file", b_file_path, "OEIS b-file to match against");

    auto* table1 = app.add_subcommand("table1", "the polylog family for s = -3..3 through x^4");
    add_common(table1, common);

    auto* zeta = app.add_subcommand("zeta", "P_n(1) convergence toward exp(-zeta(s))");
    add_common(zeta, common);
    zeta->add_option("--s", zeta_s, "real s > 1")->required();
    zeta->add_option("--n-list", n_list_text, "ascending degrees, e.g. 10,20,40,80")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (common.backend.empty()) {
            // Per-command defaults. A --bits request on a float-backend
            // command means the caller wants extended precision.
            if (*roots || *heatmap) {
                common.backend = common.bits_given ? "bigcomplex" : "complex64";
            } else if (*zeta) {
                common.backend = "bigcomplex";
            } else {
                common.backend = "rational";
            }
        }
        const Backend backend = parse_backend(common.backend);
        const RootSolveConfig cfg = make_solve_config(solve, backend, common.bits);

        io::Table table;
        if (*build) {
            table = dispatch_backend(backend, [&](auto tag) {
                using T = typename decltype(tag)::type;
                return cmd_build(resolve_alpha<T>(alpha, common.bits), n);
            });
        } else if (*verify) {
            const auto n_list = parse_n_list(n_list_text);
            table = dispatch_backend(backend, [&](auto tag) {
                using T = typename decltype(tag)::type;
                return cmd_verify(resolve_alpha<T>(alpha, common.bits), n_list, k_max, cfg);
            });
        } else if (*roots) {
            if (roots_n->count() == 0 && roots_n_list->count() == 0) {
                throw InputError("roots needs --n or --n-list");
            }
            const auto n_list =
                roots_n->count() ? std::vector<unsigned>{n} : parse_n_list(n_list_text);
            table = dispatch_backend(backend, [&](auto tag) {
                using T = typename decltype(tag)::type;
                return cmd_roots(resolve_alpha<T>(alpha, common.bits), n_list, cfg);
            });
        } else if (*heatmap) {
            table = dispatch_backend(backend, [&](auto tag) {
                using T = typename decltype(tag)::type;
                return cmd_heatmap(resolve_alpha<T>(alpha, common.bits), n_max, k_max, cfg,
                                   solve.threads);
            });
            if (!plot_script.empty()) {
                emit_plot_script(plot_script,
                                 common.out.empty() ? "heatmap.csv" : common.out);
            }
        } else if (*oeis) {
            table = cmd_oeis(oeis_s, oeis_count, b_file_path);
        } else if (*table1) {
            table = cmd_table1();
        } else if (*zeta) {
            table = cmd_zeta(zeta_s, parse_n_list(n_list_text), common.bits);
        } else {
            throw ContractError("no subcommand selected");
        }
        emit(table, common);
        return 0;
    } catch (const ConvergenceError& e) {
        std::cerr << "error (non-convergence): " << e.what() << "\n";
        return 3;
    } catch (const IntegralityError& e) {
        std::cerr << "error (invariant violation): " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
