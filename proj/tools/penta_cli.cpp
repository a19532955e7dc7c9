// penta: command-line front end for the 5-complex library.
//
// Inputs come from inline JSON operands, from --input FILE, or from stdin
// ("-" or no operands). Results are JSON (CSV for cosexp-table).
// Exit codes: 0 success, 1 usage error, 2 domain error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "penta/penta.hpp"

namespace {

using penta::json;
using penta::PentaComplex;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string operand1, operand2;  // inline JSON; empty when absent
    std::string input;
    std::string output;
    std::optional<double> tol;
    std::size_t samples = penta::kDefaultLoopSamples;
};

const char* const kSchemas =
    "schemas:\n"
    "  number      [x0, x1, x2, x3, x4]\n"
    "  mul         [u, v] or {\"u\": number, \"v\": number}, or two inline numbers\n"
    "  pow         {\"u\": number, \"m\": real} or inline number with --exponent\n"
    "  path        {\"vertices\": [number, ...], \"closed\": bool}\n"
    "  polynomial  {\"coeffs\": [a1, ..., am], \"leading\"?: number}  (monic unless leading is given)\n";

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError("cannot parse " + what + " as JSON: " + e.what());
    }
}

/// The operand documents: each inline operand, or one document from
/// --input / stdin.
std::vector<json> documents(const Options& opt) {
    std::vector<json> docs;
    for (const std::string* op : {&opt.operand1, &opt.operand2}) {
        if (!op->empty()) docs.push_back(parse_json(*op, "operand '" + *op + "'"));
    }
    if (!docs.empty()) return docs;
    std::string text;
    if (opt.input.empty() || opt.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(opt.input);
        if (!in) throw UsageError("cannot open input file '" + opt.input + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    docs.push_back(parse_json(text, opt.input.empty() ? "stdin" : opt.input));
    return docs;
}

PentaComplex to_number(const json& j) {
    try {
        return j.get<PentaComplex>();
    } catch (const penta::Error& e) {
        if (e.kind() == penta::ErrorKind::non_finite) throw;
        throw UsageError(e.what());
    }
}

PentaComplex single_number(const Options& opt) {
    const auto docs = documents(opt);
    if (docs.size() != 1) throw UsageError("expected one number");
    if (docs[0].is_object() && docs[0].contains("u")) return to_number(docs[0]["u"]);
    return to_number(docs[0]);
}

std::pair<PentaComplex, PentaComplex> two_numbers(const Options& opt) {
    const auto docs = documents(opt);
    if (docs.size() == 2) return {to_number(docs[0]), to_number(docs[1])};
    const json& d = docs[0];
    if (docs.size() == 1 && d.is_object() && d.contains("u") && d.contains("v")) return {to_number(d["u"]), to_number(d["v"])};
    if (docs.size() == 1 && d.is_array() && d.size() == 2 && d[0].is_array()) return {to_number(d[0]), to_number(d[1])};
    throw UsageError("expected two numbers");
}

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void emit(const Options& opt, const json& j) {
    Sink sink(opt.output);
    sink.stream() << j.dump() << '\n';
}

double tolerance(const Options& opt, double fallback) {
    if (opt.tol) return *opt.tol;
    if (const char* env = std::getenv("PENTA_TOL")) {
        try {
            std::size_t used = 0;
            const double v = std::stod(env, &used);
            if (used == std::string(env).size() && v > 0.0) return v;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("PENTA_TOL is not a positive number: '") + env + "'");
    }
    return fallback;
}

const penta::NamedFunction& function_named(const std::string& name) {
    try {
        return penta::builtin_function(name);
    } catch (const penta::Error&) {
        std::string names;
        for (const auto& n : penta::builtin_function_names()) names += " " + n;
        throw UsageError("unknown function '" + name + "'; choose one of:" + names);
    }
}

int run_cosexp_table(const Options& opt, double from, double to, double step) {
    if (!(step > 0.0) || !(to >= from)) throw UsageError("cosexp-table needs --step > 0 and --to >= --from");
    const auto rows = static_cast<long long>(std::floor((to - from) / step + 1e-9)) + 1;
    Sink sink(opt.output);
    std::ostream& os = sink.stream();
    os << "y,g50,g51,g52,g53,g54\n";
    char buf[32];
    for (long long i = 0; i < rows; ++i) {
        const double y = from + static_cast<double>(i) * step;
        std::snprintf(buf, sizeof buf, "%.17g", y);
        os << buf;
        for (int k = 0; k < 5; ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", penta::g5_closed(k, y));
            os << ',' << buf;
        }
        os << '\n';
    }
    return 0;
}

int run_selftest(const Options& opt) {
    Sink sink(opt.output);
    std::ostream& os = sink.stream();
    int passed = 0;
    const auto results = penta::selftest::run_all();
    for (const auto& r : results) {
        char line[64];
        std::snprintf(line, sizeof line, "[%s] %2d %-32s %8.3f s  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                      r.seconds);
        os << line << r.detail << '\n';
        passed += r.passed ? 1 : 0;
    }
    os << passed << "/" << results.size() << " suites passed\n";
    return passed == static_cast<int>(results.size()) ? 0 : 2;
}

json roots_json(const std::vector<std::complex<double>>& roots) {
    json out = json::array();
    for (auto r : roots) out.push_back({r.real(), r.imag()});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic, functions, integrals and factorization of 5-complex numbers"};
    app.require_subcommand(1);
    app.footer(kSchemas);

    Options opt;
    double exponent = 0.0;
    std::string fn_name;
    std::string pole_text;
    std::string order = "both";
    double from = -4.0, to = 4.0, step = 0.05;

    auto add_common = [&opt](CLI::App* sub, bool operands = true) {
        // Scalar positionals: CLI11 would split a bracketed vector argument.
        if (operands) {
            sub->add_option("operand", opt.operand1, "inline JSON operand");
            sub->add_option("second", opt.operand2, "second inline JSON operand (mul)");
        }
        sub->add_option("-i,--input", opt.input, "input file, or - for stdin");
        sub->add_option("-o,--output", opt.output, "output file (default stdout)");
        sub->add_option("--tol", opt.tol, "agreement tolerance (overrides PENTA_TOL)");
        sub->add_option("--samples", opt.samples, "quadrature samples per loop")->check(CLI::PositiveNumber);
    };

    auto* mul = app.add_subcommand("mul", "product of two numbers");
    auto* inv = app.add_subcommand("inv", "multiplicative inverse");
    auto* canonical = app.add_subcommand("canonical", "canonical components {vplus, v1, tv1, v2, tv2}");
    auto* polar = app.add_subcommand("polar", "modulus, amplitude, radii and angles");
    auto* exp = app.add_subcommand("exp", "exponential");
    auto* log = app.add_subcommand("log", "principal logarithm");
    auto* pow = app.add_subcommand("pow", "real power u^m");
    auto* trig = app.add_subcommand("trig", "cos, sin, cosh, sinh");
    auto* table = app.add_subcommand("cosexp-table", "CSV of y, g50..g54");
    auto* analytic = app.add_subcommand("check-analytic", "derivative relations of a builtin function at a point");
    auto* integrate = app.add_subcommand("integrate", "path integral, or both sides of the residue relation with --pole");
    auto* factor = app.add_subcommand("factor", "factor a polynomial");
    auto* selftest = app.add_subcommand("selftest", "run the identity suites of every module");

    for (auto* sub : {mul, inv, canonical, polar, exp, log, pow, trig, analytic, factor}) add_common(sub);
    add_common(integrate, false);
    add_common(table, false);
    add_common(selftest, false);
    pow->add_option("-m,--exponent", exponent, "real exponent");
    trig->add_option("--fn", fn_name, "cos, sin, cosh or sinh (default: all four)");
    analytic->add_option("--fn", fn_name, "builtin function")->required();
    analytic->add_option("--order", order, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
    integrate->add_option("--fn", fn_name, "builtin function")->required();
    integrate->add_option("--pole", pole_text, "pole u0 as inline JSON");
    table->add_option("--from", from, "first y");
    table->add_option("--to", to, "last y");
    table->add_option("--step", step, "y increment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << kSchemas;
        return 1;
    }

    try {
        if (*mul) {
            const auto [u, v] = two_numbers(opt);
            emit(opt, penta::multiply(u, v));
        } else if (*inv) {
            emit(opt, penta::inverse(single_number(opt)));
        } else if (*canonical) {
            emit(opt, penta::to_canonical(single_number(opt)));
        } else if (*polar) {
            emit(opt, penta::polar_form(single_number(opt)));
        } else if (*exp) {
            emit(opt, penta::exp(single_number(opt)));
        } else if (*log) {
            emit(opt, penta::log(single_number(opt)));
        } else if (*pow) {
            const auto docs = documents(opt);
            PentaComplex u;
            double m = exponent;
            if (docs.size() == 1 && docs[0].is_object()) {
                if (!docs[0].contains("u")) throw UsageError("pow expects {\"u\": number, \"m\": real}");
                u = to_number(docs[0]["u"]);
                if (docs[0].contains("m")) m = docs[0]["m"].get<double>();
            } else if (docs.size() == 1) {
                u = to_number(docs[0]);
            } else {
                throw UsageError("pow expects one number");
            }
            emit(opt, penta::pow_real(u, m));
        } else if (*trig) {
            const PentaComplex u = single_number(opt);
            if (fn_name.empty()) {
                emit(opt, json{{"cos", penta::cos(u)}, {"sin", penta::sin(u)}, {"cosh", penta::cosh(u)},
                               {"sinh", penta::sinh(u)}});
            } else if (fn_name == "cos" || fn_name == "sin" || fn_name == "cosh" || fn_name == "sinh") {
                emit(opt, penta::builtin_function(fn_name).fn(u));
            } else {
                throw UsageError("trig --fn must be cos, sin, cosh or sinh");
            }
        } else if (*table) {
            return run_cosexp_table(opt, from, to, step);
        } else if (*analytic) {
            const auto& f = function_named(fn_name).fn;
            const PentaComplex point = single_number(opt);
            json out{{"function", fn_name}, {"point", point}};
            bool passed = true;
            if (order != "2") {
                const auto r = penta::check_cr_relations(f, point, penta::kFirstOrderStep,
                                                         tolerance(opt, penta::kFirstOrderTolerance));
                out["first_order"] = r;
                passed = passed && r.passed;
            }
            if (order != "1") {
                const auto r = penta::check_second_order(f, point);
                out["second_order"] = r;
                passed = passed && r.passed;
            }
            out["passed"] = passed;
            emit(opt, out);
        } else if (*integrate) {
            const auto& f = function_named(fn_name).fn;
            const auto docs = documents(opt);
            const penta::Path path = penta::path_from_json(docs.at(0));
            const std::size_t per_segment = penta::samples_for_loop(opt.samples, path.segment_count());
            if (pole_text.empty()) {
                emit(opt, json{{"function", fn_name},
                               {"integral", penta::integrate(f, path, per_segment)},
                               {"samples_per_segment", per_segment}});
            } else {
                const PentaComplex u0 = to_number(parse_json(pole_text, "--pole"));
                const auto r = penta::residue_formula(f, path, u0, opt.samples);
                json out = r;
                const double tol = tolerance(opt, 1e-5);
                out["function"] = fn_name;
                out["tolerance"] = tol;
                out["agree"] = r.error() <= tol;
                emit(opt, out);
            }
        } else if (*factor) {
            const auto docs = documents(opt);
            const penta::PentaPolynomial p = penta::polynomial_from_json(docs.at(0));
            const auto f = penta::factor(p);
            emit(opt, json{{"factors", f.factors},
                           {"residual", f.residual},
                           {"roots",
                            {{"vplus", roots_json(f.roots.vplus_roots)},
                             {"plane1", roots_json(f.roots.plane1_roots)},
                             {"plane2", roots_json(f.roots.plane2_roots)}}}});
        } else if (*selftest) {
            return run_selftest(opt);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n' << kSchemas;
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n' << kSchemas;
        return 1;
    } catch (const penta::Error& e) {
        if (e.kind() == penta::ErrorKind::invalid_argument) {
            std::cerr << "usage error: " << e.what() << '\n' << kSchemas;
            return 1;
        }
        std::cerr << json{{"error", std::string(penta::to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }
    return 0;
}
