/*
 * somos: command-line front end.
 *
 * Commands:
 *   expand     coefficients of y(z) or Q(z)
 *   hankel     Hankel determinants s_0..s_n of Q
 *   transform  iterated coefficient states and the running product
 *   somos      Somos-4 terms from 1, 1, 2, 3
 *   verify     full cross-validation report
 *
 * Exit codes: 0 success/pass, 1 verification failure, 2 usage error, 3 I/O error.
 */

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "somos/coeff_state.hpp"
#include "somos/hankel.hpp"
#include "somos/rational.hpp"
#include "somos/report_io.hpp"
#include "somos/series.hpp"
#include "somos/somos4.hpp"
#include "somos/sulanke_xin.hpp"
#include "somos/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr std::size_t kMaxOrder = 10000;
constexpr std::size_t kMaxDirectN = 200;
constexpr std::size_t kMaxCofactorN = 20;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "plain";
    std::string path;
};

int emit(const Output& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << out.path << " for writing\n";
        return kExitIo;
    }
    file << text;
    file.flush();
    if (!file) {
        std::cerr << "error: write to " << out.path << " failed\n";
        return kExitIo;
    }
    return kExitOk;
}

std::string render_listing(const Output& out, const somos::Json& meta, const std::vector<somos::Rational>& values,
                           const std::string& value_name) {
    if (out.format == "json") {
        somos::Json j = meta;
        j["values"] = somos::Json::array();
        for (const auto& v : values) j["values"].push_back(v.str());
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    if (out.format == "csv") {
        os << "index," << value_name << "\n";
        for (std::size_t k = 0; k < values.size(); ++k) os << k << ',' << values[k] << '\n';
    } else {
        for (std::size_t k = 0; k < values.size(); ++k) os << (k ? "," : "") << values[k];
        os << '\n';
    }
    return os.str();
}

int cmd_expand(const Output& out, std::size_t order, const std::string& what) {
    if (order < 1) throw UsageError("--order must be at least 1");
    const somos::Series y = somos::solve_fundamental(what == "q" ? order + 2 : order);
    const somos::Series s = what == "q" ? somos::q_from_y(y) : y;
    const std::vector<somos::Rational> coeffs(s.coeffs().begin(), s.coeffs().end());
    return emit(out, render_listing(out, {{"command", "expand"}, {"what", what}, {"order", order}}, coeffs, "coefficient"));
}

int cmd_hankel(const Output& out, std::size_t n, const std::string& method_name) {
    const auto method = somos::parse_det_method(method_name);
    const std::size_t limit = method == somos::DetMethod::cofactor ? kMaxCofactorN : kMaxDirectN;
    if (n > limit) throw UsageError("--n " + std::to_string(n) + " exceeds the bound " + std::to_string(limit) + " for " + method_name);
    const somos::Series q = somos::q_from_y(somos::solve_fundamental(n == 0 ? 2 : 2 * n));
    const auto results = somos::det_sequence(q, n, method);
    if (out.format == "csv") {
        std::ostringstream os;
        os << "n,det,method\n";
        for (const auto& r : results) os << r.n << ',' << r.det << ',' << somos::to_string(r.method) << '\n';
        return emit(out, os.str());
    }
    std::vector<somos::Rational> dets;
    somos::Json methods = somos::Json::array();
    for (const auto& r : results) {
        dets.push_back(r.det);
        methods.push_back(std::string(somos::to_string(r.method)));
    }
    return emit(out, render_listing(out, {{"command", "hankel"}, {"n", n}, {"method", method_name}, {"methods", methods}}, dets, "det"));
}

somos::CoeffState parse_state(const std::string& text) {
    std::vector<somos::Rational> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(somos::Rational::parse(item));
    if (parts.size() != 6) throw UsageError("--start expects six comma-separated rationals a,b,c,d,e,f");
    return somos::CoeffState{0, parts[0], parts[1], parts[2], parts[3], parts[4], parts[5]};
}

int cmd_transform(const Output& out, std::size_t steps, const std::optional<std::string>& start) {
    const somos::CoeffState seed = start ? parse_state(*start) : somos::somos_seed_state();
    std::vector<somos::CoeffState> states{seed};
    bool halted = seed.a.is_zero();
    while (!halted && states.size() <= steps) {
        states.push_back(somos::coeff_step(states.back()));
        if (states.back().a.is_zero()) halted = true;
    }
    // Row n carries det_product(states, n); it needs a_0..a_{n-1} only.
    std::vector<somos::Rational> products;
    for (std::size_t n = 0; n < states.size(); ++n) products.push_back(somos::det_product(states, n));

    std::ostringstream os;
    if (out.format == "json") {
        somos::Json j{{"command", "transform"}, {"steps", steps}, {"c", seed.c.str()}, {"e", "-1"}, {"e0", seed.e.str()}};
        j["rows"] = somos::Json::array();
        for (std::size_t n = 0; n < states.size(); ++n) {
            const auto& s = states[n];
            j["rows"].push_back({{"n", n}, {"a", s.a.str()}, {"b", s.b.str()}, {"d", s.d.str()}, {"f", s.f.str()}, {"product", products[n].str()}});
        }
        j["halted"] = halted;
        os << j.dump(2) << '\n';
    } else if (out.format == "csv") {
        os << "n,a,b,d,f,product\n";
        for (std::size_t n = 0; n < states.size(); ++n) {
            const auto& s = states[n];
            os << n << ',' << s.a << ',' << s.b << ',' << s.d << ',' << s.f << ',' << products[n] << '\n';
        }
    } else {
        os << "c = " << seed.c << ", e_0 = " << seed.e << ", e_n = -1 for n >= 1\n";
        os << "n\ta\tb\td\tf\tproduct\n";
        for (std::size_t n = 0; n < states.size(); ++n) {
            const auto& s = states[n];
            os << n << '\t' << s.a << '\t' << s.b << '\t' << s.d << '\t' << s.f << '\t' << products[n] << '\n';
        }
    }
    const int rc = emit(out, os.str());
    if (rc != kExitOk) return rc;
    if (halted) {
        std::cerr << "error: transformation undefined (a = 0) at step " << states.size() - 1 << "\n";
        return kExitFail;
    }
    return kExitOk;
}

int cmd_somos(const Output& out, std::size_t count) {
    return emit(out, render_listing(out, {{"command", "somos"}, {"count", count}}, somos::somos_sequence(count), "s"));
}

int cmd_verify(const Output& out, const somos::VerifyOptions& opt, bool catalan) {
    if (!catalan && opt.n_max < 3) throw UsageError("--n must be at least 3");
    if (catalan && opt.n_max < 1) throw UsageError("--n must be at least 1");
    const somos::VerifyReport report = catalan ? somos::run_catalan_fixture(opt.n_max) : somos::run_somos_verification(opt);
    std::string text;
    if (out.format == "json") text = somos::to_json(report).dump(2) + "\n";
    else if (out.format == "csv") text = somos::to_csv(report);
    else text = somos::to_plain(report);
    const int rc = emit(out, text);
    if (rc != kExitOk) return rc;
    if (!report.overall) {
        std::cerr << "verification failed: " << report.first_failure.value_or("unknown") << "\n";
        return kExitFail;
    }
    return kExitOk;
}

void add_output_options(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd->add_option("--output", out.path, "Write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Somos-4 Hankel determinant toolkit"};
    app.require_subcommand(1);

    Output out;

    std::size_t order = 6;
    std::string what = "y";
    auto* expand = app.add_subcommand("expand", "Coefficients of y(z) or Q(z) = (y - z)/z^2");
    expand->add_option("--order", order, "Truncation order")->required()->check(CLI::Range(std::size_t{0}, kMaxOrder));
    expand->add_option("--what", what, "Series to expand")->check(CLI::IsMember({"y", "q"}));
    add_output_options(expand, out);

    std::size_t hankel_n = 0;
    std::string method = "bareiss";
    auto* hankel = app.add_subcommand("hankel", "Hankel determinants s_0..s_n of Q");
    hankel->add_option("--n", hankel_n, "Largest dimension")->required()->check(CLI::Range(std::size_t{0}, kMaxDirectN));
    hankel->add_option("--method", method, "Determinant algorithm")->check(CLI::IsMember({"bareiss", "condensation", "cofactor"}));
    add_output_options(hankel, out);

    std::size_t steps = 0;
    std::optional<std::string> start;
    auto* transform = app.add_subcommand("transform", "Iterate the coefficient transformation");
    transform->add_option("--steps", steps, "Number of steps")->required()->check(CLI::Range(std::size_t{0}, kMaxOrder));
    transform->add_option("--start", start, "Seed state a,b,c,d,e,f (default 1,-1,-2,0,-1,0)");
    add_output_options(transform, out);

    std::size_t count = 0;
    auto* somos_cmd = app.add_subcommand("somos", "Somos-4 terms s_0..s_count");
    somos_cmd->add_option("--count", count, "Last index")->required()->check(CLI::Range(std::size_t{0}, kMaxOrder));
    add_output_options(somos_cmd, out);

    somos::VerifyOptions vopt;
    std::size_t corrupt = 0;
    std::string fixture = "somos";
    auto* verify = app.add_subcommand("verify", "Cross-validate all routes and identity suites");
    verify->add_option("--n", vopt.n_max, "Largest index")->required()->check(CLI::Range(std::size_t{0}, kMaxOrder));
    verify->add_option("--seed", vopt.seed, "Random seed");
    verify->add_option("--det-cap", vopt.determinant_cap, "Cap for the direct determinant route")->check(CLI::Range(std::size_t{0}, kMaxDirectN));
    verify->add_option("--fixture", fixture, "Which fixture to run")->check(CLI::IsMember({"somos", "catalan"}));
    auto* corrupt_opt = verify->add_option("--corrupt-q", corrupt, "Fault injection: add 1 to q_k");
    add_output_options(verify, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*expand) return cmd_expand(out, order, what);
        if (*hankel) return cmd_hankel(out, hankel_n, method);
        if (*transform) return cmd_transform(out, steps, start);
        if (*somos_cmd) return cmd_somos(out, count);
        if (*verify) {
            if (*corrupt_opt) vopt.corrupt_q = corrupt;
            return cmd_verify(out, vopt, fixture == "catalan");
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
