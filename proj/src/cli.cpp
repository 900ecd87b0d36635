#include "pyrageo/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "pyrageo/bundled.hpp"
#include "pyrageo/classical.hpp"
#include "pyrageo/dsl/interpreter.hpp"
#include "pyrageo/dsl/parser.hpp"
#include "pyrageo/dsl/svg.hpp"
#include "pyrageo/metrology.hpp"

namespace pyrageo::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string line_printf(const char* spec, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, spec, args...);
    return buf;
}

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw UsageError("unknown format '" + s + "' (expected text, csv or json)");
}

// Decimal degrees ("54.46222") or degrees:minutes:seconds ("54:27:44").
geom::Angle parse_angle_flag(const std::string& s) {
    static const std::regex dms(R"(^\s*(\d+):(\d+):(\d+(?:\.\d*)?)\s*$)");
    std::smatch m;
    double deg = 0.0;
    if (std::regex_match(s, m, dms)) {
        const int d = std::stoi(m[1]);
        const int mi = std::stoi(m[2]);
        const double sec = std::stod(m[3]);
        if (mi >= 60 || sec >= 60.0) throw UsageError("angle '" + s + "': minutes and seconds must be below 60");
        deg = d + mi / 60.0 + sec / 3600.0;
    } else {
        std::size_t used = 0;
        try {
            deg = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw UsageError("angle '" + s + "' is neither decimal degrees nor d:m:s");
    }
    if (!(deg > 0.0 && deg < 180.0)) throw UsageError("angle must lie strictly between 0 and 180 degrees");
    return geom::Angle::from_degrees(deg);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
    std::string dataset;
    std::string claims;
    std::vector<std::string> only;
    std::string format = "text";
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    std::string dataset_text(bundled::dataset_json());
    std::string dataset_origin = "<bundled dataset>";
    if (!o.dataset.empty()) {
        auto t = read_file(o.dataset);
        if (!t) throw metrology::InputError(o.dataset + ": cannot read dataset file");
        dataset_text = *t;
        dataset_origin = o.dataset;
    }
    std::string claims_text(bundled::claims_json());
    std::string claims_origin = "<bundled claims>";
    if (!o.claims.empty()) {
        auto t = read_file(o.claims);
        if (!t) throw metrology::InputError(o.claims + ": cannot read claims file");
        claims_text = *t;
        claims_origin = o.claims;
    }
    const auto data = metrology::parse_dataset_json(dataset_text, dataset_origin);
    auto claims = metrology::parse_claims_json(claims_text, claims_origin);
    if (!o.only.empty()) {
        std::vector<metrology::Claim> picked;
        for (const auto& id : o.only) {
            auto it = std::find_if(claims.begin(), claims.end(), [&](const auto& c) { return c.id == id; });
            if (it == claims.end()) throw UsageError("unknown claim id '" + id + "'");
            picked.push_back(*it);
        }
        claims = std::move(picked);
    }
    const auto report = metrology::run_suite(claims, data);
    switch (fmt) {
        case Format::Text: out << metrology::format_text(report); break;
        case Format::Csv: out << metrology::format_csv(report); break;
        case Format::Json: out << metrology::format_json(report); break;
    }
    return report.all_pass() ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// trisect

struct TrisectOpts {
    std::string angle;
    double unit = 100.0;
    std::optional<int> iters;
    double eps = classical::kDefaultTrisectionEpsDeg;
    std::string format = "text";
};

void print_trace(const classical::TrisectionTrace& tr, Format fmt, bool fixed, std::ostream& out) {
    const double theta = tr.theta.degrees();
    if (fmt == Format::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : tr.rows) {
            rows.push_back({{"label", r.label},
                            {"ix", r.ix},
                            {"cx", r.cx},
                            {"height_t", r.height_t},
                            {"proj_at", r.proj_at},
                            {"third_deg", r.third_deg}});
        }
        nlohmann::json doc = {{"theta", theta},
                              {"unit", tr.unit},
                              {"rows", rows},
                              {"converged", tr.converged},
                              {"final_third", tr.final_third.degrees()}};
        out << doc.dump(2) << "\n";
        return;
    }
    if (fmt == Format::Csv) {
        out << "cycle,ix,cx,height_t,proj_at,third_deg\n";
        for (const auto& r : tr.rows) {
            out << line_printf("%s,%.5f,%.5f,%.5f,%.5f,%.5f\n", r.label.c_str(), r.ix, r.cx, r.height_t, r.proj_at,
                               r.third_deg);
        }
        return;
    }
    out << line_printf("theta %.5f deg (%s), unit %.5f\n", theta, geom::to_string(tr.theta.to_dms()).c_str(),
                       tr.unit);
    out << line_printf("%-6s %12s %12s %12s %12s %12s\n", "cycle", "IXn", "CXn", "height_Tn", "proj_ATn", "third_deg");
    for (const auto& r : tr.rows) {
        out << line_printf("%-6s %12.5f %12.5f %12.5f %12.5f %12.5f\n", r.label.c_str(), r.ix, r.cx, r.height_t,
                           r.proj_at, r.third_deg);
    }
    out << line_printf("final third %.5f deg, theta/3 %.5f deg, %s\n", tr.final_third.degrees(), theta / 3.0,
                       fixed ? "fixed cycle count" : (tr.converged ? "converged" : "not converged"));
}

int cmd_trisect(const TrisectOpts& o, std::ostream& out) {
    const Format fmt = parse_format(o.format);
    const geom::Angle theta = parse_angle_flag(o.angle);
    if (!(o.unit > 0.0)) throw UsageError("--unit must be positive");
    if (!(o.eps > 0.0)) throw UsageError("--eps must be positive");
    if (o.iters) {
        if (*o.iters < 0) throw UsageError("--iters must be non-negative");
        print_trace(classical::trisect_cycles(theta, o.unit, *o.iters, o.eps), fmt, true, out);
        return kExitPass;
    }
    const auto tr = classical::trisect_iterative(theta, o.unit, o.eps);
    print_trace(tr, fmt, false, out);
    return tr.converged ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// triples

int cmd_triples(int count, std::ostream& out) {
    if (count < 1) throw UsageError("--count must be at least 1");
    std::vector<classical::Triple> ts;
    try {
        ts = classical::consecutive_leg_triples(count);
    } catch (const std::overflow_error& e) {
        throw UsageError(std::string(e.what()) + "; use a smaller --count");
    }
    for (const auto& t : ts) out << t.a << ',' << t.b << ',' << t.c << '\n';
    return kExitPass;
}

// ---------------------------------------------------------------------------
// run

struct RunOpts {
    std::string script;
    std::string render;
};

int cmd_run(const RunOpts& o, std::ostream& out, std::ostream& err) {
    std::string source;
    if (auto t = read_file(o.script)) {
        source = *t;
    } else if (auto b = bundled::script(o.script)) {
        source = std::string(*b);
    } else {
        err << o.script << ": cannot read script file\n";
        return kExitInputError;
    }
    dsl::EvalResult result;
    try {
        result = dsl::evaluate(dsl::parse(source));
    } catch (const dsl::Diagnostic& d) {
        err << d.format(o.script) << "\n";
        return kExitInputError;
    }
    std::size_t passed = 0;
    for (const auto& a : result.assertions) {
        passed += a.pass ? 1 : 0;
        out << line_printf("%s %d:%d ", a.pass ? "PASS" : "FAIL", a.pos.line, a.pos.column) << a.text
            << line_printf("  actual=%.10g expected=%.10g\n", a.actual, a.expected);
    }
    out << result.assertions.size() << " assertions, " << passed << " passed\n";
    if (!o.render.empty()) {
        std::ofstream svg(o.render, std::ios::binary);
        if (!svg) {
            err << o.render << ": cannot write SVG output\n";
            return kExitInputError;
        }
        svg << dsl::render_svg(result.env);
    }
    return result.pass() ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ruler-and-compass and metrology verification toolkit", "pyrageo"};
    app.require_subcommand(1);

    VerifyOpts verify;
    auto* v = app.add_subcommand("verify", "Evaluate the claim registry against a measurement dataset");
    v->add_option("--dataset", verify.dataset, "Dataset JSON (default: bundled)");
    v->add_option("--claims", verify.claims, "Claims JSON (default: bundled)");
    v->add_option("--claim", verify.only, "Only evaluate this claim id (repeatable)");
    v->add_option("--format", verify.format, "text, csv or json");

    TrisectOpts trisect;
    auto* t = app.add_subcommand("trisect", "Iterative trisection trace");
    t->add_option("--angle", trisect.angle, "Angle in decimal degrees or d:m:s")->required();
    t->add_option("--unit", trisect.unit, "Length of AC (default 100)");
    t->add_option("--iters", trisect.iters, "Run exactly this many cycles after S");
    t->add_option("--eps", trisect.eps, "Convergence threshold in degrees");
    t->add_option("--format", trisect.format, "text, csv or json");

    int count = 0;
    auto* tr = app.add_subcommand("triples", "Consecutive-leg Pythagorean triples");
    tr->add_option("--count", count, "Number of triples")->required();

    RunOpts runo;
    auto* r = app.add_subcommand("run", "Evaluate a .geo construction script");
    r->add_option("script", runo.script, "Script path or bundled script name")->required();
    r->add_option("--render", runo.render, "Write the construction as SVG");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitInputError;
    }

    try {
        if (v->parsed()) return cmd_verify(verify, out);
        if (t->parsed()) return cmd_trisect(trisect, out);
        if (tr->parsed()) return cmd_triples(count, out);
        if (r->parsed()) return cmd_run(runo, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const metrology::InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace pyrageo::cli
