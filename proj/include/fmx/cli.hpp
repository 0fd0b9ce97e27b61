#pragma once

// Command-line frontend: measure specifications in JSON, exact outputs as rational
// strings, exit codes 0 (success/pass), 1 (check evaluated and failed), 2 (invalid input).

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fmx/fmx.hpp"

namespace fmx::cli {

using ojson = nlohmann::ordered_json;

enum class Format { json, csv, table };

struct RunConfig {
    std::size_t order = default_order;
    Format format = Format::json;
    double tolerance = 1e-10;
};

/// Exactly one of a Jacobi description, a moment list, or free Meixner parameters.
using MeasureSpec = std::variant<JacobiParams, MomentSeq, MeixnerParams>;

class usage_error : public error {
public:
    using error::error;
};

namespace detail {

inline Rational rational_of(const nlohmann::json& v, const std::string& where)
{
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(mpz_class(v.dump(), 10));
    throw parse_error(where + ": expected a rational string such as \"3/4\"");
}

inline std::vector<Rational> rationals_of(const nlohmann::json& v, const std::string& where)
{
    if (!v.is_array()) throw parse_error(where + ": expected a list");
    std::vector<Rational> r;
    r.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r.push_back(rational_of(v[i], where + "[" + std::to_string(i) + "]"));
    return r;
}

inline void only_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed, const std::string& where)
{
    for (const auto& [k, _] : obj.items())
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
            throw parse_error(where + ": unknown field \"" + k + "\"");
}

inline ojson strings(const std::vector<Rational>& v)
{
    ojson a = ojson::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

inline ojson poly_json(const Poly& p)
{
    // the zero polynomial prints as ["0"]
    return p.is_zero() ? ojson::array({"0"}) : strings(p.coeffs());
}

inline ojson params_json(const MeixnerParams& p) { return ojson{{"a", to_string(p.a())}, {"b", to_string(p.b())}}; }

inline ojson witness_json(const std::optional<Witness>& w)
{
    if (!w) return nullptr;
    return ojson{{"index", w->index}, {"expected", to_string(w->expected)}, {"actual", to_string(w->actual)}};
}

} // namespace detail

inline MeasureSpec parse_measure(const nlohmann::json& j)
{
    using detail::only_keys;
    using detail::rationals_of;
    if (!j.is_object()) throw parse_error("measure: expected a JSON object");
    const int present = int(j.contains("jacobi")) + int(j.contains("moments")) + int(j.contains("meixner"));
    if (present != 1 || j.size() != 1)
        throw parse_error("measure: exactly one of \"jacobi\", \"moments\", \"meixner\" must be given");

    if (j.contains("meixner")) {
        const auto& m = j["meixner"];
        if (!m.is_object() || !m.contains("a") || !m.contains("b")) throw parse_error("meixner: need \"a\" and \"b\"");
        only_keys(m, {"a", "b"}, "meixner");
        return MeixnerParams(detail::rational_of(m["a"], "meixner.a"), detail::rational_of(m["b"], "meixner.b"));
    }
    if (j.contains("moments")) {
        const auto& m = j["moments"];
        if (!m.is_object() || !m.contains("values")) throw parse_error("moments: need \"values\"");
        only_keys(m, {"values"}, "moments");
        return MomentSeq(rationals_of(m["values"], "moments.values"));
    }
    const auto& d = j["jacobi"];
    if (!d.is_object()) throw parse_error("jacobi: expected an object");
    only_keys(d, {"alpha", "omega", "tail"}, "jacobi");
    std::vector<Rational> omega = d.contains("omega") ? rationals_of(d["omega"], "jacobi.omega") : std::vector<Rational>{};
    std::optional<JacobiTail> tail;
    if (d.contains("tail")) {
        const auto& t = d["tail"];
        if (!t.is_object() || !t.contains("alpha") || !t.contains("omega"))
            throw parse_error("jacobi.tail: need \"alpha\" and \"omega\"");
        only_keys(t, {"alpha", "omega"}, "jacobi.tail");
        tail = JacobiTail{detail::rational_of(t["alpha"], "jacobi.tail.alpha"),
                          detail::rational_of(t["omega"], "jacobi.tail.omega")};
    }
    std::vector<Rational> alpha;
    if (d.contains("alpha"))
        alpha = rationals_of(d["alpha"], "jacobi.alpha");
    else if (!tail)
        alpha.assign(omega.size() + 1, Rational(0)); // symmetric finite Jacobi matrix
    return JacobiParams(std::move(alpha), std::move(omega), std::move(tail));
}

/// "-" reads stdin, text starting with '{' is inline JSON, anything else is a file path.
inline MeasureSpec load_measure(const std::string& arg, std::istream& in)
{
    std::string text;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (arg == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else if (first != std::string::npos && arg[first] == '{') {
        text = arg;
    } else {
        std::ifstream f(arg);
        if (!f) throw usage_error("cannot open measure file \"" + arg + "\"");
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("measure JSON: ") + e.what());
    }
    return parse_measure(j);
}

namespace detail {

inline JacobiParams jacobi_of(const MeasureSpec& spec)
{
    if (auto p = std::get_if<MeixnerParams>(&spec)) return meixner_jacobi(*p);
    if (auto J = std::get_if<JacobiParams>(&spec)) return *J;
    return moments_to_jacobi(std::get<MomentSeq>(spec)).params;
}

/// Moments m_0 .. m_n with n = min(N, what the data supports).
inline MomentSeq moments_of(const MeasureSpec& spec, std::size_t N)
{
    if (auto m = std::get_if<MomentSeq>(&spec)) return m->truncated(std::min(N, m->order()));
    const JacobiParams J = jacobi_of(spec);
    const std::size_t n = std::min(N, J.moment_capacity().value_or(N));
    return jacobi_to_moments(J, n);
}

inline std::optional<MeixnerParams> meixner_of(const MeasureSpec& spec)
{
    if (auto p = std::get_if<MeixnerParams>(&spec)) return *p;
    return classify_mrm(jacobi_of(spec));
}

inline MeixnerParams require_meixner(const MeasureSpec& spec, const std::string& what)
{
    auto p = meixner_of(spec);
    if (!p) throw usage_error(what + " requires a free Meixner measure");
    return *p;
}

inline void emit_sequence(std::ostream& out, const std::vector<Rational>& v, Format f, std::size_t first_index,
                          const char* name)
{
    switch (f) {
    case Format::json: out << strings(v).dump() << '\n'; break;
    case Format::csv:
        out << "n," << name << '\n';
        for (std::size_t i = 0; i < v.size(); ++i) out << first_index + i << ',' << to_string(v[i]) << '\n';
        break;
    case Format::table: {
        std::size_t w = 1;
        for (const auto& q : v) w = std::max(w, to_string(q).size());
        out << std::left << std::setw(4) << "n" << name << '\n';
        for (std::size_t i = 0; i < v.size(); ++i)
            out << std::left << std::setw(4) << first_index + i << std::right << std::setw(static_cast<int>(w))
                << to_string(v[i]) << '\n';
        break;
    }
    }
}

inline void emit_object(std::ostream& out, const ojson& obj, Format f)
{
    if (f == Format::json) {
        out << obj.dump() << '\n';
        return;
    }
    const char sep = f == Format::csv ? ',' : '\t';
    for (const auto& [k, v] : obj.items()) out << k << sep << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

inline std::string format_g9(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
    return buf;
}

} // namespace detail

inline int cmd_moments(const MeasureSpec& spec, const RunConfig& cfg, std::ostream& out)
{
    detail::emit_sequence(out, detail::moments_of(spec, cfg.order).values(), cfg.format, 0, "moment");
    return 0;
}

inline int cmd_cumulants(const MeasureSpec& spec, const RunConfig& cfg, std::ostream& out)
{
    const CumulantSeries R = moments_to_R(detail::moments_of(spec, cfg.order));
    detail::emit_sequence(out, R.kappas(), cfg.format, 1, "kappa");
    return 0;
}

inline int cmd_ortho(const MeasureSpec& spec, const RunConfig& cfg, std::ostream& out)
{
    const JacobiParams J = detail::jacobi_of(spec);
    std::size_t count = cfg.order;
    if (!J.tail()) {
        count = std::min(count, J.head_alpha().size());
        // recovered from moments: omega past the recovered ones is unknown, not zero
        const auto term = J.termination_level();
        if (std::holds_alternative<MomentSeq>(spec) && term && *term > J.head_omega().size())
            count = std::min(count, J.head_omega().size());
    }
    const OrthoBasis b = ortho_polys(J, count);
    if (cfg.format == Format::json) {
        ojson polys = ojson::array();
        for (const auto& p : b.polys) polys.push_back(detail::poly_json(p));
        out << ojson{{"order", count}, {"polys", polys}, {"norms", detail::strings(b.norms)}}.dump() << '\n';
    } else {
        const char sep = cfg.format == Format::csv ? ',' : '\t';
        out << "n" << sep << "norm" << sep << "coefficients\n";
        for (std::size_t n = 0; n <= count; ++n) {
            out << n << sep << to_string(b.norms[n]) << sep;
            const auto c = detail::poly_json(b.polys[n]);
            for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k].get<std::string>();
            out << '\n';
        }
    }
    return 0;
}

inline int cmd_psi(const MeasureSpec& spec, const RunConfig& cfg, const std::optional<RhoCandidate>& rho_arg,
                   std::ostream& out)
{
    const MomentSeq m = detail::moments_of(spec, cfg.order);
    const std::size_t N = m.order();
    if (N < 1) throw usage_error("psi needs order >= 1");
    TruncSeries rho = TruncSeries::identity(N);
    if (rho_arg) {
        rho = rho_family(*rho_arg, N);
    } else if (auto p = detail::meixner_of(spec)) {
        rho = meixner_rho(*p, N);
    }
    const RenormGF psi = build_psi(m, rho, N);
    ojson q = ojson::array();
    for (const auto& p : psi.q_polys) q.push_back(detail::poly_json(p));
    ojson obj{{"order", N}, {"rho", detail::strings({rho.coeffs().begin(), rho.coeffs().end()})}, {"q_polys", q}};
    if (cfg.format == Format::json)
        out << obj.dump() << '\n';
    else
        detail::emit_object(out, obj, cfg.format);
    return 0;
}

inline int cmd_check(const std::string& kind, const MeasureSpec& spec, const RunConfig& cfg, std::ostream& out)
{
    ojson obj;
    obj["check"] = kind;
    std::size_t N = cfg.order;
    Verdict v;
    if (kind == "akk") {
        if (auto p = std::get_if<MeixnerParams>(&spec)) {
            const MomentSeq m = meixner_moments(*p, 2 * N);
            v = akk_verdict(m, build_psi(m, meixner_rho(*p, N), N));
            obj["params"] = detail::params_json(*p);
            obj["order"] = N;
            obj["pass"] = v.pass;
            obj["witness"] = detail::witness_json(v.witness);
        } else {
            const MomentSeq all = detail::moments_of(spec, 2 * N);
            N = std::min(N, all.order() / 2);
            if (N < 1) throw usage_error("akk needs at least 3 moments");
            const RhoSearchResult r = search_rho(all.truncated(2 * N), N, rational_grid(3, 4));
            v.pass = r.passing.has_value();
            obj["params"] = nullptr;
            obj["order"] = N;
            obj["pass"] = v.pass;
            obj["witness"] = nullptr;
            obj["rho"] = r.passing ? ojson{{"s", to_string(r.passing->s)}, {"t", to_string(r.passing->t)}} : ojson(nullptr);
            obj["candidates"] = r.candidates;
        }
    } else if (kind == "phi" || kind == "levy" || kind == "negb" || kind == "diffq") {
        const MeixnerParams p = detail::require_meixner(spec, "check " + kind);
        if (kind == "phi") {
            v = phi_identity_verdict(p, N);
        } else if (kind == "levy") {
            if (p.b() < 0) throw usage_error("check levy needs b >= 0 (use negb)");
            v = levy_representation_verdict(p, N);
        } else if (kind == "negb") {
            if (p.b() >= 0) throw usage_error("check negb needs -1 <= b < 0 (use levy)");
            v = negative_b_verdict(p, N);
        } else {
            v = phi_diff_quotient_verdict(p, N);
        }
        obj["params"] = detail::params_json(p);
        obj["order"] = N;
        obj["pass"] = v.pass;
        obj["witness"] = detail::witness_json(v.witness);
    } else {
        throw usage_error("unknown check \"" + kind + "\" (expected akk, phi, levy, negb, diffq)");
    }
    detail::emit_object(out, obj, cfg.format);
    return v.pass ? 0 : 1;
}

inline int cmd_classify(const MeasureSpec& spec, const RunConfig& cfg, std::ostream& out)
{
    std::optional<MeixnerParams> p;
    if (auto m = std::get_if<MomentSeq>(&spec))
        p = classify_mrm(moments_to_jacobi(m->truncated(std::min(cfg.order, m->order()))).params);
    else
        p = detail::meixner_of(spec);
    ojson obj{{"meixner", p.has_value()}};
    if (p) {
        obj["a"] = to_string(p->a());
        obj["b"] = to_string(p->b());
    }
    detail::emit_object(out, obj, cfg.format);
    return 0;
}

struct DensityGrid {
    double xmin = -3.0;
    double xmax = 3.0;
    std::size_t npts = 601;
};

inline int cmd_density(const MeasureSpec& spec, const DensityGrid& grid, const RunConfig& cfg, std::ostream& out)
{
    if (!std::holds_alternative<MeixnerParams>(spec)) throw usage_error("density needs a meixner measure");
    const MeixnerParams& p = std::get<MeixnerParams>(spec);
    if (p.b() == -1) throw usage_error("purely atomic; no continuous density");
    if (grid.npts < 2 || !(grid.xmin < grid.xmax)) throw usage_error("density grid needs npts >= 2 and xmin < xmax");
    out << "x,density\n";
    const double h = (grid.xmax - grid.xmin) / static_cast<double>(grid.npts - 1);
    for (std::size_t i = 0; i < grid.npts; ++i) {
        const double x = i + 1 == grid.npts ? grid.xmax : grid.xmin + h * static_cast<double>(i);
        out << detail::format_g9(x) << ',' << detail::format_g9(density_numeric(p, x, cfg.tolerance)) << '\n';
    }
    return 0;
}

/// Runs one invocation; args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact free Meixner / multiplicative renormalization toolkit", "fmx"};
    app.require_subcommand(1);

    std::string measure;
    long long order = static_cast<long long>(default_order);
    std::string format = "json";
    double tolerance = 1e-10;
    std::string kind;
    DensityGrid grid;
    std::string rho_text;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--measure", measure, "measure JSON: inline, file path, or - for stdin")->required();
        sub->add_option("--order", order, "truncation order (count for ortho)")->capture_default_str();
        sub->add_option("--format", format, "json | csv | table")
            ->check(CLI::IsMember({"json", "csv", "table"}))
            ->capture_default_str();
        sub->add_option("--tolerance", tolerance, "tolerance for numeric subcommands")->capture_default_str();
    };
    auto* moments = app.add_subcommand("moments", "moment sequence m_0..m_N");
    auto* cumulants = app.add_subcommand("cumulants", "free cumulants kappa_1..kappa_N");
    auto* ortho = app.add_subcommand("ortho", "monic orthogonal polynomials P_0..P_N and norms");
    auto* check = app.add_subcommand("check", "exact identity checks");
    auto* classify = app.add_subcommand("classify", "is the measure free Meixner?");
    auto* density = app.add_subcommand("density", "density of a free Meixner law on a grid (CSV)");
    auto* psi = app.add_subcommand("psi", "renormalized generating function coefficients Q_n");
    for (auto* s : {moments, cumulants, ortho, check, classify, density, psi}) common(s);
    check->add_option("kind", kind, "akk | phi | levy | negb | diffq")->required();
    density->add_option("--xmin", grid.xmin)->capture_default_str();
    density->add_option("--xmax", grid.xmax)->capture_default_str();
    density->add_option("--npts", grid.npts)->capture_default_str();
    psi->add_option("--rho", rho_text, "s,t for rho(z) = z/(1 + s z + t z^2)");

    std::vector<char*> argv;
    std::vector<std::string> storage(args.begin(), args.end());
    if (storage.empty()) storage.emplace_back("fmx");
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        const bool count_like = ortho->parsed();
        if (order < (count_like ? 0 : 1)) throw usage_error("--order must be a positive integer");
        cfg.order = static_cast<std::size_t>(order);
        cfg.format = format == "csv" ? Format::csv : format == "table" ? Format::table : Format::json;
        if (!(tolerance > 0)) throw usage_error("--tolerance must be positive");
        cfg.tolerance = tolerance;
        const MeasureSpec spec = load_measure(measure, in);

        if (moments->parsed()) return cmd_moments(spec, cfg, out);
        if (cumulants->parsed()) return cmd_cumulants(spec, cfg, out);
        if (ortho->parsed()) return cmd_ortho(spec, cfg, out);
        if (check->parsed()) return cmd_check(kind, spec, cfg, out);
        if (classify->parsed()) return cmd_classify(spec, cfg, out);
        if (density->parsed()) return cmd_density(spec, grid, cfg, out);
        if (psi->parsed()) {
            std::optional<RhoCandidate> rho;
            if (!rho_text.empty()) {
                const auto comma = rho_text.find(',');
                if (comma == std::string::npos) throw usage_error("--rho expects s,t");
                rho = RhoCandidate{parse_rational(rho_text.substr(0, comma)), parse_rational(rho_text.substr(comma + 1))};
            }
            return cmd_psi(spec, cfg, rho, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace fmx::cli
