#include <algorithm>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbidim/orbidim.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using orbidim::Rational;
using cdouble = std::complex<double>;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_complex(const cdouble& c) {
    std::string out = format_double(c.real());
    out += (c.imag() < 0 || std::signbit(c.imag())) ? "-" : "+";
    out += format_double(std::abs(c.imag()));
    out += "i";
    return out;
}

double parse_double_strict(const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw orbidim::parse_error("bad numeric literal '" + text + "'", 0, "a decimal number");
    }
    if (used != text.size())
        throw orbidim::parse_error("bad numeric literal '" + text + "'", used,
                                   "end of number");
    return v;
}

// Complex literals in a+bi form: "1", "-2.5", "i", "-i", "3i", "1+2i",
// "1e-3-2.5i". Whitespace is ignored.
cdouble parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw orbidim::parse_error("empty complex literal", 0, "a+bi");
    if (s.back() != 'i' && s.back() != 'I') return {parse_double_strict(s), 0.0};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t p = s.size(); p-- > 1;) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string imag_part = split == std::string::npos ? s : s.substr(split);
    double re = real_part.empty() ? 0.0 : parse_double_strict(real_part);
    double im;
    if (imag_part.empty() || imag_part == "+")
        im = 1.0;
    else if (imag_part == "-")
        im = -1.0;
    else
        im = parse_double_strict(imag_part);
    return {re, im};
}

orbidim::lawton::Mat3<cdouble> parse_matrix(const std::vector<std::string>& entries,
                                            const char* which) {
    if (entries.size() != 9)
        throw orbidim::validation_error(std::string("matrix ") + which +
                                        " needs exactly 9 entries, got " +
                                        std::to_string(entries.size()));
    orbidim::lawton::Mat3<cdouble> m{};
    for (int i = 0; i < 9; ++i) m[i] = parse_complex(entries[i]);
    return m;
}

// Result of one verb: a structured payload plus a plain-text rendering and,
// for tabular verbs, rows for the tsv format.
struct Output {
    ordered_json payload = ordered_json::object();
    std::vector<std::string> assumptions;
    std::vector<std::string> text;
    std::vector<std::vector<std::string>> rows;
    bool failed = false;  // emit output, then exit 1
};

std::string scalar_to_string(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void emit(const Output& out, const std::string& format) {
    if (format == "json") {
        ordered_json record;
        record["schema_version"] = "1";
        record["payload"] = out.payload;
        record["assumptions"] = out.assumptions;
        std::cout << record.dump(2) << "\n";
        return;
    }
    if (format == "tsv") {
        if (!out.rows.empty()) {
            for (const auto& row : out.rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    std::cout << (i ? "\t" : "") << row[i];
                std::cout << "\n";
            }
        } else {
            for (const auto& [key, value] : out.payload.items())
                std::cout << key << "\t" << scalar_to_string(value) << "\n";
        }
        return;
    }
    for (const std::string& line : out.text) std::cout << line << "\n";
    for (const std::string& a : out.assumptions) std::cout << "assumption: " << a << "\n";
}

ordered_json rational_json(const Rational& r) { return r.str(); }

// ---- verb handlers ----

Output run_chi(const std::string& sig) {
    auto o = orbidim::orbifold::parse_signature(sig);
    Rational chi = orbidim::orbifold::euler_char(o);
    Output out;
    out.payload["orbifold"] = sig;
    out.payload["canonical"] = orbidim::orbifold::render_signature(o);
    out.payload["chi"] = rational_json(chi);
    out.text = {"chi(" + orbidim::orbifold::render_signature(o) + ") = " + chi.str()};
    return out;
}

Output run_classify(const std::string& sig) {
    auto o = orbidim::orbifold::parse_signature(sig);
    auto geom = orbidim::orbifold::classify_geometry(o);
    Rational chi = orbidim::orbifold::euler_char(o);
    Output out;
    out.payload["orbifold"] = sig;
    out.payload["canonical"] = orbidim::orbifold::render_signature(o);
    out.payload["geometry"] = orbidim::orbifold::geometry_name(geom);
    out.payload["chi"] = rational_json(chi);
    out.text = {orbidim::orbifold::render_signature(o) + ": " +
                orbidim::orbifold::geometry_name(geom) + " (chi = " + chi.str() + ")"};
    return out;
}

Output run_stab(const std::string& group, const std::string& kind, int k) {
    auto g = orbidim::lie::parse(group);
    std::int64_t dim = kind == "cyclic" ? orbidim::centralizer::stab_dim_cyclic(g, k)
                                        : orbidim::centralizer::stab_dim_dihedral(g, k);
    Output out;
    out.payload["group"] = orbidim::lie::render(g);
    out.payload["kind"] = kind;
    out.payload["k"] = k;
    out.payload["dimension"] = dim;
    out.text = {"dim fix(" + kind + " k=" + std::to_string(k) + ", " +
                orbidim::lie::render(g) + ") = " + std::to_string(dim)};
    return out;
}

Output run_hitchin(const std::string& group, const std::string& sig) {
    auto g = orbidim::lie::parse(group);
    auto o = orbidim::orbifold::parse_signature(sig);
    auto report = orbidim::dimension::hitchin_dim(o, g);
    Output out;
    out.payload["orbifold"] = sig;
    out.payload["canonical"] = orbidim::orbifold::render_signature(o);
    out.payload["group"] = orbidim::lie::render(g);
    out.payload["dimension"] = report.value;
    ordered_json trace = ordered_json::array();
    for (const auto& entry : report.trace) trace.push_back({entry.label, entry.value});
    out.payload["trace"] = trace;
    out.text = {"dim Hit(" + orbidim::orbifold::render_signature(o) + ", " +
                orbidim::lie::render(g) + ") = " + std::to_string(report.value)};
    for (const auto& entry : report.trace)
        out.text.push_back("  " + entry.label + " = " + std::to_string(entry.value));
    return out;
}

Output run_euclidean(const std::string& group, const std::string& sig) {
    auto g = orbidim::lie::parse(group);
    auto cls = orbidim::orbifold::parse_euclidean(sig);
    Output out;
    out.payload["orbifold"] = orbidim::orbifold::euclidean_name(cls);
    out.payload["group"] = orbidim::lie::render(g);
    out.payload["char_dim"] = orbidim::dimension::euclidean_char_dim(cls, g);
    out.payload["invariant_dim"] = orbidim::dimension::euclidean_invariant_dim(cls, g);
    out.payload["rep_dim"] = orbidim::dimension::rep_variety_dim_euclidean(cls, g);
    out.payload["twisted_euler"] = orbidim::dimension::twisted_euler_euclidean(cls, g);
    out.text = {"X(" + orbidim::orbifold::euclidean_name(cls) + ", " +
                    orbidim::lie::render(g) +
                    "): char_dim = " + out.payload["char_dim"].dump() +
                    ", invariant_dim = " + out.payload["invariant_dim"].dump(),
                "  rep_dim = " + out.payload["rep_dim"].dump() +
                    ", twisted_euler = " + out.payload["twisted_euler"].dump()};
    return out;
}

Output run_relative(const std::string& group, const std::string& sig) {
    auto g = orbidim::lie::parse(group);
    auto o = orbidim::orbifold::parse_signature(sig);
    std::int64_t dim = orbidim::dimension::relative_dim(o, g);
    Output out;
    out.payload["orbifold"] = sig;
    out.payload["canonical"] = orbidim::orbifold::render_signature(o);
    out.payload["group"] = orbidim::lie::render(g);
    out.payload["dimension"] = dim;
    out.text = {"relative dim(" + orbidim::orbifold::render_signature(o) + ", " +
                orbidim::lie::render(g) + ") = " + std::to_string(dim)};
    return out;
}

Output run_canonical(const std::string& group, const std::vector<std::string>& boundaries,
                     bool assume_hyperbolic) {
    if (!assume_hyperbolic)
        throw orbidim::validation_error(
            "canonical needs --assume-hyperbolic: hyperbolicity of the ambient 3-orbifold "
            "is the caller's assertion and cannot be checked here");
    auto g = orbidim::lie::parse(group);
    orbidim::threeorb::BoundaryList boundary;
    for (const std::string& sig : boundaries)
        boundary.push_back(orbidim::threeorb::boundary_from_signature(
            orbidim::orbifold::parse_signature(sig)));
    auto report = orbidim::threeorb::canonical_dim(boundary, g);
    Output out;
    out.payload["group"] = orbidim::lie::render(g);
    out.payload["total"] = report.total;
    out.payload["lower_bound"] = orbidim::threeorb::lower_bound_dim(boundary, g);
    ordered_json per = ordered_json::array();
    for (const auto& b : report.per_boundary)
        per.push_back({{"boundary", b.description},
                       {"full_dim", b.full_dim},
                       {"half_dim", b.half_dim}});
    out.payload["per_boundary"] = per;
    bool all_euclidean =
        std::all_of(boundary.begin(), boundary.end(), [](const auto& b) {
            return b.kind == orbidim::threeorb::BoundaryComponent::Kind::Euclidean;
        });
    if (all_euclidean)
        out.payload["sl3_psl2_coincidence"] =
            orbidim::threeorb::sl3_psl2_coincidence(boundary);
    out.assumptions = report.assumptions;
    out.text = {"canonical component dim (" + orbidim::lie::render(g) +
                ") = " + std::to_string(report.total)};
    for (const auto& b : report.per_boundary)
        out.text.push_back("  " + b.description + ": boundary dim " +
                           std::to_string(b.full_dim) + ", contributes " +
                           std::to_string(b.half_dim));
    out.text.push_back("lower bound for other components: " +
                       std::to_string(report.total));
    return out;
}

Output run_fig8(int n) {
    auto dims = orbidim::threeorb::fig8_component_dims(n);
    Output out;
    out.payload["n"] = n;
    out.payload["d334"] = dims.d334;
    out.payload["d245"] = dims.d245;
    out.payload["d237"] = dims.d237;
    out.text = {"figure-eight fillings at n=" + std::to_string(n) + ": S2(3,3,4) -> " +
                std::to_string(dims.d334) + ", S2(2,4,5) -> " + std::to_string(dims.d245) +
                ", S2(2,3,7) -> " + std::to_string(dims.d237)};
    return out;
}

Output run_whitehead(int n) {
    auto dims = orbidim::threeorb::whitehead_component_dims(n);
    Output out;
    out.payload["n"] = n;
    out.payload["d33"] = dims.d33;
    out.payload["d24"] = dims.d24;
    out.payload["d23"] = dims.d23;
    out.text = {"Whitehead fillings at n=" + std::to_string(n) + ": D2(3,3) -> " +
                std::to_string(dims.d33) + ", D2(2,4) -> " + std::to_string(dims.d24) +
                ", D2(2,3) -> " + std::to_string(dims.d23)};
    return out;
}

Output run_lawton_coords(const std::vector<std::string>& a_entries,
                         const std::vector<std::string>& b_entries, double tol) {
    namespace lw = orbidim::lawton;
    auto A = parse_matrix(a_entries, "A");
    auto B = parse_matrix(b_entries, "B");
    auto c = lw::trace_coords(A, B, tol);
    cdouble P = lw::eval_P(c);
    cdouble Q = lw::eval_Q(c);
    double residual = lw::lawton_residual(c);
    Output out;
    const std::pair<const char*, cdouble> coords[] = {
        {"x", c.x}, {"y", c.y}, {"z", c.z},   {"u", c.u}, {"v", c.v},
        {"w", c.w}, {"r", c.r}, {"s", c.s},   {"tau", c.tau}};
    for (const auto& [name, value] : coords) out.payload[name] = format_complex(value);
    out.payload["P"] = format_complex(P);
    out.payload["Q"] = format_complex(Q);
    out.payload["residual"] = residual;
    for (const auto& [name, value] : coords)
        out.text.push_back(std::string(name) + " = " + format_complex(value));
    out.text.push_back("P = " + format_complex(P));
    out.text.push_back("Q = " + format_complex(Q));
    out.text.push_back("residual |tau^2 - P tau + Q| / max(1,|P|,|Q|) = " +
                       format_double(residual));
    return out;
}

Output run_lawton_selftest(int samples, std::uint64_t seed, double tol) {
    namespace lw = orbidim::lawton;
    std::mt19937_64 rng(seed);
    double max_residual = 0;
    double max_ch = 0;
    for (int i = 0; i < samples; ++i) {
        auto A = lw::random_unimodular(rng);
        auto B = lw::random_unimodular(rng);
        max_residual = std::max(max_residual, lw::lawton_residual(A, B, 1e-6));
        max_ch = std::max(max_ch, lw::cayley_hamilton_residual(A));
    }
    double ch_tol = tol / 10;
    bool pass = max_residual <= tol && max_ch <= ch_tol;
    Output out;
    out.payload["samples"] = samples;
    out.payload["seed"] = seed;
    out.payload["tol"] = tol;
    out.payload["max_residual"] = max_residual;
    out.payload["cayley_hamilton_tol"] = ch_tol;
    out.payload["max_cayley_hamilton_residual"] = max_ch;
    out.payload["pass"] = pass;
    out.text = {std::string(pass ? "[PASS]" : "[FAIL]") + " trace identity on " +
                    std::to_string(samples) + " seeded pairs",
                "  max residual " + format_double(max_residual) + " (tol " +
                    format_double(tol) + ")",
                "  max Cayley-Hamilton residual " + format_double(max_ch) + " (tol " +
                    format_double(ch_tol) + ")"};
    out.failed = !pass;
    return out;
}

Output run_lawton_points() {
    auto checks = orbidim::lawton::verify_reference_points();
    bool all = true;
    Output out;
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        arr.push_back({{"name", c.name},
                       {"exact", c.exact},
                       {"pass", c.pass},
                       {"detail", c.detail}});
        out.text.push_back(std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name +
                           (c.exact ? " (exact arithmetic)" : ""));
    }
    out.payload["checks"] = arr;
    out.payload["pass"] = all;
    out.failed = !all;
    return out;
}

std::vector<std::string> exponent_list_strings(const std::vector<int>& exps) {
    std::vector<std::string> out;
    out.reserve(exps.size());
    for (int d : exps) out.push_back(std::to_string(d));
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

Output run_table(int which, int n_max_flag) {
    namespace tb = orbidim::tables;
    Output out;
    out.payload["table"] = which;
    ordered_json rows = ordered_json::array();
    switch (which) {
        case 1:
        case 2: {
            auto data = which == 1 ? tb::exponent_catalog(n_max_flag > 0 ? n_max_flag : 8)
                                   : tb::exceptional_catalog();
            out.rows.push_back({"group", "exponents", "rank", "dim"});
            for (const auto& r : data) {
                rows.push_back({{"group", r.group},
                                {"exponents", r.exponents},
                                {"rank", r.rank},
                                {"dim", r.dim}});
                out.rows.push_back({r.group, join(exponent_list_strings(r.exponents), ","),
                                    std::to_string(r.rank), std::to_string(r.dim)});
            }
            break;
        }
        case 3: {
            auto data = tb::hitchin_s2334_table(n_max_flag > 0 ? n_max_flag : 120);
            out.rows.push_back({"n", "dimension", "defect"});
            for (const auto& r : data) {
                rows.push_back(
                    {{"n", r.n}, {"dimension", r.dimension}, {"defect", r.defect.str()}});
                out.rows.push_back(
                    {std::to_string(r.n), std::to_string(r.dimension), r.defect.str()});
            }
            break;
        }
        case 4:
        case 5: {
            int n_max = n_max_flag > 0 ? n_max_flag : 12;
            auto data = which == 4 ? tb::euclidean_char_table(n_max)
                                   : tb::euclidean_invariant_table(n_max);
            std::vector<std::string> header = {"group"};
            for (const char* col : tb::kEuclideanColumns) header.push_back(col);
            out.rows.push_back(header);
            for (const auto& r : data) {
                ordered_json row;
                row["group"] = r.group;
                std::vector<std::string> tsv_row = {r.group};
                for (int c = 0; c < 5; ++c) {
                    row[tb::kEuclideanColumns[c]] = r.values[c];
                    tsv_row.push_back(std::to_string(r.values[c]));
                }
                rows.push_back(row);
                out.rows.push_back(tsv_row);
            }
            break;
        }
        default:
            throw orbidim::value_error("no table " + std::to_string(which) +
                                       "; available tables are 1-5");
    }
    out.payload["rows"] = rows;
    for (const auto& row : out.rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "  " : "") + row[i];
        out.text.push_back(line);
    }
    return out;
}

Output run_selftest(int samples, std::uint64_t seed, double tol) {
    Output out;
    bool all_pass = true;

    auto issues = orbidim::tables::table_regression();
    int unexpected = 0;
    ordered_json issue_arr = ordered_json::array();
    for (const auto& i : issues) {
        issue_arr.push_back({{"table", i.table},
                             {"cell", i.cell},
                             {"message", i.message},
                             {"expected_deviation", i.expected}});
        if (!i.expected) {
            ++unexpected;
            out.text.push_back("[FAIL] table " + i.table + " " + i.cell + ": " + i.message);
        }
    }
    bool tables_pass = unexpected == 0;
    all_pass = all_pass && tables_pass;
    out.payload["tables"] = {{"issues", issue_arr},
                             {"documented_deviations",
                              static_cast<int>(issues.size()) - unexpected},
                             {"unexpected", unexpected},
                             {"pass", tables_pass}};
    out.text.push_back(std::string(tables_pass ? "[PASS]" : "[FAIL]") +
                       " tables 1-5 regression (" +
                       std::to_string(issues.size() - unexpected) +
                       " documented deviations)");

    bool whitehead_pass = true;
    std::string whitehead_detail;
    for (int n = 2; n <= 120; ++n) {
        auto dims = orbidim::threeorb::whitehead_component_dims(n);
        std::int64_t want33 = orbidim::reference::whitehead_d33_closed_form(n);
        std::int64_t want24 = orbidim::reference::whitehead_d24_closed_form(n);
        std::int64_t want23 = orbidim::reference::whitehead_d23_closed_form(n);
        if (dims.d33 != want33 || dims.d24 != want24 || dims.d23 != want23) {
            whitehead_pass = false;
            whitehead_detail = "first mismatch at n=" + std::to_string(n);
            break;
        }
    }
    all_pass = all_pass && whitehead_pass;
    out.payload["whitehead_piecewise"] = {{"pass", whitehead_pass},
                                          {"detail", whitehead_detail}};
    out.text.push_back(std::string(whitehead_pass ? "[PASS]" : "[FAIL]") +
                       " Whitehead piecewise forms, n = 2..120" +
                       (whitehead_detail.empty() ? "" : " (" + whitehead_detail + ")"));

    Output lawton = run_lawton_selftest(samples, seed, tol);
    all_pass = all_pass && !lawton.failed;
    out.payload["lawton"] = lawton.payload;
    for (const auto& line : lawton.text) out.text.push_back(line);

    Output points = run_lawton_points();
    all_pass = all_pass && !points.failed;
    out.payload["reference_points"] = points.payload;
    out.text.push_back(std::string(points.failed ? "[FAIL]" : "[PASS]") +
                       " exact reference-point checks");

    out.payload["pass"] = all_pass;
    out.text.push_back(all_pass ? "selftest: PASS" : "selftest: FAIL");
    out.failed = !all_pass;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbidim: dimensions of representation and character varieties of "
                 "2- and 3-orbifolds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}))
        ->capture_default_str();

    std::string group;
    std::string signature;
    std::string kind = "cyclic";
    int k = 1;
    int n = 2;
    int n_max = 0;
    int samples = 10000;
    std::uint64_t seed = 42;
    double tol = 1e-8;
    double coords_tol = 1e-9;
    bool assume_hyperbolic = false;
    std::vector<std::string> boundaries;
    std::vector<std::string> a_entries;
    std::vector<std::string> b_entries;

    CLI::App* chi = app.add_subcommand("chi", "orbifold Euler characteristic");
    chi->add_option("signature", signature, "2-orbifold signature")->required();

    CLI::App* classify = app.add_subcommand("classify", "geometrize a closed 2-orbifold");
    classify->add_option("signature", signature, "2-orbifold signature")->required();

    CLI::App* stab = app.add_subcommand(
        "stab", "centralizer dimension of a principal finite cyclic/dihedral subgroup");
    stab->add_option("--group", group, "Lie type, e.g. PSL(3) or PSp(10)")->required();
    stab->add_option("--kind", kind, "subgroup kind")
        ->check(CLI::IsMember({"cyclic", "dihedral"}))
        ->required();
    stab->add_option("--k", k, "rotation order (dihedral: half the group order)")
        ->required();

    CLI::App* hitchin =
        app.add_subcommand("hitchin", "Hitchin component dimension of a hyperbolic 2-orbifold");
    hitchin->add_option("--group", group, "Lie type")->required();
    hitchin->add_option("signature", signature, "2-orbifold signature")->required();

    CLI::App* euclidean = app.add_subcommand(
        "euclidean", "character/representation variety dimensions of a Euclidean 2-orbifold");
    euclidean->add_option("--group", group, "Lie type")->required();
    euclidean->add_option("signature", signature,
                          "one of T2, S2(2,2,2,2), S2(3,3,3), S2(2,4,4), S2(2,3,6)")
        ->required();

    CLI::App* relative = app.add_subcommand(
        "relative", "dimension of the boundary-relative deformation space");
    relative->add_option("--group", group, "Lie type")->required();
    relative->add_option("signature", signature, "2-orbifold signature")->required();

    CLI::App* canonical = app.add_subcommand(
        "canonical", "canonical component dimension of a hyperbolic 3-orbifold from its "
                     "boundary cross-sections");
    canonical->add_option("--group", group, "Lie type")->required();
    canonical->add_option("--boundary", boundaries, "boundary 2-orbifold (repeatable)")
        ->required();
    canonical->add_flag("--assume-hyperbolic", assume_hyperbolic,
                        "assert that the ambient 3-orbifold is hyperbolic");

    CLI::App* fig8 = app.add_subcommand(
        "fig8", "component dimensions for the three Seifert fillings of the figure-eight "
                "knot complement");
    fig8->add_option("--n", n, "PGL(n)")->required()->check(CLI::Range(2, 1000000));

    CLI::App* whitehead = app.add_subcommand(
        "whitehead", "component dimensions for partial fillings of the Whitehead link");
    whitehead->add_option("--n", n, "PGL(n)")->required()->check(CLI::Range(2, 1000000));

    CLI::App* lawton = app.add_subcommand("lawton", "SL(3,C) trace-coordinate toolkit");
    lawton->require_subcommand(1);
    CLI::App* lw_coords = lawton->add_subcommand(
        "coords", "trace coordinates of a matrix pair; entries in a+bi form, row-major");
    lw_coords->add_option("--a", a_entries, "9 entries of A")->expected(9)->required();
    lw_coords->add_option("--b", b_entries, "9 entries of B")->expected(9)->required();
    lw_coords->add_option("--tol", coords_tol, "|det - 1| tolerance")
        ->capture_default_str();
    CLI::App* lw_selftest =
        lawton->add_subcommand("selftest", "trace identity on random unimodular pairs");
    lw_selftest->add_option("--samples", samples, "number of pairs")->capture_default_str();
    lw_selftest->add_option("--seed", seed, "RNG seed")->capture_default_str();
    lw_selftest->add_option("--tol", tol, "relative residual tolerance")
        ->capture_default_str();
    CLI::App* lw_points = lawton->add_subcommand(
        "paper-points", "verify the published component equations and basepoints exactly");

    CLI::App* table = app.add_subcommand("table", "regenerate one of the five tables");
    int which_table = 0;
    table->add_option("id", which_table, "table number (1-5)")->required();
    table->add_option("--n-max", n_max, "largest classical parameter (table 1, 3, 4, 5)");

    CLI::App* selftest = app.add_subcommand(
        "selftest", "full regression: tables 1-5, piecewise forms, trace identity, "
                    "exact reference points");
    selftest->add_option("--samples", samples, "random pairs for the trace identity")
        ->capture_default_str();
    selftest->add_option("--seed", seed, "RNG seed")->capture_default_str();
    selftest->add_option("--tol", tol, "relative residual tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Output out;
        if (*chi)
            out = run_chi(signature);
        else if (*classify)
            out = run_classify(signature);
        else if (*stab)
            out = run_stab(group, kind, k);
        else if (*hitchin)
            out = run_hitchin(group, signature);
        else if (*euclidean)
            out = run_euclidean(group, signature);
        else if (*relative)
            out = run_relative(group, signature);
        else if (*canonical)
            out = run_canonical(group, boundaries, assume_hyperbolic);
        else if (*fig8)
            out = run_fig8(n);
        else if (*whitehead)
            out = run_whitehead(n);
        else if (*lawton) {
            if (*lw_coords)
                out = run_lawton_coords(a_entries, b_entries, coords_tol);
            else if (*lw_selftest)
                out = run_lawton_selftest(samples, seed, tol);
            else if (*lw_points)
                out = run_lawton_points();
        } else if (*table)
            out = run_table(which_table, n_max);
        else if (*selftest)
            out = run_selftest(std::min(samples, 10000), seed, tol);
        emit(out, format);
        return out.failed ? 1 : 0;
    } catch (const orbidim::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const orbidim::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
