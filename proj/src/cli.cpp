#include "engstrom/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "engstrom/formulas.hpp"
#include "engstrom/io.hpp"
#include "engstrom/oracle.hpp"

namespace engstrom::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kDecimalDigits = 10;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// `uniform:R:N` sources get closed-form fast paths that need (r, n).
std::optional<std::pair<int, long long>> parse_uniform_source(const std::string& source) {
    if (source.rfind("uniform:", 0) != 0) return std::nullopt;
    std::size_t sep = source.find(':', 8);
    if (sep == std::string::npos) return std::nullopt;
    try {
        return std::make_pair(std::stoi(source.substr(8, sep - 8)),
                              static_cast<long long>(std::stoll(source.substr(sep + 1))));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

ComplexSummary parse_complex(const std::string& spec) {
    if (spec == "s0") return ComplexSummary::sphere0();
    if (spec == "point") return ComplexSummary::point();
    std::vector<BigInt> coeffs;
    std::stringstream ss(spec);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            coeffs.emplace_back(piece);
        } catch (const std::exception&) {
            throw ParseError("complex spec must be s0, point, or a comma-separated f-vector");
        }
    }
    if (coeffs.empty()) throw ParseError("empty complex spec");
    return ComplexSummary::from_fpoly(FPolynomial::from_coeffs(std::move(coeffs)));
}

void emit_kv(std::ostream& out, const ojson& doc, const std::string& format) {
    if (format == "json") {
        out << doc.dump() << '\n';
        return;
    }
    auto flat = [](const ojson& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ',';
                s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
            }
            return s;
        }
        return v.dump();
    };
    for (const auto& [key, value] : doc.items()) {
        // Diagnostic dumps list one entry per line.
        if (value.is_array() && (key == "census" || key == "hasse")) {
            for (const auto& item : value)
                if (format == "csv")
                    out << key << ',' << flat(item) << '\n';
                else
                    out << key << ' ' << flat(item) << '\n';
            continue;
        }
        if (format == "csv")
            out << key << ',' << flat(value) << '\n';
        else
            out << key << ": " << flat(value) << '\n';
    }
}

ojson poly_json(const FPolynomial& f) { return ojson(f.coeff_strings()); }

struct MatroidRequest {
    std::string source;
    // Built lattices are capped; closed forms bypass the cap for uniform
    // sources.
    std::size_t max_lattice = 5000;

    Matroid load() const { return load_matroid(source); }
    Lattice lattice() const {
        Matroid m = load();
        if (m.flats().size() > max_lattice)
            throw BudgetError("lattice of " + std::to_string(m.flats().size()) +
                              " flats is over the budget of " + std::to_string(max_lattice) +
                              " elements");
        return Lattice::from_matroid(m);
    }
};

void print_flat_failure(std::ostream& err, const FlatAxiomReport& rep) {
    err << "validation-failure kind=flats axiom=" << rep.axiom_name() << '\n';
    for (const auto& w : rep.witnesses) {
        err << "witness {";
        for (std::size_t i = 0; i < w.size(); ++i) err << (i ? "," : "") << w[i];
        err << "}\n";
    }
    if (rep.witness_element > 0) err << "element " << rep.witness_element << '\n';
    err << "detail " << rep.message << '\n';
}

void print_covector_failure(std::ostream& err, const CovectorAxiomReport& rep) {
    err << "validation-failure kind=covectors axiom=" << rep.axiom_name() << '\n';
    for (const auto& w : rep.witnesses) err << "witness " << w << '\n';
    if (rep.witness_element > 0) err << "element " << rep.witness_element << '\n';
    err << "detail " << rep.message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact face counts of Engström and Folkman-Lawrence matroid representations"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --format follow the subcommand

    std::string format = "json";
    CLI::Option* format_opt = app.add_option("--format", format, "Output format")
                                  ->check(CLI::IsMember({"json", "csv", "table"}))
                                  ->capture_default_str();

    OracleBudget budget;
    if (const char* env = std::getenv("ENGSTROM_MAX_LABELS"))
        budget.max_labels = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    if (const char* env = std::getenv("ENGSTROM_MAX_LATTICE"))
        budget.max_lattice = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));

    MatroidRequest matroid;
    std::string complex_spec = "s0";
    int opt_r = 0;
    long long opt_n = 0;
    int opt_i = 0;
    long long opt_max_n = 20;
    std::string oracle_mode = "star";
    bool census = false;
    bool echo = false;
    bool hasse = false;
    std::string covector_path;

    auto add_matroid = [&](CLI::App* cmd) {
        cmd->add_option("--matroid", matroid.source,
                        "Matroid source: file path, uniform:R:N, or fano")
            ->required();
    };
    auto add_complex = [&](CLI::App* cmd) {
        cmd->add_option("--complex", complex_spec,
                        "Indexing complex: s0, point, or f-vector list like 1,3,3")
            ->capture_default_str();
    };

    CLI::App* cmd_fpoly = app.add_subcommand("fpoly", "f-polynomial of the Engström representation");
    add_matroid(cmd_fpoly);
    add_complex(cmd_fpoly);

    CLI::App* cmd_ufpoly =
        app.add_subcommand("uniform-fpoly", "Closed-form f-polynomial for uniform matroids");
    cmd_ufpoly->add_option("--r", opt_r, "Rank")->required();
    cmd_ufpoly->add_option("--n", opt_n, "Ground-set size")->required();
    add_complex(cmd_ufpoly);

    CLI::App* cmd_total = app.add_subcommand("total", "Total face count of the Engström representation");
    add_matroid(cmd_total);
    add_complex(cmd_total);

    CLI::App* cmd_fl =
        app.add_subcommand("fl", "Folkman-Lawrence face polynomial from the lattice of flats");
    add_matroid(cmd_fl);

    CLI::App* cmd_fltotal = app.add_subcommand("fl-total", "Total Folkman-Lawrence face count, uniform");
    cmd_fltotal->add_option("--r", opt_r, "Rank")->required();
    cmd_fltotal->add_option("--n", opt_n, "Ground-set size")->required();

    CLI::App* cmd_oracle =
        app.add_subcommand("oracle", "Brute-force cell enumeration of the Engström representation");
    add_matroid(cmd_oracle);
    add_complex(cmd_oracle);
    cmd_oracle->add_option("--mode", oracle_mode, "Enumeration mode")
        ->check(CLI::IsMember({"star", "naive"}))
        ->capture_default_str();
    cmd_oracle->add_flag("--census", census, "Include one label per cell (star mode)");
    cmd_oracle->add_option("--max-labels", budget.max_labels, "Label budget override");
    cmd_oracle->add_option("--max-lattice", budget.max_lattice, "Lattice-size budget override");

    CLI::App* cmd_validate = app.add_subcommand("validate", "Validate axioms");
    cmd_validate->require_subcommand(1);
    CLI::App* cmd_vflats = cmd_validate->add_subcommand("flats", "Check the flat axioms (F1)-(F3)");
    cmd_vflats->add_option("source", matroid.source, "Matroid source")->required();
    cmd_vflats->add_flag("--echo", echo, "Emit the canonical matroid document");
    cmd_vflats->add_flag("--hasse", hasse, "Include the Hasse diagram edge list");
    CLI::App* cmd_vcov =
        cmd_validate->add_subcommand("covectors", "Check the covector axioms (L0)-(L3)");
    cmd_vcov->add_option("file", covector_path, "Covector file, one sign string per line")
        ->required();

    CLI::App* cmd_rho = app.add_subcommand("rho", "Engström/Folkman-Lawrence total face ratio");
    cmd_rho->add_option("--r", opt_r, "Rank")->required();
    cmd_rho->add_option("--n", opt_n, "Ground-set size")->required();

    CLI::App* cmd_rholimit = app.add_subcommand("rho-limit", "Limit of the face ratio");
    cmd_rholimit->add_option("--r", opt_r, "Rank")->required();

    CLI::App* cmd_asym = app.add_subcommand("asymptotics", "Totals and ratio over a sweep of n");
    cmd_asym->add_option("--r", opt_r, "Rank")->required();
    cmd_asym->add_option("--max-n", opt_max_n, "Largest ground-set size")->required();

    CLI::App* cmd_bell = app.add_subcommand("bell", "Ordered Bell number and Barthélemy estimate");
    cmd_bell->add_option("--i", opt_i, "Index")->required();

    CLI::App* cmd_growth =
        app.add_subcommand("growth", "Certify degree and leading coefficient of a total-count sweep");
    cmd_growth->add_option("--r", opt_r, "Rank")->required();
    std::string growth_kind = "engstrom";
    cmd_growth->add_option("--kind", growth_kind, "Which total to fit")
        ->check(CLI::IsMember({"engstrom", "fl", "altcells"}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    }

    matroid.max_lattice = budget.max_lattice;
    if (*cmd_asym && format_opt->count() == 0) format = "csv";  // sweeps are CSV by default

    try {
        if (*cmd_fpoly || *cmd_total) {
            ComplexSummary x = parse_complex(complex_spec);
            FPolynomial f;
            if (auto rn = parse_uniform_source(matroid.source)) {
                f = uniform_engstrom_fpoly(rn->first, rn->second, x);
            } else {
                f = engstrom_fpoly(matroid.lattice(), x);
            }
            ojson doc;
            doc["command"] = *cmd_fpoly ? "fpoly" : "total";
            doc["matroid"] = matroid.source;
            doc["complex"] = poly_json(x.fpoly);
            if (*cmd_fpoly) doc["coeffs"] = poly_json(f);
            doc["total"] = f.total().str();
            emit_kv(out, doc, format);
        } else if (*cmd_ufpoly) {
            ComplexSummary x = parse_complex(complex_spec);
            FPolynomial f = uniform_engstrom_fpoly(opt_r, opt_n, x);
            ojson doc;
            doc["command"] = "uniform-fpoly";
            doc["r"] = std::to_string(opt_r);
            doc["n"] = std::to_string(opt_n);
            doc["complex"] = poly_json(x.fpoly);
            doc["coeffs"] = poly_json(f);
            doc["total"] = f.total().str();
            emit_kv(out, doc, format);
        } else if (*cmd_fl) {
            FPolynomial f = fl_fpoly(matroid.lattice());
            ojson doc;
            doc["command"] = "fl";
            doc["matroid"] = matroid.source;
            doc["coeffs"] = poly_json(f);
            doc["total"] = f.total().str();
            if (!parse_uniform_source(matroid.source))
                doc["note"] =
                    "lattice-theoretic quantity; counts Folkman-Lawrence faces only for "
                    "orientable matroids";
            emit_kv(out, doc, format);
        } else if (*cmd_fltotal) {
            BigInt total = opt_r >= 2
                               ? uniform_fl_total(opt_r, opt_n)
                               : fl_fpoly(Lattice::from_matroid(
                                              Matroid::uniform(opt_r, static_cast<int>(opt_n))))
                                     .total();
            ojson doc;
            doc["command"] = "fl-total";
            doc["r"] = std::to_string(opt_r);
            doc["n"] = std::to_string(opt_n);
            doc["total"] = total.str();
            emit_kv(out, doc, format);
        } else if (*cmd_oracle) {
            ComplexSummary x = parse_complex(complex_spec);
            OracleMode mode = oracle_mode == "star" ? OracleMode::Star : OracleMode::Naive;
            if (census && mode != OracleMode::Star)
                throw ParseError("--census is available in star mode only");
            Lattice lattice = matroid.lattice();
            OracleResult res = enumerate_cells(lattice, x, mode, budget, census);
            ojson doc;
            doc["command"] = "oracle";
            doc["matroid"] = matroid.source;
            doc["mode"] = oracle_mode;
            doc["complex"] = poly_json(x.fpoly);
            doc["coeffs"] = poly_json(res.fpoly);
            doc["total"] = res.fpoly.total().str();
            if (census) {
                std::vector<std::string> lines;
                lines.reserve(res.census.size());
                for (const CellLabel& label : res.census)
                    lines.push_back(label.str(lattice, res.cell_dims));
                doc["census"] = lines;
            }
            emit_kv(out, doc, format);
        } else if (*cmd_vflats) {
            Matroid m = matroid.load();
            ojson doc;
            doc["command"] = "validate";
            doc["kind"] = "flats";
            doc["result"] = "pass";
            doc["n"] = std::to_string(m.ground_size());
            doc["rank"] = std::to_string(m.rank());
            doc["flats"] = std::to_string(m.flats().size());
            if (echo) {
                ojson document;
                document["n"] = m.ground_size();
                document["flats"] = m.flats_as_lists();
                doc["document"] = document;
            }
            if (hasse) {
                Lattice lattice = Lattice::from_matroid(m);
                std::vector<std::string> edges;
                for (auto [p, q] : lattice.hasse_edges())
                    edges.push_back(lattice.element_str(p) + "<" + lattice.element_str(q));
                doc["hasse"] = edges;
            }
            emit_kv(out, doc, format);
        } else if (*cmd_vcov) {
            CovectorSet cov = load_covectors(covector_path);
            CovectorAxiomReport rep = validate_covector_axioms(cov);
            if (!rep.pass()) {
                print_covector_failure(err, rep);
                return kExitAxiomFailure;
            }
            Lattice lattice = underlying_lattice(cov);
            ojson doc;
            doc["command"] = "validate";
            doc["kind"] = "covectors";
            doc["result"] = "pass";
            doc["n"] = std::to_string(cov.ground_size());
            doc["covectors"] = std::to_string(cov.size());
            doc["underlying_flats"] = std::to_string(lattice.size());
            emit_kv(out, doc, format);
        } else if (*cmd_rho) {
            BigRat value = rho(opt_r, opt_n);
            ojson doc;
            doc["command"] = "rho";
            doc["r"] = std::to_string(opt_r);
            doc["n"] = std::to_string(opt_n);
            doc["rho"] = to_fraction(value);
            doc["decimal"] = rat_to_decimal(value, kDecimalDigits);
            emit_kv(out, doc, format);
        } else if (*cmd_rholimit) {
            BigRat value = rho_limit(opt_r);
            ojson doc;
            doc["command"] = "rho-limit";
            doc["r"] = std::to_string(opt_r);
            doc["value"] = to_fraction(value);
            doc["decimal"] = rat_to_decimal(value, kDecimalDigits);
            emit_kv(out, doc, format);
        } else if (*cmd_asym) {
            if (opt_r < 2) throw ParseError("asymptotics requires --r >= 2");
            if (opt_max_n < opt_r) throw ParseError("asymptotics requires --max-n >= r");
            if (format == "json") {
                ojson rows = ojson::array();
                for (long long n = opt_r; n <= opt_max_n; ++n) {
                    BigRat q = rho(opt_r, n);
                    ojson row;
                    row["n"] = std::to_string(n);
                    row["engstrom_total"] = uniform_total_s0(opt_r, n).str();
                    row["fl_total"] = uniform_fl_total(opt_r, n).str();
                    row["rho"] = rat_to_decimal(q, kDecimalDigits);
                    row["rho_exact"] = to_fraction(q);
                    rows.push_back(row);
                }
                ojson doc;
                doc["command"] = "asymptotics";
                doc["r"] = std::to_string(opt_r);
                doc["rows"] = rows;
                out << doc.dump() << '\n';
            } else {
                out << "n,engstrom_total,fl_total,rho,rho_exact\n";
                for (long long n = opt_r; n <= opt_max_n; ++n) {
                    BigRat q = rho(opt_r, n);
                    out << n << ',' << uniform_total_s0(opt_r, n).str() << ','
                        << uniform_fl_total(opt_r, n).str() << ','
                        << rat_to_decimal(q, kDecimalDigits) << ',' << to_fraction(q) << '\n';
                }
            }
        } else if (*cmd_bell) {
            BigInt exact = ordered_bell(opt_i);
            double estimate = bell_approx(opt_i);
            double rel = std::abs(estimate / exact.convert_to<double>() - 1.0);
            ojson doc;
            doc["command"] = "bell";
            doc["i"] = std::to_string(opt_i);
            doc["ordered_bell"] = exact.str();
            doc["estimate"] = format_double(estimate);
            doc["relative_error"] = format_double(rel);
            emit_kv(out, doc, format);
        } else if (*cmd_growth) {
            GrowthKind kind = growth_kind == "engstrom" ? GrowthKind::Engstrom
                              : growth_kind == "fl"     ? GrowthKind::FolkmanLawrence
                                                        : GrowthKind::EngstromAltCells;
            GrowthReport rep = growth_analysis(opt_r, kind);
            ojson doc;
            doc["command"] = "growth";
            doc["r"] = std::to_string(opt_r);
            doc["kind"] = growth_kind;
            doc["degree"] = std::to_string(rep.degree);
            doc["leading"] = to_fraction(rep.leading);
            doc["expected_leading"] = to_fraction(rep.expected_leading);
            doc["matches"] = rep.matches ? "true" : "false";
            doc["polynomial"] = rep.poly.str();
            emit_kv(out, doc, format);
        }
    } catch (const AxiomError& e) {
        print_flat_failure(err, e.report);
        return kExitAxiomFailure;
    } catch (const BudgetError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const FitError& e) {
        err << "fit error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace engstrom::cli
