#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chiral/errors.hpp"
#include "chiral/knot_io.hpp"
#include "chiral/linking_form.hpp"
#include "chiral/number_theory.hpp"
#include "chiral/obstruction.hpp"

namespace {

using namespace chiral;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --seifert accepts either a file path or the matrix text itself.
std::string file_or_inline(const std::string& arg) {
    std::ifstream in(arg, std::ios::binary);
    if (in) {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

ReportFormat to_format(const std::string& name) {
    return name == "json" ? ReportFormat::kJson : ReportFormat::kText;
}

int run_check(const std::string& seifert_arg, const std::string& alexander_arg,
              const std::string& label, ReportFormat format) {
    IntMatrix m = parse_seifert_text(file_or_inline(seifert_arg));
    std::optional<std::vector<Int>> alexander;
    if (!alexander_arg.empty()) alexander = parse_int_list(alexander_arg);
    ChiralityReport report = full_report(label, m, alexander);
    std::cout << emit_report(report, format);
    if (format == ReportFormat::kJson) std::cout << "\n";
    return 0;
}

int run_scan(const std::string& table_path, ReportFormat format, bool strict,
             unsigned jobs) {
    TableParseResult parsed = parse_table_csv(read_file(table_path), strict);
    for (const TableIssue& issue : parsed.skipped)
        std::cerr << "skipped line " << issue.line << ": " << issue.message << "\n";

    std::vector<ScanOutcome> outcomes = scan_table(parsed.table, jobs);
    if (format == ReportFormat::kJson) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ScanOutcome& o : outcomes) {
            if (o.report) {
                arr.push_back(report_to_json(*o.report));
            } else {
                arr.push_back({{"label", o.label}, {"error", o.error}});
            }
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const ScanOutcome& o : outcomes) {
            if (o.report)
                std::cout << emit_report(*o.report, ReportFormat::kText) << "\n";
            else
                std::cout << o.label << ": rejected: " << o.error << "\n\n";
        }
    }
    return 0;  // verdicts and per-record rejections are data, not CLI errors
}

int run_explain(const std::string& label, const std::string& table_path) {
    TableParseResult parsed = parse_table_csv(read_file(table_path));
    const SeifertMatrixRecord* rec = nullptr;
    for (const auto& r : parsed.table.records)
        if (r.label == label) rec = &r;
    if (!rec) {
        std::cerr << "error: no record named '" << label << "' in " << table_path
                  << "\n";
        return 1;
    }

    IntMatrix sym = rec->matrix + rec->matrix.transpose();
    std::cout << label << "\n";
    std::cout << "  Seifert matrix A = " << render_seifert_text(rec->matrix) << "\n";
    std::cout << "  A + A^T = " << render_seifert_text(sym)
              << ", det = " << to_string(determinant(sym)) << "\n";

    TorsionLinkingForm form = linking_form_from_seifert(rec->matrix);
    const auto& factors = form.group().invariant_factors();
    std::cout << "  linking form Gram matrix on the invariant-factor generators";
    if (factors.empty()) {
        std::cout << ": (trivial group)\n";
    } else {
        std::cout << " (orders";
        for (const Int& f : factors) std::cout << " " << to_string(f);
        std::cout << "):\n";
        for (std::size_t i = 0; i < form.gram().rows(); ++i) {
            std::cout << "    [";
            for (std::size_t j = 0; j < form.gram().cols(); ++j)
                std::cout << (j ? ", " : " ") << to_string(form.gram()(i, j));
            std::cout << " ]\n";
        }
    }

    ChiralityReport report = full_report(label, rec->matrix, rec->alexander_coeffs);
    std::cout << "\n" << emit_report(report, ReportFormat::kText);

    // Spell out the oracle runs behind the confirmed obstructions.
    for (const PrimeEvidence& ev : report.per_prime) {
        if (!ev.theorem1_fires) continue;
        TorsionLinkingForm part = restrict_to_primary(form, ev.prime);
        CyclicLinkingForm cyclic = cyclic_parameter(part);
        std::string p = to_string(cyclic.prime);
        std::string m = to_string(cyclic.modulus());
        std::cout << "\n  oracle detail for p = " << p << ": the " << p
                  << "-part carries the form lambda(a, b) = " << to_string(cyclic.k)
                  << "*a*b/" << m << "\n";
        try {
            auto witness = self_negation_witness(cyclic);
            if (witness) {
                std::cout << "    unit r = " << *witness << " satisfies "
                          << to_string(cyclic.k) << "*r^2 = -" << to_string(cyclic.k)
                          << " (mod " << m
                          << "); the form IS isometric to its negative\n";
            } else {
                std::cout << "    searched every unit r mod " << m << ": none has "
                          << to_string(cyclic.k) << "*r^2 = -" << to_string(cyclic.k)
                          << " (mod " << m
                          << "), so no isometry with the negated form exists\n";
            }
        } catch (const OracleBoundError&) {
            std::cout << "    modulus " << m
                      << " exceeds the enumeration bound; obstruction rests on the "
                         "p mod 4 criterion alone\n";
        }
    }
    return 0;
}

int run_oracle(const std::string& prime_str, unsigned exponent,
               const std::string& k_str, std::uint64_t bound) {
    CyclicLinkingForm form = cyclic_form(Int(prime_str), exponent, Int(k_str));
    std::string p = to_string(form.prime);
    std::string m = to_string(form.modulus());
    std::cout << "form: lambda(a, b) = " << to_string(form.k) << "*a*b/" << m
              << " on Z_" << m << "\n";

    auto witness = self_negation_witness(form, bound);
    bool found = witness.has_value();
    if (found)
        std::cout << "witness: r = " << *witness << " with " << to_string(form.k)
                  << "*r^2 = -" << to_string(form.k) << " (mod " << m << ")\n";
    else
        std::cout << "no witness: no unit r mod " << m << " has " << to_string(form.k)
                  << "*r^2 = -" << to_string(form.k) << " (mod " << m << ")\n";
    std::cout << "exhaustive search verdict: the form is "
              << (found ? "isometric" : "NOT isometric") << " to its negative\n";

    bool predicted = mod4_class(form.prime) == 1;
    std::cout << "criterion: p = " << p << " is " << mod4_class(form.prime)
              << " (mod 4), which predicts " << (predicted ? "an isometry" : "none")
              << "\n";
    if (found == predicted) {
        std::cout << "agreement: yes\n";
        return 0;
    }
    std::cout << "agreement: MISMATCH\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Chirality obstructions from Seifert matrices: homology and linking "
        "form of the double branched cover"};
    app.require_subcommand(1);

    std::string seifert_arg, alexander_arg, label = "knot";
    std::string check_format = "text";
    auto* check =
        app.add_subcommand("check", "Run the obstruction pipeline on one knot");
    check
        ->add_option("--seifert", seifert_arg,
                     "Seifert matrix: a file path or inline text like "
                     "\"[[1,0],[1,-2]]\"")
        ->required();
    check->add_option("--alexander", alexander_arg,
                      "Alexander coefficients, ascending degree, e.g. \"2,-5,2\"");
    check->add_option("--format", check_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    check->add_option("--label", label, "Knot name used in the report");

    std::string table_path;
    std::string scan_format = "text";
    bool strict = false;
    unsigned jobs = 1;
    auto* scan = app.add_subcommand("scan", "Run the pipeline over a CSV knot table");
    scan->add_option("--table", table_path, "CSV file with columns name, "
                     "seifert_matrix, alexander_polynomial, amphichiral")
        ->required();
    scan->add_option("--format", scan_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    scan->add_flag("--strict", strict, "Abort on the first malformed row");
    scan->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");

    std::string explain_label, explain_table;
    auto* explain = app.add_subcommand(
        "explain", "Verbose per-prime evidence for one record of a table");
    explain->add_option("label", explain_label, "Knot name to look up")->required();
    explain->add_option("--table", explain_table, "CSV knot table")->required();

    std::string prime_str, k_str = "1";
    unsigned exponent = 1;
    std::uint64_t bound = chiral::kDefaultOracleBound;
    auto* oracle = app.add_subcommand(
        "oracle", "Brute-force isometry search between a cyclic form and its "
                  "negative, checked against the p mod 4 criterion");
    oracle->add_option("--prime", prime_str, "Odd prime p")->required();
    oracle->add_option("--exponent", exponent, "Exponent n of the modulus p^n")
        ->required();
    oracle->add_option("--k", k_str, "Form parameter k, a unit mod p (default 1)");
    oracle->add_option("--bound", bound, "Largest modulus the search will accept");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check)
            return run_check(seifert_arg, alexander_arg, label,
                             to_format(check_format));
        if (*scan) return run_scan(table_path, to_format(scan_format), strict, jobs);
        if (*explain) return run_explain(explain_label, explain_table);
        if (*oracle) return run_oracle(prime_str, exponent, k_str, bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
