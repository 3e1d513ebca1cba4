#ifndef CHIRAL_KNOT_IO_HPP
#define CHIRAL_KNOT_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chiral/int_matrix.hpp"
#include "chiral/obstruction.hpp"

#include "json.hpp"

namespace chiral {

/// One row of a knot table: a labeled Seifert matrix plus optional
/// cross-check data.
struct SeifertMatrixRecord {
    std::string label;
    IntMatrix matrix;
    std::optional<std::vector<Int>> alexander_coeffs;
    std::optional<bool> amphichiral_flag;  // table metadata, not computed

    bool operator==(const SeifertMatrixRecord& other) const = default;
};

struct KnotTable {
    std::vector<SeifertMatrixRecord> records;  // labels unique
};

/// Parses a Seifert matrix from either whitespace rows
/// ("1 0\n1 -2") or the bracketed form ("[[1,0],[1,-2]]"; "[]" is the 0x0
/// matrix). Rejects ragged rows, stray tokens and non-square results with a
/// ParseError carrying line/column.
IntMatrix parse_seifert_text(const std::string& input);

/// Bracketed rendering, the inverse of parse_seifert_text.
std::string render_seifert_text(const IntMatrix& m);

/// Ascending-degree integer list: "2,-5,2".
std::vector<Int> parse_int_list(const std::string& input);

struct TableIssue {
    std::size_t line;  // 1-based line of the offending row
    std::string message;
};

struct TableParseResult {
    KnotTable table;
    std::vector<TableIssue> skipped;  // empty in strict mode (it throws instead)
};

/// CSV table reader. Header names the columns: name, seifert_matrix,
/// optional alexander_polynomial (quoted ascending coefficient list),
/// optional amphichiral (true/false). Cells may be RFC-4180 quoted; an
/// unquoted seifert_matrix cell is also accepted since commas inside
/// brackets are not separators.
///
/// Malformed rows, duplicate labels and records whose Alexander value
/// contradicts the matrix are skipped and returned as issues; in strict
/// mode the first such row throws ParseError.
TableParseResult parse_table_csv(const std::string& input, bool strict = false);

enum class ReportFormat { kJson, kText };

nlohmann::json report_to_json(const ChiralityReport& report);
ChiralityReport report_from_json(const nlohmann::json& j);

/// Renders a report. The JSON schema is stable with every numeric value as
/// decimal text; the text form names which result fired ("Theorem 1",
/// "Goeritz").
std::string emit_report(const ChiralityReport& report, ReportFormat format);

/// Outcome of one record in a batch scan; `error` is set when the pipeline
/// rejected the record (and the report is absent).
struct ScanOutcome {
    std::string label;
    std::optional<ChiralityReport> report;
    std::string error;
};

/// Runs full_report over every record, in input order. With jobs > 1 the
/// records are processed concurrently; outcomes are always delivered in
/// table order regardless of scheduling.
std::vector<ScanOutcome> scan_table(const KnotTable& table, unsigned jobs = 1,
                                    std::uint64_t oracle_bound = kDefaultOracleBound);

}  // namespace chiral

#endif
