#include "chiral/knot_io.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <thread>
#include <utility>

#include "chiral/errors.hpp"
#include "chiral/linking_form.hpp"

namespace chiral {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// Recursive-descent scanner for the bracketed matrix form, tracking
// line/column for error messages.
class BracketScanner {
  public:
    explicit BracketScanner(const std::string& text) : text_(text) {}

    IntMatrix parse() {
        expect('[');
        std::vector<std::vector<Int>> rows;
        skip_space();
        if (peek() == ']') {
            advance();  // "[]" is the 0x0 matrix
        } else {
            rows.push_back(parse_row());
            skip_space();
            while (peek() == ',') {
                advance();
                rows.push_back(parse_row());
                skip_space();
            }
            expect(']');
        }
        skip_space();
        if (pos_ != text_.size()) fail("trailing input after matrix");

        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        for (const auto& row : rows)
            if (row.size() != c) fail("ragged row: expected " + std::to_string(c) +
                                      " entries, got " + std::to_string(row.size()));
        if (r != c)
            fail("matrix is not square: " + std::to_string(r) + "x" +
                 std::to_string(c));
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        return m;
    }

  private:
    std::vector<Int> parse_row() {
        skip_space();
        expect('[');
        std::vector<Int> row;
        skip_space();
        if (peek() == ']') {
            advance();
            return row;
        }
        row.push_back(parse_int());
        skip_space();
        while (peek() == ',') {
            advance();
            row.push_back(parse_int());
            skip_space();
        }
        expect(']');
        return row;
    }

    Int parse_int() {
        skip_space();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') advance();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            advance();
        std::string token = text_.substr(start, pos_ - start);
        if (!is_integer_literal(token)) {
            pos_ = start;
            fail("expected an integer");
        }
        return Int(token);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void advance() {
        if (pos_ >= text_.size()) return;
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, col_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

IntMatrix parse_whitespace_matrix(const std::string& input) {
    std::vector<std::vector<Int>> rows;
    std::istringstream lines(input);
    std::string line;
    std::size_t line_no = 0;
    std::size_t first_row_line = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<Int> row;
        std::istringstream tokens(line);
        std::string token;
        std::size_t consumed = 0;
        while (tokens >> token) {
            std::size_t col = line.find(token, consumed) + 1;
            consumed = col - 1 + token.size();
            if (!is_integer_literal(token))
                throw ParseError("not an integer: '" + token + "'", line_no, col);
            row.emplace_back(token);
        }
        if (!rows.empty() && row.size() != rows[0].size())
            throw ParseError("ragged row: expected " +
                                 std::to_string(rows[0].size()) + " entries, got " +
                                 std::to_string(row.size()),
                             line_no, 1);
        if (rows.empty()) first_row_line = line_no;
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty input", 1, 1);
    if (rows.size() != rows[0].size())
        throw ParseError("matrix is not square: " + std::to_string(rows.size()) +
                             "x" + std::to_string(rows[0].size()),
                         first_row_line, 1);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

IntMatrix parse_seifert_text(const std::string& input) {
    std::size_t first = input.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty input", 1, 1);
    if (input[first] == '[') return BracketScanner(input).parse();
    return parse_whitespace_matrix(input);
}

std::string render_seifert_text(const IntMatrix& m) { return m.to_string(); }

std::vector<Int> parse_int_list(const std::string& input) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= input.size()) {
        std::size_t comma = input.find(',', pos);
        std::string cell = input.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::string token = trim(cell);
        if (!is_integer_literal(token))
            throw ParseError("not an integer: '" + token + "'", 1, pos + 1);
        out.emplace_back(token);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

namespace {

// One CSV line -> cells. Quoted cells follow RFC 4180 ("" for a literal
// quote); in unquoted cells, commas inside [...] do not separate, so a bare
// bracketed matrix survives.
std::vector<std::string> split_csv_line(const std::string& line,
                                        std::size_t line_no) {
    std::vector<std::string> cells;
    std::string cell;
    int depth = 0;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
        } else if (c == '"' && trim(cell).empty() && !was_quoted) {
            quoted = true;
            was_quoted = true;
            cell.clear();  // drop indentation before the opening quote
        } else if (c == '[') {
            ++depth;
            cell += c;
        } else if (c == ']') {
            --depth;
            cell += c;
        } else if (c == ',' && depth == 0) {
            cells.push_back(was_quoted ? cell : trim(cell));
            cell.clear();
            was_quoted = false;
        } else {
            cell += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted cell", line_no, line.size());
    cells.push_back(was_quoted ? cell : trim(cell));
    return cells;
}

std::optional<bool> parse_flag(const std::string& raw, std::size_t line_no) {
    std::string v = lower(trim(raw));
    if (v.empty()) return std::nullopt;
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ParseError("amphichiral flag must be true/false, got '" + raw + "'",
                     line_no, 1);
}

}  // namespace

TableParseResult parse_table_csv(const std::string& input, bool strict) {
    TableParseResult result;
    std::istringstream lines(input);
    std::string line;
    std::size_t line_no = 0;

    // Header: required columns name + seifert_matrix; extras are ignored.
    std::vector<std::string> header;
    while (std::getline(lines, line)) {
        ++line_no;
        if (!trim(line).empty()) {
            for (const auto& h : split_csv_line(line, line_no))
                header.push_back(lower(trim(h)));
            break;
        }
    }
    auto column = [&](const std::string& name) -> std::optional<std::size_t> {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) return std::nullopt;
        return static_cast<std::size_t>(it - header.begin());
    };
    auto name_col = column("name");
    auto matrix_col = column("seifert_matrix");
    if (!name_col || !matrix_col)
        throw ParseError("header must contain 'name' and 'seifert_matrix' columns",
                         line_no ? line_no : 1, 1);
    auto alexander_col = column("alexander_polynomial");
    auto amphichiral_col = column("amphichiral");

    auto report_issue = [&](std::size_t row_line, const std::string& message) {
        if (strict) throw ParseError(message, row_line, 1);
        result.skipped.push_back({row_line, message});
    };

    while (std::getline(lines, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        try {
            std::vector<std::string> cells = split_csv_line(line, line_no);
            if (cells.size() != header.size())
                throw ParseError("expected " + std::to_string(header.size()) +
                                     " cells, got " + std::to_string(cells.size()),
                                 line_no, 1);

            SeifertMatrixRecord rec;
            rec.label = cells[*name_col];
            if (rec.label.empty()) throw ParseError("empty knot name", line_no, 1);
            rec.matrix = parse_seifert_text(cells[*matrix_col]);
            if (alexander_col && !trim(cells[*alexander_col]).empty())
                rec.alexander_coeffs = parse_int_list(cells[*alexander_col]);
            if (amphichiral_col)
                rec.amphichiral_flag = parse_flag(cells[*amphichiral_col], line_no);

            if (rec.alexander_coeffs) {
                Int from_alex = determinant_from_alexander(*rec.alexander_coeffs);
                Int from_matrix = abs(determinant(rec.matrix + rec.matrix.transpose()));
                if (from_alex != from_matrix)
                    throw ParseError("record '" + rec.label +
                                         "': |Delta(-1)| = " + to_string(from_alex) +
                                         " contradicts |det(A+A^T)| = " +
                                         to_string(from_matrix),
                                     line_no, 1);
            }
            bool duplicate =
                std::any_of(result.table.records.begin(), result.table.records.end(),
                            [&](const auto& r) { return r.label == rec.label; });
            if (duplicate)
                throw ParseError("duplicate knot label '" + rec.label + "'", line_no, 1);
            result.table.records.push_back(std::move(rec));
        } catch (const ParseError& e) {
            report_issue(line_no, e.what());
        } catch (const DomainError& e) {
            report_issue(line_no, e.what());
        }
    }
    return result;
}

namespace {

std::string group_to_string(const AbelianGroup& g) {
    if (g.is_trivial()) return "trivial";
    std::string s;
    for (const Int& f : g.invariant_factors()) {
        if (!s.empty()) s += " + ";
        s += "Z_" + to_string(f);
    }
    return s;
}

std::string oracle_to_string(OracleStatus s) {
    switch (s) {
        case OracleStatus::kNotApplicable: return "not_applicable";
        case OracleStatus::kConfirmed: return "confirmed";
        case OracleStatus::kBoundExceeded: return "bound_exceeded";
    }
    return "not_applicable";
}

OracleStatus oracle_from_string(const std::string& s) {
    if (s == "not_applicable") return OracleStatus::kNotApplicable;
    if (s == "confirmed") return OracleStatus::kConfirmed;
    if (s == "bound_exceeded") return OracleStatus::kBoundExceeded;
    throw ContractError("unknown oracle status: " + s);
}

}  // namespace

nlohmann::json report_to_json(const ChiralityReport& report) {
    nlohmann::json j;
    j["label"] = report.knot_label;
    j["determinant"] = to_string(report.determinant);
    nlohmann::json factors = nlohmann::json::array();
    for (const Int& f : report.group.invariant_factors())
        factors.push_back(to_string(f));
    j["group"] = {{"invariant_factors", factors}};
    nlohmann::json primes = nlohmann::json::array();
    for (const PrimeEvidence& ev : report.per_prime) {
        nlohmann::json e;
        e["p"] = to_string(ev.prime);
        e["mod4"] = std::to_string(ev.mod4);
        e["valuation"] = std::to_string(ev.valuation);
        nlohmann::json exps = nlohmann::json::array();
        for (unsigned x : ev.primary_exponents) exps.push_back(std::to_string(x));
        e["exponents"] = exps;
        e["theorem1"] = ev.theorem1_fires;
        e["goeritz"] = ev.goeritz_fires;
        e["goeritz_strong"] = ev.goeritz_strong_fires;
        e["oracle"] = oracle_to_string(ev.oracle);
        primes.push_back(e);
    }
    j["primes"] = primes;
    j["verdict"] =
        report.verdict == Verdict::kObstructed ? "OBSTRUCTED" : "INCONCLUSIVE";
    nlohmann::json obstructing = nlohmann::json::array();
    for (const Int& p : report.obstructing_primes) obstructing.push_back(to_string(p));
    j["obstructing_primes"] = obstructing;
    return j;
}

ChiralityReport report_from_json(const nlohmann::json& j) {
    ChiralityReport r;
    r.knot_label = j.at("label").get<std::string>();
    r.determinant = Int(j.at("determinant").get<std::string>());
    std::vector<Int> factors;
    for (const auto& f : j.at("group").at("invariant_factors"))
        factors.emplace_back(f.get<std::string>());
    r.group = AbelianGroup(std::move(factors));
    for (const auto& e : j.at("primes")) {
        PrimeEvidence ev;
        ev.prime = Int(e.at("p").get<std::string>());
        ev.mod4 = std::stoi(e.at("mod4").get<std::string>());
        ev.valuation =
            static_cast<unsigned>(std::stoul(e.at("valuation").get<std::string>()));
        for (const auto& x : e.at("exponents"))
            ev.primary_exponents.push_back(
                static_cast<unsigned>(std::stoul(x.get<std::string>())));
        ev.theorem1_fires = e.at("theorem1").get<bool>();
        ev.goeritz_fires = e.at("goeritz").get<bool>();
        ev.goeritz_strong_fires = e.at("goeritz_strong").get<bool>();
        ev.oracle = oracle_from_string(e.at("oracle").get<std::string>());
        r.per_prime.push_back(std::move(ev));
    }
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "OBSTRUCTED")
        r.verdict = Verdict::kObstructed;
    else if (verdict == "INCONCLUSIVE")
        r.verdict = Verdict::kInconclusive;
    else
        throw ContractError("unknown verdict: " + verdict);
    for (const auto& p : j.at("obstructing_primes"))
        r.obstructing_primes.emplace_back(p.get<std::string>());
    return r;
}

namespace {

std::string text_report(const ChiralityReport& r) {
    std::ostringstream out;
    out << r.knot_label << ": determinant " << to_string(r.determinant)
        << ", H1 of the double branched cover = " << group_to_string(r.group)
        << "\n";
    for (const PrimeEvidence& ev : r.per_prime) {
        std::string p = to_string(ev.prime);
        out << "  p = " << p << " (" << ev.mod4 << " mod 4), valuation "
            << ev.valuation << ", " << p << "-primary part: ";
        if (ev.primary_exponents.empty()) {
            out << "zero";
        } else {
            for (std::size_t i = 0; i < ev.primary_exponents.size(); ++i) {
                Int pe;
                mpz_pow_ui(pe.get_mpz_t(), ev.prime.get_mpz_t(),
                           ev.primary_exponents[i]);
                out << (i ? " + " : "") << "Z_" << to_string(pe);
            }
            out << (ev.primary_exponents.size() == 1 ? " (cyclic)" : " (not cyclic)");
        }
        out << "\n";

        out << "    Theorem 1: ";
        if (ev.theorem1_fires) {
            out << "obstructs (p = 3 mod 4 and the " << p
                << "-part is nonzero cyclic)";
            if (ev.oracle == OracleStatus::kConfirmed)
                out << " [oracle: exhaustive search confirms no isometry with the "
                       "negated form]";
            else if (ev.oracle == OracleStatus::kBoundExceeded)
                out << " [oracle: skipped, modulus beyond enumeration bound]";
        } else if (ev.mod4 == 1) {
            out << "does not apply (p = 1 mod 4)";
        } else {
            out << "does not obstruct (the " << p << "-part is not cyclic)";
        }
        out << "\n";

        out << "    Goeritz: ";
        if (ev.goeritz_fires)
            out << "obstructs (" << p << " divides the determinant, " << p
                << "^2 does not)";
        else if (ev.mod4 == 1)
            out << "does not apply (p = 1 mod 4)";
        else
            out << "does not obstruct (" << p << "^2 divides the determinant)";
        out << "; strong form: ";
        if (ev.goeritz_strong_fires)
            out << "obstructs (valuation " << ev.valuation << " is odd)";
        else if (ev.mod4 == 1)
            out << "does not apply";
        else
            out << "does not obstruct (valuation " << ev.valuation << " is even)";
        out << "\n";
    }
    if (r.verdict == Verdict::kObstructed) {
        out << "verdict: OBSTRUCTED, the knot is provably chiral (obstructing "
               "primes:";
        for (const Int& p : r.obstructing_primes) out << " " << to_string(p);
        out << ")\n";
    } else {
        out << "verdict: INCONCLUSIVE (no obstruction found; this does not prove "
               "amphichirality)\n";
    }
    return out.str();
}

}  // namespace

std::string emit_report(const ChiralityReport& report, ReportFormat format) {
    if (format == ReportFormat::kJson) return report_to_json(report).dump(2);
    return text_report(report);
}

std::vector<ScanOutcome> scan_table(const KnotTable& table, unsigned jobs,
                                    std::uint64_t oracle_bound) {
    std::vector<ScanOutcome> outcomes(table.records.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    auto run_one = [&](std::size_t i) {
        const SeifertMatrixRecord& rec = table.records[i];
        outcomes[i].label = rec.label;
        try {
            outcomes[i].report =
                full_report(rec.label, rec.matrix, rec.alexander_coeffs, oracle_bound);
        } catch (const std::exception& e) {
            outcomes[i].error = e.what();
        }
    };

    if (jobs <= 1 || table.records.size() <= 1) {
        for (std::size_t i = 0; i < table.records.size(); ++i) run_one(i);
        return outcomes;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    unsigned count = std::min<std::size_t>(jobs, table.records.size());
    workers.reserve(count);
    for (unsigned w = 0; w < count; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < table.records.size();
                 i = next.fetch_add(1))
                run_one(i);
        });
    for (auto& t : workers) t.join();
    return outcomes;
}

}  // namespace chiral
