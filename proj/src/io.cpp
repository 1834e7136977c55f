#include "torsionscan/io.hpp"

#include <cctype>
#include <istream>
#include <limits>
#include <sstream>
#include <utility>

#include "torsionscan/errors.hpp"

namespace torsionscan {

namespace {

constexpr std::size_t max_header_side = 4096;
constexpr std::size_t max_entry_digits = 15;

struct Token {
    std::string text;
    long long line = 0;
    long long column = 0; // 1-based position of the first character
};

// Whitespace-separated tokens with line/column tracking.
class Lexer {
public:
    explicit Lexer(std::istream& in) : in_(in) {}

    std::optional<Token> next() {
        for (;;) {
            while (pos_ < current_.size() &&
                   std::isspace(static_cast<unsigned char>(current_[pos_]))) {
                ++pos_;
            }
            if (pos_ < current_.size()) break;
            if (!std::getline(in_, current_)) return std::nullopt;
            ++line_;
            pos_ = 0;
        }
        std::size_t start = pos_;
        while (pos_ < current_.size() &&
               !std::isspace(static_cast<unsigned char>(current_[pos_]))) {
            ++pos_;
        }
        return Token{current_.substr(start, pos_ - start), line_,
                     static_cast<long long>(start) + 1};
    }

    // remainder of the line the last token came from, trimmed
    std::string rest_of_line() {
        std::size_t begin = pos_;
        while (begin < current_.size() &&
               std::isspace(static_cast<unsigned char>(current_[begin]))) {
            ++begin;
        }
        std::size_t end = current_.size();
        while (end > begin &&
               std::isspace(static_cast<unsigned char>(current_[end - 1]))) {
            --end;
        }
        pos_ = current_.size();
        return current_.substr(begin, end - begin);
    }

    long long line() const { return line_ == 0 ? 1 : line_; }

private:
    std::istream& in_;
    std::string current_;
    long long line_ = 0;
    std::size_t pos_ = 0;
};

Int parse_integer_token(const Token& tok) {
    const std::string& s = tok.text;
    std::size_t first_digit = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (first_digit == s.size()) {
        throw parse_error("expected an integer, got '" + s + "'", tok.line, tok.column);
    }
    for (std::size_t i = first_digit; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw parse_error("expected an integer, got '" + s + "'", tok.line, tok.column);
        }
    }
    if (s.size() - first_digit > max_entry_digits) {
        throw parse_error("integer entry '" + s + "' exceeds " +
                              std::to_string(max_entry_digits) + " digits",
                          tok.line, tok.column);
    }
    return Int(s);
}

std::size_t parse_header_count(const Token& tok) {
    Int value = parse_integer_token(tok);
    if (value < 1 || value > Int(max_header_side)) {
        throw parse_error("header count '" + tok.text + "' out of range (1.." +
                              std::to_string(max_header_side) + ")",
                          tok.line, tok.column);
    }
    return static_cast<std::size_t>(value);
}

// Reads one record starting from its first header token. Throws parse_error
// if the numbers cannot be read.
VertexMatrixRecord read_record(Lexer& lex, const Token& first,
                               SquareOrientation square) {
    VertexMatrixRecord rec;
    rec.line = first.line;
    std::size_t rows = parse_header_count(first);
    std::optional<Token> second = lex.next();
    if (!second) {
        throw parse_error("unexpected end of input after the header row count",
                          lex.line());
    }
    std::size_t cols = parse_header_count(*second);
    rec.comment = lex.rest_of_line();

    std::vector<IntVector> entries(rows, IntVector(cols, Int(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            std::optional<Token> tok = lex.next();
            if (!tok) {
                throw parse_error("unexpected end of input inside a " +
                                      std::to_string(rows) + " x " +
                                      std::to_string(cols) + " matrix",
                                  lex.line());
            }
            entries[r][c] = parse_integer_token(*tok);
        }
    }

    bool points_in_rows = rows > cols ||
                          (rows == cols && square == SquareOrientation::rows_are_points);
    if (points_in_rows) {
        rec.dim = cols;
        rec.points = std::move(entries);
    } else {
        rec.dim = rows;
        rec.points.assign(cols, IntVector(rows, Int(0)));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                rec.points[c][r] = entries[r][c];
            }
        }
    }
    return rec;
}

} // namespace

VertexMatrixRecord parse_vertex_matrix(const std::string& text,
                                       SquareOrientation square) {
    std::istringstream in(text);
    Lexer lex(in);
    std::optional<Token> first = lex.next();
    if (!first) {
        throw parse_error("empty input, expected a 'rows cols' header", 1);
    }
    VertexMatrixRecord rec = read_record(lex, *first, square);
    if (std::optional<Token> extra = lex.next()) {
        throw parse_error("unexpected trailing data '" + extra->text + "'",
                          extra->line, extra->column);
    }
    return rec;
}

std::vector<ParsedRecord> read_polytopes(std::istream& in,
                                         SquareOrientation square) {
    std::vector<ParsedRecord> out;
    Lexer lex(in);
    for (;;) {
        std::optional<Token> first = lex.next();
        if (!first) break;
        ParsedRecord rec;
        rec.matrix.index = out.size();
        rec.matrix.line = first->line;
        try {
            rec.matrix = read_record(lex, *first, square);
            rec.matrix.index = out.size();
        } catch (const parse_error& e) {
            // token boundaries are unreliable from here on; stop the stream
            rec.error = e.what();
            out.push_back(std::move(rec));
            break;
        }
        try {
            rec.polytope = LatticePolytope::from_points(rec.matrix.dim, rec.matrix.points,
                                                        &rec.warnings);
        } catch (const input_error& e) {
            rec.error = e.what();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string emit_vertex_matrix(const LatticePolytope& polytope,
                               const std::string& comment) {
    const std::vector<IntVector>& verts = polytope.vertices();
    std::ostringstream os;
    os << polytope.dim() << ' ' << verts.size();
    if (!comment.empty()) os << ' ' << comment;
    os << '\n';
    for (std::size_t r = 0; r < polytope.dim(); ++r) {
        for (std::size_t c = 0; c < verts.size(); ++c) {
            if (c > 0) os << ' ';
            os << verts[c][r];
        }
        os << '\n';
    }
    return os.str();
}

nlohmann::ordered_json json_integer(const Int& value) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (value >= lo && value <= hi) {
        return value.convert_to<std::int64_t>();
    }
    return value.str();
}

nlohmann::ordered_json group_invariants_json(const FiniteAbelianGroup& group) {
    if (!group.is_finite()) {
        throw internal_error("reports only carry finite groups");
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Int& f : group.invariant_factors()) {
        arr.push_back(json_integer(f));
    }
    return arr;
}

std::string report_json(const TorsionReport& report) {
    nlohmann::ordered_json j;
    j["pi1"] = group_invariants_json(report.pi1);
    j["brauer"] = group_invariants_json(report.brauer);
    j["A"] = group_invariants_json(report.A);
    j["B"] = group_invariants_json(report.B);
    j["h11"] = report.h11;
    j["h21"] = report.h21;
    j["chi"] = report.chi;
    j["counts"] = {report.p_delta, report.v_delta, report.p_dstar, report.v_dstar};
    j["tors_k0_order"] = json_integer(report.tors_k0_order);
    j["tors_k1_order"] = json_integer(report.tors_k1_order);
    j["notes"] = {"tors_k0_order and tors_k1_order are group orders only; "
                  "the extensions are not determined"};
    return j.dump();
}

std::string report_table_line(const TorsionReport& report) {
    std::ostringstream os;
    os << report.pi1.order() << " | " << report.p_delta << ' ' << report.v_delta
       << " | " << report.p_dstar << ' ' << report.v_dstar << " | " << report.h11
       << ' ' << report.h21 << " | " << report.chi;
    return os.str();
}

} // namespace torsionscan
