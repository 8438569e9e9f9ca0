#ifndef ENCGRAM_DATASET_HPP
#define ENCGRAM_DATASET_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "encgram/errors.hpp"
#include "encgram/json_util.hpp"
#include "encgram/result.hpp"
#include "encgram/scalar.hpp"

// Tabular datasets: ordered rows of field -> Scalar. Field names need not be
// uniform across rows; an absent field reads as null.

namespace encgram {

/// One row, in document order. Names are unique within a row.
using Row = std::vector<std::pair<std::string, Scalar>>;

struct Dataset {
    std::vector<Row> rows;

    friend bool operator==(const Dataset&, const Dataset&) = default;
};

enum class TableFormat { Json, Csv };

/// Exact key lookup; no nested-path syntax. Absent -> null.
inline Scalar get_field(const Row& row, const std::string& name) {
    for (const auto& [k, v] : row)
        if (k == name) return v;
    return Scalar{};
}

namespace detail {

/// CSV cell coercion, per cell: empty -> null, true/false -> boolean,
/// full-string finite number -> number, strict ISO 8601 -> timestamp,
/// anything else -> text. No whitespace trimming; cells mean what they say.
inline Scalar coerce_csv_cell(std::string cell) {
    if (cell.empty()) return Scalar{};
    if (cell == "true") return Scalar(true);
    if (cell == "false") return Scalar(false);
    double num = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), num);
    if (ec == std::errc() && ptr == cell.data() + cell.size() && std::isfinite(num))
        return Scalar(num);
    if (const auto ts = parse_iso8601(cell)) return Scalar::timestamp(*ts);
    return Scalar(std::move(cell));
}

struct CsvLocation {
    std::size_t row = 1;  ///< 1-based, header is row 1
    std::size_t col = 1;
};

/// RFC-4180 record reader: quoted cells, doubled quotes, CR LF or LF line
/// ends, newlines legal inside quotes. Returns one record per call.
class CsvReader {
public:
    explicit CsvReader(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    const CsvLocation& location() const { return loc_; }

    Result<std::vector<std::string>, ParseError> next_record() {
        std::vector<std::string> cells;
        std::string cell;
        bool in_quotes = false;
        bool cell_was_quoted = false;
        const CsvLocation start = loc_;
        while (true) {
            if (pos_ >= text_.size()) {
                if (in_quotes)
                    return ParseError{"", "unterminated quoted cell starting at row " +
                                              std::to_string(start.row)};
                cells.push_back(std::move(cell));
                return cells;
            }
            const char c = text_[pos_];
            if (in_quotes) {
                if (c == '"') {
                    if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') {
                        cell += '"';
                        advance(2);
                    } else {
                        in_quotes = false;
                        advance(1);
                    }
                } else if (c == '\n' || c == '\r') {
                    cell += c;
                    if (c == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n')
                        cell += '\n';
                    consume_newline();
                } else {
                    cell += c;
                    advance(1);
                }
                continue;
            }
            if (c == '"' && cell.empty() && !cell_was_quoted) {
                in_quotes = true;
                cell_was_quoted = true;
                advance(1);
                continue;
            }
            if (c == ',') {
                cells.push_back(std::move(cell));
                cell.clear();
                cell_was_quoted = false;
                advance(1);
                continue;
            }
            if (c == '\n' || c == '\r') {
                cells.push_back(std::move(cell));
                consume_newline();
                return cells;
            }
            if (c == '"' || cell_was_quoted)
                return ParseError{"", "stray character after quoted cell at row " +
                                          std::to_string(loc_.row) + ", column " +
                                          std::to_string(loc_.col)};
            cell += c;
            advance(1);
        }
    }

private:
    void advance(std::size_t n) {
        pos_ += n;
        loc_.col += n;
    }

    void consume_newline() {
        if (text_[pos_] == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') {
            pos_ += 2;
        } else {
            pos_ += 1;
        }
        ++loc_.row;
        loc_.col = 1;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    CsvLocation loc_;
};

inline Result<Dataset, ParseError> load_csv_rows(std::string_view doc) {
    if (doc.empty()) return ParseError{"", "empty document: a header row is required"};
    CsvReader reader(doc);
    auto header = reader.next_record();
    if (!header) return header.error();
    const std::vector<std::string>& names = header.value();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty())
            return ParseError{"", "empty column name at header column " + std::to_string(i + 1)};
        for (std::size_t j = 0; j < i; ++j)
            if (names[j] == names[i])
                return ParseError{"", "duplicate column name \"" + names[i] + "\""};
    }
    Dataset data;
    std::size_t row_number = 1;
    while (!reader.at_end()) {
        ++row_number;
        auto record = reader.next_record();
        if (!record) return record.error();
        std::vector<std::string>& cells = record.value();
        if (cells.size() == 1 && cells[0].empty()) continue;  // blank line
        if (cells.size() > names.size())
            return ParseError{"", "row " + std::to_string(row_number) + " has " +
                                      std::to_string(cells.size()) + " cells but the header has " +
                                      std::to_string(names.size())};
        Row row;
        row.reserve(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i)
            row.emplace_back(names[i], coerce_csv_cell(std::move(cells[i])));
        data.rows.push_back(std::move(row));
    }
    return data;
}

inline Result<Dataset, ParseError> load_json_rows(std::string_view doc) {
    auto parsed = parse_json_strict(doc);
    if (!parsed) return parsed.error();
    const ordered_json& root = parsed.value();
    if (!root.is_array()) return ParseError{"", "expected an array of row objects"};
    Dataset data;
    data.rows.reserve(root.size());
    for (std::size_t i = 0; i < root.size(); ++i) {
        const ordered_json& obj = root[i];
        const std::string row_path = "[" + std::to_string(i) + "]";
        if (!obj.is_object()) return ParseError{row_path, "expected a row object"};
        Row row;
        row.reserve(obj.size());
        for (const auto& [key, value] : obj.items()) {
            auto scalar = json_to_scalar(value);
            if (!scalar)
                return ParseError{row_path + "." + key,
                                  "nested values are not allowed in rows (" + scalar.error() + ")"};
            row.emplace_back(key, std::move(scalar.value()));
        }
        data.rows.push_back(std::move(row));
    }
    return data;
}

}  // namespace detail

inline Result<Dataset, ParseError> load_rows(std::string_view doc, TableFormat format) {
    if (format == TableFormat::Csv) return detail::load_csv_rows(doc);
    return detail::load_json_rows(doc);
}

/// JSON emission of a dataset (array of flat objects); load_rows of the
/// output reproduces the dataset for JSON-born data.
inline std::string serialize_rows(const Dataset& data) {
    ordered_json out = ordered_json::array();
    for (const Row& row : data.rows) {
        ordered_json obj = ordered_json::object();
        for (const auto& [k, v] : row) obj[k] = scalar_to_json(v);
        out.push_back(std::move(obj));
    }
    return out.dump();
}

/// Min/max over the field's non-null values coercible to the class; null
/// when no value qualifies. Invariant under row permutation.
inline std::optional<std::pair<Scalar, Scalar>> extent(const Dataset& data,
                                                       const std::string& field,
                                                       ValueClass value_class) {
    bool any = false;
    double lo = 0.0, hi = 0.0;
    for (const Row& row : data.rows) {
        const Scalar v = get_field(row, field);
        const auto x = coerce_class(v, value_class);
        if (!x) continue;
        if (!any) {
            lo = hi = *x;
            any = true;
        } else {
            lo = std::min(lo, *x);
            hi = std::max(hi, *x);
        }
    }
    if (!any) return std::nullopt;
    if (value_class == ValueClass::Timestamp)
        return std::make_pair(Scalar::timestamp(static_cast<std::int64_t>(std::llround(lo))),
                              Scalar::timestamp(static_cast<std::int64_t>(std::llround(hi))));
    return std::make_pair(Scalar(lo), Scalar(hi));
}

/// Distinct non-null values in first-appearance order. Row order is
/// semantic here: it controls categorical color assignment.
inline std::vector<Scalar> unique_values(const Dataset& data, const std::string& field) {
    std::vector<Scalar> out;
    for (const Row& row : data.rows) {
        const Scalar v = get_field(row, field);
        if (v.is_null()) continue;
        bool seen = false;
        for (const Scalar& u : out) {
            if (u == v) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(v);
    }
    return out;
}

}  // namespace encgram

#endif  // ENCGRAM_DATASET_HPP
