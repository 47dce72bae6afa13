// document.hpp -- SquareDocument reading and writing (JSON and CSV)
//
// JSON:
//   {"order": 3, "width": 4, "alphabet": "012",
//    "rows": [["1221", "1111", "1001"], ...]}
// A file may hold one object or an array of objects. Cells are always
// strings so leading zeros survive.
//
// CSV (for hand-written fixtures):
//   # 3,4,012
//   "1221","1111","1001"
//   ...
// The header carries order, width and an optional alphabet. Several
// documents may be separated by a line containing only "---".

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "magicsq/types.hpp"

namespace magicsq::cli {

struct SquareDocument
{
    std::size_t order = 0;
    std::size_t width = 0;
    std::optional<std::string> alphabet;
    std::vector<std::vector<std::string>> rows;

    /// Validated square with the declared alphabet attached.
    Square to_square() const;
    static SquareDocument from_square(const Square& square);
};

enum class DocumentFormat { Json, Csv };

/// Everything read from one input: the documents plus how they were laid
/// out, so a transform can write the same shape back.
struct DocumentSet
{
    DocumentFormat format = DocumentFormat::Json;
    bool json_array = false;
    std::vector<SquareDocument> documents;
};

/// Malformed input. line/column are 1-based when known, 0 otherwise.
class InputError : public std::runtime_error
{
public:
    InputError(const std::string& message, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Detects JSON by a leading '{' or '['; anything else is read as CSV.
/// Also validates every document (shape, widths, digits, alphabet).
DocumentSet parse_documents(std::string_view text);

std::string write_json(const SquareDocument& doc);
std::string write_csv(const SquareDocument& doc);
std::string write_documents(const DocumentSet& set);

}  // namespace magicsq::cli
