#include "document.hpp"

#include <algorithm>

#include <json.hpp>

#include "magicsq/errors.hpp"

namespace magicsq::cli {

using nlohmann::json;

namespace {

std::string cell_path(std::size_t i, std::size_t j)
{
    return "rows[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < offset; ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::size_t read_size(const json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw InputError(std::string("missing field \"") + key + "\"");
    }
    if (!it->is_number_unsigned()) {
        throw InputError(std::string("field \"") + key + "\" must be a non-negative integer");
    }
    return it->get<std::size_t>();
}

SquareDocument document_from_json(const json& obj)
{
    if (!obj.is_object()) {
        throw InputError("expected a JSON object for a square document");
    }
    SquareDocument doc;
    doc.order = read_size(obj, "order");
    doc.width = read_size(obj, "width");
    if (auto it = obj.find("alphabet"); it != obj.end() && !it->is_null()) {
        if (!it->is_string()) {
            throw InputError("field \"alphabet\" must be a string of digits");
        }
        doc.alphabet = it->get<std::string>();
    }
    auto rows = obj.find("rows");
    if (rows == obj.end() || !rows->is_array()) {
        throw InputError("field \"rows\" must be an array of rows");
    }
    for (std::size_t i = 0; i < rows->size(); ++i) {
        const json& row = (*rows)[i];
        if (!row.is_array()) {
            throw InputError("rows[" + std::to_string(i) + "] must be an array");
        }
        auto& out = doc.rows.emplace_back();
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_string()) {
                throw InputError(cell_path(i, j) + " must be a string (cells keep their leading zeros)");
            }
            out.push_back(row[j].get<std::string>());
        }
    }
    return doc;
}

DocumentSet parse_json(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw InputError(std::string("invalid JSON: ") + e.what(), line, column);
    }
    DocumentSet set;
    set.format = DocumentFormat::Json;
    if (root.is_array()) {
        set.json_array = true;
        for (std::size_t k = 0; k < root.size(); ++k) {
            try {
                set.documents.push_back(document_from_json(root[k]));
            } catch (const InputError& e) {
                throw InputError("document " + std::to_string(k) + ": " + e.what());
            }
        }
    } else {
        set.documents.push_back(document_from_json(root));
    }
    return set;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::size_t parse_header_number(std::string_view field, std::size_t line, std::size_t column)
{
    field = trim(field);
    if (field.empty() || !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        field.size() > 6) {
        throw InputError("header expects \"# order,width[,alphabet]\"", line, column);
    }
    return std::stoul(std::string(field));
}

DocumentSet parse_csv(std::string_view text)
{
    DocumentSet set;
    set.format = DocumentFormat::Csv;
    std::optional<SquareDocument> current;
    std::size_t line_no = 0;
    std::size_t start = 0;
    auto flush = [&](std::size_t line) {
        if (!current) {
            throw InputError("empty document", line, 1);
        }
        set.documents.push_back(std::move(*current));
        current.reset();
    };
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        std::string_view line = trim(raw);
        if (line.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        if (line == "---") {
            flush(line_no);
            continue;
        }
        if (line.front() == '#') {
            if (current) {
                throw InputError("unexpected second header; separate documents with ---", line_no, 1);
            }
            std::string_view body = line.substr(1);
            std::vector<std::string_view> fields;
            std::size_t pos = 0;
            while (true) {
                auto comma = body.find(',', pos);
                fields.push_back(body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos));
                if (comma == std::string_view::npos) {
                    break;
                }
                pos = comma + 1;
            }
            if (fields.size() < 2 || fields.size() > 3) {
                throw InputError("header expects \"# order,width[,alphabet]\"", line_no, 1);
            }
            SquareDocument doc;
            doc.order = parse_header_number(fields[0], line_no, 2);
            doc.width = parse_header_number(fields[1], line_no, 2);
            if (fields.size() == 3) {
                doc.alphabet = std::string(trim(fields[2]));
            }
            current = std::move(doc);
            continue;
        }
        if (!current) {
            throw InputError("missing \"# order,width\" header before the first row", line_no, 1);
        }
        auto& row = current->rows.emplace_back();
        std::size_t pos = 0;
        while (true) {
            auto comma = raw.find(',', pos);
            std::string_view field = raw.substr(pos, comma == std::string_view::npos ? raw.npos : comma - pos);
            const std::size_t column = pos + 1;
            field = trim(field);
            if (!field.empty() && field.front() == '"') {
                if (field.size() < 2 || field.back() != '"') {
                    throw InputError("unterminated quoted cell", line_no, column);
                }
                field = field.substr(1, field.size() - 2);
            }
            if (field.empty()) {
                throw InputError("empty cell", line_no, column);
            }
            if (auto bad = std::find_if(field.begin(), field.end(), [](char c) { return c < '0' || c > '9'; });
                bad != field.end()) {
                throw InputError(std::string("non-digit character '") + *bad + "' in cell", line_no, column);
            }
            row.emplace_back(field);
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
        if (end == text.size()) {
            break;
        }
    }
    if (current) {
        flush(line_no);
    }
    if (set.documents.empty()) {
        throw InputError("no square document found", line_no, 1);
    }
    return set;
}

}  // namespace

InputError::InputError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                         ": " + message),
      line_(line),
      column_(column)
{
}

Square SquareDocument::to_square() const
{
    if (order == 0) {
        throw InputError("order must be positive");
    }
    if (width == 0 || width > kMaxWidth) {
        throw InputError("width must be between 1 and " + std::to_string(kMaxWidth));
    }
    if (rows.size() != order) {
        throw InputError("expected " + std::to_string(order) + " rows, found " + std::to_string(rows.size()));
    }
    std::vector<CodeWord> cells;
    cells.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        if (rows[i].size() != order) {
            throw InputError("rows[" + std::to_string(i) + "] has " + std::to_string(rows[i].size()) +
                             " cells, expected " + std::to_string(order));
        }
        for (std::size_t j = 0; j < order; ++j) {
            const auto& cell = rows[i][j];
            if (cell.size() != width) {
                throw InputError(cell_path(i, j) + " \"" + cell + "\" has " + std::to_string(cell.size()) +
                                 " characters, expected " + std::to_string(width));
            }
            try {
                cells.emplace_back(cell);
            } catch (const Error&) {
                throw InputError(cell_path(i, j) + " \"" + cell + "\" is not a digit string");
            }
        }
    }
    Square square(order, std::move(cells));
    if (alphabet) {
        try {
            return square.with_alphabet(Alphabet::parse(*alphabet));
        } catch (const Error& e) {
            throw InputError(e.what());
        }
    }
    return square;
}

SquareDocument SquareDocument::from_square(const Square& square)
{
    SquareDocument doc;
    doc.order = square.order();
    doc.width = square.width();
    if (square.alphabet()) {
        doc.alphabet = square.alphabet()->str();
    }
    doc.rows = square.to_strings();
    return doc;
}

DocumentSet parse_documents(std::string_view text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        throw InputError("input is empty");
    }
    DocumentSet set = (text[first] == '{' || text[first] == '[') ? parse_json(text) : parse_csv(text);
    if (set.documents.empty()) {
        throw InputError("no square document found");
    }
    for (std::size_t k = 0; k < set.documents.size(); ++k) {
        try {
            set.documents[k].to_square();
        } catch (const InputError& e) {
            throw InputError(set.documents.size() > 1 ? "document " + std::to_string(k) + ": " + e.what()
                                                      : std::string(e.what()));
        }
    }
    return set;
}

std::string write_json(const SquareDocument& doc)
{
    std::string out = "{\n";
    out += "  \"order\": " + std::to_string(doc.order) + ",\n";
    out += "  \"width\": " + std::to_string(doc.width) + ",\n";
    if (doc.alphabet) {
        out += "  \"alphabet\": " + json(*doc.alphabet).dump() + ",\n";
    }
    out += "  \"rows\": [\n";
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        out += "    [";
        for (std::size_t j = 0; j < doc.rows[i].size(); ++j) {
            if (j > 0) {
                out += ", ";
            }
            out += json(doc.rows[i][j]).dump();
        }
        out += i + 1 < doc.rows.size() ? "],\n" : "]\n";
    }
    out += "  ]\n}";
    return out;
}

std::string write_csv(const SquareDocument& doc)
{
    std::string out = "# " + std::to_string(doc.order) + "," + std::to_string(doc.width);
    if (doc.alphabet) {
        out += "," + *doc.alphabet;
    }
    out += "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) {
                out += ",";
            }
            out += "\"" + row[j] + "\"";
        }
        out += "\n";
    }
    return out;
}

std::string write_documents(const DocumentSet& set)
{
    std::string out;
    if (set.format == DocumentFormat::Csv) {
        for (std::size_t k = 0; k < set.documents.size(); ++k) {
            if (k > 0) {
                out += "---\n";
            }
            out += write_csv(set.documents[k]);
        }
        return out;
    }
    if (!set.json_array && set.documents.size() == 1) {
        return write_json(set.documents.front()) + "\n";
    }
    out = "[\n";
    for (std::size_t k = 0; k < set.documents.size(); ++k) {
        out += write_json(set.documents[k]);
        out += k + 1 < set.documents.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

}  // namespace magicsq::cli
