#include "report.hpp"

#include <algorithm>

namespace magicsq::cli {

using nlohmann::ordered_json;

namespace {

const char* yes_no(bool v) { return v ? "yes" : "no"; }

std::string exact_or_dash(const std::optional<Exact>& v) { return v ? to_string(*v) : "-"; }

ordered_json exact_or_null(const std::optional<Exact>& v)
{
    return v ? ordered_json(to_string(*v)) : ordered_json(nullptr);
}

const char* kind_name(LineKind kind)
{
    switch (kind) {
    case LineKind::Row: return "row";
    case LineKind::Column: return "column";
    case LineKind::MainDiagonal: return "main_diagonal";
    case LineKind::AntiDiagonal: return "anti_diagonal";
    }
    return "?";
}

std::string verdict(bool passed, bool color)
{
    if (!color) {
        return passed ? "PASS" : "FAIL";
    }
    return passed ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

void append_field(std::string& out, const std::string& key, const std::string& value)
{
    out += key;
    out.append(key.size() < 24 ? 24 - key.size() : 1, ' ');
    out += value;
    out += '\n';
}

}  // namespace

std::vector<CheckResult> evaluate(const PropertyReport& report, const Requested& requested)
{
    std::vector<CheckResult> checks;
    checks.push_back({"magic", report.is_magic});
    if (requested.bimagic) {
        checks.push_back({"bimagic", report.is_bimagic});
    }
    if (requested.pandiagonal) {
        checks.push_back({"pandiagonal", report.is_pandiagonal});
        if (requested.bimagic) {
            checks.push_back({"pandiagonal_bimagic", report.is_pandiagonal_bimagic});
        }
    }
    for (std::size_t k : requested.blocks) {
        auto it = std::find_if(report.block_results.begin(), report.block_results.end(),
                               [k](const BlockResult& b) { return b.block == k; });
        checks.push_back({"blocks " + std::to_string(k),
                          it != report.block_results.end() && it->common_sum.has_value()});
    }
    return checks;
}

bool all_passed(const std::vector<CheckResult>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string format_text(const PropertyReport& report, const std::vector<CheckResult>& checks, bool color)
{
    std::string out;
    append_field(out, "order", std::to_string(report.order));
    append_field(out, "width", std::to_string(report.width));
    append_field(out, "s1", exact_or_dash(report.s1));
    append_field(out, "s2", exact_or_dash(report.s2));
    append_field(out, "magic", yes_no(report.is_magic));
    append_field(out, "bimagic", yes_no(report.is_bimagic));
    append_field(out, "pandiagonal", yes_no(report.is_pandiagonal));
    append_field(out, "pandiagonal_bimagic", yes_no(report.is_pandiagonal_bimagic));
    if (report.block_results.empty()) {
        append_field(out, "blocks", "-");
    }
    for (const auto& b : report.block_results) {
        append_field(out, "block " + std::to_string(b.block) + "x" + std::to_string(b.block),
                     exact_or_dash(b.common_sum));
    }
    append_field(out, "entries_palindromic", yes_no(report.all_entries_palindromic));
    append_field(out, "entries_distinct", yes_no(report.all_entries_distinct));
    append_field(out, "rotation_closed", yes_no(report.rotation_closed));
    out += "lines\n";
    for (const auto& line : report.lines) {
        std::string id = "  " + to_string(line.line);
        id.resize(std::max<std::size_t>(id.size() + 1, 10), ' ');
        out += id + "sum " + to_string(line.sum) + "  sumsq " + to_string(line.sum_of_squares) + "\n";
    }
    for (const auto& c : checks) {
        append_field(out, "check " + c.name, verdict(c.passed, color));
    }
    append_field(out, "result", verdict(all_passed(checks), color));
    return out;
}

ordered_json to_json(const PropertyReport& report, const std::vector<CheckResult>& checks)
{
    ordered_json j;
    j["order"] = report.order;
    j["width"] = report.width;
    j["s1"] = exact_or_null(report.s1);
    j["s2"] = exact_or_null(report.s2);
    j["is_magic"] = report.is_magic;
    j["is_bimagic"] = report.is_bimagic;
    j["is_pandiagonal"] = report.is_pandiagonal;
    j["is_pandiagonal_bimagic"] = report.is_pandiagonal_bimagic;
    j["block_results"] = ordered_json::array();
    for (const auto& b : report.block_results) {
        j["block_results"].push_back({{"k", b.block}, {"common_block_sum", exact_or_null(b.common_sum)}});
    }
    j["all_entries_palindromic"] = report.all_entries_palindromic;
    j["all_entries_distinct"] = report.all_entries_distinct;
    j["rotation_closed"] = report.rotation_closed;
    j["line_sums"] = ordered_json::array();
    for (const auto& line : report.lines) {
        j["line_sums"].push_back({{"line", to_string(line.line)},
                                  {"kind", kind_name(line.line.kind)},
                                  {"index", line.line.index},
                                  {"sum", to_string(line.sum)},
                                  {"sum_of_squares", to_string(line.sum_of_squares)}});
    }
    j["checks"] = ordered_json::object();
    for (const auto& c : checks) {
        j["checks"][c.name] = c.passed;
    }
    j["passed"] = all_passed(checks);
    return j;
}

namespace {

std::vector<LineSum> layer_lines(const Layer& layer)
{
    LayerStack single;
    single.order = layer.order();
    single.layers.push_back(layer);
    return line_sums(recompose(single));
}

}  // namespace

std::string format_layers_text(const LayerStack& stack)
{
    std::string out;
    for (std::size_t p = 0; p < stack.layers.size(); ++p) {
        const auto& layer = stack.layers[p];
        out += "layer " + std::to_string(p) + " (10^" + std::to_string(stack.width() - 1 - p) + ")\n";
        for (std::size_t i = 0; i < layer.order(); ++i) {
            out += " ";
            for (std::size_t j = 0; j < layer.order(); ++j) {
                out += " ";
                out += static_cast<char>('0' + layer.at(i, j));
            }
            out += "\n";
        }
        out += "  sums";
        for (const auto& line : layer_lines(layer)) {
            out += " " + to_string(line.line) + "=" + to_string(line.sum) + ";";
        }
        out.pop_back();
        out += "\n";
    }
    return out;
}

ordered_json layers_to_json(const LayerStack& stack)
{
    ordered_json j;
    j["order"] = stack.order;
    j["width"] = stack.width();
    j["layers"] = ordered_json::array();
    for (std::size_t p = 0; p < stack.layers.size(); ++p) {
        const auto& layer = stack.layers[p];
        ordered_json grid = ordered_json::array();
        for (std::size_t i = 0; i < layer.order(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j2 = 0; j2 < layer.order(); ++j2) {
                row.push_back(static_cast<int>(layer.at(i, j2)));
            }
            grid.push_back(std::move(row));
        }
        ordered_json sums = ordered_json::array();
        for (const auto& line : layer_lines(layer)) {
            sums.push_back({{"line", to_string(line.line)}, {"sum", static_cast<long long>(line.sum)}});
        }
        j["layers"].push_back({{"place", p}, {"grid", std::move(grid)}, {"line_sums", std::move(sums)}});
    }
    return j;
}

}  // namespace magicsq::cli
