#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "document.hpp"
#include "magicsq/magicsq.hpp"
#include "report.hpp"

namespace magicsq::cli {

namespace {

struct VerifyOptions
{
    std::string input = "-";
    bool bimagic = false;
    bool pandiagonal = false;
    std::vector<std::size_t> blocks;
    std::string report = "text";
};

struct GenerateOptions
{
    std::size_t order = 3;
    std::size_t width = 1;
    std::string alphabet = "012";
    std::string line_sum;
    bool pandiagonal = false;
    bool palindromic = false;
    bool distinct = false;
    bool bimagic = false;
    std::size_t limit = 1;
    std::uint64_t seed = 0;
    std::uint64_t budget_ms = 60000;
    bool deterministic = false;
    std::string out;
    std::string format = "json";
};

struct TransformOptions
{
    std::string input = "-";
    bool rotate = false;
    bool mirror = false;
    std::string out;
};

struct RenderOptions
{
    std::string input = "-";
    bool compact = false;
};

struct DecomposeOptions
{
    std::string input = "-";
    std::string report = "text";
};

/// Usage problems detected after CLI11 has parsed the flags.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, Streams& io)
{
    if (path == "-") {
        std::ostringstream buf;
        buf << io.in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw InputError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, Streams& io)
{
    if (path.empty() || path == "-") {
        io.out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw InputError("cannot write " + path);
    }
}

std::vector<int> parse_line_sums(const std::string& text, std::size_t width)
{
    std::vector<int> sums;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            sums.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError("--line-sum expects integers, got \"" + item + "\"");
        }
    }
    if (sums.size() == 1) {
        sums.assign(width, sums.front());
    }
    if (sums.size() != width) {
        throw UsageError("--line-sum needs 1 or " + std::to_string(width) + " values, got " +
                         std::to_string(sums.size()));
    }
    return sums;
}

int cmd_verify(const VerifyOptions& opt, Streams& io)
{
    auto set = parse_documents(read_input(opt.input, io));
    Requested requested{opt.bimagic, opt.pandiagonal, opt.blocks};
    bool passed = true;
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    std::string text;
    for (std::size_t k = 0; k < set.documents.size(); ++k) {
        Square square = set.documents[k].to_square();
        PropertyReport report;
        try {
            report = verify(square, opt.blocks);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::BadBlockSize) {
                throw UsageError(e.what());
            }
            throw;
        }
        auto checks = evaluate(report, requested);
        passed = passed && all_passed(checks);
        if (opt.report == "json") {
            reports.push_back(to_json(report, checks));
        } else {
            if (k > 0) {
                text += "---\n";
            }
            text += format_text(report, checks, io.color);
        }
    }
    if (opt.report == "json") {
        io.out << (set.documents.size() == 1 && !set.json_array ? reports.front().dump(2) : reports.dump(2))
               << "\n";
    } else {
        io.out << text;
    }
    return passed ? kExitOk : kExitPropertyFailed;
}

int cmd_generate(const GenerateOptions& opt, const CLI::App& sub, Streams& io)
{
    SearchSpec spec;
    spec.order = opt.order;
    spec.width = opt.width;
    if (opt.bimagic && sub.count("--width") == 0) {
        spec.width = 4;
    }
    if (opt.bimagic && sub.count("--order") == 0) {
        spec.order = 9;
    }
    try {
        spec.alphabet = Alphabet::parse(opt.alphabet);
    } catch (const Error& e) {
        throw UsageError(std::string("--alphabet: ") + e.what());
    }
    if (!opt.line_sum.empty()) {
        spec.line_sum_per_place = parse_line_sums(opt.line_sum, spec.width);
    } else if (!opt.bimagic) {
        throw UsageError("--line-sum is required unless --bimagic is given");
    }
    if (opt.bimagic && spec.order != 9) {
        throw UsageError("--bimagic is only supported with --order 9");
    }
    spec.require_pandiagonal = opt.pandiagonal;
    spec.require_palindromic = opt.palindromic;
    spec.require_distinct = opt.distinct;
    spec.require_bimagic = opt.bimagic;
    spec.limit = opt.limit;
    spec.seed = opt.seed;
    spec.budget = std::chrono::milliseconds(opt.budget_ms);
    spec.deterministic = opt.deterministic;

    DocumentSet set;
    set.format = opt.format == "csv" ? DocumentFormat::Csv : DocumentFormat::Json;
    set.json_array = true;
    SearchOutcome outcome;
    try {
        outcome = gen_square(spec, [&](const Square& square) {
            set.documents.push_back(SquareDocument::from_square(square));
            return true;
        });
    } catch (const Error& e) {
        switch (e.code()) {
        case ErrorCode::Unsatisfiable:
        case ErrorCode::BudgetExhausted:
            io.err << "magicsq generate: " << to_string(e.code()) << ": " << e.what() << "\n";
            return kExitSearchExhausted;
        case ErrorCode::InvalidSpec:
        case ErrorCode::InvalidDigit:
            throw UsageError(e.what());
        default:
            throw;
        }
    }
    write_output(opt.out, write_documents(set), io);
    if (outcome.status == SearchStatus::BudgetReached) {
        io.err << "magicsq generate: budget reached after " << outcome.emitted << " square(s)\n";
    }
    return kExitOk;
}

int cmd_transform(const TransformOptions& opt, Streams& io)
{
    if (opt.rotate == opt.mirror) {
        throw UsageError("transform needs exactly one of --rotate180 or --mirror");
    }
    auto set = parse_documents(read_input(opt.input, io));
    for (auto& doc : set.documents) {
        Square square = doc.to_square();
        try {
            square = opt.rotate ? rotate_square(square) : mirror_square(square);
        } catch (const UnmappedDigitError& e) {
            io.err << "magicsq transform: " << e.what() << "\n";
            return kExitPropertyFailed;
        }
        doc = SquareDocument::from_square(square);
    }
    write_output(opt.out, write_documents(set), io);
    return kExitOk;
}

int cmd_render(const RenderOptions& opt, Streams& io)
{
    auto set = parse_documents(read_input(opt.input, io));
    std::string out;
    for (std::size_t k = 0; k < set.documents.size(); ++k) {
        if (k > 0) {
            out += "---\n";
        }
        auto block = sevenseg::render_square(set.documents[k].to_square());
        if (opt.compact) {
            std::erase_if(block.lines, [](const std::string& line) {
                return line.find_first_not_of(' ') == std::string::npos;
            });
        }
        out += sevenseg::to_text(block);
    }
    io.out << out;
    return kExitOk;
}

int cmd_decompose(const DecomposeOptions& opt, Streams& io)
{
    auto set = parse_documents(read_input(opt.input, io));
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    std::string text;
    for (std::size_t k = 0; k < set.documents.size(); ++k) {
        auto stack = decompose(set.documents[k].to_square());
        if (opt.report == "json") {
            all.push_back(layers_to_json(stack));
        } else {
            if (k > 0) {
                text += "---\n";
            }
            text += format_layers_text(stack);
        }
    }
    if (opt.report == "json") {
        io.out << (set.documents.size() == 1 && !set.json_array ? all.front().dump(2) : all.dump(2)) << "\n";
    } else {
        io.out << text;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams& io)
{
    CLI::App app{"Generate, transform, render and verify magic squares of fixed-width digit strings",
                 "magicsq"};
    app.require_subcommand(1);

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand("verify", "Report S1, S2 and structural properties of a square");
    verify_cmd->add_option("input", verify_opt.input, "Square document (JSON or CSV); '-' for stdin");
    verify_cmd->add_flag("--bimagic", verify_opt.bimagic, "Require a constant line sum of squares");
    verify_cmd->add_flag("--pandiagonal", verify_opt.pandiagonal, "Require all broken diagonals to sum to S1");
    verify_cmd->add_option("--blocks", verify_opt.blocks, "Require constant k x k block sums (repeatable, or K,K)")
        ->allow_extra_args(false)
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--report", verify_opt.report, "Report format")
        ->check(CLI::IsMember({"text", "json"}));

    GenerateOptions gen_opt;
    auto* gen_cmd = app.add_subcommand("generate", "Search for squares built from constant-sum digit planes");
    gen_cmd->add_option("--order", gen_opt.order, "Order n of the square")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--width", gen_opt.width, "Digits per cell")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--alphabet", gen_opt.alphabet, "Allowed digits");
    gen_cmd->add_option("--line-sum", gen_opt.line_sum, "Line sum per digit plane: S or S1,S2,...");
    gen_cmd->add_flag("--pandiagonal", gen_opt.pandiagonal, "Require all broken diagonals too");
    gen_cmd->add_flag("--palindromic", gen_opt.palindromic, "Every cell reads the same reversed");
    gen_cmd->add_flag("--distinct", gen_opt.distinct, "All cells different");
    gen_cmd->add_flag("--bimagic", gen_opt.bimagic, "Order-9 bimagic search over 012");
    gen_cmd->add_option("--limit", gen_opt.limit, "Maximum number of squares")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_opt.seed, "Seed for the randomized search order");
    gen_cmd->add_option("--budget-ms", gen_opt.budget_ms, "Time budget in milliseconds (0 = none)");
    gen_cmd->add_flag("--deterministic", gen_opt.deterministic, "Lexicographic search order");
    gen_cmd->add_option("--out", gen_opt.out, "Output file (default stdout)");
    gen_cmd->add_option("--format", gen_opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    TransformOptions tr_opt;
    auto* tr_cmd = app.add_subcommand("transform", "Rotate a square by 180 degrees or mirror it");
    tr_cmd->add_option("input", tr_opt.input, "Square document; '-' for stdin");
    auto* rot_flag = tr_cmd->add_flag("--rotate180", tr_opt.rotate, "Turn the square upside down");
    auto* mir_flag = tr_cmd->add_flag("--mirror", tr_opt.mirror, "Reflect about a vertical axis");
    rot_flag->excludes(mir_flag);
    tr_cmd->add_option("--out", tr_opt.out, "Output file (default stdout)");

    RenderOptions render_opt;
    auto* render_cmd = app.add_subcommand("render", "Draw a square with seven-segment digits");
    render_cmd->add_option("input", render_opt.input, "Square document; '-' for stdin");
    render_cmd->add_flag("--compact", render_opt.compact, "Drop blank lines between rows");

    DecomposeOptions dec_opt;
    auto* dec_cmd = app.add_subcommand("decompose", "Print the digit planes and their line sums");
    dec_cmd->add_option("input", dec_opt.input, "Square document; '-' for stdin");
    dec_cmd->add_option("--report", dec_opt.report, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv{"magicsq"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, io.out, io.err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify_cmd) {
            return cmd_verify(verify_opt, io);
        }
        if (*gen_cmd) {
            return cmd_generate(gen_opt, *gen_cmd, io);
        }
        if (*tr_cmd) {
            return cmd_transform(tr_opt, io);
        }
        if (*render_cmd) {
            return cmd_render(render_opt, io);
        }
        if (*dec_cmd) {
            return cmd_decompose(dec_opt, io);
        }
    } catch (const InputError& e) {
        io.err << "magicsq: malformed input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        io.err << "magicsq: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        io.err << "magicsq: " << to_string(e.code()) << ": " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace magicsq::cli
