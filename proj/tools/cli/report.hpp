// report.hpp -- text and JSON renderings of PropertyReport and layer dumps

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "magicsq/layers.hpp"
#include "magicsq/verify.hpp"

namespace magicsq::cli {

/// Which properties the caller asked verify to enforce. Magic is always
/// requested.
struct Requested
{
    bool bimagic = false;
    bool pandiagonal = false;
    std::vector<std::size_t> blocks;
};

struct CheckResult
{
    std::string name;
    bool passed = false;
};

std::vector<CheckResult> evaluate(const PropertyReport& report, const Requested& requested);
bool all_passed(const std::vector<CheckResult>& checks);

std::string format_text(const PropertyReport& report, const std::vector<CheckResult>& checks, bool color);
nlohmann::ordered_json to_json(const PropertyReport& report, const std::vector<CheckResult>& checks);

std::string format_layers_text(const LayerStack& stack);
nlohmann::ordered_json layers_to_json(const LayerStack& stack);

}  // namespace magicsq::cli
