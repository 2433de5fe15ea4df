#include "workbench/config.hpp"

#include <cstdlib>
#include <stdexcept>

namespace workbench {

void RunConfig::validate() const {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    if (max_group_order == 0) throw std::invalid_argument("max_group_order must be positive");
}

RunConfig config_from_environment() {
    RunConfig cfg;
    if (const char* v = std::getenv("WORKBENCH_MAX_DEGREE")) cfg.max_degree = std::atoi(v);
    if (const char* v = std::getenv("WORKBENCH_MAX_ORDER")) cfg.max_group_order = std::strtoull(v, nullptr, 10);
    if (const char* v = std::getenv("WORKBENCH_MAX_RANK")) cfg.max_ea_rank = std::strtoull(v, nullptr, 10);
    return cfg;
}

DiagramMode parse_mode(const std::string& s) {
    if (s == "skeleton") return DiagramMode::Skeleton;
    if (s == "full") return DiagramMode::Full;
    throw std::invalid_argument("unknown mode: " + s);
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "ascii") return OutputFormat::Ascii;
    throw std::invalid_argument("unknown format: " + s);
}

std::string mode_name(DiagramMode mode) { return mode == DiagramMode::Skeleton ? "skeleton" : "full"; }

}  // namespace workbench
