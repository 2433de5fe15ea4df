#pragma once

#include <cstddef>
#include <string>

namespace workbench {

enum class DiagramMode { Skeleton, Full };
enum class OutputFormat { Json, Csv, Ascii };

/// Run-wide caps and knobs.  Flags override environment variables
/// (WORKBENCH_MAX_DEGREE, WORKBENCH_MAX_ORDER, WORKBENCH_MAX_RANK),
/// which override the defaults.
struct RunConfig {
    int max_degree = 12;
    std::size_t max_group_order = 1u << 15;
    std::size_t max_ea_rank = 6;
    DiagramMode mode = DiagramMode::Skeleton;
    OutputFormat format = OutputFormat::Ascii;
    unsigned long long seed = 0;

    void validate() const;
};

/// Defaults with the WORKBENCH_* environment overrides applied.
RunConfig config_from_environment();

DiagramMode parse_mode(const std::string& s);
OutputFormat parse_format(const std::string& s);
std::string mode_name(DiagramMode mode);

}  // namespace workbench
