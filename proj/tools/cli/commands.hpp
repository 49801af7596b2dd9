#pragma once

#include <string>
#include <vector>

namespace dualrail::cli {

/// In-memory CSV table: header row plus string cells. Written with LF line
/// endings, no quoting (no cell may contain a comma).
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    int column_index(const std::string& name) const;  // -1 when absent

    static CsvTable read_file(const std::string& path);
    static CsvTable parse(const std::string& text);
    std::string to_string() const;
    void write_file(const std::string& path) const;
};

/// Tidy long-format (group, x, y) series from a table. Numeric cells are
/// re-serialized with 17 significant digits; group order follows first
/// appearance, rows keep input order. An empty group name yields a single
/// series named "all".
CsvTable emit_plot_series(const CsvTable& table, const std::string& x, const std::string& y,
                          const std::string& group);

// Exit codes: 0 success/heralded, 1 error, 2 schedule exhausted,
// 3 validation thresholds failed.
int cmd_simulate(const std::string& config_path);
int cmd_sweep(const std::string& config_path);
int cmd_fit(const std::string& config_path);
int cmd_validate(const std::string& config_path);
int cmd_schedule_opt(const std::string& config_path);
int cmd_plot(const std::string& input, const std::string& x, const std::string& y,
             const std::string& group, const std::string& output);

/// Runs a command body, mapping library errors onto the exit-code contract
/// and a single-line machine-parsable diagnostic on stderr.
int run_command(const std::string& name, int (*body)(const std::string&),
                const std::string& config_path);

}  // namespace dualrail::cli
