#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscifit {

/// Render a double with 17 significant digits -- enough for exact
/// binary round-tripping -- with "nan"/"inf" spelled out stably.
[[nodiscard]] inline std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Minimal CSV emitter: UTF-8, comma separators, LF line endings (the
/// stream is opened in binary mode so no platform translation sneaks in),
/// one header row, numbers at 17 significant digits.
class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path)
        : out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
    }

    void header(std::initializer_list<std::string> names) { raw_row(names.begin(), names.end()); }

    void row(std::initializer_list<std::string> cells) { raw_row(cells.begin(), cells.end()); }

    void row(const std::vector<std::string>& cells) { raw_row(cells.begin(), cells.end()); }

private:
    template <typename It>
    void raw_row(It first, It last) {
        bool lead = true;
        for (It it = first; it != last; ++it) {
            if (!lead) out_ << ',';
            out_ << *it;
            lead = false;
        }
        out_ << '\n';
    }

    std::ofstream out_;
};

/// Resolve where an artifact lands: an absolute path wins as-is; relative
/// paths (and bare default names) go under $OSCIFIT_OUT_DIR when that is
/// set, the working directory otherwise. The directory is created.
[[nodiscard]] inline std::filesystem::path resolve_output_path(const std::string& requested,
                                                               const std::string& default_name) {
    std::filesystem::path p = requested.empty() ? std::filesystem::path(default_name)
                                                : std::filesystem::path(requested);
    if (!p.is_absolute()) {
        if (const char* dir = std::getenv("OSCIFIT_OUT_DIR"); dir && *dir)
            p = std::filesystem::path(dir) / p;
    }
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    return p;
}

/// Sibling path with the same stem and an extra suffix, e.g.
/// ("runs/kepler.csv", "_summary", ".csv") -> "runs/kepler_summary.csv".
[[nodiscard]] inline std::filesystem::path sibling_path(const std::filesystem::path& base,
                                                        const std::string& suffix,
                                                        const std::string& extension) {
    std::filesystem::path p = base;
    p.replace_filename(base.stem().string() + suffix + extension);
    return p;
}

} // namespace oscifit
