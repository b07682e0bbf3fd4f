#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tracecodes/tracecode.hpp"

namespace tracecodes::cli {

enum class Format { Table, Json, Csv };

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalid = 2, kBudget = 3 };

struct RunConfig {
    std::string command;
    unsigned p = 0;
    unsigned s = 1;
    unsigned m = 1;
    std::uint64_t e = 1;
    std::uint64_t N = 0;  // periods only
    std::uint64_t d = 0;  // griesmer; 0 = take it from the prediction
    Format format = Format::Table;
    std::uint64_t budget = code::kDefaultWorkBudget;
    unsigned workers = 0;
    bool strict = false;
    // scan
    std::string p_range, s_range = "1", m_range, e_range = "all";
    std::vector<std::string> specs;  // "p,s,m,e"
    std::uint64_t gcd_filter = 0;
    std::uint64_t min_e = 0;
};

/// "2,3,5-7" -> {2,3,5,6,7}; empty string -> {}.
std::vector<std::uint64_t> parse_range(const std::string& text);

int cmd_info(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_predict(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_periods(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_griesmer(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tracecodes::cli
