#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chainring/serialize.hpp"

namespace chainring::cli {

enum Exit { kOk = 0, kMath = 1, kParse = 2 };

struct Result {
    int code = kOk;
    std::string out;  // serialized result
    std::string err;  // diagnostics
};

// Runs one job. format is "json", "text" or "dot" (dot only for poset-producing commands).
Result run_job(const json& job, const std::string& format = "json");
// Runs a list of jobs on a worker pool; output is a JSON array in input order.
Result run_batch(const json& jobs, const std::string& format = "json");

// Entry point used by the executable: argv parsing plus stdin.
Result main(const std::vector<std::string>& args, std::istream& in);

}  // namespace chainring::cli
