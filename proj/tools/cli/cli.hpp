#pragma once

// Command-line front end. run() never exits the process: it returns
// 0 on success, 1 on a domain error, 2 on a usage error and 3 on an
// internal error, with messages on `err`.

#include <iosfwd>
#include <string>
#include <vector>

#include "chebdyn/arith.hpp"
#include "chebdyn/equidistribution.hpp"
#include "chebdyn/heights.hpp"
#include "chebdyn/integrality.hpp"
#include "serialize.hpp"

namespace chebdyn::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kInternalError = 3 };

// Environment variable naming the directory that relative --output paths resolve against.
inline constexpr const char* kOutputDirEnv = "CHEBDYN_OUTPUT_DIR";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Record layouts; the headers are part of the documented interface.
Table convergence_table(const std::vector<ConvergenceRow>& rows);
Table scan_table(const std::vector<ScanRecord>& records);
Table scan_summary_table(const Rational& alpha, const PlaceSet& S, std::uint64_t n_max, const ScanSummary& summary);
Table certificate_table(const std::vector<IntegralityCertificate>& certs);
Table height_table(const std::vector<HeightReport>& reports);
Table gap_table(const std::vector<GapRecord>& rows);
Table product_formula_table(const Rational& r, const ProductFormulaReport& report);

// "indicator:c,d", "poly:c0;c1;...", "log:re[,im]".
TestFunction parse_test_function(const std::string& spec);

}  // namespace chebdyn::cli
