#pragma once

#include <filesystem>
#include <vector>

#include "rwg/score_tensor.hpp"
#include "rwg/stats.hpp"

namespace rwg {

/// Writes three CSV files per architecture into out_dir ('.' decimal
/// separator, LF row terminator, one header row each):
///   <env>_<arch>_samples.csv    n,mean,variance,rank
///   <env>_<arch>_histogram.csv  edge_lo,edge_hi,count
///   <env>_<arch>_summary.csv    best_mean,percentile_999,solve_fraction,
///                               expected_waiting_time ("inf" when no sample
///                               solves)
/// The report must have been derived from the tensor; mismatched dimensions
/// or an empty architecture list are rejected before anything is written.
/// Numbers round-trip exactly. Returns the paths written, in that order per
/// architecture.
std::vector<std::filesystem::path> emit_csv(const AnalysisReport& report,
                                            const ScoreTensor& tensor,
                                            const std::filesystem::path& out_dir);

}  // namespace rwg
