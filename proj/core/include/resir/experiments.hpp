#pragma once

#include "resir/config.hpp"
#include "resir/report.hpp"

namespace resir {

/// Runs the configured experiment for every scheme in the list and returns
/// the table-shaped report (bench-univariate: one row per scheme with MSE
/// and OMSE; bench-kotz: per-component MSEs and OMSE; changepoint: posterior
/// mean/sd per parameter; convergence-check: KS and ESS diagnostics).
/// Identical config + seed produces a byte-identical report body.
Report run(const RunConfig& config);

} // namespace resir
