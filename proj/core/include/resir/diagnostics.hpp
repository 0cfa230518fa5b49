#pragma once

#include <functional>
#include <vector>

namespace resir {

/// Two-sided Kolmogorov-Smirnov statistic of a sample against a reference
/// CDF: max over the sorted sample of |empirical - reference|, evaluated on
/// both sides of each jump. The input need not be sorted.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

} // namespace resir
