#pragma once
// Degree-sequence ingestion and summary statistics.

#include <string>
#include <utility>
#include <vector>

namespace netepi {

using DegreeSequence = std::vector<int>;

struct SummaryStats {
    double mean = 0.0;
    double median = 0.0;
    double stdev = 0.0;   // population (divide by n) form
    std::size_t n = 0;
};

// One base-10 integer per line; '#' starts a comment line; blank lines ignored.
// Entries must be >= 1 (zero-contact respondents are excluded upstream).
DegreeSequence load_degree_file(const std::string& path);

// Lines of "<respondent_index> <extra_contacts>"; same comment rules.
std::vector<std::pair<int, int>> load_job_extra_file(const std::string& path);

// For each listed respondent i: out[i] = min(diary[i] + extra, cap).
DegreeSequence combine_with_job_contacts(const DegreeSequence& diary,
                                         const std::vector<std::pair<int, int>>& job_extra,
                                         int cap);

SummaryStats degree_stats(const DegreeSequence& seq);

double quantile_type7(std::vector<double> values, double p);
double median_of(const std::vector<double>& values);

} // namespace netepi
