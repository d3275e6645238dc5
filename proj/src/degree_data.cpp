#include "netepi/degree_data.hpp"
#include "netepi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace netepi {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

DegreeSequence load_degree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open degree file: " + path);
    DegreeSequence seq;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ss(line);
        long v = 0;
        if (!(ss >> v)) {
            throw DataError(path + ":" + std::to_string(lineno) + ": not an integer: '" + line + "'");
        }
        std::string rest;
        if (ss >> rest) {
            throw DataError(path + ":" + std::to_string(lineno) + ": trailing content: '" + rest + "'");
        }
        if (v < 1) {
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": degree " + std::to_string(v) +
                            " < 1 (zero-contact respondents are excluded from the calibration data)");
        }
        seq.push_back(static_cast<int>(v));
    }
    if (seq.empty()) throw DataError("degree file is empty: " + path);
    return seq;
}

std::vector<std::pair<int, int>> load_job_extra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open job-extras file: " + path);
    std::vector<std::pair<int, int>> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ss(line);
        long idx = 0, extra = 0;
        if (!(ss >> idx >> extra) || idx < 0 || extra < 0) {
            throw DataError(path + ":" + std::to_string(lineno) + ": expected '<index> <extra>': '" + line + "'");
        }
        out.emplace_back(static_cast<int>(idx), static_cast<int>(extra));
    }
    return out;
}

DegreeSequence combine_with_job_contacts(const DegreeSequence& diary,
                                         const std::vector<std::pair<int, int>>& job_extra,
                                         int cap) {
    int max_diary = diary.empty() ? 0 : *std::max_element(diary.begin(), diary.end());
    if (cap < max_diary) {
        throw DataError("combine cap " + std::to_string(cap) + " below maximum diary degree " +
                        std::to_string(max_diary));
    }
    DegreeSequence out = diary;
    for (auto [idx, extra] : job_extra) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= diary.size()) {
            throw DataError("job-extras index out of range: " + std::to_string(idx));
        }
        long v = static_cast<long>(out[idx]) + extra;
        out[idx] = static_cast<int>(std::min<long>(v, cap));
    }
    return out;
}

SummaryStats degree_stats(const DegreeSequence& seq) {
    if (seq.empty()) throw DataError("degree_stats: empty sequence");
    SummaryStats s;
    s.n = seq.size();
    double sum = 0.0, sumsq = 0.0;
    for (int v : seq) { sum += v; sumsq += static_cast<double>(v) * v; }
    s.mean = sum / s.n;
    s.stdev = std::sqrt(std::max(0.0, sumsq / s.n - s.mean * s.mean));
    std::vector<double> sorted(seq.begin(), seq.end());
    std::sort(sorted.begin(), sorted.end());
    std::size_t h = s.n / 2;
    s.median = (s.n % 2 == 1) ? sorted[h] : 0.5 * (sorted[h - 1] + sorted[h]);
    return s;
}

double quantile_type7(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("quantile of empty vector");
    std::sort(values.begin(), values.end());
    if (values.size() == 1) return values[0];
    double h = (static_cast<double>(values.size()) - 1.0) * p;
    std::size_t lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= values.size()) return values.back();
    double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

double median_of(const std::vector<double>& values) {
    return quantile_type7(values, 0.5);
}

} // namespace netepi
