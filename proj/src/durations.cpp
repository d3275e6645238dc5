#include "netepi/durations.hpp"
#include "netepi/errors.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace netepi {

double duration_centroid_minutes(int category) {
    switch (category) {
        case 1: return 2.5;
        case 2: return 7.5;
        case 3: return 22.5;
        case 4: return 120.0;
        case 5: return 240.0;
        default:
            throw DataError("unknown duration category: " + std::to_string(category));
    }
}

std::vector<DurationProfile> duration_profiles(const std::vector<ContactRecord>& records) {
    std::vector<DurationProfile> out;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& rec : records) {
        double minutes = duration_centroid_minutes(rec.duration_category);
        auto [it, inserted] = index.try_emplace(rec.respondent_id, out.size());
        if (inserted) out.push_back({rec.respondent_id, 0, 0.0, 0.0});
        DurationProfile& p = out[it->second];
        p.n_contacts += 1;
        p.total_minutes += minutes;
    }
    for (auto& p : out) p.average_minutes = p.total_minutes / static_cast<double>(p.n_contacts);
    return out;
}

std::vector<ContactRecord> load_contact_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open contact records file: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("respondent_id,duration_category", 0) != 0) {
        throw DataError(path + ": expected header 'respondent_id,duration_category'");
    }
    std::vector<ContactRecord> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw DataError(path + ":" + std::to_string(lineno) + ": malformed row: '" + line + "'");
        }
        ContactRecord rec;
        rec.respondent_id = line.substr(0, comma);
        try {
            rec.duration_category = std::stoi(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw DataError(path + ":" + std::to_string(lineno) + ": bad category: '" + line + "'");
        }
        duration_centroid_minutes(rec.duration_category);  // validates range
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace netepi
