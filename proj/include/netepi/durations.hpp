#pragma once
// Contact-duration profiles: maps the five recorded duration categories to
// interval centroids (minutes) and aggregates per respondent.

#include <string>
#include <vector>

namespace netepi {

struct ContactRecord {
    std::string respondent_id;
    int duration_category = 0;  // 1..5
};

struct DurationProfile {
    std::string respondent_id;
    std::size_t n_contacts = 0;
    double total_minutes = 0.0;
    double average_minutes = 0.0;
};

// Category -> centroid minutes: 1->2.5, 2->7.5, 3->22.5, 4->120, 5->240.
double duration_centroid_minutes(int category);

// Profiles in order of first appearance of each respondent id.
std::vector<DurationProfile> duration_profiles(const std::vector<ContactRecord>& records);

// CSV with header "respondent_id,duration_category".
std::vector<ContactRecord> load_contact_records(const std::string& path);

} // namespace netepi
