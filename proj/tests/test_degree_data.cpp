#include <doctest.h>

#include "netepi/degree_data.hpp"
#include "netepi/errors.hpp"

#include <cmath>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <string>

using namespace netepi;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("netepi_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
    std::string str() const { return path.string(); }
};

} // namespace

TEST_CASE("load_degree_file parses plain integer lines") {
    TempFile f("3\n8\n40\n");
    CHECK(load_degree_file(f.str()) == DegreeSequence{3, 8, 40});
}

TEST_CASE("load_degree_file skips comments and blank lines") {
    TempFile f("# contacts per day\n\n5\n  \n7\n");
    CHECK(load_degree_file(f.str()) == DegreeSequence{5, 7});
}

TEST_CASE("load_degree_file rejects zero-contact entries with a line number") {
    TempFile f("3\n0\n8\n");
    try {
        load_degree_file(f.str());
        FAIL("expected DataError");
    } catch (const DataError& e) {
        std::string msg = e.what();
        CHECK(msg.find(":2:") != std::string::npos);
        CHECK(msg.find("zero-contact") != std::string::npos);
    }
}

TEST_CASE("load_degree_file rejects junk, trailing tokens, and empty files") {
    TempFile junk("3\nseven\n");
    CHECK_THROWS_AS(load_degree_file(junk.str()), DataError);
    TempFile trailing("3 4\n");
    CHECK_THROWS_AS(load_degree_file(trailing.str()), DataError);
    TempFile empty("# nothing\n");
    CHECK_THROWS_AS(load_degree_file(empty.str()), DataError);
    CHECK_THROWS_AS(load_degree_file("/nonexistent/path/xyz.txt"), DataError);
}

TEST_CASE("combine_with_job_contacts applies the cap") {
    DegreeSequence diary{34, 8, 30};
    SUBCASE("extra far above the cap is censored") {
        auto out = combine_with_job_contacts(diary, {{0, 999}}, 134);
        CHECK(out == DegreeSequence{134, 8, 30});
    }
    SUBCASE("zero extra leaves the entry unchanged") {
        auto out = combine_with_job_contacts(diary, {{1, 0}}, 134);
        CHECK(out == diary);
    }
    SUBCASE("sum below cap is kept exactly") {
        auto out = combine_with_job_contacts(diary, {{2, 58}}, 134);
        CHECK(out[2] == 88);
    }
    SUBCASE("empty extras is the identity") {
        CHECK(combine_with_job_contacts(diary, {}, 134) == diary);
    }
    SUBCASE("out-of-range index fails") {
        CHECK_THROWS_AS(combine_with_job_contacts(diary, {{3, 1}}, 134), DataError);
        CHECK_THROWS_AS(combine_with_job_contacts(diary, {{-1, 1}}, 134), DataError);
    }
    SUBCASE("cap below max diary entry fails") {
        CHECK_THROWS_AS(combine_with_job_contacts(diary, {{0, 1}}, 30), DataError);
    }
}

TEST_CASE("degree_stats hand-computed values") {
    SUBCASE("constant sequence") {
        auto s = degree_stats({5, 5, 5, 5});
        CHECK(s.mean == 5.0);
        CHECK(s.median == 5.0);
        CHECK(s.stdev == 0.0);
        CHECK(s.n == 4);
    }
    SUBCASE("1..4") {
        auto s = degree_stats({1, 2, 3, 4});
        CHECK(s.mean == doctest::Approx(2.5));
        CHECK(s.median == doctest::Approx(2.5));
        CHECK(s.stdev == doctest::Approx(std::sqrt(1.25)));  // population form
    }
    SUBCASE("odd length median") {
        auto s = degree_stats({9, 1, 5});
        CHECK(s.median == 5.0);
    }
    CHECK_THROWS_AS(degree_stats({}), DataError);
}

TEST_CASE("bundled diary degree file matches the published summary statistics") {
    auto seq = load_degree_file(std::string(NETEPI_SOURCE_DIR) + "/data/diary_degrees.txt");
    auto s = degree_stats(seq);
    CHECK(s.n == 2029);
    CHECK(s.mean == doctest::Approx(9.72).epsilon(0.001));
    CHECK(s.median == 8.0);
    CHECK(s.stdev == doctest::Approx(6.56).epsilon(0.001));
}

TEST_CASE("bundled job extras extend the diary degrees to the published profile") {
    auto diary = load_degree_file(std::string(NETEPI_SOURCE_DIR) + "/data/diary_degrees.txt");
    auto extra = load_job_extra_file(std::string(NETEPI_SOURCE_DIR) + "/data/job_extra_contacts.txt");
    CHECK(extra.size() == 257);
    auto ext = combine_with_job_contacts(diary, extra, 134);
    auto s = degree_stats(ext);
    CHECK(s.mean == doctest::Approx(14.87).epsilon(0.001));
    CHECK(s.stdev == doctest::Approx(19.58).epsilon(0.001));
    CHECK(s.median == 9.0);
    for (int v : ext) CHECK(v <= 134);
}

TEST_CASE("quantile_type7 matches the linear-interpolation definition") {
    std::vector<double> v{1, 2, 3, 4};
    CHECK(quantile_type7(v, 0.0) == 1.0);
    CHECK(quantile_type7(v, 1.0) == 4.0);
    CHECK(quantile_type7(v, 0.5) == doctest::Approx(2.5));
    CHECK(quantile_type7(v, 0.25) == doctest::Approx(1.75));
    CHECK(quantile_type7({7.0}, 0.31) == 7.0);
    CHECK(median_of({3, 1, 2}) == 2.0);
    CHECK_THROWS_AS(quantile_type7({}, 0.5), std::invalid_argument);
}
