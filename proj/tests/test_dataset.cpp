#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dcmi/dataset.hpp"
#include "dcmi/errors.hpp"
#include "dcmi/rng.hpp"

using dcmi::LabeledDataset;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

LabeledDataset make(std::initializer_list<std::pair<std::int64_t, double>> rows) {
    std::vector<std::pair<std::int64_t, double>> v(rows);
    return LabeledDataset(v);
}

} // namespace

TEST_CASE("load_csv parses rows in order") {
    const auto path = write_temp("dcmi_basic.csv", "label,value\n0,1.5\n1,-0.2\n0,0.0\n");
    const auto ds = LabeledDataset::load_csv(path.string());
    CHECK(ds.size() == 3);
    CHECK(ds.label_count() == 2);
    CHECK(ds.count(0) == 2);
    CHECK(ds.count(1) == 1);
    CHECK(ds.value(0) == 1.5);
    CHECK(ds.value(1) == -0.2);
    CHECK(ds.value(2) == 0.0);
    CHECK(ds.label(0) == 0);
    CHECK(ds.label(1) == 1);
    CHECK(ds.label(2) == 0);
}

TEST_CASE("load_csv rejects a header-only file as empty") {
    const auto path = write_temp("dcmi_empty.csv", "label,value\n");
    CHECK_THROWS_WITH_AS(LabeledDataset::load_csv(path.string()),
                         doctest::Contains("empty dataset"), dcmi::InputError);
}

TEST_CASE("load_csv names the malformed line") {
    const auto path = write_temp("dcmi_bad.csv", "label,value\n0,1.0\n0,abc\n");
    CHECK_THROWS_WITH_AS(LabeledDataset::load_csv(path.string()),
                         doctest::Contains("line 3"), dcmi::InputError);
}

TEST_CASE("load_csv rejects non-finite values and missing files") {
    const auto path = write_temp("dcmi_inf.csv", "label,value\n0,inf\n0,1.0\n");
    CHECK_THROWS_WITH_AS(LabeledDataset::load_csv(path.string()),
                         doctest::Contains("non-finite"), dcmi::InputError);
    CHECK_THROWS_WITH_AS(LabeledDataset::load_csv("/nonexistent/nope.csv"),
                         doctest::Contains("nope.csv"), dcmi::InputError);
}

TEST_CASE("load_csv accepts CRLF line endings") {
    const auto path = write_temp("dcmi_crlf.csv", "label,value\r\n2,0.5\r\n7,1.25\r\n");
    const auto ds = LabeledDataset::load_csv(path.string());
    CHECK(ds.size() == 2);
    CHECK(ds.token(0) == 2);
    CHECK(ds.token(1) == 7);
}

TEST_CASE("constructor validates rows") {
    CHECK_THROWS_AS(make({}), std::invalid_argument);
    CHECK_THROWS_AS(make({{0, std::nan("")}}), std::invalid_argument);
    CHECK_THROWS_AS(make({{-1, 1.0}}), std::invalid_argument);
}

TEST_CASE("labels densify in ascending token order") {
    const auto ds = make({{5, 1.0}, {2, 2.0}, {5, 3.0}});
    CHECK(ds.label_count() == 2);
    CHECK(ds.token(0) == 2);
    CHECK(ds.token(1) == 5);
    CHECK(ds.label(0) == 1);
    CHECK(ds.label(1) == 0);
    CHECK(ds.index_of_token(5) == 1);
    CHECK_THROWS_AS(ds.index_of_token(3), std::out_of_range);
}

TEST_CASE("partition groups values preserving order") {
    const auto ds = make({{0, 1.0}, {1, 2.0}, {0, 3.0}});
    const auto parts = ds.partition();
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].values == std::vector<double>{1.0, 3.0});
    CHECK(parts[1].values == std::vector<double>{2.0});

    const auto single = make({{0, 1.0}, {0, 2.0}, {0, 3.0}});
    const auto sp = single.partition();
    REQUIRE(sp.size() == 1);
    CHECK(sp[0].count() == 3);
}

TEST_CASE("partition counts sum to n on a random split") {
    dcmi::RngStream rng(99);
    std::vector<std::pair<std::int64_t, double>> rows;
    for (int i = 0; i < 1000; ++i) {
        rows.emplace_back(i < 333 ? 0 : 1, rng.normal());
    }
    const LabeledDataset ds(rows);
    CHECK(ds.count(0) == 333);
    CHECK(ds.count(1) == 667);
    CHECK(ds.count(0) + ds.count(1) == ds.size());
}

TEST_CASE("label_frequency matches counts") {
    dcmi::RngStream rng(7);
    std::vector<std::pair<std::int64_t, double>> rows;
    for (int i = 0; i < 1000; ++i) rows.emplace_back(i < 333 ? 0 : 1, rng.normal());
    const LabeledDataset ds(rows);
    CHECK(ds.label_frequency(0) == doctest::Approx(0.333).epsilon(1e-15));

    const auto single = make({{4, 1.0}, {4, 2.0}});
    CHECK(single.label_frequency(0) == 1.0);

    const auto third = make({{0, 1.0}, {0, 2.0}, {1, 3.0}});
    CHECK(third.label_frequency(0) == doctest::Approx(2.0 / 3.0).epsilon(1e-16));
    CHECK(third.label_frequency(1) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK_THROWS_AS(third.label_frequency(2), std::out_of_range);
}

TEST_CASE("frequencies sum to one within a ulp") {
    dcmi::RngStream rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::pair<std::int64_t, double>> rows;
        const int k = 1 + static_cast<int>(rng.uniform01() * 5);
        const int n = 1 + static_cast<int>(rng.uniform01() * 400);
        for (int i = 0; i < n; ++i) {
            rows.emplace_back(static_cast<std::int64_t>(rng.uniform01() * k), rng.normal());
        }
        const LabeledDataset ds(rows);
        double sum = 0.0;
        for (int x = 0; x < ds.label_count(); ++x) sum += ds.label_frequency(x);
        CHECK(sum == doctest::Approx(1.0).epsilon(4e-16));
    }
}

TEST_CASE("csv round trip reproduces values bit-for-bit") {
    dcmi::RngStream rng(2024);
    std::vector<std::pair<std::int64_t, double>> rows;
    for (int i = 0; i < 200; ++i) {
        rows.emplace_back(static_cast<std::int64_t>(rng.uniform01() * 3) * 10,
                          rng.normal() * std::pow(10.0, rng.uniform(-3, 3)));
    }
    const LabeledDataset ds(rows);

    std::ostringstream os;
    ds.write_csv(os);
    const auto path = write_temp("dcmi_roundtrip.csv", os.str());
    const auto back = LabeledDataset::load_csv(path.string());

    REQUIRE(back.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(back.value(i) == ds.value(i));
        CHECK(back.token(back.label(i)) == ds.token(ds.label(i)));
    }
}

TEST_CASE("flattened partitions are a permutation of the values") {
    dcmi::RngStream rng(5);
    std::vector<std::pair<std::int64_t, double>> rows;
    for (int i = 0; i < 500; ++i) {
        rows.emplace_back(static_cast<std::int64_t>(rng.uniform01() * 4), rng.normal());
    }
    const LabeledDataset ds(rows);

    std::vector<double> flat;
    for (const auto& part : ds.partition()) {
        flat.insert(flat.end(), part.values.begin(), part.values.end());
    }
    std::vector<double> orig = ds.values();
    std::sort(flat.begin(), flat.end());
    std::sort(orig.begin(), orig.end());
    CHECK(flat == orig);
}
