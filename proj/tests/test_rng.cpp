#include "doctest.h"

#include <cmath>

#include "dcmi/rng.hpp"

using dcmi::RngStream;

TEST_CASE("identical seeds give identical sequences") {
    RngStream a(77), b(77);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.uniform01() == b.uniform01());
    }
}

TEST_CASE("derived streams differ from each other and the base") {
    const std::uint64_t base = 42;
    RngStream s0(dcmi::derive_stream(base, 0));
    RngStream s1(dcmi::derive_stream(base, 1));
    RngStream sb(base);
    int same01 = 0, same0b = 0;
    for (int i = 0; i < 100; ++i) {
        const double a = s0.uniform01(), b = s1.uniform01(), c = sb.uniform01();
        same01 += a == b;
        same0b += a == c;
    }
    CHECK(same01 == 0);
    CHECK(same0b == 0);
}

TEST_CASE("derive_stream is pure") {
    CHECK(dcmi::derive_stream(9, 4) == dcmi::derive_stream(9, 4));
    CHECK(dcmi::derive_stream(9, 4) != dcmi::derive_stream(9, 5));
    CHECK(dcmi::derive_stream(9, 4) != dcmi::derive_stream(10, 4));
}

TEST_CASE("uniform01 stays in [0,1)") {
    RngStream rng(1);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("normal moments at 1e5 draws") {
    RngStream rng(11);
    const int n = 100000;
    double sum = 0.0, ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        ss += z * z;
    }
    const double mean = sum / n;
    const double var = ss / n - mean * mean;
    CHECK(std::abs(mean) < 0.015);       // 3 sigma ~ 0.0095
    CHECK(std::abs(var - 1.0) < 0.02);   // 3 sigma ~ 0.013
}

TEST_CASE("exponential mean matches its scale") {
    RngStream rng(13);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rng.exponential(2.0);
    CHECK(std::abs(sum / n - 2.0) < 0.03);  // 3 sigma ~ 0.019
}

TEST_CASE("categorical respects the probability vector") {
    RngStream rng(17);
    const double probs[] = {1.0 / 3.0, 2.0 / 3.0};
    const int n = 100000;
    int c0 = 0;
    for (int i = 0; i < n; ++i) c0 += rng.categorical(probs) == 0;
    CHECK(std::abs(c0 / static_cast<double>(n) - 1.0 / 3.0) < 0.005);
}
