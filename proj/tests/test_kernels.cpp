#include <doctest.h>

#include <cmath>
#include <set>

#include "lvmel/kernels.hpp"

using namespace lvmel;
using kernels::Exec;

TEST_CASE("parallel grid map equals the serial reference bit for bit") {
    auto xs = kernels::linspace(0.1, 2.7, 4097);
    auto f = [](double x) { return std::sin(x) * std::exp(-x) + std::sqrt(x); };
    auto serial = kernels::map_grid(xs, f, Exec::Serial);
    auto parallel = kernels::map_grid(xs, f, Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) CHECK(serial[k] == parallel[k]);
}

TEST_CASE("parallel max sweep equals the serial reference") {
    auto fn = [](int k) { return (k * 2654435761u) % 97; };
    CHECK(kernels::sweep_max(10000, fn, Exec::Serial) ==
          kernels::sweep_max(10000, fn, Exec::Parallel));
}

TEST_CASE("grids") {
    auto xs = kernels::linspace(0.0, 1.0, 11);
    CHECK(xs.front() == 0.0);
    CHECK(xs.back() == 1.0);
    CHECK(xs[5] == doctest::Approx(0.5));

    AnnulusSpec an{AnnulusTag::PlusAnnulus, 1.0, 2.0, 1.0};
    auto g = kernels::annulus_grid(an, 21, 0.02);
    CHECK(g.front() == doctest::Approx(1.02));
    CHECK(g.back() == doctest::Approx(1.98));

    CHECK(kernels::linspace(0.0, 2.0, 1).size() == 1);
}

TEST_CASE("stream seeds are deterministic and well spread") {
    std::set<std::uint64_t> seen;
    for (int k = 0; k < 1000; ++k) seen.insert(kernels::stream_seed(42, k));
    CHECK(seen.size() == 1000);
    CHECK(kernels::stream_seed(42, 7) == kernels::stream_seed(42, 7));
    CHECK(kernels::stream_seed(42, 7) != kernels::stream_seed(43, 7));
    CHECK(kernels::thread_cap() >= 1);
}
