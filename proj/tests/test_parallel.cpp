#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mc/enumerate.hpp"
#include "mc/parallel.hpp"
#include "mc/trace.hpp"

using namespace mc;

namespace {

struct ModeGuard {
    par::Mode saved;
    explicit ModeGuard(par::Mode m) : saved(par::mode()) { par::mode() = m; }
    ~ModeGuard() { par::mode() = saved; }
};

}  // namespace

TEST_CASE("map and reduce agree between the serial reference and the kernels") {
    auto square = [](long i) { return i * i; };
    auto s = par::serial_map<long>(1000, square);
    ModeGuard g(par::Mode::OpenMP);
    auto p = par::parallel_map<long>(1000, square);
    CHECK(s == p);
    long rs = par::serial_reduce<long>(1000, 0, square, std::plus<long>());
    long rp = par::parallel_reduce<long>(1000, 0, square, std::plus<long>());
    CHECK(rs == rp);
}

TEST_CASE("exceptions are carried out of the parallel region") {
    ModeGuard g(par::Mode::OpenMP);
    CHECK_THROWS_AS(par::parallel_for(64, [](long i) {
        if (i == 13) fail(ErrorKind::Internal, "boom");
    }),
                    Error);
}

TEST_CASE("pair counting matches between execution modes") {
    long serial_count, parallel_count;
    {
        ModeGuard g(par::Mode::Serial);
        serial_count = count_pairs(Value(rat(7, 5)), 400).direct;
    }
    {
        ModeGuard g(par::Mode::OpenMP);
        parallel_count = count_pairs(Value(rat(7, 5)), 400).direct;
    }
    CHECK(serial_count == parallel_count);
}

TEST_CASE("identity suite results match between execution modes") {
    IdentityReport a, b;
    {
        ModeGuard g(par::Mode::Serial);
        a = verify_identities(5);
    }
    {
        ModeGuard g(par::Mode::OpenMP);
        b = verify_identities(5);
    }
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].name == b.entries[i].name);
        CHECK(a.entries[i].pass == b.entries[i].pass);
    }
}

TEST_CASE("enumeration output is deterministic across modes") {
    EnumerationResult a, b;
    {
        ModeGuard g(par::Mode::Serial);
        a = enum_I(6);
    }
    {
        ModeGuard g(par::Mode::OpenMP);
        b = enum_I(6);
    }
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
        CHECK(*a.points[i].p == *b.points[i].p);
        CHECK(value_compare(a.points[i].u, b.points[i].u) == 0);
    }
}

TEST_CASE("gamma tracing is deterministic across modes") {
    Rational width = pow_rat(rat(1, 10), 4);
    std::vector<CurvePolyline> a, b;
    {
        ModeGuard g(par::Mode::Serial);
        a = trace_gamma(3, 12, width);
    }
    {
        ModeGuard g(par::Mode::OpenMP);
        b = trace_gamma(3, 12, width);
    }
    REQUIRE(a[0].samples.size() == b[0].samples.size());
    for (size_t i = 0; i < a[0].samples.size(); ++i) {
        CHECK(a[0].samples[i].ulo == b[0].samples[i].ulo);
        CHECK(a[0].samples[i].vhi == b[0].samples[i].vhi);
    }
}
