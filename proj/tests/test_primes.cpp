#include "mpverify/constants.hpp"
#include "mpverify/prime_sieve.hpp"
#include "mpverify/prime_sums.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace mpverify;

TEST_CASE("primes in small ranges") {
    CHECK(primes_in_range({1, 10}) == std::vector<u64>{2, 3, 5, 7});
    CHECK(primes_in_range({90, 100}) == std::vector<u64>{97});
    CHECK(primes_in_range({1, 1}).empty());
    CHECK(primes_in_range({7, 7}) == std::vector<u64>{7});
}

TEST_CASE("wheel sieve agrees with the odd-bitmap oracle") {
    const auto naive = oracle::naive_primes(200'000);
    CHECK(primes_in_range({1, 200'000}) == naive);

    // windows crossing segment boundaries, at the minimum segment size
    const u64 seg = kMinSegmentSize;
    for (u64 lo : {seg - 500, 2 * seg - 3, u64(1'000'000)}) {
        const u64 hi = lo + 1000;
        std::vector<u64> window;
        for (u64 p : naive) {
            // oracle only goes to 2e5; recompute for the large window
            (void)p;
        }
        const auto big = oracle::naive_primes(hi);
        window.assign(big.begin(), big.end());
        std::erase_if(window, [lo, hi](u64 p) { return p < lo || p > hi; });
        CHECK(primes_in_range({lo, hi, seg}) == window);
    }
}

TEST_CASE("prime counts against the independent sieve") {
    CHECK(count_primes(1, 1'000'000) == oracle::naive_primes(1'000'000).size());
    CHECK(count_primes(1, 1'000'000) == 78498);
}

TEST_CASE("range validation") {
    CHECK_THROWS_AS(primes_in_range({10, 5}), std::invalid_argument);
    CHECK_THROWS_AS(primes_in_range({1, 100, 1024}), std::invalid_argument);  // segment too small
    CHECK_THROWS_AS(primes_in_range({1, 100'000'000'000ull}), std::invalid_argument);  // cap
}

TEST_CASE("theta over the 1 mod 15 progression") {
    const APQuery q{15, 1};
    CHECK(theta(30, q) == 0.0L);
    CHECK(theta(60, q) == logl(31.0L));
    CHECK(theta(100, q) == doctest::Approx(static_cast<double>(logl(31.0L) + logl(61.0L)))
                               .epsilon(1e-15));
    CHECK(theta(100, q) == doctest::Approx(7.5448610687).epsilon(1e-9));
}

TEST_CASE("reciprocal and log-weighted sums") {
    const APQuery q{15, 1};
    CHECK(sum_recip(100, q) ==
          doctest::Approx(static_cast<double>(1.0L / 31 + 1.0L / 61)).epsilon(1e-15));
    CHECK(sum_recip(30, q) == 0.0L);
    CHECK(sum_logp_over_p(100, q) ==
          doctest::Approx(static_cast<double>(logl(31.0L) / 31 + logl(61.0L) / 61))
              .epsilon(1e-15));
    CHECK(sum_logp_over_p(1, APQuery{}) == 0.0L);

    // eq-(411)-style bound at desk scale, all primes
    for (u64 z : {2ull, 10ull, 100ull, 10'000ull, 1'000'000ull}) {
        CHECK(sum_logp_over_p(z, APQuery{}) <= logl(static_cast<long double>(z)));
    }
}

TEST_CASE("mertens desk check against the trusted constant") {
    // |sum 1/p - ln ln z - M| < 1e-3 at z = 1e6
    const long double s = sum_recip(1'000'000, APQuery{});
    const long double M = ConstantsLedger::instance().mertens_const().convert_to<long double>();
    CHECK(std::fabs(s - logl(logl(1e6L)) - M) < 1e-3L);
}

TEST_CASE("mertens products") {
    auto [m3, p3] = mertens_products(3);
    CHECK(m3 == doctest::Approx(1.0 / 3).epsilon(1e-18));
    CHECK(p3 == doctest::Approx(2.0).epsilon(1e-18));

    // four-prime rational cross-check: (1/2)(2/3)(4/5)(6/7) and its mirror
    auto [m10, p10] = mertens_products(10);
    const Rational minus_exact = Rational(1, 2) * Rational(2, 3) * Rational(4, 5) * Rational(6, 7);
    const Rational plus_exact = Rational(3, 2) * Rational(4, 3) * Rational(6, 5) * Rational(8, 7);
    CHECK(minus_exact == Rational(8, 35));
    CHECK(m10 == doctest::Approx(real_from(minus_exact).convert_to<double>()).epsilon(1e-12));
    CHECK(p10 == doctest::Approx(real_from(plus_exact).convert_to<double>()).epsilon(1e-12));

    // eq-(412)-style empirical bound at z = 1e6
    auto [m6, p6] = mertens_products(1'000'000);
    (void)p6;
    const long double g = ConstantsLedger::instance().gamma().convert_to<long double>();
    const long double lz = logl(1e6L);
    CHECK(m6 <= expl(-g) / lz * (1 + 1 / (2 * lz * lz)));

    CHECK_THROWS_AS(mertens_products(2), std::invalid_argument);
}

TEST_CASE("phi1 single-prime closed forms") {
    // below 61 the only contributing prime is 31, clamped to the lower limit 60
    for (long double z : {60.9L, 60.5L}) {
        const long double expect =
            logl(31.0L) * (1.0L / (60 * logl(60.0L)) - 1.0L / (z * logl(z)));
        CHECK(phi1(z) == doctest::Approx(static_cast<double>(expect)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(phi1(60.0L), std::domain_error);
    CHECK_THROWS_AS(phi1(31.0L), std::domain_error);
}

TEST_CASE("phi2 single-prime closed forms") {
    CHECK(phi2(60.9L) ==
          doctest::Approx(static_cast<double>(logl(31.0L) * (1.0L / 31 - 1.0L / 60.9L)))
              .epsilon(1e-15));
    CHECK(phi2(31.5L) ==
          doctest::Approx(static_cast<double>(logl(31.0L) * (1.0L / 31 - 1.0L / 31.5L)))
              .epsilon(1e-15));
    CHECK_THROWS_AS(phi2(31.0L), std::domain_error);
}

TEST_CASE("phi1/phi2 match the quadrature oracle") {
    for (long double z : {1000.0L, 1'000'000.0L}) {
        const long double q1 = oracle::theta_weighted_integral(
            [](long double t) {
                const long double lt = logl(t);
                return (1 + lt) / (t * t * lt * lt);
            },
            60.0L, z);
        CHECK(std::fabs(phi1(z) - q1) <= 1e-9L * q1);

        const long double q2 = oracle::theta_weighted_integral(
            [](long double t) { return 1.0L / (t * t); }, 31.0L, z);
        CHECK(std::fabs(phi2(z) - q2) <= 1e-9L * q2);
    }
}

TEST_CASE("partial-summation identities at desk scale") {
    const APQuery q{15, 1};
    for (u64 z : {1000ull, 10'000ull}) {
        const APSums s = ap_sums(z, q);
        const long double zl = static_cast<long double>(z);
        const long double rhs1 = s.theta / (zl * logl(zl)) - logl(31.0L) / (60 * logl(60.0L)) +
                                 1.0L / 31 + phi1(zl);
        CHECK(std::fabs(s.recip - rhs1) <= 1e-9L * s.recip);

        const long double rhs2 = s.theta / zl + phi2(zl);
        CHECK(std::fabs(s.logp_over_p - rhs2) <= 1e-9L * s.logp_over_p);
    }
}

TEST_CASE("theta decomposes over the residue classes mod 15") {
    const u64 x = 100'000;
    long double total = 0;
    for (u64 a : {1ull, 2ull, 4ull, 7ull, 8ull, 11ull, 13ull, 14ull})
        total += theta(x, APQuery{15, a});
    total += logl(3.0L) + logl(5.0L);  // the classes sharing a factor with 15
    const long double all = theta(x, APQuery{});
    CHECK(std::fabs(total - all) <= 1e-9L * all);
}

TEST_CASE("parallel reduction is bit-identical across thread counts") {
    const APQuery q{15, 1};
    SumsOptions one;
    one.threads = 1;
    SumsOptions many;
    many.threads = 4;
    const APSums a = ap_sums(2'000'000, q, one);
    const APSums b = ap_sums(2'000'000, q, many);
    CHECK(a.theta == b.theta);
    CHECK(a.recip == b.recip);
    CHECK(a.logp_over_p == b.logp_over_p);
    CHECK(a.pi == b.pi);
}

TEST_CASE("theta profile samples the running sums") {
    const auto rows = theta_profile({1000, 10'000, 100'000}, APQuery{15, 1});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].x == 1000);
    CHECK(rows[0].theta == theta(1000, APQuery{15, 1}));
    CHECK(rows[2].theta == theta(100'000, APQuery{15, 1}));
}

TEST_CASE("checkpointed theta runs resume from the file") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "mpverify_theta_ckpt_test.csv";
    fs::remove(path);

    SumsOptions opts;
    opts.checkpoint_path = path.string();
    opts.checkpoint_stride = 100'000;
    const APQuery q{15, 1};

    const long double first = theta(300'000, q, opts);
    CHECK(first == theta(300'000, q));  // same result as the non-checkpointed path
    {
        std::ifstream in(path);
        std::string line;
        std::getline(in, line);
        CHECK(line == "x,theta,pi");
        size_t rows = 0;
        while (std::getline(in, line)) ++rows;
        CHECK(rows == 3);  // 1e5, 2e5, 3e5
    }

    // resumed continuation extends the same file and stays accurate
    const long double resumed = theta(500'000, q, opts);
    const long double fresh = theta(500'000, q);
    CHECK(std::fabs(resumed - fresh) <= 1e-12L * fresh);

    // a request at or below the last checkpoint is answered from the file
    CHECK(theta(500'000, q, opts) == doctest::Approx(static_cast<double>(fresh)).epsilon(1e-15));
    fs::remove(path);
}
