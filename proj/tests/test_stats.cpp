#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tna/stats.hpp"

#include <cmath>
#include <random>

using namespace tna;

namespace {

Series series_of(std::vector<double> v, std::string name = "x") {
    Series s;
    s.name = std::move(name);
    for (const double x : v) s.values.push_back(x);
    return s;
}

// Deterministic uniform noise, reproducible bit-for-bit from any language:
// x <- (1103515245 x + 12345) mod 2^31, value x / 2^31 - 0.5.
std::vector<double> lcg_stream(std::uint64_t seed, std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    std::uint64_t x = seed;
    for (std::size_t i = 0; i < n; ++i) {
        x = (1103515245ULL * x + 12345ULL) % (1ULL << 31);
        out.push_back(static_cast<double>(x) / static_cast<double>(1ULL << 31) - 0.5);
    }
    return out;
}

}  // namespace

TEST_CASE("describe hand values") {
    const DescriptiveStats d = describe(series_of({1, 2, 3, 4, 5}));
    CHECK(d.count == 5);
    CHECK(d.mean == doctest::Approx(3.0));
    CHECK(d.median == doctest::Approx(3.0));
    CHECK(d.minimum == doctest::Approx(1.0));
    CHECK(d.maximum == doctest::Approx(5.0));
    CHECK(d.std_dev == doctest::Approx(1.5811388300841898).epsilon(1e-12));

    // Even count: median averages the middle pair.
    CHECK(describe(series_of({4, 1, 3, 2})).median == doctest::Approx(2.5));
}

TEST_CASE("describe against reference moment values") {
    const DescriptiveStats d = describe(series_of(lcg_stream(12345, 200)));
    CHECK(*d.skewness == doctest::Approx(-0.0665984070011311).epsilon(1e-9));
    CHECK(*d.kurtosis == doctest::Approx(1.7714675550204044).epsilon(1e-9));
}

TEST_CASE("describe degenerate inputs") {
    const DescriptiveStats constant = describe(series_of({5, 5, 5, 5}));
    CHECK(constant.std_dev == doctest::Approx(0.0));
    CHECK_FALSE(constant.skewness.has_value());
    CHECK_FALSE(constant.kurtosis.has_value());

    CHECK_THROWS_AS(describe(series_of({1})), std::invalid_argument);

    Series with_gaps = series_of({1, 2, 3});
    with_gaps.values.insert(with_gaps.values.begin() + 1, std::nullopt);
    const DescriptiveStats d = describe(with_gaps);
    CHECK(d.count == 3);
    CHECK(d.mean == doctest::Approx(2.0));
}

TEST_CASE("describe is stable under self-concatenation") {
    std::mt19937_64 rng(5150);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v;
    for (int i = 0; i < 501; ++i) v.push_back(gauss(rng));
    std::vector<double> doubled = v;
    doubled.insert(doubled.end(), v.begin(), v.end());

    const DescriptiveStats a = describe(series_of(v));
    const DescriptiveStats b = describe(series_of(doubled));
    CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-12));
    CHECK(a.median == doctest::Approx(b.median).epsilon(1e-12));
    CHECK(a.minimum == b.minimum);
    CHECK(a.maximum == b.maximum);
}

TEST_CASE("moment estimates converge on a large normal sample") {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> v;
    v.reserve(1000000);
    for (int i = 0; i < 1000000; ++i) v.push_back(gauss(rng));
    const DescriptiveStats d = describe(series_of(std::move(v)));
    CHECK(std::fabs(*d.skewness) < 0.01);
    CHECK(std::fabs(*d.kurtosis - 3.0) < 0.05);
}

TEST_CASE("frozen reference values from an independent implementation") {
    const Series eps = series_of(lcg_stream(12345, 200));

    // Regression with constant, lag order 3.
    const AdfResult adf = adf_test(eps, 3);
    CHECK(adf.statistic == doctest::Approx(-7.328961201709615).epsilon(1e-6));
    CHECK(adf.lag_order == 3);
    CHECK(adf.reject);

    const TestResult jb = jarque_bera(eps);
    CHECK(jb.statistic == doctest::Approx(12.725277996899136).epsilon(1e-9));
    CHECK(jb.p_value == doctest::Approx(0.0017248089324174184).epsilon(1e-9));
    CHECK(jb.reject);

    const TestResult lb = ljung_box(eps, 5);
    CHECK(lb.statistic == doctest::Approx(4.258393831133337).epsilon(1e-9));
    CHECK(lb.p_value == doctest::Approx(0.5128445270776043).epsilon(1e-9));
    CHECK_FALSE(lb.reject);

    const auto cell = pearson(series_of({1, 2, 3, 4, 5, 6}), series_of({2, 1, 4, 3, 6, 5}));
    REQUIRE(cell.has_value());
    CHECK(cell->rho == doctest::Approx(0.8285714285714283).epsilon(1e-12));
    CHECK(cell->p_value == doctest::Approx(0.04156268221574357).epsilon(1e-9));
    CHECK(cell->stars == "*");

    const auto cell2 = pearson(series_of(lcg_stream(12345, 50)), series_of(lcg_stream(777, 50)));
    REQUIRE(cell2.has_value());
    CHECK(cell2->rho == doctest::Approx(0.21474953283476977).epsilon(1e-12));
    CHECK(cell2->p_value == doctest::Approx(0.13422796145358923).epsilon(1e-9));
}

TEST_CASE("adf verdicts on canonical series") {
    std::mt19937_64 rng(2718);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<double> noise, walk;
    double level = 0.0;
    for (int i = 0; i < 2000; ++i) {
        const double e = gauss(rng);
        noise.push_back(e);
        level += e;
        walk.push_back(level);
    }

    const AdfResult on_noise = adf_test(series_of(noise));
    CHECK(on_noise.lag_order == 8);  // floor(4 * (2000/100)^(1/4))
    CHECK(on_noise.reject);

    const AdfResult on_walk = adf_test(series_of(walk));
    CHECK_FALSE(on_walk.reject);

    // Deterministic linear trend: no numerical failure, verdict reported.
    std::vector<double> linear;
    for (int i = 1; i <= 500; ++i) linear.push_back(i);
    const AdfResult on_linear = adf_test(series_of(linear));
    CHECK(std::isfinite(on_linear.statistic));

    CHECK_THROWS_AS(adf_test(series_of(lcg_stream(1, 24))), std::invalid_argument);
    CHECK_THROWS_AS(adf_test(series_of(noise), std::nullopt, 0.2), std::invalid_argument);
}

TEST_CASE("jarque-bera basics") {
    // Exactly normal skewness/kurtosis: statistic 0 and df=2 closed form p=1.
    CHECK(jarque_bera_statistic(1000, 0.0, 3.0) == doctest::Approx(0.0));

    // For df=2 the survival function is exp(-q/2); the reported p must match.
    const Series eps = series_of(lcg_stream(4242, 500));
    const TestResult jb = jarque_bera(eps);
    CHECK(jb.p_value == doctest::Approx(std::exp(-jb.statistic / 2.0)).epsilon(1e-12));

    // Heavy one-sided tail rejects decisively.
    std::mt19937_64 rng(11);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> skewed;
    for (int i = 0; i < 10000; ++i) skewed.push_back(expo(rng));
    CHECK(jarque_bera(series_of(skewed)).reject);

    CHECK_THROWS_AS(jarque_bera(series_of({1, 2, 3})), std::invalid_argument);
    CHECK_THROWS_AS(jarque_bera(series_of({2, 2, 2, 2, 2, 2, 2, 2})), std::invalid_argument);
}

TEST_CASE("ljung-box basics") {
    // Strict alternation: lag-1 autocorrelation near -1, overwhelming Q.
    std::vector<double> alternating;
    for (int i = 0; i < 400; ++i) alternating.push_back(i % 2 == 0 ? 1.0 : -1.0);
    const TestResult alt = ljung_box(series_of(alternating), 20);
    CHECK(alt.statistic > 300.0);
    CHECK(alt.reject);

    // AR(1) with phi = 0.5.
    std::mt19937_64 rng(13);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> ar;
    double prev = 0.0;
    for (int i = 0; i < 2000; ++i) {
        prev = 0.5 * prev + gauss(rng);
        ar.push_back(prev);
    }
    CHECK(ljung_box(series_of(ar), 20).reject);

    CHECK_THROWS_AS(ljung_box(series_of({1, 2, 3}), 5), std::invalid_argument);
    CHECK_THROWS_AS(ljung_box(series_of(lcg_stream(9, 100)), 0), std::invalid_argument);
}

TEST_CASE("pearson properties") {
    const Series x = series_of(lcg_stream(314, 100), "x");

    // Affine dependence.
    std::vector<double> y2;
    for (const auto& v : x.values) y2.push_back(2.0 * *v + 1.0);
    const auto affine = pearson(x, series_of(y2));
    REQUIRE(affine.has_value());
    CHECK(affine->rho == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(affine->p_value == doctest::Approx(0.0));
    CHECK(affine->stars == "***");

    // Symmetry and self-correlation.
    const Series y = series_of(lcg_stream(159, 100), "y");
    const auto xy = pearson(x, y);
    const auto yx = pearson(y, x);
    REQUIRE(xy.has_value());
    CHECK(xy->rho == doctest::Approx(yx->rho).epsilon(1e-14));
    CHECK(pearson(x, x)->rho == doctest::Approx(1.0));

    // Positive-affine transforms change nothing.
    std::vector<double> z;
    for (const auto& v : y.values) z.push_back(0.25 * *v + 17.0);
    CHECK(pearson(x, series_of(z))->rho == doctest::Approx(xy->rho).epsilon(1e-12));

    // Degenerate inputs.
    CHECK_FALSE(pearson(series_of({1, 2}), series_of({3, 4})).has_value());
    CHECK_FALSE(pearson(series_of({1, 1, 1, 1}), series_of({1, 2, 3, 4})).has_value());
}

TEST_CASE("independent noise earns no stars") {
    int quiet = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto cell = pearson(series_of(lcg_stream(seed * 1000 + 1, 2000)),
                                  series_of(lcg_stream(seed * 1000 + 7, 2000)));
        REQUIRE(cell.has_value());
        if (std::fabs(cell->rho) < 0.06 && cell->stars.empty()) ++quiet;
    }
    CHECK(quiet >= 45);
}

TEST_CASE("stars rule and monotonicity") {
    CHECK(significance_stars(0.0009) == "***");
    CHECK(significance_stars(0.001) == "**");
    CHECK(significance_stars(0.009) == "**");
    CHECK(significance_stars(0.01) == "*");
    CHECK(significance_stars(0.049) == "*");
    CHECK(significance_stars(0.05) == "");
    CHECK(significance_stars(0.9) == "");
}

TEST_CASE("pairwise deletion localizes missing values") {
    Series a = series_of(lcg_stream(21, 60), "a");
    Series b = series_of(lcg_stream(22, 60), "b");
    Series c = series_of(lcg_stream(23, 60), "c");

    const CorrelationTable before = correlation_table({a}, {b, c});
    Series b_gap = b;
    b_gap.values[10] = std::nullopt;
    const CorrelationTable after = correlation_table({a}, {b_gap, c});

    // The a-c cell is untouched; the a-b cell loses one pair.
    CHECK(after.cells[0][1]->rho == before.cells[0][1]->rho);
    CHECK(after.cells[0][0]->n == before.cells[0][0]->n - 1);
}

TEST_CASE("correlation grid shape and degenerate cells") {
    const Series x = series_of(lcg_stream(31, 40), "x");
    const Series y = series_of(lcg_stream(32, 40), "y");
    const Series constant = series_of(std::vector<double>(40, 2.5), "const");

    const CorrelationTable t = correlation_table({x, constant}, {y, constant});
    CHECK(t.row_labels == std::vector<std::string>{"x", "const"});
    CHECK(t.col_labels == std::vector<std::string>{"y", "const"});
    CHECK(t.cells.size() == 2);
    CHECK(t.cells[0].size() == 2);
    CHECK(t.cells[0][0].has_value());
    CHECK_FALSE(t.cells[0][1].has_value());
    CHECK_FALSE(t.cells[1][0].has_value());
    CHECK_FALSE(t.cells[1][1].has_value());
}
