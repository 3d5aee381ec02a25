#include "tna/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tna {

namespace {

struct CentralMoments {
    double mean = 0.0;
    double m2 = 0.0;  // population central moments
    double m3 = 0.0;
    double m4 = 0.0;
};

CentralMoments central_moments(const std::vector<double>& v) {
    CentralMoments cm;
    const double n = static_cast<double>(v.size());
    for (const double x : v) cm.mean += x;
    cm.mean /= n;
    for (const double x : v) {
        const double d = x - cm.mean;
        const double d2 = d * d;
        cm.m2 += d2;
        cm.m3 += d2 * d;
        cm.m4 += d2 * d2;
    }
    cm.m2 /= n;
    cm.m3 /= n;
    cm.m4 /= n;
    return cm;
}

double chi_squared_pvalue(double statistic, double df) {
    const boost::math::chi_squared dist(df);
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

// Solves the symmetric positive-definite system A x = b in place and returns
// the diagonal of A^-1 (for coefficient standard errors). A is k x k,
// row-major. Returns false when the Cholesky factorization breaks down.
bool spd_solve(std::vector<double>& a, std::vector<double>& b, std::size_t k,
               std::vector<double>& inv_diag) {
    // Cholesky: A = L L^T.
    for (std::size_t j = 0; j < k; ++j) {
        double d = a[j * k + j];
        for (std::size_t p = 0; p < j; ++p) d -= a[j * k + p] * a[j * k + p];
        if (d <= 0.0 || !std::isfinite(d)) return false;
        const double ljj = std::sqrt(d);
        a[j * k + j] = ljj;
        for (std::size_t i = j + 1; i < k; ++i) {
            double s = a[i * k + j];
            for (std::size_t p = 0; p < j; ++p) s -= a[i * k + p] * a[j * k + p];
            a[i * k + j] = s / ljj;
        }
    }
    // Forward then backward substitution for x.
    for (std::size_t i = 0; i < k; ++i) {
        double s = b[i];
        for (std::size_t p = 0; p < i; ++p) s -= a[i * k + p] * b[p];
        b[i] = s / a[i * k + i];
    }
    for (std::size_t ii = k; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t p = ii + 1; p < k; ++p) s -= a[p * k + ii] * b[p];
        b[ii] = s / a[ii * k + ii];
    }
    // A^-1 = L^-T L^-1, so (A^-1)_jj is the squared norm of column j of L^-1,
    // obtained by forward-substituting L x = e_j.
    inv_diag.assign(k, 0.0);
    std::vector<double> col(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        for (std::size_t i = j; i < k; ++i) {
            double s = col[i];
            for (std::size_t p = j; p < i; ++p) s -= a[i * k + p] * col[p];
            col[i] = s / a[i * k + i];
        }
        for (std::size_t i = j; i < k; ++i) inv_diag[j] += col[i] * col[i];
    }
    return true;
}

}  // namespace

std::vector<double> non_missing(const Series& s) {
    std::vector<double> out;
    out.reserve(s.values.size());
    for (const auto& v : s.values) {
        if (v) out.push_back(*v);
    }
    return out;
}

DescriptiveStats describe(const Series& s) {
    std::vector<double> v = non_missing(s);
    if (v.size() < 2) {
        throw std::invalid_argument("describe: need at least 2 non-missing values");
    }
    DescriptiveStats d;
    d.count = v.size();

    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    d.minimum = sorted.front();
    d.maximum = sorted.back();
    const std::size_t mid = sorted.size() / 2;
    d.median = (sorted.size() % 2 == 1) ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);

    const CentralMoments cm = central_moments(v);
    d.mean = cm.mean;
    const double n = static_cast<double>(v.size());
    d.std_dev = std::sqrt(cm.m2 * n / (n - 1.0));
    if (cm.m2 > 0.0) {
        d.skewness = cm.m3 / std::pow(cm.m2, 1.5);
        d.kurtosis = cm.m4 / (cm.m2 * cm.m2);
    }
    return d;
}

AdfResult adf_test(const Series& s, std::optional<int> lag_order, double level) {
    // Large-T Dickey-Fuller critical values, regression with constant.
    static constexpr double kCrit1 = -3.43;
    static constexpr double kCrit5 = -2.86;
    static constexpr double kCrit10 = -2.57;

    const std::vector<double> y = non_missing(s);
    const std::size_t t_len = y.size();
    if (t_len < 25) throw std::invalid_argument("adf_test: need at least 25 non-missing values");

    int p = 0;
    if (lag_order) {
        p = *lag_order;
        if (p < 0) throw std::invalid_argument("adf_test: negative lag order");
    } else {
        p = static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(t_len) / 100.0, 0.25)));
    }
    const std::size_t k = static_cast<std::size_t>(p) + 2;  // constant, y_{t-1}, p lagged diffs

    std::vector<double> dy(t_len - 1);
    for (std::size_t t = 1; t < t_len; ++t) dy[t - 1] = y[t] - y[t - 1];

    // Rows t = p+1 .. T-1 (0-based): regress dy[t-1] on
    // [1, y[t-1], dy[t-2], ..., dy[t-p-1]].
    const std::size_t first = static_cast<std::size_t>(p) + 1;
    const std::size_t nobs = t_len - first;
    if (nobs <= k) throw std::invalid_argument("adf_test: series too short for lag order");

    std::vector<double> row(k);
    std::vector<double> xtx(k * k, 0.0);
    std::vector<double> xty(k, 0.0);
    double yty = 0.0;
    for (std::size_t t = first; t < t_len; ++t) {
        row[0] = 1.0;
        row[1] = y[t - 1];
        for (int i = 1; i <= p; ++i) row[1 + static_cast<std::size_t>(i)] = dy[t - 1 - static_cast<std::size_t>(i)];
        const double target = dy[t - 1];
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i; j < k; ++j) xtx[i * k + j] += row[i] * row[j];
            xty[i] += row[i] * target;
        }
        yty += target * target;
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) xtx[i * k + j] = xtx[j * k + i];
    }

    std::vector<double> beta = xty;  // solved in place
    std::vector<double> inv_diag;
    std::vector<double> chol = xtx;
    if (!spd_solve(chol, beta, k, inv_diag)) {
        // Exactly collinear regressors (e.g. a deterministic input). Retry
        // with a small ridge so a finite statistic is still reported.
        double trace = 0.0;
        for (std::size_t i = 0; i < k; ++i) trace += xtx[i * k + i];
        const double jitter = 1e-10 * (trace / static_cast<double>(k)) + 1e-300;
        chol = xtx;
        for (std::size_t i = 0; i < k; ++i) chol[i * k + i] += jitter;
        beta = xty;
        if (!spd_solve(chol, beta, k, inv_diag)) {
            throw std::invalid_argument("adf_test: singular regressor matrix");
        }
    }

    // SSE = y'y - 2 b'X'y + b'X'Xb, accumulated via the fitted values.
    double bxtxb = 0.0;
    double bxty = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        bxty += beta[i] * xty[i];
        double acc = 0.0;
        for (std::size_t j = 0; j < k; ++j) acc += xtx[i * k + j] * beta[j];
        bxtxb += beta[i] * acc;
    }
    const double sse = std::max(0.0, yty - 2.0 * bxty + bxtxb);
    const double sigma2 = sse / static_cast<double>(nobs - k);
    const double se_beta1 = std::sqrt(sigma2 * inv_diag[1]);

    AdfResult r;
    // A perfect fit leaves no residual variance; report 0 rather than 0/0.
    r.statistic = se_beta1 > 0.0 ? beta[1] / se_beta1 : 0.0;
    r.lag_order = p;
    r.crit_1pct = kCrit1;
    r.crit_5pct = kCrit5;
    r.crit_10pct = kCrit10;
    r.level = level;
    double crit = 0.0;
    if (level == 0.01) crit = kCrit1;
    else if (level == 0.05) crit = kCrit5;
    else if (level == 0.10) crit = kCrit10;
    else throw std::invalid_argument("adf_test: level must be 0.01, 0.05 or 0.10");
    r.reject = r.statistic < crit;
    return r;
}

double jarque_bera_statistic(std::size_t count, double skewness, double raw_kurtosis) {
    const double t = static_cast<double>(count);
    const double excess = raw_kurtosis - 3.0;
    return t / 6.0 * (skewness * skewness + 0.25 * excess * excess);
}

TestResult jarque_bera(const Series& s, double level) {
    const std::vector<double> v = non_missing(s);
    if (v.size() < 8) throw std::invalid_argument("jarque_bera: need at least 8 non-missing values");
    const CentralMoments cm = central_moments(v);
    if (cm.m2 <= 0.0) throw std::invalid_argument("jarque_bera: zero variance");
    const double skew = cm.m3 / std::pow(cm.m2, 1.5);
    const double kurt = cm.m4 / (cm.m2 * cm.m2);
    TestResult r;
    r.statistic = jarque_bera_statistic(v.size(), skew, kurt);
    r.p_value = chi_squared_pvalue(r.statistic, 2.0);
    r.level = level;
    r.reject = r.p_value < level;
    return r;
}

TestResult ljung_box(const Series& s, int lags, double level) {
    const std::vector<double> v = non_missing(s);
    const std::size_t t_len = v.size();
    if (lags < 1) throw std::invalid_argument("ljung_box: need at least one lag");
    if (t_len <= static_cast<std::size_t>(lags)) {
        throw std::invalid_argument("ljung_box: series shorter than lag count");
    }
    double mean = 0.0;
    for (const double x : v) mean += x;
    mean /= static_cast<double>(t_len);
    double c0 = 0.0;
    for (const double x : v) c0 += (x - mean) * (x - mean);
    if (c0 <= 0.0) throw std::invalid_argument("ljung_box: zero variance");

    const double t = static_cast<double>(t_len);
    double q = 0.0;
    for (int h = 1; h <= lags; ++h) {
        double ch = 0.0;
        for (std::size_t i = static_cast<std::size_t>(h); i < t_len; ++i) {
            ch += (v[i] - mean) * (v[i - static_cast<std::size_t>(h)] - mean);
        }
        const double rho = ch / c0;
        q += rho * rho / (t - static_cast<double>(h));
    }
    q *= t * (t + 2.0);

    TestResult r;
    r.statistic = q;
    r.p_value = chi_squared_pvalue(q, static_cast<double>(lags));
    r.level = level;
    r.reject = r.p_value < level;
    return r;
}

std::string significance_stars(double p_value) {
    if (p_value < 0.001) return "***";
    if (p_value < 0.01) return "**";
    if (p_value < 0.05) return "*";
    return "";
}

std::optional<CorrelationCell> pearson(const Series& x, const Series& y) {
    const std::size_t len = std::min(x.values.size(), y.values.size());
    double sx = 0.0, sy = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (x.values[i] && y.values[i]) {
            sx += *x.values[i];
            sy += *y.values[i];
            ++n;
        }
    }
    if (n < 3) return std::nullopt;
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double cxy = 0.0, cxx = 0.0, cyy = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        if (x.values[i] && y.values[i]) {
            const double dx = *x.values[i] - mx;
            const double dy = *y.values[i] - my;
            cxy += dx * dy;
            cxx += dx * dx;
            cyy += dy * dy;
        }
    }
    if (cxx <= 0.0 || cyy <= 0.0) return std::nullopt;

    CorrelationCell cell;
    cell.n = n;
    cell.rho = std::clamp(cxy / std::sqrt(cxx * cyy), -1.0, 1.0);
    const double denom = 1.0 - cell.rho * cell.rho;
    if (denom <= 0.0) {
        cell.p_value = 0.0;
    } else {
        const double df = static_cast<double>(n - 2);
        const double t_stat = cell.rho * std::sqrt(df / denom);
        const boost::math::students_t dist(df);
        cell.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t_stat)));
    }
    cell.stars = significance_stars(cell.p_value);
    return cell;
}

CorrelationTable correlation_table(const std::vector<Series>& rows,
                                   const std::vector<Series>& cols) {
    CorrelationTable table;
    table.cells.resize(rows.size());
    for (const auto& r : rows) table.row_labels.push_back(r.name);
    for (const auto& c : cols) table.col_labels.push_back(c.name);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        table.cells[i].resize(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            table.cells[i][j] = pearson(rows[i], cols[j]);
        }
    }
    return table;
}

}  // namespace tna
