#include "cosec/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>

#include "cosec/errors.hpp"
#include "cosec/kahan.hpp"

namespace cosec {

namespace {
std::shared_mutex& bernoulli_mutex() {
    static std::shared_mutex m;
    return m;
}

// Coefficient rows C(m, j) B_j of the Bernoulli polynomials, cached per degree.
std::shared_mutex& poly_mutex() {
    static std::shared_mutex m;
    return m;
}
std::vector<std::vector<ExactRational>>& poly_rows() {
    static std::vector<std::vector<ExactRational>> rows;
    return rows;
}
std::vector<std::vector<double>>& poly_rows_dbl() {
    static std::vector<std::vector<double>> rows;
    return rows;
}

void ensure_poly_rows(int m) {
    {
        std::shared_lock lock(poly_mutex());
        if (static_cast<int>(poly_rows().size()) > m) return;
    }
    std::unique_lock lock(poly_mutex());
    auto& rows = poly_rows();
    auto& rowsd = poly_rows_dbl();
    while (static_cast<int>(rows.size()) <= m) {
        const int deg = static_cast<int>(rows.size());
        std::vector<ExactRational> row(deg + 1);
        std::vector<double> rowd(deg + 1);
        for (int j = 0; j <= deg; ++j) {
            row[j] = ExactRational(binomial(deg, j), 1) * bernoulli_number(j);
            rowd[j] = row[j].to_double();
        }
        rows.push_back(std::move(row));
        rowsd.push_back(std::move(rowd));
    }
}
}  // namespace

BernoulliCache& BernoulliCache::instance() {
    static BernoulliCache cache;
    return cache;
}

BernoulliCache::BernoulliCache() {
    table_.push_back(ExactRational(1));
    table_.push_back(ExactRational(BigInt(-1), BigInt(2)));
}

ExactRational BernoulliCache::get(int m) {
    if (m < 0) throw domain_error("bernoulli_number: order must be >= 0");
    {
        std::shared_lock lock(bernoulli_mutex());
        if (m < static_cast<int>(table_.size())) return table_[m];
    }
    std::unique_lock lock(bernoulli_mutex());
    extend_locked(m);
    return table_[m];
}

int BernoulliCache::max_order() const {
    std::shared_lock lock(bernoulli_mutex());
    return static_cast<int>(table_.size()) - 1;
}

void BernoulliCache::extend_locked(int m) {
    while (static_cast<int>(table_.size()) <= m) {
        const int k = static_cast<int>(table_.size());
        if (k % 2 == 1) {  // B_{2j+1} = 0 for j >= 1
            table_.push_back(ExactRational(0));
            continue;
        }
        ExactRational acc(0);
        for (int j = 0; j < k; ++j) {
            if (table_[j].is_zero()) continue;
            acc += ExactRational(binomial(k + 1, j), 1) * table_[j];
        }
        table_.push_back(-(acc / ExactRational(k + 1)));
    }
}

ExactRational bernoulli_number(int m) { return BernoulliCache::instance().get(m); }

double bernoulli_polynomial(int m, double x) {
    if (m < 0) throw domain_error("bernoulli_polynomial: degree must be >= 0");
    ensure_poly_rows(m);
    std::shared_lock lock(poly_mutex());
    const auto& row = poly_rows_dbl()[m];
    // Horner in ascending j: B_m(x) = sum_j row[j] x^{m-j}
    double acc = row[0];
    for (int j = 1; j <= m; ++j) acc = acc * x + row[j];
    return acc;
}

ExactRational bernoulli_polynomial_exact(int m, const ExactRational& x) {
    if (m < 0) throw domain_error("bernoulli_polynomial: degree must be >= 0");
    ensure_poly_rows(m);
    std::shared_lock lock(poly_mutex());
    const auto& row = poly_rows()[m];
    ExactRational acc = row[0];
    for (int j = 1; j <= m; ++j) acc = acc * x + row[j];
    return acc;
}

}  // namespace cosec
