#include <cmath>
#include <numbers>

#include <doctest.h>

#include "cosec/direct_sums.hpp"
#include "cosec/identities.hpp"
#include "cosec/special.hpp"
#include "test_util.hpp"

using namespace cosec;

namespace {
constexpr double pi = std::numbers::pi;
const double sqrt3 = std::sqrt(3.0);
}

TEST_CASE("hand-checked spot values behind the catalog") {
    // sum of C_3(nu) over nu is -S_3 = -4/sqrt(3)
    CHECK_CLOSE(cos_cosecant_sum(SumQuery(3, 1)) + cos_cosecant_sum(SumQuery(3, 2)),
                -4.0 / sqrt3, 1e-14);
    // second moment at n = 3: both routes give 8/3
    const double c31 = cos_cosecant_sum(SumQuery(3, 1));
    const double c32 = cos_cosecant_sum(SumQuery(3, 2));
    CHECK_CLOSE(c31 * c31 + c32 * c32, 8.0 / 3.0, 1e-13);
    const double S3 = watson_sum(3);
    CHECK_CLOSE(3.0 * (9.0 - 1.0) / 3.0 - S3 * S3, 8.0 / 3.0, 1e-13);
    // digamma-weighted sum at n = 2 against the closed right-hand side
    const double lhs = digamma(0.5) * cos_cosecant_sum(SumQuery(2, 1));
    const double rhs = (euler_gamma + 2.0 * std::log(2.0)) * watson_sum(2) -
                       2.0 * cosecant_power_product(2);
    CHECK_CLOSE(lhs, rhs, 1e-13);
}

TEST_CASE("cosecant power product") {
    CHECK(cosecant_power_product(2) == 0.0);  // 1^1
    const double csc60 = 2.0 / sqrt3;
    CHECK_CLOSE(cosecant_power_product(3), 2.0 * csc60 * std::log(csc60), 1e-13);
    CHECK(std::isfinite(cosecant_power_product(300)));
}

TEST_CASE("each catalog identity passes on its default grid") {
    PrecisionPolicy pol;
    for (IdentityId id : identity_catalog()) {
        const IdentityReport rep = check_identity(id, 2, 12, pol);
        CHECK_MESSAGE(rep.pass, to_string(rep.id), " worst ", rep.worst_case_params);
        CHECK_MESSAGE(rep.worst_rel_residual < 1e-10, to_string(rep.id));
    }
}

TEST_CASE("full catalog run at n_max = 10 passes") {
    const auto reports = run_catalog(10, PrecisionPolicy{});
    CHECK(reports.size() == identity_catalog().size());
    for (const auto& rep : reports) CHECK_MESSAGE(rep.pass, to_string(rep.id));
}

TEST_CASE("degenerate grids pass vacuously") {
    const auto reports = run_catalog(2, PrecisionPolicy{});
    for (const auto& rep : reports) CHECK_MESSAGE(rep.pass, to_string(rep.id));
    // DIFFERENCE has an empty domain at n = 2
    const IdentityReport diff = check_identity(IdentityId::difference, 2, 2, PrecisionPolicy{});
    CHECK(diff.pass);
    CHECK(diff.worst_abs_residual == 0.0);
}

TEST_CASE("advanced summation formulae hold at a larger single modulus") {
    PrecisionPolicy pol;
    for (IdentityId id :
         {IdentityId::adv_sum_1, IdentityId::adv_sum_2, IdentityId::adv_sum_3}) {
        const IdentityReport rep = check_identity(id, 300, 300, pol);
        CHECK_MESSAGE(rep.pass, to_string(id), " ", rep.worst_case_params);
        CHECK(rep.worst_rel_residual < 1e-11);
    }
}

TEST_CASE("recurrence composed from the Watson sum reproduces the oracle") {
    for (std::int64_t n : {5, 12, 33}) {
        double value = watson_sum(n);  // C_n(0)
        for (std::int64_t nu = 0; nu + 1 < n; ++nu) {
            value -= 2.0 * detail::cot_pi_ratio(2 * nu + 1, 2 * n);
            CHECK_MESSAGE(
                testutil::close(value, cos_cosecant_sum(SumQuery(n, nu + 1)), 1e-11, 1e-11),
                "n=", n, " nu=", nu + 1);
        }
    }
}

TEST_CASE("shift with kappa = nu reproduces duplication") {
    for (std::int64_t n : {6, 11, 20}) {
        for (std::int64_t nu = 1; 2 * nu < n; ++nu) {
            double block = 0;
            for (std::int64_t l = 1; l <= nu; ++l)
                block += detail::cot_pi_ratio(2 * nu + 2 * l - 1, 2 * n);
            const double dup = cos_cosecant_sum(SumQuery(n, nu)) - 2.0 * block;
            CHECK(testutil::close(dup, cos_cosecant_sum(SumQuery(n, 2 * nu)), 1e-11, 1e-11));
        }
    }
}

TEST_CASE("catalog reports are deterministic and schedule-independent") {
    PrecisionPolicy pol;
    const auto a = run_catalog(8, pol, 1);
    const auto b = run_catalog(8, pol, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].id == b[i].id);
        CHECK(a[i].worst_abs_residual == b[i].worst_abs_residual);
        CHECK(a[i].worst_rel_residual == b[i].worst_rel_residual);
        CHECK(a[i].worst_case_params == b[i].worst_case_params);
    }
}

TEST_CASE("identity checker rejects bad ranges") {
    CHECK_THROWS_AS(check_identity(IdentityId::moment0, 1, 5, PrecisionPolicy{}),
                    domain_error);
    CHECK_THROWS_AS(run_catalog(1, PrecisionPolicy{}), domain_error);
}
