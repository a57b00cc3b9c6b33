#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cosec/errors.hpp"
#include "cosec/precision.hpp"

namespace cosec {

// One sum instance (n, nu).  nu may be any integer; the periodic extension
// C_n(nu + mn) = C_n(nu) reduces it to the canonical residue, and nu = 0 mod n
// is the Watson-sum case, kept as an explicit flag rather than a silent value.
struct SumQuery {
    std::int64_t n;
    std::int64_t nu;      // as given
    std::int64_t nu_mod;  // nu mod n, in [0, n-1]

    SumQuery(std::int64_t n_, std::int64_t nu_) : n(n_), nu(nu_) {
        if (n < 2) throw domain_error("SumQuery: n must be >= 2");
        nu_mod = nu % n;
        if (nu_mod < 0) nu_mod += n;
    }

    bool is_watson_case() const { return nu_mod == 0; }
};

enum class Method {
    direct,
    finite_series,
    infinite_series,
    integral_poisson,
    integral_hyperbolic,
    asymptotic_main,
    asymptotic_refined,
    approximation,
};

const char* to_string(Method m);

// A computed value with its provenance and, when the method provides one, a
// two-sided error bracket guaranteed to contain the computed value.
struct Evaluation {
    double value = 0;
    Method method = Method::direct;
    long long terms_used = 0;
    std::optional<RemainderBracket> error_bracket;
};

}  // namespace cosec
