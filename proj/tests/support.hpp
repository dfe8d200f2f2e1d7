#pragma once

#include <vector>

#include "qop/families.hpp"
#include "qop/random.hpp"

namespace qop::testing {

/// Random polynomial of exact degree `degree` with height-bounded coefficients.
inline Poly random_poly(RationalSampler& sampler, int degree) {
    std::vector<Rational> c;
    for (int k = 0; k < degree; ++k) c.push_back(sampler.next());
    c.push_back(sampler.next_nonzero());
    return Poly(std::move(c));
}

/// The family/parameter grid exercised by the compact-formula equivalence checks.
inline std::vector<FamilySpec> family_grid() {
    return {
        FamilySpec::jacobi(0, 0),
        FamilySpec::jacobi(Rational(1, 2), Rational(1, 3)),
        FamilySpec::jacobi(Rational(-1, 2), Rational(-1, 2)),
        FamilySpec::laguerre(0),
        FamilySpec::laguerre(Rational(1, 2)),
        FamilySpec::hermite(),
        FamilySpec::chebyshev_t(),
        FamilySpec::chebyshev_u(),
        FamilySpec::gegenbauer(1),
        FamilySpec::gegenbauer(Rational(3, 2)),
    };
}

}  // namespace qop::testing
