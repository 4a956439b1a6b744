#pragma once

#include "qlattice/errors.hpp"

namespace qlat {

/// Tolerance policy shared by all numeric decisions.
///
/// eps_structural guards validation (Hermitian, idempotent, trace-1),
/// eps_exist guards the existence decision and the boolean lattice
/// predicates, eps_rank is the relative singular-value cutoff for
/// numerical rank.
struct ToleranceConfig {
    double eps_structural = 1e-9;
    double eps_exist = 1e-8;
    double eps_rank = 1e-10;

    void validate() const {
        if (!(eps_structural > 0.0 && eps_exist > 0.0 && eps_rank > 0.0))
            throw DomainError("tolerances must be strictly positive");
        if (!(eps_rank < eps_structural && eps_structural < 1.0))
            throw DomainError("tolerance ordering violated: need eps_rank < eps_structural < 1");
    }
};

}  // namespace qlat
