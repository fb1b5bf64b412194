#pragma once

// Double-precision term generator shared by the Moebius-weighted partial sums.

#include "zeta/mobius.hpp"

namespace rzeta {

/// re/im[k - k0] = mu(k) log^n(k) k^{-(sigma + i tau)} for k0 <= k < k1.
/// Entries with mu(k) = 0 (and k = 1 when n > 0) are exactly zero.
void mobius_power_terms(const MobiusTable& table, double sigma, double tau, int n, long k0,
                        long k1, double* re, double* im);

}  // namespace rzeta
