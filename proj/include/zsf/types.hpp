#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace zsf {

/// Canonical residue of C_n, always in [0, n-1].
using Residue = std::uint64_t;

/// Exact nonnegative counts. Values grow past 64 bits for large k.
using BigInt = mpz_class;

/// Exact rationals for probabilities and expectations.
using Rational = mpq_class;

}  // namespace zsf
