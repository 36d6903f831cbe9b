#pragma once

// Dense polynomials over a prime field F_p with p < 2^31, coefficients stored
// low degree first. Internal helpers shared by the extension-field arithmetic
// and the factorisation routines; not part of the public API.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace punctured::detail {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 addmod(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 submod(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);
bool is_prime(u64 n);

void fp_trim(FpPoly &a);
int fp_degree(const FpPoly &a); // -1 for the zero polynomial
FpPoly fp_add(const FpPoly &a, const FpPoly &b, u64 p);
FpPoly fp_sub(const FpPoly &a, const FpPoly &b, u64 p);
FpPoly fp_mul(const FpPoly &a, const FpPoly &b, u64 p);
FpPoly fp_scale(const FpPoly &a, u64 c, u64 p);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly &a, const FpPoly &b, u64 p);
FpPoly fp_mod(const FpPoly &a, const FpPoly &m, u64 p);
FpPoly fp_monic(const FpPoly &a, u64 p);
FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p);
// Returns (g, s) with g = gcd(a, m) monic and s*a = g (mod m).
std::pair<FpPoly, FpPoly> fp_gcd_inverse(const FpPoly &a, const FpPoly &m, u64 p);
FpPoly fp_mulmod(const FpPoly &a, const FpPoly &b, const FpPoly &m, u64 p);
FpPoly fp_powmod(const FpPoly &a, const mpz_class &e, const FpPoly &m, u64 p);
FpPoly fp_derivative(const FpPoly &a, u64 p);
bool fp_is_irreducible(const FpPoly &m, u64 p);

// Monic irreducible factors with multiplicities; input must be nonzero.
std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly &a, u64 p);

} // namespace punctured::detail
