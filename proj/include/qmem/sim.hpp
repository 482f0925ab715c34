#pragma once

#include <cstdint>
#include <vector>

#include "qmem/css.hpp"

namespace qmem {

/// Bitmask view of a tiny CSS code (n <= 10): one word per check row,
/// bit i = qubit i, plus reduced stabilizer-span bases for membership tests.
struct PackedCssCode {
    int n = 0;
    std::vector<uint32_t> hx_rows;  // X-type stabilizer generators
    std::vector<uint32_t> hz_rows;  // Z-type stabilizer generators
    std::vector<uint32_t> hx_span;  // reduced basis of rs(H_X)
    std::vector<uint32_t> hz_span;  // reduced basis of rs(H_Z)

    static PackedCssCode from(const CssCode& code);

    /// Syndrome of an X-error frame: parities against the Z-type checks.
    uint32_t syndrome_x(uint32_t ex) const;
    uint32_t syndrome_z(uint32_t ez) const;

    /// True iff the frame is a product of stabilizers (trivial action).
    bool x_trivial(uint32_t ex) const;
    bool z_trivial(uint32_t ez) const;
};

/// Minimum-weight lookup decoder: syndrome -> correction pattern. Ties are
/// broken by the lexicographically smallest pattern (lowest qubit indices).
/// Syndromes no pattern can produce map to the zero correction.
struct DecoderTable {
    std::vector<uint32_t> x_correction;  // indexed by syndrome_x
    std::vector<uint32_t> z_correction;  // indexed by syndrome_z
};

DecoderTable build_decoder_table(const PackedCssCode& code);
DecoderTable build_decoder_table(const CssCode& code);

struct SimConfig {
    CssCode code;          // tiny: n <= 10
    double p_tilde = 0;    // depolarizing parameter per cycle
    double q = 0;          // per-bit syndrome flip probability
    int cycles = 1;        // L
    long long trials = 1;
    uint64_t seed = 0;
};

struct SimResult {
    double logical_error_estimate = 0;
    double confidence_halfwidth = 0;  // 3 sigma binomial half-width
    long long trials_run = 0;
    long long failures = 0;
};

/// Pauli-frame Monte Carlo over L wait-refresh cycles. Deterministic for a
/// fixed seed, independent of thread count (per-block counter-based RNG;
/// QMEM_THREADS caps parallelism).
SimResult simulate(const SimConfig& cfg);

/// Exact single-cycle logical error probability by full joint enumeration:
/// all 4^n Pauli patterns, and all syndrome-flip patterns when q > 0
/// (requires n <= 7 and at most 8 syndrome bits in that case).
double exact_logical_error(const CssCode& code, double p_tilde, double q);

} // namespace qmem
