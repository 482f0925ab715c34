#include "qmem/sim.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace qmem {

namespace {

constexpr int kMaxQubits = 10;
constexpr long long kTrialsPerBlock = 8192;

std::vector<uint32_t> pack_rows(const BinaryMatrix& m) {
    std::vector<uint32_t> rows(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j)) rows[i] |= uint32_t{1} << j;
    return rows;
}

// Reduced basis: each vector keeps a unique leading (highest) bit.
std::vector<uint32_t> reduced_basis(std::vector<uint32_t> rows) {
    std::vector<uint32_t> basis;
    for (uint32_t v : rows) {
        for (uint32_t b : basis) {
            const uint32_t lead = uint32_t{1} << (31 - std::countl_zero(b));
            if (v & lead) v ^= b;
        }
        if (v) {
            basis.push_back(v);
            std::sort(basis.begin(), basis.end(), std::greater<>());
        }
    }
    return basis;
}

bool in_span(uint32_t v, const std::vector<uint32_t>& basis) {
    for (uint32_t b : basis) {
        const uint32_t lead = uint32_t{1} << (31 - std::countl_zero(b));
        if (v & lead) v ^= b;
    }
    return v == 0;
}

uint32_t parity_syndrome(uint32_t e, const std::vector<uint32_t>& rows) {
    uint32_t s = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        s |= uint32_t(std::popcount(rows[i] & e) & 1) << i;
    return s;
}

// splitmix64: cheap counter-based stream, one per trial block.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t s) : state(s) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
};

uint64_t block_seed(uint64_t seed, uint64_t block) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (block + 1)));
    return mix.next();
}

int thread_cap() {
    if (const char* env = std::getenv("QMEM_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return int(v);
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

} // namespace

PackedCssCode PackedCssCode::from(const CssCode& code) {
    if (code.n > kMaxQubits) throw std::invalid_argument("PackedCssCode: code too large (n > 10)");
    if (code.h_x.rows() > 20 || code.h_z.rows() > 20)
        throw std::invalid_argument("PackedCssCode: too many check rows");
    PackedCssCode p;
    p.n = int(code.n);
    p.hx_rows = pack_rows(code.h_x);
    p.hz_rows = pack_rows(code.h_z);
    p.hx_span = reduced_basis(p.hx_rows);
    p.hz_span = reduced_basis(p.hz_rows);
    return p;
}

uint32_t PackedCssCode::syndrome_x(uint32_t ex) const { return parity_syndrome(ex, hz_rows); }
uint32_t PackedCssCode::syndrome_z(uint32_t ez) const { return parity_syndrome(ez, hx_rows); }
bool PackedCssCode::x_trivial(uint32_t ex) const { return in_span(ex, hx_span); }
bool PackedCssCode::z_trivial(uint32_t ez) const { return in_span(ez, hz_span); }

namespace {

std::vector<uint32_t> min_weight_table(const PackedCssCode& code,
                                       const std::vector<uint32_t>& checks) {
    const std::size_t n_syndromes = std::size_t{1} << checks.size();
    std::vector<uint32_t> table(n_syndromes, 0);
    std::vector<bool> filled(n_syndromes, false);
    std::size_t remaining = n_syndromes;
    const uint32_t n_patterns = uint32_t{1} << code.n;
    for (int w = 0; w <= code.n && remaining > 0; ++w) {
        for (uint32_t e = 0; e < n_patterns; ++e) {
            if (std::popcount(e) != w) continue;
            const uint32_t s = parity_syndrome(e, checks);
            if (!filled[s]) {
                filled[s] = true;
                table[s] = e;
                --remaining;
            }
        }
    }
    // Unreachable syndromes (dependent check rows only) stay at zero.
    return table;
}

} // namespace

DecoderTable build_decoder_table(const PackedCssCode& code) {
    DecoderTable t;
    t.x_correction = min_weight_table(code, code.hz_rows);
    t.z_correction = min_weight_table(code, code.hx_rows);
    return t;
}

DecoderTable build_decoder_table(const CssCode& code) {
    return build_decoder_table(PackedCssCode::from(code));
}

SimResult simulate(const SimConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
    if (cfg.p_tilde < 0 || cfg.p_tilde > 1 || cfg.q < 0 || cfg.q > 1)
        throw std::invalid_argument("simulate: probabilities must be in [0,1]");
    if (cfg.cycles < 1) throw std::invalid_argument("simulate: cycles must be >= 1");

    const PackedCssCode code = PackedCssCode::from(cfg.code);
    const DecoderTable dec = build_decoder_table(code);
    const int n = code.n;
    const int rx = int(code.hz_rows.size());
    const int rz = int(code.hx_rows.size());
    const double p3 = cfg.p_tilde / 3.0;

    const long long n_blocks = (cfg.trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
    std::vector<long long> block_failures(std::size_t(n_blocks), 0);

    auto run_block = [&](long long block) {
        SplitMix64 rng(block_seed(cfg.seed, uint64_t(block)));
        const long long first = block * kTrialsPerBlock;
        const long long count = std::min(kTrialsPerBlock, cfg.trials - first);
        long long fails = 0;
        for (long long t = 0; t < count; ++t) {
            uint32_t ex = 0, ez = 0;
            for (int cyc = 0; cyc < cfg.cycles; ++cyc) {
                for (int qb = 0; qb < n; ++qb) {
                    const double u = rng.uniform();
                    if (u < p3)
                        ex ^= uint32_t{1} << qb;  // X
                    else if (u < 2 * p3) {
                        ex ^= uint32_t{1} << qb;  // Y
                        ez ^= uint32_t{1} << qb;
                    } else if (u < 3 * p3)
                        ez ^= uint32_t{1} << qb;  // Z
                }
                uint32_t sx = code.syndrome_x(ex);
                uint32_t sz = code.syndrome_z(ez);
                if (cfg.q > 0) {
                    for (int b = 0; b < rx; ++b)
                        if (rng.uniform() < cfg.q) sx ^= uint32_t{1} << b;
                    for (int b = 0; b < rz; ++b)
                        if (rng.uniform() < cfg.q) sz ^= uint32_t{1} << b;
                }
                ex ^= dec.x_correction[sx];
                ez ^= dec.z_correction[sz];
            }
            if (!code.x_trivial(ex) || !code.z_trivial(ez)) ++fails;
        }
        block_failures[std::size_t(block)] = fails;
    };

    const int threads = std::min<long long>(thread_cap(), n_blocks);
    if (threads <= 1) {
        for (long long b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<long long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (long long b = next.fetch_add(1); b < n_blocks; b = next.fetch_add(1))
                    run_block(b);
            });
        for (auto& th : pool) th.join();
    }

    long long failures = 0;
    for (long long f : block_failures) failures += f;

    SimResult r;
    r.trials_run = cfg.trials;
    r.failures = failures;
    r.logical_error_estimate = double(failures) / double(cfg.trials);
    r.confidence_halfwidth =
        3.0 * std::sqrt(r.logical_error_estimate * (1 - r.logical_error_estimate) / double(cfg.trials));
    return r;
}

double exact_logical_error(const CssCode& css, double p_tilde, double q) {
    if (p_tilde < 0 || p_tilde > 1 || q < 0 || q > 1)
        throw std::invalid_argument("exact_logical_error: probabilities must be in [0,1]");
    const PackedCssCode code = PackedCssCode::from(css);
    const int n = code.n;
    const int rx = int(code.hz_rows.size());
    const int rz = int(code.hx_rows.size());
    if (q > 0 && (n > 7 || rx + rz > 8))
        throw std::invalid_argument("exact_logical_error: joint enumeration too large for q > 0");

    const DecoderTable dec = build_decoder_table(code);
    const double p3 = p_tilde / 3.0;

    double total = 0;
    uint64_t n_paulis = 1;
    for (int i = 0; i < n; ++i) n_paulis *= 4;

    for (uint64_t pat = 0; pat < n_paulis; ++pat) {
        double prob = 1;
        uint32_t ex = 0, ez = 0;
        uint64_t rest = pat;
        for (int qb = 0; qb < n; ++qb, rest >>= 2) {
            switch (rest & 3) {
                case 0: prob *= 1 - p_tilde; break;
                case 1: prob *= p3; ex |= uint32_t{1} << qb; break;
                case 2: prob *= p3; ex |= uint32_t{1} << qb; ez |= uint32_t{1} << qb; break;
                case 3: prob *= p3; ez |= uint32_t{1} << qb; break;
            }
        }
        if (prob == 0) continue;
        const uint32_t sx = code.syndrome_x(ex);
        const uint32_t sz = code.syndrome_z(ez);
        if (q == 0) {
            const uint32_t rex = ex ^ dec.x_correction[sx];
            const uint32_t rez = ez ^ dec.z_correction[sz];
            if (!code.x_trivial(rex) || !code.z_trivial(rez)) total += prob;
        } else {
            const int fbits = rx + rz;
            for (uint32_t flips = 0; flips < (uint32_t{1} << fbits); ++flips) {
                const int w = std::popcount(flips);
                const double pf = prob * std::pow(q, w) * std::pow(1 - q, fbits - w);
                const uint32_t fx = flips & ((uint32_t{1} << rx) - 1);
                const uint32_t fz = flips >> rx;
                const uint32_t rex = ex ^ dec.x_correction[sx ^ fx];
                const uint32_t rez = ez ^ dec.z_correction[sz ^ fz];
                if (!code.x_trivial(rex) || !code.z_trivial(rez)) total += pf;
            }
        }
    }
    return total;
}

} // namespace qmem
