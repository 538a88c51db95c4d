#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "berbn/modem.hpp"
#include "berbn/rng.hpp"

namespace berbn {

// Sentinel for "impairment disabled" in ebn0_db / ci_db, so a single
// impairment can be studied in isolation.
inline constexpr double kImpairmentOff = std::numeric_limits<double>::infinity();

// One link configuration: modulation plus the channel conditions and the
// seed that make the trial reproducible.
struct LinkScenario {
    Modulation modulation = Modulation::DBPSK;
    double ebn0_db = kImpairmentOff;
    double ci_db = kImpairmentOff;
    double dop_phi_rad = 0.0;  // phase rotation per symbol, >= 0
    std::uint64_t n_bits = 0;  // multiple of bits_per_symbol(modulation)
    std::uint64_t seed = 0;

    void validate() const;  // throws std::invalid_argument
};

// Measured outcome of one trial. `ber` is always n_errors/n_bits.
struct TrialRecord {
    Modulation modulation = Modulation::DBPSK;
    double ebn0_db = 0.0;
    double ci_db = 0.0;
    double dop_phi_rad = 0.0;
    std::uint64_t n_bits = 0;
    std::uint64_t n_errors = 0;
    double ber = 0.0;

    bool operator==(const TrialRecord&) const = default;
};

// Accumulating Doppler rotation: symbol n is rotated by n*phi radians, the
// baseband effect of a constant carrier frequency offset. A constant common
// rotation would cancel in differential detection, so it has to accumulate
// to have any effect on the measured error rate.
std::vector<IqSymbol> apply_doppler(std::span<const IqSymbol> symbols, double phi);

// Adds an independent co-channel interferer sample to every symbol:
// constant envelope sqrt(10^(-ci_db/10)) relative to unit signal power,
// phase uniform on [0, 2*pi). ci_db == kImpairmentOff is the identity.
std::vector<IqSymbol> add_interference(std::span<const IqSymbol> symbols, double ci_db, Rng& rng);

// Adds circularly symmetric complex Gaussian noise with total variance
// N0 = 1/(k * 10^(ebn0_db/10)) per symbol (N0/2 per quadrature), for unit
// symbol energy and k information bits per symbol.
// ebn0_db == kImpairmentOff is the identity.
std::vector<IqSymbol> add_noise(std::span<const IqSymbol> symbols, double ebn0_db,
                                int bits_per_symbol, Rng& rng);

std::vector<std::uint8_t> random_bits(std::uint64_t count, Rng& rng);

// Runs one complete trial: random bits -> modulate -> Doppler ->
// interference -> noise -> demodulate -> error count. Pure function of the
// scenario; the bit, interference, and noise streams are derived from the
// scenario seed so disabling one impairment does not shift the others.
TrialRecord run_trial(const LinkScenario& scenario);

}  // namespace berbn
