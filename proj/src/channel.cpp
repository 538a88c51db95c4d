#include "berbn/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace berbn {

namespace {

// Substream tags for the per-trial random streams.
enum : std::uint64_t { kBitStream = 0, kInterferenceStream = 1, kNoiseStream = 2 };

}  // namespace

void LinkScenario::validate() const {
    const auto k = static_cast<std::uint64_t>(berbn::bits_per_symbol(modulation));
    if (n_bits == 0 || n_bits % k != 0) {
        throw std::invalid_argument("n_bits (" + std::to_string(n_bits) +
                                    ") must be a positive multiple of " + std::to_string(k));
    }
    if (!(dop_phi_rad >= 0.0) || !std::isfinite(dop_phi_rad)) {
        throw std::invalid_argument("dop_phi_rad must be finite and >= 0");
    }
    if (std::isnan(ebn0_db) || ebn0_db == -kImpairmentOff) {
        throw std::invalid_argument("ebn0_db must be finite or +inf (noise off)");
    }
    if (std::isnan(ci_db) || ci_db == -kImpairmentOff) {
        throw std::invalid_argument("ci_db must be finite or +inf (interference off)");
    }
}

std::vector<IqSymbol> apply_doppler(std::span<const IqSymbol> symbols, double phi) {
    if (!std::isfinite(phi)) {
        throw std::invalid_argument("doppler phase increment must be finite");
    }
    std::vector<IqSymbol> out(symbols.size());
    const IqSymbol step = std::polar(1.0, phi);
    IqSymbol rot{1.0, 0.0};
    for (std::size_t n = 0; n < symbols.size(); ++n) {
        // Re-anchor periodically so rounding in the running product cannot
        // drift over long streams.
        if ((n & 1023u) == 0) rot = std::polar(1.0, phi * static_cast<double>(n));
        out[n] = symbols[n] * rot;
        rot *= step;
    }
    return out;
}

std::vector<IqSymbol> add_interference(std::span<const IqSymbol> symbols, double ci_db, Rng& rng) {
    if (ci_db == kImpairmentOff) return {symbols.begin(), symbols.end()};
    const double amplitude = std::pow(10.0, -ci_db / 20.0);
    std::vector<IqSymbol> out(symbols.size());
    for (std::size_t n = 0; n < symbols.size(); ++n) {
        out[n] = symbols[n] + std::polar(amplitude, rng.next_angle());
    }
    return out;
}

std::vector<IqSymbol> add_noise(std::span<const IqSymbol> symbols, double ebn0_db,
                                int bits_per_symbol, Rng& rng) {
    if (bits_per_symbol < 1) {
        throw std::invalid_argument("bits_per_symbol must be >= 1");
    }
    if (ebn0_db == kImpairmentOff) return {symbols.begin(), symbols.end()};
    const double n0 = 1.0 / (bits_per_symbol * std::pow(10.0, ebn0_db / 10.0));
    const double sigma = std::sqrt(n0 / 2.0);
    std::vector<IqSymbol> out(symbols.size());
    for (std::size_t n = 0; n < symbols.size(); ++n) {
        const auto [z_re, z_im] = rng.next_gaussian_pair();
        out[n] = symbols[n] + IqSymbol(sigma * z_re, sigma * z_im);
    }
    return out;
}

std::vector<std::uint8_t> random_bits(std::uint64_t count, Rng& rng) {
    std::vector<std::uint8_t> bits(count);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_bit());
    return bits;
}

TrialRecord run_trial(const LinkScenario& scenario) {
    scenario.validate();
    const ModScheme& scheme = ModScheme::get(scenario.modulation);

    Rng bit_rng(derive_seed(scenario.seed, kBitStream));
    Rng interference_rng(derive_seed(scenario.seed, kInterferenceStream));
    Rng noise_rng(derive_seed(scenario.seed, kNoiseStream));

    const auto bits = random_bits(scenario.n_bits, bit_rng);
    auto symbols = modulate(bits, scheme);
    symbols = apply_doppler(symbols, scenario.dop_phi_rad);
    symbols = add_interference(symbols, scenario.ci_db, interference_rng);
    symbols = add_noise(symbols, scenario.ebn0_db, scheme.bits_per_symbol(), noise_rng);
    const auto received = demodulate(symbols, scheme);
    const std::uint64_t errors = count_bit_errors(bits, received);

    return TrialRecord{scenario.modulation,
                       scenario.ebn0_db,
                       scenario.ci_db,
                       scenario.dop_phi_rad,
                       scenario.n_bits,
                       errors,
                       static_cast<double>(errors) / static_cast<double>(scenario.n_bits)};
}

}  // namespace berbn
