#include "berbn/modem.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace berbn {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

int bits_per_symbol(Modulation mod) noexcept {
    switch (mod) {
        case Modulation::DBPSK: return 1;
        case Modulation::DQPSK: return 2;
        case Modulation::D8PSK: return 3;
    }
    return 0;
}

const char* to_string(Modulation mod) noexcept {
    switch (mod) {
        case Modulation::DBPSK: return "DBPSK";
        case Modulation::DQPSK: return "DQPSK";
        case Modulation::D8PSK: return "D8PSK";
    }
    return "?";
}

Modulation modulation_from_string(std::string_view name) {
    for (Modulation m : kAllModulations) {
        if (name == to_string(m)) return m;
    }
    throw std::invalid_argument("unknown modulation: " + std::string(name));
}

ModScheme::ModScheme(Modulation mod)
    : mod_(mod), k_(berbn::bits_per_symbol(mod)), order_(1 << k_) {
    phasors_.resize(order_);
    gray_.resize(order_);
    gray_inverse_.resize(order_);
    for (int i = 0; i < order_; ++i) {
        phasors_[i] = std::polar(1.0, kTwoPi * i / order_);
        const unsigned g = static_cast<unsigned>(i) ^ (static_cast<unsigned>(i) >> 1);
        gray_[i] = g;
        gray_inverse_[g] = i;
    }
}

const ModScheme& ModScheme::get(Modulation mod) {
    static const ModScheme dbpsk(Modulation::DBPSK);
    static const ModScheme dqpsk(Modulation::DQPSK);
    static const ModScheme d8psk(Modulation::D8PSK);
    switch (mod) {
        case Modulation::DQPSK: return dqpsk;
        case Modulation::D8PSK: return d8psk;
        case Modulation::DBPSK: break;
    }
    return dbpsk;
}

double ModScheme::increment_phase(int index) const {
    return kTwoPi * index / order_;
}

unsigned ModScheme::bit_group(int index) const {
    return gray_.at(static_cast<std::size_t>(index));
}

int ModScheme::index_of_group(unsigned group) const {
    return gray_inverse_.at(group);
}

IqSymbol ModScheme::phasor(int state) const {
    return phasors_.at(static_cast<std::size_t>(state));
}

std::vector<IqSymbol> modulate(std::span<const std::uint8_t> bits, const ModScheme& scheme) {
    const int k = scheme.bits_per_symbol();
    if (bits.size() % static_cast<std::size_t>(k) != 0) {
        throw std::invalid_argument("bit count " + std::to_string(bits.size()) +
                                    " is not a multiple of " + std::to_string(k));
    }
    std::vector<IqSymbol> out;
    out.reserve(bits.size() / k + 1);
    int state = 0;
    out.push_back(scheme.phasor(0));  // reference symbol
    const int order = scheme.order();
    for (std::size_t i = 0; i < bits.size(); i += k) {
        unsigned group = 0;
        for (int b = 0; b < k; ++b) {
            const std::uint8_t bit = bits[i + b];
            if (bit > 1) throw std::invalid_argument("bits must be 0 or 1");
            group = (group << 1) | bit;  // MSB first within a group
        }
        state = (state + scheme.index_of_group(group)) % order;
        out.push_back(scheme.phasor(state));
    }
    return out;
}

int nearest_increment(double phase_delta, const ModScheme& scheme) noexcept {
    const int order = scheme.order();
    // Work in units of whole increments; the closest integer (mod order) is
    // the closest increment on the circle.
    const double turns = phase_delta * order / kTwoPi;
    const double base = std::floor(turns);
    const double frac = turns - base;
    auto wrap = [order](long long v) {
        return static_cast<int>(((v % order) + order) % order);
    };
    const long long lo = static_cast<long long>(base);
    if (frac > 0.5) return wrap(lo + 1);
    if (frac < 0.5) return wrap(lo);
    return std::min(wrap(lo), wrap(lo + 1));  // exact tie: smaller index
}

BitVec demodulate(std::span<const IqSymbol> symbols, const ModScheme& scheme) {
    if (symbols.size() < 2) {
        throw std::invalid_argument("demodulation needs at least 2 symbols");
    }
    const int k = scheme.bits_per_symbol();
    BitVec out;
    out.reserve((symbols.size() - 1) * k);
    for (std::size_t n = 1; n < symbols.size(); ++n) {
        const IqSymbol d = symbols[n] * std::conj(symbols[n - 1]);
        const int index = nearest_increment(std::arg(d), scheme);
        const unsigned group = scheme.bit_group(index);
        for (int b = k - 1; b >= 0; --b) {
            out.push_back(static_cast<std::uint8_t>((group >> b) & 1u));
        }
    }
    return out;
}

std::size_t count_bit_errors(std::span<const std::uint8_t> sent,
                             std::span<const std::uint8_t> received) {
    if (sent.size() != received.size()) {
        throw std::invalid_argument("bit sequences differ in length: " +
                                    std::to_string(sent.size()) + " vs " +
                                    std::to_string(received.size()));
    }
    std::size_t errors = 0;
    for (std::size_t i = 0; i < sent.size(); ++i) {
        errors += (sent[i] != received[i]) ? 1u : 0u;
    }
    return errors;
}

}  // namespace berbn
