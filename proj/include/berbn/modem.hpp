#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace berbn {

// Complex baseband symbol. Transmitted DPSK symbols always have modulus 1.
using IqSymbol = std::complex<double>;

// One bit per element, values 0 or 1.
using BitVec = std::vector<std::uint8_t>;

enum class Modulation { DBPSK, DQPSK, D8PSK };

inline constexpr std::array<Modulation, 3> kAllModulations = {
    Modulation::DBPSK, Modulation::DQPSK, Modulation::D8PSK};

int bits_per_symbol(Modulation mod) noexcept;
const char* to_string(Modulation mod) noexcept;
Modulation modulation_from_string(std::string_view name);

// Differential 2^k-ary PSK scheme. Information is carried in the phase
// increment between consecutive symbols; the 2^k increments are multiples of
// 2*pi/2^k and are mapped to k-bit groups through a binary-reflected Gray
// code, so neighbouring increments differ in exactly one bit.
class ModScheme {
public:
    static const ModScheme& get(Modulation mod);

    Modulation modulation() const noexcept { return mod_; }
    int bits_per_symbol() const noexcept { return k_; }
    int order() const noexcept { return order_; }  // number of increments, 2^k

    // Phase of increment `index`, i.e. 2*pi*index/order.
    double increment_phase(int index) const;

    // k-bit group assigned to increment `index` (Gray code).
    unsigned bit_group(int index) const;

    // Inverse of bit_group().
    int index_of_group(unsigned group) const;

    // Unit phasor exp(i*2*pi*state/order).
    IqSymbol phasor(int state) const;

private:
    explicit ModScheme(Modulation mod);

    Modulation mod_;
    int k_;
    int order_;
    std::vector<IqSymbol> phasors_;
    std::vector<unsigned> gray_;
    std::vector<int> gray_inverse_;
};

// Differential modulation. Output holds bits.size()/k information symbols
// preceded by the reference symbol at phase 0. Throws std::invalid_argument
// when bits.size() is not a multiple of k or any element is not 0/1.
std::vector<IqSymbol> modulate(std::span<const std::uint8_t> bits, const ModScheme& scheme);

// Differential detection: for each consecutive symbol pair the argument of
// y[n] * conj(y[n-1]) is quantized to the nearest increment. Requires at
// least two symbols.
BitVec demodulate(std::span<const IqSymbol> symbols, const ModScheme& scheme);

// Index of the increment circularly closest to `phase_delta` (radians).
// Exact halfway cases resolve to the smaller index.
int nearest_increment(double phase_delta, const ModScheme& scheme) noexcept;

// Hamming distance between two equal-length bit sequences.
std::size_t count_bit_errors(std::span<const std::uint8_t> sent,
                             std::span<const std::uint8_t> received);

}  // namespace berbn
