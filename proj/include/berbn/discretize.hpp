#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "berbn/channel.hpp"

namespace berbn {

// Canonical variable names used throughout the model.
inline constexpr const char* kVarEbn0 = "EbN0";
inline constexpr const char* kVarCi = "C/I";
inline constexpr const char* kVarDopPhi = "Dop_Phi";
inline constexpr const char* kVarMod = "MOD";
inline constexpr const char* kVarBer = "BER";

enum class VariableKind { Interval, Categorical };

// What to do with a value outside a variable's total range. Clamping is
// never the default; silently folding outliers into the edge states would
// corrupt training data.
enum class OutOfRangePolicy { Error, Clamp };

// One named state. For interval variables [lower, upper) is half-open,
// except the last state of a variable which also owns its upper bound.
// Categorical states carry no bounds.
struct StateDef {
    std::string name;
    double lower = 0.0;
    double upper = 0.0;
};

// A discrete variable: an ordered, contiguous partition of a real range, or
// a plain set of category names.
class VariableSpec {
public:
    VariableSpec() = default;

    static VariableSpec interval(std::string name, std::string unit,
                                 std::vector<StateDef> states);
    static VariableSpec categorical(std::string name, std::vector<std::string> states);

    const std::string& name() const noexcept { return name_; }
    const std::string& unit() const noexcept { return unit_; }
    VariableKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return states_.size(); }
    const StateDef& state(std::size_t i) const { return states_.at(i); }
    std::vector<std::string> state_names() const;

    bool has_state(std::string_view state_name) const noexcept;
    std::size_t index_of(std::string_view state_name) const;  // throws std::invalid_argument

    // Interval variables only.
    double lower_bound() const;
    double upper_bound() const;
    std::size_t bin_index(double value, OutOfRangePolicy policy = OutOfRangePolicy::Error) const;
    const std::string& discretize(double value,
                                  OutOfRangePolicy policy = OutOfRangePolicy::Error) const;

    void validate() const;  // throws std::invalid_argument

private:
    std::string name_;
    std::string unit_;
    VariableKind kind_ = VariableKind::Categorical;
    std::vector<StateDef> states_;
};

// The stock discretization: EbN0 and C/I in dB, Doppler phase in radians,
// BER on log-spaced bins, and the categorical modulation variable.
std::vector<VariableSpec> default_variable_specs();

const VariableSpec& spec_by_name(std::span<const VariableSpec> specs, std::string_view name);

// A fully discretized training sample: state name for every variable.
using DiscreteRecord = std::map<std::string, std::string, std::less<>>;

// Maps a trial's measurements onto state names for all five variables.
DiscreteRecord discretize_record(const TrialRecord& trial, std::span<const VariableSpec> specs,
                                 OutOfRangePolicy policy = OutOfRangePolicy::Error);

}  // namespace berbn
