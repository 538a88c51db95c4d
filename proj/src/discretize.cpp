#include "berbn/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "berbn/errors.hpp"

namespace berbn {

VariableSpec VariableSpec::interval(std::string name, std::string unit,
                                    std::vector<StateDef> states) {
    VariableSpec spec;
    spec.name_ = std::move(name);
    spec.unit_ = std::move(unit);
    spec.kind_ = VariableKind::Interval;
    spec.states_ = std::move(states);
    spec.validate();
    return spec;
}

VariableSpec VariableSpec::categorical(std::string name, std::vector<std::string> states) {
    VariableSpec spec;
    spec.name_ = std::move(name);
    spec.kind_ = VariableKind::Categorical;
    spec.states_.reserve(states.size());
    for (auto& s : states) spec.states_.push_back(StateDef{std::move(s), 0.0, 0.0});
    spec.validate();
    return spec;
}

void VariableSpec::validate() const {
    if (name_.empty()) throw std::invalid_argument("variable needs a name");
    if (states_.size() < 2) {
        throw std::invalid_argument("variable " + name_ + " needs at least 2 states");
    }
    std::set<std::string_view> seen;
    for (const auto& s : states_) {
        if (s.name.empty()) throw std::invalid_argument("variable " + name_ + ": empty state name");
        if (!seen.insert(s.name).second) {
            throw std::invalid_argument("variable " + name_ + ": duplicate state " + s.name);
        }
    }
    if (kind_ == VariableKind::Interval) {
        for (std::size_t i = 0; i < states_.size(); ++i) {
            const auto& s = states_[i];
            if (!std::isfinite(s.lower) || !std::isfinite(s.upper) || !(s.lower < s.upper)) {
                throw std::invalid_argument("variable " + name_ + ": state " + s.name +
                                            " has an empty or non-finite interval");
            }
            if (i > 0 && states_[i - 1].upper != s.lower) {
                throw std::invalid_argument("variable " + name_ + ": states " +
                                            states_[i - 1].name + " and " + s.name +
                                            " are not contiguous");
            }
        }
    }
}

std::vector<std::string> VariableSpec::state_names() const {
    std::vector<std::string> names;
    names.reserve(states_.size());
    for (const auto& s : states_) names.push_back(s.name);
    return names;
}

bool VariableSpec::has_state(std::string_view state_name) const noexcept {
    for (const auto& s : states_) {
        if (s.name == state_name) return true;
    }
    return false;
}

std::size_t VariableSpec::index_of(std::string_view state_name) const {
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (states_[i].name == state_name) return i;
    }
    throw std::invalid_argument("variable " + name_ + " has no state named " +
                                std::string(state_name));
}

double VariableSpec::lower_bound() const {
    if (kind_ != VariableKind::Interval) {
        throw std::invalid_argument("variable " + name_ + " is categorical");
    }
    return states_.front().lower;
}

double VariableSpec::upper_bound() const {
    if (kind_ != VariableKind::Interval) {
        throw std::invalid_argument("variable " + name_ + " is categorical");
    }
    return states_.back().upper;
}

std::size_t VariableSpec::bin_index(double value, OutOfRangePolicy policy) const {
    if (kind_ != VariableKind::Interval) {
        throw std::invalid_argument("cannot discretize a value against categorical variable " +
                                    name_);
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("variable " + name_ + ": value is not finite");
    }
    if (value < lower_bound() || value > upper_bound()) {
        if (policy == OutOfRangePolicy::Clamp) {
            return value < lower_bound() ? 0 : states_.size() - 1;
        }
        throw OutOfRangeError("variable " + name_ + ": value " + std::to_string(value) +
                              " outside [" + std::to_string(lower_bound()) + ", " +
                              std::to_string(upper_bound()) + "]");
    }
    // Last state whose lower bound is <= value; the final state also owns
    // its upper bound.
    const auto it = std::upper_bound(
        states_.begin(), states_.end(), value,
        [](double v, const StateDef& s) { return v < s.lower; });
    const std::size_t idx = static_cast<std::size_t>(it - states_.begin());
    return idx == 0 ? 0 : idx - 1;
}

const std::string& VariableSpec::discretize(double value, OutOfRangePolicy policy) const {
    return states_[bin_index(value, policy)].name;
}

std::vector<VariableSpec> default_variable_specs() {
    return {
        VariableSpec::interval(kVarEbn0, "dB",
                               {{"EbN0_1", -72.8, 0.0},
                                {"EbN0_2", 0.0, 10.0},
                                {"EbN0_3", 10.0, 13.0},
                                {"EbN0_4", 13.0, 16.0},
                                {"EbN0_5", 16.0, 19.0},
                                {"EbN0_6", 19.0, 109.1}}),
        VariableSpec::interval(kVarCi, "dB",
                               {{"C/I_1", -159.0, 0.0},
                                {"C/I_2", 0.0, 20.0},
                                {"C/I_3", 20.0, 30.0},
                                {"C/I_4", 30.0, 40.0},
                                {"C/I_5", 40.0, 50.0},
                                {"C/I_6", 50.0, 159.0}}),
        VariableSpec::interval(kVarDopPhi, "rad",
                               {{"Phi_1", 0.0, 0.05}, {"Phi_2", 0.05, 0.1}, {"Phi_3", 0.1, 0.136}}),
        VariableSpec::categorical(kVarMod, {"DBPSK", "DQPSK", "D8PSK"}),
        VariableSpec::interval(kVarBer, "",
                               {{"BER_1", 0.0, 1e-5},
                                {"BER_2", 1e-5, 1e-3},
                                {"BER_3", 1e-3, 1e-2},
                                {"BER_4", 1e-2, 1e-1},
                                {"BER_5", 1e-1, 1.0}}),
    };
}

const VariableSpec& spec_by_name(std::span<const VariableSpec> specs, std::string_view name) {
    for (const auto& s : specs) {
        if (s.name() == name) return s;
    }
    throw std::invalid_argument("no variable spec named " + std::string(name));
}

DiscreteRecord discretize_record(const TrialRecord& trial, std::span<const VariableSpec> specs,
                                 OutOfRangePolicy policy) {
    const auto& mod_spec = spec_by_name(specs, kVarMod);
    const std::string mod_name = to_string(trial.modulation);
    if (!mod_spec.has_state(mod_name)) {
        throw std::invalid_argument("variable MOD has no state named " + mod_name);
    }
    DiscreteRecord record;
    record[kVarEbn0] = spec_by_name(specs, kVarEbn0).discretize(trial.ebn0_db, policy);
    record[kVarCi] = spec_by_name(specs, kVarCi).discretize(trial.ci_db, policy);
    record[kVarDopPhi] = spec_by_name(specs, kVarDopPhi).discretize(trial.dop_phi_rad, policy);
    record[kVarMod] = mod_name;
    record[kVarBer] = spec_by_name(specs, kVarBer).discretize(trial.ber, policy);
    return record;
}

}  // namespace berbn
