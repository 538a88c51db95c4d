#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "berbn/discretize.hpp"

namespace berbn {

// Directed acyclic graph over named variables.
struct NetworkStructure {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;  // parent -> child

    // The stock model: MOD, EbN0, C/I, and Dop_Phi are parents of BER.
    static NetworkStructure default_ber_network();

    void validate() const;  // throws std::invalid_argument on cycles / unknown endpoints
    bool has_node(std::string_view name) const noexcept;
    std::vector<std::string> parents_of(std::string_view node) const;  // in edge order
    std::vector<std::string> roots() const;
};

struct CptRow {
    std::vector<std::string> parent_states;  // ordered as Cpt::parents()
    std::vector<double> probs;               // ordered as Cpt::child_states()
    std::uint64_t n = 0;                     // training samples behind this row
    bool observed = false;                   // false: no data, row is the uniform fallback
};

// Conditional probability table of one child given its parents. Rows are
// kept in insertion order; lookups go through an index keyed on the parent
// state tuple.
class Cpt {
public:
    Cpt() = default;
    Cpt(std::string child, std::vector<std::string> parents,
        std::vector<std::string> child_states);

    const std::string& child() const noexcept { return child_; }
    const std::vector<std::string>& parents() const noexcept { return parents_; }
    const std::vector<std::string>& child_states() const noexcept { return child_states_; }
    const std::vector<CptRow>& rows() const noexcept { return rows_; }

    void add_row(CptRow row);  // throws on arity mismatch or duplicate key
    const CptRow& row(std::span<const std::string> parent_states) const;
    const CptRow* find_row(std::span<const std::string> parent_states) const noexcept;

    std::size_t unobserved_count() const noexcept;

    // Checks that every probability vector is a distribution.
    void validate(double tolerance = 1e-9) const;

private:
    std::string child_;
    std::vector<std::string> parents_;
    std::vector<std::string> child_states_;
    std::vector<CptRow> rows_;
    std::map<std::vector<std::string>, std::size_t> index_;
};

using Evidence = std::map<std::string, std::string, std::less<>>;
using Assignment = std::map<std::string, std::string, std::less<>>;

// Per-variable distributions over that variable's states (spec order).
struct Posterior {
    std::map<std::string, std::vector<double>> marginals;
};

// Maximum-likelihood CPT estimation from discretized records. Each row is
// the normalized child-state count for one parent combination, optionally
// smoothed: p(s) = (count(s) + pseudocount) / (total + pseudocount * S).
// Combinations with no data (and zero pseudocount) fall back to the uniform
// distribution and are flagged unobserved.
Cpt learn_cpt(std::span<const DiscreteRecord> records, const NetworkStructure& structure,
              std::span<const VariableSpec> specs, std::string_view child,
              double pseudocount = 0.0);

// Discrete Bayesian network: structure, per-variable state spaces, root
// priors (uniform unless overridden), and one CPT per non-root node.
// Immutable once populated, so instances can be shared across threads.
class BayesNet {
public:
    BayesNet(NetworkStructure structure, std::vector<VariableSpec> specs);

    const NetworkStructure& structure() const noexcept { return structure_; }
    std::span<const VariableSpec> specs() const noexcept { return specs_; }
    const VariableSpec& spec(std::string_view variable) const;

    void set_prior(std::string_view variable, std::vector<double> distribution);
    const std::vector<double>& prior(std::string_view variable) const;

    void set_cpt(Cpt cpt);
    const Cpt& cpt(std::string_view child) const;

    // Probability of one complete assignment: product of root priors and
    // CPT entries along the factorization of the DAG.
    double joint_probability(const Assignment& assignment) const;

    // Exact posterior of every variable given the evidence, by enumeration
    // of all joint assignments consistent with it. Evidence variables come
    // back as point masses. Throws ImpossibleEvidenceError when the evidence
    // has probability zero under the model.
    Posterior infer(const Evidence& evidence) const;

private:
    NetworkStructure structure_;
    std::vector<VariableSpec> specs_;
    std::map<std::string, std::vector<double>, std::less<>> priors_;
    std::map<std::string, Cpt, std::less<>> cpts_;
};

}  // namespace berbn
