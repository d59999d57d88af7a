#pragma once

#include "ic/errors.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ic {

// Literal: variable index 1..alpha, positive or negated.
struct Literal {
    int var = 0;
    bool positive = true;

    bool operator==(const Literal& o) const { return var == o.var && positive == o.positive; }
};

using Clause = std::vector<Literal>;

// 3-SAT instance: clauses of one to three distinct, non-complementary
// literals over variables 1..alpha.
struct CnfInstance {
    int alpha = 0;
    std::vector<Clause> clauses;

    CnfInstance(int alpha_, std::vector<Clause> clauses_);

    int beta() const { return static_cast<int>(clauses.size()); }
};

// Total truth assignment, indexed by variable 1..alpha.
struct Assignment {
    std::vector<bool> value; // value[0] unused

    explicit Assignment(int alpha) : value(alpha + 1, false) {}

    bool get(int var) const { return value.at(var); }
    void set(int var, bool b) { value.at(var) = b; }
    int alpha() const { return static_cast<int>(value.size()) - 1; }
};

bool satisfies(const CnfInstance& inst, const Assignment& asg);

/// First satisfying assignment in lexicographic order (all-false first),
/// or absent. Rejects alpha > 24.
std::optional<Assignment> brute_force_sat(const CnfInstance& inst);

/// DIMACS CNF, clauses capped at three literals.
CnfInstance parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfInstance& inst);

/// FNV-1a hash of the canonical DIMACS text, as a hex digest.
std::string cnf_digest(const CnfInstance& inst);

/// Every admissible clause over alpha variables (sizes 1..3), in a
/// fixed deterministic order. Used for exhaustive desk-scale sweeps.
std::vector<Clause> enumerate_clauses(int alpha);

/// Seeded random instance with exactly alpha variables and beta clauses.
CnfInstance sample_instance(int alpha, int beta, std::mt19937_64& rng);

} // namespace ic
