#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "abptk/abp.hpp"
#include "abptk/polynomial.hpp"
#include "abptk/rational.hpp"

namespace abptk {

/// Ground-truth metadata attached to a named polynomial family. Each claim
/// carries a provenance tag: "computed" values are recomputed and
/// cross-checked by the test suite, "paper-metadata" values are sourced
/// from the literature and consumed as trusted inputs by the bound
/// calculators.
struct FamilyDescriptor {
    std::string name;  // power_sum | P | S | S_hat
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t num_vars = 0;

    std::size_t codim_sing = 0;  // codim of empty locus = num_vars, by convention
    bool sing_empty = false;
    std::vector<std::size_t> sing_vars;  // Sing = Z(x_i : i in sing_vars) when nonempty
    std::string sing_provenance;         // computed | paper-metadata

    std::optional<std::size_t> degree_divisor_s;          // every codim-c subvariety degree divisible by s
    std::optional<std::size_t> subvariety_codim_threshold_c;
    std::optional<std::size_t> known_sr_upper;
    std::optional<std::size_t> known_sr_exact;
};

Polynomial<Rational> make_power_sum(std::size_t n, std::size_t d);
Polynomial<Rational> make_P(std::size_t n, std::size_t d);
Polynomial<Rational> make_S(std::size_t n, std::size_t d);

/// S_{n,d} with x_0 set to zero. The customary indexing for this family is
/// x_1..x_{n+1}; internally it is 0-based (x_k maps to x_{k-1}).
Polynomial<Rational> make_S_hat(std::size_t n, std::size_t d);

/// The two-variable, four-layer, size-4 program with seven labeled edges.
Abp<Rational> figure1_abp();

FamilyDescriptor descriptor_power_sum(std::size_t n, std::size_t d);
FamilyDescriptor descriptor_P(std::size_t n, std::size_t d);
FamilyDescriptor descriptor_S(std::size_t n, std::size_t d);
FamilyDescriptor descriptor_S_hat(std::size_t n, std::size_t d);

}  // namespace abptk
