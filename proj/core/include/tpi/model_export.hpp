#pragma once

#include <iosfwd>

#include "tpi/ilp.hpp"

namespace tpi {

/// CPLEX-style LP text. Variables are named P_k (paths, 1-based) and A_t_r
/// (associations, 1-based terminal/remaining indices); rows v_t_h, u_c, w_r.
/// Trivial all-zero rows are kept in the problem for index stability but
/// omitted from the text.
void write_lp(const IlpProblem& problem, std::ostream& os);

/// Fixed-format MPS with the same naming; binaries are declared via INTORG
/// markers and BV bounds.
void write_mps(const IlpProblem& problem, std::ostream& os);

/// Shortest decimal representation that round-trips the double value of r.
std::string format_coefficient(const Rational& r);

}  // namespace tpi
