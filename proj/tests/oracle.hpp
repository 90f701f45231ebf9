#pragma once

// Brute-force reference implementations, deliberately literal and slow.
// Test-support only: this component is never linked into the production
// library or the CLI. Everything here refuses n > 10.

#include "bfa/boolfunc.hpp"
#include "bfa/vbf.hpp"

namespace bfa::oracle {

// W_f(a) by the defining double loop, O(4^n).
WalshSpectrum walsh_naive(const BoolFunc& f);

// delta_F(a, b) by counting solutions of F(x+a)+F(x) = b.
Ddt ddt_naive(const VectorialFunc& F);

// bent iff every nonzero derivative is balanced.
bool bent_by_derivatives(const BoolFunc& f);

// V(f) by materializing each derivative and checking constancy.
LinearSpace linear_space_naive(const BoolFunc& f);

// APN iff no derivative equation D_a F = b has more than two solutions.
bool apn_by_definition(const VectorialFunc& F);

// w(f) by evaluating every point.
uint32_t weight_by_evaluation(const BoolFunc& f);

}  // namespace bfa::oracle
