#pragma once

#include "nikulin/lattice.hpp"

#include <string>
#include <vector>

namespace nikulin::catalog {

// Parameter violations (wrong congruence class, nonpositive d, ...).
struct ParameterError : DomainError {
    using DomainError::DomainError;
};

Lattice U();
Lattice U_scaled(long n);
Lattice diag(long n);  // <n>; odd n gives an odd lattice

IntMatrix e8_minus2_gram();  // b-basis
Lattice E8m2();
Lattice E8m1();
Lattice E7m1();
Lattice D4m1();
Lattice Dm1(int n);  // D_n(-1), n >= 4
Lattice A2m1();
Lattice nikulin_N();  // basis r1..r7, n

Lattice K(long d);  // d odd; even iff d = 3 mod 4
Lattice H(long d);  // d odd; even iff d = 1 mod 4

Lattice Lambda(long d);  // <2d> + E8(-2), labels h, b1..b8
// index-2 overlattice of Lambda(d); basis g = (h + b1 [+ b3])/2, b1..b8
Lattice LambdaTilde(long d);
// glue class of LambdaTilde(d) in Lambda(d) coordinates
RatVector lambda_tilde_glue(long d);

Lattice LK3();
Lattice L();    // U^3 + E8(-1) e + E8(-1) f + <-2> delta, rank 23
Lattice H2Y();  // U(2)^3 + E8(-1) + <-2> + <-2>, rank 16

Lattice S_NS(long d);  // <2d> + <-2>^7, labels t, n1..n7
Lattice Z_NS(long d);  // overlattice by (t + sum n)/2, d = 3 mod 4; basis z, n1..n7

struct SigmaDelta {
    IntVector sigma, delta;
};
SigmaDelta sigma_delta_classes();

// name vocabulary shared with the CLI
std::vector<std::string> names();
Lattice make(const std::string& name, long param = 0);
bool takes_parameter(const std::string& name);

}  // namespace nikulin::catalog
