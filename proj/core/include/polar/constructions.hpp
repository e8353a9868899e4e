#pragma once

#include "polar/forms.hpp"
#include "polar/graph.hpp"

namespace polar {

/// theta_0 on the standard space.
QuadraticForm hyperbolic_form(const Space& s);

/// theta_a for the lexicographically first a with trace(theta_0(a)) = 1.
QuadraticForm elliptic_form(const Space& s);

/// NO^eps(2m,2): vertices {a | theta(a)=1}, adjacency <a,b>=0.
/// eps is the type of theta. Accepts any GF(2) space, standard or lifted.
Graph build_no_even(const QuadraticForm& theta);

/// NO^eps(2m+1,q): vertices {a | Tr(theta(a))=1}, adjacency
/// theta(a+b) = <a,b>^2. eps is the opposite of theta's type.
Graph build_no_odd(const QuadraticForm& theta);

/// The W^eps variant: vertices {a | Tr(theta_0(a)) = 0 resp. 1} on the
/// standard space, adjacency theta_a(a+b)=0.
Graph build_no_odd_w(int sign, int m, int q);

/// Gamma(O^eps(2m,2)): nonzero singular points, adjacency <a,b>=0.
Graph build_gamma_o(const QuadraticForm& theta);

/// Sigma_2m: all of F_2^{2m}, adjacency <a,b>=0. Not regular.
Graph build_sigma(int m);

}  // namespace polar
