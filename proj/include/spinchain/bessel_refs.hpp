#pragma once

namespace spinchain {

// Closed-form site coefficients for the analytically solvable parameter
// points of the uniform XX model (J = 1 units, h0 applied to the qubit).

double bessel_j(int order, double x);

// h = h0, J0 = J:  Pi_0 = J1(2t) cos(2ht)/t,  Delta_0 = -J1(2t) sin(2ht)/t.
double pi0_equal_fields(double t, double h);
double delta0_equal_fields(double t, double h);

// Markov point (delta h = 1/2, i.e. h = 1/2, h0 = 0, J0 = J), any site n.
double pi_n_markov(int n, double t);
double delta_n_markov(int n, double t);

// J0 = sqrt(2) J, h = h0 = 0:  Pi_0 = J0(2t), Delta_0 = 0.
double pi0_sqrt2(double t);

// f(t) at the Markov point and at equal fields.
double f_markov(double t);
double f_equal_fields(double t);

}  // namespace spinchain
