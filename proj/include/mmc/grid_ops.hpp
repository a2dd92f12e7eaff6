/// @file grid_ops.hpp
/// @brief Difference/average operators, divergence, Laplacian, inner products and
///        norms on the periodic staggered grid. OpenMP-parallel kernels.
///
/// Stencils (half-index notation, uniform spacing h, periodic wrap):
///   D_x u_{i+1/2,j} = (u_{i+1,j} - u_{i,j}) / h        cell -> x-face
///   A_x u_{i+1/2,j} = (u_{i+1,j} + u_{i,j}) / 2        cell -> x-face
///   d_x f_{i,j}     = (f_{i+1/2,j} - f_{i-1/2,j}) / h  x-face -> cell
///   a_x f_{i,j}     = (f_{i+1/2,j} + f_{i-1/2,j}) / 2  x-face -> cell
/// and the y analogues. gradient = (D_x, D_y), divergence = d_x + d_y,
/// laplacian = divergence(gradient(.)) on the same floating-point path.
///
/// All reductions use a fixed order (serial row sums, pairwise across rows),
/// so results are bit-identical for any thread count. The serial reference
/// implementations live in grid_ops_serial.hpp.

#pragma once

#include "mmc/grid.hpp"

namespace mmc {

// cell -> face, writing one component of `out`
void diff_x(const CellField& u, EdgeField& out);
void diff_y(const CellField& u, EdgeField& out);
void avg_x(const CellField& u, EdgeField& out);
void avg_y(const CellField& u, EdgeField& out);

// face -> cell
void diff_back_x(const EdgeField& f, CellField& out); // d_x of the x component
void diff_back_y(const EdgeField& f, CellField& out); // d_y of the y component
void avg_back_x(const EdgeField& f, CellField& out);  // a_x of the x component
void avg_back_y(const EdgeField& f, CellField& out);  // a_y of the y component

void gradient(const CellField& u, EdgeField& out);
void divergence(const EdgeField& f, CellField& out);
void laplacian(const CellField& u, CellField& out);

/// d_x(coef^x f^x) + d_y(coef^y f^y). With `require_positive_coef`, throws
/// std::domain_error naming the first non-positive face.
void weighted_divergence(const EdgeField& coef, const EdgeField& f, CellField& out,
                         bool require_positive_coef = false);

// value-returning conveniences
EdgeField gradient(const CellField& u);
CellField divergence(const EdgeField& f);
CellField laplacian(const CellField& u);
CellField weighted_divergence(const EdgeField& coef, const EdgeField& f,
                              bool require_positive_coef = false);

/// <u,v> = h^2 sum u_ij v_ij
double inner_cell(const CellField& u, const CellField& v);
/// [f,g] = <a_x(f^x g^x),1> + <a_y(f^y g^y),1>
double inner_edge(const EdgeField& f, const EdgeField& g);

double mean(const CellField& u);
double norm_l2(const CellField& u);
double norm_lp(const CellField& u, double p); // p >= 1, else std::invalid_argument
double norm_inf(const CellField& u);
double norm_grad_l2(const CellField& u); // sqrt([grad u, grad u])
double norm_h1(const CellField& u);      // sqrt(l2^2 + grad_l2^2)

double min_value(const CellField& u);
double max_value(const CellField& u);

// element-wise helpers used throughout the solver stack
void fill(CellField& u, double value);
void copy_into(const CellField& src, CellField& dst);
void add_scaled(CellField& y, double a, const CellField& x); // y += a*x
void scale(CellField& u, double a);
void shift(CellField& u, double a); // u += a
/// out = a*x + b*y
void linear_comb(double a, const CellField& x, double b, const CellField& y, CellField& out);
/// out = a*x + b*y + c*z
void linear_comb(double a, const CellField& x, double b, const CellField& y, double c,
                 const CellField& z, CellField& out);
void subtract_mean(CellField& u); // u -= mean(u)

namespace detail {
/// Deterministic pairwise sum, independent of thread count.
double pairwise_sum(const double* data, std::size_t count);
} // namespace detail

} // namespace mmc
