#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polar/field.hpp"
#include "polar/matrix.hpp"

namespace polar {

/// Coordinate vector of a bilinear space, packed into a machine word:
/// coordinate i occupies bits [h*i, h*(i+1)). Usable directly as an index
/// into full-space lookup tables.
using pvec = std::uint32_t;

/// Even-dimensional coordinate space over GF(2^h) carrying a nondegenerate
/// alternating Gram matrix. Immutable.
class Space {
public:
  Space(Field field, int dim, Mat gram);

  /// Standard space: gram F = E + E^T with E the upper-right identity block.
  static Space standard(const Field& field, int m);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  const Mat& gram() const { return gram_; }
  bool is_standard() const { return standard_; }

  int label_bits() const { return field_.degree() * dim_; }
  std::uint64_t point_count() const { return std::uint64_t(1) << label_bits(); }

  felem coord(pvec u, int i) const {
    return felem((u >> (field_.degree() * i)) & (field_.order() - 1));
  }
  pvec from_coords(std::span<const felem> c) const;
  std::vector<felem> coords(pvec u) const;

  /// Symplectic pairing u * gram * v^T.
  felem symp(pvec u, pvec v) const;

  /// Coordinate tuple of field-element bit strings, e.g. "(10,01)".
  std::string render(pvec u) const;

  bool operator==(const Space& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && gram_ == o.gram_;
  }

private:
  Field field_;
  int dim_;
  Mat gram_;
  bool standard_;
};

/// Quadratic form on a Space, stored as an upper-triangular coefficient
/// matrix M with value u M u^T. Always a member of Omega: the linearization
/// equals the space's Gram pairing (enforced at construction). On the
/// standard space it may carry the canonical parameter a with
/// theta_a(u) = theta_0(u) + <a,u>^2.
class QuadraticForm {
public:
  /// theta_0 on the standard space (u E u^T).
  static QuadraticForm theta0(const Space& s);

  /// theta_a on the standard space.
  static QuadraticForm theta(const Space& s, pvec a);

  /// General form from an upper-triangular coefficient matrix; the
  /// off-diagonal part must match the space's gram.
  static QuadraticForm from_coeff(const Space& s, Mat coeff);

  const Space& space() const { return space_; }
  const Mat& coeff() const { return coeff_; }
  const std::optional<pvec>& param() const { return param_; }

  felem eval(pvec u) const;

  /// Full value table indexed by packed vector.
  std::vector<felem> value_table() const;

  /// Number of vectors u with eval(u) == 0.
  std::uint64_t zero_count() const;

  /// +1 (hyperbolic) or -1 (elliptic). Standard-space parameterized forms
  /// use the trace criterion; general forms classify by zero counting.
  int type() const;

  bool operator==(const QuadraticForm& o) const {
    return space_ == o.space_ && coeff_ == o.coeff_;
  }

private:
  QuadraticForm(Space s, Mat coeff, std::optional<pvec> param);

  Space space_;
  Mat coeff_;
  std::optional<pvec> param_;
};

/// Recover a with theta_a == table on the standard space s, solving
/// <a,e_i> = sqrt(table(e_i)) and verifying against the whole table.
/// Throws std::domain_error when the table is not a member of Omega.
pvec identify_form_parameter(const Space& s, std::span<const felem> table);

/// Tangency of the quadrics of theta_a and theta_b: theta_a(a+b) == 0.
bool forms_tangent(const Space& s, pvec a, pvec b);

/// GF(2)-form Tr(theta(.)) on the same packed labels, with the lifted
/// Gram matrix Tr(<omega^t e_i, omega^s e_j>). Coordinates interleave per
/// original coordinate, so packed labels are shared bit patterns.
QuadraticForm trace_lift(const QuadraticForm& theta);

/// Change-of-basis B with B * gram * B^T equal to the standard block
/// matrix F. Deterministic (pivot selection by lowest index).
Mat symplectic_basis(const Space& s);

}  // namespace polar
