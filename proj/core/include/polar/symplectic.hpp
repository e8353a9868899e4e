#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polar/errors.hpp"
#include "polar/forms.hpp"

namespace polar {

using bigint = boost::multiprecision::cpp_int;

/// Matrix A with A * gram * A^T == gram, acting on packed row vectors.
class SympMatrix {
public:
  SympMatrix(Space space, Mat entries);

  static SympMatrix identity(const Space& s);

  const Space& space() const { return space_; }
  const Mat& entries() const { return entries_; }

  pvec apply(pvec u) const;
  SympMatrix compose(const SympMatrix& o) const;  // apply this, then o
  SympMatrix inverse() const;

  /// Packed byte key for hashing during group enumeration.
  std::string key() const;

  bool operator==(const SympMatrix& o) const {
    return space_ == o.space_ && entries_ == o.entries_;
  }

private:
  SympMatrix(Space space, Mat entries, bool checked);

  Space space_;
  Mat entries_;
};

/// Symplectic transvection T_a : u -> u + <u,a>a.
SympMatrix transvection(const Space& s, pvec a);

/// T_a for every nonzero a.
std::vector<SympMatrix> all_transvections(const Space& s);

/// Breadth-first closure of the generated subgroup; throws resource_error
/// when more than cap elements appear.
std::vector<SympMatrix> generate_group(std::span<const SympMatrix> gens, std::size_t cap);

enum class GroupFamily { sp, o_plus, o_minus };

/// Exact group order from the closed formulas (Sp via O(2m+1,q)).
bigint group_order(GroupFamily family, int m, int q);

/// Affine representation of the action on form parameters:
/// theta_a^A = theta_{a*A + shift} with shift the parameter of theta_0^A.
struct FormAction {
  SympMatrix linear;
  pvec shift;

  pvec apply(pvec a) const { return linear.apply(a) ^ shift; }
};

FormAction form_action(const SympMatrix& a);
std::vector<FormAction> form_actions(std::span<const SympMatrix> elements);

/// Parameter of theta_a^A.
pvec act_on_form(pvec a, const SympMatrix& mat);

/// gamma with theta_a^{T_{gamma(a+b)}} = theta_b, when the trace criterion
/// allows one; verified against value tables before returning. Ties broken
/// by lexicographic minimality of gamma.
std::optional<felem> find_transvection_equiv(const Space& s, pvec a, pvec b);

/// Orbit partition of a domain of packed values under a generator set,
/// each orbit sorted, orbits ordered by smallest element.
template <class Apply>
std::vector<std::vector<pvec>> orbit_partition(const std::vector<pvec>& domain,
                                               const std::vector<Apply>& gens) {
  std::vector<std::vector<pvec>> orbits;
  std::vector<pvec> sorted = domain;
  std::sort(sorted.begin(), sorted.end());
  std::vector<bool> seen;
  pvec max = sorted.empty() ? 0 : sorted.back();
  seen.assign(std::size_t(max) + 1, false);
  for (pvec seed : sorted) {
    if (seen[seed]) continue;
    std::vector<pvec> orbit{seed};
    seen[seed] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& g : gens) {
        pvec img = g.apply(orbit[head]);
        if (img > max || !seen[img]) {
          if (img > max) throw std::logic_error("orbit left the domain");
          seen[img] = true;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

/// Orbits of all q^{2m} form parameters under the given generators.
std::vector<std::vector<pvec>> orbits_on_forms(std::span<const SympMatrix> gens);

/// Indices of elements fixing the form parameter a.
std::vector<std::size_t> stabilizer_of_form(pvec a, std::span<const FormAction> actions);

/// Orbit partition of the nonzero vectors under the linear action.
std::vector<std::vector<pvec>> vector_orbits(const Space& s, std::span<const SympMatrix> elements);

/// Orbit partition of all form parameters under a subset of actions.
std::vector<std::vector<pvec>> form_orbits_under(const Space& s, std::span<const FormAction> actions);

/// True iff the point stabilizer of domain[0] is transitive on the rest.
bool check_2transitivity(std::span<const FormAction> elements, std::span<const pvec> domain);

/// H_2 = { a -> a*A + b_A : A in Sp }, the second complement of the
/// translation subgroup. Verifies closure and that the only translation
/// contained is the identity.
std::vector<FormAction> complement_h2(std::span<const SympMatrix> sp_elements);

}  // namespace polar
