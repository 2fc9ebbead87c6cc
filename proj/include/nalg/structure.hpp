#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nalg/algebra.hpp"

namespace nalg {

/// Every operator v -> [.., v at slot s, ..] with the other slots filled by
/// basis elements, for every slot s. Spans all multiplication operators.
std::vector<LinearOperator> slot_multiplication_operators(const NAryAlgebra& alg);
/// slot_multiplication_operators with duplicates and dependent ones removed.
std::vector<LinearOperator> independent_slot_operators(const NAryAlgebra& alg);

/// Smallest subspace containing the generators and stable under every slot operator.
SubspaceBasis ideal_closure(const NAryAlgebra& alg, const std::vector<Element>& generators);
bool is_ideal(const NAryAlgebra& alg, const SubspaceBasis& s);

enum class SimplicityStatus { simple, not_simple, undetermined };
enum class SimplicityCertificate { burnside, ideal_witness, abelian, none };

struct SimplicityReport {
  SimplicityStatus status = SimplicityStatus::undetermined;
  std::optional<SubspaceBasis> ideal;
  SimplicityCertificate certificate = SimplicityCertificate::none;
  std::size_t multiplication_algebra_dim = 0;
};

/// Zero product -> abelian; then ideal closures of a fixed candidate list
/// (basis vectors, b_i + b_j, b_i - b_j, kernel vectors of slot operators and
/// of their pairwise commutators); then the Burnside test.
SimplicityReport simplicity(const NAryAlgebra& alg);
const char* to_string(SimplicityStatus s);
const char* to_string(SimplicityCertificate c);

/// Smallest product-closed subspace containing the generators, and the
/// induced algebra in that subspace's canonical basis.
std::pair<SubspaceBasis, NAryAlgebra> subalgebra_closure(const NAryAlgebra& alg, const std::vector<Element>& generators);
/// Induced algebra on a product-closed subspace, in its canonical basis.
NAryAlgebra induced_algebra(const NAryAlgebra& alg, const SubspaceBasis& s, std::vector<std::string> labels = {});

/// (n-1)-ary algebra with `a` frozen at the given 1-based slot.
NAryAlgebra reduce(const NAryAlgebra& alg, std::size_t position, const Element& a);
/// Sum of the product over all argument permutations.
NAryAlgebra symmetrize(const NAryAlgebra& alg);
NAryAlgebra scale(const NAryAlgebra& alg, const Scalar& c);
/// Same field, arity, dimension and structure constants.
bool algebras_equal(const NAryAlgebra& a, const NAryAlgebra& b);

}  // namespace nalg
