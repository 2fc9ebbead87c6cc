#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nalg/algebra.hpp"
#include "nalg/catalog.hpp"
#include "nalg/checks.hpp"

namespace nalg {

/// Subspace of d x d operators; coordinates are row-major entries, so the
/// operator with matrix M has coordinate vector M.flatten().
struct OperatorSpace {
  std::size_t dim_ambient = 0;
  SubspaceBasis basis;

  std::size_t dim() const { return basis.dim(); }
  std::vector<LinearOperator> matrices() const;
  bool contains(const LinearOperator& m) const { return basis.member(m.flatten()); }
};

/// All D with D[b_i1..b_in] = sum_s [.., D b_is, ..] for every basis tuple.
OperatorSpace derivation_algebra(const NAryAlgebra& alg);
/// Span of D_{x,y} over pairs of basis tuples.
OperatorSpace inner_derivation_space(const NAryAlgebra& alg);
/// Leibniz rule for D on all basis tuples; witness arguments are {tuple}.
Verdict is_derivation(const NAryAlgebra& alg, const LinearOperator& d);
/// span{e_ij - e_ji : i < j}.
OperatorSpace skew_space(const FieldSpec& f, std::size_t d);

enum class SpaceRelation { equal, a_in_b, b_in_a, incomparable };
SpaceRelation compare(const OperatorSpace& a, const OperatorSpace& b);
const char* to_string(SpaceRelation r);

/// Pairwise commutators of basis operators stay in the space.
bool is_lie_closed(const OperatorSpace& s);

struct D2Decomposition {
  LinearOperator phi;
  LinearOperator psi;
};

struct D2Result {
  std::optional<D2Decomposition> parts;
  std::string failure;
};

/// D = Phi + Psi with Psi(x) = x D(1), D(1) skew and Phi a derivation of the
/// binary product. D must be a derivation of [x,y,z] = (x conj(y)) z.
D2Result d2_decompose(const InvolutiveAlgebra& h, const LinearOperator& d);

}  // namespace nalg
