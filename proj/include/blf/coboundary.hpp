#pragma once

#include <string_view>

#include "blf/calc4.hpp"
#include "blf/models.hpp"
#include "blf/mvfield.hpp"

namespace blf {

/// Which formula computes d^k.
///  - schouten: [pi, X] from the generic bracket (any model, any k).
///  - jacobian_general: closed forms for a Jacobian structure with polynomial mu.
///  - jacobian_const_quarter: closed forms for a Jacobian structure with mu = -1/4.
///  - fold_direct: the componentwise formulas of the fold model.
enum class CoboundaryKind { schouten, jacobian_general, jacobian_const_quarter, fold_direct };

std::string_view kind_name(CoboundaryKind kind);
CoboundaryKind parse_kind(std::string_view name);

/// The closed-form kind natural for a model: fold_direct, jacobian_general or schouten.
CoboundaryKind compact_kind(const PoissonModel& model);

/// Throws UsageError when `kind` cannot be applied to `model`.
void check_kind(CoboundaryKind kind, const PoissonModel& model);

/// The Jacobian closed forms produce -[pi, X] in the bracket convention of the
/// schouten oracle; this factor carries them over.
inline constexpr int kCompactOrientation = -1;

/// d(X) for X of any degree k; the closed-form kinds accept k in {0, 1, 2, 3}.
MVec coboundary(CoboundaryKind kind, const PoissonModel& model, const MVec& x);

/// Closed-form d^k of a Jacobian structure. Requires X.k() == k.
MVec d_jacobian(CoboundaryKind kind, const PoissonModel& model, int k, const MVec& x);

/// The second closed form of d^3 for mu = -1/4, through a divergence.
MVec d3_quarter_divergence(const PoissonModel& model, const MVec& z);

/// The operator tuple (-X_1, ..., -X_4) with X_i = sum_j {x_i, x_j} d_j.
calc4::DerivationTuple hamiltonian_operators(const PoissonModel& model);

/// X_i(f) for the fold model, with X_i = pi#(dx_i) (X_0 = 0).
Poly fold_hamiltonian(int i, const Poly& f);

/// Closed-form d^k of the fold model.
MVec d_fold(int k, const MVec& x);

/// Pieces of d^1 and d^2 of the fold model:
///  d11 acts on f0 (output d_0i slots), d12 on f1..f3 (output d_ij slots, i, j >= 1),
///  d21 on f_0i (output d_0ij slots), d22 on f_ij with i, j >= 1 (output d_123).
enum class FoldPart { d11, d12, d21, d22 };
MVec d_fold_split(FoldPart part, const MVec& x);

/// X ^ d_0: identifies transverse multivectors with their circle extensions.
MVec wedge_circle(const MVec& x);

}  // namespace blf
