#pragma once

#include "ckasym/kernels.hpp"

namespace ckasym {

enum class AlignmentKind { Hsic, Cka, NonCenteredAlignment };

struct AlignmentValue {
  double value = 0.0;
  AlignmentKind kind = AlignmentKind::Hsic;
  KernelSpec kernel_k;
  KernelSpec kernel_l;
  std::size_t n = 0;
};

// tr(A B) as a double sum over entries, O(N^2), never by forming the product.
// The summation order is symmetric in the two arguments, so
// trace_product(a, b) == trace_product(b, a) bit for bit.
double trace_product(const Matrix& a, const Matrix& b);

// HSIC(K, L) = tr(Kbar Lbar) / (N-1)^2 over mean-centered Gram matrices.
// Both inputs must be centered the same way.
AlignmentValue hsic(const GramMatrix& kbar, const GramMatrix& lbar);

// CKA(K, L) = |HSIC(K, L)| / sqrt(HSIC(K, K) HSIC(L, L)).
//
// The numerator magnitude makes the value invariant to a negative rescaling
// of either centered Gram matrix. For positive-definite kernels the cross
// HSIC is nonnegative and the magnitude changes nothing; for the quadratic
// (euclidean) kernel, whose centered Gram matrix is -2 times the centered
// linear one, it makes cka agree with the linear value instead of its
// mirror image.
AlignmentValue cka(const GramMatrix& k, const GramMatrix& l);

// tr(K L) / sqrt(tr(K K) tr(L L)) over *uncentered* Gram matrices. This is
// the alignment that fails to converge to the linear value at large
// bandwidth; it exists as the negative control.
AlignmentValue non_centered_alignment(const GramMatrix& k, const GramMatrix& l);

}  // namespace ckasym
