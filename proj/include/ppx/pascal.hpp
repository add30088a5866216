#pragma once

#include <vector>

#include "ppx/integer.hpp"
#include "ppx/intpoly.hpp"
#include "ppx/matrix.hpp"
#include "ppx/quotient.hpp"
#include "ppx/report.hpp"

// Pascal matrices and their factorizations into unipotent factors
// I + c_k H_{n,k}, in the classical, m-fold and q-analog settings, together
// with their specializations at primitive roots of unity.

namespace ppx {

using IntMatrix = SquareMatrix<Integer>;
using PolyMatrix = SquareMatrix<IntPoly>;
using QuotientMatrix = SquareMatrix<QuotientElem>;

/// (C(i, j))
IntMatrix pascal_matrix(std::size_t n);
/// Subdiagonal generator: entry (i, i-1) = i.
IntMatrix h_matrix(std::size_t n);
/// H_{n,k} = H_n^k / k!: entry (i, i-k) = C(i, k).
IntMatrix h_nk(std::size_t n, std::size_t k);

/// Recovers c_1..c_{n-1} from P_n = prod_k (I + c_k H_{n,k}) by forcing the
/// first column of the partial product to ones. Throws TheoremViolation if
/// the product does not reproduce P_n or the coefficients disagree with c_seq.
std::vector<Integer> factor_pascal(std::size_t n);

/// H^{(m)}_{n,k}: entry (i, i - mk) = C(floor(i/m), k).
IntMatrix h_m_nk(std::size_t n, std::size_t m, std::size_t k);
/// P^{(m)}_n = sum_k H^{(m)}_{n,k}.
IntMatrix pascal_m(std::size_t n, std::size_t m);

/// Recovers c_1..c_K (K = floor((n-1)/m)) from P^{(m)}_n = prod_k (I + c_k H^{(m)}_{n,k}).
std::vector<Integer> factor_pascal_m(std::size_t n, std::size_t m);

/// Gaussian binomials ([i choose j]_q).
PolyMatrix q_pascal(std::size_t n);
/// Entry (i, i-1) = [i].
PolyMatrix q_h(std::size_t n);
/// H_{n,k}(q): entry (i, i-k) = [i choose k]_q.
PolyMatrix q_h_nk(std::size_t n, std::size_t k);
/// Recovers c_1(q)..c_{n-1}(q) from P_n(q) = prod_k (I + c_k(q) H_{n,k}(q)).
std::vector<IntPoly> factor_q_pascal(std::size_t n);

/// Entrywise reduction modulo Φ_m.
QuotientMatrix at_root_of_unity(const PolyMatrix& m, const std::shared_ptr<const IntPoly>& phi);

/// Exponential identity, nilpotency and factorization of P_n for 2 <= n <= max_n.
Report check_pascal(std::size_t max_n);
/// m-fold identities for 1 <= n <= max_n, 1 <= m <= max_m.
Report check_pascal_m(std::size_t max_n, std::size_t max_m);
/// q-analog identities and factorization for 2 <= n <= max_n.
Report check_q_pascal(std::size_t max_n);
/// c_n(q) mod Φ_m is c_{n/m} if m | n and 0 otherwise, m <= n <= max_n.
Report theorem_4_3_check(std::size_t max_n, std::size_t m);
/// The truncated divided-power sum at ζ_m equals prod_{j<m} (I + c_j(ζ_m) H_{n,j}(ζ_m)).
Report check_eq28(std::size_t n, std::size_t m);
/// S^{-1} P_n(ζ_m) = exp(H^{(m)}_n) = prod_k (I + c_k H_{n,km}(ζ_m)), with its
/// supporting identities.
Report check_eq26(std::size_t n, std::size_t m);
/// Both of the above.
Report root_of_unity_matrix_check(std::size_t n, std::size_t m);
/// c_n ≡ 0 (mod p) for gcd(n, p) = 1 and c_{pk} ≡ c_k (mod p), p < n <= max_n.
Report carlitz_check(unsigned long p, unsigned long max_n);

} // namespace ppx
