#ifndef OPDC_CMV_HPP
#define OPDC_CMV_HPP

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "opdc/rational.hpp"
#include "opdc/reflection.hpp"

namespace opdc {

/// Finite truncation of a tridiagonal operator. interior_margin counts
/// trailing rows/columns whose entries are contaminated by truncation
/// when the matrix enters products; identities are asserted on the
/// leading (n - margin) x (n - margin) block only.
struct TridiagonalMatrix {
    int n = 0;
    Eigen::VectorXd diag;
    Eigen::VectorXd super;
    Eigen::VectorXd sub;
    int interior_margin = 0;

    Eigen::MatrixXd dense() const;
};

/// N x N truncation of one block-diagonal involution factor. Incomplete
/// trailing 2x2 blocks are completed by a 1x1 identity pad so that
/// X^2 = I holds exactly at every truncation size; the pad only touches
/// the last row/column, which the interior margins exclude anyway.
struct BlockReflectionMatrix {
    enum class Kind { L, M };
    Kind kind = Kind::L;
    int n = 0;
    Eigen::MatrixXd mat;
};

/// L uses a_0, a_2, ...; M has a leading scalar block 1 and uses a_1, a_3, ...
/// Blocks are [[a_k, r_k], [eps_k r_k, -a_k]] with r_k = sqrt(|1 - a_k^2|).
/// Throws DegenerateReflection if some needed |a_k| = 1.
std::pair<BlockReflectionMatrix, BlockReflectionMatrix> build_lm(const ReflectionSequence& seq, int n);

/// Five-diagonal CMV matrix U = L M.
Eigen::MatrixXd build_cmv(const ReflectionSequence& seq, int n);

/// Exact three-term data of the pencil K(lambda) = L + lambda M:
///   b_n = a_n - lambda a_{n-1} (n even), lambda a_n - a_{n-1} (n odd),
///   u_n = lambda^2 (1 - a_{n-1}^2) (n even), 1 - a_{n-1}^2 (n odd),
/// with a_{-1} = -1 forcing u_0 = 0.
struct PencilRecurrence {
    std::vector<Rational> b;
    std::vector<Rational> u;
    Rational lambda;
};

PencilRecurrence pencil_recurrence(const ReflectionSequence& seq, const Rational& lambda, int n);

/// K(lambda) - x I as a tridiagonal truncation, entrywise equal to the
/// padded L + lambda M - x I. Off-diagonals are (r_0, lambda r_1, r_2, ...)
/// above and the same times eps_k below.
TridiagonalMatrix build_pencil_matrix(const ReflectionSequence& seq, double lambda, double x, int n);

/// Exact mirror of the pencil's off-diagonal structure: sub_k * super_k
/// of K(lambda), which is rational (eps_k rsq_k resp. lambda^2 eps_k rsq_k)
/// and must reproduce u_{k+1} of pencil_recurrence exactly.
std::vector<Rational> pencil_offdiag_products(const ReflectionSequence& seq, const Rational& lambda, int n);

} // namespace opdc

#endif
