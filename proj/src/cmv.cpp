#include "opdc/cmv.hpp"

#include <cmath>

#include "opdc/errors.hpp"

namespace opdc {

namespace {

double reflection_r(const ReflectionSequence& seq, int k) {
    Rational rsq = seq.rsq(k);
    if (rsq.is_zero())
        throw DegenerateReflection("|a_" + std::to_string(k) + "| = 1, reflection block degenerates");
    return std::sqrt(rsq.to_double());
}

// Places 2x2 blocks [[a_k, r_k], [eps_k r_k, -a_k]] starting at row
// `start` with parameter indices start, start+2, ...; pads the leading
// and trailing uncovered rows with 1.
Eigen::MatrixXd involution_factor(const ReflectionSequence& seq, int n, int start) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < start; ++i) m(i, i) = 1.0;
    int row = start;
    for (; row + 1 < n; row += 2) {
        int k = row;
        double a = seq.a(k).to_double();
        double r = reflection_r(seq, k);
        m(row, row) = a;
        m(row, row + 1) = r;
        m(row + 1, row) = seq.epsilon(k) * r;
        m(row + 1, row + 1) = -a + 0.0; // keep -0.0 out of dumps
    }
    if (row < n) m(row, row) = 1.0;
    return m;
}

} // namespace

Eigen::MatrixXd TridiagonalMatrix::dense() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = diag(i);
    for (int i = 0; i + 1 < n; ++i) {
        m(i, i + 1) = super(i);
        m(i + 1, i) = sub(i);
    }
    return m;
}

std::pair<BlockReflectionMatrix, BlockReflectionMatrix> build_lm(const ReflectionSequence& seq, int n) {
    if (n < 2) throw OutOfRange("build_lm needs n >= 2");
    BlockReflectionMatrix l{BlockReflectionMatrix::Kind::L, n, involution_factor(seq, n, 0)};
    BlockReflectionMatrix m{BlockReflectionMatrix::Kind::M, n, involution_factor(seq, n, 1)};
    return {std::move(l), std::move(m)};
}

Eigen::MatrixXd build_cmv(const ReflectionSequence& seq, int n) {
    auto [l, m] = build_lm(seq, n);
    return l.mat * m.mat;
}

PencilRecurrence pencil_recurrence(const ReflectionSequence& seq, const Rational& lambda, int n) {
    PencilRecurrence rec;
    rec.lambda = lambda;
    rec.b.reserve(static_cast<std::size_t>(n));
    rec.u.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Rational prev = seq.a(k - 1);
        Rational cur = seq.a(k);
        if (k % 2 == 0) {
            rec.b.push_back(cur - lambda * prev);
            rec.u.push_back(lambda * lambda * (Rational(1) - prev * prev));
        } else {
            rec.b.push_back(lambda * cur - prev);
            rec.u.push_back(Rational(1) - prev * prev);
        }
    }
    return rec;
}

TridiagonalMatrix build_pencil_matrix(const ReflectionSequence& seq, double lambda, double x, int n) {
    if (n < 2) throw OutOfRange("build_pencil_matrix needs n >= 2");
    TridiagonalMatrix t;
    t.n = n;
    t.interior_margin = 1; // only the padded last diagonal entry deviates
    t.diag.resize(n);
    t.super.resize(n - 1);
    t.sub.resize(n - 1);
    for (int k = 0; k < n; ++k) {
        // last row: the factor holding a_{n-1} was cut, its pad acts as 1
        double cur = (k == n - 1) ? 1.0 : seq.a(k).to_double();
        double prev = seq.a(k - 1).to_double();
        t.diag(k) = ((k % 2 == 0) ? cur - lambda * prev : lambda * cur - prev) - x;
    }
    for (int k = 0; k + 1 < n; ++k) {
        double r = reflection_r(seq, k);
        double scale = (k % 2 == 0) ? 1.0 : lambda;
        t.super(k) = scale * r;
        t.sub(k) = scale * seq.epsilon(k) * r;
    }
    return t;
}

std::vector<Rational> pencil_offdiag_products(const ReflectionSequence& seq, const Rational& lambda, int n) {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (int k = 0; k + 1 < n; ++k) {
        Rational signed_rsq = Rational(seq.epsilon(k)) * seq.rsq(k); // = 1 - a_k^2
        out.push_back(k % 2 == 0 ? signed_rsq : lambda * lambda * signed_rsq);
    }
    return out;
}

} // namespace opdc
