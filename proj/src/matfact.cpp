#include "ipent/matfact.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <utility>

#include "ipent/error.hpp"

namespace ipent::matfact {

namespace {

constexpr double kOffTargetRel = 1e-13;   // off-diagonal target, relative to the family norm
constexpr double kOffAcceptRel = 1e-11;   // acceptable stall level at the sweep budget
constexpr double kZeroFloor = 1e-300;

double off_diagonal_sq(const std::vector<ComplexMatrix>& mats) {
    double sq = 0.0;
    for (const auto& m : mats) {
        const std::size_t n = m.rows();
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (p != q) sq += std::norm(m(p, q));
    }
    return sq;
}

// Plane rotation J = 1 except J(p,p) = c, J(p,q) = -conj(s), J(q,p) = s,
// J(q,q) = c, with c real and c^2 + |s|^2 = 1.
void rotate_similarity(ComplexMatrix& a, std::size_t p, std::size_t q, double c, Complex s) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {  // A <- A J
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp + s * akq;
        a(k, q) = -std::conj(s) * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {  // A <- J^dag A
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk + std::conj(s) * aqk;
        a(q, k) = -s * apk + c * aqk;
    }
}

void rotate_columns(ComplexMatrix& v, std::size_t p, std::size_t q, double c, Complex s) {
    const std::size_t n = v.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp + s * vkq;
        v(k, q) = -std::conj(s) * vkp + c * vkq;
    }
}

// Top unit eigenvector of sum_k h_k h_k^T for one or two 3-vectors, computed
// through the 2x2 Gram matrix. Returns false when the accumulation is zero.
bool top_direction(const std::array<std::array<double, 3>, 2>& h, std::size_t count,
                   std::array<double, 3>& u) {
    auto dot3 = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    };
    double v1 = 0.0, v2 = 0.0;
    if (count == 1) {
        v1 = 1.0;
    } else {
        const double g11 = dot3(h[0], h[0]);
        const double g22 = dot3(h[1], h[1]);
        const double g12 = dot3(h[0], h[1]);
        if (g11 + g22 <= kZeroFloor) return false;
        const double diff = g11 - g22;
        const double disc = std::sqrt(diff * diff + 4.0 * g12 * g12);
        v1 = g12;
        v2 = 0.5 * (disc - diff);  // lambda_max - g11
        if (v1 * v1 + v2 * v2 <= kZeroFloor * std::max(g11, g22)) {
            v1 = g11 >= g22 ? 1.0 : 0.0;
            v2 = 1.0 - v1;
        }
    }
    for (int i = 0; i < 3; ++i) u[i] = v1 * h[0][i] + v2 * h[1][i];
    const double nrm = std::sqrt(dot3(u, u));
    if (nrm <= kZeroFloor) return false;
    for (int i = 0; i < 3; ++i) u[i] /= nrm;
    // Sign convention x >= 0 keeps the rotation "inner" (angle <= pi/4).
    if (u[0] < 0.0 || (u[0] == 0.0 && (u[1] < 0.0 || (u[1] == 0.0 && u[2] < 0.0))))
        for (int i = 0; i < 3; ++i) u[i] = -u[i];
    return true;
}

// Joint cyclic Jacobi for a family of one or two commuting hermitian
// matrices. Each pivot applies the rotation maximizing the family's combined
// diagonal gain (Cardoso-Souloumiac angles); for a single matrix this reduces
// to the classical Jacobi rotation and zeroes the pivot exactly. Real input
// yields a real transformation. The matrices are reduced in place; the
// accumulated unitary is returned.
ComplexMatrix joint_diagonalize(std::vector<ComplexMatrix>& mats, const char* context) {
    const std::size_t n = mats.front().rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    double scale_sq = 0.0;
    for (const auto& m : mats) {
        const double f = m.frobenius_norm();
        scale_sq += f * f;
    }
    if (n <= 1 || scale_sq <= kZeroFloor) return v;

    const double target_sq = scale_sq * kOffTargetRel * kOffTargetRel;
    for (std::size_t sweep = 0; sweep < kSweepBudget; ++sweep) {
        if (off_diagonal_sq(mats) <= target_sq) return v;
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                std::array<std::array<double, 3>, 2> h{};
                for (std::size_t k = 0; k < mats.size(); ++k) {
                    const Complex z = mats[k](p, q);
                    h[k] = {mats[k](p, p).real() - mats[k](q, q).real(), 2.0 * z.real(),
                            2.0 * z.imag()};
                }
                std::array<double, 3> u{};
                if (!top_direction(h, mats.size(), u)) continue;
                const double c = std::sqrt(0.5 * (1.0 + u[0]));
                const Complex s = Complex(u[1], -u[2]) / (2.0 * c);
                if (std::abs(s) < 1e-16) continue;
                rotated = true;
                for (auto& m : mats) rotate_similarity(m, p, q, c, s);
                rotate_columns(v, p, q, c, s);
            }
        }
        if (!rotated) break;
    }
    if (off_diagonal_sq(mats) > scale_sq * kOffAcceptRel * kOffAcceptRel)
        raise(Errc::NoConvergence,
              std::string(context) + " did not reach the off-diagonal target within " +
                  std::to_string(kSweepBudget) + " sweeps");
    return v;
}

void check_square_and_size(const ComplexMatrix& m, const char* context) {
    if (!m.is_square()) raise(Errc::InvalidInput, std::string(context) + " requires a square matrix");
    if (m.rows() > kMaxModes)
        raise(Errc::InvalidInput, std::string(context) + " supports at most " +
                                      std::to_string(kMaxModes) + " modes");
    if (!m.all_finite()) raise(Errc::InvalidInput, std::string(context) + ": non-finite entries");
}

// Stable descending order of |values| as an index permutation.
std::vector<std::size_t> descending_order(const std::vector<double>& values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return idx;
}

ComplexMatrix permute_columns(const ComplexMatrix& m, const std::vector<std::size_t>& order) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t c = 0; c < order.size(); ++c) out.set_column(c, m.column(order[c]));
    return out;
}

// Deterministic sign fix: the first entry of largest magnitude gets a
// nonnegative real part (then nonnegative imaginary part on ties). Sign flips
// never disturb a congruence diagonal.
void canonicalize_column_signs(ComplexMatrix& u) {
    for (std::size_t c = 0; c < u.cols(); ++c) {
        double best = -1.0;
        Complex pivot(0.0, 0.0);
        for (std::size_t r = 0; r < u.rows(); ++r) {
            const double a = std::abs(u(r, c));
            if (a > best + 1e-12 * best) {
                best = a;
                pivot = u(r, c);
            }
        }
        if (pivot.real() < 0.0 || (pivot.real() == 0.0 && pivot.imag() < 0.0))
            u.scale_column(c, Complex(-1.0, 0.0));
    }
}

ComplexMatrix real_part_matrix(const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Complex(m(r, c).real(), 0.0);
    return out;
}

ComplexMatrix imag_part_matrix(const ComplexMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Complex(m(r, c).imag(), 0.0);
    return out;
}

double max_imag_abs(const ComplexMatrix& m) {
    double mx = 0.0;
    for (const auto& z : m.entries()) mx = std::max(mx, std::abs(z.imag()));
    return mx;
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& h) {
    check_square_and_size(h, "hermitian_eig");
    const double scale = h.frobenius_norm();
    if (hermitian_deviation(h) > 1e-12 * std::max(scale, 1.0))
        raise(Errc::NotHermitian, "matrix is not hermitian within tolerance");

    ComplexMatrix a = (h + h.adjoint()) * Complex(0.5, 0.0);
    std::vector<ComplexMatrix> family{std::move(a)};
    ComplexMatrix v = joint_diagonalize(family, "hermitian_eig");

    const std::size_t n = h.rows();
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = family[0](i, i).real();

    const auto order = descending_order(w);
    std::vector<double> sorted(n);
    for (std::size_t i = 0; i < n; ++i) sorted[i] = w[order[i]];
    ComplexMatrix vs = permute_columns(v, order);

    // Eigenvector phases are conventional; fix them so output is stable.
    for (std::size_t c = 0; c < n; ++c) {
        double best = -1.0;
        Complex pivot(0.0, 0.0);
        for (std::size_t r = 0; r < n; ++r) {
            const double mag = std::abs(vs(r, c));
            if (mag > best + 1e-12 * best) {
                best = mag;
                pivot = vs(r, c);
            }
        }
        if (best > 0.0) vs.scale_column(c, std::conj(pivot) / std::abs(pivot));
    }
    return {std::move(sorted), std::move(vs)};
}

ComplexMatrix simdiag_commuting_real_symmetric(const ComplexMatrix& f, const ComplexMatrix& g) {
    check_square_and_size(f, "simdiag_commuting_real_symmetric");
    check_square_and_size(g, "simdiag_commuting_real_symmetric");
    if (f.rows() != g.rows())
        raise(Errc::DimensionMismatch, "simdiag requires matrices of equal size");

    const double norm_f = f.frobenius_norm();
    const double norm_g = g.frobenius_norm();
    if (max_imag_abs(f) > 1e-13 * std::max(norm_f, 1.0) ||
        max_imag_abs(g) > 1e-13 * std::max(norm_g, 1.0))
        raise(Errc::InvalidInput, "simdiag requires real matrices");
    if (symmetric_deviation(f) > 1e-12 * std::max(norm_f, 1.0) ||
        symmetric_deviation(g) > 1e-12 * std::max(norm_g, 1.0))
        raise(Errc::NotSymmetric, "simdiag requires symmetric matrices");

    ComplexMatrix fs = (real_part_matrix(f) + real_part_matrix(f).transpose()) * Complex(0.5, 0.0);
    ComplexMatrix gs = (real_part_matrix(g) + real_part_matrix(g).transpose()) * Complex(0.5, 0.0);

    const double commutator = (fs * gs - gs * fs).frobenius_norm();
    if (commutator > 1e-10 * (norm_f * norm_g + 1.0))
        raise(Errc::NotCommuting, "matrices do not commute within tolerance");

    std::vector<ComplexMatrix> family{std::move(fs), std::move(gs)};
    ComplexMatrix o = joint_diagonalize(family, "simdiag_commuting_real_symmetric");
    if (max_imag_abs(o) > 1e-12)
        raise(Errc::InternalInconsistency, "real joint diagonalization left the real field");
    return real_part_matrix(o);
}

TakagiDecomposition takagi(const ComplexMatrix& s, double rank_tol) {
    check_square_and_size(s, "takagi");
    const std::size_t n = s.rows();
    const double scale = s.frobenius_norm();
    if (scale <= kZeroFloor) {
        return {ComplexMatrix::identity(n), std::vector<double>(n, 0.0), 0};
    }
    if (symmetric_deviation(s) > 1e-12 * scale)
        raise(Errc::NotSymmetric, "matrix is not symmetric within tolerance");

    ComplexMatrix sym = (s + s.transpose()) * Complex(0.5, 0.0);

    // S S^* is hermitian positive semidefinite; its eigenbasis U' turns S into
    // C = U'^dag S U'^* which is symmetric and normal, so C = F + iG splits
    // into commuting real symmetric parts that one real orthogonal O
    // diagonalizes simultaneously. U = U' O then gives S = U D U^T; the phase
    // of each diagonal entry is absorbed into the matching column of U.
    ComplexMatrix h = sym * sym.conjugate();
    h = (h + h.adjoint()) * Complex(0.5, 0.0);
    HermitianEig eig = hermitian_eig(h);
    const ComplexMatrix& uprime = eig.eigenvectors;

    ComplexMatrix c = uprime.adjoint() * sym * uprime.conjugate();
    c = (c + c.transpose()) * Complex(0.5, 0.0);

    std::vector<ComplexMatrix> family{real_part_matrix(c), imag_part_matrix(c)};
    ComplexMatrix o = joint_diagonalize(family, "takagi");

    ComplexMatrix d = o.transpose() * c * o;
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (p != q) off += std::norm(d(p, q));
    if (std::sqrt(off) > 1e-10 * scale)
        raise(Errc::NoConvergence, "takagi post-processing left off-diagonal residue");

    ComplexMatrix u = uprime * o;
    std::vector<double> values(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex dj = d(j, j);
        values[j] = std::abs(dj);
        if (values[j] > 0.0) u.scale_column(j, std::polar(1.0, 0.5 * std::arg(dj)));
    }

    const auto order = descending_order(values);
    std::vector<double> sorted(n);
    for (std::size_t j = 0; j < n; ++j) sorted[j] = values[order[j]];
    u = permute_columns(u, order);
    canonicalize_column_signs(u);

    const std::size_t rank = numerical_rank(sorted, rank_tol);

    // Guard against a silently wrong factorization; the tests pin the tighter
    // 1e-10 bounds.
    ComplexMatrix recon(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t cc = 0; cc < n; ++cc) {
            Complex acc(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) acc += u(r, j) * sorted[j] * u(cc, j);
            recon(r, cc) = acc;
        }
    if ((recon - sym).frobenius_norm() > 1e-9 * scale)
        raise(Errc::NoConvergence, "takagi reconstruction check failed");

    return {std::move(u), std::move(sorted), rank};
}

SkewCanonicalDecomposition skew_canonical(const ComplexMatrix& a, double rank_tol) {
    check_square_and_size(a, "skew_canonical");
    const std::size_t n = a.rows();
    const std::size_t n_pairs = n / 2;
    const double scale = a.frobenius_norm();
    if (scale <= kZeroFloor) {
        return {ComplexMatrix::identity(n), std::vector<double>(n_pairs, 0.0), 0};
    }
    if (antisymmetric_deviation(a) > 1e-12 * scale)
        raise(Errc::NotAntisymmetric, "matrix is not antisymmetric within tolerance");

    ComplexMatrix skw = (a - a.transpose()) * Complex(0.5, 0.0);

    // Mirror of the symmetric route: A A^dag is hermitian, its eigenbasis U'
    // turns A into C = U'^dag A U'^* which is skew and normal. iRe(C) and
    // iIm(C) are commuting hermitian matrices, so one unitary W diagonalizes
    // C outright. Eigenvalues of a skew normal matrix come in (l, -l) pairs
    // with conjugate eigenvectors; each pair spans a real plane on which C is
    // the canonical 2x2 block.
    ComplexMatrix h = skw * skw.adjoint();
    h = (h + h.adjoint()) * Complex(0.5, 0.0);
    HermitianEig eig = hermitian_eig(h);
    const ComplexMatrix& uprime = eig.eigenvectors;

    ComplexMatrix c = uprime.adjoint() * skw * uprime.conjugate();
    c = (c - c.transpose()) * Complex(0.5, 0.0);

    ComplexMatrix p_mat(n, n);
    ComplexMatrix r_mat(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t q = 0; q < n; ++q) {
            p_mat(r, q) = Complex(0.0, c(r, q).real());
            r_mat(r, q) = Complex(0.0, c(r, q).imag());
        }
    std::vector<ComplexMatrix> family{std::move(p_mat), std::move(r_mat)};
    ComplexMatrix w = joint_diagonalize(family, "skew_canonical");

    ComplexMatrix dc = w.adjoint() * c * w;
    double off = 0.0;
    std::vector<Complex> lambda(n);
    for (std::size_t j = 0; j < n; ++j) lambda[j] = dc(j, j);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (p != q) off += std::norm(dc(p, q));
    if (std::sqrt(off) > 1e-10 * scale)
        raise(Errc::NoConvergence, "skew_canonical eigenreduction left off-diagonal residue");

    double max_lambda = 0.0;
    for (const auto& l : lambda) max_lambda = std::max(max_lambda, std::abs(l));
    const double pair_floor = 1e-12 * max_lambda;

    std::vector<double> mags(n);
    for (std::size_t j = 0; j < n; ++j) mags[j] = std::abs(lambda[j]);
    const auto order = descending_order(mags);

    struct Pair {
        std::vector<double> x;
        std::vector<double> y;
        double z = 0.0;
        double phase = 0.0;
    };
    std::vector<Pair> pairs;
    std::vector<bool> used(n, false);

    auto real_dot = [n](const std::vector<double>& a_, const std::vector<double>& b_) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += a_[i] * b_[i];
        return acc;
    };

    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t j = order[t];
        if (used[j] || mags[j] <= pair_floor) continue;
        // Partner column: the eigenvalue closest to -lambda_j.
        std::size_t partner = n;
        double best = std::numeric_limits<double>::max();
        for (std::size_t l = 0; l < n; ++l) {
            if (l == j || used[l]) continue;
            const double miss = std::abs(lambda[l] + lambda[j]);
            if (miss < best) {
                best = miss;
                partner = l;
            }
        }
        if (partner == n || best > 1e-6 * max_lambda)
            raise(Errc::InternalInconsistency, "unpaired eigenvalue in skew reduction");
        used[j] = true;
        used[partner] = true;

        const auto v = w.column(j);
        Pair pr;
        pr.x.resize(n);
        pr.y.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            pr.x[i] = std::sqrt(2.0) * v[i].real();
            pr.y[i] = std::sqrt(2.0) * v[i].imag();
        }
        const double nx = std::sqrt(real_dot(pr.x, pr.x));
        const double ny = std::sqrt(real_dot(pr.y, pr.y));
        if (nx <= kZeroFloor || ny <= kZeroFloor)
            raise(Errc::InternalInconsistency, "degenerate real pair in skew reduction");
        for (std::size_t i = 0; i < n; ++i) {
            pr.x[i] /= nx;
            pr.y[i] /= ny;
        }

        // Block value x^T C y; flip y into the right half-plane, absorb the
        // leftover phase later so the published z is real nonnegative.
        std::vector<Complex> cy(n, Complex(0.0, 0.0));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t q = 0; q < n; ++q) cy[r] += c(r, q) * pr.y[q];
        Complex blk(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) blk += pr.x[i] * cy[i];
        if (blk.real() < 0.0 || (blk.real() == 0.0 && blk.imag() < 0.0)) {
            for (auto& e : pr.y) e = -e;
            blk = -blk;
        }
        // Joint sign flip for stable output.
        double bestmag = -1.0;
        std::size_t pivot = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(pr.x[i]) > bestmag + 1e-12 * bestmag) {
                bestmag = std::abs(pr.x[i]);
                pivot = i;
            }
        }
        if (pr.x[pivot] < 0.0) {
            for (std::size_t i = 0; i < n; ++i) {
                pr.x[i] = -pr.x[i];
                pr.y[i] = -pr.y[i];
            }
        }
        pr.z = std::abs(blk);
        pr.phase = std::arg(blk);
        pairs.push_back(std::move(pr));
    }

    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& a_, const Pair& b_) { return a_.z > b_.z; });
    if (pairs.size() > n_pairs)
        raise(Errc::InternalInconsistency, "too many pairs in skew reduction");

    // Kernel: real orthonormal completion of the pair planes, picked greedily
    // from the projector onto the complement.
    std::vector<std::vector<double>> basis;
    for (const auto& pr : pairs) {
        basis.push_back(pr.x);
        basis.push_back(pr.y);
    }
    const std::size_t kernel_dim = n - basis.size();
    std::vector<std::vector<double>> kernel;
    for (std::size_t t = 0; t < kernel_dim; ++t) {
        std::vector<double> bestv;
        double bestnorm = -1.0;
        for (std::size_t jcol = 0; jcol < n; ++jcol) {
            std::vector<double> cand(n, 0.0);
            cand[jcol] = 1.0;
            for (const auto& b : basis) {
                const double proj = real_dot(b, cand);
                for (std::size_t i = 0; i < n; ++i) cand[i] -= proj * b[i];
            }
            for (const auto& k : kernel) {
                const double proj = real_dot(k, cand);
                for (std::size_t i = 0; i < n; ++i) cand[i] -= proj * k[i];
            }
            const double cn = std::sqrt(real_dot(cand, cand));
            if (cn > bestnorm) {
                bestnorm = cn;
                bestv = std::move(cand);
            }
        }
        if (bestnorm <= 1e-8)
            raise(Errc::InternalInconsistency, "kernel completion failed in skew reduction");
        for (auto& e : bestv) e /= bestnorm;
        kernel.push_back(std::move(bestv));
    }

    ComplexMatrix q(n, n);
    std::vector<double> pair_values(n_pairs, 0.0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Complex col_phase = std::polar(1.0, 0.5 * pairs[i].phase);
        for (std::size_t r = 0; r < n; ++r) {
            q(r, 2 * i) = col_phase * pairs[i].x[r];
            q(r, 2 * i + 1) = col_phase * pairs[i].y[r];
        }
        pair_values[i] = pairs[i].z;
    }
    for (std::size_t k = 0; k < kernel.size(); ++k)
        for (std::size_t r = 0; r < n; ++r) q(r, 2 * pairs.size() + k) = kernel[k][r];

    ComplexMatrix u = uprime * q;
    const std::size_t rank = 2 * numerical_rank(pair_values, rank_tol);

    ComplexMatrix recon = u * skew_block_matrix(n, pair_values) * u.transpose();
    if ((recon - skw).frobenius_norm() > 1e-9 * scale)
        raise(Errc::NoConvergence, "skew_canonical reconstruction check failed");

    return {std::move(u), std::move(pair_values), rank};
}

std::size_t numerical_rank(const std::vector<double>& values, double rank_tol) {
    if (values.empty() || values.front() <= kZeroFloor) return 0;
    std::size_t m = 0;
    for (const double v : values) {
        if (v > rank_tol * values.front())
            ++m;
        else
            break;
    }
    return m;
}

ComplexMatrix skew_block_matrix(std::size_t n, const std::vector<double>& pair_values) {
    ComplexMatrix b(n, n);
    for (std::size_t i = 0; i < pair_values.size() && 2 * i + 1 < n; ++i) {
        b(2 * i, 2 * i + 1) = pair_values[i];
        b(2 * i + 1, 2 * i) = -pair_values[i];
    }
    return b;
}

}  // namespace ipent::matfact
