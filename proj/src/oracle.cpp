#include "ipent/oracle.hpp"

#include <cmath>

#include "ipent/error.hpp"
#include "ipent/rng.hpp"

namespace ipent::oracle {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

using CVec = std::vector<Complex>;

double vec_norm(const CVec& v) {
    double sq = 0.0;
    for (const auto& z : v) sq += std::norm(z);
    return std::sqrt(sq);
}

Complex inner(const CVec& a, const CVec& b) {  // <a|b>, first argument conjugated
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

Complex bilinear(const CVec& a, const ComplexMatrix& m, const CVec& b) {  // a^T m b
    Complex acc(0.0, 0.0);
    const auto mb = m.apply(b);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * mb[i];
    return acc;
}

bool normalize(CVec& v) {
    const double n = vec_norm(v);
    if (n < 1e-150) return false;
    for (auto& z : v) z /= n;
    return true;
}

double gauss(SplitMix64& rng) {
    const double u1 = 1.0 - rng.next_double();  // (0, 1]
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

CVec random_unit(SplitMix64& rng, std::size_t n) {
    CVec v(n);
    do {
        for (auto& z : v) z = Complex(gauss(rng), gauss(rng));
    } while (!normalize(v));
    return v;
}

void project_out(CVec& v, const CVec& against) {
    const Complex p = inner(against, v);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= p * against[i];
}

// Same-mode ascent: maximize |c^T conj(omega) c| by the conjugated power map
// c <- normalize(conj(conj(omega) c)).
CVec ascend_same_mode(const ComplexMatrix& omega_bar, SplitMix64& rng,
                      std::size_t max_iterations) {
    const std::size_t n = omega_bar.rows();
    CVec c = random_unit(rng, n);
    double prev = -1.0;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        CVec next = omega_bar.apply(c);
        for (auto& z : next) z = std::conj(z);
        if (!normalize(next)) break;
        c = std::move(next);
        const double obj = std::abs(bilinear(c, omega_bar, c));
        if (std::abs(obj - prev) <= 1e-15) break;
        prev = obj;
    }
    return c;
}

// Closed-form Takagi factorization of a 2x2 complex symmetric matrix
// [[alpha, beta], [beta, gamma]]: values mu1 >= mu2 >= 0 and the matching
// unit vectors. Local to the oracle so the check stays independent of the
// library factorization path.
struct Takagi2 {
    double mu1 = 0.0;
    double mu2 = 0.0;
    Complex u1[2];
    Complex u2[2];
};

Takagi2 takagi_2x2(Complex alpha, Complex beta, Complex gamma) {
    const double h11 = std::norm(alpha) + std::norm(beta);
    const double h22 = std::norm(beta) + std::norm(gamma);
    const Complex h12 = alpha * std::conj(beta) + beta * std::conj(gamma);

    Complex w1[2];
    if (std::abs(h12) > 1e-300) {
        const double lmax =
            0.5 * (h11 + h22) + std::sqrt(0.25 * (h11 - h22) * (h11 - h22) + std::norm(h12));
        w1[0] = h12;
        w1[1] = Complex(lmax - h11, 0.0);
        const double nrm = std::sqrt(std::norm(w1[0]) + std::norm(w1[1]));
        w1[0] /= nrm;
        w1[1] /= nrm;
    } else {
        w1[0] = h11 >= h22 ? 1.0 : 0.0;
        w1[1] = 1.0 - w1[0].real();
    }
    const Complex w2[2] = {-std::conj(w1[1]), std::conj(w1[0])};

    // C = W^dag s conj(W) is symmetric and normal; split into commuting real
    // parts and rotate by the more anisotropic of the two.
    const Complex w1c[2] = {std::conj(w1[0]), std::conj(w1[1])};
    const Complex w2c[2] = {std::conj(w2[0]), std::conj(w2[1])};
    const Complex sw1[2] = {alpha * w1c[0] + beta * w1c[1], beta * w1c[0] + gamma * w1c[1]};
    const Complex sw2[2] = {alpha * w2c[0] + beta * w2c[1], beta * w2c[0] + gamma * w2c[1]};
    Complex c11 = std::conj(w1[0]) * sw1[0] + std::conj(w1[1]) * sw1[1];
    Complex c12 = std::conj(w1[0]) * sw2[0] + std::conj(w1[1]) * sw2[1];
    Complex c22 = std::conj(w2[0]) * sw2[0] + std::conj(w2[1]) * sw2[1];

    const double f_aniso = std::abs(c11.real() - c22.real()) + 2.0 * std::abs(c12.real());
    const double g_aniso = std::abs(c11.imag() - c22.imag()) + 2.0 * std::abs(c12.imag());
    double theta = 0.0;
    if (f_aniso >= g_aniso) {
        if (f_aniso > 0.0)
            theta = 0.5 * std::atan2(2.0 * c12.real(), c11.real() - c22.real());
    } else {
        theta = 0.5 * std::atan2(2.0 * c12.imag(), c11.imag() - c22.imag());
    }
    const double co = std::cos(theta);
    const double si = std::sin(theta);

    const Complex d1 = co * co * c11 + 2.0 * co * si * c12 + si * si * c22;
    const Complex d2 = si * si * c11 - 2.0 * co * si * c12 + co * co * c22;

    Takagi2 out;
    Complex u1[2] = {w1[0] * co + w2[0] * si, w1[1] * co + w2[1] * si};
    Complex u2[2] = {-w1[0] * si + w2[0] * co, -w1[1] * si + w2[1] * co};
    const Complex p1 = std::polar(1.0, 0.5 * std::arg(d1));
    const Complex p2 = std::polar(1.0, 0.5 * std::arg(d2));
    u1[0] *= p1;
    u1[1] *= p1;
    u2[0] *= p2;
    u2[1] *= p2;
    out.mu1 = std::abs(d1);
    out.mu2 = std::abs(d2);
    out.u1[0] = u1[0];
    out.u1[1] = u1[1];
    out.u2[0] = u2[0];
    out.u2[1] = u2[1];
    if (out.mu2 > out.mu1) {
        std::swap(out.mu1, out.mu2);
        std::swap(out.u1[0], out.u2[0]);
        std::swap(out.u1[1], out.u2[1]);
    }
    return out;
}

// Orthogonal-pair ascent. The pair is driven as a plane: each sweep maps both
// vectors through conj(omega) . conj, re-orthonormalizes (project and
// renormalize), which converges to the dominant two-dimensional subspace of
// the conjugated map. The best orthonormal pair inside the plane is then
// extracted in closed form. (Updating one vector at a time against a hard
// orthogonality constraint stalls: for two modes the complement of d is the
// line through c, so the conditional optimum is always the current point.)
std::pair<CVec, CVec> ascend_pair(const ComplexMatrix& omega_bar, SplitMix64& rng,
                                  std::size_t max_iterations) {
    const std::size_t n = omega_bar.rows();
    CVec c = random_unit(rng, n);
    CVec d = random_unit(rng, n);
    project_out(d, c);
    if (!normalize(d)) d = random_unit(rng, n);

    const auto conj_map = [&omega_bar](const CVec& v) {
        CVec out = omega_bar.apply(v);
        for (auto& z : out) z = std::conj(z);
        return out;
    };

    double prev = -1.0;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        CVec c_next = conj_map(c);
        if (normalize(c_next)) c = std::move(c_next);
        CVec d_next = conj_map(d);
        project_out(d_next, c);
        if (normalize(d_next)) d = std::move(d_next);

        // sigma_1 + sigma_2 of the compressed 2x2 form bounds the in-plane
        // objective; the iteration has converged once it stalls.
        const Complex a = bilinear(c, omega_bar, c);
        const Complex b = bilinear(c, omega_bar, d);
        const Complex g = bilinear(d, omega_bar, d);
        const double fro_sq = std::norm(a) + 2.0 * std::norm(b) + std::norm(g);
        const double det = std::abs(a * g - b * b);
        const double obj = std::sqrt(fro_sq + 2.0 * det);
        if (std::abs(obj - prev) <= 1e-15) break;
        prev = obj;
    }
    project_out(d, c);
    if (!normalize(d)) d = random_unit(rng, n);

    {
        // In-plane optimum: with compressed Takagi vectors u1, u2 the pair
        // (conj(u1) +/- i conj(u2)) / sqrt(2) realizes mu1 + mu2.
        const Complex a = bilinear(c, omega_bar, c);
        const Complex b = bilinear(c, omega_bar, d);
        const Complex g = bilinear(d, omega_bar, d);
        const Takagi2 t2 = takagi_2x2(a, b, g);
        const double inv = 1.0 / std::sqrt(2.0);
        CVec c_out(n), d_out(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex e1 = std::conj(t2.u1[0]) * inv;
            const Complex e2 = std::conj(t2.u1[1]) * inv;
            const Complex f1 = Complex(0.0, 1.0) * std::conj(t2.u2[0]) * inv;
            const Complex f2 = Complex(0.0, 1.0) * std::conj(t2.u2[1]) * inv;
            c_out[i] = (e1 + f1) * c[i] + (e2 + f2) * d[i];
            d_out[i] = (e1 - f1) * c[i] + (e2 - f2) * d[i];
        }
        if (normalize(c_out) && normalize(d_out)) {
            project_out(d_out, c_out);
            if (normalize(d_out)) return {std::move(c_out), std::move(d_out)};
        }
    }
    // Degenerate extraction: the in-plane objective only depends on the
    // plane, any orthonormal basis of it does.
    return {std::move(c), std::move(d)};
}

// Fermion pair ascent. Antisymmetry makes c^T omega_bar c vanish, so the
// orthogonality constraint is never active: the plain alternating updates
// c <- normalize(conj(omega_bar d)), d <- normalize(conj(omega_bar c)) stay
// orthogonal by themselves and ascend to sigma_1 + sigma_2 = 2 z_1.
std::pair<CVec, CVec> ascend_pair_fermion(const ComplexMatrix& omega_bar, SplitMix64& rng,
                                          std::size_t max_iterations) {
    const std::size_t n = omega_bar.rows();
    CVec c = random_unit(rng, n);
    CVec d = random_unit(rng, n);

    const auto conj_map = [&omega_bar](const CVec& v) {
        CVec out = omega_bar.apply(v);
        for (auto& z : out) z = std::conj(z);
        return out;
    };

    double prev = -1.0;
    for (std::size_t it = 0; it < max_iterations; ++it) {
        CVec d_next = conj_map(c);
        if (normalize(d_next)) d = std::move(d_next);
        CVec c_next = conj_map(d);
        if (normalize(c_next)) c = std::move(c_next);
        const double obj = 2.0 * std::abs(bilinear(c, omega_bar, d));
        if (std::abs(obj - prev) <= 1e-15) break;
        prev = obj;
    }
    project_out(d, c);
    if (!normalize(d)) d = random_unit(rng, n);
    return {std::move(c), std::move(d)};
}

template <typename State, typename Synth>
void consider(const State& state, const Synth& synth, Branch branch, const CVec& c, const CVec& d,
              OracleVerdict& verdict) {
    double value = 0.0;
    try {
        value = std::abs(states::overlap(state, synth(c, d)));
    } catch (const Error&) {
        return;  // degenerate candidate (e.g. parallel pair), not a maximizer
    }
    if (value > verdict.best_overlap) {
        verdict.best_overlap = value;
        verdict.branch = branch;
        verdict.witness = std::make_pair(c, d);
    }
}

template <typename State, typename SynthPair, typename SynthSame>
OracleVerdict run(const State& state, const Options& options, bool same_mode_branch,
                  const SynthPair& synth_pair, const SynthSame& synth_same) {
    if (options.restarts == 0) raise(Errc::InvalidInput, "oracle needs at least one restart");
    if (!state.is_normalized(1e-10))
        raise(Errc::NotNormalized, "oracle expects a normalized state");

    const ComplexMatrix omega_bar = state.omega().conjugate();
    const std::size_t n = state.modes();

    SplitMix64 seeder(options.seed);
    std::vector<std::uint64_t> sub_seeds(options.restarts);
    for (auto& s : sub_seeds) s = seeder.next();

    OracleVerdict verdict;
    verdict.best_overlap = -1.0;
    for (const std::uint64_t s : sub_seeds) {
        ++verdict.restarts_used;
        SplitMix64 rng(s);
        if (same_mode_branch) {
            const CVec c = ascend_same_mode(omega_bar, rng, options.max_iterations);
            consider(state, synth_same, Branch::SameMode, c, c, verdict);
        }
        if (n >= 2) {
            const auto [c, d] = same_mode_branch
                                    ? ascend_pair(omega_bar, rng, options.max_iterations)
                                    : ascend_pair_fermion(omega_bar, rng, options.max_iterations);
            consider(state, synth_pair, Branch::OrthogonalPair, c, d, verdict);
        }
        if (verdict.best_overlap >= 1.0 - 1e-12) break;
    }
    if (verdict.best_overlap < 0.0) verdict.best_overlap = 0.0;
    verdict.separable = verdict.best_overlap >= 1.0 - options.epsilon;
    if (!verdict.separable) verdict.witness.reset();
    return verdict;
}

}  // namespace

const char* branch_name(Branch branch) {
    switch (branch) {
        case Branch::SameMode: return "SameMode";
        case Branch::OrthogonalPair: return "OrthogonalPair";
    }
    return "Unknown";
}

OracleVerdict oracle_separability(const states::TwoBosonState& state, const Options& options) {
    const auto synth_pair = [](const CVec& c, const CVec& d) {
        return states::boson_pair_state(c, d);
    };
    const auto synth_same = [](const CVec& c, const CVec&) {
        return states::boson_same_mode_state(c);
    };
    return run(state, options, true, synth_pair, synth_same);
}

OracleVerdict oracle_separability(const states::TwoFermionState& state, const Options& options) {
    const auto synth_pair = [](const CVec& c, const CVec& d) {
        return states::fermion_pair_state(c, d);
    };
    // Pauli exclusion: c^dag c^dag |0> vanishes, so only the pair branch runs.
    const auto synth_same = [](const CVec& c, const CVec&) {
        return states::fermion_pair_state(c, c);
    };
    return run(state, options, false, synth_pair, synth_same);
}

}  // namespace ipent::oracle
