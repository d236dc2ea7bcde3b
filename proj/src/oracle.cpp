#include "kg/oracle.hpp"
#include "kg/detail/numerics.hpp"
#include "kg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kg::oracle {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Stencil {
    std::vector<double> diag; // 2/h^2 + potential
    double off;               // -1/h^2
    double h;
};

Stencil build_stencil(double E_param, const QuantumNumbers& qn, const PotentialParams& p,
                      const MassParams& m, double r_min, double r_max, int points,
                      Centrifugal mode) {
    auto om = omega_coeffs(E_param, qn, p, m);
    Stencil s;
    s.h = (r_max - r_min) / (points + 1);
    s.off = -1.0 / (s.h * s.h);
    s.diag.resize(points);
    double gam = qn.gamma();
    for (int i = 0; i < points; ++i) {
        double r = r_min + (i + 1) * s.h;
        double u = std::exp(-2.0 * p.alpha * r);
        double d = 1.0 - p.q * u;
        double w = (om.omega1 * u * u + om.omega2 * u + om.omega3) / (d * d);
        if (mode == Centrifugal::Exact)
            w += gam / (r * r) - 4.0 * gam * p.alpha * p.alpha * u / (d * d);
        s.diag[i] = 2.0 / (s.h * s.h) + w;
    }
    return s;
}

// Number of eigenvalues of the tridiagonal operator strictly below lambda.
int sturm_count(const Stencil& s, double lambda) {
    int count = 0;
    double e2 = s.off * s.off;
    double qq = s.diag[0] - lambda;
    if (qq == 0.0) qq = 1e-300;
    if (qq < 0.0) ++count;
    for (std::size_t i = 1; i < s.diag.size(); ++i) {
        qq = s.diag[i] - lambda - e2 / qq;
        if (qq == 0.0) qq = 1e-300;
        if (qq < 0.0) ++count;
    }
    return count;
}

double sturm_eigenvalue(const Stencil& s, int index) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double d : s.diag) {
        lo = std::min(lo, d - 2.0 * std::abs(s.off));
        hi = std::max(hi, d + 2.0 * std::abs(s.off));
    }
    for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count(s, mid) > index)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> sturm_lowest(const Stencil& s, int nlev) {
    std::vector<double> out(nlev);
    for (int i = 0; i < nlev; ++i) out[i] = sturm_eigenvalue(s, i);
    return out;
}

std::vector<double> inverse_iteration(const Stencil& s, double lambda) {
    int n = static_cast<int>(s.diag.size());
    std::vector<double> v(n, 1.0), a(n), b(n), c(n);
    double shift = lambda + 1e-10 * (1.0 + std::abs(lambda));
    for (int sweep = 0; sweep < 4; ++sweep) {
        for (int i = 0; i < n; ++i) {
            a[i] = s.off;
            b[i] = s.diag[i] - shift;
            c[i] = s.off;
        }
        // Thomas solve (T - shift) w = v
        for (int i = 1; i < n; ++i) {
            double mfac = a[i] / b[i - 1];
            b[i] -= mfac * c[i - 1];
            v[i] -= mfac * v[i - 1];
        }
        v[n - 1] /= b[n - 1];
        for (int i = n - 2; i >= 0; --i) v[i] = (v[i] - c[i] * v[i + 1]) / b[i];
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        for (double& x : v) x /= nrm;
    }
    return v;
}

} // namespace

void RadialGrid::validate(const PotentialParams& p) const {
    if (points < 2000) throw GridError("RadialGrid: points must be >= 2000");
    // the inner boundary is the equation's own singular point ln(q)/(2a),
    // which sits at negative r for q < 1 (where the closed forms impose
    // their regularity); a grid clipped at r = 0 solves a different problem
    if (!(r_min > p.r_floor())) throw GridError("RadialGrid: r_min at or below the floor");
    if (p.q * std::exp(-2.0 * p.alpha * r_max) >= 1e-12)
        throw GridError("RadialGrid: r_max leaves a non-negligible tail");
}

RadialGrid RadialGrid::bound_defaults(const PotentialParams& p) {
    RadialGrid g;
    double base = p.r_floor();
    g.r_min = base + 1e-6 / p.alpha;
    g.r_max = base + 14.0 / p.alpha;
    g.points = 20000;
    return g;
}

RadialGrid RadialGrid::scattering_defaults(const PotentialParams& p) {
    RadialGrid g;
    double base = p.r_floor();
    g.r_min = base + 1e-3 / p.alpha;
    g.r_max = base + 26.0 / p.alpha;
    g.points = 240000;
    return g;
}

std::vector<double> effective_levels(double E_param, const QuantumNumbers& qn,
                                     const PotentialParams& p, const MassParams& m,
                                     const RadialGrid& grid, int nlev, Centrifugal mode) {
    grid.validate(p);
    auto coarse = build_stencil(E_param, qn, p, m, grid.r_min, grid.r_max, grid.points, mode);
    auto fine = build_stencil(E_param, qn, p, m, grid.r_min, grid.r_max, 2 * grid.points + 1, mode);
    auto lc = sturm_lowest(coarse, nlev);
    auto lf = sturm_lowest(fine, nlev);
    std::vector<double> out(nlev);
    for (int i = 0; i < nlev; ++i) out[i] = (4.0 * lf[i] - lc[i]) / 3.0;
    return out;
}

BoundResult oracle_bound_energies(const QuantumNumbers& qn, const PotentialParams& p,
                                  const MassParams& m, const RadialGrid& grid,
                                  const SearchConfig& search) {
    grid.validate(p);
    double e_max = search.E_max > 0.0 ? search.E_max : default_search_e_max(p, m);
    auto [gap_lo, gap_hi] = effective_gap(p, m);
    double lo = std::max(-e_max, gap_lo);
    double hi = std::min(e_max, gap_hi);
    auto level = [&](double E) {
        auto om = omega_coeffs(E, qn, p, m);
        // only meaningful where the channel decays at r_max
        if (E * E - m.m0 * m.m0 >= om.omega3) return kNaN;
        return effective_levels(E, qn, p, m, grid, qn.n + 1)[qn.n] - (E * E - m.m0 * m.m0);
    };
    BoundResult res;
    int npts = std::max(60, search.grid_points / 5);
    detail::scan_brackets(level, lo, hi, npts, [&](double a, double b) {
        double root = detail::brent(level, a, b, 1e-9);
        res.energies.push_back(root);
        auto stencil = build_stencil(root, qn, p, m, grid.r_min, grid.r_max, grid.points,
                                     Centrifugal::Approximated);
        double lam = sturm_eigenvalue(stencil, qn.n);
        auto vec = inverse_iteration(stencil, lam);
        double peak = 0.0;
        for (double x : vec) peak = std::max(peak, std::abs(x));
        if (std::abs(vec.back()) > 1e-8 * peak) res.dirichlet_tail_warning = true;
    });
    std::sort(res.energies.begin(), res.energies.end());
    return res;
}

std::vector<double> oracle_eigenvector(double E_param, const QuantumNumbers& qn,
                                       const PotentialParams& p, const MassParams& m,
                                       const RadialGrid& grid, int n) {
    grid.validate(p);
    auto s = build_stencil(E_param, qn, p, m, grid.r_min, grid.r_max, grid.points,
                           Centrifugal::Approximated);
    return inverse_iteration(s, sturm_eigenvalue(s, n));
}

double oracle_phase_shift(double E, const QuantumNumbers& qn, const PotentialParams& p,
                          const MassParams& m, const RadialGrid& grid) {
    auto om = omega_coeffs(E, qn, p, m);
    double Et = E * E - m.m0 * m.m0;
    double k2 = Et - om.omega3;
    if (k2 <= 0.0) throw BelowThreshold("oracle_phase_shift: below the continuum edge");
    double k = std::sqrt(k2);

    double base = p.r_floor();
    double r0 = base + std::max(grid.r_min - base, 1e-3 / p.alpha);
    double rend = grid.r_max;
    int n = std::max(grid.points, 2000);
    double h = (rend - r0) / (n - 1);

    // regular-solution exponent at the inner singular point
    double disc = 1.0 + om.sum_weighted(p.q) / (p.alpha * p.alpha * p.q * p.q);
    if (disc < 0.0) throw ParameterError("oracle_phase_shift: fall to the center");
    double lam1 = 0.5 * (1.0 + std::sqrt(disc));

    auto geff = [&](double r) {
        double u = std::exp(-2.0 * p.alpha * r);
        double d = 1.0 - p.q * u;
        return (om.omega1 * u * u + om.omega2 * u + om.omega3) / (d * d) - Et;
    };

    std::vector<double> F(n), fcoef(n);
    for (int i = 0; i < n; ++i) fcoef[i] = 1.0 - h * h / 12.0 * geff(r0 + i * h);
    // Frobenius start F ~ (r-base)^{lam1} (1 + c1 (r-base))
    double x1 = r0 - base, x2 = 0.5 * x1;
    double a2c = lam1 * (lam1 - 1.0);
    double c1 = ((geff(base + x2) - a2c / (x2 * x2)) * x2 +
                 (geff(base + x1) - a2c / (x1 * x1)) * x1) /
                (4.0 * lam1);
    F[0] = std::pow(x1, lam1) * (1.0 + c1 * x1);
    F[1] = std::pow(x1 + h, lam1) * (1.0 + c1 * (x1 + h));
    for (int i = 1; i + 1 < n; ++i)
        F[i + 1] = ((12.0 - 10.0 * fcoef[i]) * F[i] - fcoef[i - 1] * F[i - 1]) / fcoef[i + 1];

    auto phase_at = [&](double rm) {
        int i = static_cast<int>(std::lround((rm - r0) / h));
        i = std::clamp(i, 2, n - 3);
        double fp = (-F[i + 2] + 8.0 * F[i + 1] - 8.0 * F[i - 1] + F[i - 2]) / (12.0 * h);
        return std::atan2(k * F[i], fp) - k * (r0 + i * h);
    };
    double r_match1 = base + std::max(15.5 / p.alpha, rend - base - 8.0 / p.alpha);
    double r_match2 = rend - 2.0 / p.alpha;
    double p1 = phase_at(r_match1), p2 = phase_at(r_match2);
    double diff = std::remainder(p1 - p2, kPi);
    if (std::abs(diff) > 1e-3)
        throw MatchError("oracle_phase_shift: two-radius extraction disagrees");
    double delta = p2 + 0.5 * kPi * (qn.l + 0.5 * (qn.D - 3.0));
    double red = std::remainder(delta, 2.0 * kPi);
    if (red <= -kPi) red += 2.0 * kPi;
    return red;
}

} // namespace kg::oracle
