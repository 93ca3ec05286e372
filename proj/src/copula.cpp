#include "ccca/copula.hpp"

#include <algorithm>
#include <cmath>

#include "ccca/normal.hpp"
#include "ccca/rng.hpp"

namespace ccca {

namespace {

constexpr double kClamp = 1e-6;
constexpr double kAlphaIndepEps = 1e-8;  // Frank/Gaussian this close to 0 act as independence
constexpr double kMaxLogDensity = 709.0;

double clamp01(double x) { return std::clamp(x, kClamp, 1.0 - kClamp); }

bool acts_independent(const CopulaModel& m) {
    if (m.family() == CopulaFamily::Independence) return true;
    if (m.family() == CopulaFamily::Frank || m.family() == CopulaFamily::Gaussian) {
        return std::abs(m.alpha()) < kAlphaIndepEps;
    }
    return false;
}

// log(x^a + y^a) for x, y > 0, stable for large a
double log_pow_sum(double lx, double ly, double a) {
    const double hi = std::max(lx, ly);
    const double lo = std::min(lx, ly);
    return a * hi + std::log1p(std::exp(a * (lo - hi)));
}

double gumbel_log_density(double alpha, double u, double v) {
    const double x = -std::log(u);
    const double y = -std::log(v);
    const double lx = std::log(x);
    const double ly = std::log(y);
    const double ls = log_pow_sum(lx, ly, alpha);  // log(x^a + y^a)
    const double la = ls / alpha;                  // log A, A = S^(1/a)
    const double A = std::exp(la);
    return -A + (alpha - 1.0) * (lx + ly) + (1.0 - 2.0 * alpha) * la +
           std::log(alpha - 1.0 + A) + x + y;
}

double clayton_log_density(double alpha, double u, double v) {
    const double lu = std::log(u);
    const double lv = std::log(v);
    const double a = -alpha * lu;
    const double b = -alpha * lv;
    const double m = std::max(a, b);
    // log(u^-a + v^-a - 1)
    const double ls = m + std::log(std::exp(a - m) + std::exp(b - m) - std::exp(-m));
    return std::log1p(alpha) - (alpha + 1.0) * (lu + lv) - (1.0 / alpha + 2.0) * ls;
}

double frank_log_density(double alpha, double u, double v) {
    const double em = -std::expm1(-alpha);  // 1 - e^-alpha
    const double d = em - (-std::expm1(-alpha * u)) * (-std::expm1(-alpha * v));
    return std::log(std::abs(alpha)) + std::log(std::abs(em)) - alpha * (u + v) -
           2.0 * std::log(std::abs(d));
}

double gaussian_log_density(double rho, double u, double v) {
    const double x = norm_quantile(u);
    const double y = norm_quantile(v);
    const double s = 1.0 - rho * rho;
    return -0.5 * std::log(s) + (2.0 * rho * x * y - rho * rho * (x * x + y * y)) / (2.0 * s);
}

double gumbel_cdf(double alpha, double u, double v) {
    const double lx = std::log(-std::log(u));
    const double ly = std::log(-std::log(v));
    return std::exp(-std::exp(log_pow_sum(lx, ly, alpha) / alpha));
}

double clayton_cdf(double alpha, double u, double v) {
    const double a = -alpha * std::log(u);
    const double b = -alpha * std::log(v);
    const double m = std::max(a, b);
    const double ls = m + std::log(std::exp(a - m) + std::exp(b - m) - std::exp(-m));
    return std::exp(-ls / alpha);
}

double frank_cdf(double alpha, double u, double v) {
    const double num = std::expm1(-alpha * u) * std::expm1(-alpha * v);
    const double den = std::expm1(-alpha);
    return -std::log1p(num / den) / alpha;
}

// conditional CDF of V given U = u for the Gumbel family, used by the sampler
double gumbel_conditional(double alpha, double u, double v) {
    const double x = -std::log(u);
    const double lx = std::log(x);
    const double ly = std::log(-std::log(v));
    const double ls = log_pow_sum(lx, ly, alpha);
    const double A = std::exp(ls / alpha);
    return std::exp(-A + (1.0 / alpha - 1.0) * ls + (alpha - 1.0) * lx + x);
}

}  // namespace

const char* family_name(CopulaFamily family) {
    switch (family) {
        case CopulaFamily::Gumbel: return "gumbel";
        case CopulaFamily::Clayton: return "clayton";
        case CopulaFamily::Frank: return "frank";
        case CopulaFamily::Gaussian: return "gaussian";
        case CopulaFamily::Independence: return "independence";
    }
    throw Error("copula: unknown family tag");
}

CopulaFamily family_from_name(const std::string& name) {
    if (name == "gumbel") return CopulaFamily::Gumbel;
    if (name == "clayton") return CopulaFamily::Clayton;
    if (name == "frank") return CopulaFamily::Frank;
    if (name == "gaussian") return CopulaFamily::Gaussian;
    if (name == "independence") return CopulaFamily::Independence;
    throw Error("copula: unknown family '" + name + "'");
}

CopulaModel::CopulaModel(CopulaFamily family, double alpha) : family_(family), alpha_(alpha) {
    if (!std::isfinite(alpha) && family != CopulaFamily::Independence) {
        throw Error("copula: non-finite alpha");
    }
    switch (family) {
        case CopulaFamily::Gumbel:
            if (alpha < 1.0) throw Error("copula: gumbel requires alpha >= 1");
            break;
        case CopulaFamily::Clayton:
            if (alpha <= 0.0) throw Error("copula: clayton requires alpha > 0");
            break;
        case CopulaFamily::Frank:
            if (alpha == 0.0) throw Error("copula: frank requires alpha != 0");
            break;
        case CopulaFamily::Gaussian:
            if (!(alpha > -1.0 && alpha < 1.0))
                throw Error("copula: gaussian requires -1 < alpha < 1");
            break;
        case CopulaFamily::Independence:
            alpha_ = 0.0;
            break;
    }
}

double copula_cdf(const CopulaModel& model, double u, double v) {
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) {
        throw Error("copula: cdf arguments must lie in [0,1]");
    }
    if (u == 0.0 || v == 0.0) return 0.0;
    if (u == 1.0) return v;
    if (v == 1.0) return u;
    if (acts_independent(model)) return u * v;

    switch (model.family()) {
        case CopulaFamily::Gumbel: return gumbel_cdf(model.alpha(), u, v);
        case CopulaFamily::Clayton: return clayton_cdf(model.alpha(), u, v);
        case CopulaFamily::Frank: return frank_cdf(model.alpha(), u, v);
        case CopulaFamily::Gaussian:
            return bivariate_norm_cdf(norm_quantile(u), norm_quantile(v), model.alpha());
        case CopulaFamily::Independence: return u * v;
    }
    throw Error("copula: unknown family tag");
}

double copula_log_density(const CopulaModel& model, double u, double v) {
    u = clamp01(u);
    v = clamp01(v);
    if (acts_independent(model)) return 0.0;
    double ld;
    switch (model.family()) {
        case CopulaFamily::Gumbel: ld = gumbel_log_density(model.alpha(), u, v); break;
        case CopulaFamily::Clayton: ld = clayton_log_density(model.alpha(), u, v); break;
        case CopulaFamily::Frank: ld = frank_log_density(model.alpha(), u, v); break;
        case CopulaFamily::Gaussian: ld = gaussian_log_density(model.alpha(), u, v); break;
        default: ld = 0.0; break;
    }
    return std::min(ld, kMaxLogDensity);
}

double copula_density(const CopulaModel& model, double u, double v) {
    return std::exp(copula_log_density(model, u, v));
}

CopulaSample sample_copula(const CopulaModel& model, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw Error("copula: sample size must be >= 1");
    CopulaSample s;
    s.u.resize(n);
    s.v.resize(n);
    Rng rng(seed);
    const double alpha = model.alpha();

    if (acts_independent(model)) {
        for (std::size_t i = 0; i < n; ++i) {
            s.u[i] = rng.uniform();
            s.v[i] = rng.uniform();
        }
        return s;
    }

    switch (model.family()) {
        case CopulaFamily::Gaussian: {
            const double rho = alpha;
            const double c = std::sqrt(1.0 - rho * rho);
            for (std::size_t i = 0; i < n; ++i) {
                const double z1 = rng.normal();
                const double z2 = rng.normal();
                s.u[i] = norm_cdf(z1);
                s.v[i] = norm_cdf(rho * z1 + c * z2);
            }
            break;
        }
        case CopulaFamily::Clayton: {
            for (std::size_t i = 0; i < n; ++i) {
                const double u = rng.uniform();
                const double w = rng.uniform();
                const double t = std::pow(w, -alpha / (1.0 + alpha)) - 1.0;
                s.u[i] = u;
                s.v[i] = std::pow(1.0 + std::pow(u, -alpha) * t, -1.0 / alpha);
            }
            break;
        }
        case CopulaFamily::Frank: {
            const double q = std::exp(-alpha);
            for (std::size_t i = 0; i < n; ++i) {
                const double u = rng.uniform();
                const double w = rng.uniform();
                const double a = std::exp(-alpha * u);
                const double b = 1.0 + w * (q - 1.0) / (a - w * (a - 1.0));
                s.u[i] = u;
                s.v[i] = -std::log(b) / alpha;
            }
            break;
        }
        case CopulaFamily::Gumbel: {
            for (std::size_t i = 0; i < n; ++i) {
                const double u = rng.uniform();
                const double w = rng.uniform();
                double lo = 1e-15;
                double hi = 1.0 - 1e-15;
                for (int it = 0; it < 64; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (gumbel_conditional(alpha, u, mid) >= w) {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                s.u[i] = u;
                s.v[i] = 0.5 * (lo + hi);
            }
            break;
        }
        default:
            break;
    }
    return s;
}

double pseudo_log_likelihood(const CopulaModel& model, const std::vector<double>& u,
                             const std::vector<double>& v) {
    if (u.empty() || u.size() != v.size()) {
        throw Error("copula: pseudo-observations empty or length mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc += copula_log_density(model, u[i], v[i]);
    }
    return acc;
}

}  // namespace ccca
