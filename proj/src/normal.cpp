#include "ccca/normal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ccca {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
constexpr double kInvSqrt2Pi = 0.39894228040143267793994605993438;

}  // namespace

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -std::numeric_limits<double>::infinity();
        if (p == 1.0) return std::numeric_limits<double>::infinity();
        return std::numeric_limits<double>::quiet_NaN();
    }

    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};

    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // one Halley refinement step
    const double e = norm_cdf(x) - p;
    const double u = e * std::sqrt(kTwoPi) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

namespace {

struct GlNode {
    double w, x;
};

// Gauss-Legendre rules on (-1, 1); only the negative-x half is stored, the
// loop mirrors each node.
const GlNode kGl6[] = {{0.1713244923791705, -0.9324695142031522},
                       {0.3607615730481384, -0.6612093864662647},
                       {0.4679139345726904, -0.2386191860831970}};
const GlNode kGl12[] = {{0.04717533638651177, -0.9815606342467191},
                        {0.1069393259953183, -0.9041172563704750},
                        {0.1600783285433464, -0.7699026741943050},
                        {0.2031674267230659, -0.5873179542866171},
                        {0.2334925365383547, -0.3678314989981802},
                        {0.2491470458134029, -0.1252334085114692}};
const GlNode kGl20[] = {{0.01761400713915212, -0.9931285991850949},
                        {0.04060142980038694, -0.9639719272779138},
                        {0.06267204833410906, -0.9122344282513259},
                        {0.08327674157670475, -0.8391169718222188},
                        {0.1019301198172404, -0.7463319064601508},
                        {0.1181945319615184, -0.6360536807265150},
                        {0.1316886384491766, -0.5108670019508271},
                        {0.1420961093183821, -0.3737060887154196},
                        {0.1491729864726037, -0.2277858511416451},
                        {0.1527533871307259, -0.07652652113349733}};

// P(X > dh, Y > dk), upper-quadrant probability.
double bvnu(double dh, double dk, double r) {
    if (std::isinf(dh) && dh > 0) return 0.0;
    if (std::isinf(dk) && dk > 0) return 0.0;
    if (std::isinf(dh)) return std::isinf(dk) ? 1.0 : norm_cdf(-dk);
    if (std::isinf(dk)) return norm_cdf(-dh);
    if (r == 0.0) return norm_cdf(-dh) * norm_cdf(-dk);

    const double tp = kTwoPi;
    double h = dh;
    double k = dk;
    double hk = h * k;
    double bvn = 0.0;

    const GlNode* rule = kGl6;
    int nn = 3;
    if (std::abs(r) >= 0.75) {
        rule = kGl20;
        nn = 10;
    } else if (std::abs(r) >= 0.3) {
        rule = kGl12;
        nn = 6;
    }

    if (std::abs(r) < 0.925) {
        const double hs = (h * h + k * k) / 2.0;
        const double asr = std::asin(r) / 2.0;
        for (int i = 0; i < nn; ++i) {
            for (double sgn : {-1.0, 1.0}) {
                const double sn = std::sin(asr * (sgn * rule[i].x + 1.0));
                bvn += rule[i].w * std::exp((sn * hk - hs) / (1.0 - sn * sn));
            }
        }
        bvn = bvn * asr / tp + norm_cdf(-h) * norm_cdf(-k);
    } else {
        if (r < 0.0) {
            k = -k;
            hk = -hk;
        }
        if (std::abs(r) < 1.0) {
            const double as = (1.0 - r) * (1.0 + r);
            double a = std::sqrt(as);
            const double bs = (h - k) * (h - k);
            const double c = (4.0 - hk) / 8.0;
            const double d = (12.0 - hk) / 16.0;
            double asr = -(bs / as + hk) / 2.0;
            if (asr > -100.0) {
                bvn = a * std::exp(asr) *
                      (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
            }
            if (-hk < 100.0) {
                const double b = std::sqrt(bs);
                const double sp = std::sqrt(tp) * norm_cdf(-b / a);
                bvn -= std::exp(-hk / 2.0) * sp * b * (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
            }
            a /= 2.0;
            for (int i = 0; i < nn; ++i) {
                for (double sgn : {-1.0, 1.0}) {
                    const double x = a * (sgn * rule[i].x + 1.0);
                    const double xs = x * x;
                    const double rs = std::sqrt(1.0 - xs);
                    asr = -(bs / xs + hk) / 2.0;
                    if (asr > -100.0) {
                        const double sp = 1.0 + c * xs * (1.0 + d * xs);
                        const double ep = std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs;
                        bvn += a * rule[i].w * std::exp(asr) * (ep - sp);
                    }
                }
            }
            bvn = -bvn / tp;
        }
        if (r > 0.0) {
            bvn += norm_cdf(-std::max(h, k));
        } else {
            bvn = -bvn;
            if (k > h) bvn += norm_cdf(k) - norm_cdf(h);
        }
    }
    return std::clamp(bvn, 0.0, 1.0);
}

}  // namespace

double bivariate_norm_cdf(double x, double y, double rho) { return bvnu(-x, -y, rho); }

}  // namespace ccca
