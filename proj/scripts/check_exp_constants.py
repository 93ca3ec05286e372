# Dev-time check: verify the Pade coefficients used by the AVX2 exp kernel
# against the libm exp over the full double range.
import numpy as np

P = [1.26177193074810590878e-4, 3.02994407707441961300e-2, 9.99999999999999999910e-1]
Q = [3.00198505138664455042e-6, 2.52448340349684104192e-3, 2.27265548208155028766e-1, 2.00000000000000000005e0]
C1 = 6.93145751953125e-1
C2 = 1.42860682030941723212e-6
LOG2E = 1.4426950408889634073599

def exp_pade(x):
    x = np.asarray(x, dtype=np.float64)
    n = np.rint(x * LOG2E)
    r = x - n * C1
    r = r - n * C2
    rr = r * r
    px = r * ((P[0] * rr + P[1]) * rr + P[2])
    qx = ((Q[0] * rr + Q[1]) * rr + Q[2]) * rr + Q[3]
    e = px / (qx - px)
    e = 1.0 + 2.0 * e
    return np.ldexp(e, n.astype(np.int64))

x = np.random.default_rng(1).uniform(-708, 709, 2_000_000)
x = np.concatenate([x, np.linspace(-0.5, 0.5, 100000), np.array([0.0, 1.0, -1.0, 700.0, -700.0])])
ref = np.exp(x)
got = exp_pade(x)
rel = np.abs(got - ref) / ref
print("max rel err:", rel.max())
