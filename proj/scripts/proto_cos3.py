import numpy as np
from scipy.stats import norm, multivariate_normal

# asymptotic E[lambda(C(U,V),U,V)] under the Gaussian copula, via MC with the TRUE copula
def true_lam_mean(rho, n=200000, seed=0):
    rng = np.random.default_rng(seed)
    z = rng.multivariate_normal([0, 0], [[1, rho], [rho, 1]], size=n)
    u = norm.cdf(z[:, 0]); v = norm.cdf(z[:, 1])
    mv = multivariate_normal([0, 0], [[1, rho], [rho, 1]])
    C = mv.cdf(z)
    pi = u * v
    num = C - pi
    M = np.minimum(u, v) - pi
    W = np.maximum(u + v - 1.0, 0.0) - pi
    lam = np.where(num >= 0, num / M, num / W)
    return lam.mean()

for rho in (0.1, 0.3, 0.5, 0.7, 0.9):
    lm = true_lam_mean(rho)
    rs = 6 / np.pi * np.arcsin(rho / 2)
    print("rho %.1f  E[lambda] %.4f  spearman %.4f" % (rho, lm, rs))
