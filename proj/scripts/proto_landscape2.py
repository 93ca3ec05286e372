import numpy as np, time
from scipy.stats import norm
src = open("scripts/proto_pipeline.py").read()
exec(src.split("t0 = time.time()")[0])
exec("import numpy as np\nfrom scipy.stats import norm\n" + src.split("# ---------- separation ----------")[1].split("def separate")[0])

def transform(Y):
    p, T = Y.shape
    sd = Y.std(axis=1, ddof=1)
    h = (4.0/3.0)**0.2 * T**-0.2 * sd
    P = np.empty_like(Y)
    for i in range(p):
        P[i] = norm.cdf((Y[i][:, None] - Y[i][None, :]) / h[i]).mean(axis=1)
    S_ = P.std(axis=1, ddof=1)
    H = T**(-1.0/6.0) * S_
    return P, H

def kde_at(P, H, pts):
    a1 = (P[0][None, :] - pts[0][:, None]) / H[0]
    a2 = (P[1][None, :] - pts[1][:, None]) / H[1]
    T = P.shape[1]
    return np.exp(-0.5 * (a1*a1 + a2*a2)).sum(axis=1) / (T * H[0] * H[1] * 2*np.pi)

REF_SEED = 0xC0FFEE
def kl_matched(Y, family, alpha):
    PY, HY = transform(Y)
    ru, rv = sample_copula(family, alpha, Y.shape[1], np.random.default_rng(REF_SEED))
    PR, HR = transform(np.vstack([ru, rv]))
    cy = kde_at(PY, HY, PY)
    cs = kde_at(PR, HR, PY)
    return float(np.mean(np.log(np.maximum(cy, 1e-300)) - np.log(np.maximum(cs, 1e-300))))

rng = np.random.default_rng(2024)
u, v = sample_copula("gumbel", 5.0, 500, rng)
S = np.vstack([(u-0.5)*np.sqrt(12.0), (v-0.5)*np.sqrt(12.0)])
A = np.array([[1.0, 0.8], [0.8, 1.0]])
X = A @ S
coef = np.array([35.6006, -26.4402, 2.6466]); rng_a = (1.0, 20.0)

def W_of(a_deg, b_deg):
    a = np.radians(a_deg); b = np.radians(b_deg)
    return np.array([[np.cos(a), np.sin(a)], [np.cos(b), np.sin(b)]])

print("t    a_deg   b_deg      cos     alpha      KLmatched")
for t in np.linspace(0, 1.2, 13):
    a = t * -38.66; b = 90 + t * 38.66
    W = W_of(a, b)
    Y = W @ X
    th = cos_index(Y[0], Y[1])
    al = predict(coef, rng_a, th)
    kl = kl_matched(Y, "gumbel", al)
    print("%.2f %7.1f %7.1f   %.4f  %7.3f   %.5f" % (t, a, b, th, al, kl))

W = np.eye(2)
th = cos_index(X[0], X[1]); al = predict(coef, rng_a, th)
for delta in (1e-4,):
    G = np.zeros((2,2))
    for i in range(2):
        for j in range(2):
            Wp = W.copy(); Wp[i,j] += delta
            Wm = W.copy(); Wm[i,j] -= delta
            G[i,j] = (kl_matched(Wp@X, "gumbel", al) - kl_matched(Wm@X, "gumbel", al)) / (2*delta)
    print("grad at identity:", np.round(G, 5).tolist(), "norm %.4f" % np.linalg.norm(G))
