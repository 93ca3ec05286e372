import numpy as np
from scipy.stats import norm
import sys, time
exec(open("/root/proj/scripts/proto_cos7.py").read().split("rng = np.random")[0])  # cos_index defs

# ---------- samplers (conditional-inversion; reference for C++) ----------
def sample_copula(family, alpha, n, rng):
    uu = rng.uniform(size=n); ww = rng.uniform(size=n)
    if family == "independence" or (family in ("gaussian", "frank") and abs(alpha) < 1e-8):
        return uu, ww
    if family == "gaussian":
        z1 = norm.ppf(uu); z2 = norm.ppf(ww)
        return uu, norm.cdf(alpha * z1 + np.sqrt(1 - alpha**2) * z2)
    if family == "clayton":
        v = (1.0 + uu**(-alpha) * (ww**(-alpha / (1.0 + alpha)) - 1.0))**(-1.0 / alpha)
        return uu, v
    if family == "frank":
        a = np.exp(-alpha * uu); q = np.exp(-alpha)
        b = 1.0 + ww * (q - 1.0) / (a - ww * (a - 1.0))
        return uu, -np.log(b) / alpha
    if family == "gumbel":
        # bisection on the conditional CDF
        x = -np.log(uu)
        lo = np.full(n, 1e-12); hi = np.full(n, 1.0 - 1e-12)
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            y = -np.log(mid)
            S = x**alpha + y**alpha
            A = S**(1.0 / alpha)
            cc = np.exp(-A) * S**(1.0 / alpha - 1.0) * x**(alpha - 1.0) / uu
            hi = np.where(cc >= ww, mid, hi)
            lo = np.where(cc >= ww, lo, mid)
        return uu, 0.5 * (lo + hi)
    raise ValueError(family)

CLAMP = 1e-6
def log_density(family, alpha, u, v):
    u = np.clip(u, CLAMP, 1 - CLAMP); v = np.clip(v, CLAMP, 1 - CLAMP)
    if family == "independence" or (family in ("gaussian", "frank") and abs(alpha) < 1e-8):
        return np.zeros_like(u)
    if family == "gaussian":
        x = norm.ppf(u); y = norm.ppf(v); r = alpha
        return -0.5 * np.log(1 - r * r) + (2 * r * x * y - r * r * (x * x + y * y)) / (2 * (1 - r * r))
    if family == "clayton":
        a = -alpha * np.log(u); b = -alpha * np.log(v)
        m = np.maximum(a, b)
        ls = m + np.log(np.exp(a - m) + np.exp(b - m) - np.exp(-m))
        return np.log1p(alpha) - (alpha + 1) * (np.log(u) + np.log(v)) - (1 / alpha + 2) * ls
    if family == "gumbel":
        x = -np.log(u); y = -np.log(v)
        lx = np.log(x); ly = np.log(y)
        lS = alpha * np.maximum(lx, ly) + np.log1p(np.exp(alpha * (np.minimum(lx, ly) - np.maximum(lx, ly))))
        A = np.exp(lS / alpha)
        return -A + (alpha - 1) * (lx + ly) + (1 - 2 * alpha) * lS / alpha + np.log(alpha - 1 + A) + x + y
    if family == "frank":
        q = np.exp(-alpha)
        D = (1 - q) - (1 - np.exp(-alpha * u)) * (1 - np.exp(-alpha * v))
        return np.log(np.abs(alpha)) + np.log(np.abs(1 - q)) - alpha * (u + v) - 2 * np.log(np.abs(D))
    raise ValueError(family)

# ---------- regression ----------
GRIDS = {"gumbel": (1.0, 20.0), "clayton": (0.001, 20.0), "frank": (0.001, 20.0), "gaussian": (0.01, 0.99)}

def train(family, seed=1234, npts=50, nsamp=5000):
    lo, hi = GRIDS[family]
    alphas = np.linspace(lo, hi, npts)
    rng = np.random.default_rng(seed)
    data = []
    for a in alphas:
        u, v = sample_copula(family, a, nsamp, rng)
        data.append((cos_index(u, v), a))
    c = np.array([d[0] for d in data]); al = np.array([d[1] for d in data])
    H = np.stack([c * c, c, np.ones_like(c)], axis=1)
    coef, *_ = np.linalg.lstsq(H, al, rcond=None)
    return coef, (lo, hi)

def predict(coef, rng_a, cosv):
    a = coef[0] * cosv * cosv + coef[1] * cosv + coef[2]
    return min(max(a, rng_a[0]), rng_a[1])

t0 = time.time()
coeffs = {}
for fam in GRIDS:
    coeffs[fam] = train(fam)
    print(fam, "coef", np.round(coeffs[fam][0], 4), "%.0fs" % (time.time() - t0), flush=True)

print("\n-- round trip (20 alphas x 2 seeds for speed) --", flush=True)
worst = {}
for fam, (lo, hi) in GRIDS.items():
    span = hi - lo
    alphas = np.linspace(lo + 0.05 * span, hi - 0.05 * span, 20)
    wrel = 0.0
    for i, a in enumerate(alphas):
        for s in range(2):
            rng = np.random.default_rng(999 + 71 * i + s)
            u, v = sample_copula(fam, a, 5000, rng)
            ah = predict(coeffs[fam][0], coeffs[fam][1], cos_index(u, v))
            rel = abs(ah - a) / abs(a)
            wrel = max(wrel, rel)
    worst[fam] = wrel
    print(fam, "worst rel err %.3f" % wrel, flush=True)

# ---------- separation ----------
def kl_est(Y, family, alpha):
    p, T = Y.shape
    sd = Y.std(axis=1, ddof=1)
    if np.any(sd <= 0): raise ValueError("degenerate")
    h = (4.0 / 3.0)**0.2 * T**-0.2 * sd
    P = np.empty_like(Y)
    for i in range(p):
        P[i] = norm.cdf((Y[i][:, None] - Y[i][None, :]) / h[i]).mean(axis=1)
    S = P.std(axis=1, ddof=1)
    H = (4.0 / (p + 2))**(1.0 / (p + 4)) * T**(-1.0 / (p + 4)) * S
    a1 = (P[0][:, None] - P[0][None, :]) / H[0]
    a2 = (P[1][:, None] - P[1][None, :]) / H[1]
    chat = np.exp(-0.5 * (a1 * a1 + a2 * a2)).sum(axis=1) / (T * H[0] * H[1] * 2 * np.pi)
    ls = log_density(family, alpha, P[0], P[1])
    return float(np.mean(np.log(np.maximum(chat, 1e-300)) - ls))

def separate(X, family, coef=None, rng_a=None, mode="ccca", mu=0.1, eps=1e-3, max_iter=200, fd=1e-4, S=None):
    p, T = X.shape
    W = np.eye(p)
    tr = []
    best = (np.inf, W.copy(), 0)
    for k in range(max_iter):
        Y = W @ X
        if mode == "ccca":
            th = cos_index(Y[0], Y[1])
            al = predict(coef, rng_a, th)
        else:
            u = avg_ranks(Y[0]); v = avg_ranks(Y[1])
            lo, hi = {"gumbel": (1.0 + 1e-9, 20.0), "clayton": (1e-3, 20.0),
                      "frank": (1e-3, 20.0), "gaussian": (-0.99, 0.99)}[family]
            gr = (np.sqrt(5) - 1) / 2
            a_, b_ = lo, hi
            c_ = b_ - gr * (b_ - a_); d_ = a_ + gr * (b_ - a_)
            for _ in range(40):
                fc = log_density(family, c_, u, v).sum()
                fdv = log_density(family, d_, u, v).sum()
                if fc > fdv: b_ = d_
                else: a_ = c_
                c_ = b_ - gr * (b_ - a_); d_ = a_ + gr * (b_ - a_)
            al = 0.5 * (a_ + b_)
            th = np.nan
        delta = fd * max(1.0, np.abs(W).max())
        G = np.zeros_like(W)
        for i in range(p):
            for j in range(p):
                Wp = W.copy(); Wp[i, j] += delta
                Wm = W.copy(); Wm[i, j] -= delta
                G[i, j] = (kl_est(Wp @ X, family, al) - kl_est(Wm @ X, family, al)) / (2 * delta)
        Wn = W - mu * G
        Wn /= np.linalg.norm(Wn, axis=1, keepdims=True)
        step = np.linalg.norm(Wn - W)
        klv = kl_est(Wn @ X, family, al)
        tr.append((k, klv, th, al, step))
        W = Wn
        if klv < best[0]: best = (klv, W.copy(), k)
        if step < eps:
            return W, tr, True
    return best[1], tr, False

def snr_isr(W, A, S, X):
    G = W @ A
    Y = W @ X
    # match by |corr|
    cor = np.corrcoef(np.vstack([Y, S]))[:2, 2:]
    perm = [0, 1] if abs(cor[0, 0]) + abs(cor[1, 1]) >= abs(cor[0, 1]) + abs(cor[1, 0]) else [1, 0]
    snrs = []
    for i in range(2):
        y = Y[perm[i]]
        g = (S[i] @ y) / (y @ y)
        snrs.append(10 * np.log10((S[i] @ S[i]) / ((S[i] - g * y) @ (S[i] - g * y))))
    Gp = G[perm, :]
    Gp = Gp / np.diag(Gp)[:, None]
    isr = (Gp**2).sum() - 2.0
    return snrs, isr / 2.0, perm

A = np.array([[1.0, 0.8], [0.8, 1.0]])
print("\n-- V-A separation, T=500 --", flush=True)
for fam, al in (("gumbel", 5.0), ("clayton", 5.0), ("frank", 5.0), ("gaussian", 0.7)):
    rng = np.random.default_rng(2024)
    u, v = sample_copula(fam, al, 500, rng)
    S = np.vstack([(u - 0.5) * np.sqrt(12.0), (v - 0.5) * np.sqrt(12.0)])
    X = A @ S
    t1 = time.time()
    W, tr, conv = separate(X, fam, coeffs[fam][0], coeffs[fam][1], "ccca")
    snrs, isr, perm = snr_isr(W, A, S, X)
    kls = [t[1] for t in tr]
    dec = sum(1 for i in range(1, len(kls)) if kls[i] <= kls[i-1]) / max(1, len(kls)-1)
    print("%８s conv=%s iters=%d isr=%.4f snr=%.1f/%.1f dB kl-dec=%.2f (%.0fs)" %
          (fam, conv, len(tr), isr, snrs[0], snrs[1], dec, time.time() - t1), flush=True)

print("\n-- CCA baseline gumbel --", flush=True)
rng = np.random.default_rng(2024)
u, v = sample_copula("gumbel", 5.0, 500, rng)
S = np.vstack([(u - 0.5) * np.sqrt(12.0), (v - 0.5) * np.sqrt(12.0)])
X = A @ S
t1 = time.time()
W, tr, conv = separate(X, "gumbel", mode="cca")
snrs, isr, perm = snr_isr(W, A, S, X)
print("cca conv=%s iters=%d isr=%.4f snr=%.1f/%.1f dB (%.0fs)" %
      (conv, len(tr), isr, snrs[0], snrs[1], time.time() - t1), flush=True)
