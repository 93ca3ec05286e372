import numpy as np, time
from scipy.stats import norm
src = open("scripts/proto_pipeline.py").read()
exec(src.split("t0 = time.time()")[0])
exec("import numpy as np\nfrom scipy.stats import norm\n" + src.split("# ---------- separation ----------")[1].split("def separate")[0])
exec(open("scripts/proto_landscape2.py").read().split("rng = np.random.default_rng(2024)")[0].split('exec("import numpy')[0].replace(
 'src = open("scripts/proto_pipeline.py").read()','').replace('exec(src.split("t0 = time.time()")[0])',''))

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

REF_SEED = 777001
def kl_matched(Y, family, alpha):
    PY, HY = transform(Y)
    ru, rv = sample_copula(family, alpha, Y.shape[1], np.random.default_rng(REF_SEED))
    PR, HR = transform(np.vstack([ru, rv]))
    cy = kde_at(PY, HY, PY)
    cs = kde_at(PR, HR, PY)
    return float(np.mean(np.log(np.maximum(cy, 1e-300)) - np.log(np.maximum(cs, 1e-300))))

def separate2(X, family, coef=None, rng_a=None, mode="ccca", mu=2.0, eps=1e-3, max_iter=200, fd=1e-4):
    p, T = X.shape
    W = np.eye(p)
    tr = []
    best = (np.inf, W.copy())
    for k in range(max_iter):
        Y = W @ X
        if mode == "ccca":
            th = cos_index(Y[0], Y[1]); al = predict(coef, rng_a, th)
        else:
            u = avg_ranks(Y[0]); v = avg_ranks(Y[1])
            lo, hi = {"gumbel": (1.0+1e-9, 20.0), "clayton": (1e-3, 20.0),
                      "frank": (1e-3, 20.0), "gaussian": (-0.99, 0.99)}[family]
            gr = (np.sqrt(5)-1)/2
            a_, b_ = lo, hi
            for _ in range(40):
                c_ = b_ - gr*(b_-a_); d_ = a_ + gr*(b_-a_)
                if log_density(family, c_, u, v).sum() > log_density(family, d_, u, v).sum(): b_ = d_
                else: a_ = c_
            al = 0.5*(a_+b_); th = np.nan
        delta = fd * max(1.0, np.abs(W).max())
        G = np.zeros_like(W)
        for i in range(p):
            for j in range(p):
                Wp = W.copy(); Wp[i,j] += delta
                Wm = W.copy(); Wm[i,j] -= delta
                G[i,j] = (kl_matched(Wp@X, family, al) - kl_matched(Wm@X, family, al)) / (2*delta)
        Wn = W - mu*G
        Wn /= np.linalg.norm(Wn, axis=1, keepdims=True)
        step = np.linalg.norm(Wn - W)
        klv = kl_matched(Wn@X, family, al)
        tr.append((k, klv, th, al, step))
        W = Wn
        if klv < best[0]: best = (klv, W.copy())
        if step < eps: return W, tr, True
    return best[1], tr, False

def snr_isr(W, A, S, X):
    G = W @ A; Y = W @ X
    cor = np.corrcoef(np.vstack([Y, S]))[:2, 2:]
    perm = [0,1] if abs(cor[0,0])+abs(cor[1,1]) >= abs(cor[0,1])+abs(cor[1,0]) else [1,0]
    snrs = []
    for i in range(2):
        y = Y[perm[i]]
        g = (S[i]@y)/(y@y)
        snrs.append(10*np.log10((S[i]@S[i])/((S[i]-g*y)@(S[i]-g*y))))
    Gp = G[perm,:]; Gp = Gp/np.diag(Gp)[:,None]
    return snrs, ((Gp**2).sum()-2.0)/2.0, perm

coeffs = {}
t0 = time.time()
for fam in GRIDS: coeffs[fam] = train(fam)
print("trained %.0fs" % (time.time()-t0), flush=True)

A = np.array([[1.0,0.8],[0.8,1.0]])
for mu in (1.0, 2.0):
    print("== mu", mu, flush=True)
    for fam, al in (("gumbel",5.0),("clayton",5.0),("frank",5.0),("gaussian",0.7)):
        rng = np.random.default_rng(2024)
        u, v = sample_copula(fam, al, 500, rng)
        S = np.vstack([(u-0.5)*np.sqrt(12.0),(v-0.5)*np.sqrt(12.0)])
        X = A @ S
        t1 = time.time()
        W, tr, conv = separate2(X, fam, coeffs[fam][0], coeffs[fam][1], "ccca", mu=mu)
        snrs, isr, perm = snr_isr(W, A, S, X)
        print("%8s conv=%s iters=%3d isr=%.4f snr=%.1f/%.1f dB (%.0fs)" %
              (fam, conv, len(tr), isr, snrs[0], snrs[1], time.time()-t1), flush=True)

print("== cca gumbel mu=2", flush=True)
rng = np.random.default_rng(2024)
u, v = sample_copula("gumbel", 5.0, 500, rng)
S = np.vstack([(u-0.5)*np.sqrt(12.0),(v-0.5)*np.sqrt(12.0)])
X = A @ S
W, tr, conv = separate2(X, "gumbel", mode="cca", mu=2.0)
snrs, isr, perm = snr_isr(W, A, S, X)
print("cca conv=%s iters=%3d isr=%.4f snr=%.1f/%.1f dB" % (conv, len(tr), isr, snrs[0], snrs[1]), flush=True)
