import numpy as np, time
src = open("scripts/proto_pipeline.py").read()
exec(src.split("t0 = time.time()")[0]); exec("import numpy as np\nfrom scipy.stats import norm\n" + src.split("# ---------- separation ----------")[1].split("def separate")[0])

rng = np.random.default_rng(2024)
u, v = sample_copula("gumbel", 5.0, 500, rng)
S = np.vstack([(u - 0.5) * np.sqrt(12.0), (v - 0.5) * np.sqrt(12.0)])
A = np.array([[1.0, 0.8], [0.8, 1.0]])
X = A @ S

def W_of(a_deg, b_deg):
    a = np.radians(a_deg); b = np.radians(b_deg)
    return np.array([[np.cos(a), np.sin(a)], [np.cos(b), np.sin(b)]])

# coefficients for gumbel (approximate from earlier run)
coef = np.array([35.6006, -26.4402, 2.6466]); rng_a = (1.0, 20.0)

# path from identity (0,90) to normalized A^-1 (-38.66, 128.66)
print("t    a_deg   b_deg      cos     alpha      KL")
for t in np.linspace(0, 1.2, 13):
    a = 0 + t * (-38.66 - 0); b = 90 + t * (128.66 - 90)
    W = W_of(a, b)
    Y = W @ X
    th = cos_index(Y[0], Y[1])
    al = predict(coef, rng_a, th)
    kl = kl_est(Y, "gumbel", al)
    print("%.2f %7.1f %7.1f   %.4f  %7.3f   %.5f" % (t, a, b, th, al, kl))

# gradient at identity
W = np.eye(2)
th = cos_index(X[0], X[1]); al = predict(coef, rng_a, th)
print("\nidentity: cos %.4f alpha %.3f" % (th, al))
for delta in (1e-3, 1e-4, 1e-5):
    G = np.zeros((2, 2))
    for i in range(2):
        for j in range(2):
            Wp = W.copy(); Wp[i, j] += delta
            Wm = W.copy(); Wm[i, j] -= delta
            G[i, j] = (kl_est(Wp @ X, "gumbel", al) - kl_est(Wm @ X, "gumbel", al)) / (2 * delta)
    print("delta %g grad:" % delta, np.round(G, 5).tolist(), " norm %.4f" % np.linalg.norm(G))
