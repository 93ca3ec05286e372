import numpy as np

def avg_ranks(x):
    n = len(x)
    order = np.argsort(x, kind="stable")
    ranks = np.empty(n)
    i = 0
    sx = x[order]
    while i < n:
        j = i
        while j + 1 < n and sx[j + 1] == sx[i]:
            j += 1
        ranks[order[i:j + 1]] = 0.5 * (i + j) + 1.0
        i = j + 1
    return ranks / n

def lam(cv, uu, vv):
    num = cv - uu * vv
    den = (min(uu, vv) - uu * vv) if cv >= uu * vv else (max(uu + vv - 1.0, 0.0) - uu * vv)
    if abs(den) < 1e-14:
        return 1.0 if abs(num) < 1e-14 else 0.0
    return num / den

def split_runs(seq):
    n = len(seq)
    runs = []
    start, direction = 0, 0
    for j in range(1, n):
        d = seq[j] - seq[j - 1]
        if d > 0:
            if direction < 0:
                runs.append((start, j - 1)); start, direction = j - 1, 1
            else:
                direction = 1
        elif d < 0:
            if direction > 0:
                runs.append((start, j - 1)); start, direction = j - 1, -1
            else:
                direction = -1
    runs.append((start, n - 1))
    return runs

def cos_index(x, y, run_on="c", locopt="both", stats=None):
    n = len(x)
    u = avg_ranks(np.asarray(x, float))
    v = avg_ranks(np.asarray(y, float))
    order = np.lexsort((v, u))
    us, vs = u[order], v[order]
    c = ((u[None, :] <= us[:, None]) & (v[None, :] <= vs[:, None])).sum(1) / n
    runs = split_runs(c if run_on == "c" else vs)
    m = len(runs)
    gammas = np.empty(m)
    for i, (a, b) in enumerate(runs):
        seg = c[a:b + 1]
        kmin = a + int(np.argmin(seg)); kmax = a + int(np.argmax(seg))
        gammas[i] = 0.5 * (lam(c[kmin], us[kmin], vs[kmin]) + lam(c[kmax], us[kmax], vs[kmax]))
    base = gammas.copy()
    if locopt != "off":
        for i in range(m - 1):
            e = runs[i][1]
            ni = runs[i][1] - runs[i][0] + 1
            nj = runs[i + 1][1] - runs[i + 1][0] + 1
            if 1 <= e <= n - 2 and ni + nj > 4:
                if abs(c[e] - c[e - 1]) <= 1.0 / n and abs(c[e + 1] - c[e]) <= 1.0 / n:
                    gammas[i] = 1.0
                    if locopt == "both":
                        gammas[i + 1] = 1.0
    sizes = np.array([b - a + 1 for a, b in runs])
    if stats is not None:
        stats["m"] = m
        stats["meanlen"] = sizes.mean()
        stats["bumped"] = int((gammas > base).sum())
        stats["cos_nobump"] = float((sizes * base).sum() / (n + m - 1))
    return float((sizes * gammas).sum() / (n + m - 1))

rng = np.random.default_rng(3)

for run_on in ("c", "v"):
    for locopt in ("both", "one", "off"):
        # quick: functional + independence + gaussian 0.3/0.9, 30 trials
        x = rng.uniform(size=1000)
        f1 = cos_index(x, x, run_on, locopt)
        f2 = cos_index(x, np.abs(x - 0.5), run_on, locopt)
        iv, g3, g9 = [], [], []
        for t in range(30):
            iv.append(cos_index(rng.uniform(size=3000), rng.uniform(size=3000), run_on, locopt))
            z = rng.multivariate_normal([0, 0], [[1, .3], [.3, 1]], size=3000)
            g3.append(cos_index(z[:, 0], z[:, 1], run_on, locopt))
            z = rng.multivariate_normal([0, 0], [[1, .9], [.9, 1]], size=3000)
            g9.append(cos_index(z[:, 0], z[:, 1], run_on, locopt))
        print("%s/%4s  y=x %.3f  |x| %.3f  indep %.3f  rho.3 %.3f(sd%.3f)  rho.9 %.3f" %
              (run_on, locopt, f1, f2, np.mean(iv), np.mean(g3), np.std(g3), np.mean(g9)))

# instrument one gaussian trial
st = {}
z = rng.multivariate_normal([0, 0], [[1, .3], [.3, 1]], size=3000)
cos_index(z[:, 0], z[:, 1], "c", "both", st)
print("c-runs rho=.3 stats:", st)
st = {}
cos_index(z[:, 0], z[:, 1], "v", "both", st)
print("v-runs rho=.3 stats:", st)
