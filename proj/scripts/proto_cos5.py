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

def split_runs(seq):
    n = len(seq); runs = []; start, direction = 0, 0
    for j in range(1, n):
        d = seq[j] - seq[j - 1]
        if d > 0:
            if direction < 0: runs.append((start, j - 1)); start, direction = j - 1, 1
            else: direction = 1
        elif d < 0:
            if direction > 0: runs.append((start, j - 1)); start, direction = j - 1, -1
            else: direction = -1
    runs.append((start, n - 1))
    return runs

def cos_index(x, y):
    n = len(x)
    u = avg_ranks(np.asarray(x, float)); v = avg_ranks(np.asarray(y, float))
    order = np.lexsort((v, u))
    us, vs = u[order], v[order]
    c = ((u[None, :] <= us[:, None]) & (v[None, :] <= vs[:, None])).sum(1) / n

    cand = split_runs(vs)                    # candidate domains: monotone pieces of the scatter
    confirmed = []
    for i in range(len(cand) - 1):
        e = cand[i][1]
        ni = cand[i][1] - cand[i][0] + 1
        nj = cand[i + 1][1] - cand[i + 1][0] + 1
        if 1 <= e <= n - 2 and ni + nj > 4 \
           and abs(c[e] - c[e - 1]) <= 1.0 / n and abs(c[e + 1] - c[e]) <= 1.0 / n:
            confirmed.append(e)

    bounds = [0] + confirmed + [n - 1]
    doms = [(bounds[k], bounds[k + 1]) for k in range(len(bounds) - 1)] if len(bounds) > 2 else [(0, n - 1)]
    m = len(doms)

    total = 0.0
    for k, (a, b) in enumerate(doms):
        nk = b - a + 1
        at_opt = (k > 0) or (k < m - 1 and True)
        touches = (a in confirmed) or (b in confirmed)
        if touches:
            g = 1.0
        else:
            num = den_u = den_l = 0.0
            for j in range(a, b + 1):
                pi = us[j] * vs[j]
                num += c[j] - pi
                den_u += min(us[j], vs[j]) - pi
                den_l += max(us[j] + vs[j] - 1.0, 0.0) - pi
            den = den_u if num >= 0 else den_l
            g = 1.0 if abs(den) < 1e-14 else num / den
        total += nk * g
    return total / (n + m - 1)

rng = np.random.default_rng(42)
x = rng.uniform(size=1000)
print("y=x      :", cos_index(x, x))
print("y=x^3    :", cos_index(x, x**3))
print("y=x^0.25 :", cos_index(x, x**0.25))
print("y=|x-.5| :", cos_index(x, np.abs(x - 0.5)))
print("y=sin4pix:", cos_index(x, np.sin(4 * np.pi * x)))

vals = [cos_index(rng.uniform(size=5000), rng.uniform(size=5000)) for _ in range(60)]
vals = np.sort(vals)
print("indep n=5000: mean %.4f p95 %.4f max %.4f" % (np.mean(vals), vals[int(0.95*60)-1], vals[-1]))

for rho in (0.3, 0.5, 0.7, 0.9):
    hits, errs = 0, []
    for t in range(60):
        z = rng.multivariate_normal([0, 0], [[1, rho], [rho, 1]], size=5000)
        cc = cos_index(z[:, 0], z[:, 1])
        errs.append(cc - rho); hits += abs(cc - rho) <= 0.05
    print("rho=%.1f: hit %d/60  bias %+0.4f  sd %.4f" % (rho, hits, np.mean(errs), np.std(errs)))
