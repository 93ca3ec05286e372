import numpy as np
exec(open("/root/proj/scripts/proto_cos2.py").read().split("rng = np.random")[0])  # reuse defs

rng = np.random.default_rng(11)
for rho in (0.3, 0.9):
    for n in (500, 2000, 8000, 20000):
        vals = []
        for t in range(12):
            z = rng.multivariate_normal([0, 0], [[1, rho], [rho, 1]], size=n)
            vals.append(cos_index(z[:, 0], z[:, 1], "c", "both"))
        print("rho %.1f n %6d: mean %.4f sd %.4f" % (rho, n, np.mean(vals), np.std(vals)))
