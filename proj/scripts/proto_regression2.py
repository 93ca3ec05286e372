import numpy as np
exec(open("/root/proj/scripts/proto_cos7.py").read().split("rng = np.random")[0])
exec(open("/root/proj/scripts/proto_pipeline.py").read().split("# ---------- regression")[0].split("import sys, time")[1])

import time
GRIDS = {"gumbel": (1.0, 20.0), "clayton": (0.001, 20.0), "frank": (0.001, 20.0)}

def rhos_curve(family, alphas, n=20000, seed=5):
    rng = np.random.default_rng(seed)
    out = []
    for a in alphas:
        u, v = sample_copula(family, a, n, rng)
        ru = avg_ranks(u) - 0.5 - 0.5/n; rv = avg_ranks(v) - 0.5 - 0.5/n
        out.append(float((ru*rv).mean() / np.sqrt((ru*ru).mean()*(rv*rv).mean())))
    return np.array(out)

for fam, (lo, hi) in GRIDS.items():
    for gridkind in ("even", "log"):
        if gridkind == "even":
            al = np.linspace(lo, hi, 50)
        else:
            al = np.geomspace(max(lo, 1e-3) if fam != "gumbel" else 1.0, hi, 50)
            if fam == "gumbel":
                al = 1.0 + np.geomspace(0.02, 19.0, 50)
        cs = rhos_curve(fam, al)
        H = np.stack([cs*cs, cs, np.ones_like(cs)], 1)
        coef, *_ = np.linalg.lstsq(H, al, rcond=None)
        # bias over interior
        span = hi - lo
        test = np.linspace(lo + 0.05*span, hi - 0.05*span, 20)
        ct = rhos_curve(fam, test, n=40000, seed=77)
        pred = np.clip(coef[0]*ct*ct + coef[1]*ct + coef[2], lo, hi)
        rel = np.abs(pred - test) / np.abs(test)
        print("%８s".replace("８","8") % fam, gridkind,
              "max-bias %.2f  #>20%%: %d/20  errs:" % (rel.max(), (rel > 0.2).sum()),
              np.round(rel, 2))
