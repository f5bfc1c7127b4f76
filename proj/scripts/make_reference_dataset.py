#!/usr/bin/env python3
"""Construct the bundled reference dataset (data/quarterly_macro_synthetic.csv).

The dataset is synthetic but calibrated so that the full pipeline lands on
fixed, documented reference outputs, which the acceptance suite pins:

  * per-variable min/mean/max of the loaded frame,
  * ADF t-ratios (variant "none", lag 0) for levels and first differences,
  * OLS coefficients of d(REER) on d(USLR), d(M2), d(CPI), d(WIR) + const,
  * Newey-West standard errors (Bartlett kernel, L=4, no 1/T scaling,
    no small-sample adjustment),
  * the Shapiro-Wilk W of the regression residuals.

Everything here is evaluated with numpy/scipy/statsmodels only, so the
calibration is independent of the C++ implementation it later validates.
Run from the repository root:  python3 scripts/make_reference_dataset.py
"""

import numpy as np
from scipy import stats
from scipy.linalg import null_space
from scipy.optimize import least_squares

RNG = np.random.default_rng(20240615)

START_PERIOD = (2001, 4)  # 2001Q4, 80 quarters -> 2021Q3
N_QUARTERS = 80

# Calibration targets: column -> (min, mean, max, adf_level, adf_diff).
# M2 is handled in logs; the CSV stores exp(M2).
LEVEL_TARGETS = {
    "USLR": (3.250, 4.412, 8.250, -0.859, -3.265),
    "M2": (25.61, 26.75, 28.04, 3.341, -2.203),
    "CPI": (3.507, 8.699, 27.912, -2.143, -5.183),
    "WIR": (0.6506, 3.0369, 5.1061, -1.306, -3.843),
}
REER_TARGETS = (69.27, 98.21, 118.62, 0.602, -4.837)

# Where each column attains its extremes. Money and prices grow over the
# sample while rates fall; pinning the endpoints this way keeps the net
# drift of the dependent variable small enough for its range target.
EXTREME_AT = {
    "USLR": (N_QUARTERS - 1, 0),  # (argmin, argmax)
    "M2": (0, N_QUARTERS - 1),
    "CPI": (0, N_QUARTERS - 1),
    "WIR": (N_QUARTERS - 1, 0),
}

# Reference regression output (dependent d(REER)).
BETA = np.array([1.41617, -1.80743, -43.92337, -0.61448, 1.06235])
SE = np.array([0.31175, 0.71436, 10.62381, 0.29192, 1.34999])
HAC_LAG = 4
SW_W = 0.97432


def adf_none_p0(y):
    """ADF t-ratio, no deterministic terms, lag order 0."""
    y = np.asarray(y, dtype=float)
    dy = np.diff(y)
    ylag = y[:-1]
    syy = ylag @ ylag
    rho = (ylag @ dy) / syy
    resid = dy - rho * ylag
    s2 = (resid @ resid) / (len(dy) - 1)
    return rho / np.sqrt(s2 / syy)


def newey_west_se(X, e, L):
    """Standard Newey-West sandwich (Bartlett weights, no 1/T)."""
    T, k = X.shape
    omega = (X * (e**2)[:, None]).T @ X
    for lag in range(1, L + 1):
        w = 1.0 - lag / (L + 1.0)
        gamma = (X[lag:] * (e[lag:] * e[:-lag])[:, None]).T @ X[:-lag]
        omega += w * (gamma + gamma.T)
    xtx_inv = np.linalg.inv(X.T @ X)
    return np.sqrt(np.diag(xtx_inv @ omega @ xtx_inv))


def build_level_series(name, targets, i_min, i_max, shape_seed):
    """Level path hitting (min, mean, max) exactly and the two ADF targets.

    The path is min + (max-min) * w with w in [0,1]; the designated points
    carry w=0 and w=1, the rest are sigmoids of free parameters, so the
    bounds hold by construction and the optimizer only chases mean and the
    two ADF statistics.
    """
    lo, mean_t, hi, adf_level_t, adf_diff_t = targets
    n = N_QUARTERS
    rng = np.random.default_rng(shape_seed)

    # a smooth, plausible starting path oriented toward the designated extremes
    base = np.cumsum(rng.normal(0, 1, n))
    trend = np.linspace(0.0, 1.0, n) if i_max > i_min else np.linspace(1.0, 0.0, n)
    base = 0.35 * (base - base.min()) / (base.max() - base.min()) + 0.65 * trend
    free = [i for i in range(n) if i not in (i_min, i_max)]
    frac = np.clip(base[free], 0.02, 0.98)
    u0 = np.log(frac / (1 - frac))

    def assemble(u):
        w = np.empty(n)
        w[i_min], w[i_max] = 0.0, 1.0
        w[free] = 1.0 / (1.0 + np.exp(-u))
        return lo + (hi - lo) * w

    def residuals(u):
        v = assemble(u)
        return np.array([
            25.0 * (v.mean() - mean_t),
            adf_none_p0(v) - adf_level_t,
            adf_none_p0(np.diff(v)) - adf_diff_t,
        ])

    sol = least_squares(residuals, u0, method="trf", xtol=1e-15, ftol=1e-15, gtol=1e-15,
                        max_nfev=8000)
    v = assemble(sol.x)
    err = residuals(sol.x)
    print(f"  {name:5s} residuals (mean, adf_lvl, adf_diff): "
          f"{err[0]/25.0:+.2e} {err[1]:+.2e} {err[2]:+.2e}")
    return v


def build_residuals(X, dy_drift):
    """Residual vector orthogonal to the design, calibrated to the
    Newey-West SE pattern, the Shapiro-Wilk W target, and the dependent
    variable's level statistics and ADF targets."""
    T = X.shape[0]
    basis = null_space(X.T)  # 79 x 74, X' @ basis == 0

    lo_t, mean_t, hi_t, adf_level_t, adf_diff_t = REER_TARGETS
    range_t = hi_t - lo_t

    def levels(eps):
        dy = dy_drift + eps
        y_raw = np.concatenate([[0.0], np.cumsum(dy)])
        return y_raw + (lo_t - y_raw.min())

    # Ten calibration targets need nowhere near 74 knobs: search a fixed
    # 30-dimensional random subspace of the null space. Keeps the Jacobians
    # small and the iterations quick.
    n_dim = 30

    def make_subspace(rng):
        q, _ = np.linalg.qr(rng.normal(0.0, 1.0, (basis.shape[1], n_dim)))
        return basis @ q

    def residuals_smooth(z, B):
        eps = B @ z
        se = newey_west_se(X, eps, HAC_LAG)
        return np.array([
            *(10.0 * (se / SE - 1.0)),
            50.0 * (stats.shapiro(eps).statistic - SW_W),
            adf_none_p0(dy_drift + eps) - adf_diff_t,
        ])

    def residuals_full(z, B):
        eps = B @ z
        se = newey_west_se(X, eps, HAC_LAG)
        y = levels(eps)
        return np.array([
            *(10.0 * (se / SE - 1.0)),
            50.0 * (stats.shapiro(eps).statistic - SW_W),
            2.0 * ((y.max() - y.min()) - range_t),
            2.0 * (y.mean() - mean_t),
            adf_none_p0(y) - adf_level_t,
            adf_none_p0(np.diff(y)) - adf_diff_t,
        ])

    best = None
    for attempt in range(8):
        rng = np.random.default_rng(5000 + attempt)
        B = make_subspace(rng)
        z0 = rng.normal(0.0, 1.0, n_dim)
        scale = np.mean(SE / newey_west_se(X, B @ z0, HAC_LAG))
        z0 *= scale
        sol = least_squares(residuals_smooth, z0, args=(B,), method="trf",
                            xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=4000)
        sol = least_squares(residuals_full, sol.x, args=(B,), method="trf",
                            xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=8000)
        worst = np.max(np.abs(residuals_full(sol.x, B)))
        print(f"  attempt {attempt}: worst weighted residual {worst:.3e}")
        if best is None or worst < best[0]:
            best = (worst, B, sol.x)
        if worst < 1e-6:
            break
    worst, B, z = best
    if worst > 1e-4:
        raise SystemExit(f"calibration did not converge (worst residual {worst:.3e})")

    eps = B @ z
    print("  residual vector: calibration residuals:")
    labels = ["se0", "se1", "se2", "se3", "se4", "sw", "range", "mean", "adf_lvl", "adf_diff"]
    for lab, val in zip(labels, residuals_full(z, B)):
        print(f"    {lab:8s} {val:+.3e}")
    return eps


def main():
    print("stage A: regressor level paths")
    levels = {name: build_level_series(name, t, *EXTREME_AT[name], seed)
              for seed, (name, t) in enumerate(LEVEL_TARGETS.items(), start=11)}

    diffs = np.column_stack([np.diff(levels[n]) for n in LEVEL_TARGETS])
    X = np.column_stack([np.ones(N_QUARTERS - 1), diffs])

    print("stage B: dependent variable")
    dy_drift = X @ BETA
    eps = build_residuals(X, dy_drift)

    dy = dy_drift + eps
    y_raw = np.concatenate([[0.0], np.cumsum(dy)])
    reer = y_raw + (REER_TARGETS[0] - y_raw.min())

    # --- write CSV (M2 stored raw; it is logged again at load) ---
    def period_str(i):
        year, quarter = START_PERIOD
        q = quarter - 1 + i
        return f"{year + q // 4}Q{q % 4 + 1}"

    rows = ["period,REER,USLR,M2,CPI,WIR"]
    for i in range(N_QUARTERS):
        cells = [period_str(i),
                 f"{reer[i]:.17g}",
                 f"{levels['USLR'][i]:.17g}",
                 f"{np.exp(levels['M2'][i]):.17g}",
                 f"{levels['CPI'][i]:.17g}",
                 f"{levels['WIR'][i]:.17g}"]
        rows.append(",".join(cells))
    with open("data/quarterly_macro_synthetic.csv", "w") as f:
        f.write("\n".join(rows) + "\n")

    # --- verify end to end from the written file, statsmodels included ---
    print("verification from the written CSV:")
    import csv as csvmod
    with open("data/quarterly_macro_synthetic.csv") as f:
        reader = csvmod.DictReader(f)
        data = {k: [] for k in ["REER", "USLR", "M2", "CPI", "WIR"]}
        for row in reader:
            for k in data:
                data[k].append(float(row[k]))
    frame = {k: np.array(v) for k, v in data.items()}
    frame["M2"] = np.log(frame["M2"])

    for name, (lo, mean_t, hi, adf_l, adf_d) in {"REER": REER_TARGETS, **LEVEL_TARGETS}.items():
        v = frame[name]
        print(f"  {name:5s} min {v.min():9.4f} (target {lo:9.4f})  "
              f"mean {v.mean():9.4f} ({mean_t:9.4f})  max {v.max():9.4f} ({hi:9.4f})")
        print(f"        adf_level {adf_none_p0(v):+8.3f} ({adf_l:+8.3f})  "
              f"adf_diff {adf_none_p0(np.diff(v)):+8.3f} ({adf_d:+8.3f})")

    dyv = np.diff(frame["REER"])
    Xv = np.column_stack([np.ones(len(dyv))] +
                         [np.diff(frame[k]) for k in ["USLR", "M2", "CPI", "WIR"]])
    beta_hat, *_ = np.linalg.lstsq(Xv, dyv, rcond=None)
    resid = dyv - Xv @ beta_hat
    se_hat = newey_west_se(Xv, resid, HAC_LAG)
    sw = stats.shapiro(resid)
    print("  beta   ", np.array2string(beta_hat, precision=6))
    print("  target ", np.array2string(BETA, precision=6))
    print("  se     ", np.array2string(se_hat, precision=6))
    print("  target ", np.array2string(SE, precision=6))
    print("  t      ", np.array2string(beta_hat / se_hat, precision=5))
    print("  target ", np.array2string(BETA / SE, precision=5))
    print(f"  shapiro W={sw.statistic:.6f} (target {SW_W})  p={sw.pvalue:.5f}")

    try:
        import statsmodels.api as sm
        res = sm.OLS(dyv, Xv).fit(cov_type="HAC",
                                  cov_kwds={"maxlags": HAC_LAG, "use_correction": False})
        print("  statsmodels HAC bse ", np.array2string(res.bse, precision=6))
        from statsmodels.tsa.stattools import adfuller
        sm_adf = adfuller(frame["REER"], maxlag=0, regression="n")[0]
        print(f"  statsmodels adfuller(REER, n, 0) = {sm_adf:+.4f}")
    except ImportError:
        print("  (statsmodels not available; skipped cross-check)")


if __name__ == "__main__":
    main()
