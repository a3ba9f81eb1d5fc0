"""Float kernels for the integrability least-squares problem.

The unknown is a ``d x d`` matrix ``J`` flattened row-major into ``x``
(``x[r*d + c] = J[r, c]``). The residual vector stacks

* ``(J @ J + I)[r, c]`` at row ``r*d + c``, then
* ``N(e_a, e_b)[k]`` for pairs ``a < b`` in lexicographic order, at row
  ``d*d + pair*d + k``.

Two implementations of every kernel exist: ``nb_*`` (loop form, compiled with
numba when available) and ``np_*`` (vectorised numpy). Setting
``LIE_CX_NO_JIT=1`` selects the numpy path.
"""

import os

import numpy as np

try:
    import numba as nb

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

JIT_DISABLED = os.environ.get("LIE_CX_NO_JIT", "").strip().lower() in {"1", "true", "yes", "on"}
USE_JIT = HAVE_NUMBA and not JIT_DISABLED

MU_MIN = 1e-20


def njit(*args, **kwargs):
    if USE_JIT:
        return nb.njit(*args, **kwargs)
    return lambda func: func


def n_residuals(d):
    return d * d + d * (d * (d - 1) // 2)


@njit(cache=True, nogil=True)
def nb_residuals(c, x):
    d = c.shape[0]
    J = x.reshape((d, d))
    out = np.zeros(d * d + d * (d * (d - 1) // 2))
    for r in range(d):
        for col in range(d):
            s = 1.0 if r == col else 0.0
            for k in range(d):
                s += J[r, k] * J[k, col]
            out[r * d + col] = s
    S = np.empty(d)
    row = d * d
    for a in range(d):
        for b in range(a + 1, d):
            for m in range(d):
                s = 0.0
                for i in range(d):
                    s += J[i, a] * c[i, b, m] + J[i, b] * c[a, i, m]
                S[m] = s
            for k in range(d):
                v = c[a, b, k]
                for m in range(d):
                    v += J[k, m] * S[m]
                for i in range(d):
                    jia = J[i, a]
                    if jia != 0.0:
                        for j in range(d):
                            v -= jia * J[j, b] * c[i, j, k]
                out[row + k] = v
            row += d
    return out


@njit(cache=True, nogil=True)
def nb_residual_jacobian(c, x):
    d = c.shape[0]
    n = d * d
    J = x.reshape((d, d))
    r_vec = nb_residuals(c, x)
    jac = np.zeros((r_vec.shape[0], n))
    for r in range(d):
        for col in range(d):
            row = r * d + col
            for q in range(d):
                jac[row, r * d + q] += J[q, col]
            for p in range(d):
                jac[row, p * d + col] += J[r, p]
    S = np.empty(d)
    row0 = n
    for a in range(d):
        for b in range(a + 1, d):
            for m in range(d):
                s = 0.0
                for i in range(d):
                    s += J[i, a] * c[i, b, m] + J[i, b] * c[a, i, m]
                S[m] = s
            for k in range(d):
                row = row0 + k
                for q in range(d):
                    jac[row, k * d + q] += S[q]
                for p in range(d):
                    ga = 0.0
                    gb = 0.0
                    for m in range(d):
                        ga += J[k, m] * c[p, b, m]
                        gb += J[k, m] * c[a, p, m]
                    for j in range(d):
                        ga -= J[j, b] * c[p, j, k]
                        gb -= J[j, a] * c[j, p, k]
                    jac[row, p * d + a] += ga
                    jac[row, p * d + b] += gb
            row0 += d
    return r_vec, jac


@njit(cache=True, nogil=True)
def nb_lm(c, x0, free, max_iters, tol, mu0, mu_up, mu_down, mu_max):
    x = x0.copy()
    r, jac = nb_residual_jacobian(c, x)
    f = np.dot(r, r)
    mu = mu0
    nf = free.shape[0]
    it = 0
    while it < max_iters and f > tol and nf > 0:
        it += 1
        jf = np.empty((jac.shape[0], nf))
        for s in range(nf):
            jf[:, s] = jac[:, free[s]]
        a = jf.T @ jf
        g = jf.T @ r
        for s in range(nf):
            a[s, s] += mu
        try:
            step = np.linalg.solve(a, -g)
        except Exception:  # singular at tiny mu: treat as a rejected step
            mu *= mu_up
            if mu > mu_max:
                break
            continue
        trial = x.copy()
        for s in range(nf):
            trial[free[s]] += step[s]
        rt = nb_residuals(c, trial)
        ft = np.dot(rt, rt)
        if ft < f:
            x = trial
            f = ft
            mu = max(mu * mu_down, MU_MIN)
            r, jac = nb_residual_jacobian(c, x)
        else:
            mu *= mu_up
            if mu > mu_max:
                break
    return x, f, it


def _pairs(d):
    return np.triu_indices(d, 1)


def np_residuals(c, x):
    d = c.shape[0]
    J = x.reshape(d, d)
    sq = J @ J + np.eye(d)
    S = np.einsum("ia,ibm->abm", J, c) + np.einsum("jb,ajm->abm", J, c)
    T3 = np.einsum("ia,jb,ijk->abk", J, J, c, optimize=True)
    N = c + np.einsum("km,abm->abk", J, S) - T3
    ia, ib = _pairs(d)
    return np.concatenate([sq.ravel(), N[ia, ib].ravel()])


def np_residual_jacobian(c, x):
    d = c.shape[0]
    J = x.reshape(d, d)
    eye = np.eye(d)
    r_vec = np_residuals(c, x)
    # d(J@J)[r, col] / dJ[p, q] = delta_rp J[q, col] + J[r, p] delta_q,col
    dsq = np.einsum("rp,qc->rcpq", eye, J) + np.einsum("rp,qc->rcpq", J, eye)
    S = np.einsum("ia,ibm->abm", J, c) + np.einsum("jb,ajm->abm", J, c)
    # G1[p, b, k]: coefficient of delta_qa; G2[a, p, k]: coefficient of delta_qb
    G1 = np.einsum("km,pbm->pbk", J, c) - np.einsum("jb,pjk->pbk", J, c)
    G2 = np.einsum("km,apm->apk", J, c) - np.einsum("ja,jpk->apk", J, c)
    dN = np.einsum("kp,abq->abkpq", eye, S)
    dN += np.einsum("qa,pbk->abkpq", eye, G1)
    dN += np.einsum("qb,apk->abkpq", eye, G2)
    ia, ib = _pairs(d)
    jac = np.concatenate([dsq.reshape(d * d, d * d), dN[ia, ib].reshape(-1, d * d)])
    return r_vec, jac


def np_lm(c, x0, free, max_iters, tol, mu0, mu_up, mu_down, mu_max):
    x = np.array(x0, dtype=float)
    r, jac = np_residual_jacobian(c, x)
    f = float(r @ r)
    mu = mu0
    it = 0
    while it < max_iters and f > tol and free.size:
        it += 1
        jf = jac[:, free]
        a = jf.T @ jf + mu * np.eye(free.size)
        try:
            step = np.linalg.solve(a, -(jf.T @ r))
        except np.linalg.LinAlgError:
            mu *= mu_up
            if mu > mu_max:
                break
            continue
        trial = x.copy()
        trial[free] += step
        rt = np_residuals(c, trial)
        ft = float(rt @ rt)
        if ft < f:
            x, f = trial, ft
            mu = max(mu * mu_down, MU_MIN)
            r, jac = np_residual_jacobian(c, x)
        else:
            mu *= mu_up
            if mu > mu_max:
                break
    return x, f, it


if USE_JIT:
    residuals, residual_jacobian, lm = nb_residuals, nb_residual_jacobian, nb_lm
else:
    residuals, residual_jacobian, lm = np_residuals, np_residual_jacobian, np_lm


def backend():
    return "numba" if USE_JIT else "numpy"
