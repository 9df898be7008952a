#!/usr/bin/env python3
"""Generate STO-3G FCIDUMP fixtures with SCF/FCI sidecar data.

Self-contained restricted Hartree-Fock over s/p Gaussians
(McMurchie-Davidson integrals) followed by a determinant-basis FCI in
the (n_alpha, n_beta) sector.  Orbitals are symmetry-blocked so that
ORBSYM labels are well defined even for degenerate pi pairs.

Usage: python3 scripts/gen_fixtures.py [outdir]
"""

import itertools
import json
import math
import os
import sys

import numpy as np
from scipy.special import hyp1f1

ANGSTROM_TO_BOHR = 1.8897259886

# STO-3G expansion of Slater 1s/2s/2p functions with unit exponent.
# Scaling a Slater exponent zeta multiplies the Gaussian exponents by zeta^2.
STO3G_1S = [(2.227660584, 0.154328967), (0.405771156, 0.535328142),
            (0.109818000, 0.444634542)]
STO3G_2S = [(0.994203000, -0.099967230), (0.231031000, 0.399512830),
            (0.075138600, 0.700115470)]
STO3G_2P = [(0.994203000, 0.155916270), (0.231031000, 0.607683720),
            (0.075138600, 0.391957390)]

# (Z, zeta_1s, zeta_2sp) from Hehre, Stewart, Pople standard scalings.
ELEMENTS = {
    'H':  (1, 1.24, None),
    'Li': (3, 2.69, 0.80),
    'Be': (4, 3.68, 1.15),
    'B':  (5, 4.68, 1.50),
}


def normalized_primitive_coeff(alpha, l, m, n, c):
    # Cartesian GTO normalization
    fact2 = lambda k: 1 if k <= 0 else np.prod(np.arange(k, 0, -2, dtype=float))
    norm = (2 * alpha / np.pi) ** 0.75 * (4 * alpha) ** ((l + m + n) / 2.0) \
        / math.sqrt(fact2(2 * l - 1) * fact2(2 * m - 1) * fact2(2 * n - 1))
    return c * norm


class BasisFunction:
    def __init__(self, center, lmn, prims, tag):
        self.center = np.asarray(center, dtype=float)
        self.lmn = lmn
        self.prims = [(a, normalized_primitive_coeff(a, *lmn, c)) for a, c in prims]
        self.tag = tag  # (atom index, shell name, component)

    def normalize_contraction(self):
        s = overlap_bf(self, self)
        scale = 1.0 / math.sqrt(s)
        self.prims = [(a, c * scale) for a, c in self.prims]


def build_basis(atoms):
    """atoms: list of (symbol, xyz_bohr). Returns basis functions."""
    bfs = []
    for ai, (sym, xyz) in enumerate(atoms):
        Z, z1s, z2sp = ELEMENTS[sym]
        bfs.append(BasisFunction(xyz, (0, 0, 0),
                                 [(a * z1s**2, c) for a, c in STO3G_1S], (ai, '1s', '')))
        if z2sp is not None:
            bfs.append(BasisFunction(xyz, (0, 0, 0),
                                     [(a * z2sp**2, c) for a, c in STO3G_2S], (ai, '2s', '')))
            for comp, lmn in (('x', (1, 0, 0)), ('y', (0, 1, 0)), ('z', (0, 0, 1))):
                bfs.append(BasisFunction(xyz, lmn,
                                         [(a * z2sp**2, c) for a, c in STO3G_2P],
                                         (ai, '2p', comp)))
    for bf in bfs:
        bf.normalize_contraction()
    return bfs


def hermite_E(i, j, t, Qx, a, b):
    p = a + b
    q = a * b / p
    if t < 0 or t > i + j:
        return 0.0
    if i == j == t == 0:
        return math.exp(-q * Qx * Qx)
    if j == 0:
        return (1 / (2 * p)) * hermite_E(i - 1, j, t - 1, Qx, a, b) \
            - (q * Qx / a) * hermite_E(i - 1, j, t, Qx, a, b) \
            + (t + 1) * hermite_E(i - 1, j, t + 1, Qx, a, b)
    return (1 / (2 * p)) * hermite_E(i, j - 1, t - 1, Qx, a, b) \
        + (q * Qx / b) * hermite_E(i, j - 1, t, Qx, a, b) \
        + (t + 1) * hermite_E(i, j - 1, t + 1, Qx, a, b)


def overlap_prim(a, lmn1, A, b, lmn2, B):
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    S1 = hermite_E(l1, l2, 0, A[0] - B[0], a, b)
    S2 = hermite_E(m1, m2, 0, A[1] - B[1], a, b)
    S3 = hermite_E(n1, n2, 0, A[2] - B[2], a, b)
    return S1 * S2 * S3 * (np.pi / (a + b)) ** 1.5


def overlap_bf(f1, f2):
    s = 0.0
    for a, ca in f1.prims:
        for b, cb in f2.prims:
            s += ca * cb * overlap_prim(a, f1.lmn, f1.center, b, f2.lmn, f2.center)
    return s


def kinetic_prim(a, lmn1, A, b, lmn2, B):
    l2, m2, n2 = lmn2
    term0 = b * (2 * (l2 + m2 + n2) + 3) * overlap_prim(a, lmn1, A, b, lmn2, B)
    term1 = -2 * b**2 * (overlap_prim(a, lmn1, A, b, (l2 + 2, m2, n2), B)
                         + overlap_prim(a, lmn1, A, b, (l2, m2 + 2, n2), B)
                         + overlap_prim(a, lmn1, A, b, (l2, m2, n2 + 2), B))
    term2 = -0.5 * (l2 * (l2 - 1) * overlap_prim(a, lmn1, A, b, (l2 - 2, m2, n2), B)
                    + m2 * (m2 - 1) * overlap_prim(a, lmn1, A, b, (l2, m2 - 2, n2), B)
                    + n2 * (n2 - 1) * overlap_prim(a, lmn1, A, b, (l2, m2, n2 - 2), B))
    return term0 + term1 + term2


def kinetic_bf(f1, f2):
    s = 0.0
    for a, ca in f1.prims:
        for b, cb in f2.prims:
            s += ca * cb * kinetic_prim(a, f1.lmn, f1.center, b, f2.lmn, f2.center)
    return s


def boys(m, T):
    return hyp1f1(m + 0.5, m + 1.5, -T) / (2.0 * m + 1.0)


def hermite_R(t, u, v, n, p, PCx, PCy, PCz, RPC):
    T = p * RPC * RPC
    if t == u == v == 0:
        return (-2 * p) ** n * boys(n, T)
    if t == u == 0:
        val = 0.0
        if v > 1:
            val += (v - 1) * hermite_R(t, u, v - 2, n + 1, p, PCx, PCy, PCz, RPC)
        val += PCz * hermite_R(t, u, v - 1, n + 1, p, PCx, PCy, PCz, RPC)
        return val
    if t == 0:
        val = 0.0
        if u > 1:
            val += (u - 1) * hermite_R(t, u - 2, v, n + 1, p, PCx, PCy, PCz, RPC)
        val += PCy * hermite_R(t, u - 1, v, n + 1, p, PCx, PCy, PCz, RPC)
        return val
    val = 0.0
    if t > 1:
        val += (t - 1) * hermite_R(t - 2, u, v, n + 1, p, PCx, PCy, PCz, RPC)
    val += PCx * hermite_R(t - 1, u, v, n + 1, p, PCx, PCy, PCz, RPC)
    return val


def nuclear_prim(a, lmn1, A, b, lmn2, B, C):
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    p = a + b
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    RPC = np.linalg.norm(P - C)
    val = 0.0
    for t in range(l1 + l2 + 1):
        for u in range(m1 + m2 + 1):
            for v in range(n1 + n2 + 1):
                val += hermite_E(l1, l2, t, A[0] - B[0], a, b) \
                    * hermite_E(m1, m2, u, A[1] - B[1], a, b) \
                    * hermite_E(n1, n2, v, A[2] - B[2], a, b) \
                    * hermite_R(t, u, v, 0, p, P[0] - C[0], P[1] - C[1], P[2] - C[2], RPC)
    return 2 * np.pi / p * val


def nuclear_bf(f1, f2, atoms):
    s = 0.0
    for a, ca in f1.prims:
        for b, cb in f2.prims:
            for sym, xyz in atoms:
                Z = ELEMENTS[sym][0]
                s -= Z * ca * cb * nuclear_prim(a, f1.lmn, f1.center, b, f2.lmn,
                                                f2.center, np.asarray(xyz))
    return s


def eri_prim(a, lmn1, A, b, lmn2, B, c, lmn3, C, d, lmn4, D):
    l1, m1, n1 = lmn1
    l2, m2, n2 = lmn2
    l3, m3, n3 = lmn3
    l4, m4, n4 = lmn4
    p = a + b
    q = c + d
    alpha = p * q / (p + q)
    P = (a * np.asarray(A) + b * np.asarray(B)) / p
    Q = (c * np.asarray(C) + d * np.asarray(D)) / q
    RPQ = np.linalg.norm(P - Q)
    val = 0.0
    for t in range(l1 + l2 + 1):
        for u in range(m1 + m2 + 1):
            for v in range(n1 + n2 + 1):
                e1 = hermite_E(l1, l2, t, A[0] - B[0], a, b) \
                    * hermite_E(m1, m2, u, A[1] - B[1], a, b) \
                    * hermite_E(n1, n2, v, A[2] - B[2], a, b)
                if e1 == 0.0:
                    continue
                for tau in range(l3 + l4 + 1):
                    for nu in range(m3 + m4 + 1):
                        for phi in range(n3 + n4 + 1):
                            e2 = hermite_E(l3, l4, tau, C[0] - D[0], c, d) \
                                * hermite_E(m3, m4, nu, C[1] - D[1], c, d) \
                                * hermite_E(n3, n4, phi, C[2] - D[2], c, d)
                            if e2 == 0.0:
                                continue
                            val += e1 * e2 * (-1) ** (tau + nu + phi) \
                                * hermite_R(t + tau, u + nu, v + phi, 0, alpha,
                                            P[0] - Q[0], P[1] - Q[1], P[2] - Q[2], RPQ)
    return val * 2 * np.pi ** 2.5 / (p * q * math.sqrt(p + q))


def eri_bf(f1, f2, f3, f4):
    s = 0.0
    for a, ca in f1.prims:
        for b, cb in f2.prims:
            for c, cc in f3.prims:
                for d, cd in f4.prims:
                    s += ca * cb * cc * cd * eri_prim(
                        a, f1.lmn, f1.center, b, f2.lmn, f2.center,
                        c, f3.lmn, f3.center, d, f4.lmn, f4.center)
    return s


def compute_integrals(atoms):
    bfs = build_basis(atoms)
    n = len(bfs)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            S[i, j] = S[j, i] = overlap_bf(bfs[i], bfs[j])
            T[i, j] = T[j, i] = kinetic_bf(bfs[i], bfs[j])
            V[i, j] = V[j, i] = nuclear_bf(bfs[i], bfs[j], atoms)
    eri = np.zeros((n, n, n, n))
    # chemists' notation (ij|kl), 8-fold symmetry
    pairs = [(i, j) for i in range(n) for j in range(i + 1)]
    for pi, (i, j) in enumerate(pairs):
        for (k, l) in pairs[:pi + 1]:
            val = eri_bf(bfs[i], bfs[j], bfs[k], bfs[l])
            for (a, b) in ((i, j), (j, i)):
                for (c, d) in ((k, l), (l, k)):
                    eri[a, b, c, d] = val
                    eri[c, d, a, b] = val
    e_nuc = 0.0
    for (s1, x1), (s2, x2) in itertools.combinations(atoms, 2):
        e_nuc += ELEMENTS[s1][0] * ELEMENTS[s2][0] / np.linalg.norm(np.asarray(x1) - np.asarray(x2))
    return bfs, S, T, V, eri, e_nuc


# ---------------------------------------------------------------------------
# Point-group handling (Abelian subgroups relevant for linear molecules).
# MOLPRO numbering: D2h: Ag=1 B3u=2 B2u=3 B1g=4 B1u=5 B2g=6 B3g=7 Au=8
#                   C2v: A1=1 B1=2 B2=3 A2=4
# ---------------------------------------------------------------------------

def ao_symmetry_blocks(bfs, atoms, centrosymmetric):
    """Return list of (irrep_label, [(coef, ao_index), ...]) symmetry-adapted AOs."""
    n = len(bfs)
    center = np.mean([np.asarray(x) * ELEMENTS[s][0] for s, x in atoms], axis=0) \
        / sum(ELEMENTS[s][0] for s, _ in atoms)
    blocks = []
    if centrosymmetric:
        # pair AOs with their inversion partners through the charge center
        used = [False] * n
        for i, bf in enumerate(bfs):
            if used[i]:
                continue
            mirrored = 2 * center - bf.center
            partner = None
            for j, bf2 in enumerate(bfs):
                if j != i and not used[j] and bf2.tag[1:] == bf.tag[1:] \
                        and np.allclose(bf2.center, mirrored, atol=1e-9):
                    partner = j
                    break
            comp = bf.tag[2]
            # parity of the cartesian factor under inversion
            psign = -1 if comp in ('x', 'y', 'z') else 1
            if partner is None:
                # AO sits on the center: irrep from its own parity
                lbl = _linear_label(comp, 1 if psign == 1 else -1)
                blocks.append((lbl, [(1.0, i)]))
                used[i] = True
            else:
                for parity in (+1, -1):
                    lbl = _linear_label(comp, parity)
                    c = 1 / math.sqrt(2)
                    blocks.append((lbl, [(c, i), (parity * psign * c, partner)]))
                used[i] = used[partner] = True
    else:
        for i, bf in enumerate(bfs):
            comp = bf.tag[2]
            lbl = {'': 1, 'z': 1, 'x': 2, 'y': 3}[comp]  # C2v: A1, B1, B2
            blocks.append((lbl, [(1.0, i)]))
    return blocks


def _linear_label(comp, parity):
    # sigma (s,z) / pi_x / pi_y with g/u parity -> D2h labels
    if comp in ('', 'z'):
        return 1 if parity == 1 else 5   # Ag / B1u
    if comp == 'x':
        return 2 if parity == -1 else 6  # B3u / B2g
    return 3 if parity == -1 else 7      # B2u / B3g


def rhf(atoms, centrosymmetric, nelec, conv=1e-12, maxiter=500):
    bfs, S, T, V, eri, e_nuc = compute_integrals(atoms)
    n = len(bfs)
    hcore = T + V
    blocks = ao_symmetry_blocks(bfs, atoms, centrosymmetric)
    B = np.zeros((n, n))
    labels = []
    for col, (lbl, combo) in enumerate(blocks):
        for c, idx in combo:
            B[idx, col] = c
        labels.append(lbl)
    labels = np.array(labels)

    nocc = nelec // 2
    D = np.zeros((n, n))
    F = hcore.copy()
    energy = 0.0
    diis_F, diis_e = [], []
    for it in range(maxiter):
        # level shift early on stabilizes stretched geometries
        if it > 0:
            err_now = np.max(np.abs(F @ D @ S - S @ D @ F))
            shift = 0.5 if err_now > 1e-4 else 0.0
            if shift:
                Q = S - 0.5 * (S @ D @ S)
                F = F + shift * Q
        # symmetry-blocked generalized eigenproblem
        C = np.zeros((n, n))
        eps = np.zeros(n)
        col = 0
        for lbl in sorted(set(labels)):
            cols = np.where(labels == lbl)[0]
            Bb = B[:, cols]
            Fb = Bb.T @ F @ Bb
            Sb = Bb.T @ S @ Bb
            w, U = np.linalg.eigh(Sb)
            Xs = U @ np.diag(w ** -0.5) @ U.T
            e2, C2 = np.linalg.eigh(Xs.T @ Fb @ Xs)
            Cb = Bb @ (Xs @ C2)
            C[:, col:col + len(cols)] = Cb
            eps[col:col + len(cols)] = e2
            col += len(cols)
        order = np.argsort(eps, kind='stable')
        C = C[:, order]
        eps = eps[order]
        mo_labels = np.concatenate([np.repeat(lbl, np.sum(labels == lbl))
                                    for lbl in sorted(set(labels))])[order]
        D_new = 2 * C[:, :nocc] @ C[:, :nocc].T
        J = np.einsum('ijkl,kl->ij', eri, D_new)
        K = np.einsum('ikjl,kl->ij', eri, D_new)
        F_new = hcore + J - 0.5 * K
        e_new = 0.5 * np.sum(D_new * (hcore + F_new)) + e_nuc
        err = F_new @ D_new @ S - S @ D_new @ F_new
        diis_F.append(F_new)
        diis_e.append(err.ravel())
        if len(diis_F) > 8:
            diis_F.pop(0)
            diis_e.pop(0)
        if abs(e_new - energy) < conv and np.max(np.abs(err)) < 1e-9:
            energy, D, F = e_new, D_new, F_new
            break
        energy, D = e_new, D_new
        if len(diis_F) >= 2:
            m = len(diis_F)
            Bm = -np.ones((m + 1, m + 1))
            Bm[m, m] = 0.0
            for i in range(m):
                for j in range(m):
                    Bm[i, j] = diis_e[i] @ diis_e[j]
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            try:
                cs = np.linalg.solve(Bm, rhs)[:m]
                F = sum(c * Fm for c, Fm in zip(cs, diis_F))
            except np.linalg.LinAlgError:
                F = F_new
        else:
            F = F_new
    else:
        raise RuntimeError('SCF failed to converge')

    h_mo = C.T @ hcore @ C
    eri_mo = np.einsum('pi,qj,pqrs,rk,sl->ijkl', C, C, eri, C, C, optimize=True)
    return {
        'e_scf': energy, 'e_nuc': e_nuc, 'h': h_mo, 'eri': eri_mo,
        'orbsym': [int(x) for x in mo_labels], 'eps': eps, 'nocc': nocc,
    }


# ---------------------------------------------------------------------------
# Determinant FCI in the (n_alpha, n_beta) sector, spin-orbital fermionic
# action with explicit sign bookkeeping (independent of any qubit mapping).
# Spin-orbital p = 2*spatial + (0 alpha, 1 beta).
# ---------------------------------------------------------------------------

def fci_ground(h, eri, e_core, nelec, ms2):
    norb = h.shape[0]
    nso = 2 * norb
    na = (nelec + ms2) // 2
    nb = (nelec - ms2) // 2
    alpha_occs = list(itertools.combinations(range(norb), na))
    beta_occs = list(itertools.combinations(range(norb), nb))
    dets = []
    for ao in alpha_occs:
        for bo in beta_occs:
            mask = 0
            for p in ao:
                mask |= 1 << (2 * p)
            for p in bo:
                mask |= 1 << (2 * p + 1)
            dets.append(mask)
    index = {d: i for i, d in enumerate(dets)}
    dim = len(dets)

    # second-quantized terms: h_pq a+_p a_q  and 1/2 (pq|rs) a+_p a+_r a_s a_q
    one_body = []
    for p in range(norb):
        for q in range(norb):
            if abs(h[p, q]) > 1e-14:
                for s in range(2):
                    one_body.append((h[p, q], 2 * p + s, 2 * q + s))
    two_body = []
    for p in range(norb):
        for q in range(norb):
            for r in range(norb):
                for s in range(norb):
                    v = eri[p, q, r, s]
                    if abs(v) > 1e-14:
                        for s1 in range(2):
                            for s2 in range(2):
                                two_body.append((0.5 * v, 2 * p + s1, 2 * r + s2,
                                                 2 * s + s2, 2 * q + s1))

    def apply_ann(mask, p, sign):
        if not (mask >> p) & 1:
            return None
        par = bin(mask & ((1 << p) - 1)).count('1')
        return mask & ~(1 << p), sign * (-1) ** par

    def apply_cre(mask, p, sign):
        if (mask >> p) & 1:
            return None
        par = bin(mask & ((1 << p) - 1)).count('1')
        return mask | (1 << p), sign * (-1) ** par

    H = np.zeros((dim, dim))
    for ci, det in enumerate(dets):
        H[ci, ci] += e_core
        for coef, p, q in one_body:
            r1 = apply_ann(det, q, 1)
            if r1 is None:
                continue
            r2 = apply_cre(r1[0], p, r1[1])
            if r2 is None:
                continue
            H[index[r2[0]], ci] += coef * r2[1]
        for coef, p, r, s, q in two_body:
            t = apply_ann(det, q, 1)
            if t is None:
                continue
            t = apply_ann(t[0], s, t[1])
            if t is None:
                continue
            t = apply_cre(t[0], r, t[1])
            if t is None:
                continue
            t = apply_cre(t[0], p, t[1])
            if t is None:
                continue
            H[index[t[0]], ci] += coef * t[1]
    assert np.max(np.abs(H - H.T)) < 1e-9
    w = np.linalg.eigvalsh(H)
    return w[0], dim


def write_fcidump(path, h, eri, e_core, nelec, ms2, orbsym):
    norb = h.shape[0]
    with open(path, 'w') as f:
        f.write(f'&FCI NORB={norb},NELEC={nelec},MS2={ms2},\n')
        f.write('  ORBSYM=' + ','.join(str(x) for x in orbsym) + ',\n')
        f.write('  ISYM=1,\n')
        f.write('&END\n')

        def rec(v, i, j, k, l):
            f.write(f' {v: .16E} {i:4d} {j:4d} {k:4d} {l:4d}\n')

        pairs = [(i, j) for i in range(norb) for j in range(i + 1)]
        for pi, (i, j) in enumerate(pairs):
            for (k, l) in pairs[:pi + 1]:
                v = eri[i, j, k, l]
                if abs(v) > 1e-12:
                    rec(v, i + 1, j + 1, k + 1, l + 1)
        for i in range(norb):
            for j in range(i + 1):
                if abs(h[i, j]) > 1e-12:
                    rec(h[i, j], i + 1, j + 1, 0, 0)
        rec(e_core, 0, 0, 0, 0)


def make_fixture(name, atoms_ang, nelec, centro, outdir, note):
    atoms = [(s, np.asarray(x) * ANGSTROM_TO_BOHR) for s, x in atoms_ang]
    res = rhf(atoms, centro, nelec)
    e_fci, dim = fci_ground(res['h'], res['eri'], res['e_nuc'], nelec, 0)
    path = os.path.join(outdir, name + '.fcidump')
    write_fcidump(path, res['h'], res['eri'], res['e_nuc'], nelec, 0, res['orbsym'])
    sidecar = {
        'name': name,
        'geometry_angstrom': [[s, list(map(float, x))] for s, x in atoms_ang],
        'basis': 'STO-3G',
        'n_spatial': int(res['h'].shape[0]),
        'n_electrons': nelec,
        'ms2': 0,
        'orbsym': res['orbsym'],
        'core_energy': float(res['e_nuc']),
        'scf_energy': float(res['e_scf']),
        'fci_energy': float(e_fci),
        'fci_sector_dim': int(dim),
        'provenance': 'scripts/gen_fixtures.py (McMurchie-Davidson STO-3G integrals,'
                      ' symmetry-blocked RHF, determinant-sector FCI)',
        'note': note,
    }
    with open(os.path.join(outdir, name + '.json'), 'w') as f:
        json.dump(sidecar, f, indent=2)
    print(f'{name:16s} n={res["h"].shape[0]:2d} SCF={res["e_scf"]: .10f} '
          f'FCI={e_fci: .10f} dim={dim}')
    return res, e_fci


def chain(sym, k, r):
    return [(sym, (0.0, 0.0, i * r)) for i in range(k)]


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else 'data'
    os.makedirs(outdir, exist_ok=True)

    make_fixture('h2_0.735', chain('H', 2, 0.735), 2, True, outdir,
                 'H2 at near-equilibrium bond length')
    for r in (0.9, 1.5):
        make_fixture(f'h4_{r}', chain('H', 4, r), 4, True, outdir,
                     f'linear H4 chain, spacing {r} A')
    for r in (1.0, 2.0, 3.0, 3.5):
        make_fixture(f'h6_{r}', chain('H', 6, r), 6, True, outdir,
                     f'linear H6 chain, spacing {r} A')
    for r in (1.0, 1.546, 2.2, 3.0):
        make_fixture(f'lih_{r}', [('Li', (0, 0, 0)), ('H', (0, 0, r))], 4, False,
                     outdir, f'LiH diatomic at {r} A')
    for r in (2.0, 3.5):
        make_fixture(f'beh2_{r}', [('H', (0, 0, -r)), ('Be', (0, 0, 0)), ('H', (0, 0, r))],
                     6, True, outdir, f'linear BeH2, Be-H {r} A')
    make_fixture('bh_2.0', [('B', (0, 0, 0)), ('H', (0, 0, 2.0))], 6, False, outdir,
                 'BH diatomic at 2.0 A')


if __name__ == '__main__':
    main()
