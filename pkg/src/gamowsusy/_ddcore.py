"""Compiled numeric kernels: double-double arithmetic and hypergeometric series.

The confluent-hypergeometric series are summed in double-double (~31 decimal
digit) arithmetic.  The integer-parameter logarithmic expansion of the second
Kummer solution cancels by a factor of roughly e^{|z|}|z|^{Re a} before it
settles on its small asymptotic value, so plain doubles lose everything well
before the |z| = 30 switch point to the asymptotic series; the double-double
path keeps the returned doubles at full accuracy and feeds an honest running
error estimate.

Everything here is scalar float/complex arithmetic inside loops: compiled with
numba when available (see _backend), otherwise executed as-is.

Status codes returned by the evaluation kernels:
    0  ok
    1  accuracy loss beyond the internal threshold
    2  domain violation (z = 0 for the singular solution)
    3  parameter too close to an internal pole of the expansion
    4  series failed to converge within the term budget
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ._backend import njit

# double-double representations of the constants used below
_GAMMA_HI, _GAMMA_LO = 0.5772156649015329, -4.942915152430645e-18
_LN2_HI, _LN2_LO = 0.6931471805599453, 2.3190468138462996e-17
_PI_HI, _PI_LO = 3.141592653589793, 1.2246467991473532e-16
_PI_2_HI, _PI_2_LO = 1.5707963267948966, 6.123233995736766e-17

# B_{2j}/(2j) for the digamma asymptotic tail, j = 1..12
_DIGAMMA_COEF = (
    (0.08333333333333333, 4.625929269271485e-18),
    (-0.008333333333333333, -1.1564823173178714e-19),
    (0.003968253968253968, 2.20282346155785e-19),
    (-0.004166666666666667, -5.782411586589357e-20),
    (0.007575757575757576, -2.1026951223961299e-19),
    (-0.021092796092796094, 1.3911677399530732e-18),
    (0.08333333333333333, 4.625929269271485e-18),
    (-0.4432598039215686, -2.0462934179365632e-17),
    (3.0539543302701198, -1.0882720820608607e-17),
    (-26.456212121212122, 7.449932926454383e-16),
    (281.46014492753625, -1.647635329298783e-14),
    (-3607.5105463980462, -1.5347029033579816e-13),
)

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker splitting constant

# series policy
_DD_EPS = 4.93e-32  # 2^-104
_STOP_REL = 1e-35
_MAX_TERMS = 900
_ACCURACY_LIMIT = 1e-6
_U_Z_SWITCH = 30.0
_POLE_TOL = 1e-8

_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.918938533204672741780329736406


# ---------------------------------------------------------------------------
# real double-double primitives (values carried as hi/lo float pairs)
# ---------------------------------------------------------------------------


@njit
def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


@njit
def _quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


@njit
def _two_prod(a, b):
    p = a * b
    ta = _SPLITTER * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLITTER * b
    bhi = tb - (tb - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


@njit
def dd_add(ah, al, bh, bl):
    s1, s2 = _two_sum(ah, bh)
    t1, t2 = _two_sum(al, bl)
    s2 += t1
    s1, s2 = _quick_two_sum(s1, s2)
    s2 += t2
    return _quick_two_sum(s1, s2)


@njit
def dd_mul(ah, al, bh, bl):
    p1, p2 = _two_prod(ah, bh)
    p2 += ah * bl + al * bh
    return _quick_two_sum(p1, p2)


@njit
def dd_div(ah, al, bh, bl):
    q1 = ah / bh
    th, tl = dd_mul(q1, 0.0, bh, bl)
    rh, rl = dd_add(ah, al, -th, -tl)
    q2 = rh / bh
    th, tl = dd_mul(q2, 0.0, bh, bl)
    rh, rl = dd_add(rh, rl, -th, -tl)
    q3 = rh / bh
    q1, q2 = _quick_two_sum(q1, q2)
    return dd_add(q1, q2, q3, 0.0)


@njit
def dd_sqrt(ah, al):
    if ah <= 0.0:
        return 0.0, 0.0
    x = math.sqrt(ah)
    x2h, x2l = _two_prod(x, x)
    dh, dl = dd_add(ah, al, -x2h, -x2l)
    return _quick_two_sum(x, dh / (2.0 * x))


@njit
def dd_ln(th, tl):
    # natural log of a positive dd number via frexp + atanh series
    f, e = math.frexp(th)
    if f < 0.7071067811865476:
        e -= 1
    mh = math.ldexp(th, -e)
    ml = math.ldexp(tl, -e)
    nh, nl = dd_add(mh, ml, -1.0, 0.0)
    dh, dl = dd_add(mh, ml, 1.0, 0.0)
    uh, ul = dd_div(nh, nl, dh, dl)
    u2h, u2l = dd_mul(uh, ul, uh, ul)
    sh, sl = uh, ul
    ph, pl = uh, ul
    j = 1
    while j < 40:
        ph, pl = dd_mul(ph, pl, u2h, u2l)
        ch, cl = dd_div(ph, pl, 2.0 * j + 1.0, 0.0)
        sh, sl = dd_add(sh, sl, ch, cl)
        if abs(ch) <= _STOP_REL * abs(sh):
            break
        j += 1
    sh, sl = dd_add(sh + sh, sl + sl, 0.0, 0.0)
    eh, el = dd_mul(_LN2_HI, _LN2_LO, float(e), 0.0)
    return dd_add(sh, sl, eh, el)


@njit
def _dd_atan_reduced(uh, ul):
    # |u| <= 1; three angle halvings, then the alternating series
    for _ in range(3):
        u2h, u2l = dd_mul(uh, ul, uh, ul)
        oh, ol = dd_add(u2h, u2l, 1.0, 0.0)
        qh, ql = dd_sqrt(oh, ol)
        qh, ql = dd_add(qh, ql, 1.0, 0.0)
        uh, ul = dd_div(uh, ul, qh, ql)
    u2h, u2l = dd_mul(uh, ul, uh, ul)
    sh, sl = uh, ul
    ph, pl = uh, ul
    sign = -1.0
    j = 1
    while j < 40:
        ph, pl = dd_mul(ph, pl, u2h, u2l)
        ch, cl = dd_div(sign * ph, sign * pl, 2.0 * j + 1.0, 0.0)
        sh, sl = dd_add(sh, sl, ch, cl)
        if abs(ch) <= _STOP_REL * max(abs(sh), 1e-300):
            break
        sign = -sign
        j += 1
    return 8.0 * sh, 8.0 * sl


@njit
def dd_atan2(yh, yl, xh, xl):
    if yh == 0.0 and yl == 0.0:
        if xh >= 0.0:
            return 0.0, 0.0
        return _PI_HI, _PI_LO
    if xh == 0.0 and xl == 0.0:
        if yh > 0.0:
            return _PI_2_HI, _PI_2_LO
        return -_PI_2_HI, -_PI_2_LO
    if abs(yh) <= abs(xh):
        qh, ql = dd_div(yh, yl, xh, xl)
        ah, al = _dd_atan_reduced(qh, ql)
        if xh > 0.0:
            return ah, al
        if yh >= 0.0:
            return dd_add(ah, al, _PI_HI, _PI_LO)
        return dd_add(ah, al, -_PI_HI, -_PI_LO)
    qh, ql = dd_div(xh, xl, yh, yl)
    ah, al = _dd_atan_reduced(qh, ql)
    if yh > 0.0:
        return dd_add(-ah, -al, _PI_2_HI, _PI_2_LO)
    return dd_add(-ah, -al, -_PI_2_HI, -_PI_2_LO)


# ---------------------------------------------------------------------------
# complex double-double: values carried as (re_hi, re_lo, im_hi, im_lo)
# ---------------------------------------------------------------------------


@njit
def cdd_add(arh, arl, aih, ail, brh, brl, bih, bil):
    rh, rl = dd_add(arh, arl, brh, brl)
    ih, il = dd_add(aih, ail, bih, bil)
    return rh, rl, ih, il


@njit
def cdd_mul(arh, arl, aih, ail, brh, brl, bih, bil):
    ach, acl = dd_mul(arh, arl, brh, brl)
    bdh, bdl = dd_mul(aih, ail, bih, bil)
    adh, adl = dd_mul(arh, arl, bih, bil)
    bch, bcl = dd_mul(aih, ail, brh, brl)
    rh, rl = dd_add(ach, acl, -bdh, -bdl)
    ih, il = dd_add(adh, adl, bch, bcl)
    return rh, rl, ih, il


@njit
def cdd_recip(arh, arl, aih, ail):
    m1h, m1l = dd_mul(arh, arl, arh, arl)
    m2h, m2l = dd_mul(aih, ail, aih, ail)
    dh, dl = dd_add(m1h, m1l, m2h, m2l)
    rh, rl = dd_div(arh, arl, dh, dl)
    ih, il = dd_div(-aih, -ail, dh, dl)
    return rh, rl, ih, il


@njit
def cdd_div(arh, arl, aih, ail, brh, brl, bih, bil):
    rh, rl, ih, il = cdd_recip(brh, brl, bih, bil)
    return cdd_mul(arh, arl, aih, ail, rh, rl, ih, il)


@njit
def cdd_scale(arh, arl, aih, ail, sh, sl):
    rh, rl = dd_mul(arh, arl, sh, sl)
    ih, il = dd_mul(aih, ail, sh, sl)
    return rh, rl, ih, il


@njit
def cdd_ln(arh, arl, aih, ail):
    # principal branch
    m1h, m1l = dd_mul(arh, arl, arh, arl)
    m2h, m2l = dd_mul(aih, ail, aih, ail)
    dh, dl = dd_add(m1h, m1l, m2h, m2l)
    lh, ll = dd_ln(dh, dl)
    ah, al = dd_atan2(aih, ail, arh, arl)
    return 0.5 * lh, 0.5 * ll, ah, al


@njit
def cdd_powi(arh, arl, aih, ail, n):
    # integer power, n may be negative
    rrh, rrl, rih, ril = 1.0, 0.0, 0.0, 0.0
    if n == 0:
        return rrh, rrl, rih, ril
    m = n
    if m < 0:
        arh, arl, aih, ail = cdd_recip(arh, arl, aih, ail)
        m = -m
    while m > 0:
        if m & 1:
            rrh, rrl, rih, ril = cdd_mul(rrh, rrl, rih, ril, arh, arl, aih, ail)
        arh, arl, aih, ail = cdd_mul(arh, arl, aih, ail, arh, arl, aih, ail)
        m >>= 1
    return rrh, rrl, rih, ril


@njit
def cdd_abs(arh, arl, aih, ail):
    return math.hypot(arh, aih)


@njit
def cdd_digamma(are, aim):
    """psi(a) for complex a in double-double; returns (rh, rl, ih, il, ok)."""
    wrh, wrl, wih, wil = are, 0.0, aim, 0.0
    srh, srl, sih, sil = 0.0, 0.0, 0.0, 0.0
    shifts = 0
    while wrh < 16.0:
        if math.hypot(wrh, wih) < 1e-12:
            return 0.0, 0.0, 0.0, 0.0, False
        trh, trl, tih, til = cdd_recip(wrh, wrl, wih, wil)
        srh, srl, sih, sil = cdd_add(srh, srl, sih, sil, trh, trl, tih, til)
        wrh, wrl = dd_add(wrh, wrl, 1.0, 0.0)
        shifts += 1
        if shifts > 100000:
            return 0.0, 0.0, 0.0, 0.0, False
    lrh, lrl, lih, lil = cdd_ln(wrh, wrl, wih, wil)
    irh, irl, iih, iil = cdd_recip(wrh, wrl, wih, wil)
    i2rh, i2rl, i2ih, i2il = cdd_mul(irh, irl, iih, iil, irh, irl, iih, iil)
    # Horner over the Bernoulli tail in powers of 1/W^2
    crh, crl, cih, cil = _DIGAMMA_COEF[11][0], _DIGAMMA_COEF[11][1], 0.0, 0.0
    for j in range(10, -1, -1):
        crh, crl, cih, cil = cdd_mul(crh, crl, cih, cil, i2rh, i2rl, i2ih, i2il)
        crh, crl = dd_add(crh, crl, _DIGAMMA_COEF[j][0], _DIGAMMA_COEF[j][1])
    crh, crl, cih, cil = cdd_mul(crh, crl, cih, cil, i2rh, i2rl, i2ih, i2il)
    rrh, rrl, rih, ril = cdd_add(
        lrh, lrl, lih, lil, -0.5 * irh, -0.5 * irl, -0.5 * iih, -0.5 * iil
    )
    rrh, rrl, rih, ril = cdd_add(rrh, rrl, rih, ril, -crh, -crl, -cih, -cil)
    rrh, rrl, rih, ril = cdd_add(rrh, rrl, rih, ril, -srh, -srl, -sih, -sil)
    return rrh, rrl, rih, ril, True


# ---------------------------------------------------------------------------
# complex log-gamma (plain double; used only for overall prefactors)
# ---------------------------------------------------------------------------


@njit
def _clgamma_core(z):
    # Lanczos g=7, valid for Re(z) >= 0.5
    zm = z - 1.0
    x = _LANCZOS[0] + 0.0j
    for i in range(1, 9):
        x += _LANCZOS[i] / (zm + i)
    t = zm + 7.5
    return _LOG_SQRT_2PI + (zm + 0.5) * cmath.log(t) - t + cmath.log(x)


@njit
def clgamma(z):
    if z.real < 0.5:
        return cmath.log(_PI_HI / cmath.sin(_PI_HI * z)) - _clgamma_core(1.0 - z)
    return _clgamma_core(z)


@njit
def crecip_gamma(z):
    """1/Gamma(z); exactly zero at the poles z = 0, -1, -2, ..."""
    if z.imag == 0.0 and z.real == math.floor(z.real) and z.real <= 0.0:
        return 0.0 + 0.0j
    return cmath.exp(-clgamma(z))


# ---------------------------------------------------------------------------
# Kummer's function M(a, c, z), integer c >= 1
# ---------------------------------------------------------------------------


@njit
def _m_series_dd(are, aim, c, zre, zim):
    """Raw Taylor series in double-double. Returns (value, cond, status)."""
    # nonpositive integer a terminates the series exactly (polynomial case),
    # so the rounding is absolute and the relative condition stays moderate
    # even at the polynomial's zeros
    poly = aim == 0.0 and are <= 0.0 and are == math.floor(are)
    trh, trl, tih, til = 1.0, 0.0, 0.0, 0.0  # current term
    srh, srl, sih, sil = 1.0, 0.0, 0.0, 0.0  # running sum
    asum = 1.0
    small = 0
    s = 0
    status = 4
    while s < _MAX_TERMS:
        # term *= (a + s) * z / ((c + s) * (s + 1)); a + s built exactly
        fh, fl = _two_sum(are, float(s))
        trh, trl, tih, til = cdd_mul(trh, trl, tih, til, fh, fl, aim, 0.0)
        trh, trl, tih, til = cdd_mul(trh, trl, tih, til, zre, 0.0, zim, 0.0)
        den = (c + s) * (s + 1.0)
        trh, trl = dd_div(trh, trl, den, 0.0)
        tih, til = dd_div(tih, til, den, 0.0)
        srh, srl, sih, sil = cdd_add(srh, srl, sih, sil, trh, trl, tih, til)
        tmag = math.hypot(trh, tih)
        asum += tmag
        if asum > 1e280:
            return 0.0 + 0.0j, 1e300, 1
        if tmag <= _STOP_REL * math.hypot(srh, sih) + 1e-320:
            small += 1
            if small >= 2:
                status = 0
                break
        else:
            small = 0
        s += 1
    value = complex(srh + srl, sih + sil)
    vmag = abs(value)
    if vmag == 0.0:
        vmag = 1e-320
    cond = asum / vmag
    if poly and cond > 1e3:
        cond = 1e3
    return value, cond, status


@njit
def kummer_raw(are, aim, c, zre, zim):
    """M(a,c,z) with the reflection to Re(z) >= 0. Returns (value, est, status)."""
    if zre < 0.0:
        # M(a,c,z) = e^z M(c-a, c, -z)
        value, cond, status = _m_series_dd(c - are, -aim, c, -zre, -zim)
        value = cmath.exp(complex(zre, zim)) * value
    else:
        value, cond, status = _m_series_dd(are, aim, c, zre, zim)
    est = cond * 3e-30 + 2.5e-16
    if status == 0 and est > _ACCURACY_LIMIT:
        status = 1
    return value, est, status


@njit
def kummer_pair(are, aim, c, zre, zim):
    """(M, dM/dz, est, status) using M' = (a/c) M(a+1, c+1, z)."""
    m, e1, s1 = kummer_raw(are, aim, c, zre, zim)
    m1, e2, s2 = kummer_raw(are + 1.0, aim, c + 1, zre, zim)
    dm = complex(are, aim) / c * m1
    est = e1 if e1 > e2 else e2
    status = s1 if s1 > s2 else s2
    return m, dm, est, status


# ---------------------------------------------------------------------------
# Tricomi's function U(a, c, z), integer c >= 1 (logarithmic case)
# ---------------------------------------------------------------------------


@njit
def _nearest_nonpos_int_dist(re, im):
    """Distance from a complex number to the nearest integer <= 0."""
    if re > 0.5:
        return math.hypot(re, im)
    k = math.floor(re + 0.5)
    if k > 0.0:
        k = 0.0
    return math.hypot(re - k, im)


@njit
def _u_logseries(are, aim, n, zre, zim):
    """DLMF 13.2.9/13.2.10 for c = n + 1. Returns (value, est, status)."""
    a = complex(are, aim)
    # prefactors (plain double is enough: they scale whole branches)
    sgn = -1.0 if (n % 2 == 0) else 1.0  # (-1)^(n+1)
    nfact = 1.0
    for j in range(2, n + 1):
        nfact *= j
    coef1 = sgn / nfact * crecip_gamma(a - n)
    # L0 = ln z + psi(a) + 2*gamma - H_n   (complex dd)
    lrh, lrl, lih, lil = cdd_ln(zre, 0.0, zim, 0.0)
    prh, prl, pih, pil, ok = cdd_digamma(are, aim)
    if not ok:
        return 0.0 + 0.0j, 1e300, 3
    hh, hl = 0.0, 0.0
    for j in range(1, n + 1):
        ih, il = dd_div(1.0, 0.0, float(j), 0.0)
        hh, hl = dd_add(hh, hl, ih, il)
    l0rh, l0rl = dd_add(lrh, lrl, prh, prl)
    l0ih, l0il = dd_add(lih, lil, pih, pil)
    l0rh, l0rl = dd_add(l0rh, l0rl, 2.0 * _GAMMA_HI, 2.0 * _GAMMA_LO)
    l0rh, l0rl = dd_add(l0rh, l0rl, -hh, -hl)

    skip_log = abs(coef1) == 0.0

    s1 = 0.0 + 0.0j
    asum1 = 0.0
    if not skip_log:
        # sum t_s * (L0 + D_s), t_s = (a)_s z^s / ((n+1)_s s!)
        trh, trl, tih, til = 1.0, 0.0, 0.0, 0.0
        drh, drl, dih, dil = 0.0, 0.0, 0.0, 0.0
        arh, arl, aih, ail = l0rh, l0rl, l0ih, l0il  # L0 + D_0
        crh, crl, cih, cil = cdd_mul(trh, trl, tih, til, arh, arl, aih, ail)
        srh, srl, sih, sil = crh, crl, cih, cil
        asum1 = math.hypot(crh, cih)
        small = 0
        s = 0
        status = 4
        while s < _MAX_TERMS:
            # D_{s+1} = D_s + 1/(a+s) - 1/(1+s) - 1/(n+1+s); a + s built exactly
            fh, fl = _two_sum(are, float(s))
            rrh, rrl, rih, ril = cdd_recip(fh, fl, aim, 0.0)
            drh, drl, dih, dil = cdd_add(drh, drl, dih, dil, rrh, rrl, rih, ril)
            q1h, q1l = dd_div(1.0, 0.0, s + 1.0, 0.0)
            q2h, q2l = dd_div(1.0, 0.0, float(n) + 1.0 + s, 0.0)
            drh, drl = dd_add(drh, drl, -q1h, -q1l)
            drh, drl = dd_add(drh, drl, -q2h, -q2l)
            # t_{s+1}
            trh, trl, tih, til = cdd_mul(trh, trl, tih, til, fh, fl, aim, 0.0)
            trh, trl, tih, til = cdd_mul(trh, trl, tih, til, zre, 0.0, zim, 0.0)
            den = (n + 1.0 + s) * (s + 1.0)
            trh, trl = dd_div(trh, trl, den, 0.0)
            tih, til = dd_div(tih, til, den, 0.0)
            # contribution
            arh, arl = dd_add(l0rh, l0rl, drh, drl)
            aih, ail = dd_add(l0ih, l0il, dih, dil)
            crh, crl, cih, cil = cdd_mul(trh, trl, tih, til, arh, arl, aih, ail)
            srh, srl, sih, sil = cdd_add(srh, srl, sih, sil, crh, crl, cih, cil)
            cmag = math.hypot(crh, cih)
            asum1 += cmag
            if asum1 > 1e280:
                return 0.0 + 0.0j, 1e300, 1
            if cmag <= _STOP_REL * math.hypot(srh, sih) + 1e-320:
                small += 1
                if small >= 2:
                    status = 0
                    break
            else:
                small = 0
            s += 1
        if status != 0:
            return 0.0 + 0.0j, 1e300, status
        s1 = complex(srh + srl, sih + sil)

    # finite part: (n-1)!/Gamma(a) z^{-n} sum_{s<n} (a-n)_s/((1-n)_s s!) z^s
    s2 = 0.0 + 0.0j
    asum2 = 0.0
    if n >= 1:
        m1fact = 1.0
        for j in range(2, n):
            m1fact *= j
        coef2 = m1fact * crecip_gamma(a)
        if abs(coef2) != 0.0:
            zrh, zrl, zih, zil = cdd_powi(zre, 0.0, zim, 0.0, -n)
            anh, anl = _two_sum(are, float(-n))
            trh, trl, tih, til = 1.0, 0.0, 0.0, 0.0
            frh, frl, fih, fil = 1.0, 0.0, 0.0, 0.0
            afsum = 1.0
            for s in range(n - 1):
                gh, gl = dd_add(anh, anl, float(s), 0.0)
                trh, trl, tih, til = cdd_mul(trh, trl, tih, til, gh, gl, aim, 0.0)
                trh, trl, tih, til = cdd_mul(trh, trl, tih, til, zre, 0.0, zim, 0.0)
                den = (1.0 - n + s) * (s + 1.0)
                trh, trl = dd_div(trh, trl, den, 0.0)
                tih, til = dd_div(tih, til, den, 0.0)
                frh, frl, fih, fil = cdd_add(frh, frl, fih, fil, trh, trl, tih, til)
                afsum += math.hypot(trh, tih)
            frh, frl, fih, fil = cdd_mul(frh, frl, fih, fil, zrh, zrl, zih, zil)
            zmag = cdd_abs(zrh, zrl, zih, zil)
            s2 = complex(frh + frl, fih + fil) * coef2
            asum2 = afsum * zmag * abs(coef2)

    value = coef1 * s1 + s2
    vmag = abs(value)
    if vmag == 0.0:
        vmag = 1e-320
    cond = (abs(coef1) * asum1 + asum2) / vmag
    # branch magnitudes limit the double-precision prefactors
    branch = (abs(coef1) * abs(s1) + abs(s2)) / vmag
    est = cond * 3e-30 + branch * 2e-14 + 2.5e-16
    status = 0
    if est > _ACCURACY_LIMIT:
        status = 1
    return value, est, status


@njit
def _u_asymptotic(are, aim, c, zre, zim):
    """Divergent large-z expansion, optimally truncated. (value, est, status)."""
    a = complex(are, aim)
    z = complex(zre, zim)
    miz = -1.0 / z
    term = 1.0 + 0.0j
    total = 1.0 + 0.0j
    prev = 1.0
    est_trunc = 1.0
    s = 0
    while s < 400:
        factor = (a + s) * (a - c + 1.0 + s) / (s + 1.0) * miz
        nterm = term * factor
        if abs(nterm) >= prev:
            est_trunc = abs(nterm)
            break
        term = nterm
        total += term
        prev = abs(term)
        if prev <= 1e-18 * abs(total):
            est_trunc = prev
            break
        est_trunc = prev
        s += 1
    front = cmath.exp(-a * cmath.log(z))
    value = front * total
    tmag = abs(total)
    if tmag == 0.0:
        tmag = 1e-320
    est = 4.0 * est_trunc / tmag + 1e-15
    status = 0
    if est > _ACCURACY_LIMIT:
        status = 1
    return value, est, status


@njit
def u_raw(are, aim, c, zre, zim):
    """U(a,c,z), integer c >= 1, principal branch. Returns (value, est, status)."""
    if zre == 0.0 and zim == 0.0:
        return 0.0 + 0.0j, 1e300, 2
    # a at a nonpositive integer: U is (-1)^m (c)_m M(-m, c, z), a polynomial
    da = _nearest_nonpos_int_dist(are, aim)
    if da == 0.0:
        m = int(-round(are))
        poch = 1.0 + 0.0j
        for j in range(m):
            poch *= c + j
        mval, mest, mstat = kummer_raw(are, aim, c, zre, zim)
        sgn = 1.0 if m % 2 == 0 else -1.0
        return sgn * poch * mval, mest, mstat
    n = c - 1
    dan = _nearest_nonpos_int_dist(are - n, aim)
    if da < _POLE_TOL or (dan != 0.0 and dan < _POLE_TOL):
        return 0.0 + 0.0j, 1e300, 3
    if math.hypot(zre, zim) > _U_Z_SWITCH:
        return _u_asymptotic(are, aim, c, zre, zim)
    return _u_logseries(are, aim, n, zre, zim)


@njit
def tricomi_pair(are, aim, c, zre, zim):
    """(U, dU/dz, est, status) using U' = -a U(a+1, c+1, z)."""
    u, e1, s1 = u_raw(are, aim, c, zre, zim)
    u1, e2, s2 = u_raw(are + 1.0, aim, c + 1, zre, zim)
    du = -complex(are, aim) * u1
    est = e1 if e1 > e2 else e2
    status = s1 if s1 > s2 else s2
    return u, du, est, status


# ---------------------------------------------------------------------------
# radial wave evaluation on grids
# ---------------------------------------------------------------------------


@njit
def wave_point(ell, k, xi, r):
    """Transformation function w(r) = r^{l+1} e^{-kr} [M + xi U](2kr) and w'.

    Returns (w, dw, scale, est, status) where scale is the magnitude envelope
    |r^{l+1} e^{-kr}| (|M| + |xi U|) used for near-node detection.
    """
    a = ell + 1.0 - 1.0 / k
    c = 2 * ell + 2
    z = 2.0 * k * r
    m, dm, est, status = kummer_pair(a.real, a.imag, c, z.real, z.imag)
    inner = m
    dinner = dm
    env = abs(m)
    if xi != 0.0 + 0.0j:
        u, du, eu, su = tricomi_pair(a.real, a.imag, c, z.real, z.imag)
        inner = inner + xi * u
        dinner = dinner + xi * du
        env += abs(xi * u)
        if eu > est:
            est = eu
        if su > status:
            status = su
    pref = r ** (ell + 1) * cmath.exp(-k * r)
    w = pref * inner
    dw = pref * (((ell + 1.0) / r - k) * inner + 2.0 * k * dinner)
    return w, dw, abs(pref) * env, est, status


@njit
def wave_grid(ell, k, xi, r):
    """Vector form of wave_point. Returns (w, dw, scale, est_max, status_max)."""
    npts = r.shape[0]
    w = np.empty(npts, dtype=np.complex128)
    dw = np.empty(npts, dtype=np.complex128)
    scale = np.empty(npts, dtype=np.float64)
    est_max = 0.0
    status_max = 0
    for i in range(npts):
        wi, dwi, sc, est, status = wave_point(ell, k, xi, r[i])
        w[i] = wi
        dw[i] = dwi
        scale[i] = sc
        if est > est_max:
            est_max = est
        if status > status_max:
            status_max = status
    return w, dw, scale, est_max, status_max


# ---------------------------------------------------------------------------
# adaptive Cash-Karp 5(4) integration of  psi'' = (V_l(r) - lambda) psi
# for the Coulomb-type model V_l = l(l+1)/r^2 + g/r
# ---------------------------------------------------------------------------


@njit
def _rhs(ell, g, lam, r, y0, y1):
    v = ell * (ell + 1.0) / (r * r) + g / r
    return y1, (v - lam) * y0


@njit
def integrate_coulomb(ell, g, lam, r0, psi0, dpsi0, rout, rtol):
    """March (psi, psi') from r0 through the output points rout.

    Returns (psi[:], dpsi[:], status, last_r); status 0 ok, 2 overflow,
    3 step underflow.
    """
    npts = rout.shape[0]
    psi = np.zeros(npts, dtype=np.complex128)
    dpsi = np.zeros(npts, dtype=np.complex128)
    r = r0
    y0 = psi0
    y1 = dpsi0
    h = min(1e-4, 0.1 * (rout[0] - r0) + 1e-12)
    if h <= 0.0:
        h = 1e-6
    for i in range(npts):
        target = rout[i]
        if target < r - 1e-15:
            return psi, dpsi, 3, r
        while r < target:
            if abs(y0) > 1e300 or abs(y1) > 1e300:
                return psi, dpsi, 2, r
            hstep = h
            if r + hstep > target:
                hstep = target - r
            # Cash-Karp stages
            k10, k11 = _rhs(ell, g, lam, r, y0, y1)
            k20, k21 = _rhs(
                ell, g, lam, r + 0.2 * hstep, y0 + hstep * 0.2 * k10, y1 + hstep * 0.2 * k11
            )
            k30, k31 = _rhs(
                ell,
                g,
                lam,
                r + 0.3 * hstep,
                y0 + hstep * (0.075 * k10 + 0.225 * k20),
                y1 + hstep * (0.075 * k11 + 0.225 * k21),
            )
            k40, k41 = _rhs(
                ell,
                g,
                lam,
                r + 0.6 * hstep,
                y0 + hstep * (0.3 * k10 - 0.9 * k20 + 1.2 * k30),
                y1 + hstep * (0.3 * k11 - 0.9 * k21 + 1.2 * k31),
            )
            k50, k51 = _rhs(
                ell,
                g,
                lam,
                r + hstep,
                y0 + hstep * ((-11.0 / 54.0) * k10 + 2.5 * k20 - (70.0 / 27.0) * k30 + (35.0 / 27.0) * k40),
                y1 + hstep * ((-11.0 / 54.0) * k11 + 2.5 * k21 - (70.0 / 27.0) * k31 + (35.0 / 27.0) * k41),
            )
            k60, k61 = _rhs(
                ell,
                g,
                lam,
                r + 0.875 * hstep,
                y0
                + hstep
                * (
                    (1631.0 / 55296.0) * k10
                    + (175.0 / 512.0) * k20
                    + (575.0 / 13824.0) * k30
                    + (44275.0 / 110592.0) * k40
                    + (253.0 / 4096.0) * k50
                ),
                y1
                + hstep
                * (
                    (1631.0 / 55296.0) * k11
                    + (175.0 / 512.0) * k21
                    + (575.0 / 13824.0) * k31
                    + (44275.0 / 110592.0) * k41
                    + (253.0 / 4096.0) * k51
                ),
            )
            y0_5 = y0 + hstep * (
                (37.0 / 378.0) * k10 + (250.0 / 621.0) * k30 + (125.0 / 594.0) * k40 + (512.0 / 1771.0) * k60
            )
            y1_5 = y1 + hstep * (
                (37.0 / 378.0) * k11 + (250.0 / 621.0) * k31 + (125.0 / 594.0) * k41 + (512.0 / 1771.0) * k61
            )
            e0 = hstep * (
                (-277.0 / 64512.0) * k10
                + (6925.0 / 370944.0) * k30
                + (-6925.0 / 202752.0) * k40
                + (-277.0 / 14336.0) * k50
                + (277.0 / 7084.0) * k60
            )
            e1 = hstep * (
                (-277.0 / 64512.0) * k11
                + (6925.0 / 370944.0) * k31
                + (-6925.0 / 202752.0) * k41
                + (-277.0 / 14336.0) * k51
                + (277.0 / 7084.0) * k61
            )
            s0 = 1e-300 + rtol * max(abs(y0), abs(y0_5))
            s1 = 1e-300 + rtol * max(abs(y1), abs(y1_5))
            err = max(abs(e0) / s0, abs(e1) / s1)
            if err <= 1.0:
                r += hstep
                y0 = y0_5
                y1 = y1_5
                if err > 1e-30:
                    h = hstep * min(5.0, 0.9 * err ** (-0.2))
                else:
                    h = hstep * 5.0
            else:
                h = hstep * max(0.1, 0.9 * err ** (-0.25))
            if h < 1e-14 * max(1.0, r):
                return psi, dpsi, 3, r
        psi[i] = y0
        dpsi[i] = y1
    return psi, dpsi, 0, r
