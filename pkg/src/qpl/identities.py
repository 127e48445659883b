"""Catalog of the closed-form identities, their brute-force counterparts,
and the comparison engine.

Every catalog entry (I1..I19) pairs series built purely from the exact
series kernel with, where one exists, a combinatorial side computed by full
enumeration.  Verification compares all sides coefficientwise at a common
truncation and reports every mismatch; failures are data, not errors.

Identity overview:

  I1   total minimal-excludant-size series at chain length 1, closed form
  I2   total minimal-excludant-size series, general chain length r
  I3   total maximal-excludant-size series, general chain length r
  I4   bridge between the I1-style sum and the I2 form at r = 1
  I5   overpartitions stratified by largest repeating size, full sum
  I6   ... partial sum: largest repeating size at most n-1
  I7   bivariate generator marking the minimal excludant size by z
  I8   overpartitions with some positive repeating size
  I9   ... with smallest positive repeating size at most m
  I10  bivariate generator marking the maximal excludant size by z
  I11  z-marked generating function of the L_k class
  I12  z-marked generating function of the F_k class
  I13  L-basis polynomials: plain plus overlined largest part, closed form
  I14  F-basis polynomials: the plain and overlined closed forms
  I15  Euler's product expansion of sum z^j q^(j choose 2) / (q;q)_j
  I16  q-binomial recurrence in the base q^k
  I17  geometric summation of shifted q-binomials
  I18  L-basis subsets against distinct congruent partitions
  I19  F-basis subsets against distinct congruent partitions
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass

from .core import (
    Convention,
    count_parts_above,
    largest_repeating_size,
    max_excludant_size,
    min_excludant_size,
    smallest_positive_repeating_size,
)
from .enumeration import (
    ClassTag,
    distinct_congruent_partitions,
    iter_basis_elements,
    iter_overpartitions,
)
from .separable import basis_gf, is_member, _length_residue
from .series import (
    QSeries,
    ZQPoly,
    gaussian_binomial,
    omega_factor,
    omega_product,
    one_plus_zq_product,
    q_pochhammer,
    zq_geometric,
)

BRUTE_TRUNC_GUARD = 40
SERIES_TRUNC_GUARD = 400

W_READING_DEFAULT = "omega_n"
W_READINGS = ("omega_n", "omega_1_n")

# I2, I4 and I6 exist in two variants.  The default "subtracted" form
# expresses the partial sum over the largest repeating size by
# inclusion-exclusion, subtracting a product that restricts every size
# below n to at most r copies; that product does not generate the set it
# must (largest repeating size 0 or >= n allows small sizes to repeat), so
# the subtracted forms disagree with enumeration from q^8 on (chain
# length 1).  The acceptance contract pins the subtracted variant;
# "corrected" replaces the complement with the product that does generate
# the partial sum: sizes below n unrestricted, sizes >= n at most r each.
FORM_DEFAULT = "subtracted"
FORMS = ("subtracted", "corrected")

IDENTITY_IDS = tuple(f"I{i}" for i in range(1, 20))


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Mismatch:
    q: int
    z: int | None
    lhs: int
    rhs: int


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    params: dict
    trunc: int
    status: str  # "pass" | "fail"
    mismatches: tuple

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "trunc": self.trunc,
            "status": self.status,
            "mismatches": [
                {"q": m.q, "z": m.z, "lhs": str(m.lhs), "rhs": str(m.rhs)}
                for m in self.mismatches
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _diff_series(ref: QSeries, other: QSeries):
    out = []
    for i, (a, b) in enumerate(zip(ref.coeffs, other.coeffs)):
        if a != b:
            out.append(Mismatch(i, None, a, b))
    return out


def _diff_zq(ref: ZQPoly, other: ZQPoly):
    out = []
    zero = QSeries.zero(ref.trunc)
    for z in sorted(set(ref.terms) | set(other.terms)):
        a = ref.terms.get(z, zero)
        b = other.terms.get(z, zero)
        for i, (ca, cb) in enumerate(zip(a.coeffs, b.coeffs)):
            if ca != cb:
                out.append(Mismatch(i, z, ca, cb))
    return out


def _diff(ref, other):
    if isinstance(ref, QSeries) and isinstance(other, ZQPoly):
        ref = ZQPoly.from_qseries(ref)
    if isinstance(other, QSeries) and isinstance(ref, ZQPoly):
        other = ZQPoly.from_qseries(other)
    if isinstance(ref, QSeries):
        return _diff_series(ref, other)
    return _diff_zq(ref, other)


# ---------------------------------------------------------------------------
# shared closed-form pieces


def overpartition_series(trunc: int) -> QSeries:
    """Generating function counting all overpartitions by weight."""
    return q_pochhammer(-1, 1, None, trunc) * q_pochhammer(1, 1, None, trunc).reciprocal()


def _tail_series(n: int, trunc: int) -> QSeries:
    """Overpartitions whose parts all have size >= n."""
    return q_pochhammer(-1, n, None, trunc) * q_pochhammer(1, n, None, trunc).reciprocal()


def _excludant_numerator(n: int, r: int, trunc: int) -> QSeries:
    """2 (q^n + 2 q^(2n) + ... + r q^(rn)) truncated."""
    c = [0] * (trunc + 1)
    for i in range(1, r + 1):
        if i * n > trunc:
            break
        c[i * n] = 2 * i
    return QSeries(c, trunc)


def _omega_z_factor(t: int, r: int, trunc: int) -> ZQPoly:
    """1 + 2 z q^t + 2 z^2 q^(2t) + ... + 2 z^r q^(rt)."""
    terms = {0: QSeries.one(trunc)}
    for i in range(1, r + 1):
        if i * t > trunc:
            break
        terms[i] = QSeries.monomial(i * t, 2, trunc)
    return ZQPoly(terms, trunc)


def _qq_reciprocals(max_len: int, trunc: int):
    """1/(q;q)_L for L = 0..max_len, computed incrementally."""
    out = [QSeries.one(trunc)]
    prod = QSeries.one(trunc)
    for ell in range(1, max_len + 1):
        prod = prod * q_pochhammer(1, ell, 1, trunc)
        out.append(prod.reciprocal())
    return out


# ---------------------------------------------------------------------------
# enumeration sweeps (brute-force sides)

# Per chain length r: (computed truncation, data); data lists are indexed by
# weight, histograms are keyed by weight-first tuples so slicing to a smaller
# truncation is a read-time filter.
_SWEEPS: dict = {}


def _excludant_sweep(r: int, trunc: int) -> dict:
    cached = _SWEEPS.get(r)
    if cached is not None and cached[0] >= trunc:
        return cached[1]
    rs = (1, 2, 3) if r <= 3 else (r,)
    datas = {
        x: {
            "counts": [0] * (trunc + 1),
            "sigma_mes": [0] * (trunc + 1),
            "sigma_maes": [0] * (trunc + 1),
            "mes_hist": defaultdict(int),
            "maes_hist": defaultdict(int),
            "rep_hist": defaultdict(int),
        }
        for x in rs
    }
    for n in range(trunc + 1):
        for pi in iter_overpartitions(n, Convention.LAST):
            for x in rs:
                data = datas[x]
                data["counts"][n] += 1
                mes = min_excludant_size(pi, x)
                maes = max_excludant_size(pi, x)
                data["sigma_mes"][n] += mes
                data["sigma_maes"][n] += maes
                data["mes_hist"][(n, mes)] += 1
                if maes > 0:
                    data["maes_hist"][(n, maes)] += 1
                big = largest_repeating_size(pi, x)
                small = smallest_positive_repeating_size(pi, x) or 0
                data["rep_hist"][(n, big, small)] += 1
    for x in rs:
        _SWEEPS[x] = (trunc, datas[x])
    return datas[r]


def _series_from_weights(values, trunc: int) -> QSeries:
    return QSeries(list(values[: trunc + 1]), trunc)


def _brute_sigma_mes(r: int, trunc: int) -> QSeries:
    return _series_from_weights(_excludant_sweep(r, trunc)["sigma_mes"], trunc)


def _brute_sigma_maes(r: int, trunc: int) -> QSeries:
    return _series_from_weights(_excludant_sweep(r, trunc)["sigma_maes"], trunc)


def _brute_counts(trunc: int) -> QSeries:
    return _series_from_weights(_excludant_sweep(1, trunc)["counts"], trunc)


def _brute_rep_filtered(r: int, trunc: int, keep) -> QSeries:
    data = _excludant_sweep(r, trunc)
    c = [0] * (trunc + 1)
    for (w, big, small), count in data["rep_hist"].items():
        if w <= trunc and keep(big, small):
            c[w] += count
    return QSeries(c, trunc)


def _brute_marked_hist(hist, trunc: int) -> ZQPoly:
    per_z = defaultdict(lambda: [0] * (trunc + 1))
    for (w, v), count in hist.items():
        if w <= trunc:
            per_z[v][w] += count
    return ZQPoly({z: QSeries(c, trunc) for z, c in per_z.items()}, trunc)


def _brute_class_marked(family: str, k: int, trunc: int) -> ZQPoly:
    tag = ClassTag(family, k)
    per_z = defaultdict(lambda: [0] * (trunc + 1))
    for n in range(trunc + 1):
        for pi in iter_overpartitions(n, tag.convention):
            if is_member(pi, tag):
                per_z[pi.overlined_count][n] += 1
    return ZQPoly({z: QSeries(c, trunc) for z, c in per_z.items()}, trunc)


def _brute_basis_marked(family: str, k: int, trunc: int, keep) -> ZQPoly:
    per_z = defaultdict(lambda: [0] * (trunc + 1))
    for lam in iter_basis_elements(family, k, trunc):
        if keep(lam):
            per_z[lam.overlined_count][lam.weight] += 1
    return ZQPoly({z: QSeries(c, trunc) for z, c in per_z.items()}, trunc)


def _brute_distinct_marked(k: int, s: int, trunc: int) -> ZQPoly:
    per_z = defaultdict(lambda: [0] * (trunc + 1))
    j = 1
    while s * j + k * (j * (j - 1) // 2) <= trunc:
        for n in range(1, trunc + 1):
            for _ in distinct_congruent_partitions(n, j, k, s):
                per_z[j][n] += 1
        j += 1
    return ZQPoly({z: QSeries(c, trunc) for z, c in per_z.items()}, trunc)


# ---------------------------------------------------------------------------
# closed forms


def _closed_i1_sum(trunc: int, start: int) -> QSeries:
    total = QSeries.zero(trunc)
    c = start
    while c * (c + 1) // 2 <= trunc:
        term = QSeries.monomial(c * (c + 1) // 2, 2**c, trunc)
        term = term * q_pochhammer(-1, 1, c, trunc).reciprocal()
        total = total + term
        c += 1
    return overpartition_series(trunc) * total


def _partial_rep_true(r: int, limit: int, trunc: int) -> QSeries:
    """Overpartitions whose largest repeating size is at most limit-1:
    sizes below limit unrestricted, sizes >= limit at most r times each."""
    return (
        q_pochhammer(-1, 1, limit - 1, trunc)
        * q_pochhammer(1, 1, limit - 1, trunc).reciprocal()
        * omega_product(limit, None, r, trunc)
    )


def _closed_sigma_mes(r: int, trunc: int, form: str) -> QSeries:
    big = overpartition_series(trunc)
    total = big
    if form == "corrected":
        for n in range(1, trunc + 1):
            total = total + (
                _excludant_numerator(n, r, trunc)
                * q_pochhammer(-1, 1, n - 1, trunc)
                * q_pochhammer(1, 1, n - 1, trunc).reciprocal()
                * omega_product(n + 1, None, r, trunc)
            )
        return total
    none_repeating = omega_product(1, None, r, trunc)
    partial = QSeries.one(trunc)  # running product of omega factors 1..n-1
    for n in range(1, trunc + 1):
        inner = big - partial * _tail_series(n, trunc) + none_repeating
        total = total + (
            _excludant_numerator(n, r, trunc)
            * omega_factor(n, r, trunc).reciprocal()
            * inner
        )
        partial = partial * omega_factor(n, r, trunc)
    return total


def _closed_sigma_maes(r: int, trunc: int, w_reading: str) -> QSeries:
    big = overpartition_series(trunc)
    none_repeating = omega_product(1, None, r, trunc)
    total = (big - none_repeating) * r
    lamb = [0] * (trunc + 1)
    for n in range(1, trunc + 1):
        for e in range(n, trunc + 1, 2 * n):
            lamb[e] += 2
    total = total + big * QSeries(lamb, trunc)
    partial = QSeries.one(trunc)
    for n in range(1, trunc + 1):
        w_n = omega_factor(n, r, trunc)
        if w_reading == "omega_n":
            w_term = w_n
        elif w_reading == "omega_1_n":
            w_term = partial * w_n
        else:
            raise ValueError(f"unknown w reading {w_reading!r}")
        term = (
            QSeries.monomial(n, 1, trunc)
            * partial
            * q_pochhammer(-1, n + 1, None, trunc)
            * q_pochhammer(1, n, None, trunc).reciprocal()
            * (QSeries.one(trunc) + w_term)
        )
        total = total - term
        partial = partial * w_n
    return total


def _closed_bridge_rhs(trunc: int, form: str) -> QSeries:
    big = overpartition_series(trunc)
    twisted_all = q_pochhammer(-2, 1, None, trunc)
    total = QSeries.zero(trunc)
    for n in range(1, trunc + 1):
        factor = QSeries.monomial(n, 2, trunc) * q_pochhammer(-2, n, 1, trunc).reciprocal()
        if form == "corrected":
            inner = _partial_rep_true(1, n, trunc)
        else:
            twisted = q_pochhammer(-2, 1, n - 1, trunc)
            inner = big - twisted * _tail_series(n, trunc) + twisted_all
        total = total + factor * inner
    return total


def _rep_size_term(j: int, r: int, trunc: int) -> QSeries:
    """Overpartitions whose largest repeating size is exactly j."""
    if j == 0:
        return omega_product(1, None, r, trunc)
    base = QSeries.monomial((r + 1) * j, 1, trunc)
    return (
        base
        * q_pochhammer(-1, 0, j, trunc)
        * q_pochhammer(1, 1, j, trunc).reciprocal()
        * omega_product(j + 1, None, r, trunc)
    )


def _smallest_rep_term(j: int, r: int, trunc: int) -> QSeries:
    """Overpartitions whose smallest positive repeating size is exactly j."""
    return (
        QSeries.monomial((r + 1) * j, 2, trunc)
        * omega_product(1, j - 1, r, trunc)
        * q_pochhammer(-1, j + 1, None, trunc)
        * q_pochhammer(1, j, None, trunc).reciprocal()
    )


def _closed_mes_marked(r: int, trunc: int) -> ZQPoly:
    # Suffix products of the z-marked omega factors, highest base first.
    suffix = [ZQPoly.one(trunc)] * (trunc + 2)
    for t in range(trunc, 0, -1):
        suffix[t] = _omega_z_factor(t, r, trunc) * suffix[t + 1]
    total = ZQPoly.zero(trunc)
    j = 0
    while (r + 1) * j <= trunc:
        base = QSeries.monomial((r + 1) * j, 1, trunc)
        base = base * q_pochhammer(-1, 0, j, trunc)
        base = base * q_pochhammer(1, 1, j, trunc).reciprocal()
        tail = suffix[j + 1] if j + 1 <= trunc else ZQPoly.one(trunc)
        total = total + ZQPoly.from_qseries(base, 1) * tail
        j += 1
    return total


def _closed_maes_marked(r: int, trunc: int) -> ZQPoly:
    ones = [ZQPoly.one(trunc)] * (trunc + 2)
    geo = list(ones)
    for e in range(trunc, 0, -1):
        ones[e] = (ZQPoly.one(trunc) + ZQPoly.monomial(1, e, 1, trunc)) * ones[e + 1]
        geo[e] = zq_geometric(e, trunc) * geo[e + 1]
    total = ZQPoly.zero(trunc)
    j = 1
    while (r + 1) * j <= trunc:
        base = QSeries.monomial((r + 1) * j, 2, trunc) * omega_product(1, j - 1, r, trunc)
        num = ones[j + 1] if j + 1 <= trunc else ZQPoly.one(trunc)
        den = geo[j] if j <= trunc else ZQPoly.one(trunc)
        total = total + ZQPoly.from_qseries(base, r) * num * den
        j += 1
    return total


def _closed_class_gf(family: str, k: int, trunc: int) -> ZQPoly:
    recips = _qq_reciprocals(trunc + k, trunc)
    total = ZQPoly.one(trunc)
    for s in range(1, k + 1):
        m = 1
        while s + k * (m - 1) <= trunc:
            for j in range(1, m + 1):
                e = k * (j * (j - 1) // 2) + s * j + k * (m - j)
                if e > trunc:
                    break
                base = QSeries.monomial(e, 1, trunc)
                base = base * recips[k * (m - 1) + s]
                base = base * gaussian_binomial(m - 1, j - 1, k, trunc)
                if family == "L":
                    marked = ZQPoly.from_qseries(base, j - 1) + ZQPoly.from_qseries(base, j)
                else:
                    marked = ZQPoly.from_qseries(base, j - 1)
                total = total + marked
            m += 1
    if family == "F":
        m = 1
        while k * m <= trunc:
            for j in range(1, m + 1):
                e = k * (j * (j - 1) // 2) + k * m
                if e > trunc:
                    break
                base = QSeries.monomial(e, 1, trunc)
                base = base * recips[k * m]
                base = base * gaussian_binomial(m - 1, j - 1, k, trunc)
                total = total + ZQPoly.from_qseries(base, j)
            m += 1
    return total


def _closed_basis_poly(k: int, m: int, s: int, j: int, trunc: int, family: str, overlined: bool) -> ZQPoly:
    binom = gaussian_binomial(m - 1, j - 1, k, trunc)
    if family == "L":
        e = k * (j * (j - 1) // 2) + s * j + k * (m - j)
        base = QSeries.monomial(e, 1, trunc) * binom
        return ZQPoly.from_qseries(base, j - 1) + ZQPoly.from_qseries(base, j)
    if overlined:
        e = k * (j * (j - 1) // 2) + k * m
        return ZQPoly.from_qseries(QSeries.monomial(e, 1, trunc) * binom, j)
    e = k * (j * (j - 1) // 2) + s * j + k * (m - j)
    return ZQPoly.from_qseries(QSeries.monomial(e, 1, trunc) * binom, j - 1)


def _closed_euler_lhs(trunc: int) -> ZQPoly:
    total = ZQPoly.zero(trunc)
    j = 0
    while j * (j - 1) // 2 <= trunc:
        base = QSeries.monomial(j * (j - 1) // 2, 1, trunc)
        base = base * q_pochhammer(1, 1, j, trunc).reciprocal()
        total = total + ZQPoly.from_qseries(base, j)
        j += 1
    return total


def _closed_euler_rhs(trunc: int) -> ZQPoly:
    one_plus_z = ZQPoly.one(trunc) + ZQPoly.monomial(1, 0, 1, trunc)
    return one_plus_z * one_plus_zq_product(1, trunc)


def _closed_distinct_gf(k: int, s: int, trunc: int) -> ZQPoly:
    return one_plus_zq_product(s, trunc, step=k) - ZQPoly.one(trunc)


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class Side:
    label: str
    kind: str  # "closed" | "brute"
    value: object


def _build_i1(p, n, with_brute):
    eq = [Side("closed form", "closed", _closed_i1_sum(n, 0))]
    if with_brute:
        eq.append(Side("enumerated excludant totals", "brute", _brute_sigma_mes(1, n)))
    return [eq]


def _build_i2(p, n, with_brute):
    eq = [Side("closed form", "closed", _closed_sigma_mes(p["r"], n, p["form"]))]
    if with_brute:
        eq.append(Side("enumerated excludant totals", "brute", _brute_sigma_mes(p["r"], n)))
    return [eq]


def _build_i3(p, n, with_brute):
    eq = [Side("closed form", "closed", _closed_sigma_maes(p["r"], n, p["w_reading"]))]
    if with_brute:
        eq.append(Side("enumerated excludant totals", "brute", _brute_sigma_maes(p["r"], n)))
    return [eq]


def _build_i4(p, n, with_brute):
    eq = [
        Side("weighted triangular sum", "closed", _closed_i1_sum(n, 1)),
        Side("telescoped form", "closed", _closed_bridge_rhs(n, p["form"])),
    ]
    if with_brute:
        counts = _brute_counts(n)
        eq.append(
            Side(
                "enumerated totals minus counts",
                "brute",
                _brute_sigma_mes(1, n) - counts,
            )
        )
    return [eq]


def _build_i5(p, n, with_brute):
    r = p["r"]
    total = QSeries.zero(n)
    j = 0
    while (r + 1) * j <= n:
        total = total + _rep_size_term(j, r, n)
        j += 1
    eq = [
        Side("sum over largest repeating size", "closed", total),
        Side("overpartition series", "closed", overpartition_series(n)),
    ]
    if with_brute:
        eq.append(Side("enumerated counts", "brute", _brute_counts(n)))
    return [eq]


def _build_i6(p, n, with_brute):
    r, limit = p["r"], p["n"]
    total = QSeries.zero(n)
    for j in range(0, limit):
        if j > 0 and (r + 1) * j > n:
            break
        total = total + _rep_size_term(j, r, n)
    if p["form"] == "corrected":
        rhs = _partial_rep_true(r, limit, n)
    else:
        rhs = (
            overpartition_series(n)
            - omega_product(1, limit - 1, r, n) * _tail_series(limit, n)
            + omega_product(1, None, r, n)
        )
    eq = [
        Side("partial sum over largest repeating size", "closed", total),
        Side("complement form", "closed", rhs),
    ]
    if with_brute:
        eq.append(
            Side(
                "enumerated counts",
                "brute",
                _brute_rep_filtered(r, n, lambda big, small: big <= limit - 1),
            )
        )
    return [eq]


def _build_i7(p, n, with_brute):
    eq = [Side("closed form", "closed", _closed_mes_marked(p["r"], n))]
    if with_brute:
        hist = _excludant_sweep(p["r"], n)["mes_hist"]
        eq.append(Side("enumerated z-marked sum", "brute", _brute_marked_hist(hist, n)))
    return [eq]


def _build_i8(p, n, with_brute):
    r = p["r"]
    total = QSeries.zero(n)
    j = 1
    while (r + 1) * j <= n:
        total = total + _smallest_rep_term(j, r, n)
        j += 1
    rhs = overpartition_series(n) - omega_product(1, None, r, n)
    eq = [
        Side("sum over smallest repeating size", "closed", total),
        Side("complement form", "closed", rhs),
    ]
    if with_brute:
        eq.append(
            Side(
                "enumerated counts",
                "brute",
                _brute_rep_filtered(r, n, lambda big, small: small > 0),
            )
        )
    return [eq]


def _build_i9(p, n, with_brute):
    r, limit = p["r"], p["m"]
    total = QSeries.zero(n)
    for j in range(1, limit + 1):
        if (r + 1) * j > n:
            break
        total = total + _smallest_rep_term(j, r, n)
    rhs = overpartition_series(n) - omega_product(1, limit, r, n) * _tail_series(limit + 1, n)
    eq = [
        Side("partial sum over smallest repeating size", "closed", total),
        Side("complement form", "closed", rhs),
    ]
    if with_brute:
        eq.append(
            Side(
                "enumerated counts",
                "brute",
                _brute_rep_filtered(r, n, lambda big, small: 0 < small <= limit),
            )
        )
    return [eq]


def _build_i10(p, n, with_brute):
    eq = [Side("closed form", "closed", _closed_maes_marked(p["r"], n))]
    if with_brute:
        hist = _excludant_sweep(p["r"], n)["maes_hist"]
        eq.append(Side("enumerated z-marked sum", "brute", _brute_marked_hist(hist, n)))
    return [eq]


def _build_i11(p, n, with_brute):
    eq = [Side("closed form", "closed", _closed_class_gf("L", p["k"], n))]
    if with_brute:
        eq.append(Side("class enumeration", "brute", _brute_class_marked("L", p["k"], n)))
    return [eq]


def _build_i12(p, n, with_brute):
    eq = [Side("closed form", "closed", _closed_class_gf("F", p["k"], n))]
    if with_brute:
        eq.append(Side("class enumeration", "brute", _brute_class_marked("F", p["k"], n)))
    return [eq]


def _build_i13(p, n, with_brute):
    k, m, s, j = p["k"], p["m"], p["s"], p["j"]
    eq = [Side("closed form", "closed", _closed_basis_poly(k, m, s, j, n, "L", False))]
    if with_brute:
        parts = k * (m - 1) + s
        total = basis_gf("BL", k, parts, j, False, n) + basis_gf("BL", k, parts, j, True, n)
        eq.append(Side("basis enumeration", "brute", total))
    return [eq]


def _build_i14(p, n, with_brute):
    k, m, s, j = p["k"], p["m"], p["s"], p["j"]
    eq1 = [Side("closed form, plain largest part", "closed",
                _closed_basis_poly(k, m, s, j, n, "F", False))]
    eq2 = [Side("closed form, overlined largest part", "closed",
                _closed_basis_poly(k, m, s, j, n, "F", True))]
    if with_brute:
        parts = k * (m - 1) + s
        eq1.append(Side("basis enumeration", "brute", basis_gf("BF", k, parts, j, False, n)))
        eq2.append(Side("basis enumeration", "brute", basis_gf("BF", k, k * m, j, True, n)))
    return [eq1, eq2]


def _build_i15(p, n, with_brute):
    return [[
        Side("series sum", "closed", _closed_euler_lhs(n)),
        Side("product form", "closed", _closed_euler_rhs(n)),
    ]]


def _build_i16(p, n, with_brute):
    a, b, k = p["A"], p["B"], p["k"]
    lhs = gaussian_binomial(a, b, k, n)
    rhs = gaussian_binomial(a - 1, b - 1, k, n) + gaussian_binomial(a - 1, b, k, n).shift(k * b)
    return [[
        Side("binomial", "closed", lhs),
        Side("recurrence", "closed", rhs),
    ]]


def _build_i17(p, n, with_brute):
    k, j = p["k"], p["j"]
    total = QSeries.zero(n)
    m = j
    while k * (m - j) <= n:
        total = total + gaussian_binomial(m - 1, j - 1, k, n).shift(k * (m - j))
        m += 1
    rhs = q_pochhammer(1, k, j, n, step=k).reciprocal()
    return [[
        Side("binomial sum", "closed", total),
        Side("reciprocal product", "closed", rhs),
    ]]


def _build_i18(p, n, with_brute):
    k, s = p["k"], p["s"]
    closed = _closed_distinct_gf(k, s, n)
    eq1 = [Side("product form", "closed", closed)]
    eq2 = [Side("product form over z", "closed", closed.z_shift(-1))]
    if with_brute:
        eq1.append(Side(
            "basis elements, overlined smallest part", "brute",
            _brute_basis_marked(
                "BL", k, n,
                lambda lam: _length_residue(lam.num_parts, k) == s and lam.has_overlined(1),
            ),
        ))
        eq1.append(Side("distinct congruent partitions", "brute",
                        _brute_distinct_marked(k, s, n)))
        eq2.append(Side(
            "basis elements, plain smallest part", "brute",
            _brute_basis_marked(
                "BL", k, n,
                lambda lam: _length_residue(lam.num_parts, k) == s and not lam.has_overlined(1),
            ),
        ))
    return [eq1, eq2]


def _build_i19(p, n, with_brute):
    k, s = p["k"], p["s"]
    closed_k = _closed_distinct_gf(k, k, n)
    closed_s = _closed_distinct_gf(k, s, n)
    eq1 = [Side("product form", "closed", closed_k)]
    eq2 = [Side("product form over z", "closed", closed_s.z_shift(-1))]
    if with_brute:
        eq1.append(Side(
            "basis elements, overlined largest part", "brute",
            _brute_basis_marked(
                "BF", k, n,
                lambda lam: _length_residue(lam.num_parts, k) == k
                and lam.has_overlined(lam.largest_size),
            ),
        ))
        eq1.append(Side("distinct congruent partitions", "brute",
                        _brute_distinct_marked(k, k, n)))
        eq2.append(Side(
            "basis elements, plain largest part", "brute",
            _brute_basis_marked(
                "BF", k, n,
                lambda lam: _length_residue(lam.num_parts, k) == s
                and not lam.has_overlined(lam.largest_size),
            ),
        ))
        eq2.append(Side("distinct congruent partitions over z", "brute",
                        _brute_distinct_marked(k, s, n).z_shift(-1)))
    return [eq1, eq2]


def _positive(name):
    def check(v):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"parameter {name} must be a positive integer")
        return v

    return check


def _nonneg(name):
    def check(v):
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"parameter {name} must be a nonnegative integer")
        return v

    return check


@dataclass(frozen=True)
class Identity:
    id: str
    summary: str
    builder: object
    param_checks: dict
    defaults: dict
    grid: object
    has_brute: bool
    # Entries whose enumeration walks all overpartitions up to the truncation
    # are capped at BRUTE_TRUNC_GUARD; basis-backed and pure-series entries
    # only cost series arithmetic, so they share the larger cap.
    guard: int = 0

    def __post_init__(self):
        if self.guard == 0:
            object.__setattr__(
                self, "guard",
                BRUTE_TRUNC_GUARD if self.has_brute else SERIES_TRUNC_GUARD,
            )

    def normalize(self, params) -> dict:
        params = dict(params or {})
        out = dict(self.defaults)
        for name, value in params.items():
            if name not in self.param_checks:
                raise ValueError(f"{self.id} takes no parameter {name!r}")
            out[name] = value
        for name, check in self.param_checks.items():
            if name not in out:
                raise ValueError(f"{self.id} requires parameter {name!r}")
            out[name] = check(out[name])
        return out

    def build(self, params: dict, trunc: int, with_brute: bool):
        return self.builder(params, trunc, with_brute)


def _grid_r():
    return [{"r": r} for r in (1, 2, 3)]


def _grid_rn(name, hi):
    return [{"r": r, name: v} for r in (1, 2, 3) for v in range(1, hi + 1)]


def _grid_k(hi):
    return [{"k": k} for k in range(1, hi + 1)]


def _grid_kmsj():
    return [
        {"k": k, "m": m, "s": s, "j": j}
        for k in (1, 2, 3)
        for m in range(1, 8)
        for s in range(1, k + 1)
        for j in range(1, m + 1)
    ]


def _grid_ks():
    return [{"k": k, "s": s} for k in (1, 2, 3) for s in range(1, k + 1)]


def _grid_abk():
    return [
        {"A": a, "B": b, "k": k}
        for k in (1, 2, 3, 4)
        for a in range(1, 13)
        for b in range(0, a + 1)
    ]


def _s_check(v):
    if not isinstance(v, int) or v < 1:
        raise ValueError("parameter s must be a positive integer")
    return v


def _reading_check(v):
    if v not in W_READINGS:
        raise ValueError(f"w_reading must be one of {W_READINGS}")
    return v


def _form_check(v):
    if v not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")
    return v


def _with_forms(grid):
    return [dict(p, form=form) for p in grid for form in FORMS]


IDENTITIES = {
    e.id: e
    for e in [
        Identity("I1", "total minimal excludant size, chain length 1",
                 _build_i1, {}, {}, lambda: [{}], True),
        Identity("I2", "total minimal excludant size, chain length r",
                 _build_i2, {"r": _positive("r"), "form": _form_check},
                 {"form": FORM_DEFAULT}, lambda: _with_forms(_grid_r()), True),
        Identity("I3", "total maximal excludant size, chain length r",
                 _build_i3, {"r": _positive("r"), "w_reading": _reading_check},
                 {"w_reading": W_READING_DEFAULT}, _grid_r, True),
        Identity("I4", "bridge between the two excludant-total forms",
                 _build_i4, {"form": _form_check}, {"form": FORM_DEFAULT},
                 lambda: _with_forms([{}]), True),
        Identity("I5", "stratification by largest repeating size",
                 _build_i5, {"r": _positive("r")}, {}, _grid_r, True),
        Identity("I6", "largest repeating size at most n-1",
                 _build_i6, {"r": _positive("r"), "n": _positive("n"), "form": _form_check},
                 {"form": FORM_DEFAULT},
                 lambda: _with_forms(_grid_rn("n", 8)), True),
        Identity("I7", "z-marked minimal excludant size generator",
                 _build_i7, {"r": _positive("r")}, {}, _grid_r, True),
        Identity("I8", "some positive repeating size",
                 _build_i8, {"r": _positive("r")}, {}, _grid_r, True),
        Identity("I9", "smallest positive repeating size at most m",
                 _build_i9, {"r": _positive("r"), "m": _positive("m")}, {},
                 lambda: _grid_rn("m", 8), True),
        Identity("I10", "z-marked maximal excludant size generator",
                 _build_i10, {"r": _positive("r")}, {}, _grid_r, True),
        Identity("I11", "L-class z-marked generating function",
                 _build_i11, {"k": _positive("k")}, {}, lambda: _grid_k(4), True),
        Identity("I12", "F-class z-marked generating function",
                 _build_i12, {"k": _positive("k")}, {}, lambda: _grid_k(4), True),
        Identity("I13", "L-basis polynomial closed form",
                 _build_i13,
                 {"k": _positive("k"), "m": _positive("m"), "s": _s_check, "j": _positive("j")},
                 {}, _grid_kmsj, True, guard=SERIES_TRUNC_GUARD),
        Identity("I14", "F-basis polynomial closed forms",
                 _build_i14,
                 {"k": _positive("k"), "m": _positive("m"), "s": _s_check, "j": _positive("j")},
                 {}, _grid_kmsj, True, guard=SERIES_TRUNC_GUARD),
        Identity("I15", "Euler product expansion",
                 _build_i15, {}, {}, lambda: [{}], False),
        Identity("I16", "q-binomial recurrence",
                 _build_i16,
                 {"A": _positive("A"), "B": _nonneg("B"), "k": _positive("k")},
                 {}, _grid_abk, False),
        Identity("I17", "geometric q-binomial summation",
                 _build_i17, {"k": _positive("k"), "j": _positive("j")}, {},
                 lambda: [{"k": k, "j": j} for k in (1, 2, 3) for j in range(1, 7)],
                 False),
        Identity("I18", "L-basis subsets against distinct congruent partitions",
                 _build_i18, {"k": _positive("k"), "s": _s_check}, {}, _grid_ks, True),
        Identity("I19", "F-basis subsets against distinct congruent partitions",
                 _build_i19, {"k": _positive("k"), "s": _s_check}, {}, _grid_ks, True),
    ]
}


def _check_params(entry: Identity, params: dict):
    if "s" in params and "k" in params and not params["s"] <= params["k"]:
        raise ValueError("parameter s must satisfy 1 <= s <= k")


def _check_guard(entry: Identity, trunc: int):
    if trunc < 0:
        raise ValueError("truncation must be >= 0")
    if trunc > entry.guard:
        raise ValueError(
            f"{entry.id} is limited to truncation {entry.guard} (got {trunc})"
        )


def closed_form(identity: str, params=None, trunc: int = 25):
    """The identity's written sides built from series primitives only.

    Returns the pair (lhs, rhs) of the identity's primary equation; for
    identities whose written left side is itself the enumeration, both
    elements are the closed form.
    """
    entry = IDENTITIES[identity]
    params = entry.normalize(params)
    _check_params(entry, params)
    _check_guard(entry, trunc)
    sides = entry.build(params, trunc, with_brute=False)[0]
    return sides[0].value, sides[-1].value


def brute_force(identity: str, params=None, trunc: int = 25):
    """The identity's combinatorial side, computed by full enumeration."""
    entry = IDENTITIES[identity]
    params = entry.normalize(params)
    _check_params(entry, params)
    if not entry.has_brute:
        raise ValueError(f"{identity} has no enumeration side")
    _check_guard(entry, trunc)
    for eq in entry.build(params, trunc, with_brute=True):
        for side in eq:
            if side.kind == "brute":
                return side.value
    raise AssertionError(f"{identity} produced no enumeration side")


def verify(identity: str, params=None, trunc: int = 25) -> VerificationReport:
    """Compare every side of the identity coefficientwise."""
    entry = IDENTITIES[identity]
    params = entry.normalize(params)
    _check_params(entry, params)
    _check_guard(entry, trunc)
    mismatches = []
    for eq in entry.build(params, trunc, with_brute=True):
        ref = eq[0]
        for other in eq[1:]:
            mismatches.extend(_diff(ref.value, other.value))
    mismatches.sort(key=lambda m: (m.q, -1 if m.z is None else m.z))
    return VerificationReport(
        identity=identity,
        params=params,
        trunc=trunc,
        status="pass" if not mismatches else "fail",
        mismatches=tuple(mismatches),
    )


def default_grid(identity: str):
    """Parameter combinations used by catalog-wide verification."""
    return IDENTITIES[identity].grid()


def verify_all(trunc: int = 25, identities=None):
    """Verify the whole catalog on the default grids, in catalog order."""
    reports = []
    for identity in identities or IDENTITY_IDS:
        entry = IDENTITIES[identity]
        for params in entry.grid():
            reports.append(verify(identity, params, min(trunc, entry.guard)))
    return reports


def theorem_count_check(which: str, n: int, r: int) -> VerificationReport:
    """Count-level check of the two excludant/repeating-size relations.

    Both sides are encoded as bivariate polynomials whose q-axis carries the
    excludant value and whose z-axis carries the part-count parameter, so a
    mismatch at (q=k, z=j) pinpoints the failing pair.  The truncation field
    records the weight n.
    """
    if which not in ("Thm2_1", "Thm2_2"):
        raise ValueError("which must be Thm2_1 or Thm2_2")
    if n < 0 or n > BRUTE_TRUNC_GUARD:
        raise ValueError(f"n must lie in 0..{BRUTE_TRUNC_GUARD}")
    if r < 1:
        raise ValueError("r must be >= 1")
    axis = n + 2
    lhs = defaultdict(lambda: [0] * (axis + 1))
    rhs = defaultdict(lambda: [0] * (axis + 1))
    for pi in iter_overpartitions(n, Convention.LAST):
        if which == "Thm2_1":
            kk = min_excludant_size(pi, r)
            lhs[count_parts_above(pi, kk)][kk] += 1
            big = largest_repeating_size(pi, r)
            rhs[big][count_parts_above(pi, big) + 1] += 1
        else:
            kk = max_excludant_size(pi, r)
            if kk >= 1:
                lhs[count_parts_above(pi, kk)][kk] += 1
            small = smallest_positive_repeating_size(pi, r)
            if small is not None:
                rhs[small][count_parts_above(pi, small, inclusive=True) - 1] += 1
    left = ZQPoly({z: QSeries(c, axis) for z, c in lhs.items()}, axis)
    right = ZQPoly({z: QSeries(c, axis) for z, c in rhs.items()}, axis)
    mismatches = _diff_zq(left, right)
    mismatches.sort(key=lambda m: (m.q, m.z))
    return VerificationReport(
        identity=which,
        params={"n": n, "r": r},
        trunc=n,
        status="pass" if not mismatches else "fail",
        mismatches=tuple(mismatches),
    )
