"""Skew cyclic structure on mixed binary/quaternary words.

A word ``(a_0 .. a_{r-1} | b_0 .. b_{s-1})`` is identified with a pair
of skew polynomials ``(a(x), b(x))`` in ``F[x;theta] x R[x;theta]``
taken modulo ``x^r - 1`` and ``x^s - 1``.  The skew cyclic shift
rotates each side one step and applies the automorphism to every
entry; multiplication by ``x`` on the pair side matches the shift on
the word side.

A code of this kind is described by a generator tuple built from up to
three template rows::

    (f, 0)        f   binary, right divisor of x^r - 1 mod 2
    (l, g + 2a)   g,a quaternary, l binary
    (l1, 2q)      q   quaternary, l1 binary

``validate_generators`` checks the compatibility conditions case by
case and reports each one by name.  ``derive_cofactors`` computes the
cofactors ``h_f, h_g, h_q`` and the mixing polynomial ``k``;
``spanning_set`` lays out the shifts of the template rows whose span
is the whole code, and ``skew_code_cardinality`` counts the codewords
from the cofactor degrees alone.

When ``g + 2a`` does not divide ``x^s - 1`` exactly but ``g`` does,
the tuple is still accepted: the leftover of the ``g`` row under
``h_g`` is itself a code row of the third kind and is materialised as
a derived ``(l1, 2q)`` generator.  The validation report says so.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field, replace
from typing import Optional

from .errors import ContextMismatch, MissingComponent, NotRightDivisible, ShapeMismatch
from .galois import AutomorphismSpec
from .mixedcode import MixedMatrix, MixedWord
from .skewpoly import SkewPoly

__all__ = [
    "ModulePair",
    "SkewGenerators",
    "ConditionCheck",
    "ValidationReport",
    "SpanningSet",
    "theta_shift",
    "to_pair",
    "from_pair",
    "module_mul",
    "psi_project",
    "validate_generators",
    "derive_cofactors",
    "spanning_set",
    "skew_code_cardinality",
]


@dataclass(frozen=True)
class ModulePair:
    """A word in polynomial form: binary part ``a``, quaternary part ``b``."""

    a: SkewPoly
    b: SkewPoly
    r: int
    s: int

    def __post_init__(self):
        if self.a.ring or not self.b.ring:
            raise ContextMismatch("pair must be (field poly, ring poly)")
        if self.a.autom != self.b.autom:
            raise ContextMismatch("pair components from different skew rings")
        if self.r < 0 or self.s < 0 or self.r + self.s == 0:
            raise ShapeMismatch("pair needs positive length")
        # Store reduced representatives.
        if self.r and (self.a.degree if self.a.coeffs else -1) >= self.r:
            object.__setattr__(self, "a", self.a.reduce_mod_xn(self.r))
        if self.s and (self.b.degree if self.b.coeffs else -1) >= self.s:
            object.__setattr__(self, "b", self.b.reduce_mod_xn(self.s))
        if not self.r and self.a.coeffs:
            raise ShapeMismatch("binary part must be zero when r = 0")
        if not self.s and self.b.coeffs:
            raise ShapeMismatch("quaternary part must be zero when s = 0")


def theta_shift(w: MixedWord, autom: AutomorphismSpec) -> MixedWord:
    """One skew cyclic step: rotate each side, twisting every entry."""
    if autom.ctx != w.ctx:
        raise ContextMismatch("word and automorphism contexts differ")
    alpha = [autom.apply(a) for a in w.alpha]
    beta = [autom.apply(b) for b in w.beta]
    if alpha:
        alpha = alpha[-1:] + alpha[:-1]
    if beta:
        beta = beta[-1:] + beta[:-1]
    return MixedWord(w.ctx, alpha, beta)


def to_pair(w: MixedWord, autom: AutomorphismSpec) -> ModulePair:
    """Polynomial form of a word."""
    if autom.ctx != w.ctx:
        raise ContextMismatch("word and automorphism contexts differ")
    return ModulePair(SkewPoly(autom, w.alpha, False),
                      SkewPoly(autom, w.beta, True), w.r, w.s)


def from_pair(p: ModulePair) -> MixedWord:
    """Coefficient form of a pair, padded to shape ``(r, s)``."""
    ctx = p.a.autom.ctx
    alpha = [p.a.coeff(i) for i in range(p.r)]
    beta = [p.b.coeff(i) for i in range(p.s)]
    return MixedWord(ctx, alpha, beta)


def module_mul(fp: SkewPoly, p: ModulePair) -> ModulePair:
    """Act by a quaternary skew polynomial on a pair.

    The binary side sees the mod-2 image of ``fp``; both sides are
    reduced modulo their ``x^n - 1``.
    """
    if not fp.ring:
        raise ContextMismatch("the acting polynomial must be quaternary")
    if fp.autom != p.a.autom:
        raise ContextMismatch("polynomial from a different skew ring")
    a = fp.mod2() * p.a
    b = fp * p.b
    if p.r:
        a = a.reduce_mod_xn(p.r)
    if p.s:
        b = b.reduce_mod_xn(p.s)
    return ModulePair(a, b, p.r, p.s)


def psi_project(p: ModulePair) -> SkewPoly:
    """Forget the binary part; a module map onto the quaternary side."""
    return p.b


@dataclass(frozen=True)
class SkewGenerators:
    """A generator tuple, optionally completed with its cofactors.

    Component kinds: ``f``, ``l``, ``l1`` binary; ``g``, ``a``, ``q``
    quaternary.  Any component may be ``None`` (absent).  ``a`` or
    ``l`` require ``g``; ``l1`` requires ``q``.  The cofactor slots
    are filled by :func:`derive_cofactors`; ``materialized`` marks a
    derived ``(l1, 2q)`` row (see the module docstring).
    """

    autom: AutomorphismSpec
    r: int
    s: int
    f: Optional[SkewPoly] = None
    l: Optional[SkewPoly] = None
    g: Optional[SkewPoly] = None
    a: Optional[SkewPoly] = None
    l1: Optional[SkewPoly] = None
    q: Optional[SkewPoly] = None
    h_f: Optional[SkewPoly] = None
    h_g: Optional[SkewPoly] = None
    h_q: Optional[SkewPoly] = None
    k: Optional[SkewPoly] = None
    materialized: bool = False

    def __post_init__(self):
        if self.r < 0 or self.s < 0 or self.r + self.s == 0:
            raise ShapeMismatch("lengths r, s must describe coordinates")
        for name in ("f", "l", "l1"):
            p = getattr(self, name)
            if p is not None and p.ring:
                raise ContextMismatch(f"{name} must be a binary polynomial")
        for name in ("g", "a", "q"):
            p = getattr(self, name)
            if p is not None and not p.ring:
                raise ContextMismatch(f"{name} must be a quaternary polynomial")
        for name in ("f", "l", "l1", "g", "a", "q"):
            p = getattr(self, name)
            if p is not None and p.autom != self.autom:
                raise ContextMismatch(f"{name} uses a different skew ring")
        if (self.a is not None or self.l is not None) and self.g is None:
            raise MissingComponent("a and l only make sense with g")
        if self.l1 is not None and self.q is None:
            raise MissingComponent("l1 only makes sense with q")
        if (self.f is not None or self.l is not None
                or self.l1 is not None) and self.r == 0:
            raise ShapeMismatch("binary components need r > 0")
        if (self.g is not None or self.q is not None) and self.s == 0:
            raise ShapeMismatch("quaternary components need s > 0")

    @property
    def case(self) -> str:
        """Which shape of tuple this is: 'i', 'ii', 'iii' or 'binary'."""
        if self.g is not None and self.q is not None:
            return "iii"
        if self.g is not None:
            return "ii"
        if self.q is not None:
            return "i"
        return "binary"

    def g_plus_2a(self) -> SkewPoly:
        if self.g is None:
            raise MissingComponent("no g component")
        return self.g if self.a is None else self.g + 2 * self.a


@dataclass(frozen=True)
class ConditionCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    case: str
    checks: tuple
    notes: tuple = ()

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_names(self):
        return [c.name for c in self.checks if not c.passed]

    def __str__(self):
        lines = [f"case {self.case}"]
        for c in self.checks:
            status = "ok  " if c.passed else "FAIL"
            suffix = f"  ({c.detail})" if c.detail else ""
            lines.append(f"  [{status}] {c.name}{suffix}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _exact(num: SkewPoly, den: SkewPoly):
    """Quotient when den right-divides num, else None."""
    try:
        quo, rem = num.right_divmod(den)
    except Exception:
        return None
    return quo if rem.is_zero else None


def _f_multiple(prod: SkewPoly, f_eff) -> bool:
    """Whether prod lies in the f lattice; vacuous with no binary side."""
    if f_eff is None:
        return prod.is_zero
    return _exact(prod, f_eff) is not None


def _f_for_checks(gens: SkewGenerators):
    if gens.f is not None:
        return gens.f, None
    f_eff = SkewPoly.x_pow_minus_one(gens.autom, gens.r, False) \
        if gens.r else None
    return f_eff, "f absent, divisibilities read against x^r-1"


def validate_generators(gens: SkewGenerators) -> ValidationReport:
    """Check the case conditions of a generator tuple, one by one.

    Nothing is raised for a failed condition; each is reported by name
    with a detail string.  The report's ``valid`` property is the
    conjunction.
    """
    autom = gens.autom
    checks = []
    notes = []
    case = gens.case

    f_eff, f_note = _f_for_checks(gens)
    if f_note:
        notes.append(f_note)

    if gens.r:
        xr1 = SkewPoly.x_pow_minus_one(autom, gens.r, False)
        ok = _exact(xr1, f_eff) is not None
        checks.append(ConditionCheck("f |r x^r-1 (mod 2)", ok,
                                     "" if ok else "remainder is nonzero"))
    xs1 = SkewPoly.x_pow_minus_one(autom, gens.s, False) if gens.s else None
    xs1_ring = SkewPoly.x_pow_minus_one(autom, gens.s, True) if gens.s else None

    def deg_check(name, p, bound, bound_name):
        limit = bound.degree if bound is not None else float("inf")
        val = p.degree if p is not None else float("-inf")
        ok = val < limit
        checks.append(ConditionCheck(
            f"deg({name}) < deg({bound_name})", ok,
            f"deg {val} vs {limit}" if not ok else ""))

    if case == "binary":
        return ValidationReport(case, tuple(checks), tuple(notes))

    if case == "i":
        notes.append("the divisibility names l; it is read as l1")
        h_q = _exact(xs1, gens.q.mod2())
        checks.append(ConditionCheck("q |r x^s-1 (mod 2)", h_q is not None,
                                     "" if h_q else "remainder is nonzero"))
        deg_check("l1", gens.l1, f_eff, "f")
        if h_q is not None:
            prod = (h_q * gens.l1).reduce_mod_xn(gens.r) if gens.l1 \
                else SkewPoly.zero(autom, False)
            ok = _f_multiple(prod, f_eff)
            checks.append(ConditionCheck("f |r h_q*l1 (mod 2)", ok,
                                         "" if ok else "remainder is nonzero"))
        else:
            checks.append(ConditionCheck("f |r h_q*l1 (mod 2)", False,
                                         "h_q undefined"))
        return ValidationReport(case, tuple(checks), tuple(notes))

    if case == "ii":
        deg_check("l", gens.l, f_eff, "f")
        deg_check("a", gens.a, gens.g, "g")
        gg = gens.g_plus_2a()
        h_ga = _exact(xs1_ring, gg)
        if h_ga is not None:
            checks.append(ConditionCheck("g+2a |r x^s-1", True))
            prod = (h_ga.mod2() * gens.l).reduce_mod_xn(gens.r) if gens.l \
                else SkewPoly.zero(autom, False)
            ok = _f_multiple(prod, f_eff)
            checks.append(ConditionCheck("f |r h_{g,a}*l (mod 2)", ok,
                                         "" if ok else "remainder is nonzero"))
            return ValidationReport(case, tuple(checks), tuple(notes))
        # g + 2a leaves a remainder; accept the tuple when g itself
        # divides, materialising the leftover row h_g * (l, g+2a).
        h_g = _exact(xs1_ring, gens.g)
        checks.append(ConditionCheck(
            "g+2a |r x^s-1, or g |r x^s-1 with a residual (l1, 2q) row",
            h_g is not None,
            "g+2a leaves a remainder; g divides exactly" if h_g is not None
            else "neither g+2a nor g divides x^s-1"))
        if h_g is None:
            return ValidationReport(case, tuple(checks), tuple(notes))
        notes.append("residual row (l1, 2q) = h_g * (l, g+2a) materialised")
        l1m, qm = _materialized_residual(gens, h_g)
        if qm is None:
            # Residual has no quaternary part; the binary leftover must
            # already be an f multiple.
            prod = l1m if l1m is not None else SkewPoly.zero(autom, False)
            ok = _f_multiple(prod, f_eff)
            checks.append(ConditionCheck("f |r h_g*l (mod 2)", ok,
                                         "" if ok else "remainder is nonzero"))
            return ValidationReport(case, tuple(checks), tuple(notes))
        h_q = _exact(xs1, qm)
        checks.append(ConditionCheck(
            "q |r x^s-1 (mod 2), q = h_g*a of the residual row",
            h_q is not None, "" if h_q else "remainder is nonzero"))
        if h_q is not None:
            prod = (h_q * l1m).reduce_mod_xn(gens.r) if l1m \
                else SkewPoly.zero(autom, False)
            ok = _f_multiple(prod, f_eff)
            checks.append(ConditionCheck("f |r h_q*l1 (mod 2)", ok,
                                         "" if ok else "remainder is nonzero"))
        return ValidationReport(case, tuple(checks), tuple(notes))

    # Case iii.
    g_bar = gens.g.mod2()
    q_bar = gens.q.mod2()
    a_bar = gens.a.mod2() if gens.a is not None \
        else SkewPoly.zero(autom, False)
    ok = _exact(g_bar, q_bar) is not None if q_bar else False
    checks.append(ConditionCheck("q |r g (mod 2)", ok,
                                 "" if ok else "remainder is nonzero"))
    h_g = _exact(xs1, g_bar)
    checks.append(ConditionCheck("g |r x^s-1 (mod 2)", h_g is not None,
                                 "" if h_g else "remainder is nonzero"))
    h_q = _exact(xs1, q_bar) if q_bar else None
    checks.append(ConditionCheck("q |r x^s-1 (mod 2)", h_q is not None,
                                 "" if h_q else "remainder is nonzero"))
    k = None
    if h_g is not None and q_bar:
        k = _exact((h_g * a_bar).reduce_mod_xn(gens.s), q_bar)
    checks.append(ConditionCheck("q |r h_g*a (mod 2)", k is not None,
                                 "" if k is not None
                                 else "no k with k*q = h_g*a"))
    deg_check("l", gens.l, f_eff, "f")
    deg_check("l1", gens.l1, f_eff, "f")
    deg_check("a", gens.a, gens.q, "q")
    if h_q is not None:
        prod = (h_q * gens.l1).reduce_mod_xn(gens.r) if gens.l1 \
            else SkewPoly.zero(autom, False)
        ok = _f_multiple(prod, f_eff)
        checks.append(ConditionCheck("f |r h_q*l1 (mod 2)", ok,
                                     "" if ok else "remainder is nonzero"))
    else:
        checks.append(ConditionCheck("f |r h_q*l1 (mod 2)", False,
                                     "h_q undefined"))
    if k is not None and h_g is not None:
        mix = SkewPoly.zero(autom, False)
        if gens.l1 is not None:
            mix = mix + k * gens.l1
        if gens.l is not None:
            mix = mix + h_g * gens.l
        if gens.r:
            mix = mix.reduce_mod_xn(gens.r)
        ok = _f_multiple(mix, f_eff)
        checks.append(ConditionCheck("f |r k*l1 + h_g*l (mod 2)", ok,
                                     "" if ok else "remainder is nonzero"))
    else:
        checks.append(ConditionCheck("f |r k*l1 + h_g*l (mod 2)", False,
                                     "k or h_g undefined"))
    return ValidationReport(case, tuple(checks), tuple(notes))


def _materialized_residual(gens: SkewGenerators, h_g: SkewPoly):
    """Residual row components h_g * (l, g+2a) with 2q halved out.

    Returns (l1, q) as (field poly or None, field poly or None).
    """
    autom = gens.autom
    l1m = None
    if gens.l is not None and not gens.l.is_zero:
        l1m = (h_g.mod2() * gens.l).reduce_mod_xn(gens.r)
        if l1m.is_zero:
            l1m = None
    qm = None
    if gens.a is not None and not gens.a.is_zero:
        prod = (h_g * (2 * gens.a)).reduce_mod_xn(gens.s)
        # prod is doubled; halve it into the field.
        qm = SkewPoly(autom, [c.halve() for c in prod.coeffs], False)
        if qm.is_zero:
            qm = None
    return l1m, qm


def derive_cofactors(gens: SkewGenerators) -> SkewGenerators:
    """Complete a tuple with ``h_f``, ``h_g``, ``h_q`` and ``k``.

    ``h_g`` is quaternary in case ii (the cofactor of ``g + 2a``, or of
    ``g`` when only the fallback division is exact) and binary in case
    iii.  ``h_q`` and ``k`` are always binary.

    Raises
    ------
    NotRightDivisible
        When a division this case requires leaves a remainder.
    """
    autom = gens.autom
    case = gens.case
    h_f = h_g = h_q = k = None
    l1, q = gens.l1, gens.q
    materialized = False

    if gens.f is not None:
        xr1 = SkewPoly.x_pow_minus_one(autom, gens.r, False)
        h_f = _exact(xr1, gens.f)
        if h_f is None:
            raise NotRightDivisible("f does not right-divide x^r-1 (mod 2)")

    if gens.s:
        xs1 = SkewPoly.x_pow_minus_one(autom, gens.s, False)
        xs1_ring = SkewPoly.x_pow_minus_one(autom, gens.s, True)

    if case == "i":
        h_q = _exact(xs1, gens.q.mod2())
        if h_q is None:
            raise NotRightDivisible("q does not right-divide x^s-1 (mod 2)")

    elif case == "ii":
        h_g = _exact(xs1_ring, gens.g_plus_2a())
        if h_g is None:
            h_g = _exact(xs1_ring, gens.g)
            if h_g is None:
                raise NotRightDivisible(
                    "neither g+2a nor g right-divides x^s-1")
            l1m, qm = _materialized_residual(gens, h_g)
            if qm is not None:
                materialized = True
                l1 = l1m
                q = qm.lift()
                h_q = _exact(xs1, qm)
                if h_q is None:
                    raise NotRightDivisible(
                        "the residual q = h_g*a does not right-divide "
                        "x^s-1 (mod 2)")

    elif case == "iii":
        g_bar, q_bar = gens.g.mod2(), gens.q.mod2()
        h_g = _exact(xs1, g_bar)
        if h_g is None:
            raise NotRightDivisible("g does not right-divide x^s-1 (mod 2)")
        h_q = _exact(xs1, q_bar)
        if h_q is None:
            raise NotRightDivisible("q does not right-divide x^s-1 (mod 2)")
        a_bar = gens.a.mod2() if gens.a is not None \
            else SkewPoly.zero(autom, False)
        k = _exact((h_g * a_bar).reduce_mod_xn(gens.s), q_bar)
        if k is None:
            raise NotRightDivisible("h_g*a is not a right multiple of q "
                                    "(mod 2)")

    return replace(gens, l1=l1, q=q, h_f=h_f, h_g=h_g, h_q=h_q, k=k,
                   materialized=materialized)


@dataclass(frozen=True)
class SpanningSet:
    """Shift rows of each template generator, in matrix order."""

    s1: tuple
    s2: tuple
    s3: tuple

    @property
    def rows(self):
        return list(self.s1) + list(self.s2) + list(self.s3)


def _shift_count(cofactor: Optional[SkewPoly]) -> int:
    if cofactor is None or cofactor.is_zero:
        return 0
    return max(int(cofactor.degree), 0)


def spanning_set(gens: SkewGenerators):
    """Rows spanning the code: shifts of each template generator.

    Completes the tuple first when the cofactors are missing.  Row
    counts are the cofactor degrees, so the matrix has
    ``deg h_f + deg h_g + deg h_q`` rows.

    Returns
    -------
    (SpanningSet, MixedMatrix)
    """
    if gens.h_f is None and gens.h_g is None and gens.h_q is None:
        gens = derive_cofactors(gens)
    autom = gens.autom
    ctx = autom.ctx
    r, s = gens.r, gens.s

    def shifts(pair, count):
        out = []
        for i in range(count):
            xp = SkewPoly.x_power(autom, i, True)
            out.append(from_pair(module_mul(xp, pair)))
        return out

    zero_f = SkewPoly.zero(autom, False)
    zero_r = SkewPoly.zero(autom, True)
    s1 = s2 = s3 = ()
    if gens.f is not None:
        pair = ModulePair(gens.f, zero_r, r, s)
        s1 = tuple(shifts(pair, _shift_count(gens.h_f)))
    if gens.g is not None:
        pair = ModulePair(gens.l if gens.l is not None else zero_f,
                          gens.g_plus_2a(), r, s)
        s2 = tuple(shifts(pair, _shift_count(gens.h_g)))
    if gens.q is not None:
        pair = ModulePair(gens.l1 if gens.l1 is not None else zero_f,
                          (2 * gens.q).reduce_mod_xn(s), r, s)
        s3 = tuple(shifts(pair, _shift_count(gens.h_q)))
    ss = SpanningSet(s1, s2, s3)
    mat = MixedMatrix(ctx, r, s, ss.rows)
    return ss, mat


def skew_code_cardinality(gens: SkewGenerators) -> int:
    """Codeword count implied by the cofactor degrees.

    This is the span size when the spanning rows are independent, which
    the degree conditions on a generator tuple do not force on their
    own.  Enumerate the span to confirm it for a particular tuple.
    """
    if gens.h_f is None and gens.h_g is None and gens.h_q is None:
        gens = derive_cofactors(gens)
    m = gens.autom.ctx.m
    n1 = _shift_count(gens.h_f)
    n2 = _shift_count(gens.h_g)
    n3 = _shift_count(gens.h_q)
    return (1 << (m * n1)) * (1 << (2 * m * n2)) * (1 << (m * n3))
