"""Untwisted affine Kac-Moody algebra g(A) = L(g) + CK + Cd, truncated.

Elements are finite sums of t^j (x) x plus multiples of K and d.  Graded
subspaces of the non-negative part are ``LoopSubspace`` values: one
ad-h-stable layer per degree below ``tail`` and all of g from ``tail`` on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Union

from . import oracle
from .chevalley import BasisKey, ChevalleyAlgebra, HStableSubspace
from .rootsys import Root, SimpleSet, neg

# -- elements --------------------------------------------------------------


@dataclass
class AffineElement:
    terms: dict = field(default_factory=dict)  # degree -> {BasisKey: Fraction}
    k: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    @classmethod
    def loop(cls, degree: int, x: Union[BasisKey, Mapping]) -> "AffineElement":
        el = dict(x) if isinstance(x, Mapping) else {x: Fraction(1)}
        return cls({degree: {k: Fraction(v) for k, v in el.items() if v}})

    @classmethod
    def central(cls, c=1) -> "AffineElement":
        return cls(k=Fraction(c))

    @classmethod
    def derivation(cls, c=1) -> "AffineElement":
        return cls(d=Fraction(c))

    def __add__(self, other: "AffineElement") -> "AffineElement":
        terms = {j: dict(v) for j, v in self.terms.items()}
        for j, v in other.terms.items():
            layer = terms.setdefault(j, {})
            for key, c in v.items():
                layer[key] = layer.get(key, 0) + c
        return AffineElement(terms, self.k + other.k, self.d + other.d).normalized()

    def scale(self, c) -> "AffineElement":
        c = Fraction(c)
        return AffineElement(
            {j: {key: c * x for key, x in v.items()} for j, v in self.terms.items()}, c * self.k, c * self.d
        ).normalized()

    def __sub__(self, other: "AffineElement") -> "AffineElement":
        return self + other.scale(-1)

    def normalized(self) -> "AffineElement":
        terms = {}
        for j, v in self.terms.items():
            v = {key: c for key, c in v.items() if c != 0}
            if v:
                terms[j] = v
        return AffineElement(terms, self.k, self.d)

    def is_zero(self) -> bool:
        n = self.normalized()
        return not n.terms and n.k == 0 and n.d == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineElement):
            return NotImplemented
        return (self - other).is_zero()


def affine_bracket(g: ChevalleyAlgebra, a: AffineElement, b: AffineElement) -> AffineElement:
    """[t^n x + lK + mu d, t^m y + l1 K + mu1 d]
    = t^{n+m}[x,y] + mu m t^m y - mu1 n t^n x + n delta_{n,-m} (x|y) K."""
    out = AffineElement()
    for n, x in a.terms.items():
        for m, y in b.terms.items():
            z = g.bracket(x, y)
            if z:
                out = out + AffineElement({n + m: z})
            if n == -m and n != 0:
                out = out + AffineElement.central(n * g.form(x, y))
    if a.d:
        for m, y in b.terms.items():
            if m:
                out = out + AffineElement({m: y}).scale(a.d * m)
    if b.d:
        for n, x in a.terms.items():
            if n:
                out = out + AffineElement({n: x}).scale(-b.d * n)
    return out.normalized()


# -- graded subspaces ------------------------------------------------------


class IndeterminateError(RuntimeError):
    """A containment question reaches past the truncation cap."""


class PreconditionError(ValueError):
    pass


@dataclass
class LoopSubspace:
    """sum_j t^j (x) layers[j]  (+ t^j (x) g for j >= tail)  (+ CK) (+ Cd)."""

    layers: dict = field(default_factory=dict)  # degree -> HStableSubspace
    tail: Optional[int] = None
    has_K: bool = False
    has_d: bool = False
    # Set on bracket results known only below this degree.
    known_below: Optional[int] = None

    def __post_init__(self):
        if any(j < 0 for j in self.layers):
            raise ValueError("negative degrees are not modelled")
        if self.tail is not None:
            self.layers = {j: v for j, v in self.layers.items() if j < self.tail}
        self.layers = {j: v for j, v in self.layers.items() if not v.is_zero}

    @property
    def start(self) -> Optional[int]:
        degs = list(self.layers)
        if self.tail is not None:
            degs.append(self.tail)
        return min(degs) if degs else None

    def top(self) -> int:
        """First degree at or above which nothing but the tail remains."""
        if self.tail is not None:
            return self.tail
        return max(self.layers, default=-1) + 1

    def layer(self, g: ChevalleyAlgebra, j: int) -> HStableSubspace:
        if self.tail is not None and j >= self.tail:
            return g.full()
        return self.layers.get(j, g.zero())


def rho_bar(g: ChevalleyAlgebra, rho: HStableSubspace) -> LoopSubspace:
    """rho + t C[t] (x) g + CK + Cd."""
    return LoopSubspace({0: rho}, tail=1, has_K=True, has_d=True)


def bracket_loop(g: ChevalleyAlgebra, U: LoopSubspace, W: LoopSubspace, cap: int) -> LoopSubspace:
    """Layerwise [U, W] for degrees below ``cap``.

    Degrees at or above the symbolic tail are all of g: tail x tail gives
    [g, g] = g, and d acts on a positive-degree copy of g by a nonzero
    scalar.  No K-term arises since all degrees are non-negative.
    """
    tails = []
    if U.tail is not None and W.tail is not None:
        tails.append(U.tail + W.tail)
    if U.tail is not None and W.has_d:
        tails.append(max(U.tail, 1))
    if W.tail is not None and U.has_d:
        tails.append(max(W.tail, 1))
    sym_tail = min(tails) if tails else None
    full = g.full()
    layers = {}
    for k in range(cap):
        if sym_tail is not None and k >= sym_tail:
            break
        acc = g.zero()
        for i in range(k + 1):
            ui = U.layer(g, i)
            if ui.is_zero:
                continue
            wj = W.layer(g, k - i)
            if wj.is_zero:
                continue
            acc = acc + g.bracket_spaces(ui, wj)
            if acc == full:
                break
        if k >= 1:
            if U.has_d:
                acc = acc + W.layer(g, k)
            if W.has_d:
                acc = acc + U.layer(g, k)
        layers[k] = acc
    if sym_tail is not None and sym_tail <= cap:
        return LoopSubspace(layers, tail=sym_tail)
    if U.tail is None and W.tail is None and U.top() + W.top() <= cap:
        return LoopSubspace(layers)
    return LoopSubspace(layers, known_below=cap)


def loop_contains(g: ChevalleyAlgebra, T: LoopSubspace, X: LoopSubspace) -> bool:
    """X inside T; raises IndeterminateError if undecidable at X's cap."""
    if X.has_K and not T.has_K or X.has_d and not T.has_d:
        return False
    for j, layer in X.layers.items():
        if not T.layer(g, j).contains(layer):
            return False
    if X.tail is not None:
        if T.tail is None:
            return False
        full = g.full()
        for j in range(X.tail, T.tail):
            if T.layer(g, j) != full:
                return False
    if X.known_below is not None and (T.tail is None or T.tail > X.known_below):
        raise IndeterminateError(f"containment undecided above degree {X.known_below}")
    return True


def default_cap(T: LoopSubspace) -> int:
    return T.top() + 2


def normalizes(g: ChevalleyAlgebra, N: LoopSubspace, T: LoopSubspace, cap: Optional[int] = None) -> bool:
    cap = default_cap(T) if cap is None else cap
    return loop_contains(g, T, bracket_loop(g, N, T, cap))


def levi_of(g: ChevalleyAlgebra, rho: HStableSubspace) -> SimpleSet:
    """Simple roots whose negatives lie in a parabolic ``rho``."""
    levi = frozenset(i for i in range(g.rank) if rho.has_root(neg(g.rs.simple(i))))
    if g.parabolic(levi) != rho:
        raise PreconditionError("not a standard parabolic subalgebra")
    return levi


def normalizing_levis(g: ChevalleyAlgebra, T: LoopSubspace, cap: Optional[int] = None) -> list[SimpleSet]:
    """Every S with rho_S + tC[t]g + CK + Cd normalizing T."""
    out = []
    p = g.rank
    for k in range(p + 1):
        for S in combinations(range(p), k):
            if normalizes(g, rho_bar(g, g.parabolic(S)), T, cap):
                out.append(frozenset(S))
    return out


class NoFamilyNormalizer(RuntimeError):
    pass


def affine_normalizer(g: ChevalleyAlgebra, T: LoopSubspace, cap: Optional[int] = None) -> LoopSubspace:
    """Largest rho_S + tC[t]g + CK + Cd (S in Pi) normalizing T."""
    found = normalizing_levis(g, T, cap)
    if not found:
        raise NoFamilyNormalizer("no parabolic of the form rho_S + tC[t]g + CK + Cd normalizes T")
    top = frozenset().union(*found)
    if top not in found:
        raise NoFamilyNormalizer("normalizing parabolics have no largest member")
    return rho_bar(g, g.parabolic(top))


# -- constructions -----------------------------------------------------------


def build_tau_bar(
    g: ChevalleyAlgebra,
    tau: HStableSubspace,
    V: HStableSubspace,
    n: int,
    rho: Optional[HStableSubspace] = None,
    check: bool = True,
) -> LoopSubspace:
    """t^n tau + t^{n+1} V + t^{n+2} C[t] g + CK.

    With ``check`` the hypotheses V >= [tau, g] and [V, rho] <= V are
    verified; ``rho`` defaults to the normalizer of tau.
    """
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"degree n must be a positive integer, got {n!r}")
    if check:
        if not V.contains(g.bracket_spaces(tau, g.full())):
            raise PreconditionError("V does not contain [tau, g]")
        if rho is None:
            rho = oracle.normalizer_oracle(g, tau)
        if not V.contains(g.bracket_spaces(V, rho)):
            raise PreconditionError("[V, rho(tau)] is not inside V")
    return LoopSubspace({n: tau, n + 1: V}, tail=n + 2, has_K=True)


def appui_truncation(g: ChevalleyAlgebra, V: HStableSubspace, n: int) -> LoopSubspace:
    """t^{n+1} V + t^{n+2} C[t] g + CK."""
    return LoopSubspace({n + 1: V}, tail=n + 2, has_K=True)


def degree_zero_form(g: ChevalleyAlgebra, tau: HStableSubspace) -> LoopSubspace:
    """tau + t C[t] g + CK + Cd."""
    return LoopSubspace({0: tau}, tail=1, has_K=True, has_d=True)


@dataclass
class StandardReport:
    is_subalgebra: bool
    normalizer_levi: Optional[SimpleSet]
    claimed_levi: Optional[SimpleSet]
    ideal_of_claimed_normalizer: bool
    maximal: bool
    cap: int
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.is_subalgebra and self.ideal_of_claimed_normalizer and self.maximal


def verify_standard(
    g: ChevalleyAlgebra, T: LoopSubspace, rho: Optional[HStableSubspace] = None, cap: Optional[int] = None
) -> StandardReport:
    """Subalgebra, ideal of rho + tC[t]g + CK + Cd, and maximality in that family.

    Without ``rho`` the claimed normalizer is the largest normalizing member
    of the family, so only subalgebra and existence are really tested.
    ``cap`` may raise the truncation degree above its default T.top() + 2.
    """
    if cap is None:
        cap = default_cap(T)
    elif cap < default_cap(T):
        raise PreconditionError(f"cap {cap} is below the minimum {default_cap(T)}")
    notes = []
    is_sub = loop_contains(g, T, bracket_loop(g, T, T, cap))
    if not is_sub:
        notes.append("T is not closed under the bracket")
    if rho is not None:
        claimed = levi_of(g, rho)
        if not normalizes(g, rho_bar(g, rho), T, cap):
            notes.append("claimed normalizer does not normalize T")
            return StandardReport(is_sub, None, claimed, False, False, cap, notes)
    found = normalizing_levis(g, T, cap)
    top = frozenset().union(*found) if found else None
    if top is not None and top not in found:
        notes.append("normalizing family has no largest member")
        top = None
    claimed = levi_of(g, rho) if rho is not None else top
    if claimed is None:
        notes.append("no member of the parabolic family normalizes T")
        return StandardReport(is_sub, top, None, False, False, cap, notes)
    ideal = claimed in found
    if not ideal:
        notes.append("claimed normalizer does not normalize T")
    maximal = ideal and top == claimed
    if ideal and not maximal:
        notes.append("a strictly larger parabolic also normalizes T")
    return StandardReport(is_sub, top, claimed, ideal, maximal, cap, notes)


# -- graded classification -----------------------------------------------------


class GradedRejection(ValueError):
    def __init__(self, reasons: list[str]):
        super().__init__("; ".join(reasons))
        self.reasons = reasons


@dataclass
class GradedClassification:
    tau: HStableSubspace
    V: HStableSubspace
    n: int
    rho: HStableSubspace
    degree_zero: bool
    relations: dict


def graded_relations(g: ChevalleyAlgebra, T: LoopSubspace, n: int, rho: HStableSubspace) -> dict:
    """The four inclusions forced on the layers by the normalizer shape."""
    I = lambda j: T.layer(g, j)  # noqa: E731
    full = g.full()
    br = g.bracket_spaces
    rel = {
        "1: [I_n, rho] <= I_n": I(n).contains(br(I(n), rho)),
        "2: [I_n, g] <= I_n+1 and [I_n+1, rho] <= I_n+1": I(n + 1).contains(br(I(n), full))
        and I(n + 1).contains(br(I(n + 1), rho)),
        "3: [I_n+1, g] <= I_n+2 and [I_n+2, rho] <= I_n+2": I(n + 2).contains(br(I(n + 1), full))
        and I(n + 2).contains(br(I(n + 2), rho)),
    }
    top = max(T.top(), n + 3)
    img = br(I(n + 2), full)
    rel["4: [I_n+2, g] <= I_n+j for j >= 3"] = all(I(j).contains(img) for j in range(n + 3, top + 1))
    return rel


def classify_graded(g: ChevalleyAlgebra, T: LoopSubspace) -> GradedClassification:
    """Recover (tau, V, n) from a graded standard subalgebra, or reject it."""
    reasons = []
    n = T.start
    if n is None:
        raise GradedRejection(["T has no nonzero layer"])
    In = T.layer(g, n)
    try:
        rho = affine_normalizer(g, T).layer(g, 0)
    except (NoFamilyNormalizer, IndeterminateError) as exc:
        reasons.append(f"normalizer not of the form rho + tC[t]g + CK + Cd: {exc}")
        rho = _largest_parabolic_normalizing(g, In)
    relations = graded_relations(g, T, n, rho)
    reasons += [f"relation {name} fails" for name, ok in relations.items() if not ok]
    if not oracle.is_subalgebra(g, In):
        reasons.append(f"I_{n} is not a Lie subalgebra")
    elif not rho.contains(In):
        reasons.append(f"I_{n} is not inside rho")
    full = g.full()
    first_full = 1 if (n == 0 and T.has_d) else 2
    for j in range(first_full, max(T.top() - n, first_full)):
        if T.layer(g, n + j) != full:
            reasons.append(f"I_{n + j} must equal g (required for j >= {first_full})")
    if T.tail is None:
        reasons.append("no full tail: I_n+j = g fails for large j")
    if reasons:
        raise GradedRejection(reasons)
    return GradedClassification(
        tau=In, V=T.layer(g, n + 1), n=n, rho=rho, degree_zero=(n == 0 and T.has_d), relations=relations
    )


def _largest_parabolic_normalizing(g: ChevalleyAlgebra, U: HStableSubspace) -> HStableSubspace:
    best = frozenset()
    for i in range(g.rank):
        cand = g.parabolic({i})
        if U.contains(g.bracket_spaces(cand, U)):
            best = best | {i}
    rho = g.parabolic(best)
    return rho if U.contains(g.bracket_spaces(rho, U)) else g.borel()


# -- reporting -------------------------------------------------------------


@dataclass(frozen=True)
class AffineRoot:
    finite: Optional[Root]
    degree: int

    def format(self, g: ChevalleyAlgebra) -> str:
        j = self.degree
        delta = "δ" if abs(j) == 1 else f"{abs(j)}δ"
        if self.finite is None:
            return delta if j > 0 else f"-{delta}"
        if j == 0:
            return g.rs.format_root(self.finite)
        return f"{g.rs.format_root(self.finite)}{'+' if j > 0 else '-'}{delta}"


def affine_roots(g: ChevalleyAlgebra, T: LoopSubspace) -> list[dict]:
    """Per-degree listing as real roots a + j delta and imaginary j delta.

    The imaginary part t^j (x) h is listed only when the layer holds all of
    h; otherwise its Cartan dimension is reported.
    """
    out = []
    for j in range(T.top()):
        layer = T.layer(g, j)
        if layer.is_zero:
            continue
        out.append(
            {
                "degree": j,
                "real": [AffineRoot(a, j).format(g) for a in layer.roots()],
                "imaginary": AffineRoot(None, j).format(g) if len(layer.cartan) == g.rank else None,
                "cartan_dim": len(layer.cartan),
            }
        )
    return out
