"""Arithmetic Schubert calculus on the even orthogonal flag variety.

An arithmetic class is a pair (Schubert coefficients, invariant form) under
the splitting  CH^(X) = CH(X) + A~(X_R). Bott-Chern forms are graded by the
arithmetic Chow degree they live in: c~_k has form type (k-1, k-1), i.e.
2(k-1) generators. The secondary forms of the filtration E_1 < ... < E_n in
degrees 3 and up are external inputs supplied through a
:class:`BottChernPlugin`.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Mapping

from . import forms
from .forms import FormElement, evaluate_at_x_forms, volume_factor
from .ortho import (
    DBasisIndex,
    _schubert_vector_basis,
    d_basis,
    expand_in_d_basis,
    ideal_decompose,
    ortho_schubert,
    route_ideal_index,
    structure_constants,
)
from .poly import Polynomial
from .weyl import SignedPermutation


class MissingBottChernInput(LookupError):
    def __init__(self, component: str, n: int):
        super().__init__(f"requires Bott-Chern input: {component} for n={n} is not in the plugin")
        self.component = component
        self.n = n


class PluginError(ValueError):
    pass


def harmonic(r: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, r + 1)), Fraction(0))


def dim_flag(n: int) -> int:
    """Complex dimension n(n-1) of SO(2n)/B."""
    return n * (n - 1)


def _vanishes(k: int, n: int) -> bool:
    """A class in arithmetic degree k with form type (k-1, k-1) above the top is zero."""
    return k - 1 > dim_flag(n)


# labels: ctilde_pair_<2i> = c~_{2i}(E, E*), ctilde_dual_<n> = c~_n(E*),
# ctilde_E_<a> = c~_a(E) for the filtration E
_LABEL_KINDS = ("ctilde_pair_", "ctilde_dual_", "ctilde_E_")


def _label_degree(label: str) -> int:
    for kind in _LABEL_KINDS:
        if label.startswith(kind):
            try:
                return int(label[len(kind):])
            except ValueError:
                break
    raise PluginError(f"unknown plugin component {label!r}")


@dataclass(frozen=True)
class BottChernPlugin:
    n: int
    components: Mapping[str, FormElement] = field(default_factory=dict)

    def __post_init__(self):
        for label, form in self.components.items():
            k = _label_degree(label)
            if form.n != self.n:
                raise PluginError(f"{label}: form lives on n={form.n}, expected {self.n}")
            if not form.is_homogeneous(2 * (k - 1)):
                raise PluginError(f"{label}: expected {2 * (k - 1)} generators per term")

    @classmethod
    def empty(cls, n: int) -> "BottChernPlugin":
        return cls(n, {})

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "BottChernPlugin":
        n = int(obj["n"])
        comps = {label: FormElement.from_json_obj(f) for label, f in obj.get("components", {}).items()}
        return cls(n, comps)

    @classmethod
    def load(cls, path: str | Path) -> "BottChernPlugin":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json_obj(json.load(fh))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "components": {k: v.to_json_obj() for k, v in sorted(self.components.items())}}

    def get(self, label: str) -> FormElement | None:
        return self.components.get(label)


def _plugin(n: int, plugin: BottChernPlugin | None) -> BottChernPlugin:
    if plugin is None:
        return BottChernPlugin.empty(n)
    if plugin.n != n:
        raise PluginError(f"plugin is for n={plugin.n}, expected {n}")
    return plugin


# ---------------------------------------------------------------------------
# Bott-Chern forms


def ctilde_og(n: int) -> dict[int, FormElement]:
    """Components of c~(E_OG) keyed by arithmetic degree k+1 (form type (k, k))."""
    out = {}
    for k in range(1, n):
        out[k + 1] = forms.power_sum_form(k, n).scale((-1) ** k * harmonic(k))
    return out


def ctilde_E(a: int, n: int, plugin: BottChernPlugin | None = None) -> FormElement:
    """c~_a of the filtration E_1 < ... < E_n."""
    if a <= 1 or _vanishes(a, n):
        return FormElement.zero(n)
    if a == 2:
        return -sum((forms.omega_lower(i, j, n) for i in range(1, n + 1) for j in range(i + 1, n + 1)),
                    FormElement.zero(n))
    comp = _plugin(n, plugin).get(f"ctilde_E_{a}")
    if comp is None:
        raise MissingBottChernInput(f"c~_{a}(E)", n)
    return comp


def ctilde_E_dual(a: int, n: int, plugin: BottChernPlugin | None = None) -> FormElement:
    """c~_a(E*) = (-1)^a c~_a(E), unless the plugin supplies it directly."""
    plugin = _plugin(n, plugin)
    comp = plugin.get(f"ctilde_dual_{a}")
    if comp is not None:
        return comp
    try:
        c = ctilde_E(a, n, plugin)
    except MissingBottChernInput as exc:
        raise MissingBottChernInput(f"c~_{a}(E*)", n) from exc
    return -c if a % 2 else c


def ddc_ctilde_E(a: int, n: int) -> FormElement:
    """dd^c c~_a(E) from the anomaly identity prod(1 - x_i) - c(E_n)."""
    prod = _elementary_in_x_forms(a, n).scale((-1) ** a)
    return prod - forms.chern_form("E", n, a, n)


@lru_cache(maxsize=None)
def _elementary_in_x_forms(k: int, n: int) -> FormElement:
    from .symfun import elementary

    if k > n:
        return FormElement.zero(n)
    return evaluate_at_x_forms(elementary(k, n), n)


def _assemble_pair(k: int, n: int, plugin: BottChernPlugin) -> FormElement:
    """Degree-k part of c~(E_OG) + c~(E) c(E*) + c~(E*) c(E) + dd^c c~(E) ^ c~(E*)."""
    total = ctilde_og(n).get(k, FormElement.zero(n))
    for a in range(2, k + 1):
        b = k - a
        total = total + ctilde_E(a, n, plugin) * forms.chern_form("E*", n, b, n)
        total = total + ctilde_E_dual(a, n, plugin) * forms.chern_form("E", n, b, n)
    for a in range(1, k - 1):
        dd = ddc_ctilde_E(a, n)
        if dd:
            total = total + dd * ctilde_E_dual(k - a, n, plugin)
    return total


def ctilde_pair_component(k: int, n: int, plugin: BottChernPlugin | None = None) -> FormElement:
    """c~_k(E, E*), of form type (k-1, k-1)."""
    plugin = _plugin(n, plugin)
    if k < 2 or _vanishes(k, n):
        return FormElement.zero(n)
    supplied = plugin.get(f"ctilde_pair_{k}")
    if supplied is not None:
        return supplied
    try:
        return _assemble_pair(k, n, plugin)
    except MissingBottChernInput as exc:
        raise MissingBottChernInput(f"c~_{k}(E,E*)", n) from exc


def ctilde_pair(n: int, plugin: BottChernPlugin | None = None) -> dict[int, FormElement]:
    """All even components c~_{2i}(E, E*), 1 <= i <= n, keyed by 2i."""
    return {2 * i: ctilde_pair_component(2 * i, n, plugin) for i in range(1, n + 1)}


def ctilde_pair_quadratic(n: int) -> FormElement:
    """-2 sum Omega_{ij} - 2 sum Omega^{pq}."""
    out = FormElement.zero(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out - forms.omega_lower(i, j, n).scale(2) - forms.omega_upper(i, j, n).scale(2)
    return out


def top_relation(n: int, plugin: BottChernPlugin | None = None) -> FormElement:
    """Form representative of x^_1 ... x^_n."""
    plugin = _plugin(n, plugin)
    head = forms.chern_form("E*", n, n - 1, n).scale(harmonic(n - 1) / 2)
    return head + ctilde_E_dual(n, n, plugin)


# ---------------------------------------------------------------------------
# arithmetic classes


def _x_form_poly(poly: Polynomial, n: int) -> FormElement:
    return evaluate_at_x_forms(poly, n)


@dataclass(frozen=True)
class ArithClass:
    """sum a_w D^_w + a(eta); ``ddc`` caches dd^c eta for products."""

    n: int
    schubert: Mapping[SignedPermutation, Fraction]
    form: FormElement
    ddc: FormElement

    @classmethod
    def schubert_class(cls, w: SignedPermutation) -> "ArithClass":
        n = w.n
        return cls(n, {w: Fraction(1)}, FormElement.zero(n), FormElement.zero(n))

    @classmethod
    def from_form(cls, eta: FormElement, ddc: FormElement | None = None) -> "ArithClass":
        """a(eta); without ``ddc`` the form is taken to be closed."""
        n = eta.n
        return cls(n, {}, eta, FormElement.zero(n) if ddc is None else ddc)

    @classmethod
    def one(cls, n: int) -> "ArithClass":
        return cls.schubert_class(SignedPermutation.identity(n))

    def chern_image(self) -> FormElement:
        """The curvature form omega(self) = sum a_w D_w(x-forms) + dd^c eta."""
        total = self.ddc
        for w, c in self.schubert.items():
            total = total + _x_form_poly(ortho_schubert(w), self.n).scale(c)
        return total

    def __add__(self, other: "ArithClass") -> "ArithClass":
        sch = dict(self.schubert)
        for w, c in other.schubert.items():
            sch[w] = sch.get(w, 0) + c
        return ArithClass(self.n, {w: c for w, c in sch.items() if c},
                          self.form + other.form, self.ddc + other.ddc)

    def scale(self, c) -> "ArithClass":
        c = Fraction(c)
        return ArithClass(self.n, {w: c * v for w, v in self.schubert.items() if c * v},
                          self.form.scale(c), self.ddc.scale(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ArithClass):
            return NotImplemented
        return (self.n == other.n and dict(self.schubert) == dict(other.schubert)
                and self.form == other.form)

    def to_json_obj(self) -> dict:
        sch = sorted(self.schubert.items(), key=lambda kv: (kv[0].length(), kv[0].entries))
        return {
            "n": self.n,
            "schubert": [{"w": str(w), "coef": f"{c.numerator}/{c.denominator}"} for w, c in sch],
            "form": self.form.to_json_obj(),
        }


def _schubert_coordinates(exp_schubert: Mapping[DBasisIndex, Fraction], n: int, d: int) -> dict:
    if not exp_schubert:
        return {}
    coords = _schubert_vector_basis(n, d).express(exp_schubert)
    return {w: Fraction(c) for w, c in coords.items() if c}


def ideal_form(h: Polynomial, n: int, plugin: BottChernPlugin | None = None) -> FormElement:
    """h(x^) for h in J_n, pushed to forms through a decomposition of h."""
    plugin = _plugin(n, plugin)
    dec = ideal_decompose(h, n)
    return _form_from_decomposition(dec.f, dec.g, n, plugin)


def _form_from_decomposition(fs, g: Polynomial, n: int, plugin: BottChernPlugin) -> FormElement:
    total = FormElement.zero(n)
    for i, fi in enumerate(fs, start=1):
        if not fi:
            continue
        total = total + ctilde_pair_component(2 * i, n, plugin).scale((-1) ** i) * _x_form_poly(fi, n)
    if g:
        total = total + top_relation(n, plugin) * _x_form_poly(g, n)
    return total


def form_from_decomposition(fs, g: Polynomial, n: int, plugin: BottChernPlugin | None = None) -> FormElement:
    """sum (-1)^i c~_{2i}(E,E*) f_i(x) + (top relation) g(x) for a caller-chosen decomposition."""
    return _form_from_decomposition(fs, g, n, _plugin(n, plugin))


def arith_polynomial(h: Polynomial, n: int, plugin: BottChernPlugin | None = None) -> ArithClass:
    """h(x^_1, ..., x^_n) for a homogeneous polynomial h."""
    if not h.is_homogeneous():
        raise ValueError("arith_polynomial needs a homogeneous polynomial")
    if not h:
        return ArithClass(n, {}, FormElement.zero(n), FormElement.zero(n))
    d = h.degree()
    exp = expand_in_d_basis(h, n)
    sch = _schubert_coordinates(exp.schubert_part(), n, d)
    residual = h
    for w, c in sch.items():
        residual = residual - ortho_schubert(w).scale(c)
    form = ideal_form(residual, n, plugin) if residual else FormElement.zero(n)
    ddc = _x_form_poly(residual, n) if residual else FormElement.zero(n)
    return ArithClass(n, sch, form, ddc)


def arith_monomial(exponents, n: int | None = None, plugin: BottChernPlugin | None = None) -> ArithClass:
    exponents = tuple(int(k) for k in exponents)
    n = len(exponents) if n is None else n
    if len(exponents) != n or any(k < 0 for k in exponents):
        raise ValueError(f"need {n} nonnegative exponents")
    return arith_polynomial(Polynomial.monomial(exponents), n, plugin)


class DegreeMismatch(ValueError):
    pass


def arith_degree(exponents, n: int | None = None, plugin: BottChernPlugin | None = None) -> Fraction:
    """deg^(x^_1^k_1 ... x^_n^k_n) for sum k_i = n^2 - n + 1."""
    exponents = tuple(int(k) for k in exponents)
    n = len(exponents) if n is None else n
    if sum(exponents) != dim_flag(n) + 1:
        raise DegreeMismatch(f"exponents sum to {sum(exponents)}, need {dim_flag(n) + 1}")
    cls = arith_monomial(exponents, n, plugin)
    return degree_of_form(cls.form)


def top_scalar(form: FormElement) -> Fraction:
    """r with form = r * Omega; raises unless the form is a multiple of Omega."""
    if not form.is_multiple_of_top():
        raise AssertionError("top-degree form is not a multiple of Omega")
    return form.top_coefficient()


def degree_of_form(form: FormElement) -> Fraction:
    r = top_scalar(form)
    return Fraction(r, 2) * volume_factor(form.n)


def dtilde_convert(lam, pi, n: int, plugin: BottChernPlugin | None = None) -> FormElement:
    """The form of the class D~_{lambda,pi} for lambda in G_n outside F_{n-1}."""
    from .ortho import _as_partition, _as_perm

    idx = DBasisIndex(_as_partition(lam), _as_perm(pi, n))
    plugin = _plugin(n, plugin)
    i, factor, smaller = route_ideal_index(idx, n)
    base = _x_form_poly(d_basis(smaller.lam, smaller.pi, n), n)
    if i == n:
        return (base * top_relation(n, plugin)).scale(factor)
    return (base * ctilde_pair_component(2 * i, n, plugin)).scale(factor * (-1) ** i)


def chow_product(a: ArithClass, b: ArithClass, plugin: BottChernPlugin | None = None) -> ArithClass:
    """Product in the arithmetic Chow ring under the Schubert splitting."""
    if a.n != b.n:
        raise ValueError("classes on different flag varieties")
    n = a.n
    plugin = _plugin(n, plugin)
    sch: dict[SignedPermutation, Fraction] = {}
    form = FormElement.zero(n)
    for u, cu in a.schubert.items():
        for v, cv in b.schubert.items():
            sc = structure_constants(u, v)
            for w, d in sc.schubert.items():
                sch[w] = sch.get(w, 0) + cu * cv * d
            for idx, d in sc.ideal.items():
                form = form + dtilde_convert(idx.lam, idx.pi, n, plugin).scale(cu * cv * d)
    for u, cu in a.schubert.items():
        if b.form:
            form = form + (_x_form_poly(ortho_schubert(u), n) * b.form).scale(cu)
    for v, cv in b.schubert.items():
        if a.form:
            form = form + (_x_form_poly(ortho_schubert(v), n) * a.form).scale(cv)
    if a.form and b.form:
        form = form + a.ddc * b.form
    sch = {w: c for w, c in sch.items() if c}
    image = a.chern_image() * b.chern_image()
    ddc = image
    for w, c in sch.items():
        ddc = ddc - _x_form_poly(ortho_schubert(w), n).scale(c)
    return ArithClass(n, sch, form, ddc)


def arithmetic_schubert_class(w: SignedPermutation) -> ArithClass:
    return ArithClass.schubert_class(w)
