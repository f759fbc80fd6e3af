"""Static catalog: algebras, r-matrix families and equivalence witnesses."""

from .algebras import ALGEBRAS, abelian, algebra
from .canonical import (CANONICAL, CYBE_ALWAYS, PRINTED_FORMS, PRINTED_INVALID, SUMMARY_IDS,
                        VARIANTS, PrintedForm)
from .osp12 import OSP12_TEMPLATES, X_FAMILIES
from .raw_cases import RAW_CASES, RESTRICTED_CASES
from .templates import ExcludedPoint, RMatrixTemplate, TemplateError
from .witnesses import REQUIRED, SKIPPED_REQUIRED, WITNESSES, self_witness


def _index(groups):
    out = {}
    for group in groups:
        for t in group:
            if t.id in out:
                raise TemplateError(f"duplicate catalog id {t.id!r}")
            out[t.id] = t
    return out


TEMPLATES = _index([RAW_CASES, RESTRICTED_CASES, CANONICAL, VARIANTS, PRINTED_INVALID,
                    OSP12_TEMPLATES, [p.template for p in PRINTED_FORMS]])


def template_ids(algebra_name: str | None = None) -> list[str]:
    return [k for k, t in TEMPLATES.items() if algebra_name in (None, t.algebra)]


def r_template(id: str) -> RMatrixTemplate:
    try:
        return TEMPLATES[id]
    except KeyError:
        raise KeyError(f"unknown r-matrix template {id!r}") from None


def witness_list(include_self: bool = False):
    """All recorded witnesses; with ``include_self`` also the identity witness of
    every template."""
    out = list(WITNESSES)
    if include_self:
        out += [self_witness(t) for t in TEMPLATES.values()]
    return out


def witness(id: str):
    for w in witness_list():
        if w.id == id:
            return w
    if "->" in id:
        left, right = id.split("->", 1)
        if left == right and left in TEMPLATES:
            return self_witness(TEMPLATES[left])
    raise KeyError(f"unknown witness {id!r}")


__all__ = [
    "ALGEBRAS", "CANONICAL", "CYBE_ALWAYS", "ExcludedPoint", "OSP12_TEMPLATES", "PRINTED_FORMS",
    "PRINTED_INVALID", "PrintedForm", "RAW_CASES", "REQUIRED", "RESTRICTED_CASES",
    "RMatrixTemplate", "SKIPPED_REQUIRED", "SUMMARY_IDS", "TEMPLATES", "TemplateError",
    "VARIANTS", "WITNESSES", "X_FAMILIES", "abelian", "algebra", "r_template", "template_ids",
    "witness", "witness_list",
]
