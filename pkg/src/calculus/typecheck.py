from functools import lru_cache

from src.calculus.formulas import ADD_UNIT, TOP, Conj, Coprod, Impl, Prod
from src.calculus.printer import render
from src.calculus.terms import (
    ArrowTerm,
    ArrowType,
    BAssocL,
    BAssocR,
    Comp,
    Copair,
    CSym,
    DUnitL,
    DUnitR,
    Eps,
    Eta,
    FromInitial,
    Hole,
    HomFun,
    Id,
    Inj1,
    Inj2,
    Pair,
    Proj1,
    Proj2,
    Tens,
    ToTerminal,
    WDiag,
)
from src.core.exceptions import TypeMismatch


@lru_cache(maxsize=65536)
def infer_type(term: ArrowTerm) -> ArrowType:
    """Return the unique type of ``term``.

    Raises TypeMismatch when a composition, pairing or copairing joins
    terms whose formulae disagree syntactically.
    """
    match term:
        case Id(a):
            return ArrowType(a, a)
        case BAssocR(a, b, c):
            return ArrowType(Conj(a, Conj(b, c)), Conj(Conj(a, b), c))
        case BAssocL(a, b, c):
            return ArrowType(Conj(Conj(a, b), c), Conj(a, Conj(b, c)))
        case CSym(a, b):
            return ArrowType(Conj(a, b), Conj(b, a))
        case DUnitR(a):
            return ArrowType(Conj(a, TOP), a)
        case DUnitL(a):
            return ArrowType(a, Conj(a, TOP))
        case WDiag(a):
            return ArrowType(a, Conj(a, a))
        case Eps(a, b):
            return ArrowType(Conj(a, Impl(a, b)), b)
        case Eta(a, b):
            return ArrowType(b, Impl(a, Conj(a, b)))
        case Proj1(a, b):
            return ArrowType(Prod(a, b), a)
        case Proj2(a, b):
            return ArrowType(Prod(a, b), b)
        case Inj1(a, b):
            return ArrowType(a, Coprod(a, b))
        case Inj2(a, b):
            return ArrowType(b, Coprod(a, b))
        case ToTerminal(a):
            return ArrowType(a, ADD_UNIT)
        case FromInitial(a):
            return ArrowType(ADD_UNIT, a)
        case Hole(_, source, target):
            return ArrowType(source, target)
        case Comp(f, g):
            tf, tg = infer_type(f), infer_type(g)
            if tg.target != tf.source:
                raise TypeMismatch(
                    f"cannot compose: {render(tg.target)} ≠ {render(tf.source)}",
                    expected=tf.source,
                    found=tg.target,
                )
            return ArrowType(tg.source, tf.target)
        case Tens(f, g):
            tf, tg = infer_type(f), infer_type(g)
            return ArrowType(Conj(tf.source, tg.source), Conj(tf.target, tg.target))
        case HomFun(a, f):
            tf = infer_type(f)
            return ArrowType(Impl(a, tf.source), Impl(a, tf.target))
        case Pair(f, g):
            tf, tg = infer_type(f), infer_type(g)
            if tf.source != tg.source:
                raise TypeMismatch(
                    f"cannot pair: {render(tf.source)} ≠ {render(tg.source)}",
                    expected=tf.source,
                    found=tg.source,
                )
            return ArrowType(tf.source, Prod(tf.target, tg.target))
        case Copair(f, g):
            tf, tg = infer_type(f), infer_type(g)
            if tf.target != tg.target:
                raise TypeMismatch(
                    f"cannot copair: {render(tf.target)} ≠ {render(tg.target)}",
                    expected=tf.target,
                    found=tg.target,
                )
            return ArrowType(Coprod(tf.source, tg.source), tf.target)
    raise TypeError(f"not an arrow term: {term!r}")


def well_typed(term: ArrowTerm) -> bool:
    try:
        infer_type(term)
    except TypeMismatch:
        return False
    return True
