"""Finite-model semantics: valuation, validity, bounded model search, truth tables.

This is the oracle side of the engine: consistency and saliency claims about
belief sets are checked against exhaustively enumerated small interpretations.
Occurrence indexes and predicate sorts never affect truth: two atoms with the
same predicate symbol, sort, and arguments denote the same thing regardless of
their extralogical annotations.

``find_model`` enumerates interpretations of size 1..maxDomain up to
constant-naming symmetry (restricted-growth assignment of constants onto
individuals).  For the controller fragment (unary predicates; ground formulas
and single-variable universals) each individual's behaviour is fully described
by its profile, the set of predicates it satisfies, which keeps the search
exact and fast; other inputs fall back to raw extension enumeration under a
work cap.  Absence of a model at the bound is not a consistency verdict.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .errors import BoundTooLarge, NotClosed, TooManyLetters, UnknownSymbol
from .syntax import (
    Atom,
    Bottom,
    Const,
    Forall,
    Formula,
    Imp,
    Not,
    Var,
    expand_sugar,
    free_variables,
    identity_key,
    strip_occurrences,
    subformulas,
)

DOMAIN_CAP = 6
PREDICATE_CAP = 12
FALLBACK_WORK_CAP = 20  # cap on sum of n**arity across predicates
LETTER_CAP = 20

PredKey = tuple[str, Optional[str]]  # (symbol, sort)


@dataclass
class Interpretation:
    domain: tuple[int, ...]
    const_map: dict[str, int]
    pred_map: dict[PredKey, frozenset[tuple[int, ...]]]
    arities: dict[PredKey, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.domain:
            raise ValueError("domain must be nonempty")
        for key, ext in self.pred_map.items():
            for tup in ext:
                self.arities.setdefault(key, len(tup))
        # 0-extension predicates keep any arity already declared


def _collect_symbols(formulas) -> tuple[list[str], dict[PredKey, int]]:
    consts: set[str] = set()
    preds: dict[PredKey, int] = {}
    for f in formulas:
        for g in subformulas(f):
            if isinstance(g, Atom):
                preds.setdefault((g.pred, g.sort), len(g.args))
                consts.update(t.name for t in g.args if isinstance(t, Const))
    return sorted(consts), preds


def evaluate_closed(interp: Interpretation, f: Formula) -> bool:
    if free_variables(f):
        raise NotClosed("formula has free variables")
    return _eval(interp, identity_key(f), {})


def _eval(interp: Interpretation, f: Formula, env: dict[str, int]) -> bool:
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Atom):
        key = (f.pred, f.sort)
        if key not in interp.pred_map:
            raise UnknownSymbol(f"predicate {f.pred}")
        args = []
        for t in f.args:
            if isinstance(t, Var):
                args.append(env[t.name])
            else:
                if t.name not in interp.const_map:
                    raise UnknownSymbol(f"constant {t.name}")
                args.append(interp.const_map[t.name])
        return tuple(args) in interp.pred_map[key]
    if isinstance(f, Not):
        return not _eval(interp, f.body, env)
    if isinstance(f, Imp):
        return (not _eval(interp, f.left, env)) or _eval(interp, f.right, env)
    if isinstance(f, Forall):
        for d in interp.domain:
            if not _eval(interp, f.body, {**env, f.var.name: d}):
                return False
        return True
    raise TypeError(f"not a core formula: {f!r}")


def valid_in(interp: Interpretation, f: Formula) -> bool:
    """True iff every assignment of individuals to free variables satisfies f."""
    core = identity_key(f)
    fv = sorted(free_variables(core))
    for values in itertools.product(interp.domain, repeat=len(fv)):
        if not _eval(interp, core, dict(zip(fv, values))):
            return False
    return True


def is_model(interp: Interpretation, formulas) -> bool:
    return all(valid_in(interp, f) for f in formulas)


def enumerate_interpretations(constants: list[str], predicates: dict[PredKey, int],
                              max_domain: int) -> Iterator[Interpretation]:
    """Every interpretation over the given symbols with |D| <= max_domain."""
    for n in range(1, max_domain + 1):
        domain = tuple(range(n))
        keys = sorted(predicates)
        tuple_spaces = [list(itertools.product(domain, repeat=predicates[k])) for k in keys]
        for const_vals in itertools.product(domain, repeat=len(constants)):
            cmap = dict(zip(constants, const_vals))
            ext_choices = [
                [frozenset(s) for r in range(len(space) + 1)
                 for s in itertools.combinations(space, r)]
                for space in tuple_spaces
            ]
            for exts in itertools.product(*ext_choices):
                yield Interpretation(domain, dict(cmap), dict(zip(keys, exts)),
                                     dict(predicates))


# --- model search -----------------------------------------------------------

def _compile_fragment(formulas, preds: dict[PredKey, int]):
    """Split into universal profile constraints and ground constraints.

    Returns (universals, grounds) or None when some formula falls outside the
    unary fragment.  A universal is a function profile -> bool over the bitmask
    of satisfied predicates; a ground constraint is (constants, fn) where fn
    maps a profile environment {const: profile} -> bool.
    """
    if any(arity != 1 for arity in preds.values()):
        return None
    keys = sorted(preds)
    bit = {k: i for i, k in enumerate(keys)}

    def compile_body(f: Formula, var: Optional[str]):
        # returns fn(profile_of, env) where profile_of: const name -> mask and
        # env maps the universal variable to a mask
        if isinstance(f, Bottom):
            return lambda pf, m: False
        if isinstance(f, Atom):
            b = bit[(f.pred, f.sort)]
            t = f.args[0]
            if isinstance(t, Var):
                if t.name != var:
                    return None
                return lambda pf, m, b=b: bool(m >> b & 1)
            return lambda pf, m, b=b, c=t.name: bool(pf[c] >> b & 1)
        if isinstance(f, Not):
            inner = compile_body(f.body, var)
            return None if inner is None else (lambda pf, m, i=inner: not i(pf, m))
        if isinstance(f, Imp):
            l = compile_body(f.left, var)
            r = compile_body(f.right, var)
            if l is None or r is None:
                return None
            return lambda pf, m, l=l, r=r: (not l(pf, m)) or r(pf, m)
        return None  # nested quantifier: outside the fragment

    universals = []
    grounds = []
    for f in formulas:
        core = identity_key(f)
        if isinstance(core, Forall):
            if free_variables(core):
                return None
            fn = compile_body(core.body, core.var.name)
            if fn is None:
                return None
            if any(isinstance(g, Const) for s in subformulas(core.body)
                   if isinstance(s, Atom) for g in s.args):
                # mixed constant/variable universals: keep exact via grounds later
                return None
            universals.append(lambda m, fn=fn: fn({}, m))
        else:
            if free_variables(core):
                return None
            fn = compile_body(core, None)
            if fn is None:
                return None
            used = sorted({t.name for s in subformulas(core) if isinstance(s, Atom)
                           for t in s.args if isinstance(t, Const)})
            grounds.append((used, lambda pf, fn=fn: fn(pf, 0)))
    return keys, universals, grounds


def _fragment_search(formulas, constants, preds, max_domain) -> Optional[Interpretation]:
    compiled = _compile_fragment(formulas, preds)
    if compiled is None:
        return None  # caller falls back
    keys, universals, grounds = compiled
    allowed = [m for m in range(1 << len(keys)) if all(u(m) for u in universals)]
    if not allowed:
        raise _NoModel()

    def ground_ok(pf: dict[str, int]) -> bool:
        return all(fn(pf) for used, fn in grounds
                   if all(c in pf for c in used))

    for n in range(1, max_domain + 1):
        for assign in _canonical_assignments(len(constants), n):
            used = (max(assign) + 1) if assign else 0
            # profiles per used individual; constants partition onto them
            groups: list[list[str]] = [[] for _ in range(used)]
            for c, ind in zip(constants, assign):
                groups[ind].append(c)

            def backtrack(i: int, pf: dict[str, int]) -> Optional[list[int]]:
                if i == used:
                    return []
                for m in allowed:
                    trial = dict(pf)
                    for c in groups[i]:
                        trial[c] = m
                    if not ground_ok(trial):
                        continue
                    rest = backtrack(i + 1, trial)
                    if rest is not None:
                        return [m] + rest
                return None

            profiles = backtrack(0, {})
            if profiles is None:
                continue
            profiles += [allowed[0]] * (n - used)
            domain = tuple(range(n))
            pred_map = {
                k: frozenset((d,) for d in domain if profiles[d] >> i & 1)
                for i, k in enumerate(keys)
            }
            cmap = dict(zip(constants, assign))
            interp = Interpretation(domain, cmap, pred_map, dict(preds))
            if grounds and not all(fn({c: profiles[cmap[c]] for c in constants})
                                   for used_, fn in grounds):
                continue
            return interp
    raise _NoModel()


class _NoModel(Exception):
    pass


def _canonical_assignments(n_consts: int, n: int) -> Iterator[tuple[int, ...]]:
    """Restricted-growth assignments of constants onto individuals 0..n-1."""
    if n_consts == 0:
        yield ()
        return

    def rec(prefix: list[int], peak: int):
        if len(prefix) == n_consts:
            yield tuple(prefix)
            return
        limit = min(peak + 1, n - 1)
        for v in range(limit + 1):
            yield from rec(prefix + [v], max(peak, v))

    yield from rec([], -1)


def find_model(formulas, max_domain: int) -> Optional[Interpretation]:
    """First model with |D| <= max_domain in canonical order, or None."""
    if max_domain > DOMAIN_CAP:
        raise BoundTooLarge(f"maxDomain {max_domain} exceeds cap {DOMAIN_CAP}")
    formulas = list(formulas)
    constants, preds = _collect_symbols(formulas)
    if len(preds) > PREDICATE_CAP:
        raise BoundTooLarge(f"{len(preds)} predicates exceed cap {PREDICATE_CAP}")
    if not preds:
        # degenerate: only falsum combinations
        interp = Interpretation((0,), {c: 0 for c in constants}, {})
        return interp if is_model(interp, formulas) else None
    try:
        found = _fragment_search(formulas, constants, preds, max_domain)
        if found is not None:
            return found
    except _NoModel:
        return None
    # fallback: raw extension enumeration
    for n in range(1, max_domain + 1):
        if sum(n ** a for a in preds.values()) > FALLBACK_WORK_CAP:
            raise BoundTooLarge("extension enumeration too large for these symbols")
    for interp in enumerate_interpretations(constants, preds, max_domain):
        if is_model(interp, formulas):
            return interp
    return None


# --- truth tables -----------------------------------------------------------

def is_tautology(f: Formula) -> bool:
    """Truth-table f treating maximal atoms/quantified subformulas as letters."""
    core = identity_key(f)
    letters: dict[Formula, int] = {}

    def skeleton(g: Formula) -> Callable[[int], bool]:
        if isinstance(g, Bottom):
            return lambda bits: False
        if isinstance(g, Not):
            inner = skeleton(g.body)
            return lambda bits: not inner(bits)
        if isinstance(g, Imp):
            l, r = skeleton(g.left), skeleton(g.right)
            return lambda bits: (not l(bits)) or r(bits)
        # Atom or Forall: a propositional letter
        idx = letters.setdefault(g, len(letters))
        return lambda bits: bool(bits >> idx & 1)

    fn = skeleton(core)
    if len(letters) > LETTER_CAP:
        raise TooManyLetters(f"{len(letters)} letters exceed cap {LETTER_CAP}")
    return all(fn(bits) for bits in range(1 << len(letters)))
