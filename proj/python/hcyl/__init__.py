"""Python view of the hcyl library. Results are plain dicts and lists."""

import json

try:
    from . import _hcyl
except ImportError:  # in-tree build: the extension sits next to the package
    import _hcyl

Error = _hcyl.Error
dim_lie = _hcyl.dim_lie
lyndon_basis = _hcyl.lyndon_basis
tree_dimension = _hcyl.tree_dimension
suites = _hcyl.suites


def _decoded(fn):
    def wrapper(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


magnus = _decoded(_hcyl.magnus)
lcs_weight = _decoded(_hcyl.lcs_weight)
dn_basis = _decoded(_hcyl.dn_basis)
psi = _decoded(_hcyl.psi)
star = _decoded(_hcyl.star)
bracket = _decoded(_hcyl.bracket)
johnson = _decoded(_hcyl.johnson)
realize = _decoded(_hcyl.realize)
run_suite = _decoded(_hcyl.run_suite)


def massey(index, word, rank, cap=8):
    from fractions import Fraction

    return Fraction(_hcyl.massey(list(index), word, rank, cap))


__all__ = [
    "Error", "bracket", "dim_lie", "dn_basis", "johnson", "lcs_weight", "lyndon_basis",
    "magnus", "massey", "psi", "realize", "run_suite", "star", "suites", "tree_dimension",
]
